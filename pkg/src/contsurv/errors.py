"""Exception types raised across the package.

Everything derives from :class:`ContsurvError` so callers (and the bootstrap
engine, which treats model failures in a replicate as exclude-and-count
events) can catch package errors without swallowing genuine bugs.
"""


class ContsurvError(Exception):
    """Base class for all errors raised by contsurv."""


# --- data ingestion / validation ---

class MissingColumn(ContsurvError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"column {name!r} not found in header")


class ParseError(ContsurvError):
    def __init__(self, row, column, message):
        self.row = row
        self.column = column
        super().__init__(f"row {row}, column {column!r}: {message}")


class EmptyDataset(ContsurvError):
    pass


# --- basis construction ---

class TooFewDistinctValues(ContsurvError):
    pass


class UnresolvedSpec(ContsurvError):
    pass


class ValueOutsideAllIntervals(ContsurvError):
    def __init__(self, row, value):
        self.row = row
        self.value = value
        super().__init__(f"row {row}: value {value!r} outside every interval")


# --- model fitting / prediction ---

class NoEvents(ContsurvError):
    pass


class SingularInformation(ContsurvError):
    pass


class MonotoneLikelihood(ContsurvError):
    pass


class NotConverged(ContsurvError):
    def __init__(self, iterations):
        self.iterations = iterations
        super().__init__(f"no convergence after {iterations} iterations")


class ArityMismatch(ContsurvError):
    pass


class EmptyStratum(ContsurvError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"stratum {label!r} has no usable observations (or no events)")


# --- surfaces and estimands ---

class GridEmpty(ContsurvError):
    pass


class MissingKMReference(ContsurvError):
    pass


class MissingTauReference(ContsurvError):
    pass


class LambdaBeyondGrid(ContsurvError):
    pass


# --- resampling ---

class TooManyFailures(ContsurvError):
    def __init__(self, n_failed, n_boot):
        self.n_failed = n_failed
        self.n_boot = n_boot
        super().__init__(f"{n_failed} of {n_boot} bootstrap replicates failed to refit")


class PipelineError(ContsurvError):
    def __init__(self, replicate, cause):
        self.replicate = replicate
        self.cause = cause
        super().__init__(f"pipeline raised in replicate {replicate}: {cause!r}")


# --- diagnostics ---

class TooFewPoints(ContsurvError):
    pass


# --- rendering ---

class NonMonotoneEffect(ContsurvError):
    pass


class InconsistentGrid(ContsurvError):
    pass


class ShapeInconsistentAcrossTime(ContsurvError):
    def __init__(self):
        super().__init__(
            "the exposure-response shape changes over time; a faceted area plot "
            "cannot represent this surface — use a contour or heatmap instead"
        )
