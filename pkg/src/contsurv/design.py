"""Per-variable basis bindings and design-matrix construction.

A :class:`Design` maps dataset variables (exposure and confounders, by name)
to resolved :class:`~contsurv.basis.BasisSpec` transforms and concatenates
the per-variable basis columns into one regression matrix. Because every
variable is expanded independently, the linear predictor is additive across
variables — the counterfactual engine exploits this to evaluate the exposure
contribution once per grid value instead of once per subject.
"""

from dataclasses import dataclass

import numpy as np

from .basis import BasisSpec, evaluate, resolve_knots
from .errors import ArityMismatch, MissingColumn


@dataclass(frozen=True)
class Design:
    """Resolved design: variables in dataset order with one spec each."""

    variables: tuple
    specs: tuple
    column_names: tuple
    column_slices: tuple  # one slice of design columns per variable

    @property
    def n_columns(self):
        return len(self.column_names)

    def describe(self):
        """Human-readable model label, e.g. ``z=bspline(df=3), age=linear``."""
        parts = []
        for name, spec in zip(self.variables, self.specs):
            if spec.kind in ("bspline", "natural_spline"):
                parts.append(f"{name}={spec.kind}(df={spec.effective_df})")
            elif spec.kind == "polynomial":
                parts.append(f"{name}=polynomial(degree={spec.effective_degree})")
            elif spec.kind == "categorical":
                parts.append(f"{name}=categorical({len(spec.cutpoints) - 1} levels)")
            else:
                parts.append(f"{name}=linear")
        return ", ".join(parts) if parts else "null model"


def resolve_design(dataset, bindings=None):
    """Resolve bindings against the observed data.

    ``bindings`` maps variable names to :class:`BasisSpec`; ``None`` binds
    every dataset variable to a linear term, an empty mapping yields the null
    (no-covariate) model. Spline knots are resolved on the observed column
    values here, so refitting on a resample re-resolves them.
    """
    if bindings is None:
        bindings = {name: BasisSpec() for name in dataset.variable_names}
    names = []
    specs = []
    for name in dataset.variable_names:  # keep dataset variable order
        if name in bindings:
            names.append(name)
            specs.append(bindings[name])
    unknown = set(bindings) - set(dataset.variable_names)
    if unknown:
        raise MissingColumn(sorted(unknown)[0])

    matrix = dataset.variable_matrix
    resolved = []
    column_names = []
    slices = []
    start = 0
    for name, spec in zip(names, specs):
        col = matrix[:, dataset.variable_names.index(name)]
        spec = resolve_knots(col, spec)
        bm = evaluate(col, spec)
        resolved.append(spec)
        column_names.extend(name + suffix for suffix in bm.column_names)
        slices.append(slice(start, start + bm.df))
        start += bm.df
    return Design(tuple(names), tuple(resolved), tuple(column_names), tuple(slices))


def design_matrix(design, values):
    """Expand raw variable values (n, n_variables) into design columns (n, p)."""
    values = np.atleast_2d(np.asarray(values, dtype=float))
    if values.shape[1] != len(design.variables):
        raise ArityMismatch(
            f"expected {len(design.variables)} variables, got {values.shape[1]}"
        )
    if design.n_columns == 0:
        return np.zeros((values.shape[0], 0))
    blocks = [evaluate(values[:, j], spec).columns for j, spec in enumerate(design.specs)]
    return np.hstack(blocks)


def variable_columns(design, dataset):
    """Raw dataset columns for the design's variables, in design order."""
    idx = [dataset.variable_names.index(v) for v in design.variables]
    return dataset.variable_matrix[:, idx]
