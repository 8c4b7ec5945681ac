"""Estimands derived from a counterfactual survival surface.

Curve-valued summaries over the exposure grid (landmark survival, survival
time quantiles, restricted mean survival time) and contrast surfaces against
either a fixed reference exposure or the observed Kaplan-Meier curve.

Quantiles are never extrapolated past the time grid: a level the curve does
not reach is reported as undefined rather than guessed. Ratio contrasts with
a zero denominator are likewise flagged undefined so renderers can mask them.
"""

from dataclasses import dataclass

import numpy as np

from .errors import LambdaBeyondGrid, MissingKMReference, MissingTauReference


@dataclass(frozen=True)
class ContrastSpec:
    """Difference or ratio against a fixed exposure ``tau`` or the KM curve."""

    kind: str  # "difference" | "ratio"
    reference: object  # float tau, or the string "km"

    def __post_init__(self):
        if self.kind not in ("difference", "ratio"):
            raise ValueError(f"unknown contrast kind {self.kind!r}")
        if self.reference != "km":
            object.__setattr__(self, "reference", float(self.reference))

    @property
    def label(self):
        ref = "km" if self.reference == "km" else f"tau={self.reference:g}"
        return f"{'delta' if self.kind == 'difference' else 'phi'}({ref})"


@dataclass(frozen=True)
class EstimandValue:
    value: float
    t: float | None = None
    z: float | None = None
    defined: bool = True


@dataclass(frozen=True)
class Curve:
    """A plottable 1-d summary: y over x with an optional undefined mask.

    ``level`` carries the parameter the curve belongs to (a landmark time, a
    quantile level, an RMST horizon or a fixed exposure) for color mapping;
    ``step`` marks curves that must be drawn with step geometry (anything
    indexed by time).
    """

    x: np.ndarray
    y: np.ndarray
    defined: np.ndarray | None = None
    label: str = ""
    level: float | None = None
    lower: np.ndarray | None = None
    upper: np.ndarray | None = None
    step: bool = False

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        defined = (
            np.ones(x.size, dtype=bool)
            if self.defined is None
            else np.asarray(self.defined, dtype=bool)
        )
        if x.shape != y.shape or defined.shape != x.shape:
            raise ValueError("x, y and defined must share one shape")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "defined", defined)


@dataclass(frozen=True)
class ContrastSurface:
    """Elementwise contrast on the same (z, t) grid as the source surface."""

    z_grid: np.ndarray
    t_grid: np.ndarray
    values: np.ndarray
    defined: np.ndarray
    kind: str
    reference_label: str
    extrapolated: np.ndarray | None = None

    @property
    def shape(self):
        return self.values.shape


def _column_index(t_grid, t_star):
    """Index of the step segment containing t_star (right-continuous)."""
    return int(np.searchsorted(t_grid, t_star, side="right") - 1)


def landmark(surface, t_star):
    """Counterfactual survival at a fixed time, as a function of exposure."""
    if t_star < 0:
        raise ValueError("landmark time must be >= 0")
    j = _column_index(surface.t_grid, float(t_star))
    return Curve(
        x=surface.z_grid,
        y=surface.values[:, j],
        label=f"t={t_star:g}",
        level=float(t_star),
    )


def quantile_curve(surface, p):
    """Earliest grid time at which survival drops to ``p`` or below.

    Points where the curve never reaches ``p`` within the grid are undefined.
    """
    if not 0.0 < p < 1.0:
        raise ValueError("quantile level must be in (0, 1)")
    reached = surface.values <= p
    first = np.argmax(reached, axis=1)
    defined = reached.any(axis=1)
    y = np.where(defined, surface.t_grid[first], np.nan)
    return Curve(
        x=surface.z_grid,
        y=y,
        defined=defined,
        label=f"p={p:g}",
        level=float(p),
    )


def rmst_curve(surface, horizon):
    """Restricted mean survival time: area under each row up to ``horizon``.

    A step function integrates exactly by rectangles, so there is no
    quadrature error; ``horizon`` must lie within the time grid.
    """
    horizon = float(horizon)
    if horizon <= 0:
        raise ValueError("RMST horizon must be positive")
    t = surface.t_grid
    if horizon > t[-1]:
        raise LambdaBeyondGrid(f"horizon {horizon:g} exceeds the grid's last time {t[-1]:g}")
    upper = np.minimum(np.append(t[1:], horizon), horizon)
    widths = np.clip(upper - t, 0.0, None)
    return Curve(
        x=surface.z_grid,
        y=surface.values @ widths,
        label=f"horizon={horizon:g}",
        level=horizon,
    )


def contrast_surface(surface, spec, km=None, tau_row=None):
    """Contrast every surface cell against a reference survival curve.

    For ``reference="km"`` pass the observed Kaplan-Meier step function; for a
    fixed tau pass ``tau_row``, the reference survival over ``surface.t_grid``
    from a dedicated g-computation evaluation at exactly tau (grid
    interpolation would leak grid resolution into the reference).
    """
    if spec.reference == "km":
        if km is None:
            raise MissingKMReference("contrast against the observed curve needs a KM reference")
        ref = km(surface.t_grid)
    else:
        if tau_row is None:
            raise MissingTauReference(
                "fixed-reference contrast needs the survival row evaluated at tau"
            )
        ref = np.asarray(tau_row, dtype=float)
        if ref.shape != surface.t_grid.shape:
            raise ValueError("tau_row must match the surface time grid")

    if spec.kind == "difference":
        values = ref[None, :] - surface.values
        defined = np.ones_like(values, dtype=bool)
    else:
        denom = surface.values
        defined = denom > 0.0
        with np.errstate(divide="ignore", invalid="ignore"):
            values = np.where(defined, ref[None, :] / np.where(defined, denom, 1.0), np.nan)
    return ContrastSurface(
        z_grid=surface.z_grid,
        t_grid=surface.t_grid,
        values=values,
        defined=defined,
        kind=spec.kind,
        reference_label=spec.label,
        extrapolated=surface.extrapolated,
    )
