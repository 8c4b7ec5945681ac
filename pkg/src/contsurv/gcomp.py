"""G-computation of counterfactual survival surfaces.

For each grid exposure value z, every subject's exposure is set to z while
their observed confounders are kept; the fitted model predicts each subject's
conditional survival curve and the surface row is the average of those curves
(in fixed record order, with compensated summation).

Because the design expands each variable independently, the linear predictor
splits into an exposure part g(z) and a per-subject confounder part c_i, so a
row is the average over i of ``exp(-H0(t) * exp(g(z) + c_i))``. When the
model contains no confounders all summands coincide and the row is computed
directly — the average of identical curves is that curve, exactly.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .basis import evaluate
from .errors import GridEmpty
from .stepfun import StepFunction


@dataclass(frozen=True)
class SurvivalSurface:
    """Counterfactual survival over a (z-grid x t-grid).

    ``values[i, j]`` is the estimated survival at ``t_grid[j]`` had everyone's
    exposure been set to ``z_grid[i]``. ``extrapolated`` flags z values
    outside the observed exposure range; ``adjusted`` records whether the
    underlying model contained confounders.
    """

    z_grid: np.ndarray
    t_grid: np.ndarray
    values: np.ndarray
    model: str = ""
    adjusted: bool = False
    extrapolated: np.ndarray | None = None

    def __post_init__(self):
        z = np.asarray(self.z_grid, dtype=float)
        t = np.asarray(self.t_grid, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if z.size == 0 or t.size == 0:
            raise GridEmpty("surface grids must be non-empty")
        if np.any(np.diff(z) <= 0) or np.any(np.diff(t) <= 0):
            raise ValueError("grids must be strictly ascending")
        if t[0] != 0.0:
            raise ValueError("t_grid must start at 0")
        if v.shape != (z.size, t.size):
            raise ValueError("values must have shape (len(z_grid), len(t_grid))")
        if not np.all(np.isfinite(v)):
            raise ValueError("surface values must be finite")
        if np.min(v) < 0.0 or np.max(v) > 1.0:
            raise ValueError("surface values must lie in [0, 1]")
        if np.any(np.diff(v, axis=1) > 1e-12):
            raise ValueError("each row must be non-increasing in t")
        if np.any(v[:, 0] != 1.0):
            raise ValueError("survival at t = 0 must be 1")
        ex = self.extrapolated
        ex = np.zeros(z.size, dtype=bool) if ex is None else np.asarray(ex, dtype=bool)
        for name, val in (("z_grid", z), ("t_grid", t), ("values", v), ("extrapolated", ex)):
            object.__setattr__(self, name, val)

    @property
    def shape(self):
        return self.values.shape

    def row(self, i):
        """Value-specific survival curve for ``z_grid[i]`` as a step function."""
        return StepFunction(self.t_grid[1:], self.values[i, 1:], value_before_first=1.0)


def _kahan_mean(matrix):
    """Compensated row-wise mean: deterministic in the given row order."""
    total = np.zeros(matrix.shape[1])
    comp = np.zeros(matrix.shape[1])
    for row in matrix:
        y = row - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total / matrix.shape[0]


def counterfactual_surface(fit, dataset, z_grid=None, t_grid=None, n_workers=1):
    """Evaluate the g-computation survival surface for a fitted Cox model.

    Parameters
    ----------
    fit : CoxFit
        Model whose design references the dataset's variables.
    dataset : Dataset
        Supplies the confounder distribution to average over and, for default
        grids, the observed exposure range and event times.
    z_grid, t_grid : arrays, optional
        Ascending grids; ``t_grid`` must start at 0. Defaults to
        :func:`default_grids`.
    n_workers : int
        Rows are independent across z; results are identical for any worker
        count.
    """
    if z_grid is None or t_grid is None:
        dz, dt = default_grids(dataset, fit)
        z_grid = dz if z_grid is None else z_grid
        t_grid = dt if t_grid is None else t_grid
    z_grid = np.asarray(z_grid, dtype=float)
    t_grid = np.asarray(t_grid, dtype=float)
    if z_grid.size == 0 or t_grid.size == 0:
        raise GridEmpty("z_grid and t_grid must be non-empty")

    h0 = fit.baseline_cumhaz(t_grid)
    design = fit.design
    variables = list(design.variables)
    exposure_pos = (
        variables.index(dataset.exposure_name) if dataset.exposure_name in variables else None
    )

    # additive split of the linear predictor: exposure part vs subject part
    if exposure_pos is None:
        g_z = np.zeros(z_grid.size)
    else:
        spec = design.specs[exposure_pos]
        cols = evaluate(z_grid, spec).columns
        g_z = cols @ fit.coefficients[design.column_slices[exposure_pos]]

    subject_vars = [v for v in variables if v != dataset.exposure_name]
    if subject_vars:
        c_i = np.zeros(dataset.n)
        for v in subject_vars:
            pos = variables.index(v)
            col = dataset.variable_matrix[:, dataset.variable_names.index(v)]
            cols = evaluate(col, design.specs[pos]).columns
            c_i = c_i + cols @ fit.coefficients[design.column_slices[pos]]
    else:
        c_i = None

    values = np.empty((z_grid.size, t_grid.size))

    def fill_row(i):
        hazard_scale = np.exp(g_z[i])
        if c_i is None:
            values[i] = np.exp(-h0 * hazard_scale)
        else:
            curves = np.exp(-np.outer(np.exp(c_i) * hazard_scale, h0))
            values[i] = _kahan_mean(curves)

    if n_workers and n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            list(pool.map(fill_row, range(z_grid.size)))
    else:
        for i in range(z_grid.size):
            fill_row(i)

    np.clip(values, 0.0, 1.0, out=values)
    lo, hi = float(np.min(dataset.exposure)), float(np.max(dataset.exposure))
    return SurvivalSurface(
        z_grid=z_grid,
        t_grid=t_grid,
        values=values,
        model=design.describe(),
        adjusted=c_i is not None,
        extrapolated=(z_grid < lo) | (z_grid > hi),
    )


def default_grids(dataset, fit=None, z_points=100):
    """Default evaluation grids.

    The exposure grid is ``z_points`` equally spaced values over the observed
    range; the time grid is 0 plus the distinct event times — the only places
    a Breslow-based surface can change.
    """
    z_grid = np.linspace(float(np.min(dataset.exposure)), float(np.max(dataset.exposure)), z_points)
    if fit is not None:
        event_times = fit.baseline_cumhaz.knots
    else:
        event_times = np.unique(dataset.times[dataset.status == 1])
    t_grid = np.concatenate([[0.0], event_times])
    return z_grid, t_grid


def survival_at(fit, dataset, z, t):
    """One g-computation evaluation: counterfactual survival at (z, t)."""
    if float(t) == 0.0:
        return 1.0
    surface = counterfactual_surface(fit, dataset, np.atleast_1d(float(z)), np.array([0.0, float(t)]))
    return float(surface.values[0, -1])
