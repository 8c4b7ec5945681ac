"""Covariate-transform bases for non-linear exposure modeling.

Supported kinds: linear, polynomial, B-splines (de Boor-Cox recurrence),
natural cubic splines (truncated-power basis with linearity constraints
beyond the boundary knots) and interval categorization with half-open
``(lo, hi]`` cells.

Regression convention throughout: the returned columns exclude the intercept,
so a basis with ``df`` degrees of freedom yields exactly ``df`` columns. For
categorization the first interval is the dropped reference.

Interior knots default to equally spaced quantiles of the data and boundary
knots to the data min/max; evaluation outside the boundary is permitted (a
counterfactual grid may probe slightly past observed support) but flagged:
B-spline bases clamp the recurrence support, natural splines extrapolate
linearly by construction.
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import TooFewDistinctValues, UnresolvedSpec, ValueOutsideAllIntervals

KINDS = ("linear", "polynomial", "bspline", "natural_spline", "categorical")


@dataclass(frozen=True)
class BasisSpec:
    """Declarative description of one covariate transform.

    ``degree`` applies to polynomial/bspline (bspline default 3, cubic);
    ``df`` is the number of regression columns for splines; ``knots`` are
    explicit interior knots; ``boundary`` is the (lo, hi) support;
    ``cutpoints`` are the ascending breaks for categorization.
    """

    kind: str = "linear"
    degree: int | None = None
    df: int | None = None
    knots: tuple | None = None
    boundary: tuple | None = None
    cutpoints: tuple | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")
        min_degree = 0 if self.kind == "bspline" else 1
        if self.degree is not None and self.degree < min_degree:
            raise ValueError(f"degree must be >= {min_degree}")
        if self.df is not None and self.df < 1:
            raise ValueError("df must be >= 1")
        if self.kind == "bspline" and self.df is not None and self.df < self.effective_degree:
            raise ValueError("bspline df must be >= degree")
        if self.knots is not None:
            object.__setattr__(self, "knots", tuple(float(k) for k in self.knots))
            if np.any(np.diff(self.knots) <= 0):
                raise ValueError("interior knots must be strictly ascending")
        if self.boundary is not None:
            lo, hi = (float(b) for b in self.boundary)
            if not lo < hi:
                raise ValueError("boundary must satisfy lo < hi")
            object.__setattr__(self, "boundary", (lo, hi))
            if self.knots and (self.knots[0] <= lo or self.knots[-1] >= hi):
                raise ValueError("interior knots must lie strictly inside the boundary")
        if self.cutpoints is not None:
            object.__setattr__(self, "cutpoints", tuple(float(c) for c in self.cutpoints))
            if len(self.cutpoints) < 2:
                raise ValueError("categorization needs at least 2 cutpoints")
            if np.any(np.diff(self.cutpoints) <= 0):
                raise ValueError("cutpoints must be strictly ascending")

    @property
    def effective_degree(self):
        if self.degree is not None:
            return self.degree
        return 3 if self.kind in ("bspline", "natural_spline") else 1

    @property
    def effective_df(self):
        if self.df is not None:
            return self.df
        if self.kind == "linear":
            return 1
        if self.kind == "polynomial":
            return self.effective_degree
        if self.kind == "bspline":
            return self.effective_degree
        if self.kind == "natural_spline":
            return 2
        return None  # categorical: depends on cutpoints

    @property
    def is_resolved(self):
        if self.kind in ("linear", "polynomial"):
            return True
        if self.kind == "categorical":
            return self.cutpoints is not None
        return self.knots is not None and self.boundary is not None


@dataclass(frozen=True)
class BasisMatrix:
    columns: np.ndarray
    column_names: tuple
    extrapolated: np.ndarray | None = None

    def __post_init__(self):
        cols = np.atleast_2d(np.asarray(self.columns, dtype=float))
        if not np.all(np.isfinite(cols)):
            raise ValueError("basis matrix contains non-finite entries")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "column_names", tuple(self.column_names))

    @property
    def df(self):
        return self.columns.shape[1]


def _n_interior(spec):
    if spec.kind == "bspline":
        return spec.effective_df - spec.effective_degree
    if spec.kind == "natural_spline":
        return spec.effective_df - 1
    return 0


def resolve_knots(x, spec):
    """Fill in boundary and interior knots from the data.

    Boundary defaults to (min(x), max(x)); interior knots sit at equally
    spaced quantiles of ``x``. Returns a fully specified copy of ``spec``;
    non-spline kinds pass through unchanged.
    """
    if spec.kind not in ("bspline", "natural_spline"):
        return spec
    x = np.asarray(x, dtype=float)
    df = spec.effective_df
    if np.unique(x).size < df + 1:
        raise TooFewDistinctValues(
            f"{spec.kind} with df={df} needs at least {df + 1} distinct values"
        )
    boundary = spec.boundary or (float(np.min(x)), float(np.max(x)))
    knots = spec.knots
    if knots is None:
        k = _n_interior(spec)
        if k > 0:
            probs = np.arange(1, k + 1) / (k + 1)
            knots = tuple(float(q) for q in np.quantile(x, probs))
            if np.any(np.diff(knots) <= 0) or knots[0] <= boundary[0] or knots[-1] >= boundary[1]:
                raise TooFewDistinctValues(
                    "quantile knots collide; the data are too coarse for this df"
                )
        else:
            knots = ()
    return replace(spec, degree=spec.effective_degree, df=df, knots=knots, boundary=boundary)


def _bspline_full(x, interior, boundary, degree):
    """All B-spline basis functions (intercept included) via de Boor-Cox."""
    lo, hi = boundary
    t = np.concatenate([[lo] * (degree + 1), interior, [hi] * (degree + 1)])
    nb = len(t) - degree - 1
    xc = np.clip(x, lo, hi)
    # order 0: indicator of [t_i, t_{i+1}); points at the right boundary go
    # into the last non-empty span so the basis still sums to one there
    b = np.zeros((len(xc), len(t) - 1))
    for i in range(len(t) - 1):
        if t[i] < t[i + 1]:
            b[:, i] = (t[i] <= xc) & (xc < t[i + 1])
    last = np.nonzero(np.diff(t) > 0)[0][-1]
    b[xc >= hi, :] = 0.0
    b[xc >= hi, last] = 1.0
    for k in range(1, degree + 1):
        nxt = np.zeros((len(xc), b.shape[1] - 1))
        for i in range(b.shape[1] - 1):
            left = np.zeros(len(xc))
            if t[i + k] > t[i]:
                left = (xc - t[i]) / (t[i + k] - t[i]) * b[:, i]
            right = np.zeros(len(xc))
            if t[i + k + 1] > t[i + 1]:
                right = (t[i + k + 1] - xc) / (t[i + k + 1] - t[i + 1]) * b[:, i + 1]
            nxt[:, i] = left + right
        b = nxt
    return b[:, :nb]


def _natural_spline(x, interior, boundary):
    """Natural cubic spline columns (no intercept), linear beyond the boundary."""
    xi = np.concatenate([[boundary[0]], interior, [boundary[1]]])
    K = len(xi)

    def d(j):
        return (np.maximum(x - xi[j], 0.0) ** 3 - np.maximum(x - xi[K - 1], 0.0) ** 3) / (
            xi[K - 1] - xi[j]
        )

    cols = [x]
    d_last = d(K - 2)
    for j in range(K - 2):
        cols.append(d(j) - d_last)
    return np.column_stack(cols)


def evaluate(x, spec, include_intercept=False):
    """Expand ``x`` (scalar or vector) into basis columns.

    ``include_intercept`` restores the dropped first B-spline function so the
    full basis can be inspected (it sums to one at every interior point).
    """
    if not spec.is_resolved:
        raise UnresolvedSpec(f"{spec.kind} spec must be resolved before evaluation")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if spec.kind == "linear":
        return BasisMatrix(x[:, None], ("",))
    if spec.kind == "polynomial":
        deg = spec.effective_degree
        cols = np.column_stack([x ** p for p in range(1, deg + 1)])
        names = ("",) if deg == 1 else tuple(f"^{p}" for p in range(1, deg + 1))
        return BasisMatrix(cols, names)
    if spec.kind == "categorical":
        return categorize(x, spec.cutpoints)
    lo, hi = spec.boundary
    flagged = (x < lo) | (x > hi)
    if spec.kind == "bspline":
        full = _bspline_full(x, np.asarray(spec.knots, float), spec.boundary, spec.effective_degree)
        cols = full if include_intercept else full[:, 1:]
        names = tuple(f"_bs{i}" for i in range(0 if include_intercept else 1, full.shape[1]))
        return BasisMatrix(cols, names, extrapolated=flagged)
    cols = _natural_spline(x, np.asarray(spec.knots, float), spec.boundary)
    names = tuple(f"_ns{i}" for i in range(1, cols.shape[1] + 1))
    return BasisMatrix(cols, names, extrapolated=flagged)


def interval_labels(cutpoints):
    return tuple(f"({lo:g},{hi:g}]" for lo, hi in zip(cutpoints[:-1], cutpoints[1:]))


def assign_intervals(x, cutpoints):
    """Interval index per value for half-open cells ``(lo, hi]``.

    Values with ``x <= cutpoints[0]`` or ``x > cutpoints[-1]`` belong to no
    interval and raise :class:`ValueOutsideAllIntervals`.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    cuts = np.asarray(cutpoints, dtype=float)
    idx = np.searchsorted(cuts, x, side="left") - 1
    bad = (x <= cuts[0]) | (x > cuts[-1])
    if np.any(bad):
        row = int(np.nonzero(bad)[0][0])
        raise ValueOutsideAllIntervals(row, float(x[row]))
    return idx


def categorize(x, cutpoints):
    """Indicator columns for ``(lo, hi]`` intervals, first interval dropped."""
    cuts = tuple(float(c) for c in cutpoints)
    idx = assign_intervals(x, cuts)
    labels = interval_labels(cuts)
    cols = np.zeros((len(idx), len(labels) - 1))
    for j in range(1, len(labels)):
        cols[:, j - 1] = idx == j
    return BasisMatrix(cols, labels[1:])
