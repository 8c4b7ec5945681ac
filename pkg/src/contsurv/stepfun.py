"""Right-continuous step functions on [0, infinity).

The common carrier for cumulative baseline hazards, Kaplan-Meier curves and
every value-specific survival curve: f(t) equals the value attached to the
largest knot <= t, and ``value_before_first`` left of the first knot.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class StepFunction:
    knots: np.ndarray
    values: np.ndarray
    value_before_first: float = 0.0

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if knots.ndim != 1 or values.ndim != 1 or knots.shape != values.shape:
            raise ValueError("knots and values must be 1-d arrays of equal length")
        if knots.size == 0:
            raise ValueError("a step function needs at least one knot")
        if not np.all(np.isfinite(knots)):
            raise ValueError("knots must be finite")
        if np.any(np.diff(knots) <= 0):
            raise ValueError("knots must be strictly ascending")
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "value_before_first", float(self.value_before_first))

    def __call__(self, t):
        """Evaluate at scalar or array ``t`` with the right-continuous convention."""
        t_arr = np.asarray(t, dtype=float)
        idx = np.searchsorted(self.knots, t_arr, side="right") - 1
        out = np.where(idx < 0, self.value_before_first, self.values[np.clip(idx, 0, None)])
        if np.isscalar(t) or t_arr.ndim == 0:
            return float(out)
        return out

    @property
    def is_non_increasing(self):
        return bool(
            np.all(np.diff(self.values) <= 1e-15)
            and (self.values.size == 0 or self.values[0] <= self.value_before_first + 1e-15)
        )

    @property
    def is_non_decreasing(self):
        return bool(
            np.all(np.diff(self.values) >= -1e-15)
            and (self.values.size == 0 or self.values[0] >= self.value_before_first - 1e-15)
        )
