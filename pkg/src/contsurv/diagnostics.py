"""Graphical model checks: residuals against time and against covariates.

Schoenfeld residuals (one row per event: the event's covariate minus the
risk-set mean weighted by the fitted hazard) drift with time when the
proportional-hazards assumption fails. Martingale residuals (observed minus
expected event count per subject) trend with a covariate when its functional
form is misspecified — classically inspected against an intercept-only model.
Both are meant to be read with a locally weighted regression overlay.
"""

from dataclasses import dataclass

import numpy as np

from .cox import linear_predictors
from .design import design_matrix, variable_columns
from .errors import NotConverged, TooFewPoints

LOESS_GRID_POINTS = 100


@dataclass(frozen=True)
class SchoenfeldResiduals:
    times: np.ndarray      # one entry per event, ascending
    residuals: np.ndarray  # (n_events, n_columns)
    columns: tuple


def schoenfeld_residuals(fit, dataset):
    """Per-event covariate residuals under the fitted hazard weights.

    With Breslow tie handling every tied event uses the full risk set. For a
    null (no-covariate) fit the residuals are computed for the dataset's raw
    variables against plain risk-set means, which is the usual way to screen
    a variable before it enters the model.
    """
    if not fit.converged:
        raise NotConverged(fit.iterations)
    if fit.n_parameters:
        X = design_matrix(fit.design, variable_columns(fit.design, dataset))
        columns = fit.design.column_names
        eta = X @ fit.coefficients
    else:
        X = dataset.variable_matrix
        columns = dataset.variable_names
        eta = np.zeros(dataset.n)

    order = np.argsort(dataset.times, kind="stable")
    t = dataset.times[order]
    d = dataset.status[order]
    Xs = X[order]
    w = np.exp(eta[order] - np.max(eta))
    s0 = np.cumsum(w[::-1])[::-1]
    s1 = np.cumsum((w[:, None] * Xs)[::-1], axis=0)[::-1]

    ev = np.nonzero(d == 1)[0]
    risk_start = np.searchsorted(t, t[ev], side="left")
    resid = Xs[ev] - s1[risk_start] / s0[risk_start, None]
    return SchoenfeldResiduals(times=t[ev], residuals=resid, columns=tuple(columns))


def martingale_residuals(dataset, fit):
    """Observed minus expected events per subject: status - H0(t) exp(eta)."""
    eta = (
        linear_predictors(fit, variable_columns(fit.design, dataset))
        if fit.n_parameters
        else np.zeros(dataset.n)
    )
    expected = fit.baseline_cumhaz(dataset.times) * np.exp(eta)
    return dataset.status - expected


def loess_overlay(x, y, span=0.75):
    """Tricube-weighted local linear regression on a 100-point grid.

    ``span`` is the fraction of points entering each local fit. Local linear
    smoothing reproduces straight lines exactly, so a clean linear signal
    passes through unchanged.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size < 10:
        raise TooFewPoints(f"loess needs at least 10 points, got {x.size}")
    if not 0.0 < span <= 1.0:
        raise ValueError("span must be in (0, 1]")
    q = max(2, int(np.ceil(span * x.size)))
    grid = np.linspace(float(np.min(x)), float(np.max(x)), LOESS_GRID_POINTS)
    fitted = np.empty(grid.size)
    for i, g in enumerate(grid):
        dist = np.abs(x - g)
        h = np.partition(dist, q - 1)[q - 1]
        if h <= 0.0:
            fitted[i] = float(np.mean(y[dist == 0.0]))
            continue
        w = np.clip(1.0 - (dist / h) ** 3, 0.0, None) ** 3
        sw = np.sum(w)
        xbar = np.sum(w * x) / sw
        ybar = np.sum(w * y) / sw
        sxx = np.sum(w * (x - xbar) ** 2)
        if sxx <= 0.0:
            fitted[i] = ybar
        else:
            slope = np.sum(w * (x - xbar) * (y - ybar)) / sxx
            fitted[i] = ybar + slope * (g - xbar)
    return grid, fitted
