"""Cox proportional-hazards fitting and conditional survival prediction.

The coefficient vector maximizes the Breslow-ties log partial likelihood via
Newton-Raphson with step-halving; the cumulative baseline hazard is the
Breslow step estimator; conditional survival is
``S(t | x) = exp(-H0(t) * exp(beta . x))``.

Ties are always handled with the Breslow convention (tied events share the
full risk set), which keeps the baseline estimator and the survival formula
mutually exact. Covariates are mean-centered internally for conditioning;
the reported coefficients and baseline are on the original scale.
"""

from dataclasses import dataclass

import numpy as np

from .design import design_matrix, resolve_design, variable_columns
from .errors import MonotoneLikelihood, NoEvents, NotConverged, SingularInformation
from .stepfun import StepFunction

MAX_ITER = 25
MAX_HALVINGS = 10
TOL = 1e-9
COEF_BOUND = 50.0
# a vanishing score with a non-vanishing Newton step means the likelihood is
# still climbing toward an infinite coefficient, not at an interior maximum
DIVERGENT_STEP = 0.1


@dataclass(frozen=True)
class CoxFit:
    coefficients: np.ndarray
    baseline_cumhaz: StepFunction
    covariance: np.ndarray
    loglik_null: float
    loglik_final: float
    iterations: int
    converged: bool
    design: object

    @property
    def n_parameters(self):
        return len(self.coefficients)


class _PartialLikelihood:
    """Breslow-ties partial likelihood with O(n p^2) suffix-sum evaluation."""

    def __init__(self, times, status, X):
        order = np.argsort(times, kind="stable")
        self.t = np.asarray(times, float)[order]
        self.d = np.asarray(status, int)[order]
        self.X = np.asarray(X, float)[order]
        self.n, self.p = self.X.shape
        ev = self.d == 1
        if not np.any(ev):
            raise NoEvents("no events: partial likelihood undefined")
        self.ev_rows = np.nonzero(ev)[0]
        ev_times = self.t[self.ev_rows]
        self.event_times, self.d_k = np.unique(ev_times, return_counts=True)
        self.d_k = self.d_k.astype(float)
        # risk set for event time t_k = suffix of the time-sorted rows
        self.risk_start = np.searchsorted(self.t, self.event_times, side="left")
        self.ev_starts = np.searchsorted(ev_times, self.event_times, side="left")

    def _weights(self, beta):
        eta = self.X @ beta if self.p else np.zeros(self.n)
        shift = float(np.max(eta))
        return eta, shift, np.exp(eta - shift)

    def _s0(self, w):
        return np.cumsum(w[::-1])[::-1][self.risk_start]

    def loglik(self, beta):
        eta, shift, w = self._weights(beta)
        s0 = self._s0(w)
        return float(np.sum(eta[self.ev_rows]) - np.sum(self.d_k * (np.log(s0) + shift)))

    def loglik_score_info(self, beta):
        eta, shift, w = self._weights(beta)
        s0 = self._s0(w)
        ll = float(np.sum(eta[self.ev_rows]) - np.sum(self.d_k * (np.log(s0) + shift)))
        wx = w[:, None] * self.X
        s1 = np.cumsum(wx[::-1], axis=0)[::-1][self.risk_start]
        xxw = wx[:, :, None] * self.X[:, None, :]
        s2 = np.cumsum(xxw[::-1], axis=0)[::-1][self.risk_start]
        xbar = s1 / s0[:, None]
        score = self.X[self.ev_rows].sum(axis=0) - self.d_k @ xbar
        info = np.einsum("k,kij->ij", self.d_k, s2 / s0[:, None, None]) - np.einsum(
            "k,ki,kj->ij", self.d_k, xbar, xbar
        )
        return ll, score, info

    def baseline_increments(self, beta):
        """Breslow increments d_k / sum_{risk} exp(eta) at each event time."""
        _, shift, w = self._weights(beta)
        return self.d_k * np.exp(-shift) / self._s0(w)


def _check_bounds(beta):
    if np.any(np.abs(beta) > COEF_BOUND):
        raise MonotoneLikelihood(
            f"a coefficient exceeded {COEF_BOUND:g}; the partial likelihood "
            "appears monotone (perfect or near-perfect separation)"
        )


def _newton_step(info, score):
    try:
        step = np.linalg.solve(info, score)
    except np.linalg.LinAlgError:
        raise SingularInformation("observed information is singular (collinear design)") from None
    if not np.all(np.isfinite(step)):
        raise SingularInformation("observed information is numerically singular")
    return step


def _guard_divergence(step):
    if np.max(np.abs(step)) > DIVERGENT_STEP:
        raise MonotoneLikelihood(
            "score vanished while the Newton step stayed large; a coefficient "
            "is drifting to infinity (monotone likelihood)"
        )


def fit(dataset, bindings=None, *, max_iter=MAX_ITER, tol=TOL):
    """Fit a Cox model to a validated dataset.

    Parameters
    ----------
    dataset : Dataset
    bindings : mapping of variable name -> BasisSpec, optional
        ``None`` binds every variable linearly; ``{}`` fits the null model.
    max_iter, tol : control of the Newton-Raphson loop; convergence when the
        relative log-likelihood change or the score sup-norm drops below
        ``tol``, with up to 10 step-halvings per iteration.

    Raises
    ------
    NoEvents, SingularInformation, MonotoneLikelihood, NotConverged
    """
    design = resolve_design(dataset, bindings)
    X = design_matrix(design, variable_columns(design, dataset))
    p = X.shape[1]
    if not np.any(dataset.status == 1):
        raise NoEvents("cannot fit a hazard model without events")

    center = X.mean(axis=0) if p else np.zeros(0)
    pl = _PartialLikelihood(dataset.times, dataset.status, X - center)

    if p == 0:
        ll_null = pl.loglik(np.zeros(0))
        return CoxFit(
            coefficients=np.zeros(0),
            baseline_cumhaz=breslow_baseline(dataset, np.zeros(0), design),
            covariance=np.zeros((0, 0)),
            loglik_null=ll_null,
            loglik_final=ll_null,
            iterations=0,
            converged=True,
            design=design,
        )

    beta = np.zeros(p)
    ll, score, info = pl.loglik_score_info(beta)
    ll_null = ll
    iterations = 0
    converged = False
    if np.max(np.abs(score)) < tol:
        _guard_divergence(_newton_step(info, score))
        converged = True
    while not converged:
        if iterations >= max_iter:
            raise NotConverged(iterations)
        step = _newton_step(info, score)
        new_beta = beta + step
        new_ll = pl.loglik(new_beta)
        halvings = 0
        while not new_ll > ll and halvings < MAX_HALVINGS:
            step = step / 2.0
            new_beta = beta + step
            new_ll = pl.loglik(new_beta)
            halvings += 1
        if not new_ll > ll:
            # likelihood cannot be improved from here; accept the current
            # point and report convergence honestly via the score
            converged = np.max(np.abs(score)) < 1e-6
            if converged:
                _guard_divergence(_newton_step(info, score))
            break
        iterations += 1
        beta = new_beta
        _check_bounds(beta)
        prev_ll = ll
        ll, score, info = pl.loglik_score_info(beta)
        rel_change = abs(ll - prev_ll) / (abs(prev_ll) + 1e-10)
        if rel_change < tol or np.max(np.abs(score)) < tol:
            _guard_divergence(_newton_step(info, score))
            converged = True

    try:
        covariance = np.linalg.inv(info)
    except np.linalg.LinAlgError:
        raise SingularInformation("observed information is singular at the optimum") from None
    covariance = (covariance + covariance.T) / 2.0

    return CoxFit(
        coefficients=beta,
        baseline_cumhaz=breslow_baseline(dataset, beta, design),
        covariance=covariance,
        loglik_null=ll_null,
        loglik_final=ll,
        iterations=iterations,
        converged=bool(converged),
        design=design,
    )


def breslow_baseline(dataset, beta, design):
    """Breslow cumulative baseline hazard as a step function.

    The increment at each distinct event time is the event count divided by
    the sum of ``exp(beta . x)`` over the risk set (everyone still under
    observation at that time).
    """
    beta = np.asarray(beta, dtype=float)
    X = design_matrix(design, variable_columns(design, dataset))
    pl = _PartialLikelihood(dataset.times, dataset.status, X)
    increments = pl.baseline_increments(beta)
    return StepFunction(pl.event_times, np.cumsum(increments), value_before_first=0.0)


def predict_survival(fit, covariate_row, times):
    """Conditional survival probabilities for one covariate row.

    ``covariate_row`` holds the raw values of the fit's design variables (in
    design order); ``times`` may be a scalar or vector. Evaluation follows
    the right-continuous step convention, so S(0) = 1 and the curve is
    non-increasing.
    """
    row = np.atleast_2d(np.asarray(covariate_row, dtype=float))
    cols = design_matrix(fit.design, row)
    eta = float(cols @ fit.coefficients) if fit.n_parameters else 0.0
    return np.exp(-fit.baseline_cumhaz(times) * np.exp(eta))


def linear_predictors(fit, values):
    """Design expansion + dot product for many raw variable rows at once."""
    cols = design_matrix(fit.design, values)
    return cols @ fit.coefficients if fit.n_parameters else np.zeros(len(cols))
