"""Kaplan-Meier product-limit estimation of the observed survival function.

Used for the treatment-as-usual reference in contrast estimands and for
descriptive curves stratified by exposure categories. Censored subjects tied
with an event time remain in the risk set at that time (the standard
product-limit convention).
"""

from statistics import NormalDist

import numpy as np

from .basis import assign_intervals, interval_labels
from .errors import EmptyStratum, NoEvents
from .stepfun import StepFunction


def _event_table(times, status):
    times = np.asarray(times, dtype=float)
    status = np.asarray(status, dtype=int)
    order = np.argsort(times, kind="stable")
    t = times[order]
    d = status[order]
    ev_rows = np.nonzero(d == 1)[0]
    if ev_rows.size == 0:
        raise NoEvents("Kaplan-Meier requires at least one event")
    event_times, d_k = np.unique(t[ev_rows], return_counts=True)
    n_k = len(t) - np.searchsorted(t, event_times, side="left")
    return event_times, d_k.astype(float), n_k.astype(float)


def kaplan_meier(times, status):
    """Product-limit survival curve as a right-continuous step function."""
    event_times, d_k, n_k = _event_table(times, status)
    survival = np.cumprod(1.0 - d_k / n_k)
    return StepFunction(event_times, survival, value_before_first=1.0)


def stratified_km(dataset, cutpoints):
    """One Kaplan-Meier curve per ``(lo, hi]`` exposure category.

    Returns a dict mapping interval label to curve, in interval order.
    """
    idx = assign_intervals(dataset.exposure, cutpoints)
    labels = interval_labels(tuple(float(c) for c in cutpoints))
    curves = {}
    for j, label in enumerate(labels):
        members = idx == j
        if not np.any(members):
            raise EmptyStratum(label)
        try:
            curves[label] = kaplan_meier(dataset.times[members], dataset.status[members])
        except NoEvents:
            raise EmptyStratum(label) from None
    return curves


def km_confidence_band(times, status, level=0.95):
    """Pointwise log-scale Greenwood confidence band, clipped to [0, 1].

    Returns ``(lower, upper)`` step functions on the event-time knots. Where
    the curve reaches zero the variance of log S is undefined and the band
    collapses to [0, 0].
    """
    event_times, d_k, n_k = _event_table(times, status)
    survival = np.cumprod(1.0 - d_k / n_k)
    z = NormalDist().inv_cdf(0.5 + level / 2.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        var_log = np.cumsum(np.where(n_k > d_k, d_k / (n_k * (n_k - d_k)), np.inf))
        half = z * np.sqrt(var_log)
        lower = np.where(survival > 0, survival * np.exp(-half), 0.0)
        upper = np.where(survival > 0, survival * np.exp(half), 0.0)
    lower = np.clip(np.nan_to_num(lower, nan=0.0), 0.0, 1.0)
    upper = np.clip(np.nan_to_num(upper, nan=0.0), 0.0, 1.0)
    return (
        StepFunction(event_times, lower, value_before_first=1.0),
        StepFunction(event_times, upper, value_before_first=1.0),
    )
