"""Bootstrap percentile confidence intervals for scalar pipeline estimands.

Each replicate resamples subjects with replacement and reruns the entire
estimation pipeline — knot resolution, model fit, g-computation, estimand —
so the interval reflects every data-dependent choice. Intervals are
percentile (empirical quantiles with linear interpolation); the standard
error is the sample standard deviation of the replicate values.

Replicate r draws from a stream split from ``(seed, r)``, so results are
bit-identical for any worker count or execution order. Replicates where the
model cannot be refit (a package error: singular design, no events in the
resample, ...) are excluded and counted; more than 10% of them aborts the
run. Any other exception is a pipeline bug and propagates with the replicate
index attached.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ContsurvError, PipelineError, TooManyFailures

FAILURE_FRACTION = 0.10


@dataclass(frozen=True)
class EstimateWithCI:
    """Point estimate with bootstrap SE and percentile interval.

    Percentile intervals may exclude the point estimate in skewed problems;
    only ``ci_lower <= ci_upper`` is guaranteed.
    """

    point: float
    se: float
    ci_lower: float
    ci_upper: float
    level: float
    n_boot: int
    n_failed: int


def _replicate_rng(seed, r):
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(r,)))


def bootstrap(dataset, pipeline, n_boot=1000, level=0.95, seed=0, n_workers=1):
    """Resample-with-replacement interval for ``pipeline(dataset) -> float``.

    Parameters
    ----------
    dataset : Dataset
    pipeline : callable
        Deterministic map from a dataset to a scalar estimand; rerun in full
        on every replicate.
    n_boot : int
        Number of replicates (>= 2).
    level : float
        Two-sided confidence level in (0, 1).
    seed : int
        Master seed; replicate streams are split from it by index.
    n_workers : int
        Thread count; has no effect on the results.
    """
    if n_boot < 2:
        raise ValueError("n_boot must be at least 2")
    if not 0.0 < level < 1.0:
        raise ValueError("level must be in (0, 1)")
    point = float(pipeline(dataset))
    n = dataset.n

    def run_replicate(r):
        idx = _replicate_rng(seed, r).integers(0, n, size=n)
        try:
            return float(pipeline(dataset.take(idx)))
        except ContsurvError:
            return None
        except Exception as exc:  # a bug, not a data problem: surface it
            raise PipelineError(r, exc) from exc

    if n_workers and n_workers > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            results = list(pool.map(run_replicate, range(n_boot)))
    else:
        results = [run_replicate(r) for r in range(n_boot)]

    values = np.array([v for v in results if v is not None], dtype=float)
    n_failed = n_boot - values.size
    if n_failed > FAILURE_FRACTION * n_boot:
        raise TooManyFailures(n_failed, n_boot)

    alpha = 1.0 - level
    lo, hi = np.quantile(values, [alpha / 2.0, 1.0 - alpha / 2.0])
    return EstimateWithCI(
        point=point,
        se=float(np.std(values, ddof=1)),
        ci_lower=float(lo),
        ci_upper=float(hi),
        level=level,
        n_boot=n_boot,
        n_failed=n_failed,
    )
