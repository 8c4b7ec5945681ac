"""Counterfactual survival analysis for continuous exposures.

Estimates the survival probability that would be observed at time t had the
exposure been set to z for everyone, by averaging Cox-model predictions over
the observed confounder distribution (regression standardization). The
resulting (z, t) surface feeds contrast and summary estimands, percentile
bootstrap intervals, and a catalogue of deterministic SVG plots.

Estimates carry a causal reading only under the usual identifiability
assumptions (consistency, no interference, conditional exchangeability given
the adjusted-for confounders, positivity) plus a correctly specified model
and censoring that is independent of everything; otherwise they describe
marginal associations. See the README for the full discussion.
"""

from .basis import BasisMatrix, BasisSpec, categorize, evaluate, resolve_knots
from .bootstrap import EstimateWithCI, bootstrap
from .cox import CoxFit, breslow_baseline, fit, predict_survival
from .data import Dataset, SubjectRecord, Violation, from_records, load_csv, validate, write_csv
from .design import Design, design_matrix, resolve_design
from .diagnostics import loess_overlay, martingale_residuals, schoenfeld_residuals
from .errors import ContsurvError
from .estimands import (
    ContrastSpec,
    ContrastSurface,
    Curve,
    EstimandValue,
    contrast_surface,
    landmark,
    quantile_curve,
    rmst_curve,
)
from .gcomp import SurvivalSurface, counterfactual_surface, default_grids, survival_at
from .km import kaplan_meier, km_confidence_band, stratified_km
from .render import CurveSet, PlotSpec, RenderOutput, ResidualScatter, monotone_segments, render
from .simulate import (
    ConfounderSpec,
    ExponentialBaseline,
    LinearEffect,
    QuadraticEffect,
    Scenario,
    WeibullBaseline,
    generate,
    true_surface,
    true_survival,
)
from .stepfun import StepFunction

__version__ = "0.1.0"

__all__ = [
    "BasisMatrix",
    "BasisSpec",
    "ConfounderSpec",
    "ContrastSpec",
    "ContrastSurface",
    "ContsurvError",
    "CoxFit",
    "Curve",
    "CurveSet",
    "Dataset",
    "Design",
    "EstimandValue",
    "EstimateWithCI",
    "ExponentialBaseline",
    "LinearEffect",
    "PlotSpec",
    "QuadraticEffect",
    "RenderOutput",
    "ResidualScatter",
    "Scenario",
    "StepFunction",
    "SubjectRecord",
    "SurvivalSurface",
    "Violation",
    "WeibullBaseline",
    "bootstrap",
    "breslow_baseline",
    "categorize",
    "contrast_surface",
    "counterfactual_surface",
    "default_grids",
    "design_matrix",
    "evaluate",
    "fit",
    "from_records",
    "generate",
    "kaplan_meier",
    "km_confidence_band",
    "landmark",
    "load_csv",
    "loess_overlay",
    "martingale_residuals",
    "monotone_segments",
    "predict_survival",
    "quantile_curve",
    "render",
    "resolve_design",
    "resolve_knots",
    "rmst_curve",
    "schoenfeld_residuals",
    "stratified_km",
    "survival_at",
    "true_surface",
    "true_survival",
    "validate",
    "write_csv",
]
