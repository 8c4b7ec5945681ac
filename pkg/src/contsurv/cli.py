"""Command-line front end.

Subcommands wire the pipeline together: ``simulate`` and ``fit`` produce
data/model files, ``surface`` evaluates the counterfactual grid, ``contrast``
/ ``estimand`` / ``bootstrap`` derive numbers from it, and ``plot`` /
``diagnose`` render SVG figures next to their CSV data.

Conventions: long flags only; ``--config`` points at a TOML file whose
sections mirror the subcommands (flags override config values, config values
override defaults); diagnostics go to stderr and data to files or stdout;
exit code 0 on success, 1 on usage errors, 2 on data or model errors.
"""

import argparse
import json
import os
import re
import sys

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from . import io as formats
from .basis import BasisSpec
from .bootstrap import bootstrap
from .cox import fit as cox_fit
from .data import load_csv, validate, write_csv
from .diagnostics import loess_overlay, martingale_residuals, schoenfeld_residuals
from .errors import ContsurvError, LambdaBeyondGrid
from .estimands import ContrastSpec, Curve, contrast_surface, landmark, quantile_curve, rmst_curve
from .gcomp import counterfactual_surface, default_grids, survival_at
from .km import kaplan_meier, km_confidence_band
from .render import CurveSet, PlotSpec, ResidualScatter, render
from .simulate import (
    ConfounderSpec,
    ExponentialBaseline,
    LinearEffect,
    QuadraticEffect,
    Scenario,
    WeibullBaseline,
    generate,
)

THREADS_ENV = "CONTSURV_THREADS"


class _Parser(argparse.ArgumentParser):
    """argparse, but usage problems exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _info(message):
    print(message, file=sys.stderr)


def _floats(text):
    return [float(v) for v in str(text).split(",") if str(v).strip() != ""]


def _names(text):
    return [v.strip() for v in str(text).split(",") if v.strip()]


def _load_config(path):
    if not path:
        return {}
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def _setting(args, config, section, key, default=None):
    """Precedence: explicit flag > config section > top-level config > default."""
    value = getattr(args, key.replace("-", "_"), None)
    if value is not None:
        return value
    if key in config.get(section, {}):
        return config[section][key]
    if key in config:
        return config[key]
    return default


def _threads(args, config, section):
    value = _setting(args, config, section, "threads")
    if value is None:
        value = os.environ.get(THREADS_ENV)
    return max(1, int(value)) if value is not None else 1


def _write_text(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_text(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _basis_from_mapping(mapping):
    return BasisSpec(
        kind=mapping.get("kind", "linear"),
        degree=mapping.get("degree"),
        df=mapping.get("df"),
        knots=tuple(mapping["knots"]) if "knots" in mapping else None,
        boundary=tuple(mapping["boundary"]) if "boundary" in mapping else None,
        cutpoints=tuple(mapping["cutpoints"]) if "cutpoints" in mapping else None,
    )


def _exposure_spec(args, config, section):
    kind = _setting(args, config, section, "exposure-basis", "linear")
    mapping = {"kind": kind}
    df = _setting(args, config, section, "exposure-df")
    degree = _setting(args, config, section, "exposure-degree")
    knots = _setting(args, config, section, "exposure-knots")
    boundary = _setting(args, config, section, "exposure-boundary")
    cutpoints = _setting(args, config, section, "exposure-cutpoints")
    if df is not None:
        mapping["df"] = int(df)
    if degree is not None:
        mapping["degree"] = int(degree)
    if knots is not None:
        mapping["knots"] = _floats(knots) if isinstance(knots, str) else list(knots)
    if boundary is not None:
        mapping["boundary"] = _floats(boundary) if isinstance(boundary, str) else list(boundary)
    if cutpoints is not None:
        mapping["cutpoints"] = _floats(cutpoints) if isinstance(cutpoints, str) else list(cutpoints)
    return _basis_from_mapping(mapping)


def _bindings(args, config, section, exposure, confounders):
    """Design bindings: exposure from flags, confounders linear unless the
    config carries a [basis.<name>] section."""
    basis_cfg = config.get("basis", {})
    bindings = {exposure: _exposure_spec(args, config, section)}
    if exposure in basis_cfg and getattr(args, "exposure_basis", None) is None:
        bindings[exposure] = _basis_from_mapping(basis_cfg[exposure])
    for name in confounders:
        bindings[name] = (
            _basis_from_mapping(basis_cfg[name]) if name in basis_cfg else BasisSpec()
        )
    return bindings


def _load_dataset(args, config, section):
    data = _setting(args, config, section, "data")
    if not data:
        raise ContsurvError("--data is required")
    time = _setting(args, config, section, "time", "time")
    status = _setting(args, config, section, "status", "status")
    exposure = _setting(args, config, section, "exposure")
    if not exposure:
        raise ContsurvError("--exposure is required")
    confounders = _setting(args, config, section, "confounders", "")
    confounders = _names(confounders) if isinstance(confounders, str) else list(confounders)
    dataset = load_csv(data, time=time, status=status, exposure=exposure, confounders=confounders)
    schema = {"time": time, "status": status, "exposure": exposure, "confounders": confounders}
    return dataset, schema


def _validated(dataset):
    result = validate(dataset)
    if isinstance(result, list):
        for violation in result:
            _info(f"invalid data: {violation}")
        raise ContsurvError(f"dataset failed validation with {len(result)} violation(s)")
    return result


def _dataset_from_fit_schema(path_data, schema):
    return load_csv(
        path_data,
        time=schema["time"],
        status=schema["status"],
        exposure=schema["exposure"],
        confounders=schema.get("confounders", []),
    )


# --- subcommands ---


def _cmd_simulate(args, config):
    sec = "simulate"
    baseline_kind = _setting(args, config, sec, "baseline", "exponential")
    if baseline_kind == "exponential":
        baseline = ExponentialBaseline(rate=float(_setting(args, config, sec, "rate", 0.1)))
    elif baseline_kind == "weibull":
        baseline = WeibullBaseline(
            shape=float(_setting(args, config, sec, "shape", 1.0)),
            scale=float(_setting(args, config, sec, "scale", 1.0)),
        )
    else:
        raise ContsurvError(f"unknown baseline {baseline_kind!r}")
    effect_kind = _setting(args, config, sec, "effect", "linear")
    beta = float(_setting(args, config, sec, "beta", -1.0))
    if effect_kind == "linear":
        effect = LinearEffect(beta)
    elif effect_kind == "quadratic":
        effect = QuadraticEffect(beta, float(_setting(args, config, sec, "beta2", 0.5)))
    else:
        raise ContsurvError(f"unknown effect {effect_kind!r}")
    gamma = _setting(args, config, sec, "confounder-gamma")
    alpha = _setting(args, config, sec, "confounder-alpha")
    confounder = None
    if gamma is not None or alpha is not None:
        confounder = ConfounderSpec(
            mu=float(_setting(args, config, sec, "confounder-mu", 0.0)),
            sigma=float(_setting(args, config, sec, "confounder-sigma", 1.0)),
            gamma=float(gamma if gamma is not None else 0.0),
            alpha=float(alpha if alpha is not None else 0.0),
        )
    scenario = Scenario(
        n=int(_setting(args, config, sec, "n", 100)),
        baseline=baseline,
        effect=effect,
        confounder=confounder,
        censoring_rate=float(_setting(args, config, sec, "censoring-rate", 0.0)),
        seed=int(_setting(args, config, sec, "seed", 0)),
    )
    dataset = generate(scenario)
    out = _setting(args, config, sec, "out")
    if out in (None, "-"):
        raise ContsurvError("simulate requires --out (CSV path)")
    write_csv(dataset, out)
    _info(f"wrote {dataset.n} subjects ({int(dataset.status.sum())} events) to {out}")
    return 0


def _cmd_fit(args, config):
    sec = "fit"
    dataset, schema = _load_dataset(args, config, sec)
    dataset = _validated(dataset)
    bindings = _bindings(args, config, sec, schema["exposure"], schema["confounders"])
    fitted = cox_fit(dataset, bindings)
    _info(
        f"model: {fitted.design.describe()} | iterations: {fitted.iterations} "
        f"| converged: {fitted.converged}"
    )
    for name, value in zip(fitted.design.column_names, fitted.coefficients):
        _info(f"  coef {name}: {value:.6g}")
    _write_text(_setting(args, config, sec, "out"), formats.fit_to_json(fitted, schema))
    return 0


def _cmd_surface(args, config):
    sec = "surface"
    fit_path = _setting(args, config, sec, "fit")
    if not fit_path:
        raise ContsurvError("--fit is required")
    fitted, schema = formats.fit_from_json(_read_text(fit_path))
    data = _setting(args, config, sec, "data")
    if not data:
        raise ContsurvError("--data is required")
    dataset = _dataset_from_fit_schema(data, schema)
    z_values = _setting(args, config, sec, "z-values")
    t_values = _setting(args, config, sec, "t-values")
    z_points = int(_setting(args, config, sec, "z-points", 100))
    z_grid, t_grid = default_grids(dataset, fitted, z_points=z_points)
    if z_values is not None:
        z_grid = np.array(sorted(_floats(z_values)))
    if t_values is not None:
        t_grid = np.array(sorted(set([0.0] + _floats(t_values))))
    surface = counterfactual_surface(
        fitted, dataset, z_grid, t_grid, n_workers=_threads(args, config, sec)
    )
    _write_text(_setting(args, config, sec, "out"), formats.surface_to_csv(surface))
    _info(f"surface: {surface.shape[0]} exposure values x {surface.shape[1]} times")
    return 0


def _cmd_contrast(args, config):
    sec = "contrast"
    surface = formats.surface_from_csv(_read_text(_require(args, config, sec, "surface")))
    kind = _setting(args, config, sec, "kind", "difference")
    reference = _setting(args, config, sec, "reference", "km")
    fit_path = _require(args, config, sec, "fit")
    data = _require(args, config, sec, "data")
    fitted, schema = formats.fit_from_json(_read_text(fit_path))
    dataset = _dataset_from_fit_schema(data, schema)
    if reference == "km":
        spec = ContrastSpec(kind=kind, reference="km")
        km = kaplan_meier(dataset.times, dataset.status)
        result = contrast_surface(surface, spec, km=km)
    else:
        tau = float(_setting(args, config, sec, "tau", reference))
        spec = ContrastSpec(kind=kind, reference=tau)
        tau_surface = counterfactual_surface(fitted, dataset, np.array([tau]), surface.t_grid)
        result = contrast_surface(surface, spec, tau_row=tau_surface.values[0])
    _write_text(_setting(args, config, sec, "out"), formats.contrast_to_csv(result))
    return 0


def _require(args, config, section, key):
    value = _setting(args, config, section, key)
    if value is None:
        raise ContsurvError(f"--{key} is required")
    return value


def _estimand_curves(surface, kind, at=None, p=None, horizon=None):
    if kind == "landmark":
        values = _floats(at if at is not None else "")
        if not values:
            raise ContsurvError("--at is required for landmark")
        return tuple(landmark(surface, t) for t in values)
    if kind == "quantile":
        values = _floats(p if p is not None else "")
        if not values:
            raise ContsurvError("--p is required for quantile")
        return tuple(quantile_curve(surface, q) for q in values)
    if kind == "rmst":
        values = _floats(horizon if horizon is not None else "")
        if not values:
            raise ContsurvError("--horizon is required for rmst")
        return tuple(rmst_curve(surface, h) for h in values)
    raise ContsurvError(f"unknown estimand {kind!r}")


def _cmd_estimand(args, config):
    sec = "estimand"
    surface = formats.surface_from_csv(_read_text(_require(args, config, sec, "surface")))
    curves = _estimand_curves(
        surface,
        _setting(args, config, sec, "kind", "landmark"),
        at=_setting(args, config, sec, "at"),
        p=_setting(args, config, sec, "p"),
        horizon=_setting(args, config, sec, "horizon"),
    )
    _write_text(_setting(args, config, sec, "out"), formats.curves_to_csv(curves))
    return 0


def _plot_input(args, config, spec):
    sec = "plot"
    surface_path = _setting(args, config, sec, "surface")
    contrast_path = _setting(args, config, sec, "contrast")
    curves_path = _setting(args, config, sec, "curves")
    km_path = _setting(args, config, sec, "km")
    residuals_path = _setting(args, config, sec, "residuals")

    if spec.kind in ("area_continuous", "area_binned", "contour", "heatmap", "heatmap_binned"):
        if surface_path:
            return formats.surface_from_csv(_read_text(surface_path))
        if contrast_path:
            return formats.contrast_from_csv(_read_text(contrast_path))
        raise ContsurvError(f"plot kind {spec.kind} needs --surface or --contrast")
    if spec.kind == "km_curves":
        if not km_path:
            raise ContsurvError("plot kind km_curves needs --km")
        return CurveSet(formats.km_from_csv(_read_text(km_path)), x_label="time", y_label="survival")
    if spec.kind == "residual_scatter":
        if not residuals_path:
            raise ContsurvError("plot kind residual_scatter needs --residuals")
        groups, x_name = formats.residuals_from_csv(_read_text(residuals_path))
        column = _setting(args, config, sec, "column") or next(iter(groups))
        if column not in groups:
            raise ContsurvError(f"no residual column {column!r} in the input")
        x, y = groups[column]
        span = float(_setting(args, config, sec, "span", 0.75))
        grid, smooth = loess_overlay(x, y, span=span)
        return ResidualScatter(
            x=x, y=y, smooth_x=grid, smooth_y=smooth, x_label=x_name, y_label=f"residual ({column})"
        )
    if spec.kind == "value_curves":
        if curves_path:
            return CurveSet(
                formats.curves_from_csv(_read_text(curves_path), step=True),
                x_label="time",
                y_label="survival",
            )
        if surface_path:
            surface = formats.surface_from_csv(_read_text(surface_path))
            z_values = _setting(args, config, sec, "z-values")
            if z_values is None:
                raise ContsurvError("value_curves needs --z-values (or --curves)")
            curves = []
            for z in _floats(z_values):
                i = int(np.argmin(np.abs(surface.z_grid - z)))
                curves.append(
                    Curve(
                        x=surface.t_grid,
                        y=surface.values[i],
                        label=f"z={surface.z_grid[i]:g}",
                        level=float(surface.z_grid[i]),
                        step=True,
                    )
                )
            return CurveSet(tuple(curves), x_label="time", y_label="survival")
        raise ContsurvError("value_curves needs --surface or --curves")
    # landmark / quantile / rmst
    if curves_path:
        return CurveSet(formats.curves_from_csv(_read_text(curves_path)), x_label="z")
    if surface_path:
        surface = formats.surface_from_csv(_read_text(surface_path))
        curves = _estimand_curves(
            surface,
            spec.kind,
            at=_setting(args, config, sec, "at"),
            p=_setting(args, config, sec, "p"),
            horizon=_setting(args, config, sec, "horizon"),
        )
        return CurveSet(curves, x_label="z", y_label=spec.kind)
    raise ContsurvError(f"plot kind {spec.kind} needs --curves or --surface")


def _cmd_plot(args, config):
    sec = "plot"
    kind = _require(args, config, sec, "kind")
    color = _setting(args, config, sec, "color-stops")
    spec = PlotSpec(
        kind=kind,
        bins=int(_setting(args, config, sec, "bins", 10)),
        color_scale=tuple(_names(color)) if color else "sequential_default",
        width=int(_setting(args, config, sec, "width", 720)),
        height=int(_setting(args, config, sec, "height", 480)),
        facet=_setting(args, config, sec, "facet", "auto"),
        title=_setting(args, config, sec, "title", ""),
        xlabel=_setting(args, config, sec, "xlabel"),
        ylabel=_setting(args, config, sec, "ylabel"),
        ci_band=bool(_setting(args, config, sec, "ci-band", False)),
        opacity=float(_setting(args, config, sec, "opacity", 1.0)),
    )
    out = _require(args, config, sec, "out")
    result = render(_plot_input(args, config, spec), spec)
    _write_text(out, result.svg)
    data_out = _setting(args, config, sec, "data-out")
    if data_out is None and out not in (None, "-"):
        data_out = re.sub(r"\.svg$", "", out) + ".csv"
    if data_out:
        _write_text(data_out, result.data_csv)
    for warning in result.warnings:
        _info(f"warning: {warning}")
    return 0


def _pipeline_estimand(bindings, estimand, z, t, tau, p, horizon):
    def pipeline(ds):
        fitted = cox_fit(ds, bindings)
        if estimand == "survival":
            return survival_at(fitted, ds, z, t)
        if estimand in ("delta", "phi"):
            s_tau = survival_at(fitted, ds, tau, t)
            s_z = survival_at(fitted, ds, z, t)
            if estimand == "delta":
                return s_tau - s_z
            if s_z == 0.0:
                raise LambdaBeyondGrid("ratio undefined: zero denominator")
            return s_tau / s_z
        if estimand in ("delta-km", "phi-km"):
            s_km = float(kaplan_meier(ds.times, ds.status)(t))
            s_z = survival_at(fitted, ds, z, t)
            if estimand == "delta-km":
                return s_km - s_z
            if s_z == 0.0:
                raise LambdaBeyondGrid("ratio undefined: zero denominator")
            return s_km / s_z
        _, t_grid = default_grids(ds, fitted, z_points=2)
        surface = counterfactual_surface(fitted, ds, np.array([z]), t_grid)
        if estimand == "rmst":
            return float(rmst_curve(surface, horizon).y[0])
        if estimand == "quantile":
            curve = quantile_curve(surface, p)
            if not curve.defined[0]:
                raise LambdaBeyondGrid("quantile not reached within follow-up")
            return float(curve.y[0])
        raise ContsurvError(f"unknown estimand {estimand!r}")

    return pipeline


def _cmd_bootstrap(args, config):
    sec = "bootstrap"
    dataset, schema = _load_dataset(args, config, sec)
    dataset = _validated(dataset)
    bindings = _bindings(args, config, sec, schema["exposure"], schema["confounders"])
    estimand = _setting(args, config, sec, "estimand", "survival")
    z_list = _floats(_require(args, config, sec, "z"))
    t_raw = _setting(args, config, sec, "t")
    t_list = _floats(t_raw) if t_raw is not None else [None]
    tau = _setting(args, config, sec, "tau")
    p = _setting(args, config, sec, "p")
    horizon = _setting(args, config, sec, "horizon")
    if estimand in ("delta", "phi") and tau is None:
        raise ContsurvError(f"estimand {estimand} needs --tau")
    if estimand == "rmst" and horizon is None:
        raise ContsurvError("estimand rmst needs --horizon")
    if estimand == "quantile" and p is None:
        raise ContsurvError("estimand quantile needs --p")
    if estimand in ("survival", "delta", "phi", "delta-km", "phi-km") and t_raw is None:
        raise ContsurvError(f"estimand {estimand} needs --t")

    n_boot = int(_setting(args, config, sec, "n-boot", 1000))
    level = float(_setting(args, config, sec, "level", 0.95))
    seed = int(_setting(args, config, sec, "seed", 0))
    workers = _threads(args, config, sec)
    adjusted = "adjusted" if schema["confounders"] else "unadjusted"

    import csv as _csv
    import io as _io

    buf = _io.StringIO()
    writer = _csv.writer(buf, lineterminator="\n")
    writer.writerow(["model", "t", "z", "estimate", "se", "ci_lower", "ci_upper"])
    for z in z_list:
        for t in t_list:
            pipeline = _pipeline_estimand(
                bindings,
                estimand,
                z,
                t,
                float(tau) if tau is not None else None,
                float(p) if p is not None else None,
                float(horizon) if horizon is not None else None,
            )
            result = bootstrap(
                dataset, pipeline, n_boot=n_boot, level=level, seed=seed, n_workers=workers
            )
            t_label = t if t is not None else (horizon if estimand == "rmst" else p)
            writer.writerow(
                [
                    f"{estimand} ({adjusted})",
                    repr(float(t_label)) if t_label is not None else "",
                    repr(float(z)),
                    repr(result.point),
                    repr(result.se),
                    repr(result.ci_lower),
                    repr(result.ci_upper),
                ]
            )
            if result.n_failed:
                _info(f"z={z:g}: {result.n_failed}/{n_boot} replicates failed and were excluded")
    _write_text(_setting(args, config, sec, "out"), buf.getvalue())
    return 0


def _safe_name(name):
    return re.sub(r"[^A-Za-z0-9_.-]+", "-", name) or "column"


def _cmd_diagnose(args, config):
    sec = "diagnose"
    fitted, schema = formats.fit_from_json(_read_text(_require(args, config, sec, "fit")))
    dataset = _dataset_from_fit_schema(_require(args, config, sec, "data"), schema)
    kind = _setting(args, config, sec, "kind", "schoenfeld")
    span = float(_setting(args, config, sec, "span", 0.75))
    out_csv = _setting(args, config, sec, "out-csv")
    out_svg = _setting(args, config, sec, "out-svg")

    if kind == "schoenfeld":
        res = schoenfeld_residuals(fitted, dataset)
        csv_text = formats.residuals_to_csv(res.times, res.residuals, res.columns, x_name="time")
        groups = {name: (res.times, res.residuals[:, j]) for j, name in enumerate(res.columns)}
        x_label = "time"
    elif kind == "martingale":
        resid = martingale_residuals(dataset, fitted)
        name = dataset.exposure_name
        csv_text = formats.residuals_to_csv(
            dataset.exposure, resid[:, None], (name,), x_name=name
        )
        groups = {name: (dataset.exposure, resid)}
        x_label = dataset.exposure_name
    else:
        raise ContsurvError(f"unknown diagnostic {kind!r}")

    if out_csv:
        _write_text(out_csv, csv_text)
    if out_svg:
        multi = len(groups) > 1
        for name, (x, y) in groups.items():
            grid, smooth = loess_overlay(x, y, span=span)
            scatter = ResidualScatter(
                x=x, y=y, smooth_x=grid, smooth_y=smooth,
                x_label=x_label, y_label=f"residual ({name})",
            )
            result = render(scatter, PlotSpec(kind="residual_scatter", title=f"{kind}: {name}"))
            path = out_svg
            if multi:
                path = re.sub(r"\.svg$", "", out_svg) + f"_{_safe_name(name)}.svg"
            _write_text(path, result.svg)
            _info(f"wrote {path}")
    return 0


def build_parser():
    parser = _Parser(prog="contsurv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--config", help="TOML config file")
        return p

    p = add("simulate", _cmd_simulate, "generate synthetic survival data")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--baseline", choices=["exponential", "weibull"])
    p.add_argument("--rate", type=float)
    p.add_argument("--shape", type=float)
    p.add_argument("--scale", type=float)
    p.add_argument("--effect", choices=["linear", "quadratic"])
    p.add_argument("--beta", type=float)
    p.add_argument("--beta2", type=float)
    p.add_argument("--confounder-mu", type=float)
    p.add_argument("--confounder-sigma", type=float)
    p.add_argument("--confounder-gamma", type=float)
    p.add_argument("--confounder-alpha", type=float)
    p.add_argument("--censoring-rate", type=float)
    p.add_argument("--out")

    def add_data_flags(p):
        p.add_argument("--data")
        p.add_argument("--time")
        p.add_argument("--status")
        p.add_argument("--exposure")
        p.add_argument("--confounders")
        p.add_argument("--exposure-basis",
                       choices=["linear", "polynomial", "bspline", "natural_spline", "categorical"])
        p.add_argument("--exposure-df", type=int)
        p.add_argument("--exposure-degree", type=int)
        p.add_argument("--exposure-knots")
        p.add_argument("--exposure-boundary")
        p.add_argument("--exposure-cutpoints")

    p = add("fit", _cmd_fit, "fit a Cox model, write it as JSON")
    add_data_flags(p)
    p.add_argument("--out")

    p = add("surface", _cmd_surface, "evaluate the counterfactual survival surface")
    p.add_argument("--fit")
    p.add_argument("--data")
    p.add_argument("--z-points", type=int)
    p.add_argument("--z-values")
    p.add_argument("--t-values")
    p.add_argument("--threads", type=int)
    p.add_argument("--out")

    p = add("contrast", _cmd_contrast, "contrast the surface against a reference")
    p.add_argument("--surface")
    p.add_argument("--kind", choices=["difference", "ratio"])
    p.add_argument("--reference")
    p.add_argument("--tau", type=float)
    p.add_argument("--fit")
    p.add_argument("--data")
    p.add_argument("--out")

    p = add("estimand", _cmd_estimand, "landmark / quantile / RMST curves from a surface")
    p.add_argument("--surface")
    p.add_argument("--kind", choices=["landmark", "quantile", "rmst"])
    p.add_argument("--at")
    p.add_argument("--p")
    p.add_argument("--horizon")
    p.add_argument("--out")

    p = add("plot", _cmd_plot, "render a plot (SVG + data CSV)")
    p.add_argument("--kind")
    p.add_argument("--surface")
    p.add_argument("--contrast")
    p.add_argument("--curves")
    p.add_argument("--km")
    p.add_argument("--residuals")
    p.add_argument("--column")
    p.add_argument("--span", type=float)
    p.add_argument("--at")
    p.add_argument("--p")
    p.add_argument("--horizon")
    p.add_argument("--z-values")
    p.add_argument("--bins", type=int)
    p.add_argument("--color-stops")
    p.add_argument("--width", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--facet", choices=["auto", "off"])
    p.add_argument("--title")
    p.add_argument("--xlabel")
    p.add_argument("--ylabel")
    p.add_argument("--ci-band", action="store_const", const=True)
    p.add_argument("--opacity", type=float)
    p.add_argument("--out")
    p.add_argument("--data-out")

    p = add("bootstrap", _cmd_bootstrap, "bootstrap percentile CIs for scalar estimands")
    add_data_flags(p)
    p.add_argument("--estimand",
                   choices=["survival", "delta", "phi", "delta-km", "phi-km", "rmst", "quantile"])
    p.add_argument("--z")
    p.add_argument("--t")
    p.add_argument("--tau", type=float)
    p.add_argument("--p", type=float)
    p.add_argument("--horizon", type=float)
    p.add_argument("--n-boot", type=int)
    p.add_argument("--level", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--out")

    p = add("diagnose", _cmd_diagnose, "residual diagnostics (CSV + SVG)")
    p.add_argument("--fit")
    p.add_argument("--data")
    p.add_argument("--kind", choices=["schoenfeld", "martingale"])
    p.add_argument("--span", type=float)
    p.add_argument("--out-csv")
    p.add_argument("--out-svg")

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 1
    try:
        config = _load_config(getattr(args, "config", None))
        return args.func(args, config)
    except ContsurvError as exc:
        _info(f"error: {exc}")
        return 2
    except OSError as exc:
        _info(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
