"""File formats: long-form CSVs for surfaces and curves, JSON for fitted models.

All CSVs are comma-delimited with a header row, ``.`` decimal separator and
UTF-8 encoding; floats are written with ``repr`` so values round-trip exactly.
The surface CSV (``z,t,survival,extrapolated``) doubles as the renderer's
standalone input format.
"""

import csv
import io
import json

import numpy as np

from .basis import BasisSpec
from .cox import CoxFit
from .design import Design
from .errors import InconsistentGrid, MissingColumn
from .estimands import ContrastSurface, Curve
from .gcomp import SurvivalSurface
from .stepfun import StepFunction


def _writer(buf):
    return csv.writer(buf, lineterminator="\n")


def _require_columns(fieldnames, columns):
    for col in columns:
        if col not in (fieldnames or []):
            raise MissingColumn(col)


# --- survival surface ---


def surface_to_csv(surface):
    buf = io.StringIO()
    w = _writer(buf)
    w.writerow(["z", "t", "survival", "extrapolated"])
    for i, z in enumerate(surface.z_grid):
        for j, t in enumerate(surface.t_grid):
            w.writerow(
                [
                    repr(float(z)),
                    repr(float(t)),
                    repr(float(surface.values[i, j])),
                    int(surface.extrapolated[i]),
                ]
            )
    return buf.getvalue()


def surface_from_csv(text):
    reader = csv.DictReader(io.StringIO(text))
    _require_columns(reader.fieldnames, ["z", "t", "survival"])
    cells = {}
    extrap = {}
    for row in reader:
        z = float(row["z"])
        t = float(row["t"])
        cells[(z, t)] = float(row["survival"])
        extrap[z] = bool(int(row.get("extrapolated") or 0))
    z_grid = np.array(sorted({z for z, _ in cells}))
    t_grid = np.array(sorted({t for _, t in cells}))
    values = np.empty((z_grid.size, t_grid.size))
    for i, z in enumerate(z_grid):
        for j, t in enumerate(t_grid):
            if (z, t) not in cells:
                raise InconsistentGrid(f"missing surface cell at z={z:g}, t={t:g}")
            values[i, j] = cells[(z, t)]
    return SurvivalSurface(
        z_grid=z_grid,
        t_grid=t_grid,
        values=values,
        extrapolated=np.array([extrap[z] for z in z_grid]),
    )


# --- contrast surface ---


def contrast_to_csv(contrast):
    buf = io.StringIO()
    w = _writer(buf)
    w.writerow(["z", "t", "value", "defined", "estimand"])
    for i, z in enumerate(contrast.z_grid):
        for j, t in enumerate(contrast.t_grid):
            defined = bool(contrast.defined[i, j])
            w.writerow(
                [
                    repr(float(z)),
                    repr(float(t)),
                    repr(float(contrast.values[i, j])) if defined else "",
                    int(defined),
                    contrast.reference_label,
                ]
            )
    return buf.getvalue()


def contrast_from_csv(text):
    reader = csv.DictReader(io.StringIO(text))
    _require_columns(reader.fieldnames, ["z", "t", "value", "defined"])
    cells = {}
    label = ""
    for row in reader:
        z = float(row["z"])
        t = float(row["t"])
        defined = bool(int(row["defined"]))
        cells[(z, t)] = (float(row["value"]) if defined else np.nan, defined)
        label = row.get("estimand") or label
    z_grid = np.array(sorted({z for z, _ in cells}))
    t_grid = np.array(sorted({t for _, t in cells}))
    values = np.full((z_grid.size, t_grid.size), np.nan)
    defined = np.zeros((z_grid.size, t_grid.size), dtype=bool)
    for i, z in enumerate(z_grid):
        for j, t in enumerate(t_grid):
            if (z, t) not in cells:
                raise InconsistentGrid(f"missing contrast cell at z={z:g}, t={t:g}")
            values[i, j], defined[i, j] = cells[(z, t)]
    kind = "ratio" if label.startswith("phi") else "difference"
    return ContrastSurface(
        z_grid=z_grid,
        t_grid=t_grid,
        values=values,
        defined=defined,
        kind=kind,
        reference_label=label,
    )


# --- curves ---


def curves_to_csv(curves):
    buf = io.StringIO()
    w = _writer(buf)
    w.writerow(["label", "level", "x", "y", "lower", "upper", "defined"])
    for curve in curves:
        for i in range(curve.x.size):
            w.writerow(
                [
                    curve.label,
                    "" if curve.level is None else repr(float(curve.level)),
                    repr(float(curve.x[i])),
                    repr(float(curve.y[i])) if curve.defined[i] else "",
                    "" if curve.lower is None else repr(float(curve.lower[i])),
                    "" if curve.upper is None else repr(float(curve.upper[i])),
                    int(curve.defined[i]),
                ]
            )
    return buf.getvalue()


def curves_from_csv(text, step=False):
    reader = csv.DictReader(io.StringIO(text))
    _require_columns(reader.fieldnames, ["label", "x", "y", "defined"])
    grouped = {}
    for row in reader:
        key = (row["label"], row.get("level") or "")
        grouped.setdefault(key, []).append(row)
    curves = []
    for (label, level), rows in grouped.items():
        x = np.array([float(r["x"]) for r in rows])
        defined = np.array([bool(int(r["defined"])) for r in rows])
        y = np.array([float(r["y"]) if d else np.nan for r, d in zip(rows, defined)])
        has_band = any((r.get("lower") or "") != "" for r in rows)
        lower = np.array([float(r["lower"]) for r in rows]) if has_band else None
        upper = np.array([float(r["upper"]) for r in rows]) if has_band else None
        curves.append(
            Curve(
                x=x,
                y=y,
                defined=defined,
                label=label,
                level=float(level) if level else None,
                lower=lower,
                upper=upper,
                step=step,
            )
        )
    return tuple(curves)


# --- Kaplan-Meier curves ---


def km_to_csv(curve, band=None, label=""):
    """Export a KM step function (plus optional band) per event time."""
    buf = io.StringIO()
    w = _writer(buf)
    w.writerow(["label", "time", "survival", "ci_lower", "ci_upper"])
    lower, upper = band if band is not None else (None, None)
    for i, t in enumerate(curve.knots):
        w.writerow(
            [
                label,
                repr(float(t)),
                repr(float(curve.values[i])),
                "" if lower is None else repr(float(lower.values[i])),
                "" if upper is None else repr(float(upper.values[i])),
            ]
        )
    return buf.getvalue()


def km_from_csv(text):
    reader = csv.DictReader(io.StringIO(text))
    _require_columns(reader.fieldnames, ["time", "survival"])
    grouped = {}
    for row in reader:
        grouped.setdefault(row.get("label") or "", []).append(row)
    curves = []
    for label, rows in grouped.items():
        t = np.array([float(r["time"]) for r in rows])
        s = np.array([float(r["survival"]) for r in rows])
        has_band = any((r.get("ci_lower") or "") != "" for r in rows)
        lower = np.array([float(r["ci_lower"]) for r in rows]) if has_band else None
        upper = np.array([float(r["ci_upper"]) for r in rows]) if has_band else None
        curves.append(
            Curve(x=t, y=s, label=label, lower=lower, upper=upper, step=True)
        )
    return tuple(curves)


# --- residuals ---


def residuals_to_csv(x, residuals, columns, x_name="x"):
    buf = io.StringIO()
    w = _writer(buf)
    w.writerow(["column", x_name, "residual"])
    residuals = np.asarray(residuals, float).reshape(len(x), len(columns))
    for j, name in enumerate(columns):
        for i in range(len(x)):
            w.writerow([name, repr(float(x[i])), repr(float(residuals[i, j]))])
    return buf.getvalue()


def residuals_from_csv(text):
    reader = csv.DictReader(io.StringIO(text))
    fields = reader.fieldnames or []
    if len(fields) != 3 or fields[0] != "column" or fields[2] != "residual":
        raise MissingColumn("column/residual")
    grouped = {}
    for row in reader:
        grouped.setdefault(row["column"], []).append(
            (float(row[fields[1]]), float(row["residual"]))
        )
    return {
        name: (np.array([p[0] for p in pts]), np.array([p[1] for p in pts]))
        for name, pts in grouped.items()
    }, fields[1]


# --- fitted model document ---


def _spec_to_dict(spec):
    out = {"kind": spec.kind}
    for name in ("degree", "df"):
        if getattr(spec, name) is not None:
            out[name] = getattr(spec, name)
    for name in ("knots", "boundary", "cutpoints"):
        if getattr(spec, name) is not None:
            out[name] = list(getattr(spec, name))
    return out


def _spec_from_dict(d):
    return BasisSpec(
        kind=d.get("kind", "linear"),
        degree=d.get("degree"),
        df=d.get("df"),
        knots=tuple(d["knots"]) if "knots" in d else None,
        boundary=tuple(d["boundary"]) if "boundary" in d else None,
        cutpoints=tuple(d["cutpoints"]) if "cutpoints" in d else None,
    )


def fit_to_json(fit, schema=None):
    """Serialize a CoxFit (plus the CLI's column schema) as a JSON document."""
    design = fit.design
    doc = {
        "coefficients": [float(b) for b in fit.coefficients],
        "column_names": list(design.column_names),
        "design": [
            {"variable": v, "spec": _spec_to_dict(s)}
            for v, s in zip(design.variables, design.specs)
        ],
        "baseline": {
            "knots": [float(t) for t in fit.baseline_cumhaz.knots],
            "values": [float(v) for v in fit.baseline_cumhaz.values],
        },
        "covariance": [[float(v) for v in row] for row in fit.covariance],
        "loglik_null": fit.loglik_null,
        "loglik_final": fit.loglik_final,
        "iterations": fit.iterations,
        "converged": fit.converged,
    }
    if schema is not None:
        doc["schema"] = dict(schema)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _spec_width(spec):
    if spec.kind == "categorical":
        return len(spec.cutpoints) - 2
    if spec.kind in ("bspline", "natural_spline"):
        return spec.effective_df
    return spec.effective_degree if spec.kind == "polynomial" else 1


def fit_from_json(text):
    """Rebuild (CoxFit, schema) from :func:`fit_to_json` output."""
    doc = json.loads(text)
    variables = tuple(entry["variable"] for entry in doc["design"])
    specs = tuple(_spec_from_dict(entry["spec"]) for entry in doc["design"])
    column_names = tuple(doc["column_names"])
    slices = []
    start = 0
    for spec in specs:
        width = _spec_width(spec)
        slices.append(slice(start, start + width))
        start += width
    design = Design(variables, specs, column_names, tuple(slices))
    baseline = StepFunction(
        np.array(doc["baseline"]["knots"]),
        np.array(doc["baseline"]["values"]),
        value_before_first=0.0,
    )
    cov = np.array(doc["covariance"], dtype=float).reshape(len(column_names), len(column_names))
    fit = CoxFit(
        coefficients=np.array(doc["coefficients"], dtype=float),
        baseline_cumhaz=baseline,
        covariance=cov,
        loglik_null=float(doc["loglik_null"]),
        loglik_final=float(doc["loglik_final"]),
        iterations=int(doc["iterations"]),
        converged=bool(doc["converged"]),
        design=design,
    )
    return fit, doc.get("schema")
