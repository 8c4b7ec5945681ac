"""Plot catalogue: survival/contrast surfaces and summary curves as SVG.

Every plot is a pure function of its inputs: fixed layout, fixed number
formatting, explicit gradient stops and insertion-ordered elements make the
output byte-identical across runs. Each document embeds a ``<metadata>``
block with the panel rectangles and data domains, so plotted geometry can be
mapped back to data coordinates, and every rendered value is also returned as
CSV alongside the SVG.

Time-indexed geometry is always drawn as steps — the underlying estimates are
step functions, and smoothing them would invent data between event times.

Area plots require the exposure effect to be monotone at every time; a
non-monotone but time-consistent effect is split into monotone facets
(``facet="auto"``), and a shape that changes over time cannot be drawn as an
area at all.
"""

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from ..errors import InconsistentGrid, NonMonotoneEffect, ShapeInconsistentAcrossTime
from ..estimands import ContrastSurface, Curve
from ..gcomp import SurvivalSurface
from .scale import SEQUENTIAL_DEFAULT, color_at, fmt_tick, nice_ticks
from .svg import SvgCanvas

SURFACE_KINDS = ("area_continuous", "area_binned", "contour", "heatmap", "heatmap_binned")
CURVE_KINDS = ("landmark", "quantile", "rmst", "value_curves", "km_curves")
KINDS = SURFACE_KINDS + CURVE_KINDS + ("residual_scatter",)
BINNED_KINDS = ("area_binned", "contour", "heatmap_binned")

MARGIN_LEFT = 62
MARGIN_RIGHT = 118
MARGIN_BOTTOM = 52
GUTTER = 16
LINE_COLOR = "#20558a"
SMOOTH_COLOR = "#b2182b"
MASK_PATTERN = "cell-mask"
EXTRAP_PATTERN = "extrapolation"


@dataclass(frozen=True)
class PlotSpec:
    kind: str
    bins: int = 10
    color_scale: object = "sequential_default"
    width: int = 720
    height: int = 480
    facet: str = "auto"
    title: str = ""
    xlabel: str | None = None
    ylabel: str | None = None
    ci_band: bool = False
    opacity: float = 1.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown plot kind {self.kind!r}")
        if self.kind in BINNED_KINDS and self.bins < 2:
            raise ValueError("binned plot kinds need bins >= 2")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("plot dimensions must be positive")
        if self.facet not in ("auto", "off"):
            raise ValueError("facet must be 'auto' or 'off'")
        if not 0.0 < self.opacity <= 1.0:
            raise ValueError("opacity must be in (0, 1]")

    @property
    def stops(self):
        if self.color_scale == "sequential_default":
            return SEQUENTIAL_DEFAULT
        return tuple(self.color_scale)


@dataclass(frozen=True)
class RenderOutput:
    svg: str
    data_csv: str
    warnings: tuple


@dataclass(frozen=True)
class CurveSet:
    curves: tuple
    x_label: str = ""
    y_label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        if not self.curves:
            raise InconsistentGrid("curve set is empty")


@dataclass(frozen=True)
class ResidualScatter:
    x: np.ndarray
    y: np.ndarray
    smooth_x: np.ndarray
    smooth_y: np.ndarray
    x_label: str = ""
    y_label: str = "residual"


def monotone_segments(surface, tol=1e-8):
    """Split the z grid into ranges with a single effect direction.

    The segmentation is read off the landmark curve at the last grid time
    (near-ties within ``tol`` count as flat and merge into the neighboring
    segment) and must hold at every other time; if it does not, no faceted
    area plot can represent the surface.

    Returns a list of inclusive index pairs ``(start, end)``; consecutive
    segments share their boundary index, so the facets tile the z range.
    """
    v = surface.values
    if v.shape[0] < 2:
        return [(0, 0)]
    last = v[:, -1]
    d = np.diff(last)
    signs = np.where(np.abs(d) <= tol, 0, np.sign(d)).astype(int)
    bounds = [0]
    current = 0
    for i, s in enumerate(signs):
        if s == 0:
            continue
        if current == 0:
            current = s
        elif s != current:
            bounds.append(i)
            current = s
    bounds.append(v.shape[0] - 1)
    segments = list(zip(bounds[:-1], bounds[1:]))

    all_diffs = np.diff(v, axis=0)
    for a, b in segments:
        seg_signs = signs[a:b]
        nonzero = seg_signs[seg_signs != 0]
        direction = int(nonzero[0]) if nonzero.size else 0
        dd = all_diffs[a:b, :]
        if direction > 0:
            ok = np.all(dd >= -tol)
        elif direction < 0:
            ok = np.all(dd <= tol)
        else:
            ok = np.all(np.abs(dd) <= tol)
        if not ok:
            raise ShapeInconsistentAcrossTime()
    return segments


# --- layout helpers ---


@dataclass
class _Panel:
    x: float
    y: float
    w: float
    h: float
    x_dom: tuple
    y_dom: tuple

    def px(self, v):
        a, b = self.x_dom
        return self.x + (np.asarray(v, float) - a) / (b - a) * self.w

    def py(self, v):
        a, b = self.y_dom
        return self.y + (1.0 - (np.asarray(v, float) - a) / (b - a)) * self.h

    def meta(self, **extra):
        entry = {
            "rect": [self.x, self.y, self.w, self.h],
            "x_domain": list(self.x_dom),
            "y_domain": list(self.y_dom),
        }
        entry.update(extra)
        return entry


def _widen(lo, hi):
    if hi > lo:
        return (float(lo), float(hi))
    pad = max(abs(lo), 1.0) * 0.5
    return (float(lo) - pad, float(hi) + pad)


def _layout(spec, n_panels, x_doms, y_dom):
    top = 40 if spec.title else 22
    inner_w = spec.width - MARGIN_LEFT - MARGIN_RIGHT - GUTTER * (n_panels - 1)
    panel_w = inner_w / n_panels
    h = spec.height - top - MARGIN_BOTTOM
    panels = []
    for i in range(n_panels):
        panels.append(
            _Panel(
                x=MARGIN_LEFT + i * (panel_w + GUTTER),
                y=top,
                w=panel_w,
                h=h,
                x_dom=_widen(*x_doms[i]),
                y_dom=_widen(*y_dom),
            )
        )
    return panels


def _draw_frame(c, panel, xlabel, ylabel, y_labels=True):
    c.rect(panel.x, panel.y, panel.w, panel.h, fill="none", stroke="#888888")
    for v in nice_ticks(*panel.x_dom):
        x = float(panel.px(v))
        c.line(x, panel.y + panel.h, x, panel.y + panel.h + 4, stroke="#888888")
        c.text(x, panel.y + panel.h + 16, fmt_tick(v), anchor="middle")
    for v in nice_ticks(*panel.y_dom):
        y = float(panel.py(v))
        c.line(panel.x - 4, y, panel.x, y, stroke="#888888")
        if y_labels:
            c.text(panel.x - 7, y + 3.5, fmt_tick(v), anchor="end")
    c.text(panel.x + panel.w / 2, panel.y + panel.h + 34, xlabel, anchor="middle", size=12)
    if y_labels:
        c.text(
            panel.x - 44,
            panel.y + panel.h / 2,
            ylabel,
            anchor="middle",
            size=12,
            rotate=-90.0,
        )


def _draw_title(c, spec):
    if spec.title:
        c.text(spec.width / 2, 20, spec.title, anchor="middle", size=14, color="#111111")


def _legend_continuous(c, spec, domain, label, top):
    x = spec.width - MARGIN_RIGHT + 30
    h = spec.height - top - MARGIN_BOTTOM
    strips = 64
    for i in range(strips):
        u = (i + 0.5) / strips
        y = top + h * (1.0 - (i + 1) / strips)
        c.rect(x, y, 14, h / strips + 0.5, fill=color_at(spec.stops, u))
    c.rect(x, top, 14, h, fill="none", stroke="#888888")
    lo, hi = domain
    for v in nice_ticks(lo, hi, target=5):
        u = (v - lo) / (hi - lo) if hi > lo else 0.5
        y = top + h * (1.0 - u)
        c.line(x + 14, y, x + 18, y, stroke="#888888")
        c.text(x + 21, y + 3.5, fmt_tick(v), anchor="start")
    c.text(x + 7, top - 8, label, anchor="middle", size=11)


def _legend_discrete(c, spec, domain, label, top, bins):
    x = spec.width - MARGIN_RIGHT + 30
    h = spec.height - top - MARGIN_BOTTOM
    box = h / bins
    lo, hi = domain
    for b in range(bins):
        y = top + h - (b + 1) * box
        c.rect(x, y, 14, box, fill=color_at(spec.stops, (b + 0.5) / bins), stroke="#888888")
    stride = max(1, bins // 5)
    for b in range(0, bins + 1, stride):
        v = lo + (hi - lo) * b / bins
        y = top + h - b * box
        c.text(x + 21, y + 3.5, fmt_tick(v), anchor="start")
    c.text(x + 7, top - 8, label, anchor="middle", size=11)


def _legend_items(c, spec, items, top):
    x = spec.width - MARGIN_RIGHT + 24
    for i, (color, label) in enumerate(items):
        y = top + 10 + i * 18
        c.rect(x, y - 8, 12, 10, fill=color)
        c.text(x + 16, y, label, anchor="start")
    return


def _step_points(t, y):
    pts = [(float(t[0]), float(y[0]))]
    for j in range(1, len(t)):
        pts.append((float(t[j]), float(y[j - 1])))
        pts.append((float(t[j]), float(y[j])))
    return pts


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _surface_fields(obj):
    if isinstance(obj, SurvivalSurface):
        defined = np.ones(obj.values.shape, dtype=bool)
        extrap = obj.extrapolated
        return obj.z_grid, obj.t_grid, obj.values, defined, extrap, (0.0, 1.0), "survival"
    if isinstance(obj, ContrastSurface):
        defined = obj.defined
        if not np.any(defined):
            raise InconsistentGrid("contrast surface has no defined cells")
        vals = obj.values[defined]
        extrap = (
            obj.extrapolated
            if obj.extrapolated is not None
            else np.zeros(obj.z_grid.size, dtype=bool)
        )
        return (
            obj.z_grid,
            obj.t_grid,
            obj.values,
            defined,
            extrap,
            (float(np.min(vals)), float(np.max(vals))),
            obj.reference_label,
        )
    raise InconsistentGrid(f"cannot render {type(obj).__name__} as a surface plot")


def _surface_csv(z, t, values, defined, extrap):
    rows = []
    for i in range(z.size):
        for j in range(t.size):
            rows.append(
                [
                    repr(float(z[i])),
                    repr(float(t[j])),
                    "" if not defined[i, j] else repr(float(values[i, j])),
                    int(defined[i, j]),
                    int(extrap[i]),
                ]
            )
    return _csv_text(["z", "t", "value", "defined", "extrapolated"], rows)


# --- area plots ---


def _area_panels(obj, spec, warnings):
    segments = monotone_segments(obj)
    if len(segments) > 1 and spec.facet == "off":
        raise NonMonotoneEffect(
            f"the effect is not monotone in the exposure ({len(segments)} monotone "
            "ranges); enable faceting or use a contour/heatmap"
        )
    if len(segments) > 1:
        warnings.append(f"non-monotone effect split into {len(segments)} facets")
    return segments


def _render_area(obj, spec):
    warnings = []
    z, t, values, defined, extrap, vdom, vlabel = _surface_fields(obj)
    if z.size < 2 or t.size < 2:
        raise InconsistentGrid("area plots need at least 2 grid points per axis")
    if not np.all(defined):
        raise InconsistentGrid(
            "surface has undefined cells; an area plot cannot mask them — "
            "use a contour or heatmap"
        )
    segments = _area_panels(obj, spec, warnings)
    ydom = (0.0, 1.0) if isinstance(obj, SurvivalSurface) else (
        min(0.0, float(np.min(values))),
        max(0.0, float(np.max(values))),
    )
    panels = _layout(spec, len(segments), [(t[0], t[-1])] * len(segments), ydom)

    c = SvgCanvas(spec.width, spec.height)
    c.hatch_pattern(EXTRAP_PATTERN, "#ffffff")
    _draw_title(c, spec)
    zdom = (float(z[0]), float(z[-1]))
    binned = spec.kind == "area_binned"
    meta_panels = []
    extrap_noted = False

    for p_idx, ((a, b), panel) in enumerate(zip(segments, panels)):
        if binned:
            boundaries = np.linspace(z[a], z[b], spec.bins + 1)
            idx = [a + int(np.argmin(np.abs(z[a : b + 1] - v))) for v in boundaries]
            layers = []
            for lo_i, hi_i in zip(idx[:-1], idx[1:]):
                if hi_i <= lo_i:
                    warnings.append("z grid too coarse for the requested bins; bin skipped")
                    continue
                layers.append((lo_i, hi_i))
        else:
            layers = [(k, k + 1) for k in range(a, b)]

        for lo_i, hi_i in layers:
            zmid = (z[lo_i] + z[hi_i]) / 2.0
            u = (zmid - zdom[0]) / (zdom[1] - zdom[0]) if zdom[1] > zdom[0] else 0.5
            fwd = _step_points(panel.px(t), panel.py(values[lo_i]))
            back = _step_points(panel.px(t), panel.py(values[hi_i]))
            pts = fwd + back[::-1]
            prefix = "layer-bin" if binned else "layer"
            c.polygon(
                pts,
                fill=color_at(spec.stops, u),
                opacity=spec.opacity,
                elem_id=f"{prefix}-{lo_i:03d}",
            )
            if extrap[lo_i] or extrap[hi_i]:
                c.polygon(pts, fill=f"url(#{EXTRAP_PATTERN})")
                extrap_noted = True
        _draw_frame(
            c,
            panel,
            spec.xlabel or "time",
            spec.ylabel or vlabel,
            y_labels=p_idx == 0,
        )
        if len(segments) > 1:
            c.text(
                panel.x + panel.w / 2,
                panel.y - 6,
                f"z in [{z[a]:g}, {z[b]:g}]",
                anchor="middle",
            )
        meta_panels.append(panel.meta(z_domain=[float(z[a]), float(z[b])], z_indices=[int(a), int(b)]))

    if extrap_noted:
        warnings.append("some layers use exposure values outside the observed range")
    if binned:
        _legend_discrete(c, spec, zdom, "z", panels[0].y, spec.bins)
    else:
        _legend_continuous(c, spec, zdom, "z", panels[0].y)
    c.metadata(json.dumps({"panels": meta_panels}, sort_keys=True))
    return RenderOutput(
        svg=c.tostring(),
        data_csv=_surface_csv(z, t, values, defined, extrap),
        warnings=tuple(warnings),
    )


# --- raster plots (contour / heatmap / binned heatmap) ---


def _render_raster(obj, spec):
    warnings = []
    z, t, values, defined, extrap, vdom, vlabel = _surface_fields(obj)
    if z.size < 2 or t.size < 2:
        raise InconsistentGrid("raster plots need at least 2 grid points per axis")
    vdom = _widen(*vdom)
    panels = _layout(spec, 1, [(t[0], t[-1])], (z[0], z[-1]))
    panel = panels[0]
    y_edges = np.concatenate([[z[0]], (z[:-1] + z[1:]) / 2.0, [z[-1]]])

    c = SvgCanvas(spec.width, spec.height)
    c.hatch_pattern(MASK_PATTERN, "#999999")
    c.hatch_pattern(EXTRAP_PATTERN, "#ffffff")
    _draw_title(c, spec)

    binned = spec.kind in ("contour", "heatmap_binned")

    def cell_color(v):
        u = (v - vdom[0]) / (vdom[1] - vdom[0])
        if binned:
            b = min(int(u * spec.bins), spec.bins - 1)
            u = (b + 0.5) / spec.bins
        return color_at(spec.stops, u)

    n_masked = 0
    if spec.kind == "contour":
        # iso-bands: merge contiguous same-bin cells along z, one column per
        # time segment
        for j in range(t.size - 1):
            x0 = float(panel.px(t[j]))
            x1 = float(panel.px(t[j + 1]))
            k = 0
            while k < z.size:
                k2 = k
                color = cell_color(values[k, j]) if defined[k, j] else None
                while (
                    k2 + 1 < z.size
                    and defined[k2 + 1, j] == defined[k, j]
                    and (color is None or cell_color(values[k2 + 1, j]) == color)
                ):
                    k2 += 1
                y1 = float(panel.py(y_edges[k]))
                y0 = float(panel.py(y_edges[k2 + 1]))
                fill = color if color is not None else f"url(#{MASK_PATTERN})"
                if color is None:
                    n_masked += k2 - k + 1
                c.rect(x0, y0, x1 - x0, y1 - y0, fill=fill)
                k = k2 + 1
    else:
        # heatmaps: one cell per (t, z), merging runs of identical color along t
        for k in range(z.size):
            y1 = float(panel.py(y_edges[k]))
            y0 = float(panel.py(y_edges[k + 1]))
            j = 0
            while j < t.size - 1:
                j2 = j
                color = cell_color(values[k, j]) if defined[k, j] else None
                while (
                    j2 + 1 < t.size - 1
                    and defined[k, j2 + 1] == defined[k, j]
                    and (color is None or cell_color(values[k, j2 + 1]) == color)
                ):
                    j2 += 1
                x0 = float(panel.px(t[j]))
                x1 = float(panel.px(t[j2 + 1]))
                fill = color if color is not None else f"url(#{MASK_PATTERN})"
                if color is None:
                    n_masked += j2 - j + 1
                c.rect(x0, y0, x1 - x0, y1 - y0, fill=fill)
                j = j2 + 1

    for k in range(z.size):
        if extrap[k]:
            y1 = float(panel.py(y_edges[k]))
            y0 = float(panel.py(y_edges[k + 1]))
            c.rect(panel.x, y0, panel.w, y1 - y0, fill=f"url(#{EXTRAP_PATTERN})")
    if np.any(extrap):
        warnings.append("some exposure rows lie outside the observed range")
    if n_masked:
        warnings.append(f"{n_masked} undefined cells masked")

    _draw_frame(c, panel, spec.xlabel or "time", spec.ylabel or "z")
    if binned:
        _legend_discrete(c, spec, vdom, vlabel, panel.y, spec.bins)
    else:
        _legend_continuous(c, spec, vdom, vlabel, panel.y)
    c.metadata(json.dumps({"panels": [panel.meta()]}, sort_keys=True))
    return RenderOutput(
        svg=c.tostring(),
        data_csv=_surface_csv(z, t, values, defined, extrap),
        warnings=tuple(warnings),
    )


# --- curve plots ---


def _curves_csv(curves):
    rows = []
    for curve in curves:
        for i in range(curve.x.size):
            rows.append(
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
    return _csv_text(["label", "level", "x", "y", "lower", "upper", "defined"], rows)


def _curve_color(spec, curves, index):
    levels = [c.level for c in curves]
    if len(curves) == 1:
        return color_at(spec.stops, 0.5)
    if all(l is not None for l in levels):
        lo, hi = min(levels), max(levels)
        u = (levels[index] - lo) / (hi - lo) if hi > lo else 0.5
        return color_at(spec.stops, u)
    return color_at(spec.stops, index / (len(curves) - 1))


def _defined_runs(mask):
    runs = []
    start = None
    for i, ok in enumerate(mask):
        if ok and start is None:
            start = i
        elif not ok and start is not None:
            runs.append((start, i))
            start = None
    if start is not None:
        runs.append((start, len(mask)))
    return runs


def _render_curveset(obj, spec):
    warnings = []
    curves = obj.curves
    xs = np.concatenate([c.x for c in curves])
    x_dom = (float(np.min(xs)), float(np.max(xs)))
    step = any(c.step for c in curves)
    if spec.kind in ("landmark", "value_curves", "km_curves"):
        y_dom = (0.0, 1.0)
    else:
        ys = [c.y[c.defined] for c in curves] + [
            c.upper[c.defined] for c in curves if c.upper is not None
        ]
        ys = np.concatenate([y for y in ys if y.size]) if ys else np.array([0.0, 1.0])
        if ys.size == 0:
            raise InconsistentGrid("no defined points to plot")
        y_dom = (min(0.0, float(np.min(ys))), float(np.max(ys)))

    panel = _layout(spec, 1, [x_dom], y_dom)[0]
    c = SvgCanvas(spec.width, spec.height)
    _draw_title(c, spec)
    legend = []
    for i, curve in enumerate(curves):
        color = _curve_color(spec, curves, i)
        if not np.any(curve.defined):
            warnings.append(f"curve {curve.label!r} has no defined points")
            continue
        for lo_run, hi_run in _defined_runs(curve.defined):
            x = curve.x[lo_run:hi_run]
            y = curve.y[lo_run:hi_run]
            if spec.ci_band and curve.lower is not None and curve.upper is not None:
                lo_band = curve.lower[lo_run:hi_run]
                hi_band = curve.upper[lo_run:hi_run]
                if curve.step:
                    band = _step_points(panel.px(x), panel.py(lo_band)) + _step_points(
                        panel.px(x), panel.py(hi_band)
                    )[::-1]
                else:
                    band = list(zip(panel.px(x), panel.py(lo_band))) + list(
                        zip(panel.px(x), panel.py(hi_band))
                    )[::-1]
                c.polygon(band, fill=color, opacity=0.25)
            if curve.step:
                pts = _step_points(panel.px(x), panel.py(y))
            else:
                pts = list(zip(panel.px(x), panel.py(y)))
            if len(pts) == 1:
                c.circle(pts[0][0], pts[0][1], 2.5, fill=color)
            else:
                c.polyline(pts, stroke=color, stroke_width=1.8, opacity=spec.opacity)
        if curve.label:
            legend.append((color, curve.label))
    if any(not np.all(c_.defined) for c_ in curves):
        warnings.append("undefined points left blank")

    default_x = "time" if step else "z"
    _draw_frame(c, panel, spec.xlabel or obj.x_label or default_x, spec.ylabel or obj.y_label or spec.kind)
    if legend:
        _legend_items(c, spec, legend, panel.y)
    c.metadata(json.dumps({"panels": [panel.meta()]}, sort_keys=True))
    return RenderOutput(
        svg=c.tostring(), data_csv=_curves_csv(curves), warnings=tuple(warnings)
    )


def _render_scatter(obj, spec):
    x = np.asarray(obj.x, float)
    y = np.asarray(obj.y, float)
    if x.size == 0:
        raise InconsistentGrid("no points to plot")
    y_all = np.concatenate([y, np.asarray(obj.smooth_y, float)])
    panel = _layout(
        spec,
        1,
        [(float(np.min(x)), float(np.max(x)))],
        (min(0.0, float(np.min(y_all))), max(0.0, float(np.max(y_all)))),
    )[0]
    c = SvgCanvas(spec.width, spec.height)
    _draw_title(c, spec)
    zero_y = float(panel.py(0.0))
    c.line(panel.x, zero_y, panel.x + panel.w, zero_y, stroke="#aaaaaa", dashed=True)
    for xi, yi in zip(panel.px(x), panel.py(y)):
        c.circle(float(xi), float(yi), 2.2, fill=LINE_COLOR, opacity=0.55)
    pts = list(zip(panel.px(np.asarray(obj.smooth_x, float)), panel.py(np.asarray(obj.smooth_y, float))))
    if len(pts) >= 2:
        c.polyline(pts, stroke=SMOOTH_COLOR, stroke_width=2.0)
    _draw_frame(c, panel, spec.xlabel or obj.x_label, spec.ylabel or obj.y_label)
    c.metadata(json.dumps({"panels": [panel.meta()]}, sort_keys=True))
    rows = [["point", repr(float(a)), repr(float(b))] for a, b in zip(x, y)]
    rows += [
        ["smooth", repr(float(a)), repr(float(b))]
        for a, b in zip(obj.smooth_x, obj.smooth_y)
    ]
    return RenderOutput(
        svg=c.tostring(),
        data_csv=_csv_text(["series", "x", "y"], rows),
        warnings=(),
    )


def render(obj, spec):
    """Render ``obj`` according to ``spec.kind``; returns SVG + CSV + warnings.

    Surface kinds take a :class:`SurvivalSurface` or :class:`ContrastSurface`;
    curve kinds take a :class:`CurveSet` (or a single :class:`Curve`);
    ``residual_scatter`` takes a :class:`ResidualScatter`.
    """
    if spec.kind in ("area_continuous", "area_binned"):
        return _render_area(obj, spec)
    if spec.kind in ("contour", "heatmap", "heatmap_binned"):
        return _render_raster(obj, spec)
    if spec.kind == "residual_scatter":
        if not isinstance(obj, ResidualScatter):
            raise InconsistentGrid("residual_scatter needs a ResidualScatter input")
        return _render_scatter(obj, spec)
    if isinstance(obj, Curve):
        obj = CurveSet(curves=(obj,))
    if not isinstance(obj, CurveSet):
        raise InconsistentGrid(f"plot kind {spec.kind!r} needs curves, got {type(obj).__name__}")
    return _render_curveset(obj, spec)
