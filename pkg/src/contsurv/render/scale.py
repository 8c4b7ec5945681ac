"""Color scales and axis ticks for the SVG renderer.

The default sequential scale is a fixed set of RGB gradient stops chosen so
that luminance increases strictly from the first stop to the last; linear
interpolation between stops therefore keeps the value-to-luminance mapping
strictly monotone, and legends are bit-exact across runs.
"""

import math

SEQUENTIAL_DEFAULT = (
    "#2a1e5c",
    "#20558a",
    "#1f8181",
    "#41a65c",
    "#a6bb3d",
    "#f5e626",
)


def parse_hex(color):
    c = color.lstrip("#")
    return int(c[0:2], 16), int(c[2:4], 16), int(c[4:6], 16)


def luminance(color):
    r, g, b = parse_hex(color)
    return 0.2126 * r + 0.7152 * g + 0.0722 * b


def color_at(stops, u):
    """Interpolated color for u in [0, 1] along evenly spaced gradient stops."""
    u = min(max(float(u), 0.0), 1.0)
    if len(stops) == 1:
        return stops[0]
    pos = u * (len(stops) - 1)
    i = min(int(pos), len(stops) - 2)
    frac = pos - i
    r0, g0, b0 = parse_hex(stops[i])
    r1, g1, b1 = parse_hex(stops[i + 1])
    r = round(r0 + frac * (r1 - r0))
    g = round(g0 + frac * (g1 - g0))
    b = round(b0 + frac * (b1 - b0))
    return f"#{r:02x}{g:02x}{b:02x}"


def nice_ticks(lo, hi, target=5):
    """Round tick locations covering [lo, hi]; deterministic."""
    lo, hi = float(lo), float(hi)
    if not hi > lo:
        return [lo]
    raw = (hi - lo) / max(target, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 5.0, 10.0):
        step = mult * mag
        if raw <= step:
            break
    first = math.ceil(lo / step) * step
    ticks = []
    v = first
    while v <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(v) < 1e-12 * step else v)
        v += step
    return ticks


def fmt_tick(v):
    return f"{float(v):g}"
