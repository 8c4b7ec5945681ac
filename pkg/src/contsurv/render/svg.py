"""Minimal deterministic SVG 1.1 writer.

Elements are emitted in insertion order with a fixed attribute order and all
coordinates formatted to two decimals, so identical inputs produce
byte-identical documents.
"""

from xml.sax.saxutils import escape

HEADER = '<?xml version="1.0" encoding="UTF-8"?>\n'


def fnum(v):
    return f"{float(v):.2f}"


def _opacity_attr(opacity):
    return f' fill-opacity="{opacity:g}"' if opacity is not None and opacity < 1.0 else ""


def _id_attr(elem_id):
    return f' id="{escape(elem_id)}"' if elem_id else ""


class SvgCanvas:
    def __init__(self, width, height):
        self.width = int(width)
        self.height = int(height)
        self._defs = []
        self._body = []

    def hatch_pattern(self, pattern_id, color, spacing=6.0):
        self._defs.append(
            f'<pattern id="{escape(pattern_id)}" width="{fnum(spacing)}" height="{fnum(spacing)}"'
            f' patternUnits="userSpaceOnUse" patternTransform="rotate(45)">'
            f'<line x1="0" y1="0" x2="0" y2="{fnum(spacing)}"'
            f' stroke="{color}" stroke-width="1.5"/></pattern>'
        )

    def metadata(self, payload):
        self._body.append(f"<metadata>{escape(payload)}</metadata>")

    def rect(self, x, y, w, h, fill, stroke=None, stroke_width=1.0, opacity=None, elem_id=None):
        stroke_attr = (
            f' stroke="{stroke}" stroke-width="{fnum(stroke_width)}"' if stroke else ""
        )
        self._body.append(
            f'<rect{_id_attr(elem_id)} x="{fnum(x)}" y="{fnum(y)}" width="{fnum(w)}"'
            f' height="{fnum(h)}" fill="{fill}"{stroke_attr}{_opacity_attr(opacity)}/>'
        )

    def line(self, x1, y1, x2, y2, stroke="#444444", stroke_width=1.0, dashed=False):
        dash = ' stroke-dasharray="4,3"' if dashed else ""
        self._body.append(
            f'<line x1="{fnum(x1)}" y1="{fnum(y1)}" x2="{fnum(x2)}" y2="{fnum(y2)}"'
            f' stroke="{stroke}" stroke-width="{fnum(stroke_width)}"{dash}/>'
        )

    def _points(self, points):
        return " ".join(f"{fnum(x)},{fnum(y)}" for x, y in points)

    def polygon(self, points, fill, opacity=None, elem_id=None, stroke=None):
        stroke_attr = f' stroke="{stroke}" stroke-width="0.50"' if stroke else ""
        self._body.append(
            f'<polygon{_id_attr(elem_id)} points="{self._points(points)}"'
            f' fill="{fill}"{stroke_attr}{_opacity_attr(opacity)}/>'
        )

    def polyline(self, points, stroke, stroke_width=1.5, opacity=None, elem_id=None):
        op = f' stroke-opacity="{opacity:g}"' if opacity is not None and opacity < 1.0 else ""
        self._body.append(
            f'<polyline{_id_attr(elem_id)} points="{self._points(points)}" fill="none"'
            f' stroke="{stroke}" stroke-width="{fnum(stroke_width)}"{op}/>'
        )

    def circle(self, cx, cy, r, fill, opacity=None):
        self._body.append(
            f'<circle cx="{fnum(cx)}" cy="{fnum(cy)}" r="{fnum(r)}"'
            f' fill="{fill}"{_opacity_attr(opacity)}/>'
        )

    def text(self, x, y, content, size=11, anchor="start", color="#333333", rotate=None):
        transform = (
            f' transform="rotate({fnum(rotate)} {fnum(x)} {fnum(y)})"' if rotate else ""
        )
        self._body.append(
            f'<text x="{fnum(x)}" y="{fnum(y)}" font-family="sans-serif"'
            f' font-size="{fnum(size)}" text-anchor="{anchor}"'
            f' fill="{color}"{transform}>{escape(str(content))}</text>'
        )

    def tostring(self):
        parts = [
            HEADER,
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.width}"'
            f' height="{self.height}" viewBox="0 0 {self.width} {self.height}">\n',
        ]
        if self._defs:
            parts.append("<defs>" + "".join(self._defs) + "</defs>\n")
        parts.append("\n".join(self._body))
        parts.append("\n</svg>\n")
        return "".join(parts)
