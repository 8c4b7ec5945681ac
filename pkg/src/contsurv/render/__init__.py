from .plots import (
    CurveSet,
    PlotSpec,
    RenderOutput,
    ResidualScatter,
    monotone_segments,
    render,
)
from .scale import SEQUENTIAL_DEFAULT, color_at, luminance

__all__ = [
    "CurveSet",
    "PlotSpec",
    "RenderOutput",
    "ResidualScatter",
    "monotone_segments",
    "render",
    "SEQUENTIAL_DEFAULT",
    "color_at",
    "luminance",
]
