"""Stack-machine tree typesetting.

Trees are described bottom-up as postfix programs (or compiled from
bracketed notation), laid out with fixed offset/shift/width arithmetic and
rendered to SVG, LaTeX picture code, ASCII art or JSON.
"""

from __future__ import annotations

from .commands import Branch, Command, FakeWidth, Leaf, Tree
from .errors import (
    ArityUnsupported,
    ArityZero,
    ConfigError,
    DepthExceeded,
    EmptyStack,
    LayoutError,
    RenderError,
    ResidualStack,
    StackTreeError,
    TreeSyntaxError,
    Underflow,
    UnrepresentableSlope,
)
from .frontends import CompileOptions, compile_bracketed, format_postfix, parse_postfix
from .layout import EngineConfig, Machine, StackEntry, run_program
from .metrics import LabelBox, MetricsConfig, MetricsMode, measure_label
from .render import RenderStyle, emit_ascii, emit_json, emit_latex_picture, emit_svg, parse_json
from .scene import PlacedText, Scene, Segment

__all__ = [
    "ArityUnsupported", "ArityZero", "Branch", "Command", "CompileOptions", "ConfigError",
    "DepthExceeded", "EmptyStack", "EngineConfig", "FakeWidth", "LabelBox", "LayoutError",
    "Leaf", "Machine", "MetricsConfig", "MetricsMode", "PlacedText", "RenderError",
    "RenderStyle", "ResidualStack", "Scene", "Segment", "StackEntry", "StackTreeError",
    "Tree", "TreeSyntaxError", "Underflow", "UnrepresentableSlope", "compile_bracketed",
    "emit_ascii", "emit_json", "emit_latex_picture", "emit_svg", "format_postfix",
    "measure_label", "parse_json", "parse_postfix", "run_program",
]
