from __future__ import annotations

from .ascii import emit_ascii
from .jsonio import emit_json, parse_json
from .latex import emit_latex_picture, parse_latex_picture
from .svg import emit_svg
from .style import RenderStyle

__all__ = [
    "RenderStyle",
    "emit_ascii",
    "emit_json",
    "emit_latex_picture",
    "emit_svg",
    "parse_json",
    "parse_latex_picture",
]
