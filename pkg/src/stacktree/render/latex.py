"""LaTeX ``picture`` output.

The scene becomes one flat picture with ``\\unitlength`` = 1pt and y
pointing up.  Labels are ``\\makebox`` es sized to their label box; each
segment is a ``\\line`` drawn from its lower endpoint.  ``\\line`` only
accepts slopes given as small coprime integer pairs, so a segment whose
direction is not one of those cannot be drawn.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from ..errors import UnrepresentableSlope
from ..metrics import LabelBox
from ..scene import PlacedText, Scene, Segment
from .style import RenderStyle, plain_decimal as num

# Largest slope component used by the tree connectors: \line(4,1) for the
# outer lines of a five-way branch.
MAX_SLOPE = 4
SLOPE_TOLERANCE = 1e-9

_SPECIALS = {
    "\\": r"\textbackslash{}",
    "{": r"\{",
    "}": r"\}",
    "$": r"\$",
    "&": r"\&",
    "#": r"\#",
    "%": r"\%",
    "_": r"\_",
    "^": r"\^{}",
    "~": r"\~{}",
}


def escape_latex(text: str) -> str:
    return "".join(_SPECIALS.get(ch, ch) for ch in text)


def line_slope(dx: float, dy: float) -> tuple[int, int, float]:
    """Slope pair and extent for a ``\\line`` covering (dx, dy), with dy >= 0.

    The extent is the horizontal length, or the vertical length for a
    vertical line, as ``\\line`` expects.
    """
    scale = max(abs(dx), abs(dy))
    if scale == 0:
        return 0, 1, 0.0
    if abs(dx) <= SLOPE_TOLERANCE * scale:
        return 0, 1, dy
    if abs(dy) <= SLOPE_TOLERANCE * scale:
        return (1 if dx > 0 else -1), 0, abs(dx)
    ratio = abs(dx) / dy
    approx = Fraction(ratio).limit_denominator(MAX_SLOPE)
    if approx.numerator == 0 or abs(float(approx) - ratio) > SLOPE_TOLERANCE * max(1.0, ratio):
        raise UnrepresentableSlope(f"segment direction ({dx:g}, {dy:g}) has no \\line slope")
    p, q = approx.numerator, approx.denominator
    if p > MAX_SLOPE or q > MAX_SLOPE:
        raise UnrepresentableSlope(
            f"segment slope ({p},{q}) exceeds the picture limit of {MAX_SLOPE}"
        )
    return (p if dx > 0 else -p), q, abs(dx)


def emit_latex_picture(scene: Scene, style: RenderStyle | None = None) -> str:
    height = scene.height
    out = [
        "\\setlength{\\unitlength}{1pt}%\n",
        f"\\begin{{picture}}({num(scene.width)},{num(height)})\n",
    ]
    for t in scene.texts:
        box = t.label
        body = "\\\\".join(escape_latex(line) for line in box.lines)
        out.append(
            f"\\put({num(t.x)},{num(height - t.y - box.height)})"
            f"{{\\makebox({num(box.width)},{num(box.height)}){{\\shortstack{{{body}}}}}}}\n"
        )
    for s in scene.segments:
        # Flip to y-up and draw from the lower end.
        ax, ay, bx, by = s.x1, height - s.y1, s.x2, height - s.y2
        if by < ay:
            ax, ay, bx, by = bx, by, ax, ay
        p, q, extent = line_slope(bx - ax, by - ay)
        out.append(f"\\put({num(ax)},{num(ay)}){{\\line({p},{q}){{{num(extent)}}}}}\n")
    out.append("\\end{picture}\n")
    return "".join(out)


_NUM = r"(-?[0-9]*\.?[0-9]+)"
_PICTURE = re.compile(rf"\\begin\{{picture\}}\({_NUM},{_NUM}\)")
_MAKEBOX = re.compile(rf"\\put\({_NUM},{_NUM}\)\{{\\makebox\({_NUM},{_NUM}\)")
_LINE = re.compile(rf"\\put\({_NUM},{_NUM}\)\{{\\line\((-?\d+),(-?\d+)\)\{{{_NUM}\}}\}}")


def parse_latex_picture(text: str) -> Scene:
    """Recover scene geometry from :func:`emit_latex_picture` output.

    Only positions and sizes are recovered; label text is not.
    """
    header = _PICTURE.search(text)
    if header is None:
        raise ValueError("no picture environment found")
    width, height = float(header.group(1)), float(header.group(2))
    texts = []
    for m in _MAKEBOX.finditer(text):
        x, y, w, h = (float(g) for g in m.groups())
        texts.append(PlacedText(x, height - y - h, LabelBox((), (), w, h)))
    segments = []
    for m in _LINE.finditer(text):
        x, y = float(m.group(1)), float(m.group(2))
        p, q = int(m.group(3)), int(m.group(4))
        extent = float(m.group(5))
        if p == 0:
            ex, ey = x, y + math.copysign(extent, q)
        else:
            ex, ey = x + math.copysign(extent, p), y + extent * q / abs(p)
        segments.append(Segment(x, height - y, ex, height - ey))
    return Scene(width, height, tuple(texts), tuple(segments))
