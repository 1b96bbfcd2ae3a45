"""Canonical JSON form of a scene.

Layout of the document (keys always appear in this order)::

    {
      "width": W, "height": H,
      "texts": [{"x", "y", "width", "height", "font_size", "lines", "line_widths"}, ...],
      "segments": [{"x1", "y1", "x2", "y2"}, ...]
    }

Every number is written with exactly ``json_precision`` decimals, rounded
half-to-even from the exact binary value.
"""

from __future__ import annotations

import json
from decimal import ROUND_HALF_EVEN, Decimal

from ..metrics import LabelBox
from ..scene import PlacedText, Scene, Segment
from .style import RenderStyle


def format_number(value: float, precision: int) -> str:
    quantum = Decimal(1).scaleb(-precision)
    rounded = Decimal(value).quantize(quantum, rounding=ROUND_HALF_EVEN)
    if rounded.is_zero():
        rounded = abs(rounded)
    return format(rounded, "f")


def _string(text: str) -> str:
    return json.dumps(text, ensure_ascii=False)


def emit_json(scene: Scene, style: RenderStyle | None = None) -> str:
    style = style or RenderStyle()

    def num(value: float) -> str:
        return format_number(value, style.json_precision)

    out = ["{\n", f'  "width": {num(scene.width)},\n', f'  "height": {num(scene.height)},\n']
    texts = []
    for t in scene.texts:
        box = t.label
        lines = ", ".join(_string(line) for line in box.lines)
        widths = ", ".join(num(w) for w in box.line_widths)
        texts.append(
            f'    {{"x": {num(t.x)}, "y": {num(t.y)}, "width": {num(box.width)}, '
            f'"height": {num(box.height)}, "font_size": {num(box.font_size)}, '
            f'"lines": [{lines}], "line_widths": [{widths}]}}'
        )
    segments = [
        f'    {{"x1": {num(s.x1)}, "y1": {num(s.y1)}, "x2": {num(s.x2)}, "y2": {num(s.y2)}}}'
        for s in scene.segments
    ]
    for key, items, last in (("texts", texts, False), ("segments", segments, True)):
        if items:
            out.append(f'  "{key}": [\n' + ",\n".join(items) + "\n  ]")
        else:
            out.append(f'  "{key}": []')
        out.append("\n" if last else ",\n")
    out.append("}\n")
    return "".join(out)


def parse_json(text: str) -> Scene:
    data = json.loads(text)
    texts = tuple(
        PlacedText(
            float(t["x"]),
            float(t["y"]),
            LabelBox(
                tuple(t["lines"]),
                tuple(float(w) for w in t["line_widths"]),
                float(t["width"]),
                float(t["height"]),
                float(t["font_size"]),
            ),
        )
        for t in data["texts"]
    )
    segments = tuple(
        Segment(float(s["x1"]), float(s["y1"]), float(s["x2"]), float(s["y2"]))
        for s in data["segments"]
    )
    return Scene(float(data["width"]), float(data["height"]), texts, segments)
