from __future__ import annotations

from xml.sax.saxutils import escape

from ..scene import Scene
from .style import RenderStyle, plain_decimal as num

STROKE_WIDTH = 0.5


def emit_svg(scene: Scene, style: RenderStyle | None = None) -> str:
    """Standalone SVG document; user units are points, the canvas is sized in px."""
    style = style or RenderStyle()
    width, height = num(scene.width), num(scene.height)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{num(scene.width / style.pt_per_px)}" height="{num(scene.height / style.pt_per_px)}" '
        f'viewBox="0 0 {width} {height}">\n',
    ]
    for t in scene.texts:
        box = t.label
        cx = num(t.x + box.width / 2)
        for i, line in enumerate(box.lines):
            cy = num(t.y + (i + 0.5) * box.line_height)
            out.append(
                f'  <text x="{cx}" y="{cy}" font-family="monospace" font-size="{num(box.font_size)}" '
                f'text-anchor="middle" dominant-baseline="central" xml:space="preserve">'
                f"{escape(line)}</text>\n"
            )
    for s in scene.segments:
        out.append(
            f'  <line x1="{num(s.x1)}" y1="{num(s.y1)}" x2="{num(s.x2)}" y2="{num(s.y2)}" '
            f'stroke="black" stroke-width="{num(STROKE_WIDTH)}"/>\n'
        )
    out.append("</svg>\n")
    return "".join(out)
