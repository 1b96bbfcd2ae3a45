"""Character-grid rendering.

Columns map linearly onto x (``ascii_col_width_pt`` points each).  Rows
are assigned band by band: the scene is cut at every y where a label line
or segment starts or ends, each band gets ``round(height / row_height)``
rows, and a band crossed only by segments gets at least one row so that
short connectors stay visible.  Label text wins over line characters.
"""

from __future__ import annotations

import bisect
import math

from ..scene import Scene
from .style import RenderStyle


def _round(value: float) -> int:
    return math.floor(value + 0.5)


class _RowMap:
    def __init__(self, scene: Scene, row_height: float) -> None:
        bands: list[tuple[float, float]] = []
        cuts = {0.0, scene.height}
        for t in scene.texts:
            lh = t.label.line_height
            for i in range(len(t.label.lines)):
                top = t.y + i * lh
                bands.append((top, top + lh))
                cuts.update((top, top + lh))
        spans = []
        for s in scene.segments:
            lo, hi = sorted((s.y1, s.y2))
            spans.append((lo, hi))
            cuts.update((lo, hi))
        self.cuts = sorted(cuts)
        self.starts = [0]
        for lo, hi in zip(self.cuts, self.cuts[1:]):
            rows = _round((hi - lo) / row_height)
            in_text = any(a <= lo and hi <= b for a, b in bands)
            in_segment = any(a <= lo and hi <= b for a, b in spans)
            if rows == 0 and in_segment and not in_text:
                rows = 1
            self.starts.append(self.starts[-1] + rows)

    def row(self, y: float) -> int:
        if len(self.cuts) < 2:
            return 0
        k = bisect.bisect_right(self.cuts, y) - 1
        k = max(0, min(k, len(self.cuts) - 2))
        lo, hi = self.cuts[k], self.cuts[k + 1]
        rows = self.starts[k + 1] - self.starts[k]
        frac = 0.0 if hi == lo else (y - lo) / (hi - lo)
        return self.starts[k] + min(int(frac * rows), max(rows - 1, 0))

    def row_center(self, row: int) -> float | None:
        """Scene y at the middle of ``row``, or None if no band owns it."""
        k = bisect.bisect_right(self.starts, row) - 1
        if k >= len(self.cuts) - 1:
            return None
        rows = self.starts[k + 1] - self.starts[k]
        if rows == 0:
            return None
        lo, hi = self.cuts[k], self.cuts[k + 1]
        return lo + (row - self.starts[k] + 0.5) / rows * (hi - lo)


def emit_ascii(scene: Scene, style: RenderStyle | None = None) -> str:
    style = style or RenderStyle()
    if not scene.texts and not scene.segments:
        return ""
    col_w = style.ascii_col_width_pt
    rows = _RowMap(scene, style.ascii_row_height_pt)
    grid: dict[tuple[int, int], str] = {}

    for s in scene.segments:
        (tx, ty), (bx, by) = sorted(((s.x1, s.y1), (s.x2, s.y2)), key=lambda p: p[1])
        if by == ty:
            r = rows.row(ty)
            for c in range(_round(min(tx, bx) / col_w), _round(max(tx, bx) / col_w) + 1):
                grid[r, c] = "_"
            continue
        if bx == tx:
            char = "|"
        else:
            # y grows downward: a line heading down-left is drawn as '/'.
            char = "/" if bx < tx else "\\"
        for r in range(rows.row(ty), rows.row(by)):
            y = rows.row_center(r)
            if y is None or not ty <= y <= by:
                continue
            x = tx + (bx - tx) * (y - ty) / (by - ty)
            grid[r, math.floor(x / col_w)] = char

    for t in scene.texts:
        lh = t.label.line_height
        for i, line in enumerate(t.label.lines):
            r = rows.row(t.y + i * lh)
            c0 = _round((t.x + t.label.line_inset(i)) / col_w)
            for j, ch in enumerate(line):
                grid[r, c0 + j] = ch

    by_row: dict[int, dict[int, str]] = {}
    for (r, c), ch in grid.items():
        if c >= 0:
            by_row.setdefault(r, {})[c] = ch
    if not by_row:
        return ""
    lines = []
    for r in range(max(by_row) + 1):
        cells = by_row.get(r, {})
        row = [" "] * (max(cells, default=-1) + 1)
        for c, ch in cells.items():
            row[c] = ch
        lines.append("".join(row).rstrip())
    return "\n".join(lines) + "\n"
