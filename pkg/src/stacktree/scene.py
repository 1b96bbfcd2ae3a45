"""Absolute-coordinate description of a laid-out tree.

Coordinates are in points, x grows rightward and y downward, with the
origin at the top-left corner.  A text position is the top-left corner of
its label box.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .metrics import LabelBox


@dataclass(frozen=True)
class PlacedText:
    x: float
    y: float
    label: LabelBox

    @property
    def right(self) -> float:
        return self.x + self.label.width

    @property
    def bottom(self) -> float:
        return self.y + self.label.height


@dataclass(frozen=True)
class Segment:
    x1: float
    y1: float
    x2: float
    y2: float


@dataclass(frozen=True)
class Scene:
    width: float
    height: float
    texts: tuple[PlacedText, ...] = ()
    segments: tuple[Segment, ...] = ()

    def translated(self, dx: float, dy: float) -> tuple[list[PlacedText], list[Segment]]:
        texts = [PlacedText(t.x + dx, t.y + dy, t.label) for t in self.texts]
        segments = [Segment(s.x1 + dx, s.y1 + dy, s.x2 + dx, s.y2 + dy) for s in self.segments]
        return texts, segments

    def min_x(self) -> float:
        xs = [t.x for t in self.texts]
        xs += [min(s.x1, s.x2) for s in self.segments]
        return min(xs, default=0.0)

    def min_y(self) -> float:
        ys = [t.y for t in self.texts]
        ys += [min(s.y1, s.y2) for s in self.segments]
        return min(ys, default=0.0)


def stack_scenes(scenes: Iterable[Scene], gap: float = 12.0) -> Scene:
    """Compose scenes top to bottom, left-aligned, ``gap`` points apart."""
    texts: list[PlacedText] = []
    segments: list[Segment] = []
    width = 0.0
    y = 0.0
    first = True
    for scene in scenes:
        if not first:
            y += gap
        first = False
        moved_texts, moved_segments = scene.translated(0.0, y)
        texts += moved_texts
        segments += moved_segments
        width = max(width, scene.width)
        y += scene.height
    return Scene(width, y, tuple(texts), tuple(segments))
