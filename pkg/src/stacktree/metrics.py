"""Deterministic label measurement.

Labels are measured with a simple font model instead of real glyph
metrics: every character is ``char_width_factor * font_size`` wide unless
a per-character width table overrides it.  Multi-line labels are split on
the two-character sequence ``\\\\`` or on newlines and each line is centered
within the widest one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

LINE_BREAK = re.compile(r"\\\\|\n")


class MetricsMode(str, Enum):
    MONO = "mono"
    WIDTH_TABLE = "width_table"


@dataclass(frozen=True)
class MetricsConfig:
    font_size: float = 10.0
    char_width_factor: float = 0.6
    line_height_factor: float = 1.2
    ex_pt: float = 4.3
    mode: MetricsMode = MetricsMode.MONO
    width_table: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in ("font_size", "char_width_factor", "line_height_factor", "ex_pt"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value!r}")
        for char, factor in self.width_table.items():
            if len(char) != 1:
                raise ValueError(f"width table keys must be single characters, got {char!r}")
            if factor < 0:
                raise ValueError(f"width factor for {char!r} must be non-negative")

    @property
    def line_height(self) -> float:
        return self.line_height_factor * self.font_size

    def char_width(self, char: str) -> float:
        if self.mode is MetricsMode.WIDTH_TABLE:
            return self.width_table.get(char, self.char_width_factor) * self.font_size
        return self.char_width_factor * self.font_size


@dataclass(frozen=True)
class LabelBox:
    """A measured, possibly multi-line, label.

    ``font_size`` is carried along so renderers can size the text without
    access to the metrics configuration.
    """

    lines: tuple[str, ...]
    line_widths: tuple[float, ...]
    width: float
    height: float
    font_size: float = 10.0

    @property
    def line_height(self) -> float:
        return self.height / len(self.lines) if self.lines else 0.0

    def line_inset(self, index: int) -> float:
        return (self.width - self.line_widths[index]) / 2

    @classmethod
    def fixed(cls, width: float, height: float = 12.0, text: str = "") -> LabelBox:
        """Single-line box with a forced size, bypassing measurement."""
        return cls((text,), (width,), width, height)


def split_lines(text: str) -> list[str]:
    if not text:
        return []
    return LINE_BREAK.split(text)


def text_width(line: str, cfg: MetricsConfig) -> float:
    return sum(cfg.char_width(c) for c in line)


def measure_label(text: str, cfg: MetricsConfig | None = None) -> LabelBox:
    cfg = cfg or MetricsConfig()
    lines = split_lines(text)
    widths = tuple(text_width(line, cfg) for line in lines)
    return LabelBox(
        lines=tuple(lines),
        line_widths=widths,
        width=max(widths, default=0.0),
        height=len(lines) * cfg.line_height,
        font_size=cfg.font_size,
    )
