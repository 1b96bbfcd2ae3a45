from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal


@dataclass(frozen=True)
class RenderStyle:
    pt_per_px: float = 1.0
    ascii_col_width_pt: float = 6.0
    ascii_row_height_pt: float = 12.0
    json_precision: int = 4

    def __post_init__(self) -> None:
        for name in ("pt_per_px", "ascii_col_width_pt", "ascii_row_height_pt", "json_precision"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not isinstance(self.json_precision, int):
            raise ValueError("json_precision must be an integer")


def plain_decimal(value: float) -> str:
    """Shortest round-tripping decimal for ``value``, never in exponent form."""
    value = value + 0.0  # folds -0.0 into 0.0
    text = format(Decimal(repr(value)), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text or "0"
