"""``key = value`` configuration files.

Recognised keys::

    strict = true|false            min_branch_width = <pt>
    epsilon = <float>              allow_partial = true|false
    font_size = <pt>               char_width_factor = <float>
    line_height_factor = <float>   ex_pt = <pt>
    metrics_mode = mono|width_table
    width.<char> = <factor>        # <char> is one character or U+XXXX
    pt_per_px = <float>            ascii_col_width_pt = <pt>
    ascii_row_height_pt = <pt>     json_precision = <int>

``#`` starts a comment.  Giving any ``width.`` entry switches the metrics to
width-table mode unless ``metrics_mode`` says otherwise.
"""

from __future__ import annotations

from dataclasses import fields, replace
from pathlib import Path
from typing import Any

from .errors import ConfigError
from .layout import EngineConfig
from .metrics import MetricsConfig, MetricsMode
from .render.style import RenderStyle

_TARGETS: dict[str, type] = {}
for _cls in (EngineConfig, MetricsConfig, RenderStyle):
    for _f in fields(_cls):
        if _f.name not in ("mode", "width_table"):
            _TARGETS[_f.name] = _cls
_TARGETS["metrics_mode"] = MetricsConfig


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def _convert(cls: type, key: str, text: str) -> Any:
    if key == "metrics_mode":
        return MetricsMode(text)
    default = getattr(cls(), key)
    if isinstance(default, bool):
        return _parse_bool(text)
    if isinstance(default, int):
        return int(text)
    return float(text)


def _width_char(spec: str) -> str:
    if spec.upper().startswith("U+") and len(spec) > 2:
        return chr(int(spec[2:], 16))
    if len(spec) != 1:
        raise ValueError(f"width key must name one character, got {spec!r}")
    return spec


def parse_config(text: str) -> tuple[EngineConfig, MetricsConfig, RenderStyle]:
    values: dict[type, dict[str, Any]] = {EngineConfig: {}, MetricsConfig: {}, RenderStyle: {}}
    table: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep or not key or not value:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        try:
            if key.startswith("width."):
                table[_width_char(key[len("width."):])] = float(value)
                continue
            cls = _TARGETS.get(key)
            if cls is None:
                raise ConfigError(f"unknown key {key!r}", lineno)
            values[cls][key if key != "metrics_mode" else "mode"] = _convert(cls, key, value)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key!r}: {exc}", lineno) from exc
    metrics_values = values[MetricsConfig]
    if table:
        metrics_values["width_table"] = table
        metrics_values.setdefault("mode", MetricsMode.WIDTH_TABLE)
    try:
        return (
            EngineConfig(**values[EngineConfig]),
            MetricsConfig(**metrics_values),
            RenderStyle(**values[RenderStyle]),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def load_config(path: str | Path) -> tuple[EngineConfig, MetricsConfig, RenderStyle]:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def override(obj: Any, **changes: Any) -> Any:
    """``dataclasses.replace`` that skips ``None`` values."""
    changes = {k: v for k, v in changes.items() if v is not None}
    if not changes:
        return obj
    try:
        return replace(obj, **changes)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
