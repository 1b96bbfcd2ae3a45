"""Command-line entry point.

Exit codes: 0 success, 1 syntax or usage errors, 2 layout or rendering
errors, 3 I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .config import load_config, override
from .errors import ConfigError, LayoutError, RenderError, TreeSyntaxError
from .frontends import (
    CompileOptions,
    compile_bracketed_located,
    format_qobitex,
    parse_postfix_located,
)
from .layout import EngineConfig, Machine
from .metrics import MetricsConfig
from .render import RenderStyle, emit_ascii, emit_json, emit_latex_picture, emit_svg
from .scene import Scene, stack_scenes

EXIT_OK, EXIT_SYNTAX, EXIT_LAYOUT, EXIT_IO = 0, 1, 2, 3
INDEX_PLACEHOLDER = "{index}"

EMITTERS = {
    "svg": emit_svg,
    "tex": emit_latex_picture,
    "ascii": emit_ascii,
    "json": emit_json,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stacktree", description="Typeset trees from postfix or bracketed input.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    render = sub.add_parser("render", help="lay out and render trees")
    render.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin (default)")
    render.add_argument("-o", "--output", help="output file (default stdout); with "
                        f"--multi-tree separate-files, a template containing {INDEX_PLACEHOLDER}")
    render.add_argument("--syntax", choices=("postfix", "bracketed"), default="postfix")
    render.add_argument("--format", choices=("svg", "tex", "ascii", "json", "qobitex"), default="svg")
    mode = render.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="strict", action="store_true", default=None,
                      help="enforce stack depth 20 and arity 5 (default)")
    mode.add_argument("--extended", dest="strict", action="store_false",
                      help="lift the depth and arity limits")
    render.add_argument("--font-size", type=float)
    render.add_argument("--ex-pt", type=float)
    render.add_argument("--merge-preterminals", action="store_true")
    render.add_argument("--multi-tree", choices=("stacked", "separate-files"), default="stacked")
    render.add_argument("--gap", type=float, default=12.0, help="vertical gap between stacked trees (pt)")
    render.add_argument("--allow-partial", action="store_true", default=None,
                        help="tolerate subtrees left on the stack at the end")
    render.add_argument("--config", help="key = value configuration file")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.buffer.read().decode("utf-8")
    return Path(path).read_text(encoding="utf-8")


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text, encoding="utf-8")


def _configs(args: argparse.Namespace) -> tuple[EngineConfig, MetricsConfig, RenderStyle]:
    if args.config:
        engine, metrics, style = load_config(args.config)
    else:
        engine, metrics, style = EngineConfig(), MetricsConfig(), RenderStyle()
    engine = override(engine, strict=args.strict, allow_partial=args.allow_partial)
    metrics = override(metrics, font_size=args.font_size, ex_pt=args.ex_pt)
    return engine, metrics, style


def _render(args: argparse.Namespace) -> int:
    engine, metrics, style = _configs(args)
    source = _read_input(args.input)

    if args.syntax == "postfix":
        commands, locations = parse_postfix_located(source)
    else:
        opts = CompileOptions(merge_preterminals=args.merge_preterminals)
        commands, locations = compile_bracketed_located(source, opts)

    machine = Machine(engine, metrics)
    try:
        scenes = machine.run(commands)
    except LayoutError as exc:
        where = ""
        if exc.index is not None and exc.index < len(locations):
            line, col = locations[exc.index]
            where = f" (line {line}, column {col})"
        exc.message += where
        raise
    for diag in machine.diagnostics:
        print(f"stacktree: warning: {diag}", file=sys.stderr)

    if args.format == "qobitex":
        _write_output(args.output, format_qobitex(commands))
        return EXIT_OK

    emit = EMITTERS[args.format]
    if args.multi_tree == "stacked" or len(scenes) <= 1:
        scene = stack_scenes(scenes, args.gap) if scenes else Scene(0.0, 0.0)
        _write_output(args.output, emit(scene, style))
        return EXIT_OK

    if not args.output or INDEX_PLACEHOLDER not in args.output:
        raise UsageError(
            f"--multi-tree separate-files with {len(scenes)} trees needs -o with {INDEX_PLACEHOLDER}"
        )
    rendered = [emit(scene, style) for scene in scenes]
    for index, text in enumerate(rendered):
        _write_output(args.output.replace(INDEX_PLACEHOLDER, str(index)), text)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _render(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_SYNTAX
    except (TreeSyntaxError, ConfigError) as exc:
        print(f"stacktree: syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (LayoutError, RenderError) as exc:
        name = "" if isinstance(exc, LayoutError) else f"{type(exc).__name__}: "
        print(f"stacktree: error: {name}{exc}", file=sys.stderr)
        return EXIT_LAYOUT
    except (OSError, UnicodeDecodeError) as exc:
        print(f"stacktree: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
