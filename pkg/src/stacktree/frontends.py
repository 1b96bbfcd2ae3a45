"""Parsers that turn source text into command lists.

Postfix syntax, one statement per command, separated by whitespace::

    leaf "NP"          # push a leaf
    fake "N"           # narrow the top subtree to a label-sized footprint
    branch 2 "S"       # combine the top two subtrees under a parent
    tree               # emit the top subtree

Inside a quoted label ``\\"`` stands for a double quote.  A ``\\\\`` pair is
kept as written and acts as a line break in the label; any other
backslash is literal.  ``#`` outside a label starts a comment.

Bracketed syntax is the usual ``(LABEL child ...)`` notation, where a child
is either a nested node or a bare token.  Several trees may follow each
other; each one is emitted separately.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .commands import Branch, Command, FakeWidth, Leaf, Tree
from .errors import TreeSyntaxError

KEYWORDS = ("leaf", "branch", "fake", "tree")


@dataclass(frozen=True)
class CompileOptions:
    merge_preterminals: bool = False


@dataclass(frozen=True)
class _Token:
    kind: str  # "word" or "string"
    text: str
    line: int
    column: int


def _lex_postfix(text: str) -> Iterator[_Token]:
    i, line, col = 0, 1, 1
    n = len(text)

    def advance(count: int = 1) -> None:
        nonlocal i, line, col
        for _ in range(count):
            if text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch.isspace():
            advance()
        elif ch == "#":
            while i < n and text[i] != "\n":
                advance()
        elif ch == '"':
            start_line, start_col = line, col
            advance()
            chars: list[str] = []
            while True:
                if i >= n:
                    raise TreeSyntaxError("unterminated string", start_line, start_col)
                ch = text[i]
                if ch == '"':
                    advance()
                    break
                if ch == "\\" and i + 1 < n and text[i + 1] == '"':
                    chars.append('"')
                    advance(2)
                elif ch == "\\" and i + 1 < n and text[i + 1] == "\\":
                    chars.append("\\\\")
                    advance(2)
                else:
                    chars.append(ch)
                    advance()
            yield _Token("string", "".join(chars), start_line, start_col)
        else:
            start_line, start_col, start = line, col, i
            while i < n and not text[i].isspace() and text[i] not in '"#':
                advance()
            yield _Token("word", text[start:i], start_line, start_col)


Location = tuple[int, int]


def parse_postfix(text: str) -> list[Command]:
    return parse_postfix_located(text)[0]


def parse_postfix_located(text: str) -> tuple[list[Command], list[Location]]:
    """Like :func:`parse_postfix`, also returning each command's (line, column)."""
    tokens = list(_lex_postfix(text))
    commands: list[Command] = []
    locations: list[Location] = []
    pos = 0

    def take(kind: str, what: str, after: _Token) -> _Token:
        nonlocal pos
        if pos >= len(tokens):
            raise TreeSyntaxError(f"expected {what} after '{after.text}'", after.line, after.column)
        tok = tokens[pos]
        if tok.kind != kind:
            raise TreeSyntaxError(f"expected {what}, got {tok.text!r}", tok.line, tok.column)
        pos += 1
        return tok

    while pos < len(tokens):
        tok = tokens[pos]
        pos += 1
        if tok.kind != "word" or tok.text not in KEYWORDS:
            raise TreeSyntaxError(f"unknown statement {tok.text!r}", tok.line, tok.column)
        locations.append((tok.line, tok.column))
        if tok.text == "leaf":
            commands.append(Leaf(take("string", "a quoted label", tok).text))
        elif tok.text == "fake":
            commands.append(FakeWidth(take("string", "a quoted label", tok).text))
        elif tok.text == "tree":
            commands.append(Tree())
        else:
            arity_tok = take("word", "an integer arity", tok)
            if not re.fullmatch(r"[0-9]+", arity_tok.text):
                raise TreeSyntaxError(
                    f"arity must be a non-negative integer, got {arity_tok.text!r}",
                    arity_tok.line,
                    arity_tok.column,
                )
            label = take("string", "a quoted label", arity_tok).text
            commands.append(Branch(int(arity_tok.text), label))
    return commands, locations


def quote_label(label: str) -> str:
    """Quote ``label`` for the postfix syntax.

    Raises ValueError for labels that cannot be written back, which are
    the ones where an odd run of backslashes ends the label or precedes a
    double quote.
    """
    out = ['"']
    run = 0
    for ch in label:
        if ch == "\\":
            run += 1
            out.append(ch)
            continue
        if ch == '"':
            if run % 2:
                raise ValueError(f"label cannot be quoted: {label!r}")
            out.append('\\"')
        else:
            out.append(ch)
        run = 0
    if run % 2:
        raise ValueError(f"label cannot be quoted: {label!r}")
    out.append('"')
    return "".join(out)


def format_postfix(commands: Sequence[Command]) -> str:
    lines = []
    for cmd in commands:
        if isinstance(cmd, Leaf):
            lines.append(f"leaf {quote_label(cmd.label)}")
        elif isinstance(cmd, Branch):
            lines.append(f"branch {cmd.arity} {quote_label(cmd.label)}")
        elif isinstance(cmd, FakeWidth):
            lines.append(f"fake {quote_label(cmd.label)}")
        elif isinstance(cmd, Tree):
            lines.append("tree")
        else:
            raise TypeError(f"not a command: {cmd!r}")
    return "".join(line + "\n" for line in lines)


def format_qobitex(commands: Sequence[Command]) -> str:
    """Re-emit ``commands`` as calls to the original LaTeX tree macros."""
    out = []
    for cmd in commands:
        if isinstance(cmd, Leaf):
            out.append(f"\\leaf{{{cmd.label}}}")
        elif isinstance(cmd, Branch):
            out.append(f"\\branch{{{cmd.arity}}}{{{cmd.label}}}")
        elif isinstance(cmd, FakeWidth):
            out.append(f"\\faketreewidth{{{cmd.label}}}")
        elif isinstance(cmd, Tree):
            out.append("\\tree")
        else:
            raise TypeError(f"not a command: {cmd!r}")
    return "".join(line + "\n" for line in out)


# Bracketed trees -----------------------------------------------------------

_BRACKET_TOKEN = re.compile(r"\s+|\(|\)|[^\s()]+")


@dataclass
class Node:
    label: str
    children: list[Node | str]
    line: int = 0
    column: int = 0


def _lex_brackets(text: str) -> Iterator[_Token]:
    line, line_start = 1, 0
    for m in _BRACKET_TOKEN.finditer(text):
        tok = m.group()
        col = m.start() - line_start + 1
        if tok[0].isspace():
            newlines = tok.count("\n")
            if newlines:
                line += newlines
                line_start = m.start() + tok.rindex("\n") + 1
            continue
        yield _Token("word" if tok not in "()" else tok, tok, line, col)


def parse_bracketed(text: str) -> list[Node]:
    """Parse every top-level ``( ... )`` tree in ``text``."""
    tokens = list(_lex_brackets(text))
    if not tokens:
        raise TreeSyntaxError("empty input", 1, 1)
    trees: list[Node] = []
    stack: list[Node] = []
    for tok in tokens:
        if tok.kind == "(":
            stack.append(Node("", [], tok.line, tok.column))
        elif tok.kind == ")":
            if not stack:
                raise TreeSyntaxError("unbalanced ')'", tok.line, tok.column)
            node = stack.pop()
            if node.label == "" and not node.children:
                raise TreeSyntaxError("empty node '()'", node.line, node.column)
            if stack:
                stack[-1].children.append(node)
            else:
                trees.append(node)
        else:
            if not stack:
                raise TreeSyntaxError(f"token {tok.text!r} outside of a tree", tok.line, tok.column)
            parent = stack[-1]
            if parent.label == "" and not parent.children:
                parent.label = tok.text
            else:
                parent.children.append(tok.text)
    if stack:
        node = stack[-1]
        raise TreeSyntaxError("unclosed '('", node.line, node.column)
    return trees


def _emit(
    node: Node | str,
    opts: CompileOptions,
    out: list[Command],
    where: list[Location],
    parent: Node,
) -> None:
    # Bare tokens carry no position of their own; report their parent's.
    if isinstance(node, str):
        out.append(Leaf(node))
        where.append((parent.line, parent.column))
        return
    loc = (node.line, node.column)
    if not node.children:
        out.append(Leaf(node.label))
    elif opts.merge_preterminals and len(node.children) == 1 and isinstance(node.children[0], str):
        out.append(Leaf(f"{node.label}\\\\{node.children[0]}"))
    else:
        for child in node.children:
            _emit(child, opts, out, where, node)
        out.append(Branch(len(node.children), node.label))
    where.append(loc)


def compile_trees_located(
    trees: Sequence[Node], opts: CompileOptions | None = None
) -> tuple[list[Command], list[Location]]:
    opts = opts or CompileOptions()
    out: list[Command] = []
    where: list[Location] = []
    for tree in trees:
        _emit(tree, opts, out, where, tree)
        out.append(Tree())
        where.append((tree.line, tree.column))
    return out, where


def compile_bracketed(text: str, opts: CompileOptions | None = None) -> list[Command]:
    return compile_trees_located(parse_bracketed(text), opts)[0]


def compile_bracketed_located(
    text: str, opts: CompileOptions | None = None
) -> tuple[list[Command], list[Location]]:
    return compile_trees_located(parse_bracketed(text), opts)
