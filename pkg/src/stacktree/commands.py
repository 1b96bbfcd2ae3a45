"""Instructions of the postfix tree language."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Leaf:
    label: str


@dataclass(frozen=True)
class Branch:
    arity: int
    label: str


@dataclass(frozen=True)
class FakeWidth:
    label: str


@dataclass(frozen=True)
class Tree:
    pass


Command = Union[Leaf, Branch, FakeWidth, Tree]


def max_stack_depth(commands: list[Command]) -> int:
    """Deepest stack reached when running ``commands``, ignoring geometry."""
    depth = best = 0
    for cmd in commands:
        if isinstance(cmd, Leaf):
            depth += 1
        elif isinstance(cmd, Branch):
            depth -= cmd.arity - 1
        elif isinstance(cmd, Tree):
            depth -= 1
        best = max(best, depth)
    return best
