"""The layout stack machine.

Subtrees are built bottom-up on a stack.  Each entry remembers its drawn
scene plus three lengths that drive sibling spacing:

* ``offset``: distance from the entry's left edge to its attachment point,
  where the parent's connector lands;
* ``declared_width``: the width the entry claims when placed in a row of
  siblings (it may be narrower than what is actually drawn);
* ``shift``: how far the declared left edge sits right of the actual left
  edge after a fake-width override.

A branch of arity ``n`` pops ``n`` entries and spaces their attachment
points a uniform distance ``B`` apart, where ``B`` is the largest spacing
any adjacent pair needs.  The parent label is centered over the span and
the whole row moves right if the label would stick out past x = 0.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Iterable

from .commands import Branch, Command, FakeWidth, Leaf, Tree
from .errors import (
    ArityUnsupported,
    ArityZero,
    DepthExceeded,
    EmptyStack,
    LayoutError,
    ResidualStack,
    Underflow,
)
from .metrics import LabelBox, MetricsConfig, measure_label
from .scene import PlacedText, Scene, Segment

log = logging.getLogger(__name__)

MAX_DEPTH = 20
MAX_ARITY = 5


@dataclass(frozen=True)
class EngineConfig:
    strict: bool = True
    min_branch_width: float = 1.0
    epsilon: float = 1e-9
    allow_partial: bool = False

    def __post_init__(self) -> None:
        if not self.min_branch_width > 0:
            raise ValueError("min_branch_width must be positive")
        if not self.epsilon >= 0:
            raise ValueError("epsilon must be non-negative")


@dataclass(frozen=True)
class StackEntry:
    """One subtree on the stack.

    ``actual_width`` is the width of the composed box, which is what the
    spacing arithmetic sees.  The scene itself can be wider when a
    fake-width daughter's drawing runs past the box; ``scene.width`` always
    encloses everything drawn.
    """

    scene: Scene
    offset: float
    shift: float
    declared_width: float
    actual_width: float

    @property
    def height(self) -> float:
        return self.scene.height


@dataclass(frozen=True)
class Diagnostic:
    index: int | None
    message: str

    def __str__(self) -> str:
        if self.index is None:
            return self.message
        return f"command {self.index}: {self.message}"


@dataclass(frozen=True)
class BranchInfo:
    """Geometry of one branch reduction, in the combined entry's coordinates.

    Per-daughter sequences run left to right; ``spacings[k]`` and
    ``gaps[k]`` belong to the pair (daughter k, daughter k + 1).
    """

    arity: int
    spacings: tuple[float, ...]
    branch_width: float
    gaps: tuple[float, ...]
    attachments: tuple[float, ...]
    apex: tuple[float, float]
    row_top: float
    connector_height: float
    parent_left: float
    row_shift: float
    daughter_boxes: tuple[tuple[float, float, float, float], ...]
    clamped: bool = False


def connector_height(arity: int, branch_width: float, metrics: MetricsConfig) -> float:
    if arity == 1:
        return 2 * metrics.ex_pt
    if arity == 2:
        return 0.25 * branch_width
    return 0.5 * branch_width


@dataclass
class Machine:
    cfg: EngineConfig = field(default_factory=EngineConfig)
    metrics: MetricsConfig = field(default_factory=MetricsConfig)
    stack: list[StackEntry] = field(default_factory=list)
    emitted: list[Scene] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    trace: list[BranchInfo] = field(default_factory=list)
    _index: int | None = None

    @property
    def depth(self) -> int:
        return len(self.stack)

    @property
    def top(self) -> StackEntry:
        if not self.stack:
            raise EmptyStack("tree stack is empty")
        return self.stack[-1]

    def _note(self, message: str) -> None:
        log.debug(message)
        self.diagnostics.append(Diagnostic(self._index, message))

    def push_leaf(self, label: LabelBox) -> StackEntry:
        if self.cfg.strict and self.depth >= MAX_DEPTH:
            raise DepthExceeded(f"tree stack overflow (limit {MAX_DEPTH})")
        scene = Scene(label.width, label.height, (PlacedText(0.0, 0.0, label),))
        entry = StackEntry(
            scene, offset=label.width / 2, shift=0.0, declared_width=label.width, actual_width=label.width
        )
        self.stack.append(entry)
        return entry

    def apply_fake_width(self, label: LabelBox) -> StackEntry:
        top = self.top
        half = label.width / 2
        entry = replace(top, declared_width=top.offset + half, shift=top.offset - half)
        self.stack[-1] = entry
        return entry

    def reduce_branch(self, arity: int, label: LabelBox) -> BranchInfo:
        if arity < 1:
            raise ArityZero(f"branch arity must be at least 1, got {arity}")
        if self.cfg.strict and arity > MAX_ARITY:
            raise ArityUnsupported(f"can't handle {arity} branching (limit {MAX_ARITY})")
        if self.depth < arity:
            raise Underflow(
                f"tree stack underflow: branch {arity} needs {arity} entries, stack has {self.depth}"
            )
        daughters = self.stack[-arity:]
        if arity == 1:
            entry, info = self._unary(daughters[0], label)
        else:
            entry, info = self._nary(daughters, label)
        del self.stack[-arity:]
        self.stack.append(entry)
        self.trace.append(info)
        return info

    def _unary(self, daughter: StackEntry, label: LabelBox) -> tuple[StackEntry, BranchInfo]:
        # The daughter's shift is ignored and its actual width used, as in
        # the one-daughter case of the original macros.
        parent_left = daughter.offset - label.width / 2
        row_shift = 0.0
        if parent_left < 0:
            row_shift = -parent_left
            parent_left = 0.0
        h = connector_height(1, 0.0, self.metrics)
        row_top = label.height + h
        attach = row_shift + daughter.offset
        row_width = row_shift + daughter.actual_width
        declared = max(row_width, parent_left + label.width)

        texts = [PlacedText(parent_left, 0.0, label)]
        moved_texts, segments = daughter.scene.translated(row_shift, row_top)
        texts += moved_texts
        segments.insert(0, Segment(attach, row_top, attach, label.height))
        extent = max(declared, row_shift + daughter.scene.width)
        scene = Scene(extent, row_top + daughter.height, tuple(texts), tuple(segments))
        entry = StackEntry(
            scene,
            offset=parent_left + label.width / 2,
            shift=0.0,
            declared_width=declared,
            actual_width=declared,
        )
        info = BranchInfo(
            arity=1,
            spacings=(),
            branch_width=0.0,
            gaps=(),
            attachments=(attach,),
            apex=(attach, label.height),
            row_top=row_top,
            connector_height=h,
            parent_left=parent_left,
            row_shift=row_shift,
            daughter_boxes=((row_shift, row_top, daughter.actual_width, daughter.height),),
        )
        return entry, info

    def _nary(self, daughters: list[StackEntry], label: LabelBox) -> tuple[StackEntry, BranchInfo]:
        n = len(daughters)
        # daughters[0] is the leftmost (deepest) entry, daughters[-1] the top.
        spacings = [
            left.declared_width + right.offset - right.shift - left.offset
            for left, right in zip(daughters, daughters[1:])
        ]
        branch_width = max(spacings)
        clamped = False
        if branch_width < self.cfg.min_branch_width:
            self._note(
                f"branch width {branch_width:g}pt clamped to {self.cfg.min_branch_width:g}pt"
            )
            branch_width = self.cfg.min_branch_width
            clamped = True
        gaps = [
            branch_width - s - right.shift for s, right in zip(spacings, daughters[1:])
        ]

        xs = [0.0]
        for left, gap in zip(daughters, gaps):
            xs.append(xs[-1] + left.declared_width + gap)
        apex_rel = daughters[0].offset + (n - 1) / 2 * branch_width
        parent_left = apex_rel - label.width / 2

        row_shift = max(0.0, -parent_left)
        leftmost = min(xs)
        if -leftmost > row_shift:
            # A fake-width daughter can be pulled left of the row origin;
            # move the whole row so nothing is drawn at negative x.
            self._note(f"daughter row overhangs the left edge by {-leftmost:g}pt; row moved right")
            row_shift = -leftmost
        parent_left += row_shift
        xs = [x + row_shift for x in xs]

        h = connector_height(n, branch_width, self.metrics)
        row_top = label.height + h
        apex_x = row_shift + apex_rel
        attachments = [x + d.offset for x, d in zip(xs, daughters)]

        texts = [PlacedText(parent_left, 0.0, label)]
        segments = [Segment(a, row_top, apex_x, label.height) for a in attachments]
        for x, d in zip(xs, daughters):
            moved_texts, moved_segments = d.scene.translated(x, row_top)
            texts += moved_texts
            segments += moved_segments

        row_width = xs[-1] + daughters[-1].actual_width
        declared = max(row_width, parent_left + label.width)
        extent = max([declared] + [x + d.scene.width for x, d in zip(xs, daughters)])
        height = row_top + max(d.height for d in daughters)
        scene = Scene(extent, height, tuple(texts), tuple(segments))
        entry = StackEntry(
            scene,
            offset=parent_left + label.width / 2,
            shift=0.0,
            declared_width=declared,
            actual_width=declared,
        )
        info = BranchInfo(
            arity=n,
            spacings=tuple(spacings),
            branch_width=branch_width,
            gaps=tuple(gaps),
            attachments=tuple(attachments),
            apex=(apex_x, label.height),
            row_top=row_top,
            connector_height=h,
            parent_left=parent_left,
            row_shift=row_shift,
            daughter_boxes=tuple((x, row_top, d.actual_width, d.height) for x, d in zip(xs, daughters)),
            clamped=clamped,
        )
        return entry, info

    def pop_tree(self) -> Scene:
        if not self.stack:
            raise Underflow("tree stack underflow: nothing to emit")
        scene = self.stack.pop().scene
        self.emitted.append(scene)
        return scene

    def execute(self, command: Command) -> None:
        if isinstance(command, Leaf):
            self.push_leaf(measure_label(command.label, self.metrics))
        elif isinstance(command, Branch):
            self.reduce_branch(command.arity, measure_label(command.label, self.metrics))
        elif isinstance(command, FakeWidth):
            self.apply_fake_width(measure_label(command.label, self.metrics))
        elif isinstance(command, Tree):
            self.pop_tree()
        else:
            raise TypeError(f"not a command: {command!r}")

    def run(self, commands: Iterable[Command]) -> list[Scene]:
        for index, command in enumerate(commands):
            self._index = index
            try:
                self.execute(command)
            except LayoutError as exc:
                raise exc.at(index)
        self._index = None
        if self.stack:
            message = f"{self.depth} subtree(s) left on the stack at end of program"
            if not self.cfg.allow_partial:
                raise ResidualStack(message)
            self._note(message)
        return self.emitted


def run_program(
    commands: Iterable[Command],
    cfg: EngineConfig | None = None,
    metrics: MetricsConfig | None = None,
) -> tuple[list[Scene], list[Diagnostic]]:
    machine = Machine(cfg or EngineConfig(), metrics or MetricsConfig())
    scenes = machine.run(commands)
    return scenes, machine.diagnostics
