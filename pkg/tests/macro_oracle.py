"""Register-level re-enactment of the original tree macros.

Only lengths are simulated (no drawing).  Each branch arity is written out
case by case, mirroring the macro bodies, so this stays independent of the
generalized n-ary code in ``stacktree.layout``.  Index 0 of every register
list is the top of the stack ("one"), index 1 is "two", and so on.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class BranchResult:
    branch_width: float
    daughter_offsets: list[float]  # \daughteroffsetone, two, ... (gaps)
    parent_offset: float  # \parentoffset after clipping
    row_offset: float  # \daughteroffset
    picture_origin: float  # \treeoffset: leftmost attachment x
    tree_width: float  # \treewidth
    connector_height: float


@dataclass
class Registers:
    ex_pt: float = 4.3
    offset: list[float] = field(default_factory=list)
    shift: list[float] = field(default_factory=list)
    width: list[float] = field(default_factory=list)
    box: list[float] = field(default_factory=list)  # \wd\treeboxN

    def leaf(self, w: float) -> None:
        self.box.insert(0, w)
        self.offset.insert(0, 0.5 * w)
        self.shift.insert(0, 0.0)
        self.width.insert(0, w)

    def fake(self, w: float) -> None:
        self.width[0] = 0.5 * w + self.offset[0]
        self.shift[0] = self.offset[0] - 0.5 * w

    def _pop(self) -> None:
        # \poptree keeps register "one" and shifts the rest up by one.
        for reg in (self.offset, self.shift, self.width, self.box):
            del reg[1]

    def tree(self) -> None:
        # Restores every register of the new top; the macro itself only
        # restores the offset and the box.
        for reg in (self.offset, self.shift, self.width, self.box):
            del reg[0]

    def _finish(self, parent_w: float, parent_offset: float, tree_width: float, pops: int) -> None:
        self.offset[0] = parent_offset + 0.5 * parent_w
        self.shift[0] = 0.0
        self.width[0] = tree_width
        self.box[0] = tree_width
        for _ in range(pops):
            self._pop()

    @staticmethod
    def _clip(parent_offset: float) -> tuple[float, float]:
        if parent_offset < 0:
            return 0.0, -parent_offset
        return parent_offset, 0.0

    def branch(self, n: int, parent_w: float) -> BranchResult:
        o, s, t, b = self.offset, self.shift, self.width, self.box
        if n == 1:
            parent_offset, daughter = self._clip(o[0] - 0.5 * parent_w)
            parent_width = parent_offset + parent_w
            tree_offset = daughter + o[0]
            tree_width = b[0] + daughter
            if tree_width < parent_width:
                tree_width = parent_width
            result = BranchResult(0.0, [], parent_offset, daughter, tree_offset, tree_width, 2 * self.ex_pt)
            self._finish(parent_w, parent_offset, tree_width, 0)
            return result

        bw1 = t[1] + o[0] - s[0] - o[1]
        bws = [bw1]
        if n >= 3:
            bws.append(t[2] + o[1] - s[1] - o[2])
        if n >= 4:
            bws.append(t[3] + o[2] - s[2] - o[3])
        if n >= 5:
            bws.append(t[4] + o[3] - s[3] - o[4])
        if n > 5:
            raise ValueError(f"Can't handle {n} branching")
        branch_width = bws[0]
        for bw in bws[1:]:
            if bw > branch_width:
                branch_width = bw
        daughter_offsets = [branch_width - bw - s[i] for i, bw in enumerate(bws)]

        if n == 2:
            parent_offset = -0.5 * parent_w + o[1] + 0.5 * branch_width
            height = 0.5 * branch_width * 0.5
        elif n == 3:
            parent_offset = -0.5 * parent_w + o[2] + branch_width
            height = 0.5 * branch_width * 1
        elif n == 4:
            parent_offset = -0.5 * parent_w + o[3] + 1.5 * branch_width
            height = 0.5 * branch_width * 1
        else:
            parent_offset = -0.5 * parent_w + o[4] + 2 * branch_width
            height = 0.5 * branch_width * 1
        parent_offset, daughter = self._clip(parent_offset)
        parent_width = parent_offset + parent_w
        tree_offset = daughter + o[n - 1]
        tree_width = b[0] + daughter
        for i in range(n - 1):
            tree_width += daughter_offsets[i] + t[i + 1]
        if tree_width < parent_width:
            tree_width = parent_width
        result = BranchResult(
            branch_width, daughter_offsets, parent_offset, daughter, tree_offset, tree_width, height
        )
        self._finish(parent_w, parent_offset, tree_width, n - 1)
        return result
