"""Coset models of the two Bass-Serre trees attached to H wr Z.

A vertex of the plus tree is a coset determined by an integer level n and
the lamp values strictly below n; the minus tree mirrors this with the
values strictly above n.  Dropping the entry adjacent to the level steps one
edge toward the contracting spine direction (level - 1 on the plus side,
level + 1 on the minus side), and the unique geodesic between two vertices
descends both to their meet and is read off from tail restrictions alone.

Both trees are (|H| + 1)-regular and infinite; only geodesic vertices are
ever materialized.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .basegroups import GroupSpec
from .wreath import LampConfig, WreathElement


class TreeSide(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"

    def __str__(self) -> str:
        return "T+" if self is TreeSide.PLUS else "T-"


@dataclass(frozen=True)
class TreeVertex:
    """Canonical coset form: a level and the tail on one side of it."""

    spec: GroupSpec
    side: TreeSide
    level: int
    tail: LampConfig

    def __post_init__(self):
        if self.tail:
            if self.side is TreeSide.PLUS and self.tail[-1][0] >= self.level:
                raise ValueError("plus-side tail must lie strictly below the level")
            if self.side is TreeSide.MINUS and self.tail[0][0] <= self.level:
                raise ValueError("minus-side tail must lie strictly above the level")

    def __str__(self) -> str:
        return format_vertex(self)


def base_vertex(spec: GroupSpec, side: TreeSide) -> TreeVertex:
    """The base point: level 0, empty tail."""
    return TreeVertex(spec, side, 0, ())


def _restrict(tail: LampConfig, side: TreeSide, level: int) -> LampConfig:
    if side is TreeSide.PLUS:
        return tuple((p, v) for p, v in tail if p < level)
    return tuple((p, v) for p, v in tail if p > level)


def vertex_of(x: WreathElement, side: TreeSide) -> TreeVertex:
    """Canonical form of the coset of x: the lamp entries on the level's far
    side are absorbed by the vertex stabilizer."""
    return TreeVertex(x.spec, side, x.shift, _restrict(x.lamps, side, x.shift))


def representative(v: TreeVertex) -> WreathElement:
    """The canonical group element mapping the base vertex to v."""
    return WreathElement(v.spec, v.tail, v.level)


def act(g: WreathElement, v: TreeVertex) -> TreeVertex:
    """Left action on cosets; a tree automorphism."""
    if g.spec != v.spec:
        raise ValueError(f"mismatched group specs: {g.spec} vs {v.spec}")
    return vertex_of(g * representative(v), v.side)


def _require_same_tree(u: TreeVertex, v: TreeVertex):
    if u.side is not v.side:
        raise ValueError(f"vertices lie in different trees: {u.side.value} vs {v.side.value}")
    if u.spec != v.spec:
        raise ValueError(f"mismatched group specs: {u.spec} vs {v.spec}")


def meet_level(u: TreeVertex, v: TreeVertex) -> int:
    """Level of the meet: the deepest common restriction of the two vertices.

    On the plus side this is min(level_u, level_v, first position where the
    tails disagree); the minus side mirrors with max and last position.
    """
    _require_same_tree(u, v)
    du, dv = dict(u.tail), dict(v.tail)
    diffs = [p for p in du.keys() | dv.keys() if du.get(p) != dv.get(p)]
    if u.side is TreeSide.PLUS:
        k = min(u.level, v.level)
        return min(k, min(diffs)) if diffs else k
    k = max(u.level, v.level)
    return max(k, max(diffs)) if diffs else k


def dist(u: TreeVertex, v: TreeVertex) -> int:
    """Tree distance, without materializing the geodesic."""
    k = meet_level(u, v)
    if u.side is TreeSide.PLUS:
        return (u.level - k) + (v.level - k)
    return (k - u.level) + (k - v.level)


def _descent(v: TreeVertex, target_level: int) -> list[TreeVertex]:
    """Vertices from v down to target_level inclusive."""
    out = [v]
    tail = v.tail
    if v.side is TreeSide.PLUS:
        for k in range(v.level - 1, target_level - 1, -1):
            if tail and tail[-1][0] >= k:
                tail = tail[:-1]
            out.append(TreeVertex(v.spec, v.side, k, tail))
    else:
        for k in range(v.level + 1, target_level + 1):
            if tail and tail[0][0] <= k:
                tail = tail[1:]
            out.append(TreeVertex(v.spec, v.side, k, tail))
    return out


def geodesic(u: TreeVertex, v: TreeVertex) -> list[TreeVertex]:
    """The unique geodesic from u to v: u descends to the meet, then climbs
    to v along the reversed descent of v."""
    _require_same_tree(u, v)
    k = meet_level(u, v)
    down = _descent(u, k)
    up = _descent(v, k)
    up.pop()  # the meet is already the last vertex of the descent from u
    return down + up[::-1]


def dist_from_base(x: WreathElement, side: TreeSide) -> int:
    """Closed-form distance from the base vertex to the coset of x.

    With empty lamps this is |n|.  Otherwise, writing m and M for the support
    extremes: on the plus side |n| unless n > m and m < 0, in which case
    n - 2m; on the minus side |n| unless n < M and M > 0, in which case
    2M - n.
    """
    n = x.shift
    if not x.lamps:
        return abs(n)
    if side is TreeSide.PLUS:
        m = x.lamps[0][0]
        return abs(n) if (n <= m or m >= 0) else n - 2 * m
    m = x.lamps[-1][0]
    return abs(n) if (n >= m or m <= 0) else 2 * m - n


def neighbors(v: TreeVertex, values: Sequence[int]) -> Iterable[TreeVertex]:
    """Adjacent vertices in the tree truncated to the given non-identity lamp
    values: the unique spine-ward vertex plus one branch per optional value
    at the level position.  Tail surgery is O(1) because the entry being
    added or dropped always sits at the tail's end nearest the level."""
    spec, side, n, tail = v.spec, v.side, v.level, v.tail
    if side is TreeSide.PLUS:
        down = tail[:-1] if tail and tail[-1][0] == n - 1 else tail
        yield TreeVertex(spec, side, n - 1, down)
        yield TreeVertex(spec, side, n + 1, tail)
        for value in values:
            yield TreeVertex(spec, side, n + 1, tail + ((n, value),))
    else:
        down = tail[1:] if tail and tail[0][0] == n + 1 else tail
        yield TreeVertex(spec, side, n + 1, down)
        yield TreeVertex(spec, side, n - 1, tail)
        for value in values:
            yield TreeVertex(spec, side, n - 1, ((n, value),) + tail)


def format_vertex(v: TreeVertex) -> str:
    """Vertex literal `T+ [n | v1@p1,...]`; an empty tail leaves the slot blank."""
    body = ",".join(f"{value}@{pos}" for pos, value in v.tail)
    return f"{v.side} [{v.level} | {body}]"
