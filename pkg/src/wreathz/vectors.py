"""Sparse vectors over tagged coordinate keys with per-class inner products.

Coordinates come in three classes: geometric (unoriented) tree edges,
oriented tree edges, and (lamp index, base coordinate) pairs.  Oriented
edges carry the half-sum convention <x|y> = 1/2 * sum x(e) y(e), so that a
unit charge on an edge and its reverse has norm 1; the other classes use the
standard sum.  The convention is resolved per key class inside the inner
product, so one vector type covers the whole direct sum.

Values may be exact Fractions (cocycle identities are checked exactly) or
floats (the weighted path and simplex embeddings have irrational weights).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Union

from .trees import TreeVertex, format_vertex


@dataclass(frozen=True)
class GeomEdge:
    """Unoriented tree edge, endpoints ordered by level."""

    lo: TreeVertex
    hi: TreeVertex

    def __post_init__(self):
        if self.lo.side is not self.hi.side or self.lo.spec != self.hi.spec:
            raise ValueError("edge endpoints must lie in the same tree")
        if self.hi.level - self.lo.level != 1:
            raise ValueError("edge endpoints must be on adjacent levels")


def geom_edge(u: TreeVertex, v: TreeVertex) -> GeomEdge:
    """Canonical unoriented edge between two adjacent vertices."""
    return GeomEdge(u, v) if u.level < v.level else GeomEdge(v, u)


@dataclass(frozen=True)
class OrientedEdge:
    """Oriented tree edge from src to dst."""

    src: TreeVertex
    dst: TreeVertex

    def __post_init__(self):
        if self.src.side is not self.dst.side or self.src.spec != self.dst.spec:
            raise ValueError("edge endpoints must lie in the same tree")
        if abs(self.src.level - self.dst.level) != 1:
            raise ValueError("edge endpoints must be on adjacent levels")

    def reversed(self) -> "OrientedEdge":
        return OrientedEdge(self.dst, self.src)


@dataclass(frozen=True)
class LampCoord:
    """Coordinate `coord` of the lamp-index-`index` copy of the base space."""

    index: int
    coord: int


CoordKey = Union[GeomEdge, OrientedEdge, LampCoord]

Scalar = Union[int, Fraction, float]


def coord_weight(key: CoordKey) -> Scalar:
    return Fraction(1, 2) if isinstance(key, OrientedEdge) else 1


def _vertex_sort_key(v: TreeVertex):
    return (v.level, v.tail)


def coord_sort_key(key: CoordKey):
    if isinstance(key, GeomEdge):
        return (0, key.lo.side.value, *_vertex_sort_key(key.lo), *_vertex_sort_key(key.hi))
    if isinstance(key, OrientedEdge):
        return (1, key.src.side.value, *_vertex_sort_key(key.src), *_vertex_sort_key(key.dst))
    return (2, "", key.index, (), key.coord, ())


def format_key(key: CoordKey) -> str:
    if isinstance(key, GeomEdge):
        return f"ge {format_vertex(key.lo)} -- {format_vertex(key.hi)}"
    if isinstance(key, OrientedEdge):
        return f"oe {format_vertex(key.src)} -> {format_vertex(key.dst)}"
    return f"lamp {key.index} : {key.coord}"


def format_value(value: Scalar) -> str:
    if isinstance(value, Rational):
        return str(value)
    return f"{value:.12f}"


class SparseVector:
    """Immutable finitely supported vector keyed by CoordKey."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[tuple[CoordKey, Scalar]] = ()):
        acc: dict[CoordKey, Scalar] = {}
        for key, value in entries:
            v = acc.get(key, 0) + value
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        self._entries = acc

    @classmethod
    def zero(cls) -> "SparseVector":
        return cls()

    @classmethod
    def single(cls, key: CoordKey, value: Scalar) -> "SparseVector":
        return cls([(key, value)])

    def items(self) -> Iterator[tuple[CoordKey, Scalar]]:
        return iter(self._entries.items())

    def get(self, key: CoordKey) -> Scalar:
        return self._entries.get(key, 0)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self._entries == other._entries

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "SparseVector") -> "SparseVector":
        out = SparseVector()
        acc = dict(self._entries)
        for key, value in other._entries.items():
            v = acc.get(key, 0) + value
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        out._entries = acc
        return out

    def __neg__(self) -> "SparseVector":
        out = SparseVector()
        out._entries = {k: -v for k, v in self._entries.items()}
        return out

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "SparseVector":
        out = SparseVector()
        if scalar:
            out._entries = {k: v * scalar for k, v in self._entries.items()}
        return out

    __rmul__ = __mul__

    def ip(self, other: "SparseVector") -> Scalar:
        """Inner product; oriented-edge coordinates contribute with weight 1/2."""
        a, b = self._entries, other._entries
        if len(b) < len(a):
            a, b = b, a
        total: Scalar = 0
        for key, value in a.items():
            w = b.get(key)
            if w is not None:
                total += coord_weight(key) * value * w
        return total

    def norm_squared(self) -> Scalar:
        return self.ip(self)

    def norm(self) -> float:
        return float(self.norm_squared()) ** 0.5

    def dump_lines(self) -> list[str]:
        """One `key<TAB>value` line per coordinate, deterministically ordered."""
        keys = sorted(self._entries, key=coord_sort_key)
        return [f"{format_key(k)}\t{format_value(self._entries[k])}" for k in keys]

    def __repr__(self) -> str:
        return f"SparseVector({len(self._entries)} coords)"
