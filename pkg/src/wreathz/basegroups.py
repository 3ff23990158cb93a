"""Base groups for the lamp coordinates: the integers and the cyclic groups Z/k.

Element values are plain integers (residues normalized to [0, k) for Z/k).
The generating set is fixed to {a, a^-1} with a = 1, so word lengths are
closed-form: |n| on Z and min(j, k-j) on Z/k.  A GroupSpec bundles the group
operations; GroupElement is a thin spec-carrying wrapper used at API
boundaries (parsing, embeddings), while inner loops work on raw values.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed literal.  Carries source text and offset for caret messages."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(message)
        self.text = text
        self.pos = pos

    def caret_message(self) -> str:
        return "{}\n  {}\n  {}^".format(self.args[0], self.text, " " * self.pos)


@dataclass(frozen=True)
class GroupSpec:
    """The base group H: the integers when order is None, Z/order otherwise."""

    order: int | None = None

    def __post_init__(self):
        if self.order is not None and self.order < 2:
            raise ValueError(f"cyclic order must be >= 2, got {self.order}")

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    def identity(self) -> int:
        return 0

    def normalize(self, value: int) -> int:
        return value % self.order if self.order else value

    def mul(self, a: int, b: int) -> int:
        return self.normalize(a + b)

    def inv(self, a: int) -> int:
        return self.normalize(-a)

    def word_length(self, a: int) -> int:
        if self.order is None:
            return abs(a)
        a %= self.order
        return min(a, self.order - a)

    def generator_values(self) -> tuple[int, ...]:
        """Non-identity values of the generating set {a, a^-1}."""
        if self.order is None:
            return (1, -1)
        return tuple(sorted({1, self.order - 1}))

    @property
    def diameter(self) -> int:
        """Largest word length; finite groups only."""
        if self.order is None:
            raise ValueError("the integers have unbounded word length")
        return self.order // 2

    def ball(self, radius: int) -> list[int]:
        """All values of word length <= radius, ascending."""
        if radius < 0:
            return []
        if self.order is None:
            return list(range(-radius, radius + 1))
        return [v for v in range(self.order) if self.word_length(v) <= radius]

    def element(self, value: int) -> "GroupElement":
        return GroupElement(self, value)

    def __str__(self) -> str:
        return "Z" if self.order is None else f"Z/{self.order}"


INTEGERS = GroupSpec(None)


def cyclic(order: int) -> GroupSpec:
    return GroupSpec(order)


def parse_group(text: str) -> GroupSpec:
    """Parse a group literal: `Z` or `Z/k` with k >= 2."""
    s = text.strip()
    if s == "Z":
        return INTEGERS
    if s.startswith("Z/"):
        tail = s[2:]
        if not (tail.isdigit() or (tail.startswith("-") and tail[1:].isdigit())):
            raise ParseError("expected an integer after 'Z/'", text, text.find("/") + 1)
        k = int(tail)
        if k < 2:
            raise ParseError(f"cyclic order must be >= 2, got {k}", text, text.find("/") + 1)
        return cyclic(k)
    raise ParseError("expected 'Z' or 'Z/k'", text, 0)


@dataclass(frozen=True)
class GroupElement:
    """A value of a base group, normalized to canonical form."""

    spec: GroupSpec
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.spec.normalize(self.value))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.spec != other.spec:
            raise ValueError(f"mismatched group specs: {self.spec} vs {other.spec}")
        return GroupElement(self.spec, self.value + other.value)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.spec, self.spec.inv(self.value))

    def word_length(self) -> int:
        return self.spec.word_length(self.value)

    @property
    def is_identity(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return str(self.value)
