"""Brute-force ground truth: Cayley BFS, truncated tree BFS, properness counts.

Everything here is deliberately independent of the closed forms it checks:
word lengths come from layer-by-layer expansion over the standard
generators, tree distances from bidirectional search using only adjacency,
and properness counts from filtering a finite candidate family by the exact
product metric.  All searches carry an element budget (default 10^7,
overridable via the WREATHZ_ELEMENT_BUDGET environment variable) and fail
loudly when it is exceeded.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .basegroups import GroupSpec
from .embeddings import H_DIRAC_SIMPLEX, H_IDENTITY_LINE, validate_h_mode
from .trees import TreeSide, TreeVertex, dist_from_base
from .wreath import WreathElement

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV_VAR = "WREATHZ_ELEMENT_BUDGET"


class BudgetError(RuntimeError):
    """An oracle search outgrew its element budget."""


def element_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    raw = os.environ.get(BUDGET_ENV_VAR)
    return int(raw) if raw else DEFAULT_BUDGET


def generators(spec: GroupSpec) -> list[WreathElement]:
    """The standard generating set: one lamp generator per base generator
    value, plus the shift and its inverse."""
    gens = [WreathElement(spec, ((0, v),), 0) for v in spec.generator_values()]
    gens.append(WreathElement(spec, (), 1))
    gens.append(WreathElement(spec, (), -1))
    return gens


def cayley_bfs(
    spec: GroupSpec, radius_cap: int, budget: int | None = None
) -> dict[WreathElement, int]:
    """Exact word length of every element in the ball of the given radius,
    by breadth-first expansion over the standard generators."""
    budget = element_budget(budget)
    lamp_values = spec.generator_values()
    start = ((), 0)
    found: dict[tuple, int] = {start: 0}
    frontier = [start]
    for layer in range(1, radius_cap + 1):
        grown = []
        for lamps, n in frontier:
            nxt = [(lamps, n + 1), (lamps, n - 1)]
            for g in lamp_values:
                acc = dict(lamps)
                v = spec.mul(acc.get(n, 0), g)
                if v:
                    acc[n] = v
                else:
                    del acc[n]
                nxt.append((tuple(sorted(acc.items())), n))
            for el in nxt:
                if el not in found:
                    found[el] = layer
                    grown.append(el)
        if len(found) > budget:
            raise BudgetError(
                f"Cayley ball outgrew the element budget ({len(found)} > {budget}) at radius {layer}"
            )
        frontier = grown
    return {WreathElement(spec, lamps, n): d for (lamps, n), d in found.items()}


@dataclass(frozen=True)
class BallReport:
    """Cumulative ball size at one radius."""

    radius: int
    count: int
    generator_set: str
    elements: tuple[WreathElement, ...] | None = None


def ball_reports(
    spec: GroupSpec,
    radius_cap: int,
    budget: int | None = None,
    keep_elements_up_to: int = -1,
) -> list[BallReport]:
    """Ball sizes for radii 0..radius_cap; element lists kept for the small radii."""
    lengths = cayley_bfs(spec, radius_cap, budget)
    desc = "lamp generators {%s} + shift" % ", ".join(map(str, spec.generator_values()))
    out = []
    for r in range(radius_cap + 1):
        members = [el for el, d in lengths.items() if d <= r]
        keep = tuple(members) if r <= keep_elements_up_to else None
        out.append(BallReport(r, len(members), desc, keep))
    return out


def _raw_tree_neighbors(vert: tuple, values, plus_side: bool) -> list[tuple]:
    """Adjacency on raw (level, tail) pairs, mirroring trees.neighbors.  The
    entry adjacent to the level always sits at the tail's end nearest it, so
    tail surgery is O(1)."""
    n, tail = vert
    out = []
    if plus_side:
        down = tail[:-1] if tail and tail[-1][0] == n - 1 else tail
        out.append((n - 1, down))
        out.append((n + 1, tail))
        for value in values:
            out.append((n + 1, tail + ((n, value),)))
    else:
        down = tail[1:] if tail and tail[0][0] == n + 1 else tail
        out.append((n + 1, down))
        out.append((n - 1, tail))
        for value in values:
            out.append((n - 1, ((n, value),) + tail))
    return out


def tree_bfs_dist(
    u: TreeVertex, v: TreeVertex, value_radius: int, budget: int | None = None
) -> int:
    """Distance in the tree truncated to lamp values of base word length at
    most value_radius, by bidirectional breadth-first search.

    The truncated tree is an isometrically embedded subtree, so the result
    equals the true distance whenever both tails fit inside the truncation
    (checked here).  Geodesics never introduce values beyond the two tails.
    """
    if u.side is not v.side or u.spec != v.spec:
        raise ValueError("tree BFS needs two vertices of the same tree")
    spec = u.spec
    values = tuple(w for w in spec.ball(value_radius) if w)
    allowed = set(values)
    for vert in (u, v):
        if any(val not in allowed for _, val in vert.tail):
            raise ValueError("tail value outside the truncation ball; raise value_radius")
    if u == v:
        return 0
    budget = element_budget(budget)
    plus_side = u.side is TreeSide.PLUS
    side_a: dict[tuple, int] = {(u.level, u.tail): 0}
    side_b: dict[tuple, int] = {(v.level, v.tail): 0}
    frontier_a, frontier_b = list(side_a), list(side_b)
    depth_a = depth_b = 0
    while frontier_a and frontier_b:
        if len(frontier_a) <= len(frontier_b):
            seen, other, frontier = side_a, side_b, frontier_a
            depth_a += 1
            depth = depth_a
        else:
            seen, other, frontier = side_b, side_a, frontier_b
            depth_b += 1
            depth = depth_b
        grown = []
        best = None
        for vert in frontier:
            for nb in _raw_tree_neighbors(vert, values, plus_side):
                if nb not in seen:
                    seen[nb] = depth
                    grown.append(nb)
                    d_other = other.get(nb)
                    if d_other is not None:
                        total = depth + d_other
                        best = total if best is None else min(best, total)
        if best is not None:
            return best
        if len(side_a) + len(side_b) > budget:
            raise BudgetError(
                f"tree search outgrew the element budget ({len(side_a) + len(side_b)} > {budget})"
            )
        if seen is side_a:
            frontier_a = grown
        else:
            frontier_b = grown
    raise RuntimeError("frontiers died out; the truncated tree is connected, so this is a bug")


def factor_cost(spec: GroupSpec, value: int, h_mode: str) -> int:
    """Displacement of the base point of the lamp factor space under a value:
    |value| for the integer line, diam * [value != identity] for the simplex."""
    if h_mode == H_IDENTITY_LINE:
        return abs(value)
    return spec.diameter if value else 0


def product_distance_pth(x: WreathElement, p: int, h_mode: str) -> int:
    """d(z, x.z)^p in the product of the two trees (graph metric) and the
    lamp factors, for the orbit of the canonical base point z."""
    dp = dist_from_base(x, TreeSide.PLUS)
    dm = dist_from_base(x, TreeSide.MINUS)
    total = dp**p + dm**p
    for _, value in x.lamps:
        total += factor_cost(x.spec, value, h_mode) ** p
    return total


@dataclass(frozen=True)
class PropernessReport:
    """Exact count of group elements moving the base point at most `radius`."""

    group: str
    radius: Fraction
    p: int
    h_mode: str
    count: int
    candidate_count: int
    shift_bound: int
    support_bound: int
    value_ball: tuple[int, ...]

    def lines(self) -> list[str]:
        return [
            f"group={self.group}",
            f"radius={self.radius}",
            f"p={self.p}",
            f"h_mode={self.h_mode}",
            f"count={self.count}",
            f"candidates={self.candidate_count}",
            f"shift_bound={self.shift_bound}",
            f"support_bound={self.support_bound}",
            "value_ball={%s}" % ",".join(map(str, self.value_ball)),
        ]


def _max_lamp_sum_line(budget: int, positions: int, p: int) -> int:
    """Max total |value| over at most `positions` integer lamps with
    sum(|value|^p) <= budget; small bounded knapsack."""
    if budget <= 0 or positions <= 0:
        return 0
    if p == 1:
        return budget
    best = [0] * (budget + 1)
    vmax = int(budget ** (1.0 / p)) + 1
    while vmax**p > budget:
        vmax -= 1
    for _ in range(positions):
        nxt = best[:]
        for c in range(budget + 1):
            for v in range(1, vmax + 1):
                cost = c + v**p
                if cost > budget:
                    break
                if best[c] + v > nxt[cost]:
                    nxt[cost] = best[c] + v
        best = nxt
    return max(best)


def properness_search_radius(spec: GroupSpec, radius: Fraction, p: int, h_mode: str) -> int:
    """A word-length bound covering every element that moves the base point
    at most `radius`: maximize d+ + d- + sum of lamp lengths over the
    feasible component combinations (word length never exceeds that sum)."""
    r = int(radius)
    rp = Fraction(radius) ** p
    npos = 2 * r + 1
    best = r
    for dp in range(r + 1):
        for dm in range(r + 1):
            rem = rp - dp**p - dm**p
            if rem < 0:
                continue
            if h_mode == H_DIRAC_SIMPLEX:
                diam = spec.diameter
                lit = min(npos, int(rem / diam**p)) if diam else 0
                lamp_sum = lit * diam
            else:
                lamp_sum = _max_lamp_sum_line(int(rem), npos, p)
            best = max(best, dp + dm + lamp_sum)
    return best


def _value_ball(spec: GroupSpec, radius: Fraction, h_mode: str) -> tuple[int, ...]:
    r = int(radius)
    values = spec.ball(r) if spec.is_finite else range(-r, r + 1)
    return tuple(v for v in values if v and factor_cost(spec, v, h_mode) <= radius)


def _superset_members(
    spec: GroupSpec, radius: Fraction, p: int, h_mode: str, budget: int
):
    """Enumerate the candidate family of the finiteness argument: shifts and
    support within [-R, R], values in the factor ball.  Configurations whose
    lamp cost already exceeds the metric bound are pruned early; pruning
    only discards candidates the distance filter would reject anyway."""
    r = int(radius)
    rp = Fraction(radius) ** p
    positions = list(range(-r, r + 1))
    ball = _value_ball(spec, radius, h_mode)
    shifts = list(range(-r, r + 1))
    examined = 0

    def rec(idx: int, lamps: list[tuple[int, int]], cost: int):
        nonlocal examined
        examined += 1
        if examined > budget:
            raise BudgetError(f"properness enumeration outgrew the element budget ({budget})")
        if idx == len(positions):
            for n in shifts:
                yield WreathElement(spec, tuple(lamps), n)
            return
        yield from rec(idx + 1, lamps, cost)
        for v in ball:
            c = cost + factor_cost(spec, v, h_mode) ** p
            if c <= rp:
                lamps.append((positions[idx], v))
                yield from rec(idx + 1, lamps, c)
                lamps.pop()

    yield from rec(0, [], 0)


def properness_check(
    spec: GroupSpec, radius, p: int, h_mode: str, budget: int | None = None
) -> PropernessReport:
    """Count the elements with d(z, gamma z) <= radius exactly, by filtering
    the finite candidate family of the finiteness argument.

    Exactness needs an integer exponent; the two trees always carry the
    graph metric.
    """
    if p < 1 or int(p) != p:
        raise ValueError(f"the exponent must be an integer >= 1, got {p}")
    p = int(p)
    validate_h_mode(spec, h_mode)
    radius = Fraction(radius)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    rp = radius**p
    budget = element_budget(budget)
    r = int(radius)
    count = 0
    for item in _superset_members(spec, radius, p, h_mode, budget):
        if product_distance_pth(item, p, h_mode) <= rp:
            count += 1
    value_ball = _value_ball(spec, radius, h_mode)
    box = (len(value_ball) + 1) ** (2 * r + 1) * (2 * r + 1)
    return PropernessReport(
        group=str(spec),
        radius=radius,
        p=p,
        h_mode=h_mode,
        count=count,
        candidate_count=box,
        shift_bound=r,
        support_bound=r,
        value_ball=value_ball,
    )


def properness_cross_check(
    spec: GroupSpec, radius, p: int, h_mode: str, budget: int | None = None
) -> tuple[PropernessReport, int, bool]:
    """Two-sided count: the candidate-family filter against an exhaustive
    scan of the Cayley ball whose radius provably covers every solution.
    Returns (report, ball-scan count, sets agree)."""
    report = properness_check(spec, radius, p, h_mode, budget)
    radius = Fraction(radius)
    rp = radius ** int(p)
    scan_radius = properness_search_radius(spec, radius, int(p), h_mode)
    ball = cayley_bfs(spec, scan_radius, budget)
    from_ball = {x for x in ball if product_distance_pth(x, int(p), h_mode) <= rp}
    filtered = {
        item
        for item in _superset_members(spec, radius, int(p), h_mode, element_budget(budget))
        if product_distance_pth(item, int(p), h_mode) <= rp
    }
    return report, len(from_ball), filtered == from_ball
