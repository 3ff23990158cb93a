import random

import pytest

from wreathz import (
    INTEGERS,
    TreeSide,
    TreeVertex,
    WreathElement,
    act,
    base_vertex,
    cyclic,
    dist,
    dist_from_base,
    format_vertex,
    geodesic,
    vertex_of,
)
from wreathz.trees import meet_level, neighbors, representative
from wreathz.verify import random_element, random_stabilizer_element

Z2 = cyclic(2)
PLUS, MINUS = TreeSide.PLUS, TreeSide.MINUS


def el(spec, lamps, shift):
    return WreathElement.of(spec, lamps, shift)


def vx(spec, side, level, lamps=()):
    return TreeVertex(spec, side, level, tuple(sorted(lamps)))


def test_vertex_of_examples():
    assert vertex_of(el(Z2, {}, 3), PLUS) == vx(Z2, PLUS, 3)
    assert vertex_of(el(Z2, {-1: 1}, 0), PLUS) == vx(Z2, PLUS, 0, [(-1, 1)])
    assert vertex_of(el(Z2, {-1: 1}, 0), MINUS) == vx(Z2, MINUS, 0)


def test_vertex_tail_side_constraint():
    with pytest.raises(ValueError, match="strictly below"):
        TreeVertex(Z2, PLUS, 0, ((0, 1),))
    with pytest.raises(ValueError, match="strictly above"):
        TreeVertex(Z2, MINUS, 0, ((0, 1),))


def test_act_examples():
    base = base_vertex(Z2, PLUS)
    assert act(WreathElement.identity(Z2), base) == base
    assert act(el(Z2, {}, 1), base) == vx(Z2, PLUS, 1)
    assert act(el(Z2, {0: 1}, 0), base) == base  # the lamp lies in the stabilizer


def test_geodesic_examples():
    base = base_vertex(Z2, PLUS)
    target = vx(Z2, PLUS, 0, [(-1, 1)])
    assert geodesic(base, target) == [base, vx(Z2, PLUS, -1), target]
    assert geodesic(target, target) == [target]
    spine = vx(Z2, PLUS, 2)
    assert geodesic(base, spine) == [base, vx(Z2, PLUS, 1), spine]


def test_dist_examples():
    v = vx(Z2, PLUS, 2)
    assert dist(v, v) == 0
    assert dist(base_vertex(Z2, PLUS), vertex_of(el(Z2, {-1: 1}, 0), PLUS)) == 2
    assert dist(base_vertex(Z2, MINUS), vertex_of(el(Z2, {1: 1}, -1), MINUS)) == 3


def test_dist_rejects_mixed_trees():
    with pytest.raises(ValueError, match="different trees"):
        dist(base_vertex(Z2, PLUS), base_vertex(Z2, MINUS))
    with pytest.raises(ValueError, match="mismatched"):
        dist(base_vertex(Z2, PLUS), base_vertex(cyclic(3), PLUS))


def test_dist_from_base_examples():
    x = el(Z2, {}, -5)
    assert dist_from_base(x, PLUS) == 5 == dist_from_base(x, MINUS)
    x = el(Z2, {-1: 1, 1: 1}, 0)
    assert dist_from_base(x, PLUS) == 2 == dist_from_base(x, MINUS)
    x = el(Z2, {0: 1}, 4)
    assert dist_from_base(x, PLUS) == 4 == dist_from_base(x, MINUS)


def test_closed_form_matches_meet_rule():
    rng = random.Random(11)
    for spec in (Z2, cyclic(3), INTEGERS):
        for _ in range(400):
            x = random_element(spec, rng)
            for side in TreeSide:
                b = base_vertex(spec, side)
                assert dist_from_base(x, side) == dist(b, vertex_of(x, side))


def test_coset_form_well_defined():
    rng = random.Random(12)
    for _ in range(300):
        x = random_element(Z2, rng)
        for side in TreeSide:
            stab = random_stabilizer_element(Z2, side, rng)
            assert vertex_of(x * stab, side) == vertex_of(x, side)


def test_action_is_isometric_homomorphism():
    rng = random.Random(13)
    spec = cyclic(3)
    for _ in range(300):
        g, h = random_element(spec, rng), random_element(spec, rng)
        side = rng.choice(list(TreeSide))
        u = vertex_of(random_element(spec, rng), side)
        v = vertex_of(random_element(spec, rng), side)
        assert dist(act(g, u), act(g, v)) == dist(u, v)
        assert act(g * h, u) == act(g, act(h, u))
        assert act(g.inverse(), act(g, u)) == u


def test_representative_maps_base_to_vertex():
    rng = random.Random(14)
    for _ in range(200):
        side = rng.choice(list(TreeSide))
        v = vertex_of(random_element(Z2, rng), side)
        assert act(representative(v), base_vertex(Z2, side)) == v


def test_geodesic_structure_random():
    rng = random.Random(15)
    for spec in (Z2, INTEGERS):
        for _ in range(200):
            side = rng.choice(list(TreeSide))
            u = vertex_of(random_element(spec, rng), side)
            v = vertex_of(random_element(spec, rng), side)
            path = geodesic(u, v)
            assert path[0] == u and path[-1] == v
            assert len(path) == dist(u, v) + 1
            assert len(set(path)) == len(path)
            for a, b in zip(path, path[1:]):
                assert abs(a.level - b.level) == 1
                assert dist(a, b) == 1


def test_lower_bounds_from_support():
    rng = random.Random(16)
    for _ in range(300):
        x = random_element(INTEGERS, rng)
        dp, dm = dist_from_base(x, PLUS), dist_from_base(x, MINUS)
        assert dp >= abs(x.shift) and dm >= abs(x.shift)
        if x.lamps:
            assert dp >= -x.lamps[0][0]
            assert dm >= x.lamps[-1][0]


def test_neighbors_shape():
    values = [v for v in cyclic(3).ball(1) if v]
    for side in TreeSide:
        v = vertex_of(el(cyclic(3), {0: 1, 2: 2}, 1), side)
        nbs = list(neighbors(v, values))
        assert len(nbs) == len(values) + 2  # one spine-ward, |values|+1 outward
        assert len(set(nbs)) == len(nbs)
        for nb in nbs:
            assert dist(v, nb) == 1


def test_meet_level_symmetric():
    rng = random.Random(17)
    for _ in range(200):
        side = rng.choice(list(TreeSide))
        u = vertex_of(random_element(Z2, rng), side)
        v = vertex_of(random_element(Z2, rng), side)
        assert meet_level(u, v) == meet_level(v, u)


def test_format_vertex():
    assert format_vertex(vx(Z2, PLUS, 3)) == "T+ [3 | ]"
    assert format_vertex(vx(Z2, PLUS, 0, [(-1, 1)])) == "T+ [0 | 1@-1]"
    assert format_vertex(vx(Z2, MINUS, -1, [(1, 1), (2, 1)])) == "T- [-1 | 1@1,1@2]"
