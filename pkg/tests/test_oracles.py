import random
from itertools import product

import pytest

from wreathz import (
    INTEGERS,
    BudgetError,
    H_DIRAC_SIMPLEX,
    H_IDENTITY_LINE,
    TreeSide,
    WreathElement,
    ball_reports,
    base_vertex,
    cayley_bfs,
    cyclic,
    dist,
    properness_check,
    properness_cross_check,
    tree_bfs_dist,
    vertex_of,
)
from wreathz.oracles import (
    _raw_tree_neighbors,
    factor_cost,
    generators,
    product_distance_pth,
    properness_search_radius,
)
from wreathz.trees import neighbors
from wreathz.verify import Z2_BALL_SIZES, random_element

Z2 = cyclic(2)


def el(spec, lamps, shift):
    return WreathElement.of(spec, lamps, shift)


def test_generators():
    gens = generators(Z2)
    assert len(gens) == 3  # a, s, s^-1 (a is its own inverse)
    assert len(generators(cyclic(3))) == 4
    assert len(generators(INTEGERS)) == 4


def test_bfs_radius_zero():
    assert cayley_bfs(Z2, 0) == {WreathElement.identity(Z2): 0}


def test_bfs_small_ball_sizes_frozen():
    lengths = cayley_bfs(Z2, 2)
    sizes = [sum(1 for d in lengths.values() if d <= r) for r in range(3)]
    assert sizes == Z2_BALL_SIZES[:3]  # [1, 4, 10]


def test_bfs_finds_conjugated_lamp():
    lengths = cayley_bfs(Z2, 3)
    assert lengths[el(Z2, {1: 1}, 0)] == 3  # s a s^-1


def test_bfs_agrees_with_formula_radius_5():
    for spec, radius in ((Z2, 5), (cyclic(3), 4), (INTEGERS, 4)):
        for x, d in cayley_bfs(spec, radius).items():
            assert x.word_length() == d


def test_bfs_budget_guard():
    with pytest.raises(BudgetError):
        cayley_bfs(Z2, 8, budget=100)


def test_budget_env_var(monkeypatch):
    monkeypatch.setenv("WREATHZ_ELEMENT_BUDGET", "50")
    with pytest.raises(BudgetError):
        cayley_bfs(Z2, 8)
    cayley_bfs(Z2, 3)  # under the reduced budget
    monkeypatch.delenv("WREATHZ_ELEMENT_BUDGET")
    cayley_bfs(Z2, 8)


def test_ball_reports():
    reports = ball_reports(Z2, 4, keep_elements_up_to=1)
    assert [r.count for r in reports] == Z2_BALL_SIZES[:5]
    assert [r.radius for r in reports] == [0, 1, 2, 3, 4]
    assert len(reports[1].elements) == 4
    assert reports[2].elements is None
    assert all(r.count <= s.count for r, s in zip(reports, reports[1:]))


def test_tree_bfs_examples():
    b_plus = base_vertex(Z2, TreeSide.PLUS)
    assert tree_bfs_dist(b_plus, b_plus, 1) == 0
    target = vertex_of(el(Z2, {-1: 1}, 0), TreeSide.PLUS)
    assert tree_bfs_dist(b_plus, target, 1) == 2
    b_minus = base_vertex(Z2, TreeSide.MINUS)
    target = vertex_of(el(Z2, {1: 1}, -1), TreeSide.MINUS)
    assert tree_bfs_dist(b_minus, target, 1) == 3


def test_tree_bfs_validates_inputs():
    b = base_vertex(INTEGERS, TreeSide.PLUS)
    deep = vertex_of(el(INTEGERS, {0: 5}, 1), TreeSide.PLUS)
    with pytest.raises(ValueError, match="truncation"):
        tree_bfs_dist(b, deep, 2)
    with pytest.raises(ValueError, match="same tree"):
        tree_bfs_dist(b, base_vertex(INTEGERS, TreeSide.MINUS), 2)


def test_tree_bfs_budget_guard():
    b = base_vertex(INTEGERS, TreeSide.PLUS)
    far = vertex_of(el(INTEGERS, {-3: 2, 2: -2}, 4), TreeSide.PLUS)
    with pytest.raises(BudgetError):
        tree_bfs_dist(b, far, 2, budget=10)


def test_tree_bfs_matches_dist_random():
    rng = random.Random(31)
    for spec, vrad in ((Z2, 1), (cyclic(3), 1), (INTEGERS, 2)):
        for _ in range(150):
            side = rng.choice(list(TreeSide))
            u = vertex_of(random_element(spec, rng), side)
            v = vertex_of(random_element(spec, rng), side)
            assert tree_bfs_dist(u, v, vrad) == dist(u, v)


def test_raw_neighbors_match_public_adjacency():
    rng = random.Random(32)
    values = tuple(v for v in cyclic(3).ball(1) if v)
    for _ in range(100):
        side = rng.choice(list(TreeSide))
        v = vertex_of(random_element(cyclic(3), rng), side)
        raw = _raw_tree_neighbors((v.level, v.tail), values, side is TreeSide.PLUS)
        public = [(nb.level, nb.tail) for nb in neighbors(v, values)]
        assert sorted(raw) == sorted(public)


def test_factor_cost():
    assert factor_cost(INTEGERS, -3, H_IDENTITY_LINE) == 3
    assert factor_cost(Z2, 1, H_DIRAC_SIMPLEX) == 1
    assert factor_cost(cyclic(7), 2, H_DIRAC_SIMPLEX) == 3
    assert factor_cost(cyclic(7), 0, H_DIRAC_SIMPLEX) == 0


def test_properness_radius_zero_counts_identity_only():
    report = properness_check(Z2, 0, 1, H_DIRAC_SIMPLEX)
    assert report.count == 1
    assert report.value_ball == ()


def test_properness_counts_frozen():
    got = {
        (p, r): properness_check(Z2, r, p, H_DIRAC_SIMPLEX).count
        for p in (1, 2)
        for r in (1, 2, 3, 4)
    }
    assert [got[(1, r)] for r in (1, 2, 3, 4)] == [2, 4, 10, 16]
    assert [got[(2, r)] for r in (1, 2, 3, 4)] == [2, 10, 22, 48]


def test_properness_monotone_in_radius():
    for p in (1, 2):
        counts = [properness_check(Z2, r, p, H_DIRAC_SIMPLEX).count for r in range(5)]
        assert counts == sorted(counts)


def test_properness_cross_check_agrees():
    for p in (1, 2):
        for radius in (1, 2, 3):
            report, cross, agree = properness_cross_check(Z2, radius, p, H_DIRAC_SIMPLEX)
            assert agree and report.count == cross


def test_properness_integer_lamps():
    # identity, and the two unit lamps at the origin
    report = properness_check(INTEGERS, 1, 1, H_IDENTITY_LINE)
    assert report.count == 3
    report, cross, agree = properness_cross_check(INTEGERS, 2, 1, H_IDENTITY_LINE)
    assert agree and report.count == cross


def test_properness_validates_exponent():
    with pytest.raises(ValueError, match="integer"):
        properness_check(Z2, 2, 1.5, H_DIRAC_SIMPLEX)
    with pytest.raises(ValueError, match="nonnegative"):
        properness_check(Z2, -1, 1, H_DIRAC_SIMPLEX)


def test_properness_filter_is_inside_superset():
    report = properness_check(Z2, 3, 1, H_DIRAC_SIMPLEX)
    assert report.count <= report.candidate_count
    assert report.shift_bound == report.support_bound == 3


def test_search_radius_covers_solutions():
    # every element within metric radius R must fit in the scan radius
    for p in (1, 2):
        for radius in (1, 2, 3, 4):
            scan = properness_search_radius(Z2, radius, p, H_DIRAC_SIMPLEX)
            for combo in product([0, 1], repeat=5):
                lamps = tuple((q, v) for q, v in zip(range(-2, 3), combo) if v)
                for n in range(-3, 4):
                    x = WreathElement(Z2, lamps, n)
                    if product_distance_pth(x, p, H_DIRAC_SIMPLEX) <= radius**p:
                        assert x.word_length() <= scan
