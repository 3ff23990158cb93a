import pytest

from wreathz import INTEGERS, GroupElement, ParseError, cyclic, parse_group


def test_mul_examples():
    z2, z3 = cyclic(2), cyclic(3)
    assert (z2.element(1) * z2.element(1)).value == 0
    assert (INTEGERS.element(3) * INTEGERS.element(-5)).value == -2
    assert (z3.element(2) * z3.element(2)).value == 1


def test_mul_rejects_mismatched_specs():
    with pytest.raises(ValueError, match="mismatched"):
        cyclic(2).element(1) * cyclic(3).element(1)
    with pytest.raises(ValueError, match="mismatched"):
        INTEGERS.element(1) * cyclic(2).element(1)


def test_word_length_examples():
    assert INTEGERS.word_length(-7) == 7
    assert cyclic(5).word_length(4) == 1
    assert cyclic(2).word_length(1) == 1
    assert INTEGERS.word_length(0) == 0


def test_word_length_symmetric_and_zero_at_identity():
    for spec in (INTEGERS, cyclic(2), cyclic(7)):
        assert spec.word_length(spec.identity) == 0
        for v in spec.ball(6):
            assert spec.word_length(v) == spec.word_length(spec.inv(v))


def test_triangle_inequality_on_radius_6_ball():
    for spec in (INTEGERS, cyclic(2), cyclic(7)):
        ball = spec.ball(6)
        for a in ball:
            for b in ball:
                lhs = spec.word_length(spec.mul(a, b))
                assert lhs <= spec.word_length(a) + spec.word_length(b)


def test_ball_examples():
    assert cyclic(2).ball(1) == [0, 1]
    assert INTEGERS.ball(2) == [-2, -1, 0, 1, 2]
    assert cyclic(7).ball(2) == [0, 1, 2, 5, 6]


def test_ball_sizes():
    for radius in range(8):
        assert len(INTEGERS.ball(radius)) == 2 * radius + 1
    for k in (2, 3, 6, 7):
        spec = cyclic(k)
        for radius in range(8):
            assert len(spec.ball(radius)) == min(k, len(spec.ball(radius)))
        assert len(spec.ball(k)) == k  # saturates at the whole group


def test_cyclic_normalization():
    z5 = cyclic(5)
    assert z5.normalize(7) == 2
    assert z5.normalize(-1) == 4
    assert GroupElement(z5, -1).value == 4


def test_generator_values():
    assert INTEGERS.generator_values() == (1, -1)
    assert cyclic(2).generator_values() == (1,)
    assert cyclic(5).generator_values() == (1, 4)


def test_diameter():
    assert cyclic(2).diameter == 1
    assert cyclic(7).diameter == 3
    with pytest.raises(ValueError):
        INTEGERS.diameter


def test_parse_group():
    assert parse_group("Z") == INTEGERS
    assert parse_group("Z/5") == cyclic(5)
    assert parse_group(" Z/2 ") == cyclic(2)
    with pytest.raises(ParseError):
        parse_group("Z/1")
    with pytest.raises(ParseError):
        parse_group("S3")
    with pytest.raises(ValueError):
        cyclic(1)


def test_group_literal_roundtrip():
    for spec in (INTEGERS, cyclic(2), cyclic(12)):
        assert parse_group(str(spec)) == spec
