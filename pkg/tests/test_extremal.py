"""
Tests for antichain covers, set pairs and cross-intersecting covers.
"""

import math
from fractions import Fraction

import pytest

from pydilworth.base import Limits
from pydilworth.exact import Coloring, verify_certificate
from pydilworth.extremal import (
    SetPair,
    antichain_cover,
    bollobas_cover_bounds,
    bollobas_inequality,
    decode_families,
    is_antichain,
    is_cross_intersecting,
    level_coloring,
)
from pydilworth.products import and_power


def test_antichain_cover_levels():
    levels = antichain_cover(3)
    assert [len(level) for level in levels] == [1, 3, 3, 1]
    assert levels[1] == [frozenset({1}), frozenset({2}), frozenset({3})]
    assert all(is_antichain(level) for level in levels)
    assert antichain_cover(0) == [[frozenset()]]


@pytest.mark.parametrize("t", [-1, 21])
def test_antichain_cover_range(t):
    with pytest.raises(ValueError, match="0 <= t <= 20"):
        antichain_cover(t)


def test_is_antichain():
    assert is_antichain([frozenset({1, 2}), frozenset({2, 3})])
    assert not is_antichain([frozenset({1}), frozenset({1, 2})])


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_level_coloring_is_proper(single_edge, t):
    coloring = level_coloring(t)
    assert coloring.k == t + 1
    assert verify_certificate(and_power(single_edge, t), coloring).ok


def test_set_pair_from_sequence():
    pair = SetPair.from_sequence((1, 0, 2))
    assert pair.A == {1} and pair.B == {3} and pair.t == 3
    assert pair.to_sequence() == (1, 0, 2)
    assert pair.to_dict() == {"A": [1], "B": [3]}


@pytest.mark.parametrize(
    "build, message",
    [
        (lambda: SetPair({1}, {1}, 2), "not disjoint"),
        (lambda: SetPair({3}, set(), 2), "outside"),
        (lambda: SetPair.from_sequence((3, 0)), "ternary"),
    ],
)
def test_set_pair_validation(build, message):
    with pytest.raises(ValueError, match=message):
        build()


def test_cross_intersecting_families():
    family = [SetPair({1}, {2}, 2), SetPair({2}, {1}, 2)]
    assert is_cross_intersecting(family)
    assert bollobas_inequality(family) == 1

    assert not is_cross_intersecting([SetPair({1}, set(), 2), SetPair({2}, set(), 2)])
    assert is_cross_intersecting([SetPair(set(), set(), 2)])
    with pytest.raises(ValueError, match="different ground sets"):
        is_cross_intersecting([SetPair({1}, set(), 1), SetPair({1}, set(), 2)])


def test_bollobas_inequality_value():
    assert bollobas_inequality([SetPair({1, 2}, {3}, 3)]) == Fraction(1, 3)
    assert bollobas_inequality([]) == 0


def test_decode_families():
    families = decode_families(Coloring((0, 1, 0)), 1)
    assert families == [
        [SetPair(set(), set(), 1), SetPair(set(), {1}, 1)],
        [SetPair({1}, set(), 1)],
    ]


def test_cover_bounds_first_power():
    bounds = bollobas_cover_bounds(1)
    assert bounds.lower == 2
    assert bounds.exact == 3
    assert bounds.exact_optimal
    assert bounds.upper == 3
    assert len(bounds.families) == 3
    assert bounds.rate_bracket == (pytest.approx(1.0), pytest.approx(math.log2(3)))


def test_cover_bounds_second_power():
    bounds = bollobas_cover_bounds(2)
    assert bounds.lower == 4
    assert bounds.lower <= bounds.exact <= bounds.constructive <= bounds.constructive_bound
    assert bounds.constructive_bound == 3**3 * 2**2
    assert bounds.exact_optimal
    assert len(bounds.families) == bounds.exact
    assert all(is_cross_intersecting(family) for family in bounds.families)
    assert sum(len(family) for family in bounds.families) == 9
    payload = bounds.to_dict()
    assert payload["t"] == 2
    assert len(payload["families"]) == bounds.exact


def test_cover_bounds_without_exact_solve():
    bounds = bollobas_cover_bounds(2, limits=Limits(exact_bollobas_max=8))
    assert bounds.exact is None
    assert bounds.upper == bounds.constructive
    assert len(bounds.families) == bounds.constructive


def test_cover_bounds_reject_empty_ground_set():
    with pytest.raises(ValueError):
        bollobas_cover_bounds(0)
