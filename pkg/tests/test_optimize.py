"""Greedy maximum-weight basis against brute force, and the reductions."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from matroidfacets import (
    DimensionMismatch,
    WeightFunction,
    brute_force_max_basis,
    catalog_get,
    greedy_max_basis,
    independent_via_optimization,
    rank_via_optimization,
    uniform,
)
from matroidfacets.core import subsets_by_size


class TestWeightFunction:
    def test_construction_routes(self):
        m = uniform(2, 3)
        w1 = WeightFunction.from_values(m.ground, [1, Fraction(1, 2), "2/3"])
        w2 = WeightFunction.from_mapping(m.ground, {"1": 1, "2": "1/2", "3": Fraction(2, 3)})
        assert w1 == w2
        assert w1.of(m.ground.singleton("3")) == Fraction(2, 3)

    def test_size_checked(self):
        m = uniform(2, 3)
        with pytest.raises(DimensionMismatch):
            WeightFunction.from_values(m.ground, [1, 2])

    def test_characteristic(self):
        m = uniform(2, 4)
        sub = m.ground.subset(["2", "4"])
        w = WeightFunction.characteristic(sub)
        assert w.values == (0, 1, 0, 1)
        assert w.of(m.ground.full) == 2

    def test_common_denominator(self):
        m = uniform(1, 3)
        w = WeightFunction.from_values(m.ground, [Fraction(1, 2), Fraction(1, 3), 1])
        nums, den = w.common_denominator()
        assert den == 6
        assert nums == (3, 2, 6)
        assert w.dot_mask(0b011) == Fraction(5, 6)


class TestGreedy:
    def test_documented_run_on_mk4(self):
        m = catalog_get("MK4").matroid
        w = WeightFunction.from_values(m.ground, [5, 4, 3, 2, 1, 0])
        res = greedy_max_basis(m, w)
        assert res.basis.labels() == ("ab", "ac", "ad")
        assert res.value == 12
        assert [(s.label, s.accepted) for s in res.trace] == [
            ("ab", True), ("ac", True), ("ad", True),
            ("bc", False), ("bd", False), ("cd", False),
        ]

    def test_trace_visits_every_element_heaviest_first(self):
        m = catalog_get("Q6").matroid
        w = WeightFunction.from_values(m.ground, [1, 3, 2, 3, 0, 5])
        res = greedy_max_basis(m, w)
        assert len(res.trace) == len(m.ground)
        weights = [s.weight for s in res.trace]
        assert weights == sorted(weights, reverse=True)
        accepted = [s.label for s in res.trace if s.accepted]
        assert set(accepted) == set(res.basis.labels())

    def test_equal_weights_pick_lowest_indices(self):
        m = uniform(2, 4)
        w = WeightFunction.from_values(m.ground, [1, 1, 1, 1])
        res = greedy_max_basis(m, w)
        assert res.basis.labels() == ("1", "2")

    def test_prefer_breaks_ties_toward_the_subset(self):
        m = uniform(2, 4)
        w = WeightFunction.from_values(m.ground, [1, 1, 1, 1])
        res = greedy_max_basis(m, w, prefer=m.ground.subset(["3", "4"]))
        assert res.basis.labels() == ("3", "4")

    def test_negative_weights_still_fill_a_basis(self):
        # a basis is required even when it costs: greedy must not stop early
        m = catalog_get("W3").matroid
        w = WeightFunction.from_values(m.ground, [-1, -2, -3, -4, -5, -6])
        res = greedy_max_basis(m, w)
        assert len(res.basis) == m.rank_value
        assert res.value == brute_force_max_basis(m, w).value

    def test_matches_brute_force_on_random_rationals(self, catalog):
        rng = random.Random(421)
        for entry in catalog.values():
            m = entry.matroid
            n = len(m.ground)
            for _ in range(60):
                values = [
                    Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(n)
                ]
                w = WeightFunction.from_values(m.ground, values)
                got = greedy_max_basis(m, w)
                want = brute_force_max_basis(m, w)
                assert got.value == want.value
                assert w.of(got.basis) == got.value

    def test_matches_brute_force_under_heavy_ties(self, catalog):
        rng = random.Random(7)
        for entry in catalog.values():
            m = entry.matroid
            n = len(m.ground)
            for _ in range(40):
                values = [Fraction(rng.choice((-1, 0, 0, 1, 1))) for _ in range(n)]
                w = WeightFunction.from_values(m.ground, values)
                assert greedy_max_basis(m, w).value == brute_force_max_basis(m, w).value


class TestBruteForce:
    def test_tie_goes_to_lexicographically_first_basis(self):
        m = uniform(2, 4)
        w = WeightFunction.from_values(m.ground, [0, 0, 0, 0])
        res = brute_force_max_basis(m, w)
        assert res.basis.labels() == ("1", "2")
        assert res.trace == ()


class TestReductions:
    @pytest.mark.parametrize("name", ["MK4", "W3", "Q6", "P6", "V8"])
    def test_rank_and_independence_everywhere(self, name):
        m = catalog_get(name).matroid
        g = m.ground
        for mask in subsets_by_size(g):
            sub = g.from_mask(mask)
            assert rank_via_optimization(m, sub) == m.rank(sub).value
            assert independent_via_optimization(m, sub) == m.independent(sub)

    def test_rank_reduction_returns_plain_int(self):
        m = uniform(2, 4)
        out = rank_via_optimization(m, m.ground.subset(["1"]))
        assert out == 1 and type(out) is int
