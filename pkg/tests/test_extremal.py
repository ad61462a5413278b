import itertools
import json
import math
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs, random_graph
from dompoly.canon import is_isomorphic
from dompoly.constructions import complete_graph, complete_multipartite, equipartite, j_graph
from dompoly.extremal import (
    check_kk,
    clique_number,
    dominating_pair_graph,
    generalized_binomial,
    is_clique_free,
    shadow,
    solve_x,
    turan_max_edges,
)
from dompoly.graph import Graph
from dompoly.polynomial import SetFamily, is_dominating, polynomial


def all_subsets(ground, k, n=None):
    ground = list(ground)
    return SetFamily.from_sets(n if n is not None else max(ground) + 1, k, itertools.combinations(ground, k))


def is_clique_family(f):
    union = sorted({v for s in f.as_lists() for v in s})
    return set(f.sets) == set(all_subsets(union, f.k, f.n).sets) if union else False


def brute_has_clique(g, q):
    return any(all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
               for c in itertools.combinations(range(g.n), q))


@st.composite
def families(draw, max_n=8, max_k=4):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, min(max_k, n)))
    pool = list(itertools.combinations(range(n), k))
    chosen = draw(st.sets(st.sampled_from(pool), min_size=1))
    return SetFamily.from_sets(n, k, chosen)


class TestShadow:
    def test_triangle(self):
        f = SetFamily.from_sets(4, 2, [(1, 2), (1, 3), (2, 3)])
        assert shadow(f).as_lists() == [[1], [2], [3]]

    def test_single_set(self):
        f = SetFamily.from_sets(6, 4, [(0, 2, 3, 5)])
        assert sorted(shadow(f).as_lists()) == sorted(map(list, itertools.combinations((0, 2, 3, 5), 3)))

    @pytest.mark.parametrize("a", [3, 4, 5, 6])
    def test_full_level(self, a):
        f = all_subsets(range(a), a - 1)
        sh = shadow(f)
        assert set(sh.sets) == set(all_subsets(range(a), a - 2, a).sets)
        assert len(sh) == comb(a, a - 2)

    def test_k_zero(self):
        with pytest.raises(ValueError):
            shadow(SetFamily(3, 0, (0,)))

    @given(families())
    def test_brute_definition(self, f):
        expected = {frozenset(c) for s in f.as_lists() for c in itertools.combinations(s, f.k - 1)}
        assert {frozenset(s) for s in shadow(f).as_lists()} == expected


class TestGeneralizedBinomial:
    def test_values(self):
        assert generalized_binomial(4.0, 2) == 6.0
        assert generalized_binomial(3.3, 0) == 1.0
        assert generalized_binomial(4.5, 2) == pytest.approx(4.5 * 3.5 / 2) == pytest.approx(7.875)

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(0, 12) for k in range(0, m + 1)])
    def test_integers(self, m, k):
        assert generalized_binomial(float(m), k) == pytest.approx(comb(m, k), rel=1e-12)

    @given(st.integers(1, 6), st.floats(0, 20), st.floats(0.001, 5))
    def test_increasing(self, k, offset, step):
        x = k - 1 + offset
        assert generalized_binomial(x + step, k) > generalized_binomial(x, k)

    def test_domain(self):
        with pytest.raises(ValueError):
            generalized_binomial(1.5, 3)
        with pytest.raises(ValueError):
            generalized_binomial(2.0, -1)


class TestSolveX:
    def test_values(self):
        assert solve_x(6, 2) == pytest.approx(4.0, abs=1e-9)
        assert solve_x(3, 2) == pytest.approx(3.0, abs=1e-9)
        # x(x-1) = 14, solved by the quadratic formula
        assert solve_x(7, 2) == pytest.approx((1 + math.sqrt(57)) / 2, abs=1e-9)

    def test_invalid(self):
        with pytest.raises(ValueError):
            solve_x(0, 2)
        with pytest.raises(ValueError):
            solve_x(3, 0)

    @given(st.integers(1, 10**6), st.integers(1, 6))
    @settings(max_examples=200)
    def test_inverse(self, size, k):
        x = solve_x(size, k)
        assert x >= k - 1e-9
        assert generalized_binomial(x - 1e-8, k) <= size <= generalized_binomial(x + 1e-8, k)

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(1, 14) for k in range(1, m + 1)])
    def test_integer_roots(self, m, k):
        assert solve_x(comb(m, k), k) == pytest.approx(m, abs=1e-7)


class TestCheckKK:
    def test_clique_pairs(self):
        r = check_kk(all_subsets(range(4), 2))
        assert r.bound_met and r.equality
        assert r.clique_witness == 0b1111
        assert r.shadow_size == 4 and r.bound == pytest.approx(4.0)

    def test_disjoint_pairs(self):
        r = check_kk(SetFamily.from_sets(5, 2, [(1, 2), (3, 4)]))
        x = (1 + math.sqrt(17)) / 2  # x(x-1)/2 = 2
        assert r.x_solved == pytest.approx(x, abs=1e-8)
        assert r.bound == pytest.approx(x, abs=1e-8)
        assert r.shadow_size == 4 and r.bound_met and not r.equality
        assert r.clique_witness is None

    def test_empty_family(self):
        with pytest.raises(ValueError):
            check_kk(SetFamily(4, 2, ()))

    def test_singletons_always_tight(self):
        r = check_kk(SetFamily.from_sets(9, 1, [(2,), (5,), (7,)]))
        assert r.equality and r.clique_witness == (1 << 2) | (1 << 5) | (1 << 7)

    def test_json(self):
        data = json.loads(json.dumps(check_kk(all_subsets(range(5), 3)).to_json()))
        assert data["equality"] is True and data["clique_witness"] == [0, 1, 2, 3, 4]

    @given(families())
    @settings(max_examples=300)
    def test_bound_and_equality(self, f):
        r = check_kk(f)
        assert r.bound_met
        assert len(shadow(f)) >= generalized_binomial(solve_x(len(f), f.k), f.k - 1) - 1e-6
        assert r.equality == is_clique_family(f)
        if r.equality:
            assert r.clique_witness.bit_count() == round(r.x_solved)

    @pytest.mark.parametrize("a,m", [(3, 7), (4, 6), (5, 6)])
    def test_pincer(self, a, m):
        """Any a sets of size a-1 whose shadow has at most C(a, a-2) members
        are all (a-1)-subsets of one a-set."""
        pool = [sum(1 << v for v in c) for c in itertools.combinations(range(m), a - 1)]
        tight = 0
        for chosen in itertools.combinations(pool, a):
            sh = {s & ~(1 << v) for s in chosen for v in range(m) if s >> v & 1}
            if len(sh) <= comb(a, a - 2):
                tight += 1
                union = 0
                for s in chosen:
                    union |= s
                assert union.bit_count() == a
                assert check_kk(SetFamily(m, a - 1, chosen)).equality
        assert tight == comb(m, a)


class TestCliques:
    def test_examples(self):
        assert is_clique_free(equipartite(3, 4), 4)
        assert not is_clique_free(complete_graph(5), 5)
        assert is_clique_free(complete_graph(4), 5)
        assert clique_number(equipartite(4, 2)) == 4

    def test_q_below_two(self):
        with pytest.raises(ValueError):
            is_clique_free(complete_graph(3), 1)

    @given(graphs(max_n=9), st.integers(2, 5))
    @settings(max_examples=200)
    def test_against_combinations(self, g, q):
        assert is_clique_free(g, q) == (not brute_has_clique(g, q))

    @pytest.mark.parametrize("r,a", [(2, 4), (2, 5), (3, 5)])
    def test_dominating_pair_graph_of_class_member(self, r, a):
        for t in range(r // 2 + 1):
            f = dominating_pair_graph(j_graph(r, a, t))
            assert is_clique_free(f, r + 1)


class TestTuran:
    def test_values(self):
        assert turan_max_edges(2, 2) == 4
        assert turan_max_edges(3, 2) == 12 == complete_multipartite([2, 2, 2]).num_edges()
        assert turan_max_edges(4, 3) == 54 == equipartite(4, 3).num_edges()

    def test_order_6_exhaustive(self, corpus):
        extremal = []
        for g in corpus(6):
            if is_clique_free(g, 4):
                assert g.num_edges() <= turan_max_edges(3, 2)
                if g.num_edges() == turan_max_edges(3, 2):
                    extremal.append(g)
        assert len(extremal) == 1 and is_isomorphic(extremal[0], equipartite(3, 2))


class TestDominatingPairGraph:
    @pytest.mark.parametrize("r,a", [(2, 3), (3, 3), (2, 5), (4, 4)])
    def test_equipartite(self, r, a):
        g = equipartite(r, a)
        assert dominating_pair_graph(g) == g

    @pytest.mark.parametrize("n", range(3, 8))
    def test_complete_graph(self, n):
        assert dominating_pair_graph(complete_graph(n)) == complete_graph(n)

    def test_j431(self):
        assert is_isomorphic(dominating_pair_graph(j_graph(4, 3, 1)), equipartite(4, 3))

    def test_c4_diagonals_dominate(self):
        c4 = equipartite(2, 2)
        f = dominating_pair_graph(c4)
        assert f != c4 and f == complete_graph(4)

    @given(graphs(max_n=8))
    def test_matches_pair_domination(self, g):
        f = dominating_pair_graph(g)
        for u, v in itertools.combinations(range(g.n), 2):
            assert f.has_edge(u, v) == is_dominating(g, (1 << u) | (1 << v))

    def test_edge_count_equals_second_coefficient(self):
        rng = random.Random(6)
        for _ in range(30):
            g = random_graph(rng, rng.randint(2, 9), rng.random())
            assert dominating_pair_graph(g).num_edges() == polynomial(g).coeffs[2]
