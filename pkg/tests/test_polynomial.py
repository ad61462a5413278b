import itertools
import json
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs, random_graph
from dompoly.constructions import PartitionSpec, complete_graph, complete_multipartite, equipartite, h_graph, j_graph
from dompoly.extremal import shadow
from dompoly.graph import Graph, join
from dompoly.polynomial import (
    BudgetError,
    Polynomial,
    forced_min_degree_count,
    is_dominating,
    min_degree_from_polynomial,
    multipartite_closed_form,
    nondominating_sets,
    polynomial,
    polynomial_bruteforce,
    polynomial_join,
)


def oracle_counts(g):
    """Count dominating sets with Python sets, one subset at a time."""
    nbrs = {v: {u for u in range(g.n) if g.has_edge(u, v)} for v in range(g.n)}
    counts = [0] * (g.n + 1)
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            covered = set(s).union(*(nbrs[v] for v in s))
            if len(covered) == g.n:
                counts[k] += 1
    if g.n == 0:
        counts[0] = 0
    return tuple(counts)


def true_min_degree_count(g):
    d = g.degrees()
    return d.count(min(d))


class TestPolynomialValue:
    def test_render(self):
        assert str(Polynomial(5, (0, 0, 7, 10, 5, 1))) == "x^5+5x^4+10x^3+7x^2"
        assert str(Polynomial(1, (0, 1))) == "x"
        assert str(Polynomial.zero()) == "0"

    def test_json_roundtrip(self):
        p = polynomial(equipartite(8, 3))
        data = json.loads(json.dumps(p.to_json()))
        assert all(isinstance(c, str) for c in data["coeffs"])
        assert Polynomial.from_json(data) == p

    def test_length_checked(self):
        with pytest.raises(ValueError):
            Polynomial(2, (0, 1))


class TestIsDominating:
    def test_examples(self):
        g = complete_multipartite([2, 3])
        assert is_dominating(g, g.vertex_mask)
        assert not is_dominating(g, 0)
        assert is_dominating(g, 0b00011)  # the 2-class
        assert is_dominating(g, 0b11100)  # the 3-class
        assert not is_dominating(g, 0b01100)  # proper subset of the 3-class
        assert not is_dominating(g, 0b00001)

    def test_empty_graph(self):
        assert is_dominating(Graph.empty(0), 0)


class TestBruteForce:
    def test_p3(self):
        assert polynomial_bruteforce(complete_multipartite([1, 2])).coeffs == (0, 1, 3, 1)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_complete_graph(self, n):
        # (1 + x)^n - 1
        assert polynomial_bruteforce(complete_graph(n)).coeffs == (0,) + tuple(comb(n, i) for i in range(1, n + 1))

    def test_k23(self):
        assert polynomial_bruteforce(complete_multipartite([2, 3])).coeffs == (0, 0, 7, 10, 5, 1)

    def test_empty(self):
        assert polynomial_bruteforce(Graph.empty(0)) == Polynomial.zero()

    @given(graphs(max_n=9))
    @settings(max_examples=150)
    def test_against_set_oracle(self, g):
        assert polynomial_bruteforce(g).coeffs == oracle_counts(g)

    def test_high_part_split(self):
        # n > 20 exercises the high/low split; join factors give the reference
        rng = random.Random(9)
        parts = [random_graph(rng, 7, 0.6), random_graph(rng, 8, 0.3), random_graph(rng, 7, 0.5)]
        g = join(join(parts[0], parts[1]), parts[2])
        ref = polynomial_join(polynomial_join(polynomial_bruteforce(parts[0]), polynomial_bruteforce(parts[1])),
                              polynomial_bruteforce(parts[2]))
        assert polynomial_bruteforce(g) == ref

    def test_budget(self):
        with pytest.raises(BudgetError):
            polynomial_bruteforce(Graph.empty(29))


class TestJoinAndDispatch:
    def test_k23_from_parts(self):
        p = polynomial_join(polynomial(Graph.empty(2)), polynomial(Graph.empty(3)))
        assert p == polynomial_bruteforce(complete_multipartite([2, 3]))

    def test_identity(self):
        p = polynomial(h_graph(3, 1))
        assert polynomial_join(p, Polynomial.zero()) == p == polynomial_join(Polynomial.zero(), p)

    def test_k33(self):
        p = polynomial_join(polynomial(Graph.empty(3)), polynomial(Graph.empty(3)))
        assert p == polynomial_bruteforce(complete_multipartite([3, 3]))

    def test_large_equipartite_matches_closed_form(self):
        assert polynomial(equipartite(8, 3)) == multipartite_closed_form(PartitionSpec([3] * 8))

    def test_j_graph_shares_polynomial(self):
        assert polynomial(j_graph(4, 3, 2)) == polynomial(equipartite(4, 3))

    def test_factor_budget(self):
        with pytest.raises(BudgetError):
            polynomial(Graph.from_edges(30, [(i, i + 1) for i in range(29)]))

    @given(graphs(max_n=10))
    @settings(max_examples=150)
    def test_dispatch_matches_brute_force(self, g):
        assert polynomial(g) == polynomial_bruteforce(g)

    @given(graphs(max_n=6), graphs(max_n=6))
    def test_join_law(self, g, h):
        assert polynomial(join(g, h)) == polynomial_join(polynomial(g), polynomial(h))

    def test_cancellation(self, corpus):
        # D(G1 v H) = D(G2 v H) exactly when D(G1) = D(G2)
        rng = random.Random(4)
        pool = list(corpus(5))
        polys = {g: polynomial(g) for g in pool}
        by_poly = {}
        for g, p in polys.items():
            by_poly.setdefault(p, []).append(g)
        equal_pairs = [tuple(v[:2]) for v in by_poly.values() if len(v) > 1]
        assert equal_pairs
        for _ in range(200):
            if rng.random() < 0.5:
                g1, g2 = rng.choice(equal_pairs)
            else:
                g1, g2 = rng.sample(pool, 2)
            h = random_graph(rng, rng.randint(0, 4), rng.random())
            same = polynomial(join(g1, h)) == polynomial(join(g2, h))
            assert same == (polys[g1] == polys[g2])


class TestClosedForm:
    def test_k23(self):
        assert multipartite_closed_form(PartitionSpec([2, 3])).coeffs == (0, 0, 7, 10, 5, 1)

    @pytest.mark.parametrize("a", range(1, 7))
    def test_independent_set(self, a):
        assert multipartite_closed_form(PartitionSpec([a])).coeffs == (0,) * a + (1,)

    @pytest.mark.parametrize("r", range(1, 7))
    def test_complete_graph(self, r):
        assert multipartite_closed_form(PartitionSpec([1] * r)).coeffs == (0,) + tuple(comb(r, i) for i in range(1, r + 1))

    @given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
    def test_matches_brute_force(self, parts):
        spec = PartitionSpec(parts)
        assert multipartite_closed_form(spec) == polynomial_bruteforce(complete_multipartite(spec))


class TestNonDominating:
    def test_k33_pairs(self):
        fam = nondominating_sets(complete_multipartite([3, 3]), 2)
        assert fam.as_lists() == [[0, 1], [0, 2], [1, 2], [3, 4], [3, 5], [4, 5]]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_complete_graph(self, n):
        for k in range(1, n + 1):
            assert len(nondominating_sets(complete_graph(n), k)) == 0

    def test_k0_is_the_empty_set(self):
        fam = nondominating_sets(h_graph(2, 0), 0)
        assert fam.sets == (0,)

    @given(graphs(max_n=5), graphs(max_n=5), st.integers(0, 10))
    def test_join_union(self, g, h, k):
        j = join(g, h)
        k = min(k, j.n)
        left = [s for s in nondominating_sets(g, k).sets] if k <= g.n else []
        right = [s << g.n for s in nondominating_sets(h, k).sets] if k <= h.n else []
        assert set(nondominating_sets(j, k).sets) == set(left) | set(right)

    @given(graphs(min_n=1, max_n=8))
    def test_complement_count_and_downward_closure(self, g):
        p = polynomial(g)
        for k in range(g.n + 1):
            fam = nondominating_sets(g, k)
            assert p.coeffs[k] + len(fam) == comb(g.n, k)
            if k >= 1 and len(fam):
                assert set(shadow(fam).sets) <= set(nondominating_sets(g, k - 1).sets)

    def test_budget(self):
        with pytest.raises(BudgetError):
            nondominating_sets(Graph.empty(28), 14)


class TestMinDegree:
    def test_k23(self):
        p = polynomial(complete_multipartite([2, 3]))
        assert min_degree_from_polynomial(p) == (3, 2)
        assert forced_min_degree_count(p) == comb(5, 2) - 7 == 3

    @pytest.mark.parametrize("n", range(1, 8))
    def test_complete_graph(self, n):
        p = polynomial(complete_graph(n))
        assert min_degree_from_polynomial(p) == (1, n - 1)
        assert forced_min_degree_count(p) == 1

    @pytest.mark.parametrize("r,a", [(2, 3), (3, 3), (2, 4), (4, 2), (3, 5)])
    def test_equipartite(self, r, a):
        n = r * a
        p = polynomial(equipartite(r, a))
        assert min_degree_from_polynomial(p) == (a, n - a)
        assert forced_min_degree_count(p) == r * a == n

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            min_degree_from_polynomial(Polynomial.zero())

    def test_exhaustive_order_7(self, corpus):
        for n in range(1, 8):
            for g in corpus(n):
                p = polynomial(g)
                assert min_degree_from_polynomial(p)[1] == g.min_degree()
                assert forced_min_degree_count(p) <= true_min_degree_count(g)


class TestCoefficientInvariants:
    @given(graphs(min_n=1, max_n=9))
    def test_invariants(self, g):
        c = polynomial(g).coeffs
        n = g.n
        assert c[0] == 0 and c[n] == 1
        assert all(c[i] <= comb(n, i) for i in range(n + 1))
        full = [i for i in range(n + 1) if c[i] == comb(n, i)]
        assert full == list(range(full[0], n + 1))
