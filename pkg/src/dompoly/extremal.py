"""Shadows, the real-binomial Kruskal-Katona bound, clique and Turan checks,
and the graph of dominating pairs."""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from math import comb, isclose

from .graph import Graph, VertexSet, bits
from .polynomial import SetFamily

SLACK = 1e-6
X_TOL = 1e-9


def shadow(f: SetFamily) -> SetFamily:
    if f.k < 1:
        raise ValueError("the shadow of a family of empty sets is undefined")
    out = set()
    for s in f.sets:
        for v in bits(s):
            out.add(s & ~(1 << v))
    return SetFamily(f.n, f.k - 1, tuple(out))


def generalized_binomial(x: float, k: int) -> float:
    """``x (x-1) ... (x-k+1) / k!`` for real ``x >= k - 1``."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if x < k - 1:
        raise ValueError(f"x={x} below the increasing range x >= k-1 = {k - 1}")
    out = 1.0
    for i in range(k):
        out *= (x - i) / (i + 1)
    return out


def solve_x(family_size: int, k: int) -> float:
    """The real ``x >= k`` with ``generalized_binomial(x, k) == family_size``, by bisection."""
    if family_size < 1:
        raise ValueError("family_size must be at least 1")
    if k < 1:
        raise ValueError("k must be at least 1")
    lo, hi = float(k), float(k + family_size)
    while hi - lo > X_TOL:
        mid = (lo + hi) / 2
        if generalized_binomial(mid, k) < family_size:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class KKReport:
    family_size: int
    k: int
    x_solved: float
    shadow_size: int
    bound: float
    bound_met: bool
    equality: bool
    clique_witness: VertexSet | None = None

    def to_json(self) -> dict:
        d = asdict(self)
        d["clique_witness"] = None if self.clique_witness is None else list(bits(self.clique_witness))
        return d


def check_kk(f: SetFamily) -> KKReport:
    """Compare ``|shadow(f)|`` against the real-binomial lower bound.

    ``equality`` is reported only once the family has been rebuilt as all
    ``k``-subsets of one set, which then becomes the witness.
    """
    if len(f) == 0:
        raise ValueError("check_kk needs a nonempty family")
    x = solve_x(len(f), f.k)
    sh = len(shadow(f))
    bound = generalized_binomial(x, f.k - 1)
    bound_met = sh >= bound - SLACK
    equality = False
    witness = None
    if bound_met and sh <= bound + SLACK:
        m = round(x)
        union = 0
        for s in f.sets:
            union |= s
        if isclose(x, m, abs_tol=1e-6) and union.bit_count() == m and len(f) == comb(m, f.k):
            equality = True
            witness = union
    return KKReport(len(f), f.k, x, sh, bound, bound_met, equality, witness)


def has_clique(g: Graph, q: int) -> bool:
    """Exact backtracking search for a ``q``-clique."""
    if q <= 0:
        return True
    if q == 1:
        return g.n > 0
    # vertices of degree < q-1 are never in a q-clique; strip them repeatedly
    alive = g.vertex_mask
    while True:
        drop = [v for v in bits(alive) if (g.adj[v] & alive).bit_count() < q - 1]
        if not drop:
            break
        for v in drop:
            alive &= ~(1 << v)
    adj = g.adj

    def extend(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if extend(cand & adj[v], need - 1):
                return True
        return False

    return extend(alive, q)


def is_clique_free(g: Graph, q: int) -> bool:
    if q < 2:
        raise ValueError(f"clique size must be at least 2, got {q}")
    return not has_clique(g, q)


def clique_number(g: Graph) -> int:
    q = 0
    while has_clique(g, q + 1):
        q += 1
    return q


def turan_max_edges(r: int, a: int) -> int:
    """Edge count of ``K_r(a)``, the Turan bound for ``K_{r+1}``-free graphs on ``ra`` vertices."""
    if r < 1 or a < 1:
        raise ValueError(f"need r >= 1 and a >= 1, got r={r}, a={a}")
    return comb(r, 2) * a * a


def dominating_pair_graph(g: Graph) -> Graph:
    """Graph on the same vertices with ``uv`` an edge iff ``{u, v}`` dominates ``g``."""
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    full = g.vertex_mask
    edges = [(u, v) for u, v in itertools.combinations(range(g.n), 2) if closed[u] | closed[v] == full]
    return Graph.from_edges(g.n, edges)
