"""Domination polynomials: exact counts of dominating sets by size."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb

import numpy as np

from .constructions import PartitionSpec
from .graph import Graph, GraphError, VertexSet, bits, complement, connected_components

BRUTE_FORCE_MAX_ORDER = 28
FAMILY_MAX_SIZE = 10**7
_LOW_BITS = 20


class BudgetError(ValueError):
    """Request exceeds a fixed exponential-work budget."""


@dataclass(frozen=True)
class Polynomial:
    """``coeffs[i]`` is the number of dominating sets of size ``i``."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(0, (0,))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __str__(self):
        terms = []
        for i in range(self.n, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            coef = "" if c == 1 and i > 0 else str(c)
            power = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            terms.append(coef + power)
        return "+".join(terms) if terms else "0"

    def key(self) -> str:
        """Exact serialization used as a dictionary key."""
        return ",".join(map(str, self.coeffs))

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple(int(c) for c in data["coeffs"]))


def is_dominating(g: Graph, s: VertexSet) -> bool:
    if s & ~g.vertex_mask:
        raise GraphError("vertex set reaches outside the graph")
    covered = s
    for v in bits(s):
        covered |= g.adj[v]
    return covered == g.vertex_mask


def _cover_table(closed: list[int]):
    """Union of closed neighborhoods and size for every subset of ``closed``'s
    index range, indexed by subset mask."""
    cover = np.zeros(1, dtype=np.uint64)
    size = np.zeros(1, dtype=np.uint8)
    for nb in closed:
        cover = np.concatenate((cover, cover | np.uint64(nb)))
        size = np.concatenate((size, size + np.uint8(1)))
    return cover, size


def polynomial_bruteforce(g: Graph) -> Polynomial:
    """Count dominating sets by visiting all ``2**n`` subsets.

    Subsets are split as ``high << L | low``: every low part's neighborhood
    union comes from a doubling table, high parts are walked in increasing
    order and each is combined with the whole low table at once.
    """
    n = g.n
    if n > BRUTE_FORCE_MAX_ORDER:
        raise BudgetError(f"brute force is limited to {BRUTE_FORCE_MAX_ORDER} vertices, got {n}")
    if n == 0:
        return Polynomial.zero()
    closed = [g.adj[v] | (1 << v) for v in range(n)]
    low = min(n, _LOW_BITS)
    low_cover, low_size = _cover_table(closed[:low])
    full = np.uint64(g.vertex_mask)

    high_closed = closed[low:]
    high_cover = [0]
    high_size = [0]
    for nb in high_closed:
        high_cover += [c | nb for c in high_cover]
        high_size += [s + 1 for s in high_size]

    coeffs = [0] * (n + 1)
    for hc, hs in zip(high_cover, high_size):
        hit = (low_cover | np.uint64(hc)) == full
        counts = np.bincount(low_size[hit], minlength=low + 1)
        for i, c in enumerate(counts.tolist()):
            coeffs[hs + i] += c
    return Polynomial(n, tuple(coeffs))


def polynomial_join(pg: Polynomial, ph: Polynomial) -> Polynomial:
    """Polynomial of ``G v H`` from those of ``G`` and ``H``.

    Sets meeting both sides always dominate the join; sets inside one side
    dominate it exactly when they dominate that side.
    """
    n = pg.n + ph.n
    coeffs = [0] * (n + 1)
    for j in range(1, pg.n + 1):
        cj = comb(pg.n, j)
        for m in range(1, ph.n + 1):
            coeffs[j + m] += cj * comb(ph.n, m)
    for i, c in enumerate(pg.coeffs):
        coeffs[i] += c
    for i, c in enumerate(ph.coeffs):
        coeffs[i] += c
    return Polynomial(n, tuple(coeffs))


def join_factors(g: Graph) -> list[VertexSet]:
    """Vertex sets of the join-irreducible factors (complement components)."""
    return connected_components(complement(g))


def polynomial(g: Graph) -> Polynomial:
    """Domination polynomial, brute-forcing each join factor separately."""
    factors = join_factors(g)
    if len(factors) <= 1:
        return polynomial_bruteforce(g)
    too_big = [m.bit_count() for m in factors if m.bit_count() > BRUTE_FORCE_MAX_ORDER]
    if too_big:
        raise BudgetError(
            f"join factor of order {max(too_big)} exceeds the brute-force limit {BRUTE_FORCE_MAX_ORDER}"
        )
    result = Polynomial.zero()
    for mask in factors:
        result = polynomial_join(result, polynomial_bruteforce(g.induced(mask)))
    return result


def multipartite_closed_form(spec: PartitionSpec) -> Polynomial:
    """Non-dominating sets of a complete multipartite graph are exactly the
    proper subsets of its color classes."""
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(spec)
    n = spec.n
    coeffs = [0] + [comb(n, i) - sum(comb(a, i) for a in spec.parts if i < a) for i in range(1, n + 1)]
    return Polynomial(n, tuple(coeffs))


@dataclass(frozen=True)
class SetFamily:
    """Distinct ``k``-subsets of ``{0, ..., n-1}``, stored as sorted bitmasks."""

    n: int
    k: int
    sets: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        for s in self.sets:
            if s & ~full:
                raise ValueError(f"set {s:#x} outside the ground set of size {self.n}")
            if s.bit_count() != self.k:
                raise ValueError(f"set {sorted(bits(s))} does not have size {self.k}")
        if len(set(self.sets)) != len(self.sets):
            raise ValueError("family members must be distinct")
        object.__setattr__(self, "sets", tuple(sorted(self.sets)))

    @classmethod
    def from_sets(cls, n: int, k: int, sets) -> "SetFamily":
        masks = []
        for s in sets:
            m = 0
            for v in s:
                m |= 1 << v
            masks.append(m)
        return cls(n, k, tuple(masks))

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s):
        return s in set(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [list(bits(s)) for s in self.sets]


def nondominating_sets(g: Graph, k: int) -> SetFamily:
    n = g.n
    if n > BRUTE_FORCE_MAX_ORDER:
        raise BudgetError(f"order {n} exceeds the brute-force limit {BRUTE_FORCE_MAX_ORDER}")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    if comb(n, k) > FAMILY_MAX_SIZE:
        raise BudgetError(f"C({n},{k}) = {comb(n, k)} subsets exceeds the family limit {FAMILY_MAX_SIZE}")
    closed = [g.adj[v] | (1 << v) for v in range(n)]
    full = g.vertex_mask
    out = []
    for combo in itertools.combinations(range(n), k):
        cover = 0
        s = 0
        for v in combo:
            cover |= closed[v]
            s |= 1 << v
        if cover != full:
            out.append(s)
    return SetFamily(n, k, tuple(out))


def min_degree_from_polynomial(p: Polynomial) -> tuple[int, int]:
    """Return ``(l, delta)`` where ``l`` is the least size at which every set
    dominates; every graph with this polynomial has minimum degree ``n - l``."""
    n = p.n
    if n == 0:
        raise ValueError("minimum degree is undefined for the empty graph")
    for j in range(1, n + 1):
        if p.coeffs[j] == comb(n, j):
            return j, n - j
    raise ValueError("no size at which all sets dominate; not a domination polynomial")


def forced_min_degree_count(p: Polynomial) -> int:
    """Lower bound on how many vertices attain the minimum degree."""
    ell, _ = min_degree_from_polynomial(p)
    return comb(p.n, ell - 1) - p.coeffs[ell - 1]
