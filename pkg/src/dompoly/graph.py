"""Immutable simple graphs with bitset adjacency, graph6 I/O and structure.

Vertex sets are plain ``int`` bitmasks: bit ``v`` set means vertex ``v`` is in
the set.  A graph stores one such mask per vertex (its open neighborhood).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62

VertexSet = int


class GraphError(ValueError):
    """Invalid graph data or an operation outside a graph's vertex range."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def min_degree(self) -> int:
        if self.n == 0:
            raise GraphError("minimum degree of the empty graph is undefined")
        return min(self.degrees())

    def induced(self, vertices: VertexSet) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled 0.. in increasing order."""
        order = list(bits(vertices))
        return self.relabel_by_order(order)

    def relabel_by_order(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is ``order[i]`` of this graph."""
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            m = 0
            for u in bits(self.adj[v]):
                i = pos.get(u)
                if i is not None:
                    m |= 1 << i
            adj.append(m)
        return Graph(len(order), tuple(adj))

    def permute(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertex ``v`` as ``perm[v]``."""
        order = [0] * self.n
        for v, p in enumerate(perm):
            order[p] = v
        return self.relabel_by_order(order)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for order {g.n}")


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v] | (1 << v)


def nonneighbor_set(g: Graph, v: int) -> VertexSet:
    """Vertices that are neither ``v`` nor adjacent to it."""
    _check_vertex(g, v)
    return g.vertex_mask & ~(g.adj[v] | (1 << v))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~(nb | (1 << v)) for v, nb in enumerate(g.adj)))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    Vertices of ``g`` keep their labels; vertex ``i`` of ``h`` becomes ``g.n + i``.
    """
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphError(f"join has order {n} > {MAX_ORDER}")
    g_mask = g.vertex_mask
    h_mask = h.vertex_mask << g.n
    adj = [nb | h_mask for nb in g.adj]
    adj += [(nb << g.n) | g_mask for nb in h.adj]
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphError(f"union has order {n} > {MAX_ORDER}")
    return Graph(n, g.adj + tuple(nb << g.n for nb in h.adj))


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the components, ordered by their minimum vertex."""
    remaining = g.vertex_mask
    comps = []
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


# graph6 ---------------------------------------------------------------------

def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126")
    if s[0] == "~":
        raise Graph6Error("graph6 long form (order > 62) is not supported")
    n = ord(s[0]) - 63
    body = s[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data characters for order {n}, got {len(body)}")
    value = 0
    for ch in body:
        value = (value << 6) | (ord(ch) - 63)
    pad = 6 * len(body) - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"order {g.n} exceeds the graph6 short form limit {GRAPH6_MAX_ORDER}")
    value = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
        nbits += j
    pad = -nbits % 6
    value <<= pad
    nchars = (nbits + pad) // 6
    chars = [chr(63 + ((value >> (6 * (nchars - 1 - c))) & 63)) for c in range(nchars)]
    return chr(63 + g.n) + "".join(chars)


def chromatic_number(g: Graph) -> int:
    """Least ``k`` admitting a proper ``k``-coloring.

    Tries ``k = 1, 2, ...`` with backtracking over a fixed high-degree-first
    vertex order; a vertex may open at most one new color, which removes
    color-permutation symmetry.
    """
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))

    def colorable(k: int) -> bool:
        classes = [0] * k

        def place(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            for c in range(min(used + 1, k)):
                if not classes[c] & adj[v]:
                    classes[c] |= 1 << v
                    if place(i + 1, max(used, c + 1)):
                        return True
                    classes[c] &= ~(1 << v)
            return False

        return place(0, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k
