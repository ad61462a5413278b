"""Canonical labelling and isomorphism testing.

A graph is split recursively into connected components (disjoint union) or
complement components (join).  Parts are canonically labelled on their own and
concatenated in sorted order of their canonical adjacency; parts that are
neither unions nor joins go through an individualization-refinement search
with trace and automorphism pruning.  The result is a vertex order such that
isomorphic graphs relabelled by their orders are identical.
"""
from __future__ import annotations

from functools import lru_cache

from .graph import (
    Graph,
    bits,
    complement,
    connected_components,
    to_graph6,
    GRAPH6_MAX_ORDER,
)


def _refine(adj, cells):
    """Coarsest equitable refinement of an ordered partition.

    Each cell is split by the vector of neighbor counts into every current
    cell; subcells are ordered by that vector, so the result depends only on
    the labelled structure and not on vertex names.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups = {}
            for v in c:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
        cells = out
        if not changed:
            return cells


def _relabelled_rows(adj, order):
    pos = [0] * len(adj)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        m = 0
        for u in bits(adj[v]):
            m |= 1 << pos[u]
        rows.append(m)
    return tuple(rows)


def _orbit_root(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _prime_order(adj: tuple[int, ...]) -> list[int]:
    n = len(adj)
    best_key = None
    best_order = None
    autos: list[list[int]] = []

    def search(cells, path, traces):
        nonlocal best_key, best_order
        cells = _refine(adj, cells)
        traces = traces + (tuple(len(c) for c in cells),)
        if best_key is not None and traces < best_key[0][: len(traces)]:
            return
        if len(cells) == n:
            order = [c[0] for c in cells]
            key = (traces, _relabelled_rows(adj, order))
            if best_key is None or key > best_key:
                best_key, best_order = key, order
            elif key == best_key:
                gamma = [0] * n
                for a, b in zip(best_order, order):
                    gamma[a] = b
                autos.append(gamma)
            return
        idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[idx]
        done = []
        for v in sorted(target):
            if done:
                parent = list(range(n))
                for gamma in autos:
                    if all(gamma[p] == p for p in path):
                        for x in range(n):
                            rx, ry = _orbit_root(parent, x), _orbit_root(parent, gamma[x])
                            if rx != ry:
                                parent[rx] = ry
                root = _orbit_root(parent, v)
                if any(_orbit_root(parent, w) == root for w in done):
                    continue
            rest = [w for w in target if w != v]
            new_cells = cells[:idx] + [[v], rest] + cells[idx + 1:]
            search(new_cells, path + [v], traces)
            done.append(v)

    search([list(range(n))], [], ())
    return best_order


@lru_cache(maxsize=1 << 16)
def _order(adj: tuple[int, ...]) -> tuple[int, ...]:
    n = len(adj)
    if n <= 1:
        return tuple(range(n))
    g = Graph(n, adj)
    parts = connected_components(g)
    if len(parts) == 1:
        parts = connected_components(complement(g))
    if len(parts) == 1:
        return tuple(_prime_order(adj))
    keyed = []
    for mask in parts:
        verts = list(bits(mask))
        sub = g.relabel_by_order(verts)
        sub_order = _order(sub.adj)
        key = _relabelled_rows(sub.adj, sub_order)
        keyed.append(((len(key), key), [verts[i] for i in sub_order]))
    keyed.sort(key=lambda kv: kv[0])
    return tuple(v for _, order in keyed for v in order)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order putting ``g`` into canonical form (position -> vertex)."""
    return list(_order(g.adj))


def canonical_graph(g: Graph) -> Graph:
    return g.relabel_by_order(_order(g.adj))


def canonical_form(g: Graph) -> str:
    """Labelling-invariant string: graph6 of the canonical relabelling.

    Orders above the graph6 short-form limit fall back to a hex row dump.
    """
    c = canonical_graph(g)
    if c.n <= GRAPH6_MAX_ORDER:
        return to_graph6(c)
    return f"{c.n}:" + ",".join(format(r, "x") for r in c.adj)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_graph(g).adj == canonical_graph(h).adj
