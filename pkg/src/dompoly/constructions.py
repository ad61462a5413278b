"""Named graph families and the construction expression grammar.

Vertex numbering is fixed: multipartite blocks are consecutive in ascending
part size, ``h_graph(a, t)`` puts its ``K_a`` on ``0..a-1`` and matches ``i``
with ``a + i``, and joins place operands left to right.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .graph import Graph, GraphError, MAX_ORDER, join


@dataclass(frozen=True)
class PartitionSpec:
    """Color-class sizes of a complete multipartite graph, kept sorted."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted(int(a) for a in parts))
        if not parts:
            raise GraphError("a partition spec needs at least one part")
        if any(a < 1 for a in parts):
            raise GraphError(f"part sizes must be positive: {parts}")
        if sum(parts) > MAX_ORDER:
            raise GraphError(f"total order {sum(parts)} exceeds {MAX_ORDER}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    def __str__(self):
        return "K(" + ",".join(map(str, self.parts)) + ")"


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def independent_set(a: int) -> Graph:
    return Graph.empty(a)


def complete_multipartite(spec: PartitionSpec | Iterable[int]) -> Graph:
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(spec)
    return join_all(independent_set(a) for a in spec.parts)


def equipartite(r: int, a: int) -> Graph:
    """``K_r(a)``; ``r = 0`` gives the graph with no vertices."""
    if r < 0 or a < 1:
        raise GraphError(f"equipartite needs r >= 0 and a >= 1, got r={r}, a={a}")
    if r * a > MAX_ORDER:
        raise GraphError(f"order {r * a} exceeds {MAX_ORDER}")
    if r == 0:
        return Graph.empty(0)
    return complete_multipartite([a] * r)


def h_graph(a: int, t: int) -> Graph:
    """A ``K_a`` and a ``K_{a+t}`` joined by a matching out of the ``K_a``."""
    if a < 1:
        raise GraphError(f"h_graph needs a >= 1, got {a}")
    if t not in (0, 1):
        raise GraphError(f"h_graph needs t in {{0, 1}}, got {t}")
    n = 2 * a + t
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    edges = [(u, v) for u in range(a) for v in range(u + 1, a)]
    edges += [(u, v) for u in range(a, n) for v in range(u + 1, n)]
    edges += [(i, a + i) for i in range(a)]
    return Graph.from_edges(n, edges)


def j_graph(r: int, a: int, t: int) -> Graph:
    """Join of ``t`` copies of ``h_graph(a, 0)`` with ``equipartite(r - 2t, a)``."""
    if r < 2 or a < 1:
        raise GraphError(f"j_graph needs r >= 2 and a >= 1, got r={r}, a={a}")
    if not 0 <= t <= r // 2:
        raise GraphError(f"t={t} outside 0..{r // 2}")
    if r * a > MAX_ORDER:
        raise GraphError(f"order {r * a} exceeds {MAX_ORDER}")
    return join_all([h_graph(a, 0)] * t + [equipartite(r - 2 * t, a)])


def join_all(graphs: Iterable[Graph]) -> Graph:
    return reduce(join, graphs, Graph.empty(0))


# expression grammar ----------------------------------------------------------
#
#   expr := "K(" ints ")" | "Kr(" int "," int ")" | "H(" int "," int ")"
#         | "J(" int "," int "," int ")" | "join(" expr (";" expr)* ")"

class ExpressionError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(join|Kr|K|H|J|\d+|[(),;])")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"unexpected input at {pos}: {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = expected or "a token"
            raise ExpressionError(f"expected {want} in {self.text!r}, got {tok!r}")
        self.i += 1
        return tok

    def ints(self):
        vals = [int(self.take_int())]
        while self.peek() == ",":
            self.take(",")
            vals.append(int(self.take_int()))
        return vals

    def take_int(self):
        tok = self.take()
        if not tok.isdigit():
            raise ExpressionError(f"expected an integer in {self.text!r}, got {tok!r}")
        return tok

    def expr(self) -> Graph:
        head = self.take()
        if head == "join":
            self.take("(")
            operands = [self.expr()]
            while self.peek() == ";":
                self.take(";")
                operands.append(self.expr())
            self.take(")")
            return join_all(operands)
        if head not in ("K", "Kr", "H", "J"):
            raise ExpressionError(f"unknown construction {head!r} in {self.text!r}")
        self.take("(")
        args = self.ints()
        self.take(")")
        arity = {"Kr": 2, "H": 2, "J": 3}
        if head in arity and len(args) != arity[head]:
            raise ExpressionError(f"{head} takes {arity[head]} arguments, got {len(args)}")
        if head == "K":
            return complete_multipartite(PartitionSpec(args))
        if head == "Kr":
            return equipartite(*args)
        if head == "H":
            return h_graph(*args)
        return j_graph(*args)


def parse_expression(text: str) -> Graph:
    """Build the graph described by a construction expression such as ``J(4,3,1)``."""
    p = _Parser(text)
    try:
        g = p.expr()
    except GraphError as exc:
        raise ExpressionError(f"{text!r}: {exc}") from exc
    if p.peek() is not None:
        raise ExpressionError(f"trailing input in {text!r}: {p.tokens[p.i:]}")
    return g
