"""Exhaustive small-graph corpora and D-equivalence classes over them."""
from __future__ import annotations

import csv
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .canon import canonical_form, canonical_graph
from .graph import Graph, Graph6Error, from_graph6, to_graph6
from .polynomial import Polynomial, polynomial
from .report import VerificationOutcome

log = logging.getLogger(__name__)

MAX_GENERATED_ORDER = 7
_CHUNK = 2000


class CorpusError(ValueError):
    pass


def default_workers() -> int:
    env = os.environ.get("DOMPOLY_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def extend_corpus(graphs: Iterable[Graph]) -> list[Graph]:
    """One representative per isomorphism class on one more vertex.

    ``graphs`` must hold a representative of every class of some order ``m``.
    Deleting any vertex of a graph on ``m + 1`` vertices leaves a graph on ``m``
    vertices, so attaching a new vertex to every subset of every representative
    reaches every class; duplicates are removed by canonical form.  Output is
    the canonical relabelling of each class, sorted by canonical graph6.
    """
    seen: dict[str, Graph] = {}
    order = None
    for g in graphs:
        if order is None:
            order = g.n
        elif g.n != order:
            raise CorpusError(f"mixed orders {order} and {g.n} in corpus")
        m = g.n
        new_bit = 1 << m
        for nbhd in range(1 << m):
            adj = [a | new_bit if nbhd >> v & 1 else a for v, a in enumerate(g.adj)]
            adj.append(nbhd)
            h = Graph(m + 1, tuple(adj))
            key = canonical_form(h)
            if key not in seen:
                seen[key] = h
    return [canonical_graph(seen[k]) for k in sorted(seen)]


@lru_cache(maxsize=None)
def _generated(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    return tuple(extend_corpus(_generated(n - 1)))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on ``n <= 7`` vertices up to isomorphism, canonically labelled."""
    if not 0 <= n <= MAX_GENERATED_ORDER:
        raise CorpusError(
            f"built-in generation covers orders 0..{MAX_GENERATED_ORDER}; ingest a graph6 corpus for n={n}"
        )
    yield from _generated(n)


def ingest_graph6(path: str | Path) -> Iterator[Graph]:
    """Stream graphs from a graph6 file holding a single order."""
    order = None
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                g = from_graph6(line)
            except Graph6Error as exc:
                raise CorpusError(f"{path}:{lineno}: {exc}") from exc
            if order is None:
                order = g.n
            elif g.n != order:
                raise CorpusError(f"{path}:{lineno}: order {g.n} differs from earlier order {order}")
            yield g


def write_graph6(graphs: Iterable[Graph], path: str | Path) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count


@dataclass(frozen=True)
class ClassReport:
    polynomial: Polynomial
    members: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "poly": [str(c) for c in self.polynomial.coeffs],
            "members": list(self.members),
            "size": self.size,
        }


@dataclass(frozen=True)
class Atlas:
    order: int
    classes: dict[str, ClassReport]
    total_graphs: int

    def class_of(self, g: Graph) -> ClassReport | None:
        if g.n != self.order:
            raise CorpusError(f"graph order {g.n} does not match atlas order {self.order}")
        return self.classes.get(polynomial(g).key())

    def sorted_classes(self) -> list[ClassReport]:
        return sorted(self.classes.values(), key=lambda c: c.polynomial.coeffs)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "total": self.total_graphs,
            "classes": [c.to_json() for c in self.sorted_classes()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: dict | str) -> "Atlas":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["order"])
        classes = {}
        for c in data["classes"]:
            p = Polynomial(n, tuple(int(x) for x in c["poly"]))
            classes[p.key()] = ClassReport(p, tuple(c["members"]))
        return cls(n, classes, int(data["total"]))

    def write_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["polynomial", "size"])
            for c in self.sorted_classes():
                w.writerow([str(c.polynomial), c.size])


def _bucket(graphs: list[Graph]) -> list[tuple[tuple[int, ...], str]]:
    return [(polynomial(g).coeffs, canonical_form(g)) for g in graphs]


def _chunks(corpus: Iterable[Graph], size: int) -> Iterator[list[Graph]]:
    chunk = []
    for g in corpus:
        chunk.append(g)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def build_atlas(corpus: Iterable[Graph], workers: int | None = None) -> Atlas:
    """Bucket a single-order corpus by exact domination polynomial.

    Members are deduplicated by canonical form and listed in sorted order, so
    the atlas does not depend on corpus order or on how chunks were scheduled.
    """
    workers = default_workers() if workers is None else workers
    order = None
    buckets: dict[tuple[int, ...], set[str]] = {}

    def absorb(rows):
        for coeffs, form in rows:
            buckets.setdefault(coeffs, set()).add(form)

    def checked(stream):
        nonlocal order
        for g in stream:
            if order is None:
                order = g.n
            elif g.n != order:
                raise CorpusError(f"mixed orders {order} and {g.n} in corpus")
            yield g

    chunks = _chunks(checked(corpus), _CHUNK)
    done = 0
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for rows in pool.map(_bucket, chunks):
                absorb(rows)
                done += len(rows)
                log.info("bucketed %d graphs", done)
    else:
        for chunk in chunks:
            absorb(_bucket(chunk))
            done += len(chunk)
            log.info("bucketed %d graphs", done)
    if order is None:
        order = 0
    classes = {}
    total = 0
    for coeffs, forms in buckets.items():
        p = Polynomial(order, coeffs)
        classes[p.key()] = ClassReport(p, tuple(sorted(forms)))
        total += len(forms)
    return Atlas(order, classes, total)


def equivalence_class(g: Graph, corpus: Iterable[Graph]) -> ClassReport:
    """All corpus graphs sharing ``g``'s polynomial, plus ``g`` itself."""
    target = polynomial(g)
    members = {canonical_form(g)}
    for h in corpus:
        if h.n != g.n:
            raise CorpusError(f"corpus graph of order {h.n} does not match order {g.n}")
        if polynomial(h) == target:
            members.add(canonical_form(h))
    return ClassReport(target, tuple(sorted(members)))


def verify_unique_in_corpus(g: Graph, corpus: Iterable[Graph]) -> VerificationOutcome:
    report = equivalence_class(g, corpus)
    own = canonical_form(g)
    witnesses = [m for m in report.members if m != own]
    return VerificationOutcome(
        "unique",
        [g.n],
        not witnesses,
        {
            "graph": own,
            "polynomial": str(report.polynomial),
            "class_size": report.size,
            "witnesses": witnesses,
        },
    )
