#!/usr/bin/env python3
"""Time the polynomial paths, canonical labeling and atlas building."""
import argparse
import random
import time
from dataclasses import dataclass

from dompoly.canon import canonical_form
from dompoly.constructions import equipartite, j_graph
from dompoly.graph import Graph
from dompoly.polynomial import polynomial, polynomial_bruteforce
from dompoly.search import build_atlas, enumerate_graphs


@dataclass
class BenchConfig:
    brute_orders: tuple = (16, 20, 24)
    seed: int = 0
    repeats: int = 3


def timed(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--brute", type=int, nargs="*", default=None, help="orders for the brute-force timing")
    args = ap.parse_args()
    cfg = BenchConfig()
    if args.brute is not None:
        cfg.brute_orders = tuple(args.brute)
    rng = random.Random(cfg.seed)

    rows = [("join K_8(3)", timed(lambda: polynomial(equipartite(8, 3)), cfg.repeats)),
            ("join J_4(6,2)", timed(lambda: polynomial(j_graph(4, 6, 2)), cfg.repeats))]
    for n in cfg.brute_orders:
        g = random_graph(rng, n, 0.3)
        rows.append((f"brute force n={n}", timed(lambda: polynomial_bruteforce(g), 1)))
    gs = list(enumerate_graphs(7))
    # relabel so the canonical-labeling cache warmed by enumeration is not hit
    fresh = [g.permute(rng.sample(range(7), 7)) for g in gs]
    rows.append(("canonical form, 1044 graphs of order 7", timed(lambda: [canonical_form(g) for g in fresh], 1)))
    rows.append(("atlas of order 7", timed(lambda: build_atlas(gs, workers=1), 1)))
    for name, seconds in rows:
        print(f"{name:<42} {seconds:9.4f} s")


if __name__ == "__main__":
    main()
