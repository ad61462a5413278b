#!/usr/bin/env python3
"""Write every graph of a given order, up to isomorphism, as a graph6 file.

Orders up to 7 come from the built-in generator; larger orders are reached by
repeatedly adding a vertex in every possible way and deduplicating.

    python scripts/make_corpus.py 8 data/graphs8.g6
"""
import argparse
import logging
import time

from dompoly.search import MAX_GENERATED_ORDER, enumerate_graphs, extend_corpus, write_graph6

log = logging.getLogger("make_corpus")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("order", type=int)
    ap.add_argument("out")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    start = min(args.order, MAX_GENERATED_ORDER)
    graphs = list(enumerate_graphs(start))
    for m in range(start + 1, args.order + 1):
        t = time.time()
        graphs = extend_corpus(graphs)
        log.info("order %d: %d graphs (%.1fs)", m, len(graphs), time.time() - t)
    count = write_graph6(graphs, args.out)
    log.info("wrote %d graphs of order %d to %s", count, args.order, args.out)


if __name__ == "__main__":
    main()
