#!/usr/bin/env python3
"""Walk through the structural freeness checks on a gallery of small graphs.

Each of the seven patterns has a closed-form characterization of the graphs
that avoid it as a topological minor: degree caps, component shapes, or a
counting identity.  This script prints the verdicts alongside the violated
clause where there is one.
"""

from hitminor import (
    BANNER,
    C4,
    CHAIR,
    Graph,
    P3,
    P4,
    PAW,
    is_free_explain,
    k1s,
    pattern_graph,
)


def named_gallery():
    yield "single edge", Graph(2, [(0, 1)])
    yield "path P5", Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    yield "triangle", Graph(3, [(0, 1), (1, 2), (2, 0)])
    yield "square C4", Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    yield "hexagon C6", Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    yield "star K1,5", Graph(6, [(0, i) for i in range(1, 6)])
    yield "clique K4", Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    yield "paw", pattern_graph(PAW)
    yield "banner", pattern_graph(BANNER)
    yield "two triangles", Graph(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    )


def main():
    patterns = [P3, P4, k1s(3), C4, PAW, CHAIR, BANNER]
    for name, g in named_gallery():
        print(f"== {name}  (n={g.n}, m={g.m})")
        for p in patterns:
            free, clause = is_free_explain(g, p)
            verdict = "free" if free else "not free"
            extra = f"  <- {clause}" if clause else ""
            print(f"   {p.name:6s} {verdict}{extra}")
        print()


if __name__ == "__main__":
    main()
