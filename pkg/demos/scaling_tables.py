#!/usr/bin/env python3
"""Observe table sizes growing with decomposition width but not with length.

Grid graphs keep the width fixed while the vertex count grows tenfold, so
they separate the two effects: per-node tables should scale with the width
alone.  The connectivity solvers run in decision mode with a tiny budget; the
label structure still has to span the whole bag."""

import math

from hitminor import C4, P3, P4, PAW, SolveRequest, grid_graph, k1s, solve


def main():
    configs = [
        ("p3", lambda g: SolveRequest(graph=g, pattern=P3)),
        ("p4", lambda g: SolveRequest(graph=g, pattern=P4)),
        ("k1s:3", lambda g: SolveRequest(graph=g, pattern=k1s(3))),
        ("c4", lambda g: SolveRequest(graph=g, pattern=C4, mode="decide", k=2)),
        ("paw", lambda g: SolveRequest(graph=g, pattern=PAW, mode="decide", k=2)),
    ]

    print("-- fixed width, growing length: tables stay flat")
    for h in (10, 20, 40):
        g = grid_graph(3, h)
        res = solve(SolveRequest(graph=g, pattern=PAW, mode="decide", k=2))
        print(
            f"   3x{h:2d} grid (n={g.n:3d}): paw table {res.stats['max_table_size']}"
        )
    print()

    print("-- fixed length, growing width: log tables grow about linearly")
    header = "   width:" + "".join(f"  w={w}" for w in (2, 3, 4, 5))
    print(header)
    for name, make in configs:
        cells = []
        for w in (2, 3, 4, 5):
            res = solve(make(grid_graph(w, 30)))
            cells.append(res.stats["max_table_size"])
        logs = [f"{math.log(c):4.1f}" for c in cells]
        print(f"   {name:6s} tables {cells}  log {logs}")


if __name__ == "__main__":
    main()
