"""Label-table solvers: deletion to max-degree-1, to star-or-triangle
components, and to bounded degree.

Each table maps a tuple of per-bag-vertex labels to the smallest deletion
count among partial solutions realizing those labels on the subtree graph.
Missing keys mean "infeasible".  Bag edges are present in both children of a
join node, so joins subtract bag-level contributions once.
"""

from __future__ import annotations

from ..graph import Graph
from ..treedecomp import FORGET, INTRODUCE, LEAF, NiceTreeDecomposition

Table = dict[tuple[int, ...], int]


def _bag_positions(g: Graph, bag: tuple[int, ...]) -> list[list[int]]:
    """For each bag position, the positions of its bag neighbors."""
    index = {v: i for i, v in enumerate(bag)}
    return [
        sorted(index[w] for w in g.neighbors(v) if w in index) for v in bag
    ]


def _insert(labels: tuple[int, ...], pos: int, value: int) -> tuple[int, ...]:
    return labels[:pos] + (value,) + labels[pos:]


def _remove(labels: tuple[int, ...], pos: int) -> tuple[int, ...]:
    return labels[:pos] + labels[pos + 1 :]


def _min_put(table: Table, key: tuple[int, ...], value: int) -> None:
    prev = table.get(key)
    if prev is None or value < prev:
        table[key] = value


def _run(
    g: Graph,
    ntd: NiceTreeDecomposition,
    leaf,
    introduce,
    forget,
    join,
    bound,
    stats: dict | None,
) -> int:
    tables: list[Table | None] = [None] * len(ntd)
    max_table = 0
    for t in range(len(ntd)):
        kind = ntd.kinds[t]
        bag = ntd.bags[t]
        if kind == LEAF:
            table = leaf()
        elif kind == INTRODUCE:
            (c,) = ntd.children[t]
            pos = bag.index(ntd.vertex[t])
            table = introduce(tables[c], bag, pos)
            tables[c] = None
        elif kind == FORGET:
            (c,) = ntd.children[t]
            cpos = ntd.bags[c].index(ntd.vertex[t])
            table = forget(tables[c], cpos)
            tables[c] = None
        else:
            c1, c2 = ntd.children[t]
            table = join(tables[c1], tables[c2], bag)
            tables[c1] = tables[c2] = None
        assert len(table) <= bound ** len(bag)
        max_table = max(max_table, len(table))
        tables[t] = table
    if stats is not None:
        stats["max_table_size"] = max(stats.get("max_table_size", 0), max_table)
    root_table = tables[ntd.root]
    assert root_table is not None
    return root_table[()]


# ---------------------------------------------------------------------------
# Deletion to maximum degree one.
#
# Labels: 0 = deleted, 1 = kept and isolated so far, 2 = kept and matched.

_P3_DEL, _P3_ISO, _P3_MATCHED = 0, 1, 2


def solve_p3(g: Graph, ntd: NiceTreeDecomposition, stats: dict | None = None) -> int:
    """Minimum deletions so every remaining vertex has degree at most one."""

    def leaf() -> Table:
        return {(): 0}

    def introduce(child: Table, bag, pos) -> Table:
        nbrs = _bag_positions(g, bag)[pos]
        child_nbrs = [p if p < pos else p - 1 for p in nbrs]
        out: Table = {}
        for labels, r in child.items():
            _min_put(out, _insert(labels, pos, _P3_DEL), r + 1)
            kept = [p for p in child_nbrs if labels[p] != _P3_DEL]
            if not kept:
                _min_put(out, _insert(labels, pos, _P3_ISO), r)
            elif len(kept) == 1 and labels[kept[0]] == _P3_ISO:
                upd = list(labels)
                upd[kept[0]] = _P3_MATCHED
                _min_put(out, _insert(tuple(upd), pos, _P3_MATCHED), r)
        return out

    def forget(child: Table, cpos) -> Table:
        out: Table = {}
        for labels, r in child.items():
            _min_put(out, _remove(labels, cpos), r)
        return out

    def join(left: Table, right: Table, bag) -> Table:
        nbrs = _bag_positions(g, bag)
        by_deleted: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = {}
        for labels, r in right.items():
            mask = tuple(1 if x == _P3_DEL else 0 for x in labels)
            by_deleted.setdefault(mask, []).append((labels, r))
        out: Table = {}
        for labels1, r1 in left.items():
            mask = tuple(1 if x == _P3_DEL else 0 for x in labels1)
            size_s = sum(mask)
            for labels2, r2 in by_deleted.get(mask, ()):
                merged = []
                ok = True
                for i, (a, b) in enumerate(zip(labels1, labels2)):
                    if a == _P3_DEL:
                        merged.append(_P3_DEL)
                    elif a == _P3_ISO and b == _P3_ISO:
                        merged.append(_P3_ISO)
                    elif a == _P3_MATCHED and b == _P3_MATCHED:
                        # Matched on both sides is only consistent when the
                        # partner is the one shared bag neighbor.
                        kept_deg = sum(
                            1 for p in nbrs[i] if labels1[p] != _P3_DEL
                        )
                        if kept_deg != 1:
                            ok = False
                            break
                        merged.append(_P3_MATCHED)
                    else:
                        merged.append(_P3_MATCHED)
                if ok:
                    _min_put(out, tuple(merged), r1 + r2 - size_s)
        return out

    return _run(g, ntd, leaf, introduce, forget, join, 3, stats)


# ---------------------------------------------------------------------------
# Deletion to components that are single triangles or stars.
#
# Labels: 0 = deleted, 1 = future star leaf (isolated so far), 2 = star leaf
# attached to its center, 3 = star center, 4 = future triangle vertex,
# 5 = vertex of a completed triangle.

_P4_DEL, _P4_LEAF_OPEN, _P4_LEAF_DONE, _P4_CENTER, _P4_TRI_OPEN, _P4_TRI_DONE = range(6)


def solve_p4(g: Graph, ntd: NiceTreeDecomposition, stats: dict | None = None) -> int:
    """Minimum deletions so every component is a triangle or a star."""

    def leaf() -> Table:
        return {(): 0}

    def introduce(child: Table, bag, pos) -> Table:
        bagpos = _bag_positions(g, bag)
        child_nbrs = [p if p < pos else p - 1 for p in bagpos[pos]]
        # For each child position, the child positions of its bag neighbors
        # other than the newly introduced vertex.
        other_nbrs = []
        for real in range(len(bag)):
            if real == pos:
                continue
            other_nbrs.append(
                [
                    p if p < pos else p - 1
                    for p in bagpos[real]
                    if p != pos
                ]
            )

        def adjacent(cp1: int, cp2: int) -> bool:
            r1 = cp1 if cp1 < pos else cp1 + 1
            r2 = cp2 if cp2 < pos else cp2 + 1
            return g.has_edge(bag[r1], bag[r2])

        out: Table = {}
        for labels, r in child.items():
            _min_put(out, _insert(labels, pos, _P4_DEL), r + 1)
            kept = [p for p in child_nbrs if labels[p] != _P4_DEL]
            if not kept:
                _min_put(out, _insert(labels, pos, _P4_LEAF_OPEN), r)
                _min_put(out, _insert(labels, pos, _P4_CENTER), r)
                _min_put(out, _insert(labels, pos, _P4_TRI_OPEN), r)
                continue
            if len(kept) == 1:
                u = kept[0]
                if labels[u] == _P4_CENTER:
                    _min_put(out, _insert(labels, pos, _P4_LEAF_DONE), r)
                if labels[u] == _P4_TRI_OPEN and not any(
                    labels[p] != _P4_DEL for p in other_nbrs[u]
                ):
                    _min_put(out, _insert(labels, pos, _P4_TRI_OPEN), r)
            if len(kept) == 2:
                u, w = kept
                if (
                    labels[u] == labels[w] == _P4_TRI_OPEN
                    and adjacent(u, w)
                    and {p for p in other_nbrs[u] if labels[p] != _P4_DEL} == {w}
                    and {p for p in other_nbrs[w] if labels[p] != _P4_DEL} == {u}
                ):
                    upd = list(labels)
                    upd[u] = upd[w] = _P4_TRI_DONE
                    _min_put(out, _insert(tuple(upd), pos, _P4_TRI_DONE), r)
            # A new star center adopts exactly the currently isolated leaves.
            if all(labels[p] == _P4_LEAF_OPEN for p in kept):
                upd = list(labels)
                for p in kept:
                    upd[p] = _P4_LEAF_DONE
                _min_put(out, _insert(tuple(upd), pos, _P4_CENTER), r)
        return out

    def forget(child: Table, cpos) -> Table:
        out: Table = {}
        for labels, r in child.items():
            if labels[cpos] in (_P4_LEAF_OPEN, _P4_TRI_OPEN):
                continue
            _min_put(out, _remove(labels, cpos), r)
        return out

    def join(left: Table, right: Table, bag) -> Table:
        nbrs = _bag_positions(g, bag)
        # Children must agree on deletions and on star centers.
        def group_key(labels):
            return tuple(
                x if x in (_P4_DEL, _P4_CENTER) else -1 for x in labels
            )

        by_key: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = {}
        for labels, r in right.items():
            by_key.setdefault(group_key(labels), []).append((labels, r))
        out: Table = {}
        for labels1, r1 in left.items():
            key = group_key(labels1)
            size_s = sum(1 for x in labels1 if x == _P4_DEL)
            for labels2, r2 in by_key.get(key, ()):
                merged = list(labels1)
                ok = True
                for i, (a, b) in enumerate(zip(labels1, labels2)):
                    if a in (_P4_DEL, _P4_CENTER):
                        continue
                    star_a = a in (_P4_LEAF_OPEN, _P4_LEAF_DONE)
                    star_b = b in (_P4_LEAF_OPEN, _P4_LEAF_DONE)
                    if star_a != star_b:
                        ok = False
                        break
                    if star_a:
                        if a == _P4_LEAF_DONE and b == _P4_LEAF_DONE:
                            # Both attachments must be the single shared bag
                            # center.
                            kept = [
                                p for p in nbrs[i] if labels1[p] != _P4_DEL
                            ]
                            if len(kept) != 1 or labels1[kept[0]] != _P4_CENTER:
                                ok = False
                                break
                        merged[i] = (
                            _P4_LEAF_DONE
                            if _P4_LEAF_DONE in (a, b)
                            else _P4_LEAF_OPEN
                        )
                    else:
                        if a == _P4_TRI_DONE and b == _P4_TRI_DONE:
                            # The completed triangle must sit inside the bag,
                            # identically on both sides.
                            cands = [
                                p
                                for p in nbrs[i]
                                if labels1[p] == _P4_TRI_DONE
                                and labels2[p] == _P4_TRI_DONE
                            ]
                            if not any(
                                g.has_edge(bag[p], bag[q])
                                for pi, p in enumerate(cands)
                                for q in cands[pi + 1 :]
                            ):
                                ok = False
                                break
                        merged[i] = (
                            _P4_TRI_DONE
                            if _P4_TRI_DONE in (a, b)
                            else _P4_TRI_OPEN
                        )
                if ok:
                    _min_put(out, tuple(merged), r1 + r2 - size_s)
        return out

    return _run(g, ntd, leaf, introduce, forget, join, 6, stats)


# ---------------------------------------------------------------------------
# Deletion to maximum degree d.
#
# Labels: -1 = deleted, 0..d = exact current degree of a kept vertex.


def solve_bdd(
    g: Graph,
    ntd: NiceTreeDecomposition,
    d: int,
    stats: dict | None = None,
) -> int:
    """Minimum deletions so every remaining vertex has degree at most d."""
    if d < 0:
        raise ValueError("maximum degree must be non-negative")

    def leaf() -> Table:
        return {(): 0}

    def introduce(child: Table, bag, pos) -> Table:
        nbrs = _bag_positions(g, bag)[pos]
        child_nbrs = [p if p < pos else p - 1 for p in nbrs]
        out: Table = {}
        for labels, r in child.items():
            _min_put(out, _insert(labels, pos, -1), r + 1)
            kept = [p for p in child_nbrs if labels[p] >= 0]
            if len(kept) > d or any(labels[p] + 1 > d for p in kept):
                continue
            upd = list(labels)
            for p in kept:
                upd[p] += 1
            _min_put(out, _insert(tuple(upd), pos, len(kept)), r)
        return out

    def forget(child: Table, cpos) -> Table:
        out: Table = {}
        for labels, r in child.items():
            _min_put(out, _remove(labels, cpos), r)
        return out

    def join(left: Table, right: Table, bag) -> Table:
        nbrs = _bag_positions(g, bag)
        by_deleted: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = {}
        for labels, r in right.items():
            mask = tuple(1 if x < 0 else 0 for x in labels)
            by_deleted.setdefault(mask, []).append((labels, r))
        out: Table = {}
        for labels1, r1 in left.items():
            mask = tuple(1 if x < 0 else 0 for x in labels1)
            size_s = sum(mask)
            bag_deg = [
                sum(1 for p in nbrs[i] if labels1[p] >= 0)
                for i in range(len(labels1))
            ]
            for labels2, r2 in by_deleted.get(mask, ()):
                merged = []
                ok = True
                for i, (a, b) in enumerate(zip(labels1, labels2)):
                    if a < 0:
                        merged.append(-1)
                        continue
                    f = a + b - bag_deg[i]
                    if f > d:
                        ok = False
                        break
                    merged.append(f)
                if ok:
                    _min_put(out, tuple(merged), r1 + r2 - size_s)
        return out

    return _run(g, ntd, leaf, introduce, forget, join, d + 2, stats)
