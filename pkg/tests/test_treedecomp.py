import random

import pytest

from hitminor import (
    FormatError,
    Graph,
    GuardError,
    TreeDecomposition,
    augment_universal,
    exact_td_small,
    heuristic_td,
    make_nice,
    make_nice_v0,
    parse_td,
    validate_td,
    write_td,
)
from hitminor.treedecomp import FORGET, INTRODUCE, LEAF

from corpus import complete_graph, cycle_graph, path_graph, random_graph


class TestValidate:
    def test_single_full_bag(self):
        g = cycle_graph(4)
        td = TreeDecomposition(bags=[frozenset(range(4))])
        assert validate_td(g, td) == []
        assert td.width == 3

    def test_path_bags(self):
        g = path_graph(3)
        td = TreeDecomposition(
            bags=[frozenset({0, 1}), frozenset({1, 2})], edges=[(0, 1)]
        )
        assert validate_td(g, td) == []
        assert td.width == 1

    def test_vertex_coverage_violation(self):
        g = path_graph(3)
        td = TreeDecomposition(bags=[frozenset({0, 1})])
        problems = validate_td(g, td)
        assert any("vertex coverage" in v for v in problems)

    def test_edge_coverage_violation(self):
        g = path_graph(3)
        td = TreeDecomposition(
            bags=[frozenset({0, 1}), frozenset({2})], edges=[(0, 1)]
        )
        assert any("edge coverage" in v for v in validate_td(g, td))

    def test_occurrence_violation(self):
        g = Graph(3, [(0, 1)])
        td = TreeDecomposition(
            bags=[frozenset({0, 1}), frozenset({2}), frozenset({0})],
            edges=[(0, 1), (1, 2)],
        )
        assert any("connectivity" in v for v in validate_td(g, td))

    def test_non_tree_structure(self):
        g = path_graph(2)
        td = TreeDecomposition(
            bags=[frozenset({0, 1}), frozenset({0, 1})], edges=[]
        )
        assert any("tree" in v for v in validate_td(g, td))


class TestHeuristic:
    def test_tree_width_one(self):
        g = Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
        td = heuristic_td(g)
        assert validate_td(g, td) == []
        assert td.width == 1

    def test_cycle_width_two(self):
        td = heuristic_td(cycle_graph(5))
        assert td.width == 2

    def test_clique_width(self):
        td = heuristic_td(complete_graph(4))
        assert td.width == 3

    def test_random_validity(self):
        rng = random.Random(2)
        for _ in range(60):
            g = random_graph(rng.randrange(0, 20), rng.random() * 0.5, rng)
            td = heuristic_td(g)
            assert validate_td(g, td) == []


class TestExact:
    def test_cycle(self):
        assert exact_td_small(cycle_graph(5)).width == 2

    def test_clique(self):
        assert exact_td_small(complete_graph(4)).width == 3

    def test_guard(self):
        with pytest.raises(GuardError):
            exact_td_small(Graph(20), limit=16)

    def test_never_worse_than_heuristic(self):
        rng = random.Random(4)
        for _ in range(25):
            g = random_graph(rng.randrange(1, 9), rng.random(), rng)
            exact = exact_td_small(g)
            assert validate_td(g, exact) == []
            assert exact.width <= heuristic_td(g).width


class TestMakeNice:
    def test_triangle_chain(self):
        g = cycle_graph(3)
        ntd = make_nice(TreeDecomposition(bags=[frozenset(range(3))]), g)
        ntd.check(g)
        kinds = ntd.kinds
        assert kinds.count(LEAF) == 1
        assert kinds.count(INTRODUCE) == 3
        assert kinds.count(FORGET) == 3
        assert ntd.bags[ntd.root] == ()

    def test_empty_graph(self):
        ntd = make_nice(TreeDecomposition(bags=[frozenset()]), Graph(0))
        assert len(ntd) == 1 and ntd.kinds == [LEAF]

    def test_invalid_input_rejected(self):
        g = path_graph(3)
        with pytest.raises(ValueError, match="invalid"):
            make_nice(TreeDecomposition(bags=[frozenset({0, 1})]), g)

    def test_fuzz_invariants_and_width(self):
        rng = random.Random(8)
        for _ in range(80):
            g = random_graph(rng.randrange(0, 24), rng.random() * 0.4, rng)
            td = heuristic_td(g)
            ntd = make_nice(td, g)
            ntd.check(g)
            assert ntd.width == td.width
            plain = ntd.as_tree_decomposition()
            assert validate_td(g, plain) == []
            # Node count stays linear in width times vertex count.
            assert len(ntd) <= 4 * (td.width + 2) * max(g.n, 1) + 4


class TestUniversalVertex:
    def test_augment_empty(self):
        g0 = augment_universal(Graph(0))
        assert g0.n == 1 and g0.m == 0

    def test_augment_edge_makes_triangle(self):
        g0 = augment_universal(path_graph(2))
        assert g0.n == 3 and g0.m == 3

    def test_augment_counts(self):
        g = cycle_graph(5)
        g0 = augment_universal(g)
        assert g0.n == g.n + 1 and g0.m == g.m + g.n

    def test_v0_everywhere(self):
        rng = random.Random(13)
        for _ in range(40):
            g = random_graph(rng.randrange(0, 15), rng.random() * 0.4, rng)
            g0 = augment_universal(g)
            v0 = g.n
            td = heuristic_td(g)
            td0 = TreeDecomposition(
                bags=[bag | {v0} for bag in td.bags] or [frozenset({v0})],
                edges=list(td.edges),
            )
            ntd = make_nice_v0(td0, g0, v0)
            ntd.check(g0)
            for t in range(len(ntd)):
                bag = ntd.bags[t]
                assert not bag or v0 in bag
                if not bag:
                    assert ntd.kinds[t] in (LEAF, FORGET) or t == ntd.root
            assert ntd.width <= td0.width + 1

    def test_empty_graph_chain(self):
        g0 = augment_universal(Graph(0))
        td0 = TreeDecomposition(bags=[frozenset({0})])
        ntd = make_nice_v0(td0, g0, 0)
        ntd.check(g0)
        assert len(ntd) == 3
        assert ntd.kinds == [LEAF, INTRODUCE, FORGET]
        assert ntd.vertex[1] == 0 and ntd.vertex[2] == 0


class TestTdFormat:
    def test_single_bag(self):
        td = parse_td("s td 1 3 3\nb 1 1 2 3\n")
        assert td.bags == [frozenset({0, 1, 2})]
        assert td.edges == []

    def test_round_trip(self):
        rng = random.Random(6)
        for _ in range(30):
            g = random_graph(rng.randrange(1, 15), rng.random() * 0.4, rng)
            td = heuristic_td(g)
            back = parse_td(write_td(td, g.n))
            assert back.bags == td.bags
            assert sorted(map(sorted, back.edges)) == sorted(
                map(sorted, td.edges)
            )

    def test_cyclic_edges_rejected(self):
        text = "s td 3 1 3\nb 1 1\nb 2 2\nb 3 3\n1 2\n2 3\n3 1\n"
        with pytest.raises(FormatError, match="tree"):
            parse_td(text)

    def test_bad_header(self):
        with pytest.raises(FormatError):
            parse_td("s td x 1 1\n")

    def test_bag_id_out_of_range(self):
        with pytest.raises(FormatError, match="range"):
            parse_td("s td 1 1 1\nb 2 1\n")
