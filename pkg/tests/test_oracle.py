import random

import pytest

from hitminor import (
    C4,
    CHAIR,
    Graph,
    GuardError,
    P3,
    P4,
    PAW,
    is_free,
    k1s,
    pattern_graph,
)
from hitminor.oracle import contains_minor, contains_tm, min_deletion_bruteforce

from corpus import (
    atlas_classes,
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
    star_graph,
)


def permuted(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


class TestMinorSearch:
    def test_k4_contains_c4(self):
        model = contains_minor(complete_graph(4), cycle_graph(4))
        assert model is not None
        model.check(complete_graph(4), cycle_graph(4))

    def test_tree_lacks_triangle(self):
        assert contains_minor(path_graph(6), cycle_graph(3)) is None

    def test_c4_in_itself(self):
        model = contains_minor(cycle_graph(4), cycle_graph(4))
        assert model is not None
        model.check(cycle_graph(4), cycle_graph(4))

    def test_models_always_valid(self):
        rng = random.Random(31)
        pats = [pattern_graph(p) for p in (P3, P4, C4, PAW, CHAIR)]
        for _ in range(60):
            g = random_graph(rng.randrange(1, 9), rng.random(), rng)
            for pg in pats:
                model = contains_minor(g, pg)
                if model is not None:
                    model.check(g, pg)

    def test_guards(self):
        with pytest.raises(GuardError):
            contains_minor(Graph(13), cycle_graph(3))
        with pytest.raises(GuardError):
            contains_minor(Graph(3), path_graph(7))


class TestTmSearch:
    def test_star_presence_tracks_max_degree(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_graph(rng.randrange(1, 9), rng.random(), rng)
            for s in (2, 3, 4, 5):
                present = contains_tm(g, star_graph(s)) is not None
                assert present == (g.max_degree() >= s)

    def test_cycles_subsume_shorter_cycles(self):
        model = contains_tm(cycle_graph(5), cycle_graph(4))
        assert model is not None
        model.check(cycle_graph(5), cycle_graph(4))

    def test_star_lacks_p4(self):
        assert contains_tm(star_graph(9), pattern_graph(P4)) is None

    def test_models_always_valid(self):
        rng = random.Random(43)
        pats = [pattern_graph(p) for p in (P4, C4, PAW, CHAIR, k1s(4))]
        for _ in range(60):
            g = random_graph(rng.randrange(1, 9), rng.random(), rng)
            for pg in pats:
                model = contains_tm(g, pg)
                if model is not None:
                    model.check(g, pg)

    def test_tm_equals_minor_for_subcubic_patterns(self):
        # Patterns of maximum degree three admit the same hosts either way.
        pats = [pattern_graph(p) for p in (P3, P4, C4, PAW, CHAIR)]
        for g in atlas_classes(5):
            for pg in pats:
                assert (contains_tm(g, pg) is None) == (
                    contains_minor(g, pg) is None
                )

    def test_absence_stable_under_relabeling(self):
        rng = random.Random(3)
        pg = pattern_graph(PAW)
        for _ in range(30):
            g = random_graph(7, 0.3, rng)
            base = contains_tm(g, pg) is None
            for _ in range(3):
                assert (contains_tm(permuted(g, rng), pg) is None) == base

    def test_cross_checks_at_guard_limit(self):
        # Hosts of 10..12 vertices: both searches, the structural checks,
        # and the returned models must all agree.
        rng = random.Random(616)
        pats = [P3, P4, k1s(3), k1s(5), C4, PAW, CHAIR]
        for _ in range(25):
            n = rng.randrange(10, 13)
            g = random_graph(n, rng.choice([0.12, 0.25, 0.45]), rng)
            for p in pats:
                pg = pattern_graph(p)
                tm = contains_tm(g, pg)
                assert is_free(g, p) == (tm is None), (p.name, g.edges())
                if tm is not None:
                    tm.check(g, pg)
                if pg.max_degree() <= 3:
                    mm = contains_minor(g, pg)
                    assert (mm is None) == (tm is None), (p.name, g.edges())
                    if mm is not None:
                        mm.check(g, pg)


class TestBruteForce:
    def test_examples(self):
        assert min_deletion_bruteforce(path_graph(5), P3) == 1
        assert min_deletion_bruteforce(cycle_graph(3), P3) == 1
        assert min_deletion_bruteforce(cycle_graph(5), P4) == 2
        assert min_deletion_bruteforce(complete_graph(4), C4) == 1
        assert min_deletion_bruteforce(complete_graph(4), PAW) == 1
        assert min_deletion_bruteforce(complete_graph(5), CHAIR) == 1

    def test_zero_iff_free(self):
        rng = random.Random(2)
        for _ in range(60):
            g = random_graph(rng.randrange(0, 8), rng.random(), rng)
            for p in (P3, P4, C4, PAW, CHAIR):
                assert (min_deletion_bruteforce(g, p) == 0) == is_free(g, p)

    def test_guard(self):
        with pytest.raises(GuardError):
            min_deletion_bruteforce(Graph(16), P3)
