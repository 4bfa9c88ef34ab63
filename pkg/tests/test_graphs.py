import pytest

from speckerlab.coloring import two_coloring_or_odd_cycle
from speckerlab.graphs import (
    EvenLengthError,
    Graph,
    GraphError,
    NotClosedWalkError,
    UnknownVertexError,
    check_homomorphism,
    connected_induced_subsets,
    extract_odd_cycle,
    induced_subgraph,
    is_cycle,
    is_forest,
    shortest_odd_cycle,
    walk_length,
)

from helpers import bf_odd_girth, is_bipartite, random_graph, random_odd_closed_walk

PETERSEN = Graph(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
)


class TestGraphBasics:
    def test_rejects_loops(self):
        with pytest.raises(GraphError):
            Graph(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(UnknownVertexError):
            Graph(2, [(0, 2)])

    def test_adjacency(self):
        g = Graph(3, [(0, 1)])
        assert g.adjacent(1, 0) and not g.adjacent(1, 2)
        assert g.neighbors(0) == (1,)
        assert g.n_edges == 1


class TestInducedSubgraph:
    def test_complete_hereditary(self):
        sub, ids = induced_subgraph(Graph.complete(4), [0, 2, 3])
        assert sub.n_edges == 3 and sub.n_vertices == 3
        assert ids == (0, 2, 3)

    def test_empty_selection(self):
        sub, ids = induced_subgraph(Graph.complete(4), [])
        assert sub.n_vertices == 0 and ids == ()

    def test_cycle_to_path(self):
        sub, _ = induced_subgraph(Graph.cycle(5), [0, 1, 2])
        assert sorted(sub.edges()) == [(0, 1), (1, 2)]

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            induced_subgraph(Graph.complete(3), [0, 5])


class TestIsForest:
    def test_path(self):
        assert is_forest(Graph.path(5)) == (True, None)

    def test_triangle(self):
        ok, cycle = is_forest(Graph.cycle(3))
        assert not ok
        assert is_cycle(Graph.cycle(3), cycle)

    def test_empty(self):
        assert is_forest(Graph(0)) == (True, None)

    def test_witness_is_cycle(self):
        for seed in range(25):
            g = random_graph(seed, 9, 0.3)
            ok, cycle = is_forest(g)
            if not ok:
                assert is_cycle(g, cycle)
            else:
                assert g.n_edges < g.n_vertices


class TestShortestOddCycle:
    def test_five_cycle(self):
        length, cycle = shortest_odd_cycle(Graph.cycle(5))
        assert length == 5 and is_cycle(Graph.cycle(5), cycle)

    def test_bipartite(self):
        k33 = Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
        assert shortest_odd_cycle(k33) is None

    def test_petersen(self):
        # brute-force derivation: no 3-subset induces a cycle, some 5-subset does
        assert bf_odd_girth(PETERSEN) == 5
        length, cycle = shortest_odd_cycle(PETERSEN)
        assert length == 5 and is_cycle(PETERSEN, cycle)

    def test_truncation(self):
        assert shortest_odd_cycle(Graph.cycle(5), max_length=3) is None
        assert shortest_odd_cycle(Graph.cycle(5), max_length=5)[0] == 5

    def test_matches_brute_force(self):
        for seed in range(40):
            g = random_graph(seed, 4 + seed % 9, 0.35)
            expected = bf_odd_girth(g)
            got = shortest_odd_cycle(g)
            if expected is None:
                assert got is None
            else:
                assert got is not None and got[0] == expected
                assert is_cycle(g, got[1]) and walk_length(got[1]) == expected

    def test_none_iff_two_colorable(self):
        for seed in range(30):
            g = random_graph(seed + 500, 10, 0.3)
            col, odd = two_coloring_or_odd_cycle(g)
            assert (shortest_odd_cycle(g) is None) == (odd is None)
            assert (col is None) != (odd is None)


class TestExtractOddCycle:
    def test_triangle_walk(self):
        g = Graph.cycle(3)
        assert extract_odd_cycle(g, [0, 1, 2, 0]) == [0, 1, 2, 0]

    def test_split_at_repeat(self):
        # edges ab, bc, ca with a=0, b=1, c=2; walk a b a b c a has length 5
        g = Graph(3, [(0, 1), (1, 2), (2, 0)])
        cycle = extract_odd_cycle(g, [0, 1, 0, 1, 2, 0])
        assert is_cycle(g, cycle) and walk_length(cycle) == 3

    def test_identity_on_cycles(self):
        g = Graph.cycle(7)
        walk = [0, 1, 2, 3, 4, 5, 6, 0]
        assert extract_odd_cycle(g, walk) == walk

    def test_not_closed(self):
        g = Graph.path(4)
        with pytest.raises(NotClosedWalkError):
            extract_odd_cycle(g, [0, 1, 2])

    def test_not_a_walk(self):
        g = Graph.path(4)
        with pytest.raises(NotClosedWalkError):
            extract_odd_cycle(g, [0, 2, 0])

    def test_even_length(self):
        g = Graph.cycle(4)
        with pytest.raises(EvenLengthError):
            extract_odd_cycle(g, [0, 1, 2, 3, 0])

    def test_seeded_walks(self):
        for seed in range(60):
            g, walk = random_odd_closed_walk(seed)
            assert walk[0] == walk[-1] and walk_length(walk) % 2 == 1
            cycle = extract_odd_cycle(g, walk)
            assert is_cycle(g, cycle)
            assert walk_length(cycle) % 2 == 1
            assert walk_length(cycle) <= walk_length(walk)


class TestHomomorphism:
    def test_identity(self):
        g = PETERSEN
        ok, bad = check_homomorphism(g, g, {v: v for v in range(10)})
        assert ok and bad is None

    def test_even_cycle_to_edge(self):
        c6, k2 = Graph.cycle(6), Graph.complete(2)
        ok, _ = check_homomorphism(c6, k2, {v: v % 2 for v in range(6)})
        assert ok

    def test_odd_cycle_to_edge_fails(self):
        c5, k2 = Graph.cycle(5), Graph.complete(2)
        ok, bad = check_homomorphism(c5, k2, {v: v % 2 for v in range(5)})
        assert not ok and bad in c5.edges()

    def test_partial_map(self):
        with pytest.raises(UnknownVertexError):
            check_homomorphism(Graph.complete(2), Graph.complete(2), {0: 0})

    def test_pullback_of_odd_girth(self):
        # lift of h: vertices (v, i), edges project to edges; the projection
        # is a homomorphism, so the lift has no shorter odd cycle than h
        import random as _r

        for seed in range(20):
            rng = _r.Random(seed)
            h = random_graph(seed + 900, 6, 0.5)
            copies = 2
            lift_edges = []
            for (u, v) in h.edges():
                for i in range(copies):
                    for j in range(copies):
                        if rng.random() < 0.6:
                            lift_edges.append((u * copies + i, v * copies + j))
            g = Graph(6 * copies, lift_edges)
            phi = {x: x // copies for x in range(g.n_vertices)}
            ok, _ = check_homomorphism(g, h, phi)
            assert ok
            h_girth = (shortest_odd_cycle(h) or (None,))[0]
            g_girth = (shortest_odd_cycle(g) or (None,))[0]
            if h_girth is None:
                assert g_girth is None
            elif g_girth is not None:
                assert g_girth >= h_girth


class TestConnectedSubsets:
    def test_triangle(self):
        g = Graph.cycle(3)
        assert list(connected_induced_subsets(g, 1)) == [(0,), (1,), (2,)]
        assert sorted(connected_induced_subsets(g, 2)) == [(0, 1), (0, 2), (1, 2)]
        assert list(connected_induced_subsets(g, 3)) == [(0, 1, 2)]

    def test_path(self):
        g = Graph.path(3)
        assert sorted(connected_induced_subsets(g, 2)) == [(0, 1), (1, 2)]
        assert list(connected_induced_subsets(g, 3)) == [(0, 1, 2)]

    def test_matches_filtered_combinations(self):
        from itertools import combinations

        for seed in range(12):
            g = random_graph(seed + 77, 8, 0.3)
            for size in (2, 3, 4):
                expected = []
                for subset in combinations(range(8), size):
                    sub, _ = induced_subgraph(g, subset)
                    start = 0
                    seen = {start}
                    stack = [start]
                    while stack:
                        u = stack.pop()
                        for w in sub.neighbors(u):
                            if w not in seen:
                                seen.add(w)
                                stack.append(w)
                    if len(seen) == size:
                        expected.append(subset)
                got = sorted(connected_induced_subsets(g, size))
                assert got == expected
