import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ideal_lab.hypergraph import (
    Cover,
    Hypergraph,
    colon_hypergraph,
    complement,
    cover_classification,
    deletion,
    edge_ideal,
    favaron_checks,
    find_claw,
    find_gap,
    good_leaf,
    graph,
    is_chordal,
    is_cohen_macaulay,
    maximal_independent_sets,
    pattern_checks,
    perfect_matchings,
    reg3_hypothesis,
    twin_pairs,
)
from ideal_lab.ideal import colon, dimension, variable
from ideal_lab.takayama import invariants

ABCD = ["a", "b", "c", "d"]
C4 = graph(ABCD, ["ab", "bc", "cd", "da"])
P4 = graph(ABCD, ["ab", "bc", "cd"])
P3 = graph(["a", "b", "c"], ["ab", "bc"])
TRIANGLE = graph(["a", "b", "c"], ["ab", "bc", "ac"])
CLAW = graph(ABCD, ["ca", "cb", "cd"])
C5 = graph(5, [(i, (i + 1) % 5) for i in range(5)])
P5 = graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [p for p, keep in zip(pairs, draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))) if keep]
    return graph(n, edges), edges


@st.composite
def hypergraphs(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    raw = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=6))
    uniq = sorted(set(raw), key=lambda s: (bin(s).count("1"), s))
    edges = [m for m in uniq if not any(o != m and o & m == o for o in uniq)]
    return Hypergraph.build(n, edges)


class TestConstruction:
    def test_edge_ideals(self):
        assert edge_ideal(graph(["a", "b"], ["ab"])).gens == ((1, 1),)
        assert len(edge_ideal(C4).gens) == 4
        assert set(edge_ideal(CLAW).gens) == {(1, 0, 1, 0), (0, 1, 1, 0), (0, 0, 1, 1)}

    def test_repeated_edge(self):
        with pytest.raises(ValueError, match="repeated"):
            Hypergraph.build(ABCD, ["ab", "ba"])

    def test_containment_names_the_pair(self):
        with pytest.raises(ValueError, match="ab is contained in edge abc"):
            Hypergraph.build(ABCD, ["ab", "abc"])

    def test_unknown_vertex_and_duplicate_names(self):
        with pytest.raises(ValueError):
            Hypergraph.build(ABCD, ["ae"])
        with pytest.raises(ValueError):
            Hypergraph.build(["a", "a"], ["a"])

    def test_graph_requires_pairs(self):
        with pytest.raises(ValueError):
            graph(ABCD, ["abc"])


class TestColonAndDeletion:
    def test_claw_centre(self):
        assert colon_hypergraph(CLAW, "c").edges == (0b0001, 0b0010, 0b1000)

    def test_p3_middle(self):
        assert colon_hypergraph(P3, "b").edges == (0b001, 0b100)

    def test_c4(self):
        assert colon_hypergraph(C4, "a").edges == (0b0010, 0b1000)

    def test_deletion(self):
        assert deletion(C4, "a").edges == (0b0110, 0b1100)

    @settings(max_examples=100, deadline=None)
    @given(hypergraphs())
    def test_colon_matches_ideal_colon(self, H):
        I = edge_ideal(H)
        for x in range(H.n):
            assert edge_ideal(colon_hypergraph(H, x)) == colon(I, variable(x, H.n))


class TestGoodLeaf:
    def test_examples(self):
        assert good_leaf(P3) == 0b011
        assert good_leaf(TRIANGLE) is None
        assert good_leaf(C4) is None

    def test_hyperpath(self):
        H = Hypergraph.build(["a", "b", "c", "d", "e"], ["abc", "cde"])
        assert good_leaf(H) == 0b00111

    @settings(max_examples=100, deadline=None)
    @given(hypergraphs())
    def test_definition(self, H):
        def chain(F):
            cuts = [F & G for G in H.edges if G != F]
            return all(a & b in (a, b) for a, b in itertools.combinations(cuts, 2))

        leaf = good_leaf(H)
        if leaf is None:
            assert not any(chain(F) for F in H.edges)
        else:
            assert chain(leaf)


class TestChordal:
    def test_examples(self):
        assert not is_chordal(C4)
        assert is_chordal(graph(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]))
        one_chord = graph(5, [(i, (i + 1) % 5) for i in range(5)] + [(0, 2)])
        two_chords = graph(5, [(i, (i + 1) % 5) for i in range(5)] + [(0, 2), (0, 3)])
        assert not is_chordal(one_chord)
        assert is_chordal(two_chords)

    @settings(max_examples=300, deadline=None)
    @given(graphs())
    def test_against_induced_cycle_search(self, ge):
        G, edges = ge
        assert is_chordal(G) == oracles.induced_cycle_free(G.n, oracles.adjacency(G.n, edges))


class TestPatterns:
    def test_examples(self):
        assert not pattern_checks(CLAW).claw_free
        flags = pattern_checks(P5)
        assert not flags.gap_free
        assert set(flags.gap) == {0, 1, 3, 4}
        assert twin_pairs(C4) == ((0, 2), (1, 3))

    @settings(max_examples=200, deadline=None)
    @given(graphs())
    def test_against_brute_force(self, ge):
        G, edges = ge
        adj = oracles.adjacency(G.n, edges)
        assert (find_claw(G) is not None) == oracles.has_claw(G.n, adj)
        assert (find_gap(G) is not None) == oracles.has_gap(G.n, edges, adj)
        assert set(twin_pairs(G)) == oracles.twins(G.n, adj)


class TestCover:
    def test_examples(self):
        assert cover_classification(C4).kind is Cover.VERY_WELL_COVERED
        assert cover_classification(C5).kind is Cover.WELL_COVERED
        rep = cover_classification(P3)
        assert rep.kind is Cover.NEITHER and rep.sizes == (1, 2)

    @settings(max_examples=200, deadline=None)
    @given(graphs())
    def test_sizes_against_subset_scan(self, ge):
        G, edges = ge
        sizes = {bin(s).count("1") for s in maximal_independent_sets(G)}
        assert sizes == oracles.independent_set_sizes(G.n, oracles.adjacency(G.n, edges))
        assert tuple(sorted(sizes)) == cover_classification(G).sizes

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=8))
    def test_matchings_against_brute_force(self, ge):
        G, edges = ge
        found = list(perfect_matchings(G))
        assert len(set(found)) == len(found)
        expected = oracles.perfect_matching_count(G.n, edges) if G.n % 2 == 0 else 0
        assert len(found) == expected


class TestFavaron:
    def test_c4(self):
        assert not favaron_checks(C4, (0b0011, 0b1100)).no_c4_two_matching_edges

    def test_p4(self):
        flags = favaron_checks(P4, (0b0011, 0b1100))
        assert flags.no_triangle_edge and flags.path_endpoint_adjacency and flags.no_c4_two_matching_edges

    def test_k2(self):
        flags = favaron_checks(graph(["a", "b"], ["ab"]), (0b11,))
        assert flags == type(flags)(True, True, True)

    def test_rejects_non_perfect(self):
        with pytest.raises(ValueError):
            favaron_checks(P4, (0b0011,))
        with pytest.raises(ValueError):
            favaron_checks(P4, (0b0011, 0b0110))


class TestCohenMacaulay:
    def test_examples(self):
        assert is_cohen_macaulay(graph(["a", "b"], ["ab"]))
        assert not is_cohen_macaulay(C4)
        assert invariants(edge_ideal(C4)).depth == 1 and dimension(edge_ideal(C4)) == 2
        assert is_cohen_macaulay(P4)


class TestReg3:
    def test_c5_fails_hypothesis(self):
        assert not reg3_hypothesis(C5)

    def test_single_triple(self):
        H = Hypergraph.build(["a", "b", "c"], ["abc"])
        assert reg3_hypothesis(H)
        assert invariants(edge_ideal(H)).reg == 2

    def test_complete_three_uniform(self):
        H = Hypergraph.build(5, [sum(1 << j for j in c) for c in itertools.combinations(range(5), 3)])
        assert reg3_hypothesis(H)
        assert invariants(edge_ideal(H)).reg <= 2


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_froberg_on_random_graphs(ge):
    G, _ = ge
    reg = invariants(edge_ideal(G)).reg if G.edges else 0
    assert (reg <= 1) == is_chordal(complement(G))
