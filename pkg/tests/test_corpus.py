import numpy as np

from ideal_lab.corpus import (
    complete_uniform,
    ideal_corpus,
    monomials_outside,
    random_claw_gap_free,
    random_leaf_hypergraph,
    random_monomial_outside,
    reg3_corpus,
    rng_for,
    split_variables,
)
from ideal_lab.hypergraph import find_claw, find_gap, good_leaf, reg3_hypothesis
from ideal_lab.ideal import normalize


def test_corpus_is_reproducible():
    assert ideal_corpus(7, 30) == ideal_corpus(7, 30)
    assert ideal_corpus(7, 30) != ideal_corpus(8, 30)


def test_first_draw_follows_documented_order():
    rng = np.random.Generator(np.random.PCG64(7))
    while True:
        n = int(rng.integers(2, 6))
        m = int(rng.integers(2, 7))
        block = rng.integers(0, 5, size=(m, n))
        if not (block.sum(axis=1) == 0).any():
            break
    expected = normalize([tuple(map(int, row)) for row in block], n)
    assert ideal_corpus(7, 1)[0] == expected


def test_parameter_ranges():
    for I in ideal_corpus(11, 200):
        assert 2 <= I.n <= 5
        assert 1 <= len(I.gens) <= 6
        assert max(I.max_exponents()) <= 4
        assert I.is_proper_nonzero


def test_split_variables():
    # y is a generator, so it is skipped even though it has the most weight
    assert split_variables(normalize([(1, 0, 1), (0, 1, 0), (2, 0, 1)], 3)) == [0, 2]
    assert split_variables(normalize([(1, 2, 0), (2, 0, 1)], 3)) == [0, 1, 2]
    assert split_variables(normalize([(3, 1, 1, 1)], 4), k=2) == [0, 1]
    assert split_variables(normalize([(0, 1), (1, 0)], 2)) == []


def test_monomials_outside():
    I = normalize([(1, 0), (0, 2)], 2)
    assert monomials_outside(I) == [(0, 1)]
    assert random_monomial_outside(normalize([(1, 0), (0, 1)], 2), rng_for(0)) is None
    rng = rng_for(1)
    for _ in range(20):
        m = random_monomial_outside(normalize([(2, 2)], 2), rng)
        assert 1 <= sum(m) <= 3 and not (m[0] >= 2 and m[1] >= 2)


def test_leaf_hypergraphs():
    rng = rng_for(3)
    for _ in range(40):
        H = random_leaf_hypergraph(rng)
        assert 3 <= H.n <= 6 and 2 <= len(H.edges) <= 5
        assert H.is_antichain and H.covered == H.vertex_mask
        assert good_leaf(H) is not None


def test_claw_gap_free_graphs():
    rng = rng_for(4)
    for _ in range(30):
        G = random_claw_gap_free(rng)
        assert G.is_graph and 4 <= G.n <= 8
        assert find_claw(G) is None and find_gap(G) is None


def test_reg3_corpus():
    hs = list(reg3_corpus(rng_for(5), 10))
    assert hs[:4] == [complete_uniform(n) for n in range(3, 7)]
    assert len(hs) == 14
    assert all(reg3_hypothesis(H) for H in hs)
