"""Seeded random instances for the verification suites.

Every generator draws from ``numpy.random.Generator(PCG64(seed))`` in a fixed
order, so a seed reproduces the same instances on every platform.

Random ideals: ``n`` uniform in [2, 5], then the generator count uniform in
[2, 6], then an ``m x n`` block of exponents uniform in [0, 4]. A draw with an
all-zero row (the unit ideal) is discarded and the next draw is made.
"""

from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from ideal_lab.hypergraph import Hypergraph, find_claw, find_gap, good_leaf, graph, reg3_hypothesis
from ideal_lab.ideal import Monomial, MonomialIdeal, normalize

IDEAL_PARAMS = {"n": [2, 5], "generators": [2, 6], "exponent": [0, 4], "prng": "numpy PCG64"}


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_ideal(rng: np.random.Generator) -> MonomialIdeal:
    while True:
        n = int(rng.integers(2, 6))
        m = int(rng.integers(2, 7))
        block = rng.integers(0, 5, size=(m, n))
        if (block.sum(axis=1) == 0).any():
            continue
        return normalize([tuple(int(e) for e in row) for row in block], n)


def ideal_corpus(seed: int, count: int) -> list[MonomialIdeal]:
    rng = rng_for(seed)
    return [random_ideal(rng) for _ in range(count)]


def split_variables(I: MonomialIdeal, k: int = 3) -> list[int]:
    """The ``k`` variables of largest total exponent (lowest index on ties).

    Only variables that occur in ``I`` and are not themselves in ``I`` are
    eligible, so that ``I : x`` stays proper.
    """
    weights = [sum(g[j] for g in I.gens) for j in range(I.n)]
    eligible = [j for j in range(I.n) if weights[j] > 0 and not I.contains(tuple(int(i == j) for i in range(I.n)))]
    return sorted(eligible, key=lambda j: (-weights[j], j))[:k]


def monomials_outside(I: MonomialIdeal, max_degree: int = 3) -> list[Monomial]:
    out = []
    for d in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(I.n), d):
            m = tuple(combo.count(j) for j in range(I.n))
            if not I.contains(m):
                out.append(m)
    return out


def random_monomial_outside(I: MonomialIdeal, rng: np.random.Generator, max_degree: int = 3) -> Monomial | None:
    """Uniform choice among monomials of degree 1..max_degree not in ``I`` (``None`` if there are none)."""
    pool = monomials_outside(I, max_degree)
    if not pool:
        return None
    return pool[int(rng.integers(len(pool)))]


# ---------------------------------------------------------------------------
# hypergraphs and graphs


def _names(n: int) -> list[str]:
    return [chr(ord("a") + j) for j in range(n)]


def _compact(n: int, edges: list[int]) -> Hypergraph:
    """Drop vertices in no edge and relabel the rest in order."""
    used = 0
    for e in edges:
        used |= e
    keep = [j for j in range(n) if used >> j & 1]
    relabel = {j: k for k, j in enumerate(keep)}
    masks = [sum(1 << relabel[j] for j in range(n) if e >> j & 1) for e in edges]
    return Hypergraph.build(_names(len(keep)), masks)


def _minimal(masks: list[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda s: (bin(s).count("1"), s))
    out: list[int] = []
    for m in uniq:
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def random_leaf_hypergraph(rng: np.random.Generator, max_vertices: int = 6, max_edges: int = 5) -> Hypergraph:
    """Antichain hypergraph with at least two edges, no isolated vertices and a
    good leaf (rejection sampling). Edge sizes are uniform in [2, min(3, n)]."""
    while True:
        n = int(rng.integers(3, max_vertices + 1))
        k = int(rng.integers(2, max_edges + 1))
        edges = []
        for _ in range(k):
            size = int(rng.integers(2, min(3, n) + 1))
            verts = rng.choice(n, size=size, replace=False)
            edges.append(sum(1 << int(v) for v in verts))
        edges = _minimal(edges)
        if len(edges) < 2:
            continue
        H = _compact(n, edges)
        if good_leaf(H) is not None:
            return H


def random_graph(rng: np.random.Generator, n: int, p: float) -> Hypergraph:
    edges = [(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]
    return graph(_names(n), edges)


def random_claw_gap_free(rng: np.random.Generator, min_vertices: int = 4, max_vertices: int = 8) -> Hypergraph:
    """Claw-free, gap-free graph without isolated vertices (rejection sampling)."""
    while True:
        n = int(rng.integers(min_vertices, max_vertices + 1))
        p = float(rng.uniform(0.3, 0.95))
        G = random_graph(rng, n, p)
        if G.covered != G.vertex_mask:
            continue
        if find_claw(G) is None and find_gap(G) is None:
            return G


def complete_uniform(n: int, k: int = 3) -> Hypergraph:
    return Hypergraph.build(_names(n), [sum(1 << j for j in c) for c in itertools.combinations(range(n), k)])


def reg3_corpus(rng: np.random.Generator, random_count: int) -> Iterator[Hypergraph]:
    """Complete 3-uniform hypergraphs on 3..6 vertices, then random hypergraphs
    with edges of size 3 or 4 that satisfy the ``H : x`` hypothesis."""
    for n in range(3, 7):
        yield complete_uniform(n)
    made = 0
    while made < random_count:
        n = int(rng.integers(4, 7))
        p = float(rng.uniform(0.4, 1.0))
        triples = [sum(1 << j for j in c) for c in itertools.combinations(range(n), 3) if rng.random() < p]
        quads = [sum(1 << j for j in c) for c in itertools.combinations(range(n), 4) if rng.random() < 0.2]
        edges = _minimal(triples + quads)
        if not edges:
            continue
        H = _compact(n, edges)
        if reg3_hypothesis(H):
            made += 1
            yield H
