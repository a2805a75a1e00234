"""Hypergraphs, graphs and their edge ideals.

Vertices are indices into ``names``; edges and vertex sets are bitsets. A
graph is simply a hypergraph whose edges all have two vertices.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ideal_lab.ideal import MonomialIdeal, dimension, normalize
from ideal_lab.scomplex import QQ, FieldSpec, popcount
from ideal_lab.takayama import depth_oracle

MAX_GRAPH_VERTICES = 24


def _bits(mask: int) -> list[int]:
    return [j for j in range(mask.bit_length()) if mask >> j & 1]


@dataclass(frozen=True)
class Hypergraph:
    """Simple hypergraph; ``edges`` are distinct bitsets in increasing order.

    Vertices that lie in no edge are allowed: colon and deletion keep the
    ambient vertex list so the edge ideal stays in the same ring.
    """

    names: tuple[str, ...]
    edges: tuple[int, ...]

    @classmethod
    def build(
        cls,
        names: Sequence[str] | int,
        edges: Iterable[int | Iterable[int | str]],
        antichain: bool = True,
    ) -> "Hypergraph":
        if isinstance(names, int):
            names = [f"x{j + 1}" for j in range(names)]
        names = tuple(str(v) for v in names)
        if len(set(names)) != len(names):
            raise ValueError("vertex names must be unique")
        index = {v: j for j, v in enumerate(names)}
        masks: list[int] = []
        for e in edges:
            mask = e if isinstance(e, int) else _edge_mask(e, index)
            if mask <= 0 or mask >> len(names):
                raise ValueError(f"edge {mask:b} is empty or uses an unknown vertex")
            if mask in masks:
                raise ValueError(f"repeated edge {_edge_text(mask, names)}")
            masks.append(mask)
        H = cls(names, tuple(sorted(masks)))
        if antichain:
            pair = H.containment()
            if pair is not None:
                a, b = pair
                raise ValueError(f"edge {_edge_text(a, names)} is contained in edge {_edge_text(b, names)}")
        return H

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, vertex: int | str) -> int:
        if isinstance(vertex, int):
            if not 0 <= vertex < self.n:
                raise ValueError(f"no vertex {vertex}")
            return vertex
        try:
            return self.names.index(vertex)
        except ValueError:
            raise ValueError(f"unknown vertex {vertex!r}") from None

    def containment(self) -> tuple[int, int] | None:
        """First pair ``(small, big)`` of edges with ``small`` inside ``big``."""
        for a, b in itertools.permutations(self.edges, 2):
            if a & b == a:
                return a, b
        return None

    @property
    def is_antichain(self) -> bool:
        return self.containment() is None

    @property
    def is_graph(self) -> bool:
        return all(popcount(e) == 2 for e in self.edges)

    @property
    def covered(self) -> int:
        """Vertices lying in at least one edge."""
        out = 0
        for e in self.edges:
            out |= e
        return out

    def edge_names(self, mask: int) -> list[str]:
        return [self.names[j] for j in _bits(mask)]

    def __str__(self) -> str:
        return "{" + ", ".join(_edge_text(e, self.names) for e in self.edges) + "}"


def _edge_mask(edge: Iterable[int | str], index: dict[str, int]) -> int:
    mask = 0
    for v in edge:
        if isinstance(v, str):
            if v not in index:
                raise ValueError(f"unknown vertex {v!r}")
            v = index[v]
        mask |= 1 << v
    return mask


def _edge_text(mask: int, names: Sequence[str]) -> str:
    if all(len(v) == 1 for v in names):
        return "".join(names[j] for j in _bits(mask))
    return "{" + ",".join(names[j] for j in _bits(mask)) + "}"


def graph(n: int | Sequence[str], edges: Iterable[tuple[int, int] | Iterable[int | str]]) -> Hypergraph:
    H = Hypergraph.build(n, edges)
    if not H.is_graph:
        raise ValueError("every edge of a graph has two vertices")
    return H


def _minimal(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda s: (popcount(s), s))
    out: list[int] = []
    for m in uniq:
        if not any(o & m == o for o in out):
            out.append(m)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# edge ideals and hypergraph operations


def edge_ideal(H: Hypergraph) -> MonomialIdeal:
    """One squarefree generator per edge (the empty edge gives the unit ideal)."""
    if not H.is_antichain:
        raise ValueError("edge ideals need an antichain hypergraph")
    return normalize([tuple(e >> j & 1 for j in range(H.n)) for e in H.edges], H.n)


def colon_hypergraph(H: Hypergraph, x: int | str) -> Hypergraph:
    """``H : x``, the minimal sets among ``F - {x}``; an edge ``{x}`` leaves the empty edge."""
    j = H.index(x)
    edges = _minimal(e & ~(1 << j) for e in H.edges)
    return Hypergraph(H.names, edges)


def deletion(H: Hypergraph, x: int | str) -> Hypergraph:
    """``H - x``: the edges avoiding ``x``."""
    j = H.index(x)
    return Hypergraph(H.names, tuple(e for e in H.edges if not e >> j & 1))


def good_leaf(H: Hypergraph) -> int | None:
    """First edge whose intersections with the other edges form a chain."""
    for F in H.edges:
        cuts = sorted({F & G for G in H.edges if G != F}, key=popcount)
        if all(a & b == a for a, b in zip(cuts, cuts[1:])):
            return F
    return None


def edge_monomial(H: Hypergraph, edge: int) -> tuple[int, ...]:
    return tuple(edge >> j & 1 for j in range(H.n))


# ---------------------------------------------------------------------------
# graphs


def neighbours(G: Hypergraph) -> list[int]:
    if not G.is_graph:
        raise ValueError("expected a graph")
    adj = [0] * G.n
    for e in G.edges:
        a, b = _bits(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def complement(G: Hypergraph) -> Hypergraph:
    adj = neighbours(G)
    edges = [1 << a | 1 << b for a, b in itertools.combinations(range(G.n), 2) if not adj[a] >> b & 1]
    return Hypergraph(G.names, tuple(sorted(edges)))


def induced(G: Hypergraph, vertices: int) -> Hypergraph:
    """Induced subgraph, keeping the ambient vertex list."""
    return Hypergraph(G.names, tuple(e for e in G.edges if e & vertices == e))


def mcs_order(G: Hypergraph) -> list[int]:
    """Maximum cardinality search; returns vertices in visiting order (lowest index on ties)."""
    adj = neighbours(G)
    weight = [0] * G.n
    visited = 0
    order = []
    for _ in range(G.n):
        v = max((u for u in range(G.n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= 1 << v
        for u in _bits(adj[v] & ~visited):
            weight[u] += 1
    return order


def is_chordal(G: Hypergraph) -> bool:
    """Reverse MCS order checked as a perfect elimination ordering."""
    adj = neighbours(G)
    seen = 0
    for v in mcs_order(G):
        # neighbours visited earlier come later in the elimination order
        earlier = adj[v] & seen
        for u in _bits(earlier):
            if earlier & ~(1 << u) & ~adj[u]:
                return False
        seen |= 1 << v
    return True


@dataclass(frozen=True)
class PatternFlags:
    claw_free: bool
    gap_free: bool
    twins: tuple[tuple[int, int], ...]
    claw: tuple[int, ...] | None = None
    gap: tuple[int, ...] | None = None

    @property
    def twin_free(self) -> bool:
        return not self.twins


def find_claw(G: Hypergraph) -> tuple[int, ...] | None:
    """``(centre, a, b, c)`` of an induced ``K_{1,3}``, if any."""
    adj = neighbours(G)
    for c in range(G.n):
        for a, b, d in itertools.combinations(_bits(adj[c]), 3):
            if not (adj[a] >> b & 1 or adj[a] >> d & 1 or adj[b] >> d & 1):
                return (c, a, b, d)
    return None


def find_gap(G: Hypergraph) -> tuple[int, ...] | None:
    """Two edges on four vertices with no edge between them."""
    adj = neighbours(G)
    for e, f in itertools.combinations(G.edges, 2):
        if e & f:
            continue
        a, b = _bits(e)
        if not (adj[a] & f or adj[b] & f):
            return tuple(_bits(e) + _bits(f))
    return None


def twin_pairs(G: Hypergraph) -> tuple[tuple[int, int], ...]:
    adj = neighbours(G)
    return tuple((a, b) for a, b in itertools.combinations(range(G.n), 2) if adj[a] == adj[b])


def pattern_checks(G: Hypergraph) -> PatternFlags:
    claw = find_claw(G)
    gap = find_gap(G)
    return PatternFlags(claw is None, gap is None, twin_pairs(G), claw, gap)


def maximal_independent_sets(G: Hypergraph) -> Iterator[int]:
    """Bron-Kerbosch with pivoting, run on the complement's adjacency."""
    if G.n > MAX_GRAPH_VERTICES:
        raise ValueError(f"at most {MAX_GRAPH_VERTICES} vertices are supported")
    adj = neighbours(G)
    full = G.vertex_mask
    non = [full & ~adj[v] & ~(1 << v) for v in range(G.n)]

    def expand(chosen: int, cand: int, excl: int) -> Iterator[int]:
        if not cand and not excl:
            yield chosen
            return
        pivot = max(_bits(cand | excl), key=lambda u: popcount(non[u] & cand))
        for v in _bits(cand & ~non[pivot]):
            yield from expand(chosen | 1 << v, cand & non[v], excl & non[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    yield from expand(0, full, 0)


class Cover(str, enum.Enum):
    WELL_COVERED = "WELL_COVERED"
    VERY_WELL_COVERED = "VERY_WELL_COVERED"
    NEITHER = "NEITHER"


@dataclass(frozen=True)
class CoverReport:
    kind: Cover
    sizes: tuple[int, ...]
    # two maximal independent sets of different sizes when kind is NEITHER
    witness: tuple[int, ...] = ()


def cover_classification(G: Hypergraph) -> CoverReport:
    by_size: dict[int, int] = {}
    for s in maximal_independent_sets(G):
        by_size.setdefault(popcount(s), s)
    sizes = tuple(sorted(by_size))
    if len(sizes) > 1:
        return CoverReport(Cover.NEITHER, sizes, (by_size[sizes[0]], by_size[sizes[-1]]))
    if 2 * sizes[0] == G.n:
        return CoverReport(Cover.VERY_WELL_COVERED, sizes)
    return CoverReport(Cover.WELL_COVERED, sizes)


def perfect_matchings(G: Hypergraph) -> Iterator[tuple[int, ...]]:
    """All perfect matchings by backtracking on the lowest unmatched vertex."""
    if G.n > MAX_GRAPH_VERTICES:
        raise ValueError(f"at most {MAX_GRAPH_VERTICES} vertices are supported")
    adj = neighbours(G)

    def extend(free: int, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield chosen
            return
        v = (free & -free).bit_length() - 1
        for u in _bits(adj[v] & free):
            yield from extend(free & ~(1 << v | 1 << u), chosen + (1 << v | 1 << u,))

    yield from extend(G.vertex_mask, ())


@dataclass(frozen=True)
class FavaronFlags:
    no_triangle_edge: bool
    path_endpoint_adjacency: bool
    no_c4_two_matching_edges: bool


def favaron_checks(G: Hypergraph, M: Sequence[int]) -> FavaronFlags:
    adj = neighbours(G)
    covered = 0
    for e in M:
        if e not in G.edges or e & covered:
            raise ValueError("M is not a matching of the graph")
        covered |= e
    if covered != G.vertex_mask:
        raise ValueError("M is not a perfect matching")
    pairs = [tuple(_bits(e)) for e in M]
    no_triangle = all(not adj[x] & adj[y] for x, y in pairs)
    # central edge x-y of a path a-x-y-b: the ends must be adjacent
    ends_ok = True
    for x, y in pairs:
        for a, b in itertools.product(_bits(adj[x] & ~(1 << y)), _bits(adj[y] & ~(1 << x))):
            if a != b and not adj[a] >> b & 1:
                ends_ok = False
    # a 4-cycle through two matching edges xy, uv uses either x~u, y~v or x~v, y~u
    no_c4 = True
    for (x, y), (u, v) in itertools.combinations(pairs, 2):
        if (adj[x] >> u & 1 and adj[y] >> v & 1) or (adj[x] >> v & 1 and adj[y] >> u & 1):
            no_c4 = False
    return FavaronFlags(no_triangle, ends_ok, no_c4)


def is_cohen_macaulay(H: Hypergraph, field: FieldSpec = QQ) -> bool:
    I = edge_ideal(H)
    depth, _ = depth_oracle(I, field)
    return depth == dimension(I)


def reg3_hypothesis(H: Hypergraph) -> bool:
    """Every ``H : x`` is a graph (all edges of size exactly two) with chordal complement."""
    for x in range(H.n):
        C = colon_hypergraph(H, x)
        if not C.edges or not C.is_graph or not is_chordal(complement(C)):
            return False
    return True
