"""Simplicial complexes on at most 64 vertices and their reduced homology ranks.

Faces are vertex bitsets (Python ints). Ranks over the rationals come from
fraction-free (Bareiss) elimination of the integer boundary matrices, ranks
over a prime field from ordinary modular elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

MAX_VERTICES = 64


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``characteristic == 0`` is QQ, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and (p < 2 or p >= 1 << 31 or not _is_prime(p)):
            raise ValueError(f"{p} is not a prime below 2^31")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text in ("q", "qq", "0"):
            return cls(0)
        if text.startswith("f") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise ValueError(f"unknown field {text!r}; use q or f<p>")

    def __str__(self) -> str:
        return "q" if self.characteristic == 0 else f"f{self.characteristic}"


QQ = FieldSpec(0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class SimplicialComplex:
    """Facets as an inclusion antichain of bitsets.

    ``void=True`` with no facets is the complex with no faces at all; the
    irrelevant complex ``{emptyset}`` has the single facet ``0``.
    """

    vertex_count: int
    facets: tuple[int, ...]
    void: bool = False

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def dimension(self) -> int:
        if self.void:
            return -2
        return max(popcount(f) for f in self.facets) - 1

    def __contains__(self, face: int | Iterable[int]) -> bool:
        if not isinstance(face, int):
            face = _to_mask(face)
        return any(face & f == face for f in self.facets)

    def faces(self) -> list[int]:
        """All faces, deduplicated, sorted by dimension then bitset value."""
        if self.void:
            return []
        seen: set[int] = set()
        for f in self.facets:
            if f in seen:
                continue
            # every subset of a facet
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return sorted(seen, key=lambda s: (popcount(s), s))

    def f_vector(self) -> list[int]:
        """Face counts by dimension, starting at dimension -1."""
        counts = [0] * (self.dimension + 2) if not self.void else []
        for s in self.faces():
            counts[popcount(s)] += 1
        return counts


def _to_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << v
    return mask


def from_facets(vertex_count: int, faces: Iterable[int | Iterable[int]], void: bool = False) -> SimplicialComplex:
    """Build a complex from any generating family of faces.

    An empty family describes the void complex only when ``void`` is set;
    otherwise it is read as ``{emptyset}``.
    """
    if vertex_count > MAX_VERTICES:
        raise ValueError(f"at most {MAX_VERTICES} vertices are supported")
    masks = sorted({f if isinstance(f, int) else _to_mask(f) for f in faces})
    limit = 1 << vertex_count
    for m in masks:
        if m < 0 or m >= limit:
            raise ValueError(f"face {m:b} uses a vertex outside 0..{vertex_count - 1}")
    if not masks:
        if void:
            return SimplicialComplex(vertex_count, (), True)
        return SimplicialComplex(vertex_count, (0,))
    if void:
        raise ValueError("a void complex has no faces")
    facets = [m for m in masks if not any(m != o and m & o == m for o in masks)]
    facets.sort(key=lambda s: (-popcount(s), s))
    return SimplicialComplex(vertex_count, tuple(facets))


def from_nonfaces(vertex_count: int, ground: int, nonfaces: Sequence[int]) -> SimplicialComplex:
    """The complex on ``ground`` whose faces contain none of ``nonfaces``."""
    if any(nf == 0 for nf in nonfaces):
        return SimplicialComplex(vertex_count, (), True)
    faces = []
    sub = ground
    while True:
        if not any(nf & sub == nf for nf in nonfaces):
            faces.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & ground
    return from_facets(vertex_count, faces)


# ---------------------------------------------------------------------------
# exact ranks


def rank_bareiss(matrix: list[list[int]]) -> int:
    """Rank over QQ of an integer matrix by fraction-free elimination."""
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        pv = p[col]
        for i in range(rank + 1, len(rows)):
            r = rows[i]
            rv = r[col]
            # Sylvester identity keeps the division exact
            rows[i] = [(pv * r[k] - rv * p[k]) // prev for k in range(ncols)]
        prev = pv
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_mod_p(matrix: list[list[int]], p: int) -> int:
    rows = [[v % p for v in r] for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        prow[:] = [(v * inv) % p for v in prow]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                r = rows[i]
                rows[i] = [(a - f * b) % p for a, b in zip(r, prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def boundary_matrix(lower: Sequence[int], upper: Sequence[int]) -> list[list[int]]:
    """Boundary map from faces ``upper`` (dimension d) to ``lower`` (dimension d-1).

    Rows index ``upper`` so elimination runs over the smaller side less often;
    rank is unaffected by the transpose.
    """
    index = {s: i for i, s in enumerate(lower)}
    width = len(lower)
    out = []
    for s in upper:
        row = [0] * width
        sign = 1
        v = s
        while v:
            low = v & -v
            row[index[s ^ low]] = sign
            sign = -sign
            v ^= low
        out.append(row)
    return out


def _matmul_is_zero(a: list[list[int]], b: list[list[int]]) -> bool:
    # a: rows over C_{d+1} in C_d coordinates, b: rows over C_d in C_{d-1} coordinates
    for row in a:
        acc = [0] * (len(b[0]) if b else 0)
        for k, v in enumerate(row):
            if v:
                for j, w in enumerate(b[k]):
                    acc[j] += v * w
        if any(acc):
            return False
    return True


def reduced_homology_ranks(C: SimplicialComplex, field: FieldSpec = QQ, check: bool = False) -> list[int]:
    """Ranks of reduced homology in dimensions -1, 0, 1, ... up to dim C.

    The void complex returns an empty list (all ranks zero).
    """
    if C.void:
        return []
    limit = 1 << C.vertex_count
    if any(f >= limit for f in C.facets):
        raise ValueError("facet uses a vertex outside the vertex range")
    return list(_ranks(C.facets, field.characteristic, check))


@lru_cache(maxsize=1 << 16)
def _ranks(facets: tuple[int, ...], p: int, check: bool = False) -> tuple[int, ...]:
    faces = SimplicialComplex(64, facets).faces()
    top = max(popcount(f) for f in facets)
    by_size: list[list[int]] = [[] for _ in range(top + 1)]
    for s in faces:
        by_size[popcount(s)].append(s)
    # bd[k] : C_{k-1} -> C_{k-2}, i.e. from faces with k vertices to k-1 vertices
    rank_of = [0] * (top + 2)
    prev_matrix = None
    for k in range(1, top + 1):
        mat = boundary_matrix(by_size[k - 1], by_size[k])
        if check and prev_matrix is not None and mat and prev_matrix:
            if not _matmul_is_zero(mat, prev_matrix):
                raise AssertionError("boundary of boundary is nonzero")
        prev_matrix = mat
        rank_of[k] = rank_bareiss(mat) if p == 0 else rank_mod_p(mat, p)
    # reduced H_{k-1} lives on faces with k vertices
    return tuple(len(by_size[k]) - rank_of[k] - rank_of[k + 1] for k in range(top + 1))


def nerve(sets: Sequence[int]) -> SimplicialComplex:
    """Nerve of a family of nonempty vertex sets: index sets with a common vertex."""
    m = len(sets)
    if m > MAX_VERTICES:
        raise ValueError("nerve has too many vertices")
    faces: list[int] = []

    def grow(face: int, common: int, start: int) -> None:
        extended = False
        for i in range(start, m):
            inter = common & sets[i]
            if inter:
                extended = True
                grow(face | 1 << i, inter, i + 1)
        if not extended:
            faces.append(face)

    grow(0, -1, 0)
    return from_facets(m, faces)


def ranks_from_nonfaces(ground: int, nonfaces: Sequence[int], field: FieldSpec = QQ) -> list[int]:
    """Reduced homology ranks (dimensions -1..|ground|-1) of the complex on
    ``ground`` whose faces contain none of ``nonfaces``.

    When the ground is no larger than the family it is handled directly. Otherwise Alexander duality turns the
    question into the dual complex, whose facets are ``ground - N``; that
    complex is homotopy equivalent to the nerve of its facets, which has at
    most ``2^len(nonfaces)`` faces.
    """
    v = popcount(ground)
    out = [0] * (v + 1)
    if any(nf == 0 for nf in nonfaces):
        return out
    nonfaces = [nf for nf in set(nonfaces) if not any(o != nf and o & nf == o for o in nonfaces)]
    if not nonfaces:
        if ground == 0:
            out[0] = 1
        return out
    if ground in nonfaces:
        # the only minimal non-face is the whole ground: a sphere of dimension v - 2
        out[v - 1] = 1
        return out
    if v <= len(nonfaces):
        ranks = reduced_homology_ranks(from_nonfaces(64, ground, nonfaces), field)
        out[: len(ranks)] = ranks
        return out
    dual_ranks = reduced_homology_ranks(nerve([ground & ~nf for nf in nonfaces]), field)
    # H~_i(complex) = H~_{v-i-3}(dual); index k of ``out`` is dimension k - 1
    for k in range(v + 1):
        j = v - (k - 1) - 3
        if 0 <= j + 1 < len(dual_ranks):
            out[k] = dual_ranks[j + 1]
    return out


def euler_check(C: SimplicialComplex) -> bool:
    """Reduced Euler characteristic from faces equals the alternating rank sum."""
    if C.void:
        return True
    fv = C.f_vector()
    ranks = reduced_homology_ranks(C)
    lhs = sum((-1) ** (k - 1) * c for k, c in enumerate(fv))
    rhs = sum((-1) ** (k - 1) * r for k, r in enumerate(ranks))
    return lhs == rhs
