"""Depth and regularity of ``R/I`` from degree complexes.

For a degree ``a`` with negative support ``G``, a face ``F`` (``G`` subset of
``F``) lies in the degree complex exactly when no generator ``x^b`` satisfies
``b_j <= a_j`` for all ``j`` outside ``F``. Writing ``N_b = {j : b_j > a_j}``
(which always contains ``G``), the complex is the one on ``[n] - G`` whose
minimal non-faces are the sets ``N_b - G``. Then

    depth R/I = min |G| + i,        reg R/I = max |a| + |G| + i

over degrees with ``H~_{i-1}(complex) != 0``.

Degrees are enumerated in the box ``a_j in {-1, 0, ..., d_j - 1}``: the
complex only sees negative entries through ``G``, and for ``a_j >= d_j`` the
vertex ``j`` lies in no non-face, so the complex is a cone. Inside that box
the complex depends on ``a_j`` only through which generator exponents exceed
it, so by default one representative per such interval is scanned (the top of
the interval, which also maximises ``|a|``).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

import numpy as np

from ideal_lab.caps import CapError, current_caps
from ideal_lab.ideal import MonomialIdeal
from ideal_lab.scomplex import (
    QQ,
    FieldSpec,
    SimplicialComplex,
    from_facets,
    popcount,
    ranks_from_nonfaces,
)

ORACLE = "takayama"
# generator masks must fit in an int64
_MASK_LIMIT = 62


@dataclass(frozen=True)
class InvariantWitness:
    a: tuple[int, ...]
    i: int
    value: int

    @property
    def g_size(self) -> int:
        return sum(1 for e in self.a if e < 0)

    def as_dict(self) -> dict:
        return {"a": list(self.a), "i": self.i, "G_size": self.g_size, "value": self.value}


@dataclass(frozen=True)
class InvariantReport:
    depth: int
    reg: int
    field: FieldSpec = QQ
    engine: str = ORACLE
    depth_witness: InvariantWitness | None = None
    reg_witness: InvariantWitness | None = None
    extra: dict = dc_field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        out = {"depth": self.depth, "reg": self.reg, "field": str(self.field), "engine": self.engine}
        if self.depth_witness is not None:
            out["depth_witness"] = self.depth_witness.as_dict()
        if self.reg_witness is not None:
            out["reg_witness"] = self.reg_witness.as_dict()
        out.update(self.extra)
        return out


def _require(I: MonomialIdeal) -> None:
    if not I.is_proper_nonzero:
        raise ValueError("invariants need a proper nonzero monomial ideal")
    caps = current_caps()
    if I.n > caps.max_vars:
        raise CapError(f"{I.n} variables exceeds the cap of {caps.max_vars}")
    if max(I.max_exponents()) > caps.max_exponent:
        raise CapError(f"an exponent above {caps.max_exponent} exceeds the cap")


def degree_complex(I: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    """The degree complex of ``I`` at ``a``, straight from the definition."""
    if not I.is_proper_nonzero:
        raise ValueError("degree complexes need a proper nonzero ideal")
    n = I.n
    a = tuple(a)
    if len(a) != n:
        raise ValueError("degree vector length does not match the ideal")
    G = sum(1 << j for j in range(n) if a[j] < 0)
    rest = ((1 << n) - 1) & ~G
    faces = []
    sub = rest
    while True:
        F = sub | G
        # x^a in I R_F  <=>  some generator is dominated by a outside F
        member = any(all(g[j] <= a[j] for j in range(n) if not F >> j & 1) for g in I.gens)
        if not member:
            faces.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & rest
    if not faces:
        return SimplicialComplex(n, (), True)
    return from_facets(n, faces)


def _minimal_sets(masks: Sequence[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda s: (popcount(s), s))
    out: list[int] = []
    for m in uniq:
        if not any(o & m == o for o in out):
            out.append(m)
    return tuple(out)


def _nonvanishing(ground: int, nonfaces: Sequence[int], p: int) -> tuple[int, ...]:
    """Indices ``i`` with ``H~_{i-1} != 0`` for the complex given by minimal non-faces."""
    # relabel the ground as 0..v-1 so that shifted copies share a cache entry
    bits = [j for j in range(ground.bit_length()) if ground >> j & 1]
    packed = tuple(sorted(sum(1 << k for k, j in enumerate(bits) if nf >> j & 1) for nf in nonfaces))
    return _nonvanishing_packed(len(bits), packed, p)


@lru_cache(maxsize=1 << 18)
def _nonvanishing_packed(v: int, nonfaces: tuple[int, ...], p: int) -> tuple[int, ...]:
    ranks = ranks_from_nonfaces((1 << v) - 1, nonfaces, FieldSpec(p))
    return tuple(i for i, r in enumerate(ranks) if r)


def box_values(I: MonomialIdeal, mode: str = "compressed") -> tuple[list[list[int]], list[dict[int, int]]]:
    """Per-coordinate degree values to scan, plus a map to the low end of each interval.

    ``mode`` is ``compressed`` (one value per comparison pattern), ``full``
    (every value of the canonical box) or ``enlarged`` (full box with ``-2``
    added and every nonnegative cap raised by one).
    """
    values: list[list[int]] = []
    lows: list[dict[int, int]] = []
    for j in range(I.n):
        col = sorted({0} | {g[j] for g in I.gens})
        if col[-1] == 0:
            col.append(1)
        d = col[-1]
        low: dict[int, int] = {-1: -1}
        if mode == "compressed":
            vals = [-1]
            for lo, hi in zip(col, col[1:]):
                vals.append(hi - 1)
                low[hi - 1] = lo
        elif mode == "full":
            vals = list(range(-1, d))
        elif mode == "enlarged":
            vals = list(range(-2, d + 1))
            low[-2] = -2
        else:
            raise ValueError(f"unknown box mode {mode!r}")
        if mode != "compressed":
            for lo, hi in zip(col, col[1:]):
                for v in range(lo, hi):
                    low[v] = lo
            low.setdefault(d, d)
        values.append(vals)
        lows.append(low)
    return values, lows


def _grid(values: Sequence[Sequence[int]], start: int, stop: int) -> np.ndarray:
    sizes = [len(v) for v in values]
    idx = np.arange(start, stop, dtype=np.int64)
    cols = []
    for size, vals in zip(reversed(sizes), reversed(values)):
        cols.append(np.asarray(vals, dtype=np.int64)[idx % size])
        idx //= size
    return np.stack(cols[::-1], axis=1)


def _scan(I: MonomialIdeal, field: FieldSpec, mode: str, chunk: int = 1 << 14) -> InvariantReport:
    _require(I)
    n = I.n
    values, lows = box_values(I, mode)
    total = 1
    for v in values:
        total *= len(v)
    if total > current_caps().max_box:
        raise CapError(f"degree box of {total} points exceeds the cap of {current_caps().max_box}")
    B = np.array(I.gens, dtype=np.int64)  # (m, n)
    p = field.characteristic
    # low end of each value's comparison interval, indexed by value + 2
    top = max(max(vals) for vals in values)
    low_table = np.array([[lows[j].get(v, v) for v in range(-2, top + 1)] for j in range(n)], dtype=np.int64)
    chunk_values = _chunk_by_masks if B.shape[0] <= _MASK_LIMIT else _chunk_by_nonfaces

    best_depth: tuple | None = None  # (value, a_low, i)
    best_reg: tuple | None = None  # (-value, a, i)
    for start in range(0, total, chunk):
        A = _grid(values, start, min(start + chunk, total))
        found = chunk_values(A, B, p)
        if found is None:
            continue
        A, dvals, rvals = found
        gsz = (A < 0).sum(axis=1)
        best_depth = _better(best_depth, dvals, low_table[np.arange(n), A + 2], dvals - gsz, False)
        best_reg = _better(best_reg, rvals, A, rvals - A.sum(axis=1) - gsz, True)
    if best_depth is None or best_reg is None:
        raise AssertionError("no nonvanishing local cohomology found; the degree box is too small")
    dw = InvariantWitness(best_depth[1], best_depth[2], best_depth[0])
    rw = InvariantWitness(best_reg[1], best_reg[2], -best_reg[0])
    return InvariantReport(dw.value, rw.value, field, ORACLE, dw, rw)


def _chunk_by_masks(A: np.ndarray, B: np.ndarray, p: int):
    """Depth and reg candidates for the degrees ``A`` that carry homology.

    Each ground vertex ``j`` gets the mask of generators whose non-face
    contains it; the homology only depends on the set of distinct masks.
    """
    n = A.shape[1]
    m = B.shape[0]
    bits = np.int64(1) << np.arange(m, dtype=np.int64)
    neg = A < 0
    vm = ((B[None, :, :] > A[:, None, :]).astype(np.int64) * bits[None, :, None]).sum(axis=1)
    vm[neg] = 0
    void = np.bitwise_or.reduce(vm, axis=1) != (1 << m) - 1
    cone = ((vm == 0) & ~neg).any(axis=1)
    keep = ~void & ~cone
    if not keep.any():
        return None
    A = A[keep]
    vm = np.sort(vm[keep], axis=1)
    vm[:, 1:][vm[:, 1:] == vm[:, :-1]] = 0
    vm = np.sort(vm, axis=1)
    keys, inverse = _unique_rows(vm)
    lo = np.full(len(keys), -1, dtype=np.int64)
    hi = np.full(len(keys), -1, dtype=np.int64)
    for u, row in enumerate(keys.tolist()):
        nz = _nonvanishing_masks(tuple(x for x in row if x), m, p)
        if nz:
            lo[u], hi[u] = nz[0], nz[-1]
    has = hi[inverse] >= 0
    if not has.any():
        return None
    A = A[has]
    u = inverse[has]
    reduced = (keys[u] != 0).sum(axis=1)
    # |G| + i, where i = i' + (v - |M|) is shifted from the reduced instance
    dvals = n - reduced + lo[u]
    rvals = A.sum(axis=1) + n - reduced + hi[u]
    return A, dvals, rvals


def _chunk_by_nonfaces(A: np.ndarray, B: np.ndarray, p: int):
    """Same as :func:`_chunk_by_masks`, keyed by ``(G, non-faces)`` for many generators."""
    n = A.shape[1]
    full = (1 << n) - 1
    G = ((A < 0).astype(np.int64) << np.arange(n, dtype=np.int64)).sum(axis=1)
    masks = np.zeros((A.shape[0], B.shape[0]), dtype=np.int64)
    for j in range(n):
        masks |= (B[None, :, j] > A[:, j, None]).astype(np.int64) << j
    nf = masks & ~G[:, None]
    void = (nf == 0).any(axis=1)
    union = np.bitwise_or.reduce(nf, axis=1)
    keep = ~void & (union == (full & ~G))
    if not keep.any():
        return None
    A = A[keep]
    G = G[keep]
    keys, inverse = _unique_rows(np.concatenate([G[:, None], np.sort(nf[keep], axis=1)], axis=1))
    lo = np.full(len(keys), -1, dtype=np.int64)
    hi = np.full(len(keys), -1, dtype=np.int64)
    for u, row in enumerate(keys.tolist()):
        nz = _nonvanishing(full & ~row[0], _minimal_sets(row[1:]), p)
        if nz:
            lo[u], hi[u] = nz[0], nz[-1]
    has = hi[inverse] >= 0
    if not has.any():
        return None
    A = A[has]
    u = inverse[has]
    gsz = (A < 0).sum(axis=1)
    return A, gsz + lo[u], A.sum(axis=1) + gsz + hi[u]


_HASH = np.random.default_rng(0x5EED).integers(1, 1 << 62, size=64, dtype=np.uint64) | np.uint64(1)


def _unique_rows(rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``np.unique(rows, axis=0, return_inverse=True)`` through a 1-d hash.

    Row-wise unique sorts structured records and dominates the scan; hashing
    first is exact because every row is compared against its representative.
    """
    h = (rows.astype(np.uint64) * _HASH[: rows.shape[1]]).sum(axis=1, dtype=np.uint64)
    _, first, inverse = np.unique(h, return_index=True, return_inverse=True)
    keys = rows[first]
    inverse = np.asarray(inverse).reshape(-1)
    if not (keys[inverse] == rows).all():
        keys, inverse = np.unique(rows, axis=0, return_inverse=True)
        inverse = np.asarray(inverse).reshape(-1)
    return keys, inverse


def _better(best: tuple | None, vals: np.ndarray, a: np.ndarray, i: np.ndarray, maximise: bool) -> tuple:
    """Fold a chunk into the running optimum; ties go to the smallest ``(a, i)``."""
    target = int(vals.max() if maximise else vals.min())
    rows = np.flatnonzero(vals == target)
    cand_a, cand_i = a[rows], i[rows]
    order = np.lexsort((cand_i,) + tuple(cand_a[:, j] for j in range(a.shape[1] - 1, -1, -1)))
    r = order[0]
    cand = (-target if maximise else target, tuple(int(x) for x in cand_a[r]), int(cand_i[r]))
    return cand if best is None or cand < best else best


@lru_cache(maxsize=1 << 18)
def _nonvanishing_masks(masks: tuple[int, ...], m: int, p: int) -> tuple[int, ...]:
    """Nonvanishing indices for the reduced instance with one vertex per distinct mask.

    Vertex ``k`` lies in the non-face of generator ``g`` iff bit ``g`` of
    ``masks[k]`` is set. Through Alexander duality and the nerve lemma the
    homology depends only on the set of masks; duplicating a vertex shifts
    every index by one.
    """
    nonfaces = [sum(1 << k for k, mk in enumerate(masks) if mk >> g & 1) for g in range(m)]
    return _nonvanishing_packed(len(masks), tuple(sorted(_minimal_sets(nonfaces))), p)


def invariants(I: MonomialIdeal, field: FieldSpec = QQ, mode: str = "compressed") -> InvariantReport:
    """Depth and regularity of ``R/I`` with minimising/maximising witnesses."""
    return _cached_invariants(I, field, mode)


@lru_cache(maxsize=4096)
def _cached_invariants(I: MonomialIdeal, field: FieldSpec, mode: str) -> InvariantReport:
    return _scan(I, field, mode)


def depth_oracle(I: MonomialIdeal, field: FieldSpec = QQ) -> tuple[int, InvariantWitness]:
    rep = invariants(I, field)
    return rep.depth, rep.depth_witness


def reg_oracle(I: MonomialIdeal, field: FieldSpec = QQ) -> tuple[int, InvariantWitness]:
    rep = invariants(I, field)
    return rep.reg, rep.reg_witness
