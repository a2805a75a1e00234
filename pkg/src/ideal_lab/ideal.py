"""Exact arithmetic on monomial ideals.

Monomials are plain tuples of nonnegative exponents. A :class:`MonomialIdeal`
stores its minimal generators in graded-lexicographic order, so two ideals are
equal exactly when their dataclass fields are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ideal_lab._lp import in_newton_polyhedron
from ideal_lab.caps import CapError, current_caps

Monomial = tuple[int, ...]


def _order_key(m: Monomial) -> tuple:
    # graded, then lexicographic with x_1 > x_2 > ... (x before y within a degree)
    return (sum(m), tuple(-e for e in m))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def support(m: Monomial) -> int:
    """Bitmask of the variables occurring in ``m``."""
    mask = 0
    for j, e in enumerate(m):
        if e:
            mask |= 1 << j
    return mask


def variable(j: int, n: int, e: int = 1) -> Monomial:
    return tuple(e if i == j else 0 for i in range(n))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a monomial ideal needs at least one variable")

    @classmethod
    def from_gens(cls, gens: Iterable[Sequence[int]], n: int | None = None) -> "MonomialIdeal":
        gens = [tuple(int(e) for e in g) for g in gens]
        if n is None:
            if not gens:
                raise ValueError("cannot infer the variable count of the zero ideal")
            n = len(gens[0])
        return normalize(gens, n)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    @property
    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def max_exponents(self) -> tuple[int, ...]:
        """Componentwise maximum of the generator exponents (the lcm)."""
        if not self.gens:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*self.gens))

    def max_gen_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def support(self) -> int:
        mask = 0
        for g in self.gens:
            mask |= support(g)
        return mask

    def contains(self, m: Sequence[int]) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __contains__(self, m: Sequence[int]) -> bool:
        return self.contains(m)

    def key(self) -> tuple:
        return (self.n, self.gens)

    def __str__(self) -> str:
        return format_ideal(self)


def _check_caps(n: int, gens: Sequence[Monomial]) -> None:
    caps = current_caps()
    if n > caps.max_vars:
        raise CapError(f"{n} variables exceeds the cap of {caps.max_vars}")


def normalize(gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``, in canonical order."""
    cleaned: set[Monomial] = set()
    for g in gens:
        g = tuple(int(e) for e in g)
        if len(g) != n:
            raise ValueError(f"monomial {g} has length {len(g)}, expected {n}")
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
        cleaned.add(g)
    _check_caps(n, list(cleaned))
    minimal: list[Monomial] = []
    for g in sorted(cleaned, key=_order_key):
        if not any(divides(h, g) for h in minimal):
            minimal.append(g)
    return MonomialIdeal(n, tuple(minimal))


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def variables_ideal(n: int, mask: int) -> MonomialIdeal:
    return normalize((variable(j, n) for j in range(n) if mask >> j & 1), n)


def colon(I: MonomialIdeal, f: Sequence[int]) -> MonomialIdeal:
    """The ideal ``I : f = {h : h f in I}``."""
    f = tuple(f)
    if len(f) != I.n:
        raise ValueError("monomial length does not match the ideal")
    return normalize((tuple(max(b - e, 0) for b, e in zip(g, f)) for g in I.gens), I.n)


def sum_with_monomial(I: MonomialIdeal, f: Sequence[int]) -> MonomialIdeal:
    f = tuple(f)
    if len(f) != I.n:
        raise ValueError("monomial length does not match the ideal")
    return normalize(list(I.gens) + [f], I.n)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return normalize(I.gens + J.gens, I.n)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return normalize((mono_mul(a, b) for a in I.gens for b in J.gens), I.n)


def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    if t < 1:
        raise ValueError("power exponent must be positive")
    result = I
    for _ in range(t - 1):
        result = product(result, I)
    return result


def extend(I: MonomialIdeal, extra: int = 1) -> MonomialIdeal:
    """The same ideal in a ring with ``extra`` new variables appended."""
    return MonomialIdeal(I.n + extra, tuple(g + (0,) * extra for g in I.gens))


def lcm_degree(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise ValueError("the zero ideal has no lcm")
    return sum(I.max_exponents())


def _require_proper(I: MonomialIdeal) -> None:
    if not I.is_proper_nonzero:
        raise ValueError("expected a proper nonzero monomial ideal")


def minimal_primes(I: MonomialIdeal) -> list[int]:
    """Minimal primes as variable bitmasks (minimal transversals of the supports)."""
    _require_proper(I)
    supports = sorted({support(g) for g in I.gens})
    covers: list[int] = []
    # subsets in order of size, so every proper subset of a cover is seen first
    for size in range(1, I.n + 1):
        for combo in itertools.combinations(range(I.n), size):
            mask = sum(1 << j for j in combo)
            if any(c & mask == c for c in covers):
                continue
            if all(s & mask for s in supports):
                covers.append(mask)
    return covers


def height(I: MonomialIdeal) -> int:
    _require_proper(I)
    supports = {support(g) for g in I.gens}
    for size in range(1, I.n + 1):
        for combo in itertools.combinations(range(I.n), size):
            mask = sum(1 << j for j in combo)
            if all(s & mask for s in supports):
                return size
    raise AssertionError("unreachable: the full variable set is a cover")


def dimension(I: MonomialIdeal) -> int:
    return I.n - height(I)


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """Squarefree polarization and the number of variables it adds.

    Variable ``x_j`` with maximal exponent ``d_j`` becomes ``d_j`` consecutive
    slots (``max(d_j, 1)`` so absent variables keep one slot).
    """
    _require_proper(I)
    d = I.max_exponents()
    widths = [max(e, 1) for e in d]
    offsets = list(itertools.accumulate([0] + widths[:-1]))
    total = sum(widths)
    gens = []
    for g in I.gens:
        row = [0] * total
        for j, e in enumerate(g):
            for s in range(e):
                row[offsets[j] + s] = 1
        gens.append(row)
    return normalize(gens, total), total - I.n


def _subset_minima(points: Sequence[Monomial], n: int) -> list[int]:
    minima = []
    for mask in range(1 << n):
        idx = [j for j in range(n) if mask >> j & 1]
        minima.append(min(sum(p[j] for j in idx) for p in points))
    return minima


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Integral closure: lattice points of the Newton polyhedron of ``I``.

    The box below the lcm is scanned by total degree; a point already divisible
    by a known closure element is skipped, otherwise exact LP feasibility decides.
    """
    _require_proper(I)
    n = I.n
    d = I.max_exponents()
    box = 1
    for e in d:
        box *= e + 1
    if box > current_caps().max_box:
        raise CapError(f"closure box of {box} points exceeds the cap")
    points = list(I.gens)
    # necessary condition: every subset-sum functional must dominate its minimum
    minima = _subset_minima(points, n) if n <= 12 else None
    found: list[Monomial] = list(points)
    candidates = sorted(itertools.product(*(range(e + 1) for e in d)), key=_order_key)
    for a in candidates:
        if any(divides(g, a) for g in found):
            continue
        if minima is not None and not _passes_subset_test(a, minima, n):
            continue
        if in_newton_polyhedron(a, points):
            found.append(a)
    return normalize(found, n)


def _passes_subset_test(a: Monomial, minima: list[int], n: int) -> bool:
    for mask in range(1, 1 << n):
        s = 0
        for j in range(n):
            if mask >> j & 1:
                s += a[j]
        if s < minima[mask]:
            return False
    return True


def in_integral_closure(I: MonomialIdeal, m: Sequence[int]) -> bool:
    return I.contains(m) or in_newton_polyhedron(tuple(m), I.gens)


def _witness_values(col: np.ndarray, d: int) -> list[int]:
    # colon patterns in one coordinate only change at g_j - 1 and g_j
    vals = {0}
    for g in col.tolist():
        for v in (g - 1, g):
            if 0 <= v <= d:
                vals.add(v)
    return sorted(vals)


def associated_primes(I: MonomialIdeal) -> list[int]:
    """Associated primes as sorted variable bitmasks.

    A prime ``P_S`` is associated when ``I : w = P_S`` for a monomial ``w``
    with ``0 <= w_j <= d_j``. Within one coordinate the colon ideal only
    depends on where ``w_j`` sits relative to ``g_j - 1`` and ``g_j``, so one
    representative per interval is enumerated.
    """
    _require_proper(I)
    n = I.n
    G = np.array(I.gens, dtype=np.int64)
    d = I.max_exponents()
    values = [_witness_values(G[:, j], d[j]) for j in range(n)]
    total = 1
    for v in values:
        total *= len(v)
    if total > current_caps().max_box:
        raise CapError(f"witness box of {total} points exceeds the cap")
    found: set[int] = set()
    for W in _grid_chunks(values):
        residual = np.maximum(G[None, :, :] - W[:, None, :], 0)  # (P, m, n)
        pos = residual > 0
        bits = (pos.astype(np.int64) << np.arange(n, dtype=np.int64)).sum(axis=2)  # (P, m)
        in_ideal = (bits == 0).any(axis=1)
        # x_j in I:w  <=>  some residual is exactly x_j
        single = (residual.sum(axis=2) == 1)
        s_mask = np.where(single, bits, 0)
        S = np.bitwise_or.reduce(s_mask, axis=1)
        meets = ((bits & S[:, None]) != 0).all(axis=1)
        ok = ~in_ideal & (S != 0) & meets
        found.update(int(s) for s in np.unique(S[ok]))
    return sorted(found, key=lambda s: (bin(s).count("1"), s))


def _grid_chunks(values: Sequence[Sequence[int]], chunk: int = 1 << 15):
    """Yield the Cartesian product of ``values`` as int64 arrays of rows."""
    sizes = [len(v) for v in values]
    arrays = [np.asarray(v, dtype=np.int64) for v in values]
    total = int(np.prod(sizes)) if sizes else 1
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cols = []
        for size, arr in zip(reversed(sizes), reversed(arrays)):
            cols.append(arr[idx % size])
            idx = idx // size
        yield np.stack(cols[::-1], axis=1)


def format_monomial(m: Sequence[int], names: Sequence[str] | None = None) -> str:
    if names is None:
        names = [f"x{j + 1}" for j in range(len(m))]
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    return "(" + ", ".join(format_monomial(g, names) for g in I.gens) + ")"
