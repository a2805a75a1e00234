"""Exact rational feasibility test for Newton-polyhedron membership.

Decides whether a point ``a`` lies in ``conv(points) + R^n_{>=0}``, i.e. whether
there are weights ``w >= 0`` with ``sum(w) == 1`` and ``sum_i w_i * p_i <= a``.
Everything runs over :class:`fractions.Fraction`; no floating point is involved.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def in_newton_polyhedron(a: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    n = len(a)
    m = len(points)
    if m == 0:
        return False
    # Columns: weights w_0..w_{m-1}, slacks s_0..s_{n-1}, one artificial t.
    # Rows 0..n-1:  sum_i p_i[j] w_i + s_j = a_j     (basic: s_j)
    # Row n:        sum_i w_i + t = 1                (basic: t)
    ncols = m + n + 1
    art = m + n
    rows: list[list[Fraction]] = []
    for j in range(n):
        row = [Fraction(p[j]) for p in points] + [Fraction(0)] * (n + 1)
        row[m + j] = Fraction(1)
        row.append(Fraction(a[j]))
        rows.append(row)
    last = [Fraction(1)] * m + [Fraction(0)] * n + [Fraction(1), Fraction(1)]
    rows.append(last)
    basis = [m + j for j in range(n)] + [art]

    # Phase one: minimise t. Reduced costs of the objective "t" expressed in
    # the current basis are the negated last row (t is basic there).
    for _ in range(10_000):
        t_row = basis.index(art) if art in basis else None
        if t_row is None or rows[t_row][-1] == 0:
            return True
        # entering column: Bland's rule, any column with positive coefficient in t's row
        cost = rows[t_row]
        enter = next((c for c in range(ncols) if c != art and c not in basis and cost[c] > 0), None)
        if enter is None:
            return False
        leave = None
        best: Fraction | None = None
        for r, row in enumerate(rows):
            coef = row[enter]
            if coef > 0:
                ratio = row[-1] / coef
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        assert leave is not None  # t's own row always has a positive entry here
        _pivot(rows, leave, enter)
        basis[leave] = enter
    raise RuntimeError("simplex did not terminate")


def _pivot(rows: list[list[Fraction]], r: int, c: int) -> None:
    prow = rows[r]
    piv = prow[c]
    if piv != 1:
        prow[:] = [v / piv for v in prow]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                row[:] = [v - f * pv for v, pv in zip(row, prow)]
