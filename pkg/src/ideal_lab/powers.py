"""Depth and regularity along powers, and the identities behind their monotonicity."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ideal_lab.hypergraph import Hypergraph, edge_ideal, edge_monomial, good_leaf
from ideal_lab.ideal import (
    MonomialIdeal,
    associated_primes,
    colon,
    extend,
    integral_closure,
    power,
    sum_with_monomial,
    variable,
)
from ideal_lab.scomplex import QQ, FieldSpec
from ideal_lab.takayama import invariants


@dataclass(frozen=True)
class PowersRow:
    t: int
    depth: int
    reg: int
    closure_depth: int | None = None
    closure_reg: int | None = None

    def as_dict(self) -> dict:
        out = {"t": self.t, "depth": self.depth, "reg": self.reg}
        if self.closure_depth is not None:
            out["closure_depth"] = self.closure_depth
            out["closure_reg"] = self.closure_reg
        return out


def powers_table(I: MonomialIdeal, max_t: int, closure: bool = False, field: FieldSpec = QQ) -> list[PowersRow]:
    if max_t < 1:
        raise ValueError("max_t must be at least 1")
    rows = []
    for t in range(1, max_t + 1):
        It = power(I, t)
        rep = invariants(It, field)
        if closure:
            crep = invariants(integral_closure(It), field)
            rows.append(PowersRow(t, rep.depth, rep.reg, crep.depth, crep.reg))
        else:
            rows.append(PowersRow(t, rep.depth, rep.reg))
    return rows


def is_monotone(rows: list[PowersRow]) -> bool:
    """Depth non-increasing and reg non-decreasing in ``t`` (closure columns too, when present)."""
    pairs = list(zip(rows, rows[1:]))
    ok = all(b.depth <= a.depth and b.reg >= a.reg for a, b in pairs)
    if rows and rows[0].closure_depth is not None:
        ok = ok and all(b.closure_depth <= a.closure_depth and b.closure_reg >= a.closure_reg for a, b in pairs)
    return ok


@dataclass
class CheckReport:
    """Named boolean checks, in insertion order, with optional context."""

    checks: dict[str, bool] = dc_field(default_factory=dict)
    info: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def as_dict(self) -> dict:
        return {"ok": self.ok, "checks": dict(self.checks), **self.info}


def good_leaf_colon_check(H: Hypergraph, max_t: int, field: FieldSpec = QQ, monotone: bool = True) -> CheckReport:
    """``I^{t+1} : f = I^t`` and its integral-closure analogue for a good leaf ``f``.

    With ``monotone`` set the powers table (with closures) is also checked
    for non-increasing depth and non-decreasing reg.
    """
    F = good_leaf(H)
    if F is None:
        raise ValueError("the hypergraph has no good leaf")
    I = edge_ideal(H)
    f = edge_monomial(H, F)
    report = CheckReport(info={"leaf": H.edge_names(F)})
    powers = [None] + [power(I, t) for t in range(1, max_t + 1)]
    closures = [None] + [integral_closure(P) for P in powers[1:]]
    for t in range(1, max_t):
        report.checks[f"colon t={t}"] = colon(powers[t + 1], f) == powers[t]
        report.checks[f"closure colon t={t}"] = colon(closures[t + 1], f) == closures[t]
    if monotone:
        rows = []
        for t in range(1, max_t + 1):
            rep = invariants(powers[t], field)
            crep = invariants(closures[t], field)
            rows.append(PowersRow(t, rep.depth, rep.reg, crep.depth, crep.reg))
        report.checks["monotone"] = is_monotone(rows)
        report.info["rows"] = [r.as_dict() for r in rows]
    return report


def added_variable_powers(I: MonomialIdeal, s: int, field: FieldSpec = QQ) -> CheckReport:
    """Compare ``(I, z)^s`` in ``R[z]`` with the powers ``I^t``, ``1 <= t <= s``.

    As an ``R``-module ``S/(I,z)^s`` is the sum of ``(R/I^t)(-(s-t))`` over
    ``t = 1..s``, so its depth is the least depth of ``R/I^t`` and ``reg - s``
    is the largest ``reg R/I^t - t``. No free summand occurs: ``z^s`` already
    lies in ``(I,z)^s``.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    n = I.n
    depths = []
    regs = []
    for t in range(1, s + 1):
        rep = invariants(power(I, t), field)
        depths.append(rep.depth)
        regs.append(rep.reg - t)
    J = power(sum_with_monomial(extend(I), variable(n, n + 1)), s)
    rep = invariants(J, field)
    report = CheckReport(info={"s": s, "depth": rep.depth, "reg": rep.reg})
    report.checks["depth"] = rep.depth == min(depths)
    report.checks["reg"] = rep.reg - s == max(regs)
    return report


def added_variable_monotone(I: MonomialIdeal, max_t: int, field: FieldSpec = QQ) -> CheckReport:
    """``depth S/(I,z)^t`` non-increasing and ``reg S/(I,z)^t - t`` non-decreasing."""
    J = sum_with_monomial(extend(I), variable(I.n, I.n + 1))
    rows = [invariants(power(J, t), field) for t in range(1, max_t + 1)]
    report = CheckReport(info={"rows": [{"t": t, "depth": r.depth, "reg": r.reg} for t, r in enumerate(rows, 1)]})
    report.checks["depth"] = all(b.depth <= a.depth for a, b in zip(rows, rows[1:]))
    report.checks["reg - t"] = all(b.reg - (t + 1) >= a.reg - t for t, (a, b) in enumerate(zip(rows, rows[1:]), 1))
    return report


def ass_chain_check(I: MonomialIdeal, s: int) -> CheckReport:
    """``Ass (I,z)^t`` is contained in ``Ass (I,z)^{t+1}`` for ``t < s``."""
    J = sum_with_monomial(extend(I), variable(I.n, I.n + 1))
    ass = [set(associated_primes(power(J, t))) for t in range(1, s + 1)]
    report = CheckReport(info={"ass_sizes": [len(a) for a in ass]})
    for t in range(1, s):
        report.checks[f"t={t}"] = ass[t - 1] <= ass[t]
    return report
