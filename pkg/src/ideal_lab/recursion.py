"""Depth and regularity by splitting on a variable.

With ``d_colon, r_colon`` the invariants of ``R/(I:x)`` and ``d_sum, r_sum``
those of ``R/(I,x)``:

* depth: the answer is one of ``d_colon, d_sum``. Equal values settle it
  (``DEPTH-DHS``); ``d_sum > d_colon`` forces ``d_colon`` (``DEPTH-TIE``);
  otherwise the candidates are genuinely ambiguous and the degree-complex
  oracle decides.
* reg: ``r_colon + 1`` when ``r_colon > r_sum``, ``r_sum`` when
  ``r_colon < r_sum``; on a tie the oracle decides between ``r_sum`` and
  ``r_sum + 1``.

Ideals generated by variables are the base case: ``depth = n - #gens``,
``reg = 0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

from ideal_lab.ideal import MonomialIdeal, colon, format_ideal, lcm_degree, height, sum_with_monomial, variable
from ideal_lab.scomplex import QQ, FieldSpec
from ideal_lab.takayama import InvariantWitness, invariants


class Rule(str, enum.Enum):
    BASE = "BASE"
    DEPTH_DHS = "DEPTH-DHS"
    DEPTH_TIE = "DEPTH-TIE"
    REG_COLON = "REG-COLON"
    REG_SUM = "REG-SUM"
    REG_TIE_ORACLE = "REG-TIE-ORACLE"
    DEPTH_AMBIG_ORACLE = "DEPTH-AMBIG-ORACLE"


class RecursionContradiction(AssertionError):
    """A split contradicted the recursive formulas (an internal error)."""


@dataclass
class TraceNode:
    ideal: MonomialIdeal
    var: int | None
    rule: Rule
    value: int
    colon_value: int | None = None
    sum_value: int | None = None
    children: tuple[tuple, ...] = ()
    witness: InvariantWitness | None = None

    def as_dict(self) -> dict:
        out = {
            "ideal": format_ideal(self.ideal),
            "var": None if self.var is None else self.var + 1,
            "rule": self.rule.value,
            "value": self.value,
        }
        if self.var is not None:
            out["colon_value"] = self.colon_value
            out["sum_value"] = self.sum_value
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


@dataclass
class RecursionTrace:
    """Nodes in post-order; each ideal appears once (shared subproblems are memoised)."""

    nodes: list[TraceNode] = dc_field(default_factory=list)

    @property
    def root(self) -> TraceNode:
        return self.nodes[-1]

    def count(self, rule: Rule) -> int:
        return sum(1 for node in self.nodes if node.rule is rule)

    def as_dict(self) -> dict:
        return {"nodes": [n.as_dict() for n in self.nodes]}


def is_variable_ideal(I: MonomialIdeal) -> bool:
    return all(sum(g) == 1 for g in I.gens)


def split_variable(I: MonomialIdeal) -> int | None:
    """Variable with the largest total exponent among non-linear generators (lowest index on ties)."""
    weights = [0] * I.n
    for g in I.gens:
        if sum(g) > 1:
            for j, e in enumerate(g):
                weights[j] += e
    best = max(range(I.n), key=lambda j: (weights[j], -j))
    return best if weights[best] > 0 else None


class _Engine:
    def __init__(self, field: FieldSpec, kind: str):
        self.field = field
        self.kind = kind
        self.memo: dict[tuple, TraceNode] = {}
        self.order: list[TraceNode] = []

    def solve(self, I: MonomialIdeal) -> TraceNode:
        key = (I.key(), self.field)
        node = self.memo.get(key)
        if node is not None:
            return node
        x = split_variable(I)
        if x is None:
            value = I.n - len(I.gens) if self.kind == "depth" else 0
            node = TraceNode(I, None, Rule.BASE, value)
        else:
            xm = variable(x, I.n)
            c = self.solve(colon(I, xm))
            s = self.solve(sum_with_monomial(I, xm))
            node = self._combine(I, x, c, s)
        self.memo[key] = node
        self.order.append(node)
        return node

    def _combine(self, I: MonomialIdeal, x: int, c: TraceNode, s: TraceNode) -> TraceNode:
        kids = (c.ideal.key(), s.ideal.key())
        if self.kind == "depth":
            if s.value >= c.value:
                rule = Rule.DEPTH_DHS if s.value == c.value else Rule.DEPTH_TIE
                return TraceNode(I, x, rule, c.value, c.value, s.value, kids)
            rep = invariants(I, self.field)
            if rep.depth not in (c.value, s.value):
                raise RecursionContradiction(f"depth {rep.depth} of {I} is neither branch value {c.value}, {s.value}")
            return TraceNode(I, x, Rule.DEPTH_AMBIG_ORACLE, rep.depth, c.value, s.value, kids, rep.depth_witness)
        if c.value > s.value:
            return TraceNode(I, x, Rule.REG_COLON, c.value + 1, c.value, s.value, kids)
        if c.value < s.value:
            return TraceNode(I, x, Rule.REG_SUM, s.value, c.value, s.value, kids)
        rep = invariants(I, self.field)
        if rep.reg not in (s.value, s.value + 1):
            raise RecursionContradiction(f"reg {rep.reg} of {I} violates the tie case around {s.value}")
        return TraceNode(I, x, Rule.REG_TIE_ORACLE, rep.reg, c.value, s.value, kids, rep.reg_witness)


def _run(I: MonomialIdeal, field: FieldSpec, kind: str) -> tuple[int, RecursionTrace]:
    if not I.is_proper_nonzero:
        raise ValueError("expected a proper nonzero monomial ideal")
    engine = _Engine(field, kind)
    root = engine.solve(I)
    return root.value, RecursionTrace(engine.order)


def depth_recursive(I: MonomialIdeal, field: FieldSpec = QQ) -> tuple[int, RecursionTrace]:
    return _run(I, field, "depth")


def reg_recursive(I: MonomialIdeal, field: FieldSpec = QQ) -> tuple[int, RecursionTrace]:
    return _run(I, field, "reg")


def reg_ideal(J: MonomialIdeal, field: FieldSpec = QQ) -> int:
    """Regularity of the ideal itself (``reg R/J + 1``; the unit ideal has reg 0)."""
    if J.is_unit:
        return 0
    return reg_recursive(J, field)[0] + 1


def reg_upper_bounds(I: MonomialIdeal, field: FieldSpec = QQ) -> tuple[int, int]:
    """Two upper bounds for ``reg I`` (the ideal, not the quotient).

    The first is ``deg lcm(I) - height(I) + 1``; the second is one more than
    the largest ``reg(I : x)`` over the variables in the support of ``I``.
    """
    ht_bound = lcm_degree(I) - height(I) + 1
    supp = I.support()
    inductive = 1 + max(reg_ideal(colon(I, variable(j, I.n)), field) for j in range(I.n) if supp >> j & 1)
    return ht_bound, inductive
