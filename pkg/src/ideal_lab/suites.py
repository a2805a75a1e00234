"""Property suites run by ``ideal-lab verify`` and by the acceptance tests.

A suite draws its instances from :mod:`ideal_lab.corpus`, checks one
statement on each, and collects failing instances. The reported
counterexample is the smallest failure (fewest variables, then generators,
then total degree).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Callable

import numpy as np

from ideal_lab.caps import raised_caps
from ideal_lab.corpus import (
    IDEAL_PARAMS,
    ideal_corpus,
    random_claw_gap_free,
    random_graph,
    random_leaf_hypergraph,
    random_monomial_outside,
    reg3_corpus,
    rng_for,
    split_variables,
)
from ideal_lab.hypergraph import (
    Cover,
    Hypergraph,
    complement,
    cover_classification,
    edge_ideal,
    favaron_checks,
    is_chordal,
    is_cohen_macaulay,
    perfect_matchings,
    twin_pairs,
)
from ideal_lab.ideal import (
    MonomialIdeal,
    colon,
    format_ideal,
    format_monomial,
    height,
    lcm_degree,
    polarize,
    sum_with_monomial,
    variable,
)
from ideal_lab.powers import added_variable_monotone, added_variable_powers, ass_chain_check, good_leaf_colon_check
from ideal_lab.recursion import Rule, depth_recursive, reg_recursive, reg_upper_bounds
from ideal_lab.scomplex import QQ, FieldSpec
from ideal_lab.takayama import invariants


@dataclass
class SuiteResult:
    suite: str
    statement: str
    params: dict
    cases: int = 0
    checks: int = 0
    skipped: int = 0
    failures: list[dict] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, size: tuple, **details) -> None:
        self.failures.append({"size": list(size), **details})

    def as_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "theorem": self.statement,
            "params": self.params,
            "cases": self.cases,
            "checks": self.checks,
            "skipped": self.skipped,
            "failures": len(self.failures),
            "ok": self.ok,
        }
        if self.failures:
            out["counterexample"] = min(self.failures, key=lambda f: f["size"])
        return out


def _size(I: MonomialIdeal) -> tuple:
    return (I.n, len(I.gens), sum(map(sum, I.gens)))


def _hsize(H: Hypergraph) -> tuple:
    return (H.n, len(H.edges), sum(bin(e).count("1") for e in H.edges))


@lru_cache(maxsize=32)
def _corpus(seed: int, count: int) -> tuple[MonomialIdeal, ...]:
    return tuple(ideal_corpus(seed, count))


def _x(I: MonomialIdeal, j: int) -> tuple[int, ...]:
    return variable(j, I.n)


def _aux_rng(seed: int) -> np.random.Generator:
    # a second stream, independent of the corpus stream, for auxiliary draws
    return np.random.Generator(np.random.PCG64([seed, 1]))


# ---------------------------------------------------------------------------
# suites over the random ideal corpus


def _split_suite(name: str, statement: str, check: Callable) -> Callable:
    """Suite that checks ``check(I, x, field)`` for the split variables of each corpus ideal."""

    def run(cases: int, seed: int, field: FieldSpec = QQ) -> SuiteResult:
        res = SuiteResult(name, statement, {"seed": seed, "cases": cases, "field": str(field),
                                            "generator": IDEAL_PARAMS, "variables": "3 of largest total exponent"})
        for I in _corpus(seed, cases):
            res.cases += 1
            for j in split_variables(I):
                res.checks += 1
                problem = check(I, j, field)
                if problem:
                    res.fail(_size(I), ideal=format_ideal(I), variable=f"x{j + 1}", **problem)
        return res

    run.__name__ = name
    return run


def _branches(I: MonomialIdeal, j: int, field: FieldSpec):
    return invariants(I, field), invariants(colon(I, _x(I, j)), field), invariants(sum_with_monomial(I, _x(I, j)), field)


def _dhs_depth(I, j, field):
    r, c, s = _branches(I, j, field)
    if r.depth not in (c.depth, s.depth):
        return {"depth": r.depth, "colon_depth": c.depth, "sum_depth": s.depth}
    return None


def _dhs_reg(I, j, field):
    r, c, s = _branches(I, j, field)
    if r.reg not in (c.reg + 1, s.reg):
        return {"reg": r.reg, "colon_reg": c.reg, "sum_reg": s.reg}
    return None


def _precise(I, j, field):
    r, c, s = _branches(I, j, field)
    if c.reg > s.reg:
        ok = r.reg == c.reg + 1
    elif c.reg < s.reg:
        ok = r.reg == s.reg
    else:
        ok = r.reg in (s.reg, s.reg + 1)
    return None if ok else {"reg": r.reg, "colon_reg": c.reg, "sum_reg": s.reg}


def _bounds(I, j, field):
    # ideal form shifted to quotients: max(rc, rs) <= r <= max(rc + 1, rs)
    r, c, s = _branches(I, j, field)
    if not max(c.reg, s.reg) <= r.reg <= max(c.reg + 1, s.reg):
        return {"reg": r.reg, "colon_reg": c.reg, "sum_reg": s.reg}
    return None


dhs_depth = _split_suite("dhs-depth", "depth R/I lies in {depth R/(I:x), depth R/(I,x)} for a variable x", _dhs_depth)
dhs_reg = _split_suite("dhs-reg", "reg R/I lies in {reg R/(I:x) + 1, reg R/(I,x)} for a variable x", _dhs_reg)
precise = _split_suite(
    "precise",
    "reg R/I is reg R/(I:x) + 1 when reg R/(I:x) > reg R/(I,x), reg R/(I,x) when smaller, "
    "and one of reg R/(I,x), reg R/(I,x) + 1 on a tie",
    _precise,
)
bounds = _split_suite("bounds", "max(reg (I:x), reg (I,x)) <= reg I <= max(reg (I:x) + 1, reg (I,x))", _bounds)


def _monomial_suite(name: str, statement: str, check: Callable) -> Callable:
    """Suite that checks ``check(I, f, field)`` with ``f`` a random monomial of degree <= 3 outside ``I``."""

    def run(cases: int, seed: int, field: FieldSpec = QQ) -> SuiteResult:
        res = SuiteResult(name, statement, {"seed": seed, "cases": cases, "field": str(field),
                                            "generator": IDEAL_PARAMS, "f": "uniform monomial of degree 1..3 not in I"})
        rng = _aux_rng(seed)
        for I in _corpus(seed, cases):
            res.cases += 1
            f = random_monomial_outside(I, rng)
            if f is None:
                res.skipped += 1
                continue
            res.checks += 1
            problem = check(I, f, field)
            if problem:
                res.fail(_size(I), ideal=format_ideal(I), f=format_monomial(f), **problem)
        return res

    run.__name__ = name
    return run


def _inclusion(I, f, field):
    r = invariants(I, field)
    c = invariants(colon(I, f), field)
    s = invariants(sum_with_monomial(I, f), field)
    ok = r.depth in (c.depth, s.depth) and (s.depth < c.depth or r.depth == c.depth)
    return None if ok else {"depth": r.depth, "colon_depth": c.depth, "sum_depth": s.depth}


def _colon_monotone(I, f, field):
    r = invariants(I, field)
    c = invariants(colon(I, f), field)
    if r.depth <= c.depth and r.reg >= c.reg:
        return None
    return {"depth": r.depth, "reg": r.reg, "colon_depth": c.depth, "colon_reg": c.reg}


inclusion = _monomial_suite(
    "inclusion",
    "for a monomial f: depth R/I lies in {depth R/(I:f), depth R/(I,f)}, and equals depth R/(I:f) "
    "when depth R/(I,f) >= depth R/(I:f)",
    _inclusion,
)
colon_monotone = _monomial_suite(
    "colon-monotone", "for a monomial f: depth R/I <= depth R/(I:f) and reg R/I >= reg R/(I:f)", _colon_monotone
)


def _ideal_suite(name: str, statement: str, check: Callable) -> Callable:
    def run(cases: int, seed: int, field: FieldSpec = QQ) -> SuiteResult:
        res = SuiteResult(name, statement, {"seed": seed, "cases": cases, "field": str(field), "generator": IDEAL_PARAMS})
        for I in _corpus(seed, cases):
            res.cases += 1
            res.checks += 1
            problem = check(I, field)
            if problem:
                res.fail(_size(I), ideal=format_ideal(I), **problem)
        return res

    run.__name__ = name
    return run


def _ht_bound(I, field):
    reg_ideal = invariants(I, field).reg + 1
    bound = lcm_degree(I) - height(I) + 1
    return None if reg_ideal <= bound else {"reg_ideal": reg_ideal, "bound": bound}


def _local_bound(I, field):
    reg_ideal = invariants(I, field).reg + 1
    _, bound = reg_upper_bounds(I, field)
    return None if reg_ideal <= bound else {"reg_ideal": reg_ideal, "bound": bound}


def _engines(I, field):
    rep = invariants(I, field)
    d, dtrace = depth_recursive(I, field)
    r, rtrace = reg_recursive(I, field)
    problem = {}
    if (d, r) != (rep.depth, rep.reg):
        problem.update(oracle=[rep.depth, rep.reg], recursive=[d, r])
    for node in dtrace.nodes:
        if node.rule is not Rule.BASE and node.value not in (node.colon_value, node.sum_value):
            problem["depth_node"] = format_ideal(node.ideal)
    for node in rtrace.nodes:
        if node.rule is Rule.BASE:
            continue
        c, s, v = node.colon_value, node.sum_value, node.value
        expected = {Rule.REG_COLON: c > s, Rule.REG_SUM: c < s, Rule.REG_TIE_ORACLE: c == s}[node.rule]
        if not expected or v not in (c + 1, s) or not max(c, s) <= v <= max(c + 1, s):
            problem["reg_node"] = format_ideal(node.ideal)
    return problem or None


def _polarization(I, field):
    base = invariants(I, field)
    # exponents up to 4 in up to 5 variables polarize to at most 20 variables
    with raised_caps(max_vars=32):
        P, added = polarize(I)
        pol = invariants(P, field)
    if pol.depth == base.depth + added and pol.reg == base.reg:
        return None
    return {"depth": base.depth, "reg": base.reg, "polarized_depth": pol.depth, "polarized_reg": pol.reg, "added": added}


def _box_stability(I, field):
    reports = {mode: invariants(I, field, mode) for mode in ("compressed", "full", "enlarged")}
    values = {(r.depth, r.reg) for r in reports.values()}
    if len(values) == 1:
        return None
    return {mode: [r.depth, r.reg] for mode, r in reports.items()}


ht_bound = _ideal_suite("ht-bound", "reg I <= deg lcm(I) - height I + 1", _ht_bound)
local_bound = _ideal_suite("local-bound", "reg I <= 1 + max reg (I:x) over the variables x occurring in I", _local_bound)
engines_agree = _ideal_suite(
    "engines-agree", "recursive splitting and degree-complex enumeration give the same depth and reg", _engines
)
polarization = _ideal_suite(
    "polarization", "polarization keeps reg R/I and raises depth R/I by the number of added variables", _polarization
)
box_stability = _ideal_suite(
    "box-stability", "compressed, full and enlarged degree boxes give the same depth and reg", _box_stability
)


# ---------------------------------------------------------------------------
# powers


def leaf_powers(cases: int, seed: int, field: FieldSpec = QQ, max_t: int = 3) -> SuiteResult:
    res = SuiteResult(
        "leaf-powers",
        "for an edge ideal with a good leaf f: I^(t+1) : f = I^t, the same for integral closures, "
        "depth R/I^t non-increasing and reg R/I^t non-decreasing (with and without closure)",
        {"seed": seed, "cases": cases, "field": str(field), "max_t": max_t,
         "generator": {"vertices": [3, 6], "edges": [2, 5], "edge_size": [2, 3], "distinct": True}},
    )
    rng = rng_for(seed)
    seen: set[Hypergraph] = set()
    while res.cases < cases:
        H = random_leaf_hypergraph(rng)
        if H in seen:
            continue
        seen.add(H)
        res.cases += 1
        report = good_leaf_colon_check(H, max_t, field)
        res.checks += len(report.checks)
        if not report.ok:
            res.fail(_hsize(H), hypergraph=str(H), failed=report.failures(), **report.info)
    return res


def add_variable(cases: int, seed: int, field: FieldSpec = QQ, max_s: int = 3) -> SuiteResult:
    res = SuiteResult(
        "add-variable",
        "with a new variable z: depth S/(I,z)^s = min over 1 <= t <= s of depth R/I^t and "
        "reg S/(I,z)^s - s = max over 1 <= t <= s of reg R/I^t - t; depth S/(I,z)^t non-increasing "
        "and reg S/(I,z)^t - t non-decreasing",
        {"seed": seed, "cases": cases, "field": str(field), "max_s": max_s, "generator": IDEAL_PARAMS},
    )
    for I in _corpus(seed, cases):
        res.cases += 1
        for s in range(1, max_s + 1):
            report = added_variable_powers(I, s, field)
            res.checks += len(report.checks)
            if not report.ok:
                res.fail(_size(I), ideal=format_ideal(I), s=s, failed=report.failures(), **report.info)
        report = added_variable_monotone(I, max_s, field)
        res.checks += len(report.checks)
        if not report.ok:
            res.fail(_size(I), ideal=format_ideal(I), failed=report.failures(), **report.info)
    return res


def ass_chain(cases: int, seed: int, field: FieldSpec = QQ, max_s: int = 3) -> SuiteResult:
    res = SuiteResult(
        "ass-chain",
        "with a new variable z: Ass (I,z)^t is contained in Ass (I,z)^(t+1)",
        {"seed": seed, "cases": cases, "max_s": max_s, "generator": IDEAL_PARAMS},
    )
    for I in _corpus(seed, cases):
        res.cases += 1
        report = ass_chain_check(I, max_s)
        res.checks += len(report.checks)
        if not report.ok:
            res.fail(_size(I), ideal=format_ideal(I), failed=report.failures(), **report.info)
    return res


# ---------------------------------------------------------------------------
# graphs


def matched_graphs(n: int):
    """Graphs on ``n`` (even) vertices containing the matching {01, 23, ...} in
    which no matching edge lies in a triangle.

    Every labelled graph with a perfect matching is a relabelling of one that
    contains this matching. A very well-covered graph has no matching edge in
    a triangle: if ``ab`` and a vertex ``c`` formed one, a maximal independent
    set through ``c`` would miss the pair ``{a, b}`` and so have fewer than
    ``n/2`` vertices. Between two matching pairs only the 7 matchings of the
    four cross pairs avoid such triangles.
    """
    pairs = [(2 * k, 2 * k + 1) for k in range(n // 2)]
    base = [1 << a | 1 << b for a, b in pairs]
    options = []
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        cross = [(a, c), (a, d), (b, c), (b, d)]
        opts = [()] + [(e,) for e in cross] + [((a, c), (b, d)), ((a, d), (b, c))]
        options.append([tuple(1 << u | 1 << v for u, v in o) for o in opts])
    names = [str(j) for j in range(n)]
    for choice in itertools.product(*options):
        edges = base + [e for part in choice for e in part]
        yield Hypergraph(tuple(names), tuple(sorted(edges)))


def cm_vwc(cases: int = 0, seed: int = 0, field: FieldSpec = QQ, max_vertices: int = 8) -> SuiteResult:
    res = SuiteResult(
        "cm-vwc",
        "a very well-covered graph is Cohen-Macaulay exactly when it is twin-free; it is twin-free exactly when "
        "some perfect matching has no 4-cycle through two of its edges",
        {"max_vertices": max_vertices, "field": str(field),
         "enumeration": "graphs containing the matching {01,23,...} with no matching edge in a triangle"},
    )
    very = 0
    for n in range(2, max_vertices + 1, 2):
        for G in matched_graphs(n):
            res.cases += 1
            if cover_classification(G).kind is not Cover.VERY_WELL_COVERED:
                continue
            very += 1
            res.checks += 2
            twin_free = not twin_pairs(G)
            cm = is_cohen_macaulay(G, field)
            no_c4 = any(favaron_checks(G, M).no_c4_two_matching_edges for M in perfect_matchings(G))
            if cm != twin_free or no_c4 != twin_free:
                res.fail(_hsize(G), graph=str(G), cohen_macaulay=cm, twin_free=twin_free, matching_without_c4=no_c4)
    res.params["very_well_covered"] = very
    return res


def _reg_of_graph(G: Hypergraph, field: FieldSpec) -> int:
    # the edgeless graph has the zero ideal, R/0 = R has reg 0
    return invariants(edge_ideal(G), field).reg if G.edges else 0


def froberg(cases: int = 0, seed: int = 0, field: FieldSpec = QQ, vertices: int = 5) -> SuiteResult:
    res = SuiteResult(
        "froberg",
        "reg R/I(G) <= 1 exactly when the complement of G is chordal",
        {"vertices": vertices, "labelled_graphs": 1 << (vertices * (vertices - 1) // 2), "field": str(field),
         "random_graphs": cases, "random_vertices": [6, 8], "seed": seed},
    )
    pairs = list(itertools.combinations(range(vertices), 2))
    names = [str(j) for j in range(vertices)]
    graphs = (Hypergraph(tuple(names), tuple(sorted(1 << a | 1 << b for k, (a, b) in enumerate(pairs) if code >> k & 1)))
              for code in range(1 << len(pairs)))
    rng = rng_for(seed)
    extra = (random_graph(rng, int(rng.integers(6, 9)), float(rng.uniform(0.2, 0.9))) for _ in range(cases))
    for G in itertools.chain(graphs, extra):
        res.cases += 1
        res.checks += 1
        reg = _reg_of_graph(G, field)
        chordal = is_chordal(complement(G))
        if (reg <= 1) != chordal:
            res.fail(_hsize(G), graph=str(G), reg=reg, complement_chordal=chordal)
    return res


def claw_gap(cases: int, seed: int, field: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult(
        "claw-gap",
        "a claw-free and gap-free graph has reg R/I(G) <= 2",
        {"seed": seed, "cases": cases, "field": str(field), "vertices": [4, 8], "edge_probability": [0.3, 0.95]},
    )
    rng = rng_for(seed)
    for _ in range(cases):
        G = random_claw_gap_free(rng)
        res.cases += 1
        res.checks += 1
        reg = invariants(edge_ideal(G), field).reg
        if reg > 2:
            res.fail(_hsize(G), graph=str(G), reg=reg)
    return res


def reg3(cases: int, seed: int, field: FieldSpec = QQ) -> SuiteResult:
    res = SuiteResult(
        "reg3",
        "if every H:x is a graph with chordal complement then reg R/I(H) <= 2",
        {"seed": seed, "cases": cases, "field": str(field),
         "corpus": "complete 3-uniform on 3..6 vertices plus random 3/4-edge hypergraphs on 4..6 vertices"},
    )
    for H in reg3_corpus(rng_for(seed), cases):
        res.cases += 1
        res.checks += 1
        reg = invariants(edge_ideal(H), field).reg
        if reg > 2:
            res.fail(_hsize(H), hypergraph=str(H), reg=reg)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "dhs-depth": dhs_depth,
    "dhs-reg": dhs_reg,
    "precise": precise,
    "bounds": bounds,
    "colon-monotone": colon_monotone,
    "inclusion": inclusion,
    "ht-bound": ht_bound,
    "local-bound": local_bound,
    "engines-agree": engines_agree,
    "polarization": polarization,
    "box-stability": box_stability,
    "leaf-powers": leaf_powers,
    "add-variable": add_variable,
    "ass-chain": ass_chain,
    "cm-vwc": cm_vwc,
    "froberg": froberg,
    "claw-gap": claw_gap,
    "reg3": reg3,
}

DEFAULT_CASES = {
    "leaf-powers": 50,
    "add-variable": 30,
    "ass-chain": 30,
    "cm-vwc": 0,
    "froberg": 100,
    "claw-gap": 100,
    "reg3": 20,
}


def run_suite(name: str, cases: int | None = None, seed: int = 7, field: FieldSpec = QQ) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    if cases is None:
        cases = DEFAULT_CASES.get(name, 200)
    return SUITES[name](cases, seed, field)
