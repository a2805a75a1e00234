from pathlib import Path

import pytest
from hypothesis import given, settings

from conftest import ideals
from ideal_lab.ideal import colon, normalize, sum_with_monomial, variable
from ideal_lab.recursion import (
    Rule,
    depth_recursive,
    reg_ideal,
    reg_recursive,
    reg_upper_bounds,
    split_variable,
)
from ideal_lab.fileio import read_ideal
from ideal_lab.scomplex import FieldSpec
from ideal_lab.takayama import invariants

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


class TestExamples:
    def test_xy(self):
        d, trace = depth_recursive(normalize([(1, 1)], 2))
        assert d == 1
        assert trace.root.rule is Rule.DEPTH_DHS
        assert (trace.root.colon_value, trace.root.sum_value) == (1, 1)

    def test_base_case(self):
        I = normalize([(1, 0), (0, 1)], 2)
        assert depth_recursive(I)[0] == 0
        assert reg_recursive(I)[0] == 0
        assert depth_recursive(I)[1].root.rule is Rule.BASE

    def test_principal_square(self):
        assert reg_recursive(normalize([(2,)], 1))[0] == 1

    def test_three_gens_depth(self):
        I = read_ideal(FIXTURES / "three_gens.ideal").ideal
        assert depth_recursive(I)[0] == 2

    def test_five_vars_reg(self):
        I = read_ideal(FIXTURES / "five_vars.ideal").ideal
        assert reg_recursive(I)[0] == 6

    def test_squarefree9_reg_and_colon(self):
        I = read_ideal(FIXTURES / "squarefree9.ideal").ideal
        x8 = variable(7, 9)
        assert reg_recursive(I)[0] == 2
        assert reg_recursive(colon(I, x8))[0] == 2
        # the colon branch alone does not give reg + 1 here
        assert reg_recursive(I)[0] != reg_recursive(colon(I, x8))[0] + 1

    def test_rejects_unit(self):
        with pytest.raises(ValueError):
            depth_recursive(normalize([(0, 0)], 2))


class TestUpperBounds:
    def test_examples(self):
        ht, _ = reg_upper_bounds(normalize([(1, 1, 0), (0, 1, 1)], 3))
        assert ht == 3
        assert reg_upper_bounds(normalize([(2, 0), (0, 3)], 2))[0] == 4
        ht, ind = reg_upper_bounds(normalize([(5,)], 1))
        assert ht == 5 == reg_ideal(normalize([(5,)], 1))
        # the colon by x is the unit ideal, counted as reg 0
        assert ind == 1 + reg_ideal(normalize([(4,)], 1))

    def test_unit_ideal_regularity(self):
        assert reg_ideal(normalize([(0,)], 1)) == 0


def test_split_variable_prefers_weight_then_index():
    assert split_variable(normalize([(1, 2, 0), (0, 1, 1)], 3)) == 1
    assert split_variable(normalize([(1, 1, 0), (0, 0, 1)], 3)) == 0
    assert split_variable(normalize([(1, 0), (0, 1)], 2)) is None


@settings(max_examples=150, deadline=None)
@given(ideals(max_n=4, max_gens=5, max_exp=3))
def test_engines_agree(I):
    rep = invariants(I)
    assert depth_recursive(I)[0] == rep.depth
    assert reg_recursive(I)[0] == rep.reg


@settings(max_examples=40, deadline=None)
@given(ideals(max_n=3, max_gens=4, max_exp=3))
def test_engines_agree_over_f2(I):
    F2 = FieldSpec(2)
    rep = invariants(I, F2)
    assert (depth_recursive(I, F2)[0], reg_recursive(I, F2)[0]) == (rep.depth, rep.reg)


@settings(max_examples=100, deadline=None)
@given(ideals(max_n=4, max_gens=5, max_exp=3))
def test_trace_node_invariants(I):
    _, dtrace = depth_recursive(I)
    _, rtrace = reg_recursive(I)
    for trace in (dtrace, rtrace):
        for node in trace.nodes:
            if node.rule is Rule.BASE:
                assert node.var is None and not node.children
                continue
            x = variable(node.var, node.ideal.n)
            assert node.children == (colon(node.ideal, x).key(), sum_with_monomial(node.ideal, x).key())
            if node.rule in (Rule.DEPTH_AMBIG_ORACLE, Rule.REG_TIE_ORACLE):
                assert node.witness is not None
    for node in dtrace.nodes:
        if node.rule is Rule.BASE:
            continue
        c, s, v = node.colon_value, node.sum_value, node.value
        assert v in (c, s)
        if s >= c:
            assert v == c and node.rule is (Rule.DEPTH_DHS if s == c else Rule.DEPTH_TIE)
        else:
            assert node.rule is Rule.DEPTH_AMBIG_ORACLE
    for node in rtrace.nodes:
        if node.rule is Rule.BASE:
            continue
        c, s, v = node.colon_value, node.sum_value, node.value
        assert v in (c + 1, s)
        assert max(c, s) <= v <= max(c + 1, s)
        expected = Rule.REG_COLON if c > s else Rule.REG_SUM if c < s else Rule.REG_TIE_ORACLE
        assert node.rule is expected


@settings(max_examples=80, deadline=None)
@given(ideals(max_n=4, max_gens=5, max_exp=3))
def test_upper_bounds_hold(I):
    reg = invariants(I).reg + 1
    ht, ind = reg_upper_bounds(I)
    assert reg <= ht and reg <= ind


def test_trace_serialises_with_one_based_variables():
    _, trace = reg_recursive(normalize([(2, 1)], 2))
    d = trace.as_dict()
    assert d["nodes"][-1]["var"] == 1
    assert {n["rule"] for n in d["nodes"]} <= {r.value for r in Rule}
    assert trace.count(Rule.BASE) >= 1
