import pytest
from hypothesis import given, settings

from conftest import ideals
from ideal_lab.hypergraph import Hypergraph, graph
from ideal_lab.ideal import associated_primes, extend, normalize, power, sum_with_monomial, variable
from ideal_lab.powers import (
    PowersRow,
    added_variable_monotone,
    added_variable_powers,
    ass_chain_check,
    good_leaf_colon_check,
    is_monotone,
    powers_table,
)
from ideal_lab.takayama import invariants

XY = normalize([(1, 1)], 2)
C4 = graph(["a", "b", "c", "d"], ["ab", "bc", "cd", "da"])
P3 = graph(["a", "b", "c"], ["ab", "bc"])


class TestPowersTable:
    def test_principal(self):
        rows = powers_table(XY, 3)
        assert [r.reg for r in rows] == [1, 3, 5]
        assert [r.depth for r in rows] == [1, 1, 1]

    def test_maximal_ideal(self):
        rows = powers_table(normalize([(1, 0), (0, 1)], 2), 2)
        assert [r.depth for r in rows] == [0, 0]

    def test_p3_with_closure_is_monotone(self):
        from ideal_lab.hypergraph import edge_ideal

        rows = powers_table(edge_ideal(P3), 2, closure=True)
        assert is_monotone(rows)
        assert rows[0].as_dict()["closure_reg"] == rows[0].closure_reg

    def test_monotone_detects_a_drop(self):
        assert not is_monotone([PowersRow(1, 1, 3), PowersRow(2, 1, 2)])
        assert not is_monotone([PowersRow(1, 1, 1), PowersRow(2, 2, 1)])

    def test_bad_t(self):
        with pytest.raises(ValueError):
            powers_table(XY, 0)


class TestGoodLeaf:
    def test_p3(self):
        rep = good_leaf_colon_check(P3, 3)
        assert rep.ok and set(rep.checks) == {"colon t=1", "colon t=2", "closure colon t=1", "closure colon t=2", "monotone"}

    def test_hyperpath(self):
        H = Hypergraph.build(["a", "b", "c", "d", "e"], ["abc", "cde"])
        rep = good_leaf_colon_check(H, 2)
        assert rep.ok and rep.info["leaf"] == ["a", "b", "c"]

    def test_c4_has_no_good_leaf(self):
        with pytest.raises(ValueError, match="good leaf"):
            good_leaf_colon_check(C4, 2)


class TestAddedVariable:
    def test_xy_square(self):
        J = power(sum_with_monomial(extend(XY), variable(2, 3)), 2)
        assert set(J.gens) == {(2, 2, 0), (1, 1, 1), (0, 0, 2)}
        rep = added_variable_powers(XY, 2)
        assert rep.ok and (rep.info["depth"], rep.info["reg"]) == (1, 3)

    def test_trivial_cases(self):
        rep = added_variable_powers(normalize([(1,)], 1), 1)
        # reg k[x,z]/(x,z) = 0 = (reg k[x]/(x) - 1) + 1
        assert rep.ok and (rep.info["depth"], rep.info["reg"]) == (0, 0)
        rep = added_variable_powers(normalize([(1, 0), (0, 1)], 2), 2)
        assert rep.ok and rep.info["depth"] == 0

    def test_bad_s(self):
        with pytest.raises(ValueError):
            added_variable_powers(XY, 0)

    @settings(max_examples=25, deadline=None)
    @given(ideals(max_n=3, max_gens=3, max_exp=2))
    def test_identity_and_monotonicity(self, I):
        for s in (1, 2, 3):
            assert added_variable_powers(I, s).ok
        assert added_variable_monotone(I, 3).ok


class TestAssChain:
    def test_examples(self):
        assert ass_chain_check(XY, 3).ok
        assert ass_chain_check(normalize([(1,)], 1), 2).ok
        from ideal_lab.hypergraph import edge_ideal

        assert ass_chain_check(edge_ideal(C4), 2).ok

    def test_x_plus_z(self):
        J = sum_with_monomial(extend(normalize([(1,)], 1)), variable(1, 2))
        assert associated_primes(J) == [0b11]

    @settings(max_examples=25, deadline=None)
    @given(ideals(max_n=3, max_gens=3, max_exp=2))
    def test_chain(self, I):
        assert ass_chain_check(I, 3).ok


def test_report_dict():
    rep = added_variable_powers(XY, 1)
    d = rep.as_dict()
    assert d["ok"] is True and d["checks"] == {"depth": True, "reg": True}
    assert invariants(XY).reg == 1
