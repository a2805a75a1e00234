from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ideals
from ideal_lab.fileio import (
    IdealFile,
    ParseError,
    format_hypergraph,
    format_ideal_file,
    parse_hypergraph,
    parse_ideal,
    parse_monomial,
    read_hypergraph,
    read_ideal,
)
from ideal_lab.hypergraph import Hypergraph
from ideal_lab.ideal import normalize

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
XYZ = ("x", "y", "z")


class TestMonomials:
    def test_product_form(self):
        assert parse_monomial("x^2*y", XYZ) == (2, 1, 0)
        assert parse_monomial("x * x * z^3", XYZ) == (2, 0, 3)
        assert parse_monomial("1", XYZ) == (0, 0, 0)

    def test_vector_form(self):
        assert parse_monomial("2 1 0", XYZ) == (2, 1, 0)
        assert parse_monomial("3", ("x",)) == (3,)

    @pytest.mark.parametrize("text", ["w", "x^", "x**2", "1 2", "1 -1 0", "x+y"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_monomial(text, XYZ)


class TestIdealFiles:
    def test_vectors_fixture_is_minimalised(self):
        f = read_ideal(FIXTURES / "vectors.ideal")
        assert f.names == ("a", "b", "c")
        assert set(f.ideal.gens) == {(2, 1, 0), (0, 3, 1), (1, 0, 4)}

    def test_fixtures(self):
        assert len(read_ideal(FIXTURES / "squarefree9.ideal").ideal.gens) == 10
        assert read_ideal(FIXTURES / "three_gens.ideal").ideal.gens == normalize(
            [(3, 1, 0, 0, 0), (0, 2, 5, 0, 0), (0, 0, 2, 4, 1)], 5
        ).gens

    def test_comments_and_blank_lines(self):
        f = parse_ideal("# head\n\nvars x y  # names\nx*y # gen\n\n")
        assert f.ideal.gens == ((1, 1),)

    @pytest.mark.parametrize(
        "text, line",
        [
            ("x*y\n", 1),
            ("vars x x\nx\n", 1),
            ("vars x 2y\nx\n", 1),
            ("vars x y\nx*q\n", 2),
            ("vars x y\n# c\n1 2 3\n", 3),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_ideal(text)
        assert info.value.line == line

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_ideal("# only a comment\n")

    @settings(max_examples=200, deadline=None)
    @given(ideals(max_n=5, max_exp=4))
    def test_round_trip(self, I):
        names = tuple(f"x{j + 1}" for j in range(I.n))
        text = format_ideal_file(IdealFile(names, I))
        back = parse_ideal(text)
        assert back == IdealFile(names, I)
        assert format_ideal_file(back) == text


@st.composite
def antichains(draw):
    n = draw(st.integers(1, 6))
    raw = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=6, unique=True))
    edges = [m for m in raw if not any(o != m and o & m == o for o in raw)]
    return Hypergraph.build([f"v{j}" for j in range(n)], edges)


class TestHypergraphFiles:
    def test_c4(self):
        H = read_hypergraph(FIXTURES / "c4.hg")
        assert H.is_graph and len(H.edges) == 4

    def test_antichain_violation_names_pair(self):
        with pytest.raises(ParseError, match="ab is contained in edge abc"):
            read_hypergraph(FIXTURES / "bad_antichain.hg")

    @pytest.mark.parametrize(
        "text",
        ["edge a b\n", "vertices a b\nedges a b\n", "vertices a b\nedge a c\n", "vertices a b\nedge a a\n",
         "vertices a b\nedge\n", "vertices a b\nedge a b\nedge b a\n"],
    )
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_hypergraph(text)

    @settings(max_examples=200, deadline=None)
    @given(antichains())
    def test_round_trip(self, H):
        text = format_hypergraph(H)
        back = parse_hypergraph(text)
        assert back == H and format_hypergraph(back) == text
