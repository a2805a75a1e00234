"""Depth and regularity of monomial ideals, with theorem-verification suites."""

from ideal_lab.caps import CapError, Caps
from ideal_lab.ideal import (
    MonomialIdeal,
    associated_primes,
    colon,
    height,
    integral_closure,
    lcm_degree,
    normalize,
    polarize,
    power,
    sum_with_monomial,
)
from ideal_lab.scomplex import FieldSpec, QQ, SimplicialComplex, from_facets, reduced_homology_ranks
from ideal_lab.takayama import InvariantReport, degree_complex, depth_oracle, invariants, reg_oracle
from ideal_lab.recursion import depth_recursive, reg_recursive, reg_upper_bounds
from ideal_lab.hypergraph import Hypergraph, edge_ideal, good_leaf, graph
from ideal_lab.fileio import parse_hypergraph, parse_ideal
from ideal_lab.suites import SUITES, run_suite

__all__ = [
    "CapError",
    "Caps",
    "FieldSpec",
    "Hypergraph",
    "InvariantReport",
    "MonomialIdeal",
    "QQ",
    "SUITES",
    "SimplicialComplex",
    "associated_primes",
    "colon",
    "degree_complex",
    "depth_oracle",
    "depth_recursive",
    "edge_ideal",
    "from_facets",
    "good_leaf",
    "graph",
    "height",
    "integral_closure",
    "invariants",
    "lcm_degree",
    "normalize",
    "parse_hypergraph",
    "parse_ideal",
    "polarize",
    "power",
    "reduced_homology_ranks",
    "reg_oracle",
    "reg_recursive",
    "reg_upper_bounds",
    "run_suite",
    "sum_with_monomial",
]
