"""Command-line interface.

Every subcommand builds one JSON-ready object. ``--json`` prints it with
sorted keys; otherwise a plain indented rendering of the same object is
printed. Exit codes: 0 success, 1 a mathematical check failed, 2 usage or
parse error, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from ideal_lab.caps import CapError
from ideal_lab.fileio import IdealFile, read_hypergraph, read_ideal, parse_monomial
from ideal_lab.hypergraph import (
    cover_classification,
    favaron_checks,
    find_claw,
    find_gap,
    good_leaf,
    is_chordal,
    is_cohen_macaulay,
    edge_ideal,
    mcs_order,
    perfect_matchings,
    reg3_hypothesis,
    twin_pairs,
)
from ideal_lab.ideal import (
    associated_primes,
    colon,
    format_ideal,
    integral_closure,
    power,
    sum_with_monomial,
)
from ideal_lab.powers import is_monotone, powers_table
from ideal_lab.recursion import RecursionContradiction, Rule, depth_recursive, reg_recursive
from ideal_lab.scomplex import FieldSpec, reduced_homology_ranks
from ideal_lab.suites import DEFAULT_CASES, SUITES, run_suite
from ideal_lab.takayama import degree_complex, invariants

OK, FAILED, USAGE, CAPPED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _echo(path: str, f: IdealFile) -> dict:
    return {"file": path, "vars": list(f.names), "ideal": format_ideal(f.ideal, f.names)}


def _ideal_out(f: IdealFile, J) -> dict:
    return {"ideal": format_ideal(J, f.names), "generators": [list(g) for g in J.gens]}


def _rule_counts(trace) -> dict:
    return {rule.value: trace.count(rule) for rule in Rule if trace.count(rule)}


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, report)


def cmd_invariants(args) -> tuple[int, dict]:
    f = read_ideal(args.ideal)
    out = {"input": _echo(args.ideal, f), "field": str(args.field), "engine": args.engine}
    values = []
    if args.engine in ("oracle", "both"):
        rep = invariants(f.ideal, args.field)
        out["oracle"] = rep.as_dict()
        values.append((rep.depth, rep.reg))
    if args.engine in ("recursive", "both"):
        d, dtrace = depth_recursive(f.ideal, args.field)
        r, rtrace = reg_recursive(f.ideal, args.field)
        out["recursive"] = {
            "depth": d,
            "reg": r,
            "depth_rules": _rule_counts(dtrace),
            "reg_rules": _rule_counts(rtrace),
            "depth_trace": dtrace.as_dict()["nodes"],
            "reg_trace": rtrace.as_dict()["nodes"],
        }
        values.append((d, r))
    out["depth"], out["reg"] = values[0]
    out["agree"] = len(set(values)) == 1
    return (OK if out["agree"] else FAILED), out


def cmd_colon(args) -> tuple[int, dict]:
    f = read_ideal(args.ideal)
    m = parse_monomial(args.monomial, f.names)
    return OK, {"input": _echo(args.ideal, f), "monomial": args.monomial, "colon": _ideal_out(f, colon(f.ideal, m))}


def cmd_sum(args) -> tuple[int, dict]:
    f = read_ideal(args.ideal)
    m = parse_monomial(args.monomial, f.names)
    return OK, {"input": _echo(args.ideal, f), "monomial": args.monomial, "sum": _ideal_out(f, sum_with_monomial(f.ideal, m))}


def cmd_power(args) -> tuple[int, dict]:
    f = read_ideal(args.ideal)
    if args.t < 0:
        raise UsageError("the exponent must be nonnegative")
    return OK, {"input": _echo(args.ideal, f), "t": args.t, "power": _ideal_out(f, power(f.ideal, args.t))}


def cmd_closure(args) -> tuple[int, dict]:
    f = read_ideal(args.ideal)
    return OK, {"input": _echo(args.ideal, f), "closure": _ideal_out(f, integral_closure(f.ideal))}


def cmd_ass(args) -> tuple[int, dict]:
    f = read_ideal(args.ideal)
    primes = [[f.names[j] for j in range(len(f.names)) if P >> j & 1] for P in associated_primes(f.ideal)]
    return OK, {"input": _echo(args.ideal, f), "associated_primes": primes}


def cmd_powers(args) -> tuple[int, dict]:
    f = read_ideal(args.ideal)
    if args.max_t < 1:
        raise UsageError("--max-t must be at least 1")
    rows = powers_table(f.ideal, args.max_t, args.closure, args.field)
    return OK, {
        "input": _echo(args.ideal, f),
        "field": str(args.field),
        "closure": args.closure,
        "rows": [r.as_dict() for r in rows],
        "monotone": is_monotone(rows),
    }


def _need_graph(H) -> None:
    if not H.is_graph:
        raise UsageError("this check needs a graph (every edge of size two)")


def cmd_graph(args) -> tuple[int, dict]:
    H = read_hypergraph(args.hypergraph)
    names = H.names

    def vs(mask_or_seq) -> list[str]:
        if isinstance(mask_or_seq, int):
            return H.edge_names(mask_or_seq)
        return [names[j] for j in mask_or_seq]

    out: dict = {"input": {"file": args.hypergraph, "hypergraph": str(H)}, "check": args.check}
    code = OK
    check = args.check
    if check == "chordal":
        _need_graph(H)
        out["chordal"] = is_chordal(H)
        out["mcs_order"] = vs(mcs_order(H))
    elif check == "claw":
        _need_graph(H)
        claw = find_claw(H)
        out["claw_free"] = claw is None
        out["claw"] = None if claw is None else vs(claw)
    elif check == "gap":
        _need_graph(H)
        gap = find_gap(H)
        out["gap_free"] = gap is None
        out["gap"] = None if gap is None else vs(gap)
    elif check == "twins":
        _need_graph(H)
        pairs = twin_pairs(H)
        out["twin_free"] = not pairs
        out["twins"] = [vs(p) for p in pairs]
    elif check == "cover":
        _need_graph(H)
        rep = cover_classification(H)
        out["cover"] = rep.kind.value
        out["independent_set_sizes"] = list(rep.sizes)
        out["witness"] = [vs(s) for s in rep.witness]
    elif check == "good-leaf":
        leaf = good_leaf(H)
        out["good_leaf"] = None if leaf is None else vs(leaf)
    elif check == "cm":
        I = edge_ideal(H)
        rep = invariants(I, args.field)
        out["field"] = str(args.field)
        out["cohen_macaulay"] = is_cohen_macaulay(H, args.field)
        out["depth"] = rep.depth
    elif check == "reg3":
        hyp = reg3_hypothesis(H)
        reg = invariants(edge_ideal(H), args.field).reg
        out.update(field=str(args.field), hypothesis=hyp, reg=reg)
        if hyp and reg > 2:
            code = FAILED
    elif check == "favaron":
        _need_graph(H)
        matchings = list(perfect_matchings(H))
        out["perfect_matchings"] = len(matchings)
        if matchings:
            flags = favaron_checks(H, matchings[0])
            out["matching"] = [vs(e) for e in matchings[0]]
            out["no_triangle_edge"] = flags.no_triangle_edge
            out["path_endpoint_adjacency"] = flags.path_endpoint_adjacency
            out["no_c4_two_matching_edges"] = flags.no_c4_two_matching_edges
            out["some_matching_without_c4"] = any(
                favaron_checks(H, M).no_c4_two_matching_edges for M in matchings
            )
    return code, out


def cmd_complex(args) -> tuple[int, dict]:
    f = read_ideal(args.ideal)
    if len(args.a) != len(f.names):
        raise UsageError(f"--a needs {len(f.names)} entries")
    C = degree_complex(f.ideal, args.a)
    out = {"input": _echo(args.ideal, f), "a": args.a, "void": C.void}
    out["facets"] = [[f.names[j] for j in range(len(f.names)) if F >> j & 1] for F in C.facets]
    if C.void:
        out["homology"] = {}
    else:
        ranks = reduced_homology_ranks(C, args.field)
        out["homology"] = {str(k - 1): r for k, r in enumerate(ranks)}
    out["field"] = str(args.field)
    return OK, out


def cmd_verify(args) -> tuple[int, dict]:
    res = run_suite(args.suite, args.cases, args.seed, args.field)
    out = res.as_dict()
    return (OK if res.ok else FAILED), out


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ideal-lab", description="Depth and regularity of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, field: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="print JSON")
        if field:
            p.add_argument("--field", type=_field, default=FieldSpec(0), help="q (default) or f<p>")
        return p

    p = add("invariants", cmd_invariants, "depth and reg of R/I", field=True)
    p.add_argument("ideal")
    p.add_argument("--engine", choices=["oracle", "recursive", "both"], default="oracle")

    for name, func in (("colon", cmd_colon), ("sum", cmd_sum)):
        p = add(name, func, f"{name} with a monomial")
        p.add_argument("ideal")
        p.add_argument("monomial")

    p = add("power", cmd_power, "I^t")
    p.add_argument("ideal")
    p.add_argument("t", type=int)

    p = add("closure", cmd_closure, "integral closure")
    p.add_argument("ideal")

    p = add("ass", cmd_ass, "associated primes")
    p.add_argument("ideal")

    p = add("powers", cmd_powers, "depth and reg of R/I^t for t = 1..T", field=True)
    p.add_argument("ideal")
    p.add_argument("--max-t", type=int, required=True)
    p.add_argument("--closure", action="store_true")

    p = add("graph", cmd_graph, "graph and hypergraph checks", field=True)
    p.add_argument("hypergraph")
    p.add_argument(
        "--check",
        required=True,
        choices=["chordal", "claw", "gap", "twins", "cover", "good-leaf", "cm", "reg3", "favaron"],
    )

    p = add("complex", cmd_complex, "degree complex and its reduced homology", field=True)
    p.add_argument("ideal")
    p.add_argument("--a", type=_ints, required=True, help="comma-separated degree, e.g. --a=-1,0")

    p = add("verify", cmd_verify, "run a property suite", field=True)
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--cases", type=int, default=None,
                   help="instances to draw (default 200; " + ", ".join(f"{k} {v}" for k, v in DEFAULT_CASES.items()) + ")")
    p.add_argument("--seed", type=int, default=7)
    return parser


def render(obj, indent: int = 0) -> str:
    """Plain rendering of a JSON-ready object."""
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key in sorted(obj):
            value = obj[key]
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.append(f"{pad}{key}:")
                lines.append(render(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        lines = []
        for item in obj:
            if isinstance(item, dict):
                body = render(item, indent + 1).lstrip()
                lines.append(f"{pad}- {body}")
            else:
                lines.append(f"{pad}- {_scalar(item)}")
        return "\n".join(lines)
    return pad + _scalar(obj)


def _flat(value) -> bool:
    items = value.values() if isinstance(value, dict) else value
    return all(not isinstance(v, dict) and not (isinstance(v, list) and any(isinstance(w, (dict, list)) for w in v))
               for v in items) and isinstance(value, list)


def _scalar(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    if value is None:
        return "none"
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        code, out = args.func(args)
    except CapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAPPED
    except RecursionContradiction as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return FAILED
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    print(json.dumps(out, sort_keys=True, indent=2) if args.json else render(out))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
