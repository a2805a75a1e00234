"""Plain-text formats for ideals and hypergraphs.

Ideal files::

    # comment
    vars x y z
    x^2*y
    0 1 3          # exponent-vector form, one entry per variable

Hypergraph files::

    vertices a b c d
    edge a b
    edge b c d

The printers emit the canonical form (minimal generators in canonical order,
product form; edges in bitset order), so parse followed by print is the
identity on printed files.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ideal_lab.hypergraph import Hypergraph
from ideal_lab.ideal import Monomial, MonomialIdeal, format_monomial, normalize

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_FACTOR = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?\Z")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class IdealFile:
    names: tuple[str, ...]
    ideal: MonomialIdeal


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _check_names(names: list[str], number: int) -> tuple[str, ...]:
    if not names:
        raise ParseError("header lists no names", number)
    for v in names:
        if not _NAME.match(v):
            raise ParseError(f"bad name {v!r}", number)
    if len(set(names)) != len(names):
        raise ParseError("names must be unique", number)
    return tuple(names)


def parse_monomial(text: str, names: tuple[str, ...]) -> Monomial:
    """Product form (``x^2*y``, ``1``) or exponent-vector form (``2 1 0``)."""
    text = text.strip()
    tokens = text.split()
    if tokens and all(t.lstrip("-").isdigit() for t in tokens) and (len(tokens) > 1 or len(names) == 1):
        exps = [int(t) for t in tokens]
        if len(exps) != len(names):
            raise ValueError(f"expected {len(names)} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        return tuple(exps)
    exps = [0] * len(names)
    if text == "1":
        return tuple(exps)
    index = {v: j for j, v in enumerate(names)}
    for factor in re.sub(r"\s+", "", text).split("*"):
        m = _FACTOR.match(factor)
        if m is None:
            raise ValueError(f"cannot read factor {factor!r}")
        name, e = m.group(1), m.group(2)
        if name not in index:
            raise ValueError(f"unknown variable {name!r}")
        exps[index[name]] += 1 if e is None else int(e)
    return tuple(exps)


def parse_ideal(text: str) -> IdealFile:
    names: tuple[str, ...] | None = None
    gens = []
    for number, line in _lines(text):
        if names is None:
            head, *rest = line.split()
            if head != "vars":
                raise ParseError("the first line must be 'vars <name>+'", number)
            names = _check_names(rest, number)
            continue
        try:
            gens.append(parse_monomial(line, names))
        except ValueError as exc:
            raise ParseError(str(exc), number) from None
    if names is None:
        raise ParseError("missing 'vars' header")
    return IdealFile(names, normalize(gens, len(names)))


def format_ideal_file(f: IdealFile) -> str:
    lines = ["vars " + " ".join(f.names)]
    lines += [format_monomial(g, f.names) for g in f.ideal.gens]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    names: tuple[str, ...] | None = None
    edges = []
    for number, line in _lines(text):
        head, *rest = line.split()
        if names is None:
            if head != "vertices":
                raise ParseError("the first line must be 'vertices <name>+'", number)
            names = _check_names(rest, number)
            continue
        if head != "edge" or not rest:
            raise ParseError("expected 'edge <name>+'", number)
        if len(set(rest)) != len(rest):
            raise ParseError("repeated vertex in edge", number)
        unknown = [v for v in rest if v not in names]
        if unknown:
            raise ParseError(f"unknown vertex {unknown[0]!r}", number)
        edges.append(rest)
    if names is None:
        raise ParseError("missing 'vertices' header")
    try:
        return Hypergraph.build(names, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_hypergraph(H: Hypergraph) -> str:
    lines = ["vertices " + " ".join(H.names)]
    lines += ["edge " + " ".join(H.edge_names(e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def read_ideal(path: str | Path) -> IdealFile:
    return parse_ideal(Path(path).read_text())


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())
