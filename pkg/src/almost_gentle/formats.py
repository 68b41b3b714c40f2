"""Text format for presentations and defining pairs, plus JSON and DOT output.

The text format is line oriented; ``;`` also ends a statement and ``#``
starts a comment::

    algebra NAME
    vertices ID+
    arrow ID SRC TGT
    rel ID ID
    cycle [mult=N] ID+

A source with at least one ``cycle`` statement describes a defining pair,
otherwise a presentation.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Union

from .brauer import BrauerConfiguration
from .hypergraph import TRUNCATION, OrientedHypergraph
from .pairs import DefiningPair, PairReport, validate_pair
from .quiver import Arrow, Presentation, Quiver, ValidationReport

FORMAT_VERSION = 1
_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass
class SourceFile:
    name: str = "A"
    vertices: list[str] = field(default_factory=list)
    arrows: list[Arrow] = field(default_factory=list)
    relations: list[tuple[str, str]] = field(default_factory=list)
    cycles: list[tuple[str, ...]] = field(default_factory=list)
    mults: list[int] = field(default_factory=list)

    @property
    def is_pair(self) -> bool:
        return bool(self.cycles)

    def quiver(self) -> Quiver:
        return Quiver(tuple(self.vertices), tuple(self.arrows))


def _tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        stmt: list[tuple[str, int]] = []
        for m in re.finditer(r";|[^\s;]+", line):
            if m.group() == ";":
                if stmt:
                    yield lineno, stmt
                stmt = []
            else:
                stmt.append((m.group(), m.start() + 1))
        if stmt:
            yield lineno, stmt


def parse_source(text: str) -> SourceFile:
    src = SourceFile()
    named = False
    vset: set[str] = set()
    arrows: dict[str, Arrow] = {}
    rels: set[tuple[str, str]] = set()
    rel_line = cycle_line = None

    def ident(tok, lineno):
        word, col = tok
        if not _ID.match(word):
            raise ParseError(f"bad identifier {word!r}", lineno, col)
        return word

    def known_arrow(tok, lineno):
        a = ident(tok, lineno)
        if a not in arrows:
            raise ParseError(f"unknown arrow {a!r}", lineno, tok[1])
        return a

    for lineno, stmt in _tokens(text):
        (kw, kcol), args = stmt[0], stmt[1:]
        if kw == "algebra":
            if named:
                raise ParseError("algebra name given twice", lineno, kcol)
            if len(args) != 1:
                raise ParseError("expected: algebra NAME", lineno, kcol)
            src.name = ident(args[0], lineno)
            named = True
        elif kw == "vertices":
            if not args:
                raise ParseError("expected: vertices ID+", lineno, kcol)
            for tok in args:
                v = ident(tok, lineno)
                if v in vset:
                    raise ParseError(f"duplicate vertex {v!r}", lineno, tok[1])
                vset.add(v)
                src.vertices.append(v)
        elif kw == "arrow":
            if len(args) != 3:
                raise ParseError("expected: arrow ID SRC TGT", lineno, kcol)
            a = ident(args[0], lineno)
            if a in arrows:
                raise ParseError(f"duplicate arrow {a!r}", lineno, args[0][1])
            if a in vset:
                raise ParseError(f"{a!r} is already a vertex", lineno, args[0][1])
            ends = []
            for tok in args[1:]:
                v = ident(tok, lineno)
                if v not in vset:
                    raise ParseError(f"unknown vertex {v!r}", lineno, tok[1])
                ends.append(v)
            arrows[a] = Arrow(a, *ends)
            src.arrows.append(arrows[a])
        elif kw == "rel":
            if len(args) != 2:
                raise ParseError("expected: rel ID ID", lineno, kcol)
            a, b = (known_arrow(t, lineno) for t in args)
            if arrows[a].target != arrows[b].source:
                raise ParseError(f"relation {a} {b} is not composable", lineno, args[1][1])
            if (a, b) in rels:
                raise ParseError(f"duplicate relation {a} {b}", lineno, kcol)
            rels.add((a, b))
            src.relations.append((a, b))
            rel_line = rel_line or lineno
        elif kw == "cycle":
            mult = 1
            if args and args[0][0].startswith("mult="):
                word, col = args[0]
                try:
                    mult = int(word[5:])
                except ValueError:
                    raise ParseError(f"bad multiplicity {word!r}", lineno, col) from None
                if mult < 1:
                    raise ParseError("multiplicity must be positive", lineno, col)
                args = args[1:]
            if not args:
                raise ParseError("expected: cycle [mult=N] ID+", lineno, kcol)
            cyc = tuple(known_arrow(t, lineno) for t in args)
            for i, (a, b) in enumerate(zip(cyc, cyc[1:] + cyc[:1])):
                if arrows[a].target != arrows[b].source:
                    col = args[(i + 1) % len(args)][1]
                    raise ParseError(f"cycle breaks between {a} and {b}", lineno, col)
            src.cycles.append(cyc)
            src.mults.append(mult)
            cycle_line = cycle_line or lineno
        else:
            raise ParseError(f"unknown statement {kw!r}", lineno, kcol)
        if rel_line and cycle_line:
            raise ParseError("a file may declare relations or cycles, not both", max(rel_line, cycle_line))
    if not src.vertices:
        raise ParseError("no vertices declared", 1)
    return src


def parse(text: str) -> Union[Presentation, DefiningPair]:
    src = parse_source(text)
    if src.is_pair:
        return DefiningPair.build(src.quiver(), src.cycles, src.mults, name=src.name)
    return Presentation(src.quiver(), frozenset(src.relations), src.name)


def _header(name: str, q: Quiver) -> list[str]:
    lines = [f"algebra {name}", "vertices " + " ".join(q.vertices)]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in q.arrows]
    return lines


def format_presentation(p: Presentation) -> str:
    lines = _header(p.name, p.quiver)
    lines += [f"rel {a} {b}" for a, b in p.sorted_relations()]
    return "\n".join(lines) + "\n"


def format_pair(pair: DefiningPair) -> str:
    lines = _header(pair.name, pair.quiver)
    for c in pair.classes:
        prefix = "cycle " if c.multiplicity == 1 else f"cycle mult={c.multiplicity} "
        lines.append(prefix + " ".join(c.representative))
    return "\n".join(lines) + "\n"


def format_object(obj) -> str:
    if isinstance(obj, DefiningPair):
        return format_pair(obj)
    return format_presentation(obj)


def dumps(payload: dict) -> str:
    return json.dumps({"format": FORMAT_VERSION, **payload}, indent=2, ensure_ascii=False) + "\n"


def validation_to_dict(rep: ValidationReport) -> dict:
    return {
        "structural_errors": list(rep.structural_errors),
        "s1_violations": [
            {"arrow": a, "kind": k, "arrows": list(o)} for a, k, o in rep.s1_violations
        ],
        "unrelieved_cycles": [list(c) for c in rep.unrelieved_cycles],
        "gentle_violations": list(rep.gentle_violations),
        "is_finite_dimensional": rep.is_finite_dimensional,
        "is_almost_gentle": rep.is_almost_gentle,
        "is_gentle": rep.is_gentle,
    }


def pair_report_to_dict(rep: PairReport) -> dict:
    return {
        "valid": rep.ok,
        "errors": list(rep.errors),
        "warnings": list(rep.warnings),
        "classes": [
            {"cycle": list(c.representative), "length": c.length, "multiplicity": c.multiplicity}
            for c in rep.classes
        ],
    }


def configuration_to_dict(cfg: BrauerConfiguration) -> dict:
    return {
        "vertices": [
            {"name": f"alpha{i + 1}", "multiplicity": nu} for i, nu in enumerate(cfg.multiplicities)
        ],
        "polygons": {v: [f"alpha{i + 1}" for i in members] for v, members in cfg.polygons},
        "orientation": {
            f"alpha{i + 1}": list(seq) for i, seq in enumerate(cfg.normal_form()[2])
        },
    }


def hypergraph_to_dict(h: OrientedHypergraph) -> dict:
    return {
        "vertices": [
            {"id": i + 1, "kind": x.kind, "label": x.label, "decoration": x.decoration}
            for i, x in enumerate(h.vertices)
        ],
        "hyperedges": {v: [i + 1 for i in members] for v, members in h.hyperedges},
        "orientation": {str(i + 1): list(seq) for i, seq in enumerate(h.orientation)},
    }


def _q(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', r"\""))


def hypergraph_to_dot(h: OrientedHypergraph, name: str = "H") -> str:
    """Hyperedges as boxes, hypergraph vertices as ellipses; edge labels give the cyclic position."""
    out = [f"graph {_q(name)} {{"]
    for v, members in h.hyperedges:
        out.append(f"  {_q('V_' + v)} [shape=box, label={_q('V_' + v)}];")
    for i, x in enumerate(h.vertices):
        shape = "point" if x.kind == TRUNCATION else "ellipse"
        out.append(f"  {_q(str(i + 1))} [shape={shape}, xlabel={_q(x.label)}];")
    for i, seq in enumerate(h.orientation):
        for pos, v in enumerate(seq, 1):
            out.append(f"  {_q(str(i + 1))} -- {_q('V_' + v)} [label={_q(str(pos))}];")
    out.append("}")
    return "\n".join(out) + "\n"


def configuration_to_dot(cfg: BrauerConfiguration, name: str = "Gamma") -> str:
    out = [f"graph {_q(name)} {{"]
    for v, _ in cfg.polygons:
        out.append(f"  {_q('V_' + v)} [shape=box];")
    for i, nu in enumerate(cfg.multiplicities):
        out.append(f"  {_q(f'alpha{i + 1}')} [shape=ellipse, label={_q(f'alpha{i + 1} ({nu})')}];")
    for i, seq in enumerate(cfg.normal_form()[2]):
        for pos, v in enumerate(seq, 1):
            out.append(f"  {_q(f'alpha{i + 1}')} -- {_q('V_' + v)} [label={_q(str(pos))}];")
    out.append("}")
    return "\n".join(out) + "\n"


def check_pair_source(src: SourceFile) -> PairReport:
    return validate_pair(src.quiver(), src.cycles, src.mults)
