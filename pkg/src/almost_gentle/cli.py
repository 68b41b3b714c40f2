"""Command line front end.

Exit codes: 0 success or isomorphic, 1 validation failure or not
isomorphic, 2 usage or parse error, 3 isomorphism search undecided.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FilePath
from typing import Optional, Sequence, TextIO

from .brauer import configuration_of_pair
from .cuts import InvalidCutError, admissible_cuts, count_cuts, cut_algebra, make_cut
from .formats import (
    ParseError,
    check_pair_source,
    configuration_to_dict,
    dumps,
    format_pair,
    format_presentation,
    hypergraph_to_dict,
    hypergraph_to_dot,
    pair_report_to_dict,
    parse,
    parse_source,
    validation_to_dict,
)
from .hypergraph import hypergraph_of, hypergraphs_isomorphic
from .iso import DEFAULT_BUDGET, SearchBudgetExceeded, pairs_isomorphic
from .pairs import DefiningPair, InvalidPairError
from .quiver import (
    NotAlmostGentleError,
    Presentation,
    dimension,
    has_finite_global_dimension,
    maximal_paths,
    validate,
)
from .trivext import star, verify_star_iso

OK, FAIL, USAGE, UNDECIDED = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _load(path: str):
    try:
        text = FilePath(path).read_text(encoding="utf-8")
    except OSError as e:
        raise _Usage(f"{path}: {e.strerror}") from None
    try:
        return parse(text)
    except ParseError as e:
        raise _Usage(f"{path}:{e}") from None


def _load_presentation(path: str) -> Presentation:
    obj = _load(path)
    if not isinstance(obj, Presentation):
        raise _Usage(f"{path}: expected a presentation, found a defining pair")
    return obj


def _as_pair(obj) -> DefiningPair:
    return obj if isinstance(obj, DefiningPair) else star(obj).pair


def cmd_validate(args, out: TextIO) -> int:
    try:
        src = parse_source(FilePath(args.file).read_text(encoding="utf-8"))
    except OSError as e:
        raise _Usage(f"{args.file}: {e.strerror}") from None
    except ParseError as e:
        raise _Usage(f"{args.file}:{e}") from None
    if src.is_pair:
        rep = check_pair_source(src)
        if args.json:
            out.write(dumps({"kind": "pair_validation", "name": src.name, **pair_report_to_dict(rep)}))
        else:
            out.write(f"{src.name}: {'valid defining pair' if rep.ok else 'invalid defining pair'}\n")
            for c in rep.classes:
                out.write(f"  class ({' '.join(c.representative)}) length {c.length} mult {c.multiplicity}\n")
            for w in rep.warnings:
                out.write(f"  warning: {w}\n")
            for e in rep.errors:
                out.write(f"  error: {e}\n")
        return OK if rep.ok else FAIL
    p = Presentation(src.quiver(), frozenset(src.relations), src.name)
    rep = validate(p)
    if args.json:
        out.write(dumps({"kind": "validation", "name": p.name, **validation_to_dict(rep)}))
    else:
        out.write(f"{p.name}: {'almost gentle' if rep.is_almost_gentle else 'not almost gentle'}\n")
        out.write(f"  finite dimensional: {_yn(rep.is_finite_dimensional)}\n")
        out.write(f"  gentle: {_yn(rep.is_gentle)}\n")
        for msg in rep.messages() + list(rep.gentle_violations):
            out.write(f"  - {msg}\n")
    return OK if rep.is_almost_gentle else FAIL


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def cmd_info(args, out: TextIO) -> int:
    obj = _load(args.file)
    if isinstance(obj, DefiningPair):
        cfg = configuration_of_pair(obj)
        if args.json:
            out.write(dumps({
                "kind": "pair_info", "name": obj.name, "cuts": count_cuts(obj),
                "classes": [list(c.representative) for c in obj.classes],
                "configuration": configuration_to_dict(cfg),
            }))
        else:
            out.write(f"defining pair {obj.name}\n")
            out.write(f"cycle classes: {len(obj.classes)}\n")
            for i, c in enumerate(obj.classes, 1):
                out.write(f"  c{i}: {' '.join(c.representative)} (length {c.length}, mult {c.multiplicity})\n")
            out.write(f"admissible cuts: {count_cuts(obj)}\n")
        return OK
    rep = obj.report
    if not rep.is_almost_gentle:
        out.write(f"{obj.name}: not almost gentle\n")
        return FAIL
    mps = maximal_paths(obj)
    info = {
        "name": obj.name,
        "vertices": len(obj.quiver.vertices),
        "arrows": len(obj.quiver.arrows),
        "dimension": dimension(obj),
        "maximal_paths": [list(m.arrows) for m in mps],
        "gentle": rep.is_gentle,
        "finite_global_dimension": has_finite_global_dimension(obj),
    }
    if args.json:
        out.write(dumps({"kind": "info", **info}))
        return OK
    out.write(f"algebra {obj.name}\n")
    out.write(f"vertices: {info['vertices']}\narrows: {info['arrows']}\n")
    out.write(f"dimension: {info['dimension']}\n")
    out.write(f"maximal paths: {len(mps)}\n")
    for m in mps:
        out.write(f"  m{m.index + 1}: {m} (length {m.length})\n")
    out.write(f"gentle: {_yn(info['gentle'])}\n")
    out.write(f"finite global dimension: {_yn(info['finite_global_dimension'])}\n")
    return OK


def cmd_trivext(args, out: TextIO) -> int:
    sa = star(_load_presentation(args.file))
    if args.json:
        text = dumps({
            "kind": "trivial_extension",
            "name": sa.pair.name,
            "new_arrows": list(sa.new_arrows),
            "classes": [list(c.representative) for c in sa.pair.classes],
            "type1": [[list(a), list(b)] for a, b in sa.relations.type1],
            "type2": [[list(c), a] for c, a in sa.relations.type2],
            "type3": [list(ab) for ab in sa.relations.type3],
        })
    else:
        text = format_pair(sa.pair)
    if args.output:
        FilePath(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return OK


def cmd_cuts(args, out: TextIO) -> int:
    pair = _as_pair(_load(args.file))
    if args.apply is None:
        cuts = list(admissible_cuts(pair))
        if args.json:
            out.write(dumps({"kind": "cuts", "count": len(cuts), "cuts": [list(c.arrows) for c in cuts]}))
        else:
            out.write(f"{len(cuts)} admissible cuts\n")
            for c in cuts:
                out.write(f"{c}\n")
        return OK
    try:
        cut = make_cut(pair, [a for a in args.apply.split(",") if a])
    except InvalidCutError as e:
        raise _Usage(str(e)) from None
    a = cut_algebra(pair, cut)
    if args.json:
        out.write(dumps({
            "kind": "cut_algebra", "cut": list(cut.arrows),
            "vertices": list(a.quiver.vertices),
            "arrows": [[x.name, x.source, x.target] for x in a.quiver.arrows],
            "relations": [list(r) for r in a.sorted_relations()],
        }))
    else:
        out.write(format_presentation(a))
    return OK


def cmd_hypergraph(args, out: TextIO) -> int:
    p = _load_presentation(args.file)
    h = hypergraph_of(p)
    if args.dot:
        out.write(hypergraph_to_dot(h, p.name))
    elif args.json:
        out.write(dumps({"kind": "hypergraph", "name": p.name, **hypergraph_to_dict(h)}))
    else:
        out.write(f"hypergraph of {p.name}\n")
        for i, x in enumerate(h.vertices, 1):
            out.write(f"  {i}: {x.label} ({x.kind})\n")
        for v, members in h.hyperedges:
            out.write(f"  V_{v} = {{{', '.join(str(i + 1) for i in members)}}}\n")
        for i, seq in enumerate(h.orientation, 1):
            out.write(f"  at {i}: {' < '.join('V_' + v for v in seq)}\n")
    return OK


def cmd_compare(args, out: TextIO) -> int:
    x, y = _load(args.file1), _load(args.file2)
    if isinstance(x, Presentation) and isinstance(y, Presentation):
        hx, hy = hypergraph_of(x), hypergraph_of(y)
        iso = hypergraphs_isomorphic(hx, hy, budget=args.budget)
        vmap = None if iso is None else {
            f"{i + 1}:{hx.vertices[i].label}": f"{j + 1}:{hy.vertices[j].label}"
            for i, j in sorted(iso.vertex_map.items())
        }
        emap = None if iso is None else {f"V_{a}": f"V_{b}" for a, b in iso.edge_map.items()}
        method = "hypergraph"
    else:
        iso = pairs_isomorphic(_as_pair(x), _as_pair(y), budget=args.budget)
        vmap = None if iso is None else dict(iso.vertex_map)
        emap = None if iso is None else dict(iso.arrow_map)
        method = "defining_pair"
    verdict = iso is not None
    if args.json:
        out.write(dumps({
            "kind": "compare", "method": method, "isomorphic": verdict,
            "vertex_map": vmap, "edge_map" if method == "hypergraph" else "arrow_map": emap,
        }))
    else:
        out.write("trivial extensions isomorphic\n" if verdict else "trivial extensions not isomorphic\n")
        if verdict:
            out.write("vertex map:\n")
            for a, b in vmap.items():
                out.write(f"  {a} -> {b}\n")
            out.write("hyperedge map:\n" if method == "hypergraph" else "arrow map:\n")
            for a, b in emap.items():
                out.write(f"  {a} -> {b}\n")
    return OK if verdict else FAIL


def cmd_verify(args, out: TextIO) -> int:
    rep = verify_star_iso(_load_presentation(args.file))
    if args.json:
        out.write(dumps({
            "kind": "verify", "name": rep.name, "passed": rep.passed,
            "relations_checked": len(rep.checks),
            "star_dimension": rep.star_dimension,
            "trivial_extension_dimension": rep.trivial_extension_dimension,
            "generated": rep.generated,
            "checks": [
                {"kind": c.kind, "relation": c.relation, "image": c.value, "ok": c.ok}
                for c in rep.checks + rep.socle_checks
            ],
        }))
    else:
        counts = {}
        for c in rep.checks:
            counts[c.kind] = counts.get(c.kind, 0) + 1
        out.write(f"{rep.name}: {'PASS' if rep.passed else 'FAIL'}\n")
        for kind in ("type1", "type2", "type3"):
            bad = sum(1 for c in rep.checks if c.kind == kind and not c.ok)
            out.write(f"  {kind}: {counts.get(kind, 0)} relations, {bad} nonzero images\n")
        out.write(f"  cycles at a vertex map to its socle element: "
                  f"{sum(c.ok for c in rep.socle_checks)}/{len(rep.socle_checks)}\n")
        out.write(f"  dim A* = {rep.star_dimension}, dim T(A) = {rep.trivial_extension_dimension}\n")
        out.write(f"  generated basis elements: {rep.generated}/{rep.trivial_extension_dimension}\n")
        for f in rep.failures:
            out.write(f"  failed: {f}\n")
    return OK if rep.passed else FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="write reports as JSON")
    parser = argparse.ArgumentParser(prog="almost-gentle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the almost gentle or defining-pair axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", parents=[common], help="dimension, maximal paths and homological data")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("trivext", parents=[common], help="print the trivial extension as a defining pair")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_trivext)

    p = sub.add_parser("cuts", parents=[common], help="list or apply admissible cuts")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--apply", metavar="A1,A2,...")
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("hypergraph", parents=[common], help="the oriented hypergraph")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_hypergraph)

    p = sub.add_parser("compare", parents=[common], help="decide whether two trivial extensions are isomorphic")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", parents=[common], help="check the trivial extension construction")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args, out)
    except _Usage as e:
        err.write(f"error: {e}\n")
        return USAGE
    except (InvalidPairError, NotAlmostGentleError) as e:
        err.write(f"error: {e}\n")
        return FAIL
    except SearchBudgetExceeded as e:
        err.write(f"undecided: {e}\n")
        return UNDECIDED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
