"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Every identity here is exact, so there are no numeric tolerances. Run with
``pytest tests/test_acceptance.py`` and read the summary at the end, or add
``-s`` to see the lines as they happen.
"""

import io
import itertools
from collections import Counter

import pytest

from almost_gentle import (
    admissible_cuts,
    brute_force_basis,
    canonical_cut,
    configuration_of_pair,
    corpus,
    cut_algebra,
    dimension,
    format_presentation,
    hypergraph_of,
    hypergraphs_isomorphic,
    invariant_signature,
    maximal_paths,
    pairs_isomorphic,
    reduce_to_configuration,
    star,
    star_dimension,
    validate_pair,
    verify_star_iso,
)
from almost_gentle.cli import run
from almost_gentle.hypergraph import PATH

from conftest import generated

RESULTS: list[str] = []


def report(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def instances():
    return list(corpus.presentations().values()) + generated(500)


@pytest.fixture(scope="module")
def named():
    return corpus.presentations()


def test_c01_dimension_formula(instances, named):
    bad = [
        p.name for p in instances
        if dimension(p) != len(brute_force_basis(p, len(p.quiver.arrows) + 1))
    ]
    ok = not bad and dimension(named["AG1"]) == dimension(named["AG2"]) == 11
    report(1, "dimension equals brute-force basis count", ok,
           f"{len(instances)} instances, mismatches {bad[:5]}")


def test_c02_doubling(instances, named):
    bad = [p.name for p in instances if star_dimension(p) != 2 * dimension(p)]
    ok = not bad and star_dimension(named["AG1"]) == 22
    report(2, "star dimension is twice the dimension", ok, f"mismatches {bad[:5]}")


def test_c03_defining_pair(instances, named):
    bad = []
    for p in instances:
        pair = star(p).pair
        cycles = [c.representative for c in pair.classes]
        rep = validate_pair(pair.quiver, cycles, [c.multiplicity for c in pair.classes])
        if not rep.ok:
            bad.append(p.name)
    lengths = sorted((c.length for c in star(named["AG1"]).pair.classes), reverse=True)
    ok = not bad and lengths == [4, 2, 2]
    report(3, "star(p) is a defining pair", ok, f"AG1 class lengths {lengths}, failures {bad[:5]}")


def test_c04_star_isomorphism(instances):
    bad = []
    for p in instances:
        rep = verify_star_iso(p)
        if not (rep.passed and rep.generated == 2 * dimension(p)):
            bad.append(p.name)
    report(4, "relations vanish in T(A) and the images generate it", not bad, f"failures {bad[:5]}")


def test_c05_cut_recovery(instances):
    bad = []
    for p in instances:
        sa = star(p)
        if format_presentation(cut_algebra(sa.pair, canonical_cut(sa))) != format_presentation(p):
            bad.append(p.name)
    report(5, "canonical cut prints identically to the original", not bad, f"failures {bad[:5]}")


def test_c06_reextension(named):
    bad = []
    ag1_dims = set()
    total = 0
    for name in ("AG1", "LOOP", "LIN", "A2CYC"):
        pair = star(named[name]).pair
        for d in admissible_cuts(pair):
            total += 1
            a = cut_algebra(pair, d)
            if pairs_isomorphic(star(a).pair, pair) is None:
                bad.append(f"{name}/{d}")
            if name == "AG1":
                ag1_dims.add((dimension(a), len(a.quiver.vertices)))
    n_ag1 = sum(1 for _ in admissible_cuts(star(named["AG1"]).pair))
    ok = not bad and n_ag1 == 16 and ag1_dims == {(11, 3)}
    report(6, "every cut algebra re-extends to the same pair", ok,
           f"{total} cuts, AG1 cuts {n_ag1}, AG1 (dim, vertices) {sorted(ag1_dims)}, failures {bad[:5]}")


def test_c07_hypergraph_agreement(instances):
    bad = [
        p.name for p in instances
        if reduce_to_configuration(hypergraph_of(p)) != configuration_of_pair(star(p).pair)
    ]
    report(7, "reduced hypergraph equals the Brauer configuration", not bad, f"failures {bad[:5]}")


def test_c08_worked_example(tmp_path, named):
    paths = []
    for name in ("AG1", "AG2"):
        f = tmp_path / f"{name.lower()}.alg"
        f.write_text(corpus.source(name), encoding="utf-8")
        paths.append(str(f))
    out, err = io.StringIO(), io.StringIO()
    code = run(["compare", *paths], out, err)
    text = out.getvalue()
    witness = "vertex map:" in text and "hyperedge map:" in text and " -> " in text
    h = hypergraph_of(named["AG1"])
    edges = {v: sorted(i + 1 for i in m) for v, m in h.hyperedges}
    documented = "{1, 1, 2}" in corpus.source("AG1") and "V_v1 = {1, 1, 1, 2}" in corpus.source("AG1")
    ok = (
        code == 0 and witness and documented
        and edges == {"v1": [1, 1, 1, 2], "v2": [1, 2, 3], "v3": [3, 4]}
    )
    report(8, "AG1 and AG2 have isomorphic trivial extensions", ok,
           f"exit {code}, hyperedges {edges}")


def test_c09_negative_controls():
    pool = [hypergraph_of(p) for p in generated(120, seed=7)]
    checked = 0
    wrong = []
    for h1, h2 in itertools.combinations(pool, 2):
        if invariant_signature(h1) == invariant_signature(h2):
            continue
        checked += 1
        if hypergraphs_isomorphic(h1, h2) is not None or hypergraphs_isomorphic(h1, h2, prefilter=False) is not None:
            wrong.append(checked)
        if checked >= 200:
            break
    ok = checked >= 50 and not wrong
    report(9, "distinguishable hypergraphs are reported non-isomorphic", ok,
           f"{checked} pairs, wrong {len(wrong)}")


def test_c10_properties():
    bad = []
    instances = generated(500)
    for p in instances:
        q = p.quiver
        mps = maximal_paths(p)
        used = Counter(a for m in mps for a in m.arrows)
        if sorted(used) != sorted(q.arrow_names) or any(n != 1 for n in used.values()):
            bad.append((p.name, "partition"))
        if any(len(set(m.arrows)) != len(m.arrows) for m in mps):
            bad.append((p.name, "repeat"))
        h = hypergraph_of(p)
        if any(len(members) < 2 for _, members in h.hyperedges):
            bad.append((p.name, "hyperedge"))
        for x, seq in zip(h.vertices, h.orientation):
            if x.kind == PATH and len(seq) != len(x.label.split()) + 1:
                bad.append((p.name, "orientation"))
    report(10, "maximal path and hypergraph properties", not bad,
           f"{len(instances)} instances, failures {bad[:5]}")
