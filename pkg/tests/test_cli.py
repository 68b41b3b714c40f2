import io
import json

import pytest

from almost_gentle import corpus
from almost_gentle.cli import run


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name in corpus.NAMES:
        f = tmp_path / f"{name.lower()}.alg"
        f.write_text(corpus.source(name), encoding="utf-8")
        paths[name] = str(f)
    return paths


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_validate(files):
    code, out, _ = cli("validate", files["AG1"])
    assert code == 0 and "AG1: almost gentle" in out and "gentle: no" in out
    code, out, _ = cli("validate", "--json", files["LIN"])
    d = json.loads(out)
    assert code == 0 and d["format"] == 1 and d["is_gentle"] is True


def test_validate_failure(tmp_path):
    f = tmp_path / "bad.alg"
    f.write_text("vertices v\narrow x v v\n")
    code, out, _ = cli("validate", str(f))
    assert code == 1 and "not almost gentle" in out


def test_info(files):
    code, out, _ = cli("info", files["AG1"])
    assert code == 0
    assert "dimension: 11" in out
    assert "maximal paths: 3" in out
    assert "gentle: no" in out
    assert "finite global dimension: no" in out
    d = json.loads(cli("info", "--json", files["AG1"])[1])
    assert d["maximal_paths"] == [["a1", "a2", "a3"], ["b"], ["c"]]


def test_trivext_and_cuts(files, tmp_path):
    star_file = tmp_path / "ag1star.alg"
    code, out, _ = cli("trivext", files["AG1"], "-o", str(star_file))
    assert code == 0 and out == ""
    code, out, _ = cli("validate", str(star_file))
    assert code == 0 and "valid defining pair" in out
    code, out, _ = cli("cuts", str(star_file), "--list")
    assert code == 0 and out.startswith("16 admissible cuts\n")
    assert len(out.splitlines()) == 17
    code, out, _ = cli("cuts", str(star_file), "--apply", "a_m1,a_m2,a_m3")
    assert code == 0 and out == _canonical(files["AG1"])
    code, out, _ = cli("info", str(star_file))
    assert code == 0 and "admissible cuts: 16" in out


def _canonical(path):
    from almost_gentle import format_presentation, parse
    with open(path, encoding="utf-8") as fh:
        return format_presentation(parse(fh.read()))


def test_cuts_of_presentation(files):
    code, out, _ = cli("cuts", "--json", files["LOOP"], "--list")
    d = json.loads(out)
    assert code == 0 and d["count"] == 2 and d["cuts"] == [["x"], ["a_m1"]]


def test_bad_cut(files):
    code, _, err = cli("cuts", files["AG1"], "--apply", "a1")
    assert code == 2 and "error" in err


def test_hypergraph(files):
    code, out, _ = cli("hypergraph", files["AG1"])
    assert code == 0 and "V_v1 = {1, 1, 1, 2}" in out and "V_v3 = {3, 4}" in out
    d = json.loads(cli("hypergraph", "--json", files["AG1"])[1])
    assert d["format"] == 1 and d["hyperedges"]["v2"] == [1, 2, 3]
    code, out, _ = cli("hypergraph", "--dot", files["AG1"])
    assert code == 0 and out.startswith("graph")


def test_compare(files):
    code, out, _ = cli("compare", files["AG1"], files["AG2"])
    assert code == 0
    assert out.startswith("trivial extensions isomorphic\n")
    assert "1:a1 a2 a3 -> 1:a1 a2 a3" in out and "V_v3 -> V_v3" in out
    code, out, _ = cli("compare", "--json", files["LIN"], files["LOOP"])
    d = json.loads(out)
    assert code == 1 and d["isomorphic"] is False and d["vertex_map"] is None


def test_compare_pair_and_presentation(files, tmp_path):
    star_file = tmp_path / "s.alg"
    cli("trivext", files["AG2"], "-o", str(star_file))
    code, out, _ = cli("compare", "--json", files["AG1"], str(star_file))
    d = json.loads(out)
    assert code == 0 and d["method"] == "defining_pair" and d["arrow_map"]


def test_compare_undecided(tmp_path):
    f = tmp_path / "loops.alg"
    body = "vertices v\n" + "".join(f"arrow x{i} v v\n" for i in range(4))
    body += "".join(f"rel x{i} x{j}\n" for i in range(4) for j in range(4))
    f.write_text(body)
    code, _, err = cli("compare", "--budget", "1", str(f), str(f))
    assert code == 3 and "undecided" in err


def test_verify(files):
    for name in corpus.NAMES:
        code, out, _ = cli("verify", files[name])
        assert code == 0 and "PASS" in out
    d = json.loads(cli("verify", "--json", files["AG1"])[1])
    assert d["passed"] and d["star_dimension"] == d["trivial_extension_dimension"] == 22


def test_usage_errors(files, tmp_path):
    assert cli()[0] == 2
    assert cli("frobnicate")[0] == 2
    assert cli("info", str(tmp_path / "missing.alg"))[0] == 2
    bad = tmp_path / "bad.alg"
    bad.write_text("vertices u v w\narrow a u v\narrow c w u\nrel a c\n")
    code, _, err = cli("info", str(bad))
    assert code == 2 and ":4:7:" in err
    star_file = tmp_path / "s.alg"
    cli("trivext", files["LIN"], "-o", str(star_file))
    assert cli("hypergraph", str(star_file))[0] == 2


def test_not_almost_gentle_exit(tmp_path):
    f = tmp_path / "inf.alg"
    f.write_text("vertices v\narrow x v v\n")
    code, _, err = cli("trivext", str(f))
    assert code == 1 and "error" in err


@pytest.mark.parametrize("cmd", [["info", "--json"], ["trivext"], ["hypergraph", "--json"], ["compare"], ["verify", "--json"]])
def test_deterministic(files, cmd):
    argv = cmd + [files["AG1"]] + ([files["AG2"]] if cmd[0] == "compare" else [])
    assert cli(*argv) == cli(*argv)
