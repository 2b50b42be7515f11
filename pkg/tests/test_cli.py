"""CLI smoke tests: reports, determinism, exit codes."""

import json
import subprocess
import sys
from pathlib import Path


def _run(*args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "stratal.cli", *args],
        capture_output=True,
        text=True,
        **kw,
    )


def test_ih_torus_zero():
    r = _run("ih", "--space", "t2_7", "--perversity", "zero")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["betti"] == [1, 2, 1]
    assert doc["coefficients"] == "R0"


def test_ih_suspension_lower_middle():
    r = _run("ih", "--space", "susp_t2", "--perversity", "lower-middle")
    doc = json.loads(r.stdout)
    assert doc["betti"] == [1, 2, 0, 1]


def test_ih_from_weights_pairs_with_dual_middle():
    r = _run("ih", "--space", "susp_t2", "--perversity", "from-weights")
    doc = json.loads(r.stdout)
    # unit weights give the upper middle perversity, the dual of lower-middle
    assert doc["betti"] == [1, 0, 2, 1]
    assert set(doc["perversity_used"]["values"].values()) == {1}
    r2 = _run("ih", "--space", "susp_t2", "--perversity", "upper-middle")
    assert json.loads(r2.stdout)["betti"] == doc["betti"]


def test_ih_cobetti_and_generators():
    r = _run("ih", "--space", "s1_hex", "--perversity", "zero",
             "--cobetti", "--emit-generators")
    doc = json.loads(r.stdout)
    assert doc["cobetti"] == doc["betti"] == [1, 1]
    assert set(doc["chain_basis"]) == {"0", "1"}
    assert len(doc["chain_basis"]["1"]) == 6


def test_cone_command():
    r = _run("cone", "--link-betti", "1,2,1", "--link-dim", "2", "--weight", "1/2")
    doc = json.loads(r.stdout)
    assert doc["max_betti"] == [1, 2, 0, 0]
    assert doc["cutoff"] == "2/1"


def test_predict_command():
    r = _run("predict", "--space", "susp_t2")
    doc = json.loads(r.stdout)
    assert doc["max_betti"] == [1, 2, 0, 1]
    assert doc["min_betti"] == [1, 0, 2, 1]
    assert doc["fredholm"] == {"ind_max": 0, "ind_min": 0}


def test_perversity_command():
    r = _run("perversity", "--dim", "4", "--spec", "upper-middle", "--dual")
    doc = json.loads(r.stdout)
    assert doc["perversity"]["values"] == {"1": -1, "2": 0, "3": 0, "4": 1}
    r = _run("perversity", "--space", "susp_t2")
    doc = json.loads(r.stdout)
    assert set(doc["p_g"]["values"].values()) == {1}
    assert set(doc["q_g"]["values"].values()) == {0}


def test_hilbert_command(tmp_path: Path):
    cfile = tmp_path / "c.json"
    cfile.write_text(json.dumps({
        "dims": [1, 2, 1],
        "differentials": [[[1], [1]], [[1, -1]]],
    }))
    r = _run("hilbert", "--complex", str(cfile))
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["cohomology"] == doc["harmonic"] == [0, 0, 0]
    vfile = tmp_path / "v.json"
    vfile.write_text(json.dumps([1, 0]))
    r = _run("hilbert", "--complex", str(cfile), "--decompose", "1",
             "--vector", str(vfile))
    doc = json.loads(r.stdout)
    parts = doc["decomposition"]
    assert parts["harmonic"] == {}
    assert parts["exact"] == {"0": "1/2", "1": "1/2"}
    assert parts["coexact"] == {"0": "1/2", "1": "-1/2"}


def test_verify_suite_exit_codes(tmp_path: Path):
    r = _run("verify", "--suite", "hunsicker", "--quiet")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["pass"] is True
    # a tampered corpus makes the mil whole-space check fail -> exit 1
    build = _run("corpus-build", "--out", str(tmp_path))
    assert build.returncode == 0
    st = tmp_path / "susp_t2.json"
    doc = json.loads(st.read_text())
    doc["weights"] = {k: "1/4" for k in doc["weights"]}
    st.write_text(json.dumps(doc))
    r = _run("verify", "--suite", "mil", "--corpus-dir", str(tmp_path), "--quiet")
    assert r.returncode == 1
    assert json.loads(r.stdout)["pass"] is False


def test_corpus_list():
    r = _run("corpus-list")
    doc = json.loads(r.stdout)
    names = [s["name"] for s in doc["spaces"]]
    assert len(names) >= 8
    assert "susp_t2" in names
    susp = next(s for s in doc["spaces"] if s["name"] == "susp_t2")
    assert susp["singular_strata"] == 2
    cone_half = next(s for s in doc["spaces"] if s["name"] == "cone_s1_c_half")
    weights = [e.get("weight") for e in cone_half["strata"] if e["singular"]]
    assert weights == ["1/2"]


def test_reports_are_byte_stable():
    for args in (
        ("ih", "--space", "susp_t2", "--perversity", "top"),
        ("verify", "--suite", "cone-local", "--quiet"),
        ("corpus-list",),
    ):
        a = _run(*args).stdout
        b = _run(*args).stdout
        assert a == b


def test_load_error_exit_code(tmp_path: Path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dimension": 2, "vertices": [0, 1]}')
    r = _run("ih", "--space", str(bad), "--perversity", "zero")
    assert r.returncode == 2
    assert "maximal_simplices" in r.stderr
    r = _run("ih", "--space", "no_such_space", "--perversity", "zero")
    assert r.returncode == 2
    r = _run("ih", "--space", "susp_t2", "--perversity", "bogus")
    assert r.returncode == 2


def test_malformed_json_no_traceback(tmp_path: Path):
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    r = _run("ih", "--space", str(bad), "--perversity", "zero")
    assert r.returncode == 2
    assert "Traceback" not in r.stderr
