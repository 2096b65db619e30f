"""End-to-end tests for the command-line interface.

Every test drives ``main(argv)`` directly and inspects the JSON written to
stdout or to ``--out`` files, plus the process exit code contract:
0 success, 1 verification/consistency failure, 2 input error, 3 unsupported.
"""

import io
import json

import pytest

from indmorse.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def write_graph(tmp_path, name, n, edges, labels=None):
    obj = {"n": n, "edges": edges}
    if labels is not None:
        obj["labels"] = labels
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


@pytest.fixture
def p5(tmp_path):
    return write_graph(tmp_path, "p5.json", 5, [[0, 1], [1, 2], [2, 3], [3, 4]])


@pytest.fixture
def c4(tmp_path):
    return write_graph(tmp_path, "c4.json", 4, [[0, 1], [1, 2], [2, 3], [0, 3]])


# ── gen ──────────────────────────────────────────────────────

def test_gen_grid_unit(capsys):
    code, data, _ = run_json(
        capsys, "gen", "grid", "--m", "1", "--n", "1", "--sizes", "1,1,1,1"
    )
    assert code == 0
    assert data["n"] == 4
    assert data["labels"] == [[0, 0], [0, 1], [1, 0], [1, 1]]
    edges = {tuple(e) for e in data["edges"]}
    assert edges == {(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)}


def test_gen_grid_wrong_sizes_arity(capsys):
    code, out, err = run(
        capsys, "gen", "grid", "--m", "1", "--n", "1", "--sizes", "1,1,1"
    )
    assert code == 2
    assert out == ""
    assert "--sizes needs 4 entries" in err


def test_gen_power_z6(capsys):
    code, data, _ = run_json(
        capsys, "gen", "power", "--p", "2", "--q", "3", "--m", "1", "--n", "1"
    )
    assert code == 0
    assert data["n"] == 6
    # K6 minus the two pairs joining the order-2 element to the order-3 ones.
    assert len(data["edges"]) == 13


def test_gen_standard_kinds(capsys):
    code, data, _ = run_json(capsys, "gen", "cycle", "--n", "5")
    assert code == 0
    assert data["n"] == 5 and len(data["edges"]) == 5

    code, data, _ = run_json(capsys, "gen", "empty", "--n", "3")
    assert code == 0
    assert data["edges"] == []


def test_gen_chordal_random_seed_determinism(capsys):
    runs = [
        run(capsys, "gen", "chordal-random", "--n", "9", "--density", "0.5",
            "--seed", "42")
        for _ in range(2)
    ]
    assert runs[0] == runs[1] and runs[0][0] == 0

    code, other, _ = run(
        capsys, "gen", "chordal-random", "--n", "9", "--density", "0.5",
        "--seed", "43"
    )
    assert code == 0 and other != runs[0][1]


def test_gen_without_kind(capsys):
    assert run(capsys, "gen")[0] == 2


def test_no_command_prints_help(capsys):
    code, out, _ = run(capsys)
    assert code == 2
    assert "usage:" in out


# ── analyze ──────────────────────────────────────────────────

def test_analyze_path_explicit(capsys, p5):
    code, data, _ = run_json(capsys, "analyze", p5)
    assert code == 0
    assert data["mode"] == "explicit"
    assert data["driver"] == "auto"
    assert data["critical_f"] == [1, 1]
    assert data["homotopy"] == {"wedge": [0, 1]}
    assert data["special_zero"] is not None
    assert data["graph"]["chordal"] is True
    assert "betti" not in data and "timings" not in data


def test_analyze_oracle_and_gamma(capsys, p5):
    code, data, _ = run_json(
        capsys, "analyze", p5, "--driver", "chordal", "--oracle", "--gamma"
    )
    assert code == 0
    assert data["driver"] == "chordal"
    assert data["betti"] == [1, 1, 0]
    assert data["torsion_free"] == [True, True, True]
    assert data["oracle_consistent"] is True
    assert data["gamma"] == 2
    assert data["gamma_bound_ok"] is True


def test_analyze_auto_rejects_cycle(capsys, c4):
    code, out, err = run(capsys, "analyze", c4)
    assert code == 3
    assert out == ""
    assert "error:" in err


def test_analyze_counts_grid_with_table(capsys, tmp_path):
    gpath = str(tmp_path / "grid.json")
    assert run(
        capsys, "gen", "grid", "--m", "1", "--n", "1", "--sizes", "1,1,1,1",
        "--out", gpath,
    )[0] == 0
    code, data, _ = run_json(
        capsys, "analyze", gpath, "--mode", "counts", "--driver", "grid",
        "--table",
    )
    assert code == 0
    assert data["critical_f"] == [3]
    assert data["homotopy"] == {"wedge": [2]}
    assert data["table"] == {"0,1": [1]}
    assert data["graph"]["grid"] == {"m": 1, "n": 1, "sizes": [[1, 1], [1, 1]]}


def test_analyze_counts_chordal(capsys, p5):
    code, data, _ = run_json(capsys, "analyze", p5, "--mode", "counts")
    assert code == 0
    assert data["critical_f"] == [1, 1]
    assert data["homotopy"] == {"wedge": [0, 1]}
    assert "special_zero" not in data


def test_analyze_counts_chordal_driver_rejects_cycle(capsys, c4):
    code = run(capsys, "analyze", c4, "--mode", "counts", "--driver", "chordal")[0]
    assert code == 2


def test_analyze_counts_auto_rejects_cycle(capsys, c4):
    assert run(capsys, "analyze", c4, "--mode", "counts")[0] == 3


def test_analyze_seed_and_timings_keys(capsys, p5):
    code, data, _ = run_json(
        capsys, "analyze", p5, "--seed", "7", "--timings"
    )
    assert code == 0
    assert data["seed"] == 7
    assert "build_s" in data["timings"] and "total_s" in data["timings"]


def test_analyze_from_stdin(capsys, monkeypatch):
    payload = json.dumps({"n": 3, "edges": [[0, 1], [1, 2]]})
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, data, _ = run_json(capsys, "analyze", "-")
    assert code == 0
    assert data["critical_f"] == [2]


# ── match / verify round trip ────────────────────────────────

def test_match_then_verify_roundtrip(capsys, p5, tmp_path):
    mpath = str(tmp_path / "match.json")
    code, _, _ = run(capsys, "match", p5, "--pairs", "--out", mpath)
    assert code == 0
    saved = json.loads(open(mpath, encoding="utf-8").read())
    assert saved["critical_f"] == [1, 1]
    assert saved["driver"] == "auto"
    assert all(len(b) == len(a) + 1 for a, b in saved["pairs"])

    # The match output embeds a "pairs" key, so it doubles as verify input.
    code, data, _ = run_json(capsys, "verify", p5, mpath)
    assert code == 0
    assert data["ok"] is True
    assert data["critical_f"] == [1, 1]
    assert len(data["critical"]["0"]) == 1 and len(data["critical"]["1"]) == 1


def test_verify_explicit_field(capsys, tmp_path):
    g = write_graph(tmp_path, "e2.json", 2, [])
    m = tmp_path / "m.json"
    m.write_text(json.dumps([[[], [0]], [[1], [0, 1]]]), encoding="utf-8")
    code, data, _ = run_json(capsys, "verify", g, str(m))
    assert code == 0
    assert data == {"ok": True, "critical_f": [1], "critical": {"0": [[0]]}}


def test_verify_shared_simplex_fails(capsys, tmp_path):
    g = write_graph(tmp_path, "e3.json", 3, [])
    m = tmp_path / "m.json"
    m.write_text(json.dumps([[[], [0]], [[], [1]]]), encoding="utf-8")
    code, data, _ = run_json(capsys, "verify", g, str(m))
    assert code == 1
    assert data["ok"] is False
    assert "error" in data


def test_verify_cyclic_triangle_field_fails(capsys, tmp_path):
    g = write_graph(tmp_path, "e3.json", 3, [])
    m = tmp_path / "m.json"
    pairs = [[[0], [0, 1]], [[1], [1, 2]], [[2], [0, 2]]]
    m.write_text(json.dumps(pairs), encoding="utf-8")
    code, data, _ = run_json(capsys, "verify", g, str(m))
    assert code == 1
    assert data["ok"] is False
    assert data["error"] == "matching has a directed cycle"
    assert len(data["cycle"]) >= 3


def test_verify_bad_vertex_in_pair(capsys, tmp_path):
    g = write_graph(tmp_path, "e2.json", 2, [])
    m = tmp_path / "m.json"
    m.write_text(json.dumps([[[0], [0, 5]]]), encoding="utf-8")
    assert run(capsys, "verify", g, str(m))[0] == 2


def test_match_dot_dump(capsys, tmp_path):
    g = write_graph(tmp_path, "p3.json", 3, [[0, 1], [1, 2]])
    dot = tmp_path / "hasse.dot"
    code, data, _ = run_json(capsys, "match", g, "--dot", str(dot))
    assert code == 0
    text = dot.read_text(encoding="utf-8")
    assert text.startswith("digraph hasse {")
    # I(P3) has five cover relations, two of them matched (drawn in red):
    # five faces including the empty set, two critical, so two pairs.
    assert data["critical_f"] == [2]
    arrows = [ln for ln in text.splitlines() if "->" in ln]
    assert len(arrows) == 5
    assert sum("[color=red]" in ln for ln in arrows) == 2


def test_match_dot_respects_cap(capsys, tmp_path):
    g = write_graph(tmp_path, "e8.json", 8, [])
    code = run(capsys, "match", g, "--dot", str(tmp_path / "x.dot"))[0]
    assert code == 2


# ── homology / compare ───────────────────────────────────────

def test_homology_cycle5(capsys, tmp_path):
    g = write_graph(
        tmp_path, "c5.json", 5, [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]
    )
    code, data, _ = run_json(capsys, "homology", g)
    assert code == 0
    assert data == {"betti": [1, 1], "torsion_free": [True, True]}


def test_compare_chordal(capsys, p5):
    code, data, _ = run_json(capsys, "compare", p5)
    assert code == 0
    assert data["agree"] is True
    assert data["driver"] == "chordal"
    assert data["critical_f"] == data["counts_f"] == [1, 1]
    assert "grid_f" not in data


def test_compare_grid(capsys, tmp_path):
    gpath = str(tmp_path / "grid.json")
    run(capsys, "gen", "grid", "--m", "2", "--n", "1",
        "--sizes", "1,2,2,1,1,2", "--out", gpath)
    code, data, _ = run_json(capsys, "compare", gpath)
    assert code == 0
    assert data["agree"] is True
    assert data["driver"] == "grid"
    assert data["grid_f"] == data["critical_f"] == data["counts_f"]


# ── output plumbing and errors ───────────────────────────────

def test_reports_are_byte_stable(capsys, p5, tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    for path in (a, b):
        assert run(capsys, "analyze", p5, "--oracle", "--out", path)[0] == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_pretty_matches_compact(capsys, p5):
    _, compact, _ = run(capsys, "analyze", p5)
    _, pretty, _ = run(capsys, "analyze", p5, "--pretty")
    assert pretty.count("\n") > compact.count("\n")
    assert json.loads(pretty) == json.loads(compact)


def test_malformed_json_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run(capsys, "analyze", str(bad))[0] == 2


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "nope.json"))[0] == 2


def test_malformed_graph_object(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2}), encoding="utf-8")
    code, out, err = run(capsys, "analyze", str(bad))
    assert code == 2
    assert "malformed graph JSON" in err or '"n" and "edges"' in err
