from __future__ import annotations

import json
import subprocess
import sys

import pytest

from basicqh.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_census_rank_bound_is_empty(capsys):
    code, out, _ = run(["census", "--modulus", "25", "--rank", "2", "--filter", "upsilon-coprime"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["result"]["count"] == 0 and obj["result"]["data"] == []
    assert obj["config"]["modulus"] == 25


def test_census_json_is_byte_stable_and_width_independent(capsys):
    argv = ["census", "--modulus", "13", "--rank", "2", "--filter", "finite-cartan"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    _, c, _ = run(argv + ["--workers", "2"], capsys)
    assert a == b
    assert json.loads(a)["result"] == json.loads(c)["result"]


def test_census_table_has_type_column(capsys):
    code, out, _ = run(["census", "--modulus", "13", "--rank", "2", "--format", "table"], capsys)
    assert code == 0
    assert out.splitlines()[0].split()[:2] == ["pairs", "type"]
    assert "A2" in out


def test_cocycle_table_lists_27_entries(capsys):
    code, out, _ = run(["cocycle", "--m", "3", "--s", "1", "--format", "table"], capsys)
    rows = out.splitlines()
    assert code == 0 and len(rows) == 27
    keys = [tuple(int(x) for x in r.split()[0].split(",")) for r in rows]
    assert keys == sorted(keys)


def test_cocycle_json(capsys):
    code, out, _ = run(["cocycle", "--m", "5"], capsys)
    res = json.loads(out)["result"]
    assert code == 0 and set(res) == {"0", "1", "2", "3", "4"}
    assert all(v["is_cocycle"] for v in res.values())


def test_twist(capsys):
    code, out, _ = run(["twist", "--m", "3", "--s", "1"], capsys)
    res = json.loads(out)["result"]["1"]
    assert code == 0 and res["counit_ok"] and res["coboundary_ok"]
    assert res["J"]["arity"] == 2


def test_upsilon_and_classes_and_obstruction(capsys):
    _, out, _ = run(["upsilon", "--m", "5", "--pairs", "1,1,7,18"], capsys)
    assert json.loads(out)["result"]["values"] == []
    _, out, _ = run(["classes", "--p", "5", "--n", "1"], capsys)
    assert json.loads(out)["result"]["orbits"] == [[1, 4], [2, 3]]
    code, out, _ = run(["obstruction", "--m", "13", "--type", "A2", "--d", "3,9"], capsys)
    assert code == 0 and json.loads(out)["result"]["elements"][0]["lambda"] == "q^2"


def test_semisimple(capsys):
    code, out, _ = run(["semisimple", "--m", "5", "--s", "2"], capsys)
    assert code == 0 and json.loads(out)["result"]["2"]["certified"]


def test_build_hopf_round_trip_and_mutation(tmp_path, capsys):
    path = tmp_path / "h.json"
    code, _, _ = run(["build-hopf", "--m", "3", "--pairs", "1,1", "--out", str(path)], capsys)
    assert code == 0
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 0 and json.loads(out)["result"]["certified"]
    obj = json.loads(path.read_text())
    ent = obj["result"]["counit"]
    ent[0][1]["coeffs"][0] = [2, 1]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    code, out, _ = run(["verify", str(bad)], capsys)
    rep = json.loads(out)["result"]
    assert code == 1 and not rep["certified"] and rep["witness"]


def test_build_ahs_m3(capsys):
    code, out, _ = run(["build-ahs", "--m", "3", "--pairs", "1,1", "--s", "1"], capsys)
    assert code == 0 and json.loads(out)["result"]["certified"]
    code, out, _ = run(["build-ahs", "--m", "3", "--pairs", "1,1", "--s", "2"], capsys)
    assert code == 1
    code, out, _ = run(["build-ahs", "--m", "3", "--pairs", "1,1", "--sweep"], capsys)
    res = json.loads(out)["result"]
    assert code == 0 and res["empirical_upsilon"] == [1] and res["agrees"]


@pytest.mark.slow
def test_build_ahs_m5_certified(capsys):
    code, out, _ = run(["build-ahs", "--m", "5", "--pairs", "1,1", "--s", "1"], capsys)
    res = json.loads(out)["result"]
    assert code == 0 and res["certified"] and res["presentation"]["dimension"] == 125


@pytest.mark.parametrize("argv", [
    ["bogus"],
    [],
    ["census", "--modulus", "25"],
    ["census", "--modulus", "200", "--rank", "2"],
    ["census", "--modulus", "25", "--rank", "2", "--filter", "nope"],
    ["cocycle", "--m", "3", "--unknown"],
    ["build-ahs", "--m", "3", "--pairs", "1,1"],
    ["build-hopf", "--m", "3", "--pairs", "1"],
    ["verify", "/nonexistent.json"],
])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and "error" in err


def test_console_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "basicqh", "classes", "--p", "3", "--n", "2", "--format", "table"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "computed=" in p.stdout
