import csv
import io
import json
import shutil

import pytest

from conftest import TREFOIL
from kashaev.catalog import catalog_dir
from kashaev.cli import main, v_grid


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_faces(capsys):
    code, out, _ = run(capsys, "faces", "U", "--json")
    data = json.loads(out)
    assert code == 0 and sorted(data["winding"].values()) == [0, 1]
    code, out, _ = run(capsys, "faces", TREFOIL)
    assert code == 0 and out.startswith("5 faces")
    code, out, _ = run(capsys, "faces", TREFOIL, "--exterior", "3", "--json")
    assert json.loads(out)["winding"]["3"] == 0


def test_faces_errors(capsys):
    code, _, err = run(capsys, "faces", "X(1,2,3)")
    assert code == 2 and "MalformedSyntax" in err
    assert run(capsys, "faces", "U", "--exterior", "9")[0] == 2


def test_tau(capsys):
    code, out, _ = run(capsys, "tau", "3_1_kink", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["entries"]) == 6
    assert sorted(data["entries"][i][i] for i in range(6)) == sorted(
        ["4x^2-2", "4x^2-3", "3", "4x^2-2", "-1", "-4x^2+3"])
    code, out, _ = run(capsys, "tau", "U", "--json")
    assert json.loads(out)["entries"] == [["0", "0"], ["0", "0"]]
    code, out, _ = run(capsys, "tau", "3_1", "--at", "0", "--json")
    assert json.loads(out)["entries"][0] == ["-2", "0", "1", "0", "1"]
    code, out, _ = run(capsys, "tau", "3_1", "--reduce", "--laurent", "--json")
    assert json.loads(out)["entries"][0][0] == "t + t^-1"
    code, out, _ = run(capsys, "tau", "3_1", "--reduce", "0,2")
    assert code == 2


def test_signature(capsys):
    code, out, _ = run(capsys, "signature", "3_1", "--v", "1", "--json")
    data = json.loads(out)
    assert (code, data["sigma"], data["invariant"]) == (0, -2, -4)
    code, out, _ = run(capsys, "signature", "U", "--v", "1/3", "--json")
    assert (json.loads(out)["sigma"], json.loads(out)["invariant"]) == (0, 0)
    code, out, err = run(capsys, "signature", "3_1", "--x", "2")
    assert code == 0 and "warning" in err and "invariant=" in out
    # a bare PD uses the diagram's own Seifert form
    code, out, _ = run(capsys, "signature", TREFOIL, "--v", "1", "--json")
    assert json.loads(out)["sigma"] == -2
    code, out, _ = run(capsys, "signature", "3_1", "--v", "0", "--json")
    assert code == 0 and json.loads(out)["sigma"] == 0


def test_profile(capsys, tmp_path):
    code, out, _ = run(capsys, "profile", "3_1", "--grid", "16")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and out.splitlines()[0] == "v,theta,sigma,invariant"
    assert len(rows) == 16 and {r["sigma"] for r in rows} == {"0", "-2"}
    assert all(int(r["invariant"]) == 2 * int(r["sigma"]) for r in rows)
    path = tmp_path / "u.csv"
    assert run(capsys, "profile", "U", "--out", str(path))[0] == 0
    assert {r["sigma"] for r in csv.DictReader(path.open())} == {"0"}
    again = run(capsys, "profile", "3_1", "--grid", "16")[1]
    assert again == out


def test_grid():
    g = v_grid(16)
    assert len(g) == 16 and 0 not in g and len(set(g)) == 16


def test_alexander(capsys):
    assert run(capsys, "alexander", "3_1")[1].splitlines()[1] == "Delta = t - 1 + t^-1"
    assert run(capsys, "alexander", "U")[1].splitlines()[1] == "Delta = 1"
    out = json.loads(run(capsys, "alexander", "hopf_pos", "--json")[1])
    assert out["delta"] in ("t^1/2 - t^-1/2", "-t^1/2 + t^-1/2")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "U")
    assert code == 0 and out.strip().endswith("0 failed")
    code, out, _ = run(capsys, "verify", "4_1", "--grid", "4", "--mutations", "2", "--json")
    certs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and all(c["passed"] for c in certs)
    assert {c["kind"] for c in certs} == {"main_theorem", "alexander", "kernel", "invariance"}
    assert run(capsys, "verify")[0] == 2


def test_verify_corrupted_catalog(capsys, tmp_path, monkeypatch):
    bad = tmp_path / "catalog"
    shutil.copytree(catalog_dir(), bad)
    entry = json.loads((bad / "3_1.json").read_text())
    entry["seifert_matrix"][0][1] = 2
    (bad / "3_1.json").write_text(json.dumps(entry))
    monkeypatch.setenv("KASHAEV_CATALOG_DIR", str(bad))
    code, out, _ = run(capsys, "verify", "3_1", "--json")
    certs = [json.loads(line) for line in out.splitlines()]
    assert code == 1
    assert any(c["kind"] == "alexander" and c["alexander_match"] is False for c in certs)


def test_json_file_argument(capsys, tmp_path):
    from kashaev.diagram import parse_pd

    path = tmp_path / "d.json"
    path.write_text(json.dumps(parse_pd(TREFOIL).to_json()))
    code, out, _ = run(capsys, "faces", str(path))
    assert code == 0 and out.startswith("5 faces")
