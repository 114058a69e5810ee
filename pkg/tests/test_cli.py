import io
import json
import subprocess
import sys

import pytest

from twistjac.cli import main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(argv, capsys, **kw):
    code, out, _ = run(argv + ["--json"], capsys, **kw)
    return code, json.loads(out)


def test_dual_json(capsys):
    code, doc = run_json(["dual", "{[1/2..3/2],[-3/2..-1/2]}"], capsys)
    assert code == 0
    res = doc["results"][0]
    assert res["segments"] == ["[3/2]", "[-1/2..1/2]", "[-3/2]"]
    assert res["theorem"]


def test_dual_explain(capsys):
    code, out, _ = run(["dual", "--explain", "{[-3/2..3/2]}"], capsys)
    assert code == 0 and "[3/2]" in out


def test_linked(capsys):
    code, doc = run_json(["linked", "[0..1]", "[1..2]"], capsys)
    assert code == 0
    assert doc["results"][0]["linked"] is True


def test_tjm_default_cut(capsys):
    code, doc = run_json(["tjm", "--n", "2", "St(2,nu) x St(2,nu^-1)"], capsys)
    res = doc["results"][0]
    assert code == 0 and res["r"] == 2 and res["status"] == "nonzero"
    assert len(res["factors"]) == 2


def test_tjm_two_characters(capsys):
    code, doc = run_json(["tjm", "--n", "2", "--r", "1", "char(1,chi) x char(3,mu)"], capsys)
    assert doc["results"][0]["status"] == "zero"


@pytest.mark.parametrize("name,zeros", [("xi", {"1_4", "Q_{nu,2}", "Q_{nu,2}^v"}), ("sigma", {"1_3 x 1"})])
def test_tables(capsys, name, zeros):
    code, doc = run_json(["tjm-table", name], capsys)
    assert code == 0
    res = doc["results"][0]
    assert res["mismatches"] == []
    assert {r["name"] for r in res["rows"] if r["status"] == "zero"} == zeros


def test_table_text(capsys):
    code, out, _ = run(["tjm-table", "xi"], capsys)
    assert code == 0 and "verdict" in out and "by:" in out


def test_conjecture_profile_is_json_native(capsys):
    code, doc = run_json(["conjecture", "--n", "2", "L{[1/2..3/2],[-3/2..-1/2]}"], capsys)
    res = doc["results"][0]
    assert res["profile"] == [[1, 1], [2, 1]]
    assert res["kind"] == "prediction" and res["status"] == "nonzero"


def test_stdin_batch(capsys, monkeypatch):
    code, doc = run_json(["conjecture", "--n", "2", "-"], capsys,
                         stdin="St(4,1)\n\nchar(4,1)\n", monkeypatch=monkeypatch)
    assert code == 0
    assert [r["status"] for r in doc["results"]] == ["nonzero", "zero"]


def test_cosets(capsys):
    code, doc = run_json(["cosets", "--n", "2", "--r", "2", "--matrices"], capsys)
    res = doc["results"][0]
    assert code == 0 and len(res["representatives"]) == 4


def test_oracle_dim(capsys):
    code, doc = run_json(["oracle", "tjm-dim", "--n", "2", "--r", "2", "--p", "2", "--levi", "st,1"], capsys)
    res = doc["results"][0]
    assert code == 0 and res["oracle"] == res["formula"] == 2


def test_exit_codes(capsys):
    assert run(["tjm", "--n", "2", "St(2,nu) x"], capsys)[0] == 2
    assert run(["conjecture", "--n", "3", "St(4,1)"], capsys)[0] == 2
    code, _, err = run(["dual", "{[0..1/2]}"], capsys)
    assert code == 2 and "error" in err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "twistjac", "linked", "[0]", "[1]", "--json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["command"] == "linked"
