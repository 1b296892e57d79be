from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from dblkit.cli import main, select_laws
from dblkit.dsl import load_file

CORPUS = Path(__file__).parent / "corpus"
GOLDEN = CORPUS / "golden" / "cli"


@pytest.fixture(autouse=True)
def in_corpus(monkeypatch):
    monkeypatch.chdir(CORPUS)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", "sq2.dblcat")
    assert code == 0
    assert out.startswith("Sq2 [exhaustive]")
    assert "FAIL" not in out


def test_check_failure_json_matches_golden(capsys):
    code, out, _ = run(capsys, "check", "broken.fincat", "--json")
    assert code == 1
    assert json.loads(out) == json.loads((GOLDEN / "check_broken.json").read_text())
    law = {r["name"]: r for r in json.loads(out)["laws"]}["associativity"]
    assert law["counterexample"] == ["a", "a", "b"]


def test_json_schema_keys(capsys):
    _, out, _ = run(capsys, "check", "trunc.vdb", "--json")
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert {"artifact", "mode", "laws"} <= doc.keys()
    assert all(set(r) >= {"name", "status", "counterexample", "checked"} for r in doc["laws"])


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", "missing.file")
    assert code == 2
    assert "missing.file" in err


def test_syntax_error_goes_to_stderr(capsys, tmp_path):
    bad = tmp_path / "bad.fincat"
    bad.write_text("category C { objects: a b; }\n")
    code, out, err = run(capsys, "check", str(bad), "--json")
    assert code == 2
    assert f"{bad}:1:25: error: expected ',' or ';', found 'b'" in err
    diag = json.loads(out)["error"]["diagnostics"][0]
    assert (diag["line"], diag["column"]) == (1, 25)


def test_law_selection(capsys):
    code, out, _ = run(capsys, "check", "sq2.dblcat", "--laws", "L7,L1-identity", "--json")
    assert code == 0
    assert [r["name"] for r in json.loads(out)["laws"]] == ["L1-identity", "L7-triangle", "L7-pentagon"]


def test_select_laws_rejects_unknown():
    from dblkit.cli import UsageError

    names = ["L1-identity", "horizontal/pentagon", "L10-x"]
    assert select_laws(names, "L1") == ["L1-identity"]
    assert select_laws(names, "horizontal") == ["horizontal/pentagon"]
    assert select_laws(names, None) is None
    with pytest.raises(UsageError):
        select_laws(names, "L9")


def test_unknown_law_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "sq2.dblcat", "--laws", "nope")
    assert code == 2
    assert "no law matches 'nope'" in err


def test_probe_outside_carrier_is_construction_error(capsys, tmp_path):
    probe = tmp_path / "p.dblcat"
    probe.write_text("probes P for SpanFin { feet: 17; }\n")
    code, _, err = run(capsys, "check", "span_finset.dblcat", "--probe", str(probe))
    assert code == 3
    assert "ClosureExceeded" in err


def test_probe_file_restricts_check(capsys, tmp_path):
    probe = tmp_path / "p.dblcat"
    probe.write_text("probes P for Csp { feet: 1; }\n")
    code, out, _ = run(capsys, "check", "cospan.dblcat", "--probe", str(probe), "--laws", "L2", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["mode"] == "probe"


def test_build_square(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "square", "two.fincat")
    assert code == 0
    assert "doublecat SqTwo = square Two;" in out
    assert "# set level: strict_double_setcat" in out
    target = tmp_path / "sq1.dblcat"
    code, _, err = run(capsys, "build", "square", "one.fincat", "-o", str(target))
    assert code == 0 and "SqOne [exhaustive] ok" in err
    # the written file is valid input again, comments and all
    assert load_file(target).check().ok


def test_build_span_is_probe_mode(capsys):
    code, out, _ = run(capsys, "build", "span", "--base", "finset.fincat", "--apex-bound", "2", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["report"]["mode"] == "probe"
    assert doc["report"]["ok"]
    assert "span FinSet16 with apex_bound = 2" in doc["source"]


def test_build_verity_kinds(capsys):
    code, out, _ = run(capsys, "build", "verity-of", "sq2.dblcat")
    assert code == 0 and "verity VSq2 = of Sq2;" in out
    code, out, _ = run(capsys, "build", "square-verity", "trunc.vdb")
    assert code == 0 and "verity SqTrunc = squares Trunc;" in out


def test_build_prof(capsys):
    code, out, _ = run(capsys, "build", "prof", "prof.dblcat", "--name", "P2")
    assert code == 0
    assert "doublecat P2 = prof Two K H R;" in out


def test_build_wrong_input_kind(capsys):
    code, _, err = run(capsys, "build", "square-verity", "two.fincat")
    assert code == 2
    assert "declares no bicategory" in err


def test_companions(capsys):
    code, out, _ = run(capsys, "companions", "squarev.vdb", "--horizontal", "f")
    assert code == 0
    assert "f: (f, f)" in out
    code, out, _ = run(capsys, "companions", "squarev.vdb", "--json")
    rows = {r["horizontal"]: r["pairs"] for r in json.loads(out)["companions"]}
    assert [p["vertical"] for p in rows["f"]] == ["f"]
    assert set(rows) == {"id_a", "id_b", "f"}


def test_companions_unknown_cell(capsys):
    code, _, _ = run(capsys, "companions", "squarev.vdb", "--horizontal", "zz")
    assert code == 2


def test_invariance(capsys):
    code, out, _ = run(capsys, "invariance", "squarev.vdb")
    assert code == 0
    assert "weakly horizontally invariant: yes" in out
    code, out, _ = run(capsys, "invariance", "squarev.vdb", "--json")
    assert json.loads(out)["invariant"] is True


def test_invariance_precondition(capsys):
    code, out, err = run(capsys, "invariance", "scalar.vdb", "--json")
    assert code == 4
    assert json.loads(out)["error"]["hypothesis"] == "horizontal_locally_gaunt"
    assert "precondition failed: horizontal_locally_gaunt" in err


def test_univalence_golden(capsys):
    code, out, _ = run(capsys, "univalence", "sq2.dblcat", "--json")
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / "univalence_sq2.json").read_text())


def test_univalence_layers_on_iso(capsys):
    code, out, _ = run(capsys, "univalence", "isov.vdb")
    assert code == 0
    assert "gregarious: no (cross-check with horizontal global gauntness: agree)" in out
    code, out, _ = run(capsys, "univalence", "isov.vdb", "--name", "SqIso", "--json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["univalent"], doc["symmetric"]) == (False, False)


def test_univalence_span_is_univalent(capsys):
    code, out, _ = run(capsys, "univalence", "span.dblcat")
    assert code == 0
    assert "univalent: yes" in out


def test_threads_do_not_change_output(capsys, monkeypatch):
    _, serial, _ = run(capsys, "check", "trunc.vdb", "--json")
    monkeypatch.setenv("DBLKIT_THREADS", "4")
    _, parallel, _ = run(capsys, "check", "trunc.vdb", "--json")
    assert serial == parallel


def test_console_entry_point():
    env = dict(os.environ, PYTHONPATH=str(Path(__file__).parents[1] / "src"))
    proc = subprocess.run(
        [sys.executable, "-m", "dblkit.cli", "check", "two.fincat"], cwd=CORPUS, capture_output=True, text=True, env=env
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("Two [exhaustive]")
