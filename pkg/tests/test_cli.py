"""Exit codes, output schemas and round trips of the command-line tool."""
import io
import json

import pytest

from partial_hopf import reference_tables
from partial_hopf.algebras import taft
from partial_hopf.cli import identity_sweep_items, main, run_identity_sweep
from partial_hopf.hopf_core import to_json_dict


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_single_order(capsys):
    code, out, _ = run(capsys, "validate", "taft", "4")
    assert code == 0
    assert "ok" in out and "FAILED" not in out


def test_validate_sweep_respects_max(capsys):
    code, out, _ = run(capsys, "validate", "taft", "--max", "3",
                       "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert [r["n"] for r in doc["results"]] == [2, 3]
    assert all(r["ok"] for r in doc["results"])


def test_validate_order_one_group_algebra(capsys):
    code, _, _ = run(capsys, "validate", "group", "1")
    assert code == 0


def test_actions_text_lists_families(capsys):
    code, out, _ = run(capsys, "actions", "taft", "2")
    assert code == 0
    assert "counit" in out and "parametric" in out
    assert "x: a" in out


def test_actions_json_schema(capsys):
    code, out, _ = run(capsys, "actions", "taft", "3", "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "actions" and doc["ok"] is True
    fams = {r["family"]: r for r in doc["results"]}
    assert set(fams) == {"counit", "parametric"}
    assert fams["parametric"]["params"] == ["a"]
    assert fams["parametric"]["values"]["g^2x"] == "-q*a"
    assert all(r["verified"] for r in doc["results"])
    assert all(r["checks"] > 0 for r in doc["results"])


def test_actions_reference_tables_clean(capsys):
    code, out, _ = run(capsys, "actions", "taft", "4", "--paper-examples")
    assert code == 0
    assert out.count("match") >= 12 and "MISMATCH" not in out


def test_coactions_reference_tables_clean(capsys):
    code, out, _ = run(capsys, "coactions", "taft", "3", "--paper-examples",
                       "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["reference_tables"]) == 12
    assert all(t["mismatches"] == [] for t in doc["reference_tables"])


def test_corrupted_reference_table_is_caught(monkeypatch, capsys):
    monkeypatch.setitem(reference_tables.TAFT_ACTIONS[2], "x", "a + 1")
    code, out, _ = run(capsys, "actions", "taft", "2", "--paper-examples")
    assert code == 1
    assert "MISMATCH" in out


def test_reference_table_with_unknown_label_is_caught(monkeypatch, capsys):
    monkeypatch.setitem(reference_tables.NICHOLS_COACTIONS[2], "bogus", "1")
    code, out, _ = run(capsys, "coactions", "nichols", "2",
                       "--paper-examples")
    assert code == 1
    assert "does not name a basis element" in out


def test_classify_json_schema(capsys):
    code, out, _ = run(capsys, "classify", "taft", "2", "--output", "json")
    assert code == 0
    doc = json.loads(out)
    r = doc["results"][0]
    assert r["branches"] == 2 and r["exhaustive"] is True
    assert [f["family"] for f in r["families"]] == ["family1", "family2"]
    assert sorted(tuple(f["params"]) for f in r["families"]) == [
        (), ("t1",)]
    assert any("normalization" in step
               for f in r["families"] for step in f["trace"])


def test_classify_group_sweep(capsys):
    code, out, _ = run(capsys, "classify", "group", "--max", "6",
                       "--output", "json")
    assert code == 0
    doc = json.loads(out)
    counts = {r["n"]: len(r["families"]) for r in doc["results"]}
    assert counts == {1: 1, 2: 2, 3: 2, 4: 3, 5: 2, 6: 4}


def test_duality_text(capsys):
    code, out, _ = run(capsys, "duality", "taft", "4")
    assert code == 0
    assert "round trip identity: ok" in out
    assert "MISMATCH" not in out and out.count("match") == 3


def test_duality_json(capsys):
    code, out, _ = run(capsys, "duality", "nichols", "3", "--output", "json")
    assert code == 0
    doc = json.loads(out)
    checks = doc["results"][0]["checks"]
    assert all(c["ok"] for c in checks)
    kinds = [c["check"] for c in checks]
    assert "round trip identity" in kinds
    assert sum(k.startswith("transport") for k in kinds) == 2


def test_identities_small_sweep(capsys):
    code, out, _ = run(capsys, "identities", "--max", "2", "--n", "3",
                       "--output", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True and doc["failures"] == []
    suites = {r["suite"]: r for r in doc["results"]}
    assert set(suites) == {
        "pascal_a", "pascal_b", "alternating_vandermonde",
        "trinomial_revision", "four_index_inversion", "binomial_inversion",
        "character_sum"}
    assert all(r["failed"] == 0 for r in doc["results"])


def test_identity_sweep_default_size():
    assert len(identity_sweep_items(6, 8)) == 25555


def test_identity_sweep_parallel_matches_serial():
    serial = run_identity_sweep(2, 3, 1)
    parallel = run_identity_sweep(2, 3, 2)
    assert serial == parallel
    assert serial[1] == []


def test_export_round_trips_exactly(tmp_path, capsys):
    path = tmp_path / "t3.json"
    assert main(["export", "taft", "3", str(path)]) == 0
    capsys.readouterr()
    assert json.loads(path.read_text()) == to_json_dict(taft(3))
    code, out, _ = run(capsys, "import", str(path))
    assert code == 0 and "valid" in out


def test_export_stdout_import_stdin(monkeypatch, capsys):
    code, out, _ = run(capsys, "export", "nichols", "2")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "import", "-")
    assert code == 0


def test_import_missing_file_is_io_error(capsys):
    code, _, err = run(capsys, "import", "/no/such/file.json")
    assert code == 2 and "error" in err


def test_import_malformed_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "import", str(path))
    assert code == 2 and "invalid JSON" in err


def test_import_wrong_schema(tmp_path, capsys):
    path = tmp_path / "odd.json"
    path.write_text(json.dumps({"dim": 2}))
    code, _, err = run(capsys, "import", str(path))
    assert code == 2


def test_import_invalid_structure(tmp_path, capsys):
    doc = to_json_dict(taft(2))
    rows = [row for row in doc["mult"] if not (row[0] == 2 and row[1] == 2)]
    rows.append([2, 2, 2, "1"])
    doc["mult"] = rows
    path = tmp_path / "notahopf.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "import", str(path))
    assert code == 1


def test_unknown_algebra_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["actions", "heisenberg", "3"])
    assert exc.value.code == 2


def test_coactions_reject_group_algebras():
    with pytest.raises(SystemExit) as exc:
        main(["coactions", "group", "4"])
    assert exc.value.code == 2


def test_below_minimum_order_is_usage_error(capsys):
    code, _, err = run(capsys, "validate", "taft", "1")
    assert code == 2 and "error" in err


def test_max_below_minimum_is_usage_error(capsys):
    code, _, err = run(capsys, "actions", "nichols", "--max", "1")
    assert code == 2
