"""End-to-end CLI behavior: flags, exit codes, deterministic output."""

import json

import pytest

from lielap.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_spectrum_text(capsys):
    rc, out, _ = run(
        capsys, "spectrum", "--group", "su2", "--tensor", "identity",
        "--max-eig", "8",
    )
    assert rc == 0
    lines = out.splitlines()
    assert any(line.strip().startswith("0") for line in lines)
    assert any(line.strip().startswith("8") for line in lines)


def test_spectrum_torus_gram(capsys):
    rc, out, _ = run(
        capsys, "spectrum", "--group", "t1", "--gram", "[[1]]",
        "--max-eig", "5", "--format", "csv",
    )
    assert rc == 0
    rows = out.strip().splitlines()
    assert [r.split(",")[0] for r in rows[1:]] == ["0", "1", "4"]


def test_spectrum_json_deterministic(capsys):
    args = (
        "spectrum", "--group", "u2", "--gram",
        '[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","2"]]',
        "--max-eig", "4", "--format", "json",
    )
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args)
    assert rc1 == rc2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["cutoff"] == "4"


def test_spectrum_missing_file_usage_error(capsys):
    rc, _, err = run(
        capsys, "spectrum", "--group", "su2", "--tensor", "/no/such/file.json",
        "--max-eig", "3",
    )
    assert rc == 2
    assert "cannot load" in err


def test_spectrum_indefinite_domain_error(capsys):
    rc, _, err = run(
        capsys, "spectrum", "--group", "t2", "--gram", "[[1,2],[2,1]]",
        "--max-eig", "3",
    )
    assert rc == 3
    assert "definite" in err


def test_spectrum_bad_cutoff(capsys):
    rc, _, err = run(
        capsys, "spectrum", "--group", "su2", "--max-eig", "eight",
    )
    assert rc == 2


def test_usage_error_on_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_certify_round_metric_fails(capsys):
    rc, out, _ = run(capsys, "certify", "--group", "su2", "--level", "4")
    assert rc == 1
    assert "verdict: false" in out


def test_certify_json_structure(capsys):
    rc, out, _ = run(
        capsys, "certify", "--group", "so3", "--level", "2", "--format", "json",
    )
    doc = json.loads(out)
    assert doc["labels"] == ["0", "2"]
    assert {c["kind"] for c in doc["certificates"]} <= {"a", "b", "c"}


def test_witness_roundtrip_certify(capsys, tmp_path):
    rc, out, _ = run(
        capsys, "witness", "--group", "so3", "--level", "4", "--seed", "42",
        "--format", "json",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["success"] is True
    tensor_file = tmp_path / "witness_tensor.json"
    tensor_file.write_text(json.dumps(doc["tensor"]))
    rc, out, _ = run(
        capsys, "certify", "--group", "so3", "--level", "4",
        "--tensor", str(tensor_file),
    )
    assert rc == 0
    assert "verdict: true" in out


def test_witness_deterministic_json(capsys):
    args = ("witness", "--group", "su2", "--level", "3", "--seed", "7",
            "--format", "json")
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args)
    assert rc1 == rc2 == 0 and out1 == out2


def test_witness_su2xsu2_includes_pairs(capsys):
    rc, out, _ = run(
        capsys, "witness", "--group", "su2xsu2", "--level", "3",
        "--seed", "0", "--format", "json",
    )
    assert rc == 0
    doc = json.loads(out)
    spins = [tuple(p["spins"]) for p in doc["pairs"]]
    assert spins == [(1, 1), (1, 3), (3, 3)]
    assert all(p["ok"] for p in doc["pairs"])


def test_witness_u2_includes_mixed(capsys):
    rc, out, _ = run(
        capsys, "witness", "--group", "u2", "--level", "2",
        "--seed", "0", "--format", "json",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["mixed"]
    assert all(entry["ok"] for entry in doc["mixed"])


def test_verify_paper_all(capsys):
    rc, out, _ = run(capsys, "verify-paper", "--max-m", "6")
    assert rc == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 8
    assert all(l.startswith("PASS") for l in lines)


def test_verify_paper_single_check(capsys):
    rc, out, _ = run(capsys, "verify-paper", "--check", "eigH", "--m", "7")
    assert rc == 0
    assert out.startswith("PASS eigH")


def test_verify_paper_unknown_check():
    with pytest.raises(SystemExit) as exc:
        main(["verify-paper", "--check", "nope"])
    assert exc.value.code == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "table.csv"
    rc, out, _ = run(
        capsys, "spectrum", "--group", "su2", "--max-eig", "3",
        "--format", "csv", "--output", str(target),
    )
    assert rc == 0 and out == ""
    assert target.read_text().startswith("eigenvalue,")


def test_config_file_supplies_defaults(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"group": "su2", "max-eig": "8"}))
    rc, out, _ = run(capsys, "spectrum", "--config", str(cfg))
    assert rc == 0
    assert "8" in out


def test_config_rejects_unknown_keys(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"group": "su2", "max-eig": "8", "bogus": 1}))
    rc, _, err = run(capsys, "spectrum", "--config", str(cfg))
    assert rc == 2
    assert "bogus" in err


def test_group_file(capsys, tmp_path):
    gf = tmp_path / "group.json"
    gf.write_text(json.dumps({"k": 0, "n": 1, "central": []}))
    rc, out, _ = run(
        capsys, "spectrum", "--group-file", str(gf), "--max-eig", "4",
        "--format", "csv",
    )
    assert rc == 0
    assert [r.split(",")[0] for r in out.strip().splitlines()[1:]] == ["0", "1", "4"]
