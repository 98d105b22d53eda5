"""Command-line behaviour: exit codes, determinism, output formats."""

from __future__ import annotations

import json

import pytest

from circuitcat import cli, quiver, validate_circuit


def run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--a=2,3,-5")
    assert code == 0
    assert "signature (1, 0)" in out
    assert "volume 5" in out
    assert "kind weighted-projective" in out
    assert "mu 5" in out


def test_validation_error_names_invariant(capsys):
    code, _, err = run(capsys, "info", "--a=2,3,-4")
    assert code == 1
    assert "UnbalancedA" in err
    code, _, err = run(capsys, "bmodel", "--a=1,0,-1", "--n=2")
    assert code == 1
    assert "ZeroEntry" in err


def test_emit_dot_figure(capsys):
    code, out, _ = run(capsys, "emit-dot", "--a=1,1,-2", "--n=2")
    assert code == 0
    assert out.count("R0 -> R1") == 2
    assert 'label="v0"' in out and 'label="v1"' in out
    assert out.splitlines()[0] == "digraph quiver {"


def test_emit_dot_deterministic(capsys):
    _, first, _ = run(capsys, "emit-dot", "--a=1,2,3,-1,-5", "--n=5")
    _, second, _ = run(capsys, "emit-dot", "--a=1,2,3,-1,-5", "--n=5")
    assert first == second
    assert first.count("->") == 13


def test_emit_dot_single_node(capsys):
    code, out, _ = run(capsys, "emit-dot", "--a=1,1,-2", "--n=1")
    assert code == 0
    assert "R0;" in out and "->" not in out


def test_emit_json_schema(capsys):
    code, out, _ = run(capsys, "emit-json", "--a=1,1,-2", "--n=2")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"objects", "homs", "compositions"}
    assert payload["objects"] == 2


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "--a=1,1,1,-3", "--n=2")
    assert code == 0
    report = json.loads(out)
    assert report["dims_match"] is True
    assert report["compositions_match"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    def fake(c, n):
        return {
            "circuit": c.text,
            "n": n,
            "pairs_checked": 0,
            "dims_match": False,
            "compositions_match": True,
            "dual_leaves": [],
            "witness": {"kind": "dimension"},
        }

    monkeypatch.setattr(cli, "verify_iso", fake)
    code, out, _ = run(capsys, "verify", "--a=1,1,-2", "--n=1")
    assert code == 2
    assert json.loads(out)["witness"] == {"kind": "dimension"}


def test_verify_sweep(capsys):
    code, out, _ = run(
        capsys, "verify", "--sweep", "--max-d=1", "--max-entry=3"
    )
    assert code == 0
    assert json.loads(out)["failures"] == 0


def test_mutate_and_duality(capsys):
    code, out, _ = run(capsys, "mutate", "--a=1,1,-2", "--n=2", "--half-twist")
    assert code == 0
    payload = json.loads(out)
    assert payload["gram"]["rows"] == [[1, 2], [0, 1]]
    assert payload["half_twist"]["rows"] == [[1, 2], [0, 1]]
    code, out, _ = run(
        capsys, "mutate", "--a=2,3,-5", "--n=5", "--check-duality"
    )
    assert code == 0
    assert json.loads(out)["koszul_dual"] is True


def test_mutate_word(capsys):
    code, out, _ = run(capsys, "mutate", "--a=1,2,-3", "--n=3", "--word=1,2,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["mutated"]["rows"] == [[1, 1, -1], [0, 1, 1], [0, 0, 1]]


def test_oracle_output(capsys):
    code, out, _ = run(capsys, "oracle", "--a0=2", "--a1=3", "--j=0", "--k=5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4
    assert payload["indices"] == [-2, -1, 0, 1]
    assert payload["indices"] == payload["geometric"]


def test_amodel_summary(capsys):
    code, out, _ = run(capsys, "amodel", "--a=1,1,1,-3", "--n=2")
    assert code == 0
    payload = json.loads(out)
    assert payload["flavor"] == "recursive"
    assert payload["dims"]["0,1"] == 3


def test_out_file(tmp_path, capsys):
    target = tmp_path / "quiver.dot"
    code, out, _ = run(capsys, "emit-dot", "--a=1,1,-2", "--n=2", f"--out={target}")
    assert code == 0 and out == ""
    assert target.read_text() == cli.emit_dot(quiver(validate_circuit([1, 1, -2]), 2), 2)
