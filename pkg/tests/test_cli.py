"""Command-line interface: JSON output, schemas, exit codes."""

import json
import subprocess
import sys

import pytest

from galforms.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


# --- root-datum commands --------------------------------------------------

def test_dual(capsys):
    code, doc = invoke(capsys, "dual", "--type", "A2", "--isogeny", "sc")
    assert code == 0
    assert doc["schema"] == "galforms/root-datum/v1"
    assert doc["rank"] == 2
    assert len(doc["roots"]) == 6


def test_pi1(capsys):
    code, doc = invoke(capsys, "pi1", "--type", "A2", "--isogeny", "adjoint")
    assert code == 0
    assert doc["schema"] == "galforms/abelian-group/v1"
    assert doc["invariant_factors"] == [3]
    assert doc["free_rank"] == 0


def test_outer(capsys):
    code, doc = invoke(capsys, "outer", "--type", "D4")
    assert code == 0
    assert doc["order"] == 6
    assert len(doc["simple_permutations"]) == 6


def test_classify_quasisplit(capsys):
    code, doc = invoke(
        capsys, "classify-quasisplit", "--gamma", "C2", "--type", "A2"
    )
    assert code == 0
    assert doc["count"] == 2
    assert doc["classes"][0]["rho"] == [0, 0]
    code, doc = invoke(capsys, "classify-quasisplit", "--gamma", "S3", "--out", "S3")
    assert code == 0
    assert doc["count"] == 3


def test_coinvariants(capsys):
    code, doc = invoke(
        capsys,
        "coinvariants",
        "--type", "A2",
        "--isogeny", "adjoint",
        "--rho", "0,1",
        "--height", "2",
    )
    assert code == 0
    assert doc["coinvariants"] == {"free_rank": 1, "invariant_factors": []}
    assert doc["fixed_rank"] == 1
    assert [[0, 1], [1, 0]] in doc["orbits"]


# --- cohomology commands --------------------------------------------------

def test_h1_job_stdin(capsys, monkeypatch, tmp_path):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"gamma": "C2", "coefficients": "C4"}))
    code, doc = invoke(capsys, "h1", "--job", str(job))
    assert code == 0
    assert doc["schema"] == "galforms/h1/v1"
    assert doc["count"] == 2


def test_h1_with_action(capsys, tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps(
            {
                "gamma": "C2",
                "coefficients": "C3",
                "action": [[0, 1, 2], [0, 2, 1]],
            }
        )
    )
    code, doc = invoke(capsys, "h1", "--job", str(job))
    assert code == 0
    assert doc["count"] == 1


def test_h2_job(capsys, tmp_path):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"gamma": "C4", "moduli": [2]}))
    code, doc = invoke(capsys, "h2", "--job", str(job))
    assert code == 0
    assert doc["invariant_factors"] == [2]
    # one generator representative per invariant factor
    assert len(doc["representatives"]) == 1


def test_boundary_job(capsys, tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps(
            {
                "gamma": "C2",
                "z": "C2",
                "b": "C4",
                "c": "C2",
                "inclusion": [0, 2],
                "projection": [0, 1, 0, 1],
                "cocycle": [0, 1],
            }
        )
    )
    code, doc = invoke(capsys, "boundary", "--job", str(job))
    assert code == 0
    assert doc["schema"] == "galforms/boundary/v1"
    table = {(a, b): v for a, b, v in doc["table"]}
    assert table[(1, 1)] == 1  # the nontrivial class: lift^2 = the central element


# --- arithmetic commands --------------------------------------------------

def test_hilbert(capsys):
    code, doc = invoke(capsys, "hilbert", "-a", "-1", "-b", "-1", "-p", "2")
    assert code == 0 and doc["symbol"] == -1
    code, doc = invoke(capsys, "hilbert", "-a", "-1", "-b", "-1", "-p", "inf")
    assert code == 0 and doc["symbol"] == -1
    code, doc = invoke(capsys, "hilbert", "-a", "2", "-b", "3", "-p", "5")
    assert code == 0 and doc["symbol"] == 1


def test_brauer_class(capsys):
    code, doc = invoke(capsys, "brauer-class", "-d", "-1", "-c", "-1")
    assert code == 0
    assert doc["ramified"] == [2, "inf"]
    assert doc["trivial"] is False


def test_crossed_product_quadratic(capsys):
    code, doc = invoke(capsys, "crossed-product", "-d", "-1", "-c", "-1")
    assert code == 0
    assert doc["dimension"] == 4
    assert doc["central_simple"] is True
    assert doc["split"] is False
    code, doc = invoke(capsys, "crossed-product", "-d", "2", "-c", "2")
    assert code == 0
    assert doc["split"] is True
    assert "zero_divisor" in doc


def test_crossed_product_job_and_cocycle_roundtrip(capsys, tmp_path):
    code, doc = invoke(capsys, "crossed-product", "-d", "-1", "-c", "3")
    assert code == 0
    # feed the emitted cocycle table back in as a job document
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps({"field": doc["field"], "cocycle": doc["cocycle"]})
    )
    code2, doc2 = invoke(capsys, "crossed-product", "--job", str(job))
    assert code2 == 0
    assert doc2["cocycle"] == doc["cocycle"]
    assert doc2["split"] == doc["split"]


def test_crossed_product_cyclotomic_job(capsys, tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps({"field": {"kind": "cyclotomic", "n": 3}, "cocycle": "trivial"})
    )
    code, doc = invoke(capsys, "crossed-product", "--job", str(job))
    assert code == 0
    assert doc["dimension"] == 4
    assert doc["split"] is None or doc["split"] is True


def test_descend_valid(capsys, tmp_path):
    job = tmp_path / "job.json"
    # 1x1 matrices: rows of field-element coordinate arrays
    job.write_text(
        json.dumps(
            {
                "field": {"kind": "quadratic", "d": -1},
                "cocycle": "trivial",
                "matrices": [[[["1", "0"]]], [[["0", "1"]]]],
            }
        )
    )
    code, doc = invoke(capsys, "descend", "--job", str(job))
    assert code == 0
    assert doc["valid"] is True
    assert doc["module_dimension"] == 2
    assert doc["fixed_dimension"] == 1


def test_descend_invalid_reports_witness(capsys, tmp_path):
    job = tmp_path / "job.json"
    job.write_text(
        json.dumps(
            {
                "field": {"kind": "quadratic", "d": -1},
                "cocycle": {"c": "-1"},
                "matrices": [[[["1", "0"]]], [[["1", "0"]]]],
            }
        )
    )
    code, doc = invoke(capsys, "descend", "--job", str(job))
    assert code == 0
    assert doc["valid"] is False
    assert "twisted composition fails at pair (1, 1)" in doc["violation"]


def test_inner_invariant(capsys):
    code, doc = invoke(
        capsys,
        "inner-invariant",
        "--type", "A1",
        "--isogeny", "adjoint",
        "-d", "-1",
        "--assign", "-1",
    )
    assert code == 0
    assert doc["pi1"]["invariant_factors"] == [2]
    nontrivial = next(c for c in doc["components"] if c["element"] == [1])
    assert nontrivial["trivial"] is False
    assert nontrivial["split_algebra"] is False


# --- exit codes and robustness --------------------------------------------

def test_domain_error_exit_1(capsys):
    code, doc = invoke(capsys, "crossed-product", "-d", "4", "-c", "1")
    assert code == 1
    assert doc["schema"] == "galforms/error/v1"
    assert doc["kind"] == "domain-error"
    code, doc = invoke(
        capsys,
        "inner-invariant", "--type", "A2", "--isogeny", "adjoint",
        "-d", "-1", "--assign", "-1",
    )
    assert code == 1
    assert "order violation" in doc["error"]


def test_malformed_input_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, doc = invoke(capsys, "h1", "--job", str(bad))
    assert code == 2
    assert doc["kind"] == "malformed-input"
    code, doc = invoke(capsys, "classify-quasisplit", "--gamma", "Q8")
    assert code == 2


def test_argparse_errors_exit_2():
    proc = subprocess.run(
        [sys.executable, "-m", "galforms", "no-such-command"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    proc = subprocess.run(
        [sys.executable, "-m", "galforms"], capture_output=True, text=True
    )
    assert proc.returncode == 2


def test_output_is_deterministic():
    runs = []
    for _ in range(2):
        proc = subprocess.run(
            [sys.executable, "-m", "galforms", "outer", "--type", "D4"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        runs.append(proc.stdout)
    assert runs[0] == runs[1]
    # keys are sorted for stable diffs
    doc = json.loads(runs[0])
    assert list(doc) == sorted(doc)
