"""Smoke tests for the python bindings: a thin pass over every exposed
operation with values pinned by the C++ suites."""

import json
import math

import pytest

import rigidity as rg


def test_matrix_basics():
    ident = rg.ComplexMatrix.identity(2)
    assert ident.dim == 2
    assert ident[0, 0] == 1.0 + 0.0j
    prod = rg.kron(ident, ident)
    assert prod.dim == 4
    assert rg.frobenius_norm(prod) == pytest.approx(2.0)


def test_matrix_json_roundtrip():
    m = rg.ComplexMatrix.from_entries(2, [1.5 - 2.0j, 0j, 0.25j, -1.0 + 0j])
    text = rg.matrix_to_json(m)
    parsed = json.loads(text)
    assert parsed["dim"] == 2
    back = rg.matrix_from_json(text)
    assert back.entries == m.entries


def test_swap_and_embeddings():
    p = rg.build_r("swap")
    assert p[1, 2] == 1.0 + 0j
    embedded = rg.embed_adjacent(p, 1, 3, 2)
    assert embedded.dim == 8
    pair = rg.embed_pair(p, 1, 3, 3, 2)
    swap13 = rg.swap_operator(1, 3, 3, 2)
    assert rg.frobenius_norm(pair - swap13) == 0.0


def test_yang_baxter_defects():
    assert rg.frobenius_norm(rg.yb_defect_constant("swap")) == 0.0
    defect = rg.yb_defect_constant("perturbed_swap:0.1")
    assert rg.frobenius_norm(defect) == pytest.approx(0.2, rel=1e-12)
    spectral = rg.yb_defect_spectral("xxx", 0.7 + 0j, 0.3 + 0j)
    assert rg.frobenius_norm(spectral) < 1e-10

    report = json.loads(rg.check_ybe("perturbed_swap:0.1"))
    assert report["passes"] is False
    assert report["max_defect"] == pytest.approx(0.07027196934280878, rel=1e-9)


def test_pairwise_generation_rank():
    assert rg.pairwise_generation_rank("identity") == 1
    assert rg.pairwise_generation_rank("swap") == 5
    assert rg.pairwise_generation_rank("random_gate:7") == 64


def test_filtration():
    assert rg.filtration_dims("swap", 3) == [1, 3, 5, 5]
    assert rg.filtration_dims("random_gate:42", 3)[-1] == 64
    scan = json.loads(rg.boundary_scan_json("swap", 2, 4))
    assert scan["verdict"] == "constrained"


def test_hamiltonian_spectrum():
    h = rg.build_hamiltonian("xxx", 2, periodic=False)
    eigs = rg.hermitian_eigenvalues(h)
    assert eigs[0] == pytest.approx(-2.0)
    assert abs(eigs[-1]) < 1e-12


def test_transfer_commutation():
    assert rg.transfer_commutator_relative("xxx", 0.7 + 0j, 0.3 + 0j, 4) < 1e-12
    witness = max(
        rg.transfer_commutator_relative("perturbed_swap:0.1", u + 0j, v + 0j, 4)
        for u in (-1.0, -0.5, 0.5, 1.0)
        for v in (-1.0, -0.5, 0.5, 1.0)
    )
    assert witness > 1e-3


def test_bethe_solutions():
    sols = rg.bethe_solve(4, 1)
    assert [round(s.energy, 9) for s in sols] == [-4.0, -2.0, -2.0]
    assert all(s.residual <= 1e-10 for s in sols)

    lam = 0.5 / math.tan(math.pi / 4)
    residuals = rg.bethe_residual([lam + 0j], 4)
    assert abs(residuals[0]) < 1e-12

    cmp_doc = json.loads(rg.compare_spectrum_json(4, 1))
    assert cmp_doc["coverage"] == "3/3"
    assert cmp_doc["max_mismatch"] < 1e-8


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        rg.build_r("no_such_model")
    with pytest.raises(ValueError):
        rg.bethe_solve(4, 3)


def test_report_determinism():
    a = rg.dichotomy_report_json(["swap", "random_gate:42"])
    b = rg.dichotomy_report_json(["swap", "random_gate:42"])
    assert a == b
    table = json.loads(a)
    verdicts = {row["model"]: row["verdicts"] for row in table["models"]}
    assert verdicts["swap"]["ybe"] == "pass"
    assert verdicts["random_gate:42"]["ybe"] == "fail"
    assert verdicts["random_gate:42"]["filtration"] == "saturating"
