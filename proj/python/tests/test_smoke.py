import json

import numpy as np
import pytest

import qboundary as qb


def test_catalogue_runs_and_passes():
    ids = qb.catalogue_ids()
    assert len(ids) == 14
    for eid in ("pps2", "void2", "example5", "qutrit9"):
        report = qb.run_experiment(eid)
        assert report["experiment_id"] == eid
        assert report["pass"] is True
        assert list(report)[:3] == ["experiment_id", "params", "comparisons"]


def test_pps_n_override():
    report = qb.run_experiment("pps-n", {"N": 4})
    by_name = {c["name"]: c for c in report["comparisons"]}
    assert by_name["N4.t_b"]["computed"] == pytest.approx(-1 / 15, abs=1e-10)


def test_partial_transpose_against_numpy():
    rng = np.random.default_rng(5)
    g = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    pt = qb.partial_transpose(g, [2, 3])
    ref = g.reshape(2, 3, 2, 3).transpose(2, 1, 0, 3).reshape(6, 6)
    assert np.allclose(pt, ref, atol=1e-14)


def test_eig_against_numpy():
    rng = np.random.default_rng(6)
    g = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    h = (g + g.conj().T) / 2
    values, vectors = qb.hermitian_eig(h)
    assert np.allclose(values, np.sort(np.linalg.eigvalsh(h))[::-1], atol=1e-10)
    assert np.allclose(vectors @ np.diag(values) @ vectors.conj().T, h, atol=1e-9)


def test_bell_state_is_npt():
    phi = qb.bell_phi_plus()
    rho = np.outer(phi, phi.conj())
    cert = qb.peres_check(rho, [2, 2])
    assert cert["verdict"] == "NPT"
    assert cert["min_pt_eigenvalue"] == pytest.approx(-0.5, abs=1e-12)


def test_boundary_and_neighbour():
    mixed = np.eye(4) / 4
    ket11 = np.zeros((4, 4))
    ket11[3, 3] = 1
    b = qb.find_boundary(mixed, ket11, [2, 2])
    assert b["t_b"] == pytest.approx(-1 / 3, abs=1e-10)
    assert b["void_degree"] == 1
    one = np.array([0, 1], dtype=complex)
    out = qb.epsilon_entangled_from_void(b["state"], one, one, [2, 2], 1e-3)
    assert out["certificate"]["verdict"] == "NPT"
    assert qb.trace_distance(out["state"], b["state"]) <= 1e-3 * (1 + 1e-12)


def test_classify_and_certify():
    assert qb.classify(qb.example5_state(), [2, 2])["status"] == "Discordant"
    assert qb.classify(qb.cq_state([0.4, 0.3, 0.2, 0.1]), [2, 2])["status"] == "ClassicalWrtA"
    report = qb.certify(np.eye(4) / 4, [2, 2])
    assert report["values"]["classicality"]["status"] == "Indeterminate"
    assert report["values"]["gurvits_barnum"]["region"] == "InsideTraceBall"


def test_state_json_round_trip():
    rho = qb.example5_state()
    text = qb.state_to_json(rho, [2, 2])
    doc = json.loads(text)
    assert doc["dims"] == [2, 2]
    back, dims = qb.state_from_json(text)
    assert dims == [2, 2]
    assert np.array_equal(back, rho)


def test_errors_carry_codes():
    with pytest.raises(qb.Error) as info:
        qb.run_experiment("nope")
    assert info.value.args[0] == "UnknownExperiment"
    with pytest.raises(qb.Error) as info:
        qb.state_from_json('{"dims":[2],"matrix":[[[0.5,0],[0,0]],[[0,0],[0.4,0]]]}')
    assert info.value.args[0] == "InvariantViolation"
