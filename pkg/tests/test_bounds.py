import numpy as np
import pytest

from quncert.bounds import (
    Observable,
    complementarity,
    evaluate_bounds,
    single_system_bound,
    observable_measurement,
    uncertainty_sum,
)
from quncert.correlations import OptimizerConfig
from quncert.linalg import PAULI_X, PAULI_Y, PAULI_Z, kron, partial_trace, validate_density
from quncert.observables import bundled_observable
from quncert.scenarios import random_density, random_observable
from quncert.states import bell_diagonal, singlet, werner

np_rng = np.random.default_rng(20240804)

FAST = OptimizerConfig(grid_points=48, refine_iters=120)

SX = Observable(PAULI_X)
SY = Observable(PAULI_Y)
SZ = Observable(PAULI_Z)


def rand_unitary(n, rng):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def test_observable_rejects_degenerate():
    with pytest.raises(ValueError, match="degenerate"):
        Observable(np.eye(2))


def test_observable_measurement_sigma_z():
    meas = observable_measurement(SZ)
    assert len(meas) == 2
    projs = sorted(meas.projectors, key=lambda p: p[0, 0].real)
    assert np.abs(projs[0] - np.diag([0.0, 1.0])).max() < 1e-12
    assert np.abs(projs[1] - np.diag([1.0, 0.0])).max() < 1e-12


def test_observable_measurement_sigma_x():
    meas = observable_measurement(SX)
    plus = np.array([1, 1]) / np.sqrt(2)
    assert any(np.abs(p - np.outer(plus, plus)).max() < 1e-12 for p in meas.projectors)


def test_observable_measurement_reference_matrix():
    meas = observable_measurement(bundled_observable("x1"))
    p0, p1 = meas.projectors
    assert np.abs(p0 @ p1).max() < 1e-12
    assert np.abs(p0 + p1 - np.eye(2)).max() < 1e-12


def test_complementarity_mutually_unbiased_qubit():
    assert abs(complementarity(SX, SZ) - 0.5) < 1e-12


def test_complementarity_shared_basis():
    assert abs(complementarity(SZ, SZ) - 1.0) < 1e-12


def test_complementarity_fourier_qutrit():
    comp = Observable(np.diag([1.0, 2.0, 3.0]))
    w = np.exp(2j * np.pi / 3)
    fourier = np.array([[1, 1, 1], [1, w, w ** 2], [1, w ** 2, w]]) / np.sqrt(3)
    fz = Observable(fourier @ np.diag([1.0, 2.0, 3.0]) @ fourier.conj().T)
    assert abs(complementarity(comp, fz) - 1 / 3) < 1e-12


def test_complementarity_range():
    for _ in range(50):
        x = random_observable(np_rng, 3)
        z = random_observable(np_rng, 3)
        c = complementarity(x, z)
        assert 1 / 3 - 1e-12 <= c <= 1.0 + 1e-12


def test_single_system_bound_projective_mixed():
    rho = validate_density(np.eye(2) / 2, (2, 1))
    mx = observable_measurement(SX)
    mz = observable_measurement(SZ)
    assert abs(single_system_bound(rho, mx, mz) - 2.0) < 1e-12


def test_single_system_bound_projective_pure():
    rho = validate_density(np.diag([1.0, 0.0]), (2, 1))
    assert abs(single_system_bound(rho, observable_measurement(SX), observable_measurement(SZ))) < 1e-12


def test_single_system_bound_rank_two_element():
    # one rank-2 element makes c(X) = 2; with Z rank-1 on I/3 the bound is
    # -1 + 0 + 2*log2(3)
    rho = validate_density(np.eye(3) / 3, (3, 1))
    x_povm = [np.diag([1.0, 1.0, 0.0]), np.diag([0.0, 0.0, 1.0])]
    z_povm = [np.diag([1.0, 0.0, 0.0]), np.diag([0.0, 1.0, 0.0]), np.diag([0.0, 0.0, 1.0])]
    assert abs(single_system_bound(rho, x_povm, z_povm) - 2.169925001442312) < 1e-12


def test_single_system_bound_rejects_incomplete_povm():
    rho = validate_density(np.eye(2) / 2, (2, 1))
    with pytest.raises(ValueError, match="identity"):
        single_system_bound(rho, [np.diag([1.0, 0.0])], [np.eye(2)])


def test_uncertainty_singlet():
    assert abs(uncertainty_sum(singlet(), SX, SZ)) < 1e-10


def test_uncertainty_maximally_mixed():
    rho = validate_density(np.eye(4) / 4, (2, 2))
    assert abs(uncertainty_sum(rho, SX, SZ) - 2.0) < 1e-12


def test_uncertainty_werner_closed_form():
    for f in (0.1, 0.5, 0.9):
        expected = 2 - (1 - f) * np.log2(1 - f) - (1 + f) * np.log2(1 + f)
        assert abs(uncertainty_sum(werner(2, f), SX, SZ) - expected) < 1e-10


def test_evaluate_bounds_singlet():
    rep = evaluate_bounds(singlet(), SX, SZ, FAST)
    assert abs(rep.U) < 1e-8
    assert abs(rep.U_b1) < 1e-8
    assert abs(rep.U_b2) < 1e-8
    assert abs(rep.U_b3) < 1e-8
    assert abs(rep.discord - 1.0) < 1e-8
    assert abs(rep.classical - 1.0) < 1e-8
    assert rep.violations() == []


def test_evaluate_bounds_maximally_mixed():
    rho = validate_density(np.eye(4) / 4, (2, 2))
    rep = evaluate_bounds(rho, SX, SZ, FAST)
    for value in (rep.U, rep.U_b1, rep.U_b2, rep.U_b3):
        assert abs(value - 2.0) < 1e-8
    assert rep.concurrence == 0.0


def test_evaluate_bounds_werner_tightness():
    rep = evaluate_bounds(werner(2, 0.8), SX, SZ)
    assert abs(rep.U_b3 - rep.U) <= 1e-4
    assert "U_b3" in rep.tightest()
    assert rep.violations() == []


def test_bound_inequalities_two_qubits():
    for _ in range(60):
        rho = random_density(np_rng, (2, 2))
        x = random_observable(np_rng, 2)
        z = random_observable(np_rng, 2)
        rep = evaluate_bounds(rho, x, z, FAST)
        assert rep.U >= rep.U_b1 - 1e-9
        assert rep.U >= rep.U_b2 - 1e-4
        assert rep.U >= rep.U_b3 - 1e-4


def test_bound_inequalities_qubit_qutrit():
    for _ in range(25):
        rho = random_density(np_rng, (2, 3))
        x = random_observable(np_rng, 2)
        z = random_observable(np_rng, 2)
        rep = evaluate_bounds(rho, x, z, FAST)
        assert rep.U >= rep.U_b1 - 1e-9
        assert rep.U >= rep.U_b2 - 1e-4
        assert rep.U >= rep.U_b3 - 1e-4
        assert rep.concurrence is None


def test_basis_change_covariance():
    rho = random_density(np_rng, (2, 2))
    x = random_observable(np_rng, 2)
    z = random_observable(np_rng, 2)
    u = rand_unitary(2, np_rng)
    rho_rot = validate_density(
        kron(u, np.eye(2)) @ rho.mat @ kron(u, np.eye(2)).conj().T, (2, 2)
    )
    x_rot = Observable(u @ x.mat @ u.conj().T)
    z_rot = Observable(u @ z.mat @ u.conj().T)
    a = evaluate_bounds(rho, x, z)
    b = evaluate_bounds(rho_rot, x_rot, z_rot)
    for name in ("U", "U_b1", "U_b2", "U_b3", "c", "S_AB", "S_B", "S_cond",
                 "mutual", "classical", "discord", "concurrence"):
        assert abs(getattr(a, name) - getattr(b, name)) <= 1e-5


def test_bell_diagonal_pauli_complementarity_exact():
    # any two distinct Pauli observables are mutually unbiased
    for a, b in ((SX, SY), (SX, SZ), (SY, SZ)):
        assert abs(complementarity(a, b) - 0.5) < 1e-12
    rep = evaluate_bounds(bell_diagonal(0.3, -0.2, 0.5), SX, SZ, FAST)
    assert abs(rep.c - 0.5) < 1e-12


def test_single_system_bound_fuzz_reduced_states():
    for _ in range(100):
        d = 2 if np_rng.random() < 0.5 else 3
        rho = random_density(np_rng, (d, d))
        rho_a = partial_trace(rho, "A")
        x = random_observable(np_rng, d)
        z = random_observable(np_rng, d)
        h_sum = 0.0
        for obs in (x, z):
            probs = np.array([
                float(np.trace(p @ rho_a.mat).real)
                for p in observable_measurement(obs).projectors
            ])
            h_sum += float(-np.sum(probs[probs > 0] * np.log2(probs[probs > 0])))
        bound = single_system_bound(rho_a, observable_measurement(x), observable_measurement(z))
        assert h_sum >= bound - 1e-9
