"""Classical correlation via optimization over local projective measurements,
quantum discord, and two-qubit concurrence.

The classical correlation is the maximum Holevo quantity over rank-1
projective measurements on subsystem A. For a qubit A the search is a dense
Bloch-angle grid followed by coordinate-wise golden-section refinement; for a
qutrit A the basis is parameterized by eight rotation-generator coefficients
and optimized from multiple seeded starting points, since that landscape is
not convex. The returned value is a certified lower estimate of the
projective optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entropy import ProjectiveMeasurement, entropy_of_spectrum, mutual_information, xlog2x
from .linalg import PAULI_Y, DensityMatrix, kron, ptrace_mat

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0
DISCORD_NOISE = 1e-6
X_FORM_TOL = 1e-10

# Generators of 3x3 special-unitary rotations (traceless Hermitian basis).
_GELL_MANN = []
for _i, _j in ((0, 1), (0, 2), (1, 2)):
    _m = np.zeros((3, 3), dtype=complex)
    _m[_i, _j] = _m[_j, _i] = 1
    _GELL_MANN.append(_m)
    _m = np.zeros((3, 3), dtype=complex)
    _m[_i, _j] = -1j
    _m[_j, _i] = 1j
    _GELL_MANN.append(_m)
_GELL_MANN.append(np.diag([1.0, -1.0, 0.0]).astype(complex))
_GELL_MANN.append(np.diag([1.0, 1.0, -2.0]).astype(complex) / np.sqrt(3.0))
_GELL_MANN = np.array(_GELL_MANN)


@dataclass(frozen=True)
class OptimizerConfig:
    """Knobs for the classical-correlation search; defaults favor accuracy."""

    grid_points: int = 64
    refine_iters: int = 200
    restarts: int = 8
    seed: int = 0

    def __post_init__(self):
        if self.grid_points < 2 or self.refine_iters < 1 or self.restarts < 1:
            raise ValueError("grid_points, refine_iters and restarts must be positive")


def holevo_quantity(rho: DensityMatrix, meas: ProjectiveMeasurement) -> float:
    """S(rho_B) - sum_j p_j S(rho_B|j) for a measurement on A."""
    dA, dB = rho.dims
    if meas.dim != dA:
        raise ValueError(f"measurement dimension {meas.dim} != dA {dA}")
    r = rho.mat.reshape(dA, dB, dA, dB)
    s_b = entropy_of_spectrum(np.linalg.eigvalsh(ptrace_mat(rho.mat, rho.dims, "B")))
    avg = 0.0
    for proj in meas.projectors:
        branch = np.einsum("ab,aibj->ij", proj.T, r)
        w = np.linalg.eigvalsh(branch)
        p = float(w.sum())
        if p > 1e-14:
            avg += entropy_of_spectrum(w) + p * np.log2(p)
    return s_b - avg


# ---------------------------------------------------------------------------
# qubit-A search

def _qubit_basis(theta, phi):
    """Orthonormal measurement pair for Bloch angles; broadcasts over arrays."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    ph = np.exp(1j * phi)
    v_plus = np.stack([c + 0j, ph * s], axis=-1)
    v_minus = np.stack([-s + 0j, ph * c], axis=-1)
    return v_plus, v_minus


def _avg_conditional_entropy(r, vecs):
    """Average post-measurement memory entropy for batched rank-1 outcomes.

    r is the state reshaped (dA, dB, dA, dB); vecs has shape (m, outcomes, dA).
    Uses the unnormalized-spectrum identity p*S(B/p) = -sum mu log2 mu + p log2 p.
    """
    branch = np.einsum("moa,aibj,mob->moij", vecs.conj(), r, vecs)
    w = np.linalg.eigvalsh(branch)
    w = np.where(w > 0.0, w, 0.0)
    p = w.sum(axis=-1)
    ent = -xlog2x(w).sum(axis=-1) + xlog2x(p)
    return ent.sum(axis=-1)


def _holevo_angles(r, s_b, theta, phi):
    v_plus, v_minus = _qubit_basis(theta, phi)
    vecs = np.stack([v_plus, v_minus], axis=-2)
    if vecs.ndim == 2:
        vecs = vecs[None, ...]
        return float(s_b - _avg_conditional_entropy(r, vecs)[0])
    return s_b - _avg_conditional_entropy(r, vecs)


def _golden_max(f, lo: float, hi: float, iters: int):
    """Golden-section maximization of a scalar function on [lo, hi]."""
    a, b = lo, hi
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = f(x1)
    return (x1, f1) if f1 >= f2 else (x2, f2)


def _maximize_qubit(rho: DensityMatrix, cfg: OptimizerConfig) -> float:
    dA, dB = rho.dims
    r = rho.mat.reshape(dA, dB, dA, dB)
    s_b = entropy_of_spectrum(np.linalg.eigvalsh(ptrace_mat(rho.mat, rho.dims, "B")))

    g = cfg.grid_points
    thetas = np.linspace(0.0, np.pi, g)
    phis = np.linspace(0.0, 2.0 * np.pi, g, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    vals = _holevo_angles(r, s_b, tt.ravel(), pp.ravel())
    k = int(np.argmax(vals))
    best = float(vals[k])
    theta, phi = float(tt.ravel()[k]), float(pp.ravel()[k])

    d_theta = np.pi / (g - 1)
    d_phi = 2.0 * np.pi / g
    passes = 6
    iters = max(4, cfg.refine_iters // passes)
    for sweep in range(passes):
        if sweep % 2 == 0:
            x, fx = _golden_max(
                lambda t: _holevo_angles(r, s_b, t, phi), theta - d_theta, theta + d_theta, iters
            )
            if fx > best:
                best, theta = fx, x
        else:
            x, fx = _golden_max(
                lambda q: _holevo_angles(r, s_b, theta, q), phi - d_phi, phi + d_phi, iters
            )
            if fx > best:
                best, phi = fx, x
    return best


# ---------------------------------------------------------------------------
# qutrit-A search

def _qutrit_basis(coeffs: np.ndarray) -> np.ndarray:
    """Unitary exp(i * sum c_k G_k) whose columns form the measurement basis."""
    h = np.tensordot(coeffs, _GELL_MANN, axes=(0, 0))
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * w)) @ v.conj().T


def _holevo_qutrit(r, s_b, coeffs) -> float:
    u = _qutrit_basis(coeffs)
    vecs = u.T[None, :, :]
    return float(s_b - _avg_conditional_entropy(r, vecs)[0])


def _maximize_qutrit(rho: DensityMatrix, cfg: OptimizerConfig) -> float:
    dA, dB = rho.dims
    r = rho.mat.reshape(dA, dB, dA, dB)
    s_b = entropy_of_spectrum(np.linalg.eigvalsh(ptrace_mat(rho.mat, rho.dims, "B")))

    rng = np.random.default_rng(cfg.seed)
    starts = [np.zeros(8)]  # computational basis start hits the symmetric optima exactly
    starts += [rng.uniform(-np.pi, np.pi, size=8) for _ in range(cfg.restarts - 1)]

    sweeps = 3
    iters = max(6, cfg.refine_iters // (8 * sweeps))
    best = -np.inf
    for x0 in starts:
        x = np.array(x0, dtype=float)
        fx = _holevo_qutrit(r, s_b, x)
        window = np.pi / 2
        for _ in range(sweeps):
            for k in range(8):
                def along(t, k=k):
                    xt = x.copy()
                    xt[k] = t
                    return _holevo_qutrit(r, s_b, xt)

                t_best, f_best = _golden_max(along, x[k] - window, x[k] + window, iters)
                if f_best > fx:
                    fx = f_best
                    x[k] = t_best
            window *= 0.3
        best = max(best, fx)
    return float(best)


def classical_correlation(rho: DensityMatrix, cfg: OptimizerConfig | None = None) -> float:
    """Maximum Holevo information extractable by a projective measurement on A."""
    cfg = cfg or OptimizerConfig()
    if rho.dA == 2:
        return _maximize_qubit(rho, cfg)
    if rho.dA == 3:
        return _maximize_qutrit(rho, cfg)
    raise ValueError(f"unsupported measured-side dimension dA={rho.dA}; need 2 or 3")


def bell_diagonal_classical_closed(c1: float, c2: float, c3: float) -> float:
    """Closed form for Bell-diagonal states: the largest |c_i| decides the optimum.

    Value is sum over +- of (1 +- c)/2 * log2(1 +- c) with c = max |c_i|; the
    optimizer must reproduce it within 1e-5 on this family.
    """
    for v in (c1, c2, c3):
        if abs(v) > 1.0 + 1e-12:
            raise ValueError(f"Bell-diagonal coefficient {v} outside [-1, 1]")
    c = max(abs(c1), abs(c2), abs(c3))
    return float(xlog2x(np.array([(1 - c) / 2, (1 + c) / 2])).sum()) + 1.0


def discord(rho: DensityMatrix, cfg: OptimizerConfig | None = None) -> float:
    """A-side quantum discord: mutual information minus classical correlation."""
    value = mutual_information(rho) - classical_correlation(rho, cfg)
    if value < 0.0:
        if value < -DISCORD_NOISE:
            raise RuntimeError(f"discord estimate {value:.3e} below noise floor")
        value = 0.0
    return value


# ---------------------------------------------------------------------------
# concurrence

def _check_two_qubit(rho: DensityMatrix):
    if rho.dims != (2, 2):
        raise ValueError(f"concurrence needs a two-qubit state, got dims {rho.dims}")


def concurrence(rho: DensityMatrix) -> float:
    """Two-qubit concurrence from the spin-flipped-spectrum construction."""
    _check_two_qubit(rho)
    yy = kron(PAULI_Y, PAULI_Y)
    m = rho.mat @ yy @ rho.mat.conj() @ yy
    ev = np.sort(np.linalg.eigvals(m).real)[::-1]
    # the spectrum is nonnegative in exact arithmetic; suppress roundoff noise
    # so that rank-deficient states do not leak spurious square roots
    ev = np.where(ev > ev[0] * 1e-12, ev, 0.0)
    mus = np.sqrt(ev)
    return float(max(0.0, mus[0] - mus[1] - mus[2] - mus[3]))


def concurrence_x(rho: DensityMatrix) -> float:
    """Concurrence of an X-form state: 2*max{0, |r14|-sqrt(r22 r33), |r23|-sqrt(r11 r44)}."""
    _check_two_qubit(rho)
    m = rho.mat
    off = np.abs(m).copy()
    off[np.arange(4), np.arange(4)] = 0.0
    off[0, 3] = off[3, 0] = off[1, 2] = off[2, 1] = 0.0
    if off.max() > X_FORM_TOL:
        raise ValueError(f"state is not in X form (off-pattern entry {off.max():.3e})")
    d = m.diagonal().real
    lam1 = abs(m[0, 3]) - np.sqrt(max(d[1] * d[2], 0.0))
    lam2 = abs(m[1, 2]) - np.sqrt(max(d[0] * d[3], 0.0))
    return float(2.0 * max(0.0, lam1, lam2))
