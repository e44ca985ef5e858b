"""Shannon and von Neumann entropies, projective measurements on subsystem A,
and the conditional entropies built from them. All logarithms are base 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DensityMatrix, kron, ptrace_mat, validate_density

PROB_TOL = 1e-9
EIG_CLIP = 1e-12
NEGLIGIBLE_OUTCOME = 1e-14


def xlog2x(p):
    """Entrywise p*log2(p) with the 0*log0 := 0 convention."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    pos = p > 0.0
    out[pos] = p[pos] * np.log2(p[pos])
    return out


def entropy_of_spectrum(w: np.ndarray) -> float:
    """-sum w log2 w after clipping roundoff-negative values to zero."""
    w = np.asarray(w, dtype=float)
    return float(-np.sum(xlog2x(np.where(w < 0.0, 0.0, w))))


def shannon(probs, tol: float = PROB_TOL) -> float:
    """Shannon entropy in bits of a probability distribution."""
    p = np.asarray(probs, dtype=float)
    if p.min(initial=0.0) < -tol or p.max(initial=0.0) > 1.0 + tol:
        raise ValueError(f"probabilities outside [0, 1]: {p}")
    if abs(p.sum() - 1.0) > tol:
        raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
    return entropy_of_spectrum(p)


def _mat(rho) -> np.ndarray:
    return rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)


def von_neumann(rho) -> float:
    """Von Neumann entropy in bits; zero for pure states."""
    return entropy_of_spectrum(np.linalg.eigvalsh(_mat(rho)))


def conditional_entropy(rho: DensityMatrix) -> float:
    """S(AB) - S(B); negative values witness entanglement."""
    s_ab = von_neumann(rho)
    s_b = von_neumann(ptrace_mat(rho.mat, rho.dims, "B"))
    return s_ab - s_b


def mutual_information(rho: DensityMatrix) -> float:
    """Total correlations S(A) + S(B) - S(AB) between the two subsystems."""
    s_a = von_neumann(ptrace_mat(rho.mat, rho.dims, "A"))
    s_b = von_neumann(ptrace_mat(rho.mat, rho.dims, "B"))
    return s_a + s_b - von_neumann(rho)


class ProjectiveMeasurement:
    """A complete family of mutually orthogonal projectors on subsystem A."""

    def __init__(self, projectors, tol: float = 1e-9):
        ps = np.array([np.asarray(p, dtype=complex) for p in projectors])
        d = ps.shape[-1]
        if ps.ndim != 3 or ps.shape[-2] != d:
            raise ValueError("projectors must be a sequence of equal square matrices")
        if np.abs(ps.sum(axis=0) - np.eye(d)).max() > tol:
            raise ValueError("projector family is not complete")
        for i, p in enumerate(ps):
            if np.abs(p - p.conj().T).max() > tol:
                raise ValueError(f"projector {i} is not Hermitian")
            if np.abs(p @ p - p).max() > tol:
                raise ValueError(f"projector {i} is not idempotent")
            for j in range(i):
                if np.abs(ps[j] @ p).max() > tol:
                    raise ValueError(f"projectors {j} and {i} are not orthogonal")
        ps.setflags(write=False)
        self.projectors = ps
        self.dim = d

    def __len__(self) -> int:
        return self.projectors.shape[0]

    @classmethod
    def from_basis(cls, vectors: np.ndarray, tol: float = 1e-9) -> "ProjectiveMeasurement":
        """Rank-1 projectors onto the columns of an orthonormal matrix."""
        v = np.asarray(vectors, dtype=complex)
        return cls([np.outer(v[:, k], v[:, k].conj()) for k in range(v.shape[1])], tol=tol)


@dataclass(frozen=True)
class MeasurementOutcome:
    """Outcome probabilities, conditional memory states, and the post-measurement state."""

    probs: np.ndarray
    conditional_states: tuple[DensityMatrix, ...]
    post_state: DensityMatrix


def measure_on_A(rho: DensityMatrix, meas: ProjectiveMeasurement) -> MeasurementOutcome:
    """Apply a projective measurement to subsystem A without reading the result.

    Outcomes with probability below 1e-14 get the maximally mixed conditional
    state by convention; their weight in any entropy average is negligible.
    """
    dA, dB = rho.dims
    if meas.dim != dA:
        raise ValueError(f"measurement acts on dimension {meas.dim}, state has dA={dA}")
    eye_b = np.eye(dB, dtype=complex)
    probs = np.empty(len(meas))
    conditionals = []
    post = np.zeros_like(rho.mat)
    for i, proj in enumerate(meas.projectors):
        op = kron(proj, eye_b)
        branch = op @ rho.mat @ op
        post = post + branch
        b = ptrace_mat(branch, rho.dims, "B")
        p = float(np.trace(b).real)
        probs[i] = p
        if p < NEGLIGIBLE_OUTCOME:
            cond = validate_density(eye_b / dB, (dB, 1), tol=1e-12)
        else:
            cond = validate_density(b / p, (dB, 1), tol=max(rho.tol, 1e-12))
        conditionals.append(cond)
    probs.setflags(write=False)
    post_state = validate_density(post, rho.dims, tol=max(rho.tol, 1e-12))
    return MeasurementOutcome(
        probs=probs, conditional_states=tuple(conditionals), post_state=post_state
    )


def measured_conditional_entropy(rho: DensityMatrix, meas: ProjectiveMeasurement) -> float:
    """Conditional entropy S(post-measurement state) - S(B) of an A-side measurement.

    Equals sum_i p_i S(rho_B|i) + H(P) - S(rho_B); the two routes are compared
    in the test suite.
    """
    outcome = measure_on_A(rho, meas)
    s_b = von_neumann(ptrace_mat(rho.mat, rho.dims, "B"))
    return von_neumann(outcome.post_state) - s_b
