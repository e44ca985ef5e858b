"""The measured uncertainty sum and its three lower bounds.

For non-degenerate Hermitian observables X, Z on subsystem A and a bipartite
state with memory B, the quantity U = S(X|B) + S(Z|B) is bounded below by

* U_b1 = log2(1/c) + S(A|B)                    (complementarity + conditional entropy)
* U_b2 = U_b1 + max{0, D_A - J_A}              (discord-corrected form)
* U_b3 = 2*S(A|B) + 2*D_A                      (observable-independent form)

where c is the maximal squared eigenvector overlap, J_A the classical
correlation and D_A the A-side discord.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlations import OptimizerConfig, classical_correlation, concurrence
from .entropy import (
    ProjectiveMeasurement,
    measured_conditional_entropy,
    mutual_information,
    von_neumann,
)
from .linalg import DensityMatrix, EigenSystem, eig_hermitian, ptrace_mat

DEGENERACY_GAP = 1e-9
BOUND_TOL = 1e-9
BOUND_TOL_OPT = 1e-4


class Observable:
    """A non-degenerate Hermitian observable with its eigensystem attached."""

    def __init__(self, mat: np.ndarray, tol: float = 1e-9):
        self.mat = np.asarray(mat, dtype=complex)
        self.eigensystem: EigenSystem = eig_hermitian(self.mat, tol=tol)
        gaps = np.diff(self.eigensystem.values)
        self.degeneracy_gap = float(gaps.min()) if gaps.size else np.inf
        if self.degeneracy_gap <= DEGENERACY_GAP:
            raise ValueError(
                f"degenerate observable: eigenvalue gap {self.degeneracy_gap:.3e} <= {DEGENERACY_GAP:g}"
            )

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


def observable_measurement(obs: Observable) -> ProjectiveMeasurement:
    """Rank-1 eigenprojectors of a non-degenerate observable."""
    return ProjectiveMeasurement.from_basis(obs.eigensystem.vectors)


def complementarity(x: Observable, z: Observable) -> float:
    """c = max_(i,j) |<x_i|z_j>|^2; lies in [1/d, 1]."""
    if x.dim != z.dim:
        raise ValueError(f"observable dimensions differ: {x.dim} vs {z.dim}")
    overlaps = np.abs(x.eigensystem.vectors.conj().T @ z.eigensystem.vectors) ** 2
    return float(overlaps.max())


def _povm_elements(povm) -> list[np.ndarray]:
    if isinstance(povm, ProjectiveMeasurement):
        return list(povm.projectors)
    return [np.asarray(e, dtype=complex) for e in povm]


def _max_element_trace(elements: list[np.ndarray], tol: float = 1e-9) -> float:
    d = elements[0].shape[0]
    total = sum(elements)
    if np.abs(total - np.eye(d)).max() > tol:
        raise ValueError("POVM elements do not sum to the identity")
    traces = []
    for e in elements:
        if np.abs(e - e.conj().T).max() > tol:
            raise ValueError("POVM element is not Hermitian")
        if np.linalg.eigvalsh(e).min() < -tol:
            raise ValueError("POVM element is not positive semidefinite")
        traces.append(float(np.trace(e).real))
    return max(traces)


def single_system_bound(rho_a: DensityMatrix, x_povm, z_povm) -> float:
    """Single-system bound log2(1/c(X)) + log2(1/c(Z)) + 2*S(A).

    c(X) is the largest element trace; with rank-1 projective inputs it is 1
    and the bound reduces to 2*S(A).
    """
    if 1 not in rho_a.dims:
        raise ValueError(f"expected a single-system state, got dims {rho_a.dims}")
    c_x = _max_element_trace(_povm_elements(x_povm))
    c_z = _max_element_trace(_povm_elements(z_povm))
    return float(-np.log2(c_x) - np.log2(c_z) + 2.0 * von_neumann(rho_a))


def uncertainty_sum(rho: DensityMatrix, x: Observable, z: Observable) -> float:
    """U = S(X|B) + S(Z|B) for measurements on subsystem A."""
    mx = observable_measurement(x)
    mz = observable_measurement(z)
    return measured_conditional_entropy(rho, mx) + measured_conditional_entropy(rho, mz)


@dataclass(frozen=True)
class BoundReport:
    """One full evaluation: the uncertainty, all bounds, and every ingredient."""

    U: float
    U_b1: float
    U_b2: float
    U_b3: float
    c: float
    S_AB: float
    S_B: float
    S_cond: float
    mutual: float
    classical: float
    discord: float
    concurrence: float | None

    def violations(self, tol: float = BOUND_TOL, tol_opt: float = BOUND_TOL_OPT) -> list[str]:
        """Names of any bound inequalities the report fails to satisfy.

        The optimizer can only underestimate the classical correlation, which
        overestimates the discord and can over-tighten U_b2 and U_b3; those
        two get the looser tolerance.
        """
        out = []
        if self.U < self.U_b1 - tol:
            out.append(f"U_b1 exceeds U by {self.U_b1 - self.U:.3e}")
        if self.U < self.U_b2 - tol_opt:
            out.append(f"U_b2 exceeds U by {self.U_b2 - self.U:.3e}")
        if self.U < self.U_b3 - tol_opt:
            out.append(f"U_b3 exceeds U by {self.U_b3 - self.U:.3e}")
        return out

    def tightest(self, tie_tol: float = 1e-9) -> str:
        """Which lower bound comes closest to U, with ties reported."""
        bounds = {"U_b1": self.U_b1, "U_b2": self.U_b2, "U_b3": self.U_b3}
        best = max(bounds.values())
        names = [k for k, v in bounds.items() if v >= best - tie_tol]
        if len(names) == 1:
            return names[0]
        return f"{names[0]} (ties with {', '.join(names[1:])})"


def evaluate_bounds(
    rho: DensityMatrix,
    x: Observable,
    z: Observable,
    cfg: OptimizerConfig | None = None,
) -> BoundReport:
    """Compute U, the three bounds, and the correlation measures in one pass.

    U_b2 reuses the classical-correlation estimate that enters the discord, so
    D - J = I - 2J stays internally consistent.
    """
    if x.dim != rho.dA or z.dim != rho.dA:
        raise ValueError(
            f"observables of dimension {x.dim}/{z.dim} do not act on A with dA={rho.dA}"
        )
    cfg = cfg or OptimizerConfig()
    c = complementarity(x, z)
    s_ab = von_neumann(rho)
    s_b = von_neumann(ptrace_mat(rho.mat, rho.dims, "B"))
    s_cond = s_ab - s_b
    mutual = mutual_information(rho)
    classical = classical_correlation(rho, cfg)
    disc = mutual - classical
    if disc < 0.0:
        if disc < -1e-6:
            raise RuntimeError(f"discord estimate {disc:.3e} below noise floor")
        disc = 0.0
    u = uncertainty_sum(rho, x, z)
    u_b1 = float(np.log2(1.0 / c) + s_cond)
    u_b2 = u_b1 + max(0.0, disc - classical)
    u_b3 = 2.0 * s_cond + 2.0 * disc
    con = concurrence(rho) if rho.dims == (2, 2) else None
    return BoundReport(
        U=u,
        U_b1=u_b1,
        U_b2=u_b2,
        U_b3=u_b3,
        c=c,
        S_AB=s_ab,
        S_B=s_b,
        S_cond=s_cond,
        mutual=mutual,
        classical=classical,
        discord=disc,
        concurrence=con,
    )
