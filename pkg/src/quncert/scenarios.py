"""Named parameter sweeps reproducing the published figure data, a randomized
inequality verifier, and a small state-spec grammar for the inspector.

Every sweep row is a full bound evaluation; rows are deterministic for a
fixed seed and are checked against the bound inequalities before they are
emitted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .bounds import BOUND_TOL, BOUND_TOL_OPT, BoundReport, Observable, evaluate_bounds
from .channels import (
    apply_kraus,
    jc_survival,
    jc_state,
    local_channel,
    dephased_bell_diagonal,
    random_field_state,
)
from .correlations import OptimizerConfig
from .entropy import ProjectiveMeasurement, shannon, von_neumann
from .linalg import DensityMatrix, partial_trace, validate_density
from .observables import bundled_observable, pauli_observable, su3_pair
from .states import (
    bell_diagonal,
    bell_like,
    bell_mixture,
    isotropic,
    qubit_qudit,
    werner,
)


class ScenarioError(ValueError):
    """Invalid scenario name, sweep, or parameter."""


@dataclass(frozen=True)
class ScenarioSpec:
    """A named sweep with optional parameter and observable overrides."""

    name: str
    sweep: tuple[float, float, int] | None = None
    params: dict[str, float] = field(default_factory=dict)
    observables: tuple[Observable, Observable] | None = None


@dataclass(frozen=True)
class TimeSeriesRow:
    x: float
    report: BoundReport


@dataclass(frozen=True)
class _Scenario:
    sweep: tuple[float, float, int]
    params: dict[str, float]
    build: Callable[[float, dict[str, float]], DensityMatrix]
    default_obs: Callable[[], tuple[Observable, Observable]]
    sweep_label: str = "x"
    notes: tuple[str, ...] = ()


def _fraction_sweep(x: float, _p: dict) -> None:
    if not 0.0 <= x <= 1.0:
        raise ScenarioError(f"sweep value {x} outside [0, 1]")


def _build_werner_qubit(x, p):
    _fraction_sweep(x, p)
    return werner(2, x)


def _build_werner_qutrit(x, p):
    _fraction_sweep(x, p)
    return werner(3, x)


def _build_isotropic_d2(x, p):
    _fraction_sweep(x, p)
    return isotropic(2, x)


def _build_isotropic_d3(x, p):
    _fraction_sweep(x, p)
    return isotropic(3, x)


def _build_qubit_qutrit(x, p):
    return qubit_qudit(p["alpha"], x, kind="qutrit")


def _build_qubit_ququart(x, p):
    return qubit_qudit(p["alpha"], x, kind="ququart")


def _build_ad_markov(x, p):
    _fraction_sweep(x, p)
    rho0 = bell_diagonal(p["c1"], p["c2"], p["c3"])
    return apply_kraus(rho0, local_channel("amplitude", x, x))


def _build_pd_markov(x, p):
    _fraction_sweep(x, p)
    rho0 = bell_diagonal(p["c1"], p["c2"], p["c3"])
    return apply_kraus(rho0, local_channel("phase", x, x))


def _build_jc(x, p):
    p_t = jc_survival(x, gamma0=1.0, tau=p["tau"])
    return jc_state(p["alpha"], p_t)


def _build_random_field(x, p):
    rho0 = bell_mixture(p["w1p"], p["w1m"], p["w2p"], p["w2m"])
    return random_field_state(rho0, x, p["p1"])


def _build_sudden(x, p):
    return dephased_bell_diagonal(p["c1"], p["c2"], p["c3"], p["gamma"], x)


def _build_one_sided_pd(x, p):
    _fraction_sweep(x, p)
    b, r, d = p["b"], p["r"], p["d"]
    if abs(b + d - 1.0) > 1e-9:
        raise ScenarioError(f"weights b={b} and d={d} must sum to 1")
    rho0 = bell_mixture(b * r, d * (1.0 - r), d * r, b * (1.0 - r))
    return apply_kraus(rho0, local_channel("phase", x, 0.0))


_PD_COHERENCE_NOTE = "phase damping scales each coherence by (1-p); derived from the Kraus product channel"
_FIELD_WEIGHTS_NOTE = "random-field map uses product weights p_j*p_k (uniform 1/4 only at p1=1/2)"
_ONE_SIDED_STATE_NOTE = "initial Bell weights read as (b*R, d*(1-R), d*R, b*(1-R)) to give unit trace"

_REGISTRY: dict[str, _Scenario] = {
    "werner-qubit": _Scenario(
        sweep=(0.0, 1.0, 101),
        params={},
        build=_build_werner_qubit,
        default_obs=lambda: (pauli_observable(1), pauli_observable(3)),
        sweep_label="f",
    ),
    "werner-qutrit": _Scenario(
        sweep=(0.0, 1.0, 101),
        params={},
        build=_build_werner_qutrit,
        default_obs=su3_pair,
        sweep_label="f",
    ),
    "isotropic-d2": _Scenario(
        sweep=(0.0, 1.0, 101),
        params={},
        build=_build_isotropic_d2,
        default_obs=lambda: (bundled_observable("x1"), bundled_observable("z1")),
        sweep_label="f",
    ),
    "isotropic-d3": _Scenario(
        sweep=(0.0, 1.0, 101),
        params={},
        build=_build_isotropic_d3,
        default_obs=lambda: (bundled_observable("x2"), bundled_observable("z2")),
        sweep_label="f",
    ),
    "qubit-qutrit": _Scenario(
        sweep=(0.0, 0.5, 101),
        params={"alpha": 0.25},
        build=_build_qubit_qutrit,
        default_obs=lambda: (bundled_observable("x3"), bundled_observable("z3")),
        sweep_label="gamma",
    ),
    "qubit-ququart": _Scenario(
        sweep=(0.0, 0.6, 101),
        params={"alpha": 0.1},
        build=_build_qubit_ququart,
        default_obs=lambda: (bundled_observable("x4"), bundled_observable("z4")),
        sweep_label="gamma",
    ),
    "ad-markov": _Scenario(
        sweep=(0.0, 1.0, 201),
        params={"c1": -0.8, "c2": -0.8, "c3": -0.8},
        build=_build_ad_markov,
        default_obs=lambda: (pauli_observable(1), pauli_observable(2)),
        sweep_label="p",
    ),
    "pd-markov": _Scenario(
        sweep=(0.0, 1.0, 201),
        params={"c1": -0.8, "c2": -0.8, "c3": -0.8},
        build=_build_pd_markov,
        default_obs=lambda: (pauli_observable(1), pauli_observable(3)),
        sweep_label="p",
        notes=(_PD_COHERENCE_NOTE,),
    ),
    "jc-nonmarkov": _Scenario(
        sweep=(0.0, 30.0, 600),
        params={"alpha": 1.0 / math.sqrt(10.0), "tau": 0.01},
        build=_build_jc,
        default_obs=lambda: (pauli_observable(1), pauli_observable(3)),
        sweep_label="gamma0*t",
    ),
    "random-field": _Scenario(
        sweep=(0.0, 4.0 * math.pi, 400),
        params={"w1p": 0.9, "w1m": 0.1, "w2p": 0.0, "w2m": 0.0, "p1": 0.025},
        build=_build_random_field,
        default_obs=lambda: (pauli_observable(1), pauli_observable(3)),
        sweep_label="g*t",
        notes=(_FIELD_WEIGHTS_NOTE,),
    ),
    "sudden-transition": _Scenario(
        sweep=(0.0, 1.5, 300),
        params={"c1": 1.0, "c2": -0.6, "c3": 0.6, "gamma": 1.0},
        build=_build_sudden,
        default_obs=lambda: (pauli_observable(1), pauli_observable(3)),
        sweep_label="gamma*t",
        notes=(_PD_COHERENCE_NOTE,),
    ),
    "one-sided-pd": _Scenario(
        sweep=(0.0, 1.0, 201),
        params={"b": 0.7, "r": 0.7, "d": 0.3},
        build=_build_one_sided_pd,
        default_obs=lambda: (pauli_observable(1), pauli_observable(3)),
        sweep_label="p",
        notes=(_PD_COHERENCE_NOTE, _ONE_SIDED_STATE_NOTE),
    ),
}

SCENARIO_NAMES = tuple(_REGISTRY)


def scenario_defaults(name: str) -> tuple[tuple[float, float, int], dict[str, float], tuple[str, ...], str]:
    if name not in _REGISTRY:
        raise ScenarioError(f"unknown scenario {name!r}; choose from {', '.join(SCENARIO_NAMES)}")
    sc = _REGISTRY[name]
    return sc.sweep, dict(sc.params), sc.notes, sc.sweep_label


def run_scenario(spec: ScenarioSpec, cfg: OptimizerConfig | None = None) -> list[TimeSeriesRow]:
    """Evaluate the named scenario over its sweep; rows come back ordered by x."""
    if spec.name not in _REGISTRY:
        raise ScenarioError(f"unknown scenario {spec.name!r}; choose from {', '.join(SCENARIO_NAMES)}")
    sc = _REGISTRY[spec.name]
    cfg = cfg or OptimizerConfig()
    params = dict(sc.params)
    for key, value in spec.params.items():
        if key not in params:
            raise ScenarioError(f"scenario {spec.name!r} takes no parameter {key!r}")
        params[key] = value
    start, stop, steps = spec.sweep or sc.sweep
    if steps < 1 or not (math.isfinite(start) and math.isfinite(stop)) or stop < start:
        raise ScenarioError(f"invalid sweep ({start}, {stop}, {steps})")
    obs = spec.observables or sc.default_obs()
    rows = []
    for x in np.linspace(start, stop, steps):
        try:
            rho = sc.build(float(x), params)
        except ValueError as exc:
            raise ScenarioError(f"{spec.name} at {sc.sweep_label}={float(x):g}: {exc}") from None
        report = evaluate_bounds(rho, obs[0], obs[1], cfg)
        rows.append(TimeSeriesRow(x=float(x), report=report))
    return rows


# ---------------------------------------------------------------------------
# randomized verifier

def random_density(rng: np.random.Generator, dims: tuple[int, int]) -> DensityMatrix:
    """Hilbert-Schmidt-distributed random state via a normalized Gaussian square."""
    d = dims[0] * dims[1]
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    mat = g @ g.conj().T
    return validate_density(mat / np.trace(mat).real, dims, tol=1e-9)


def random_observable(rng: np.random.Generator, d: int, min_gap: float = 1e-6) -> Observable:
    """Random Hermitian observable, resampled until comfortably non-degenerate."""
    while True:
        g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        h = (g + g.conj().T) / 2.0
        if np.diff(np.linalg.eigvalsh(h)).min() > min_gap:
            return Observable(h)


@dataclass(frozen=True)
class VerifyResult:
    n_states: int
    dims: tuple[int, int]
    seed: int
    min_slacks: dict[str, float]
    tolerances: dict[str, float]
    violations: list[str]
    worst_state: np.ndarray | None

    @property
    def ok(self) -> bool:
        return not self.violations


def verify(
    n_states: int,
    dims: tuple[int, int],
    seed: int = 0,
    cfg: OptimizerConfig | None = None,
) -> VerifyResult:
    """Fuzz the three memory-assisted bounds and the single-system bound.

    Random states are paired with random non-degenerate observables; per-state
    RNG streams derive from (seed, index) so any evaluation order gives the
    same result. The single-system check tests H(X) + H(Z) >= 2*S(A) on the
    reduced state of A.
    """
    dA, dB = dims
    if dA not in (2, 3):
        raise ScenarioError(f"unsupported measured-side dimension dA={dA}")
    if dB > 4:
        raise ScenarioError(f"unsupported memory dimension dB={dB}")
    cfg = cfg or OptimizerConfig()
    opt_tol = BOUND_TOL_OPT if dA == 2 else 1e-3
    tolerances = {"U_b1": BOUND_TOL, "U_b2": opt_tol, "U_b3": opt_tol, "single": BOUND_TOL}
    slacks = {k: np.inf for k in tolerances}
    violations: list[str] = []
    worst: np.ndarray | None = None
    worst_slack = np.inf
    for index in range(n_states):
        rng = np.random.default_rng((seed, index))
        rho = random_density(rng, dims)
        x = random_observable(rng, dA)
        z = random_observable(rng, dA)
        report = evaluate_bounds(rho, x, z, cfg)
        here = {
            "U_b1": report.U - report.U_b1,
            "U_b2": report.U - report.U_b2,
            "U_b3": report.U - report.U_b3,
        }
        rho_a = partial_trace(rho, "A")
        h_sum = 0.0
        for obs in (x, z):
            projs = ProjectiveMeasurement.from_basis(obs.eigensystem.vectors)
            probs = np.array(
                [float(np.trace(p @ rho_a.mat).real) for p in projs.projectors]
            )
            h_sum += shannon(probs / probs.sum())
        here["single"] = h_sum - 2.0 * von_neumann(rho_a)
        for key, slack in here.items():
            slacks[key] = min(slacks[key], slack)
            if slack < -tolerances[key]:
                violations.append(f"state {index}: {key} violated by {-slack:.3e}")
                if slack < worst_slack:
                    worst_slack = slack
                    worst = rho.mat
    return VerifyResult(
        n_states=n_states,
        dims=dims,
        seed=seed,
        min_slacks=slacks,
        tolerances=tolerances,
        violations=violations,
        worst_state=worst,
    )


# ---------------------------------------------------------------------------
# state-spec grammar:  name:key=value,key=value

_STATE_BUILDERS: dict[str, tuple[tuple[str, ...], Callable[..., DensityMatrix]]] = {
    "werner": (("d", "f"), lambda d, f: werner(int(d), f)),
    "isotropic": (("d", "f"), lambda d, f: isotropic(int(d), f)),
    "bell-diagonal": (("c1", "c2", "c3"), bell_diagonal),
    "bell-like": (("alpha",), bell_like),
    "bell-mixture": (("w1p", "w1m", "w2p", "w2m"), bell_mixture),
    "qubit-qutrit": (("alpha", "gamma"), lambda alpha, gamma: qubit_qudit(alpha, gamma, "qutrit")),
    "qubit-ququart": (("alpha", "gamma"), lambda alpha, gamma: qubit_qudit(alpha, gamma, "ququart")),
}


class StateSpecError(ValueError):
    """Raised with a 1-based column pointing at the offending text."""


def parse_state_spec(text: str) -> DensityMatrix:
    """Build a state from a spec like ``werner:d=2,f=0.8``."""
    head, sep, rest = text.partition(":")
    name = head.strip()
    if name not in _STATE_BUILDERS:
        raise StateSpecError(
            f"column 1: unknown state family {name!r}; choose from {', '.join(_STATE_BUILDERS)}"
        )
    keys, builder = _STATE_BUILDERS[name]
    if not sep:
        raise StateSpecError(f"column {len(text) + 1}: expected ':' and parameters after {name!r}")
    values: dict[str, float] = {}
    cursor = len(head) + 1
    for chunk in rest.split(","):
        key, eq, val = chunk.partition("=")
        key = key.strip()
        if not eq or not key:
            raise StateSpecError(f"column {cursor + 1}: expected key=value, got {chunk!r}")
        if key not in keys:
            raise StateSpecError(
                f"column {cursor + 1}: unknown parameter {key!r} for {name} (takes {', '.join(keys)})"
            )
        try:
            values[key] = float(val)
        except ValueError:
            raise StateSpecError(
                f"column {cursor + len(key) + 2}: cannot parse number {val.strip()!r}"
            ) from None
        cursor += len(chunk) + 1
    missing = [k for k in keys if k not in values]
    if missing:
        raise StateSpecError(f"column {len(text) + 1}: missing parameters {', '.join(missing)}")
    try:
        return builder(**values)
    except ValueError as exc:
        raise StateSpecError(f"column 1: {exc}") from None
