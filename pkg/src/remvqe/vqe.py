"""Energy evaluation, derivative-free minimization, and the 1-parameter
sweep-and-fit procedure.

The sampling pipeline per evaluation: group commuting terms, draw counts per
group (splitting the shot budget equally), optionally push them through
readout noise, optionally unfold, take per-term expectations, sum with the
Hamiltonian offset. Exact backends replace counts with the exact outcome
distribution of the prepared state, which keeps noisy-but-shotless runs
deterministic.

Randomness is derived per evaluation from (master seed, evaluation index,
group index, stage), so a fixed seed reproduces every draw bit for bit no
matter the call order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Sequence

import numpy as np
import scipy.optimize

from .ansatz import AnsatzSpec, ansatz_circuit
from .mitigation import (
    ConfusionMatrix,
    counts_to_distribution,
    rem_apply,
    rem_delta,
    unfold,
)
from .pauli import MeasurementGroup, PauliHamiltonian, expectation, group_terms
from .sim import (
    NoiseModel,
    QuantumState,
    _basis_probabilities,
    apply_readout_noise,
    hf_state,
    run_density,
    run_statevector,
    sample_counts,
)

# Evaluation index reserved for the reference-state measurement, far outside
# any optimizer's reach, so its random draws never collide with iterates.
REFERENCE_INDEX = 10**9


@dataclass(frozen=True)
class EnergyEvaluator:
    """Immutable recipe for measuring <H> at a parameter vector.

    noise=None runs the pure statevector; shots=None skips sampling and uses
    exact outcome distributions. With rem=True, `delta` (set by
    with_reference) is subtracted from every energy.
    """

    hamiltonian: PauliHamiltonian
    ansatz: AnsatzSpec
    noise: NoiseModel | None = None
    shots: int | None = None
    readout_mitigation: bool = False
    rem: bool = False
    seed: int = 0
    unfold_matrix: ConfusionMatrix | None = None
    delta: float | None = None

    def __post_init__(self) -> None:
        if self.shots is not None and self.shots <= 0:
            raise ValueError("shots must be positive when sampling")

    @property
    def confusion(self) -> ConfusionMatrix | None:
        """Confusion applied to outcomes (from the noise model)."""
        return self.noise.confusion if self.noise is not None else None

    @property
    def inverse_confusion(self) -> ConfusionMatrix | None:
        """Matrix used for unfolding; defaults to the noise model's own."""
        return self.unfold_matrix if self.unfold_matrix is not None else self.confusion


@lru_cache(maxsize=64)
def _grouping(h: PauliHamiltonian) -> tuple[MeasurementGroup, ...]:
    return tuple(group_terms(h))


@lru_cache(maxsize=4096)
def _parity_signs(n_qubits: int, mask: int) -> np.ndarray:
    idx = np.arange(1 << n_qubits)
    signs = np.array([-1.0 if bin(v).count("1") & 1 else 1.0 for v in idx & mask])
    signs.setflags(write=False)
    return signs


def _term_mask(h: PauliHamiltonian, t: int) -> int:
    mask = 0
    for q in h.terms[t][0].support:
        mask |= 1 << q
    return mask


def _group_energy(dist: np.ndarray, group: MeasurementGroup, h: PauliHamiltonian) -> float:
    total = 0.0
    for t in group.members:
        signs = _parity_signs(h.n_qubits, _term_mask(h, t))
        total += h.terms[t][1] * float(signs @ dist)
    return total


def _shot_split(total: int, n_groups: int) -> list[int]:
    base, extra = divmod(total, n_groups)
    return [base + (1 if g < extra else 0) for g in range(n_groups)]


def _prepare(ev: EnergyEvaluator, theta: Sequence[float]) -> QuantumState:
    spec = ev.ansatz
    if len(theta) != spec.n_params:
        raise ValueError(
            f"{spec.family} ansatz takes {spec.n_params} parameters, got {len(theta)}"
        )
    bindings = {name: float(v) for name, v in zip(spec.parameter_names(), theta)}
    circuit = ansatz_circuit(spec)
    noise = ev.noise
    # Readout confusion acts on measurement outcomes, not on the state, so a
    # noise model with zero gate-error rates still runs the pure statevector.
    if noise is None or (noise.p1 == 0.0 and noise.p2 == 0.0):
        return run_statevector(circuit, bindings)
    return run_density(circuit, bindings, noise)


def evaluate(ev: EnergyEvaluator, theta: Sequence[float], index: int = 0) -> float:
    """Energy at `theta`; `index` keys this evaluation's random draws."""
    if ev.rem and ev.delta is None:
        raise ValueError("rem flag requires a reference evaluation (see with_reference)")
    state = _prepare(ev, theta)
    h = ev.hamiltonian
    confusion = ev.confusion
    if ev.shots is None and confusion is None and not ev.readout_mitigation:
        energy = expectation(h, state)
    else:
        if ev.readout_mitigation and ev.inverse_confusion is None:
            raise ValueError("readout mitigation needs a confusion matrix")
        groups = _grouping(h)
        shots = _shot_split(ev.shots, len(groups)) if ev.shots is not None else None
        energy = h.offset
        for g, group in enumerate(groups):
            if shots is None:
                dist = _basis_probabilities(state, group.basis)
                if confusion is not None:
                    dist = confusion.matrix @ dist
            else:
                ss = np.random.SeedSequence((ev.seed, index, g, 0))
                counts = sample_counts(state, group.basis, shots[g], ss)
                if confusion is not None:
                    ss = np.random.SeedSequence((ev.seed, index, g, 1))
                    counts = apply_readout_noise(counts, confusion, ss)
                dist = counts_to_distribution(counts, h.n_qubits)
            if ev.readout_mitigation:
                dist = unfold(ev.inverse_confusion, dist)
            energy += _group_energy(dist, group, h)
    if ev.rem:
        energy = rem_apply(energy, ev.delta)
    return float(energy)


def reference_exact_energy(ev: EnergyEvaluator) -> float:
    """Exact <H> in the ansatz's Hartree-Fock basis state (classical value)."""
    return expectation(
        ev.hamiltonian, hf_state(ev.ansatz.n_qubits, ev.ansatz.hf_bitstring)
    )


def with_reference(
    ev: EnergyEvaluator,
    e_exact_ref: float | None = None,
    index: int = REFERENCE_INDEX,
) -> tuple[EnergyEvaluator, float, float]:
    """Measure the reference state through ev's pipeline and arm REM.

    All parameters are bound to 0, which every ansatz family maps to the HF
    state, so this reuses the optimizer's standard initial guess. Returns
    (armed evaluator, measured reference energy, exact reference energy).
    """
    base = replace(ev, rem=False, delta=None)
    e_vqe_ref = evaluate(base, np.zeros(ev.ansatz.n_params), index=index)
    if e_exact_ref is None:
        e_exact_ref = reference_exact_energy(ev)
    delta = rem_delta(e_vqe_ref, e_exact_ref)
    return replace(ev, rem=True, delta=delta), e_vqe_ref, float(e_exact_ref)


@dataclass(frozen=True)
class VqeOutcome:
    theta: np.ndarray
    energy: float
    n_evaluations: int
    trace: tuple[tuple[tuple[float, ...], float], ...]
    converged: bool
    message: str

    def __post_init__(self) -> None:
        arr = np.asarray(self.theta, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "theta", arr)


def _outcome_from_trace(trace, converged, message) -> VqeOutcome:
    best = min(range(len(trace)), key=lambda i: trace[i][1])
    theta, energy = trace[best]
    return VqeOutcome(
        np.array(theta), energy, len(trace), tuple(trace), converged, message
    )


def minimize(
    ev: EnergyEvaluator,
    theta0: Sequence[float] | None = None,
    optimizer: str = "nelder-mead",
    max_evals: int = 2000,
    tol: float = 1e-6,
    spsa_a: float = 0.15,
    spsa_c: float = 0.1,
) -> VqeOutcome:
    """Derivative-free minimization from the HF start (theta0 = 0 default).

    Runs until the energy tolerance or the evaluation budget is exhausted;
    running out of budget sets converged=False in the outcome instead of
    raising. The reported optimum is the best trace entry.
    """
    theta0 = np.zeros(ev.ansatz.n_params) if theta0 is None else np.asarray(theta0, float)
    if theta0.shape != (ev.ansatz.n_params,):
        raise ValueError(
            f"theta0 has shape {theta0.shape}, expected ({ev.ansatz.n_params},)"
        )
    trace: list[tuple[tuple[float, ...], float]] = []

    def f(theta: np.ndarray) -> float:
        energy = evaluate(ev, theta, index=len(trace))
        trace.append((tuple(float(v) for v in theta), energy))
        return energy

    if optimizer == "nelder-mead":
        # scipy's default simplex around an all-zero start spans only 2.5e-4,
        # far below the radian scale of rotation angles; seed it at 0.1 instead.
        simplex = np.vstack([theta0, theta0 + 0.1 * np.eye(theta0.size)])
        res = scipy.optimize.minimize(
            f,
            theta0,
            method="Nelder-Mead",
            options={
                "fatol": tol,
                "xatol": tol,
                "maxfev": max_evals,
                "maxiter": max_evals,
                "initial_simplex": simplex,
            },
        )
        return _outcome_from_trace(trace, bool(res.success), str(res.message))
    if optimizer == "spsa":
        return _spsa(ev, f, theta0, max_evals, tol, spsa_a, spsa_c, trace)
    raise ValueError(f"unknown optimizer {optimizer!r} (choose nelder-mead or spsa)")


def _spsa(ev, f, theta0, max_evals, tol, a, c, trace) -> VqeOutcome:
    """Simultaneous-perturbation descent with the standard gain schedules."""
    alpha, gamma, stability = 0.602, 0.101, 10.0
    rng = np.random.default_rng(np.random.SeedSequence((ev.seed, 2**32)))
    theta = theta0.astype(float).copy()
    window: list[float] = []
    prev_avg: float | None = None
    converged = False
    message = "evaluation budget exhausted"
    for k in range(max_evals // 2):
        ak = a / (k + 1 + stability) ** alpha
        ck = c / (k + 1) ** gamma
        direction = rng.choice((-1.0, 1.0), size=theta.shape)
        e_plus = f(theta + ck * direction)
        e_minus = f(theta - ck * direction)
        gradient = (e_plus - e_minus) / (2.0 * ck) * (1.0 / direction)
        theta = theta - ak * gradient
        window.append(0.5 * (e_plus + e_minus))
        if len(window) == 10:
            avg = sum(window) / len(window)
            window.clear()
            if prev_avg is not None and abs(avg - prev_avg) < tol:
                converged = True
                message = "averaged energy change below tolerance"
                break
            prev_avg = avg
    if len(trace) < max_evals:
        f(theta)
    return _outcome_from_trace(trace, converged, message)


@dataclass(frozen=True)
class SweepFit:
    """Least-squares fit of a 1-parameter energy curve to C + A cos(theta - alpha)."""

    theta_min: float
    e_min: float
    c: float
    a: float
    alpha: float
    grid: tuple[float, ...]
    energies: tuple[float, ...]

    def __iter__(self):
        return iter((self.theta_min, self.e_min, self.c, self.a, self.alpha))

    def value_at(self, theta: float) -> float:
        return self.c + self.a * math.cos(theta - self.alpha)


def default_grid(n_points: int = 25) -> np.ndarray:
    return np.linspace(-math.pi, math.pi, n_points)


def sweep_and_fit(ev: EnergyEvaluator, grid: Sequence[float] | None = None) -> SweepFit:
    """Evaluate a 1-parameter ansatz on a grid and fit the cosine model.

    The fit is linear least squares on the basis {1, cos, sin}, normalized to
    A >= 0; the minimum of the model is at theta_min = alpha + pi (wrapped),
    e_min = c - a.
    """
    if ev.ansatz.n_params != 1:
        raise ValueError(
            f"sweep needs a 1-parameter ansatz, {ev.ansatz.family} has "
            f"{ev.ansatz.n_params}"
        )
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 4:
        raise ValueError("grid needs at least 4 points")
    if np.unique(grid).size < 3:
        raise ValueError("grid is degenerate: fewer than 3 distinct angles")
    energies = np.array([evaluate(ev, (t,), index=i) for i, t in enumerate(grid)])
    design = np.column_stack([np.ones_like(grid), np.cos(grid), np.sin(grid)])
    (c0, pc, ps), *_ = np.linalg.lstsq(design, energies, rcond=None)
    a = math.hypot(pc, ps)
    alpha = math.atan2(ps, pc)
    theta_min = math.atan2(math.sin(alpha + math.pi), math.cos(alpha + math.pi))
    return SweepFit(
        theta_min,
        float(c0 - a),
        float(c0),
        float(a),
        float(alpha),
        tuple(float(t) for t in grid),
        tuple(float(e) for e in energies),
    )
