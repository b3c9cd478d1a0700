"""Statevector and density-matrix circuit execution with depolarizing and
readout noise.

Noise conventions: NoiseModel.p1 and p2 are the TOTAL non-identity error
probabilities. After every single-qubit gate the channel
rho -> (1-p1) rho + (p1/3) (X rho X + Y rho Y + Z rho Z) is applied on the
gate's qubit; after every two-qubit gate each of the 15 non-identity Pauli
pairs is applied with probability p2/15. Channels are deterministic mixtures
(no stochastic Pauli insertion), attached to gates only; idle qubits stay
clean. Readout noise acts on counts, not on the state.

Basis index convention: bit q of an outcome index (and the q-th character
from the right of an outcome string) is qubit q.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .circuits import Circuit, gate_matrix
from .mitigation import ConfusionMatrix
from .pauli import MeasurementGroup, PauliHamiltonian, PauliString, is_compatible

Counts = dict[str, int]


@dataclass(frozen=True)
class QuantumState:
    """Either a norm-1 amplitude vector (pure) or a trace-1 density matrix."""

    data: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.data, dtype=complex)
        if arr.ndim == 1:
            n = arr.shape[0]
            if n & (n - 1) or n == 0:
                raise ValueError(f"amplitude length {n} is not a power of two")
            if abs(np.linalg.norm(arr) - 1.0) > 1e-6:
                raise ValueError("amplitude vector is not normalized")
        elif arr.ndim == 2:
            n = arr.shape[0]
            if arr.shape != (n, n) or n & (n - 1) or n == 0:
                raise ValueError(f"density matrix shape {arr.shape} invalid")
            if abs(np.trace(arr).real - 1.0) > 1e-6:
                raise ValueError("density matrix trace is not 1")
        else:
            raise ValueError("state must be a vector or a square matrix")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def is_density(self) -> bool:
        return self.data.ndim == 2

    @property
    def n_qubits(self) -> int:
        return int(self.data.shape[0]).bit_length() - 1

    def density(self) -> np.ndarray:
        """Density-matrix view (outer product for pure states)."""
        if self.is_density:
            return self.data
        return np.outer(self.data, np.conj(self.data))


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing probabilities plus optional readout confusion.

    p1 defaults to 0.1 * p2 when not given.
    """

    p2: float = 0.0
    p1: float | None = None
    confusion: ConfusionMatrix | None = None

    def __post_init__(self) -> None:
        p1 = 0.1 * self.p2 if self.p1 is None else self.p1
        if not 0.0 <= self.p2 <= 1.0:
            raise ValueError(f"p2 must lie in [0, 1], got {self.p2}")
        if not 0.0 <= p1 <= 1.0:
            raise ValueError(f"p1 must lie in [0, 1], got {p1}")
        object.__setattr__(self, "p1", float(p1))
        object.__setattr__(self, "p2", float(self.p2))


def _apply_left(arr: np.ndarray, unitary: np.ndarray, qubits: tuple[int, ...], n: int) -> np.ndarray:
    """Apply `unitary` to the ket index of `arr` (vector or matrix) on `qubits`.

    The unitary's basis orders the first listed qubit as the most significant
    bit.
    """
    k = len(qubits)
    rest = arr.shape[1:]
    t = arr.reshape((2,) * n + rest)
    axes = [n - 1 - q for q in qubits]
    t = np.moveaxis(t, axes, range(k))
    shape = t.shape
    t = (unitary @ t.reshape(1 << k, -1)).reshape(shape)
    t = np.moveaxis(t, range(k), axes)
    return t.reshape((1 << n,) + rest)


def _conjugate(rho: np.ndarray, unitary: np.ndarray, qubits: tuple[int, ...], n: int) -> np.ndarray:
    """U rho U-dagger on the given qubits."""
    left = _apply_left(rho, unitary, qubits, n)
    return np.conj(_apply_left(np.conj(left).T, unitary, qubits, n)).T


def _replace_with_mixed(rho: np.ndarray, qubits: tuple[int, ...], n: int) -> np.ndarray:
    """Trace out `qubits` and reinsert the maximally mixed state there."""
    k = len(qubits)
    t = rho.reshape((2,) * (2 * n))
    row = [n - 1 - q for q in qubits]
    col = [2 * n - 1 - q for q in qubits]
    t = np.moveaxis(t, row + col, range(2 * k))
    out = np.zeros_like(t)
    if k == 1:
        out[0, 0] = out[1, 1] = 0.5 * (t[0, 0] + t[1, 1])
    else:
        traced = t[0, 0, 0, 0] + t[0, 1, 0, 1] + t[1, 0, 1, 0] + t[1, 1, 1, 1]
        for a in (0, 1):
            for b in (0, 1):
                out[a, b, a, b] = 0.25 * traced
    out = np.moveaxis(out, range(2 * k), row + col)
    return out.reshape(rho.shape)


def _depolarize(rho: np.ndarray, qubits: tuple[int, ...], p: float, n: int) -> np.ndarray:
    """Uniform mixture of the 4^k - 1 non-identity Pauli conjugations.

    Computed through the twirl identity sum_P P rho P = 4^k * mixed - rho
    (sum over non-identity P), which avoids forming each conjugation.
    """
    if p == 0.0:
        return rho
    d2 = 1 << (2 * len(qubits))
    frac = d2 * p / (d2 - 1.0)
    return (1.0 - frac) * rho + frac * _replace_with_mixed(rho, qubits, n)


def _resolve(circuit: Circuit, bindings: Mapping[str, float] | None):
    bindings = bindings or {}
    resolved = []
    for gate in circuit.gates:
        try:
            params = gate.resolved(bindings)
        except KeyError as exc:
            raise ValueError(f"{exc.args[0]}") from None
        resolved.append((gate.kind, gate.qubits, params))
    return resolved


def run_statevector(circuit: Circuit, bindings: Mapping[str, float] | None = None) -> QuantumState:
    """Noise-free execution from |0...0>."""
    n = circuit.n_qubits
    psi = np.zeros(1 << n, dtype=complex)
    psi[0] = 1.0
    for kind, qubits, params in _resolve(circuit, bindings):
        psi = _apply_left(psi, gate_matrix(kind, params), qubits, n)
    return QuantumState(psi)


def run_density(
    circuit: Circuit,
    bindings: Mapping[str, float] | None = None,
    noise: NoiseModel | None = None,
) -> QuantumState:
    """Density-matrix execution with per-gate depolarizing channels."""
    noise = noise or NoiseModel()
    n = circuit.n_qubits
    rho = np.zeros((1 << n, 1 << n), dtype=complex)
    rho[0, 0] = 1.0
    for kind, qubits, params in _resolve(circuit, bindings):
        rho = _conjugate(rho, gate_matrix(kind, params), qubits, n)
        rho = _depolarize(rho, qubits, noise.p1 if len(qubits) == 1 else noise.p2, n)
    return QuantumState(rho)


# Basis-change unitaries: U P U-dagger = Z for P in {X, Y}. Applied as exact
# matrix math at measurement time, so they carry no gate noise.
_HADAMARD = (1.0 / np.sqrt(2.0)) * np.array([[1, 1], [1, -1]], dtype=complex)
_Y_TO_Z = _HADAMARD @ np.diag([1.0, -1.0j])


def _basis_probabilities(state: QuantumState, basis: PauliString) -> np.ndarray:
    n = state.n_qubits
    if basis.n_qubits != n:
        raise ValueError(f"basis {basis.label!r} does not match {n} qubits")
    rotations = []
    for q in range(n):
        ch = basis.char_on(q)
        if ch in ("Z", "I"):
            continue
        if ch == "X":
            rotations.append((q, _HADAMARD))
        elif ch == "Y":
            rotations.append((q, _Y_TO_Z))
        else:
            raise ValueError(f"invalid basis letter {ch!r}")
    if state.is_density:
        rho = state.data
        for q, u in rotations:
            rho = _conjugate(rho, u, (q,), n)
        probs = np.real(np.diag(rho)).copy()
    else:
        psi = state.data
        for q, u in rotations:
            psi = _apply_left(psi, u, (q,), n)
        probs = np.abs(psi) ** 2
    probs[probs < 0] = 0.0
    return probs / probs.sum()


def sample_counts(state: QuantumState, basis: PauliString, shots: int, seed) -> Counts:
    """Draw `shots` outcomes in the given measurement basis.

    The exact outcome distribution is computed first (basis letters I are
    measured as Z); sampling uses a generator seeded deterministically from
    `seed`, so identical seeds give identical counts.
    """
    if shots <= 0:
        raise ValueError("shots must be positive")
    probs = _basis_probabilities(state, basis)
    rng = np.random.default_rng(seed)
    draws = rng.multinomial(shots, probs)
    n = state.n_qubits
    return {format(i, f"0{n}b"): int(c) for i, c in enumerate(draws) if c}


def apply_readout_noise(counts: Counts, confusion: ConfusionMatrix, seed) -> Counts:
    """Resample each shot's outcome i to j with probability C[j][i]."""
    if not counts:
        return {}
    n = len(next(iter(counts)))
    if confusion.n_qubits != n:
        raise ValueError(
            f"confusion matrix is for {confusion.n_qubits} qubits, counts have {n}"
        )
    rng = np.random.default_rng(seed)
    out = np.zeros(confusion.dim, dtype=np.int64)
    for outcome, cnt in sorted(counts.items()):
        if len(outcome) != n:
            raise ValueError(f"inconsistent outcome length {outcome!r}")
        out += rng.multinomial(cnt, confusion.matrix[:, int(outcome, 2)])
    return {format(i, f"0{n}b"): int(c) for i, c in enumerate(out) if c}


def expectation_from_counts(
    counts: Counts, group: MeasurementGroup, h: PauliHamiltonian
) -> float:
    """Partial energy of the group's terms from counts drawn in group.basis.

    Each outcome contributes the product of (-1)^bit over a term's non-identity
    positions; the return value is sum_i c_i * mean eigenvalue, offset excluded.
    """
    total_shots = sum(counts.values())
    if total_shots <= 0:
        raise ValueError("counts are empty")
    n = h.n_qubits
    partial = 0.0
    for t in group.members:
        pauli, coeff = h.terms[t]
        if not is_compatible(pauli, group.basis):
            raise ValueError(
                f"term {pauli.label!r} is not measurable in basis {group.basis.label!r}"
            )
        mask = 0
        for q in pauli.support:
            mask |= 1 << q
        acc = 0
        for outcome, cnt in counts.items():
            parity = bin(int(outcome, 2) & mask).count("1") & 1
            acc += -cnt if parity else cnt
        partial += coeff * acc / total_shots
    return partial


def hf_state(n_qubits: int, bitstring: str) -> QuantumState:
    """Computational basis state |bitstring> (leftmost char = qubit n-1)."""
    if len(bitstring) != n_qubits or set(bitstring) - {"0", "1"}:
        raise ValueError(f"bad basis bitstring {bitstring!r} for {n_qubits} qubits")
    psi = np.zeros(1 << n_qubits, dtype=complex)
    psi[int(bitstring, 2)] = 1.0
    return QuantumState(psi)
