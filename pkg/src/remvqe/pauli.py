"""Pauli-string algebra and Hamiltonian representation.

Provides the weighted-Pauli-sum Hamiltonian type used throughout the package,
exact expectation values against statevectors or density matrices, a dense
diagonalization oracle, qubit-wise commuting measurement grouping, and the
plain-text Hamiltonian format.

Qubit-ordering convention: the leftmost character of a Pauli label acts on
qubit n-1, the rightmost on qubit 0, so basis index i corresponds to the
bitstring format(i, "0nb").
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

PAULI_CHARS = frozenset("IXYZ")


@dataclass(frozen=True)
class PauliString:
    """Tensor product of single-qubit I/X/Y/Z operators, stored as a label."""

    label: str

    def __post_init__(self) -> None:
        bad = set(self.label) - PAULI_CHARS
        if bad:
            raise ValueError(
                f"invalid Pauli character(s) {sorted(bad)} in label {self.label!r}"
            )
        if not self.label:
            raise ValueError("empty Pauli label")

    @property
    def n_qubits(self) -> int:
        return len(self.label)

    def char_on(self, qubit: int) -> str:
        """Single-qubit letter acting on `qubit` (0 = rightmost label char)."""
        return self.label[len(self.label) - 1 - qubit]

    @property
    def support(self) -> tuple[int, ...]:
        """Qubits acted on non-trivially, ascending."""
        n = len(self.label)
        return tuple(q for q in range(n) if self.label[n - 1 - q] != "I")

    def __str__(self) -> str:
        return self.label


def parse_pauli(text: str, n_qubits: int) -> PauliString:
    """Validate `text` as a Pauli label of exactly `n_qubits` characters."""
    if len(text) != n_qubits:
        raise ValueError(
            f"Pauli label {text!r} has length {len(text)}, expected {n_qubits}"
        )
    return PauliString(text)


@lru_cache(maxsize=4096)
def _action(label: str) -> tuple[int, np.ndarray]:
    """Return (flip_mask, phases) such that P|i> = phases[i] |i ^ flip_mask>."""
    n = len(label)
    flip = 0
    sign_mask = 0  # qubits contributing (-1)^bit (Y and Z)
    n_y = 0
    for q in range(n):
        ch = label[n - 1 - q]
        if ch in "XY":
            flip |= 1 << q
        if ch in "YZ":
            sign_mask |= 1 << q
        if ch == "Y":
            n_y += 1
    idx = np.arange(1 << n)
    parity = np.zeros(1 << n, dtype=np.int64)
    masked = idx & sign_mask
    for q in range(n):
        parity ^= (masked >> q) & 1
    phases = (1j) ** n_y * np.where(parity, -1.0, 1.0)
    return flip, phases.astype(complex)


@dataclass(frozen=True)
class PauliHamiltonian:
    """Real-weighted sum of Pauli strings plus a classical energy offset.

    Duplicate labels are merged by summation at construction; the represented
    operator is Hermitian since coefficients are real.
    """

    n_qubits: int
    terms: tuple[tuple[PauliString, float], ...]
    offset: float = 0.0

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        merged: dict[str, float] = {}
        order: list[str] = []
        for entry in self.terms:
            pauli, coeff = entry
            if isinstance(pauli, str):
                pauli = PauliString(pauli)
            if pauli.n_qubits != self.n_qubits:
                raise ValueError(
                    f"term {pauli.label!r} has {pauli.n_qubits} qubits, "
                    f"Hamiltonian declares {self.n_qubits}"
                )
            if pauli.label not in merged:
                merged[pauli.label] = 0.0
                order.append(pauli.label)
            merged[pauli.label] += float(coeff)
        object.__setattr__(
            self,
            "terms",
            tuple((PauliString(lbl), merged[lbl]) for lbl in order),
        )
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    def coefficient(self, label: str) -> float:
        """Coefficient of `label`, 0.0 if absent."""
        for pauli, coeff in self.terms:
            if pauli.label == label:
                return coeff
        return 0.0


@dataclass(frozen=True)
class MeasurementGroup:
    """Qubit-wise compatible terms measurable with one basis rotation.

    `basis` has one letter per qubit from {Z, X, Y} (identity slots absorbed
    into Z); every member term's non-identity letters match the basis.
    """

    basis: PauliString
    members: tuple[int, ...]


def _state_array(state) -> np.ndarray:
    arr = getattr(state, "data", state)
    return np.asarray(arr)


def expectation(h: PauliHamiltonian, state) -> float:
    """<state| H |state> (or trace(H rho)) including the classical offset.

    `state` may be a norm-1 amplitude vector, a trace-1 density matrix, or a
    QuantumState wrapping either.
    """
    arr = _state_array(state)
    dim = 1 << h.n_qubits
    if arr.shape not in ((dim,), (dim, dim)):
        raise ValueError(
            f"state dimension {arr.shape} does not match {h.n_qubits} qubits"
        )
    idx = np.arange(dim)
    total = 0.0 + 0.0j
    if arr.ndim == 1:
        conj = np.conj(arr)
        for pauli, coeff in h.terms:
            flip, phases = _action(pauli.label)
            total += coeff * np.sum(phases * conj[idx ^ flip] * arr)
    else:
        for pauli, coeff in h.terms:
            flip, phases = _action(pauli.label)
            total += coeff * np.sum(phases * arr[idx, idx ^ flip])
    value = complex(total)
    if abs(value.imag) > 1e-10:
        raise ValueError(f"expectation has imaginary part {value.imag:.3e}")
    return value.real + h.offset


_DENSE_LIMIT = 12


def to_dense_matrix(h: PauliHamiltonian) -> np.ndarray:
    """Dense 2^n x 2^n Hermitian matrix with the offset on the diagonal."""
    if h.n_qubits > _DENSE_LIMIT:
        raise ValueError(
            f"dense construction limited to {_DENSE_LIMIT} qubits, got {h.n_qubits}"
        )
    dim = 1 << h.n_qubits
    mat = np.zeros((dim, dim), dtype=complex)
    idx = np.arange(dim)
    for pauli, coeff in h.terms:
        flip, phases = _action(pauli.label)
        mat[idx ^ flip, idx] += coeff * phases
    mat[idx, idx] += h.offset
    return mat


def ground_state_energy(h: PauliHamiltonian) -> tuple[float, np.ndarray]:
    """Minimum eigenvalue and eigenvector of the dense matrix (exact oracle)."""
    eigvals, eigvecs = np.linalg.eigh(to_dense_matrix(h))
    return float(eigvals[0]), eigvecs[:, 0]


def group_terms(h: PauliHamiltonian) -> list[MeasurementGroup]:
    """Greedy first-fit grouping of terms into qubit-wise compatible bases.

    Every term lands in exactly one group, groups keep first-seen order, and
    unconstrained basis slots default to Z.
    """
    n = h.n_qubits
    bases: list[list[str | None]] = []
    members: list[list[int]] = []
    for t, (pauli, _) in enumerate(h.terms):
        letters = [pauli.char_on(q) for q in range(n)]
        for basis, mem in zip(bases, members):
            if all(
                ch == "I" or basis[q] is None or basis[q] == ch
                for q, ch in enumerate(letters)
            ):
                for q, ch in enumerate(letters):
                    if ch != "I":
                        basis[q] = ch
                mem.append(t)
                break
        else:
            bases.append([ch if ch != "I" else None for ch in letters])
            members.append([t])
    groups = []
    for basis, mem in zip(bases, members):
        label = "".join((basis[q] or "Z") for q in reversed(range(n)))
        groups.append(MeasurementGroup(PauliString(label), tuple(mem)))
    return groups


def is_compatible(term: PauliString, basis: PauliString) -> bool:
    """True when every non-identity letter of `term` matches `basis`."""
    return all(
        term.char_on(q) == "I" or term.char_on(q) == basis.char_on(q)
        for q in range(term.n_qubits)
    )


# --- plain-text Hamiltonian format ------------------------------------------
#
# UTF-8 lines; '#' starts a comment; header lines `qubits=<n>` and
# `offset=<real>`; term lines `<label> <coefficient>`.


def format_hamiltonian(h: PauliHamiltonian) -> str:
    lines = [f"qubits={h.n_qubits}", f"offset={h.offset!r}"]
    lines += [f"{pauli.label} {coeff!r}" for pauli, coeff in h.terms]
    return "\n".join(lines) + "\n"


def parse_hamiltonian(text: str) -> PauliHamiltonian:
    """Parse the text format; raises ValueError with a line number on errors."""
    n_qubits: int | None = None
    offset = 0.0
    terms: list[tuple[str, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key == "qubits":
                try:
                    n_qubits = int(value)
                except ValueError:
                    raise ValueError(f"line {lineno}: bad qubit count {value!r}")
                if n_qubits < 1:
                    raise ValueError(f"line {lineno}: qubit count must be positive")
            elif key == "offset":
                try:
                    offset = float(value)
                except ValueError:
                    raise ValueError(f"line {lineno}: bad offset {value!r}")
            else:
                raise ValueError(f"line {lineno}: unknown header {key!r}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(
                f"line {lineno}: expected '<label> <coefficient>', got {raw!r}"
            )
        if n_qubits is None:
            raise ValueError(f"line {lineno}: term before qubits= header")
        label, coeff_text = parts
        try:
            pauli = parse_pauli(label, n_qubits)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}")
        try:
            coeff = float(coeff_text)
        except ValueError:
            raise ValueError(f"line {lineno}: bad coefficient {coeff_text!r}")
        terms.append((pauli.label, coeff))
    if n_qubits is None:
        raise ValueError("missing qubits= header")
    if not terms:
        raise ValueError("no Pauli terms found")
    return PauliHamiltonian(n_qubits, tuple(terms), offset)
