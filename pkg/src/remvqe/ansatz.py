"""Variational circuit families and Hartree-Fock state preparation.

Three families are provided:

- ``compact-uccd``: the 1-parameter H2 circuit preparing
  cos(theta/2)|01> - sin(theta/2)|10> with a single entangling gate.
- ``uccsd``: unitary coupled cluster with singles and doubles, one Trotter
  step. Each excitation k contributes blocks exp(-i * s * theta_k / 2 * P)
  for its Pauli strings (P, s), realized as basis rotations, a CNOT parity
  ladder over the string's support, RZ(s * theta_k), and the unwind.
- ``hardware-efficient``: alternating single-qubit rotation layers and fixed
  CZ entangler layers over a connectivity map.

Binding every parameter to 0 reproduces the Hartree-Fock reference state up
to global phase for all families; this coincidence is what lets the
reference-state correction reuse the initial evaluation for free.

Qubit/bit convention: the leftmost character of ``hf_bitstring`` (and of
every Pauli label) is the highest-numbered qubit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .circuits import Angle, Circuit, Gate, Param, circuit_stats

__all__ = [
    "Excitation",
    "AnsatzSpec",
    "hartree_fock_circuit",
    "h2_compact_circuit",
    "ucc_circuit",
    "hardware_efficient_circuit",
    "ansatz_circuit",
    "uccsd_excitations",
    "h2_compact_spec",
    "uccsd_spec",
    "hardware_efficient_spec",
    "circuit_stats",
]

_FAMILIES = ("compact-uccd", "uccsd", "hardware-efficient")


@dataclass(frozen=True)
class Excitation:
    """One cluster operator: exp(theta * (T - T+)) expanded in Pauli strings.

    `strings` holds (label, sign) pairs; the circuit realizes
    exp(-i * sign * theta / 2 * P) for each, in order. `index` selects which
    entry of the parameter vector drives this excitation.
    """

    kind: str
    index: int
    strings: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if self.kind not in ("single", "double"):
            raise ValueError(f"excitation kind must be single or double, got {self.kind!r}")
        if self.index < 0:
            raise ValueError("parameter index must be non-negative")
        if not self.strings:
            raise ValueError("excitation needs at least one Pauli string")
        labels = [label for label, _ in self.strings]
        if len(set(labels)) != len(labels):
            raise ValueError("excitation Pauli strings must be pairwise distinct")
        width = len(labels[0])
        for label, sign in self.strings:
            if len(label) != width:
                raise ValueError(f"Pauli labels of mixed length in excitation: {label!r}")
            if set(label) - set("IXYZ"):
                raise ValueError(f"invalid Pauli label {label!r}")
            if set(label) == {"I"}:
                raise ValueError("identity string cannot appear in an excitation")
            if sign not in (1, -1):
                raise ValueError(f"string sign must be +1 or -1, got {sign}")

    @property
    def n_qubits(self) -> int:
        return len(self.strings[0][0])


# Spin-orbital excitations for the two occupied-virtual layouts used by the
# builtin molecules, parity-mapped and reduced to the stated qubit counts.
# Signs and prefactors were fixed by matching the energy minima of the
# embedded Hamiltonians; amplitude normalization is absorbed into theta.
_UCCSD_2Q = (
    Excitation("single", 0, (("IY", 1),)),
    Excitation("single", 1, (("YI", -1),)),
    Excitation("double", 2, (("XY", 1), ("YX", -1))),
)

_UCCSD_4Q = (
    Excitation("single", 0, (("IIIY", 1), ("IIZY", -1))),
    Excitation("single", 1, (("IIXY", 1), ("IIYX", 1))),
    Excitation("single", 2, (("IYII", -1), ("ZYII", -1))),
    Excitation("single", 3, (("XYII", -1), ("YXII", -1))),
    Excitation(
        "double", 4,
        (("IXIY", 1), ("IXZY", -1), ("IYIX", -1), ("IYZX", 1),
         ("ZXIY", 1), ("ZXZY", -1), ("ZYIX", -1), ("ZYZX", 1)),
    ),
    Excitation(
        "double", 5,
        (("XXIY", 1), ("XXZY", -1), ("XYIX", -1), ("XYZX", 1),
         ("YXIX", -1), ("YXZX", 1), ("YYIY", -1), ("YYZY", 1)),
    ),
    Excitation(
        "double", 6,
        (("IXXY", 1), ("IXYX", 1), ("IYXX", -1), ("IYYY", 1),
         ("ZXXY", 1), ("ZXYX", 1), ("ZYXX", -1), ("ZYYY", 1)),
    ),
    Excitation(
        "double", 7,
        (("XXXY", 1), ("XXYX", 1), ("XYXX", -1), ("XYYY", 1),
         ("YXXX", -1), ("YXYY", 1), ("YYXY", -1), ("YYYX", -1)),
    ),
)


def uccsd_excitations(n_qubits: int) -> tuple[Excitation, ...]:
    """Singles-and-doubles tables for the supported reduced systems."""
    if n_qubits == 2:
        return _UCCSD_2Q
    if n_qubits == 4:
        return _UCCSD_4Q
    raise ValueError(f"no UCCSD excitation table for {n_qubits} qubits (supported: 2, 4)")


@dataclass(frozen=True)
class AnsatzSpec:
    """Declarative description of a variational circuit family instance."""

    family: str
    n_qubits: int
    n_params: int
    hf_bitstring: str
    excitations: tuple[Excitation, ...] | None = None
    entangler_map: tuple[tuple[int, int], ...] | None = None
    n_layers: int = 0
    rotation_gates: tuple[str, ...] = field(default=("RY",))

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown ansatz family {self.family!r}")
        if len(self.hf_bitstring) != self.n_qubits or set(self.hf_bitstring) - {"0", "1"}:
            raise ValueError(
                f"hf_bitstring {self.hf_bitstring!r} is not a {self.n_qubits}-bit string"
            )
        if self.family == "compact-uccd":
            expect = 1
        elif self.family == "uccsd":
            if not self.excitations:
                raise ValueError("uccsd spec needs excitations")
            for exc in self.excitations:
                if exc.n_qubits != self.n_qubits:
                    raise ValueError(
                        f"excitation on {exc.n_qubits} qubits in a "
                        f"{self.n_qubits}-qubit spec"
                    )
            expect = 1 + max(exc.index for exc in self.excitations)
        else:
            if self.entangler_map is None:
                raise ValueError("hardware-efficient spec needs an entangler_map")
            for a, b in self.entangler_map:
                if not (0 <= a < self.n_qubits and 0 <= b < self.n_qubits and a != b):
                    raise ValueError(f"entangler pair ({a}, {b}) out of range")
            expect = self.n_qubits * len(self.rotation_gates) * (self.n_layers + 1)
        if self.n_params != expect:
            raise ValueError(
                f"{self.family} on {self.n_qubits} qubits takes {expect} parameters, "
                f"spec declares {self.n_params}"
            )

    def parameter_names(self) -> tuple[str, ...]:
        return tuple(f"t{k}" for k in range(self.n_params))


def hartree_fock_circuit(spec: AnsatzSpec) -> Circuit:
    """X gates preparing |hf_bitstring> from |0...0>."""
    gates = [
        Gate("X", (q,))
        for q in range(spec.n_qubits)
        if spec.hf_bitstring[spec.n_qubits - 1 - q] == "1"
    ]
    return Circuit(spec.n_qubits, tuple(gates))


def h2_compact_circuit(theta: Angle) -> Circuit:
    """1-parameter two-qubit circuit spanning the {|01>, |10>} block.

    Prepares cos(theta/2)|01> - sin(theta/2)|10>: HF prep on qubit 0, RY on
    qubit 1, one CNOT. E(theta) on any two-qubit Hamiltonian restricted to
    this block is exactly C + A cos(theta - alpha).
    """
    minus = theta.scaled(-1.0) if isinstance(theta, Param) else -theta
    return Circuit(
        2,
        (
            Gate("X", (0,)),
            Gate("RY", (1,), (minus,)),
            Gate("CNOT", (1, 0)),
        ),
    )


def _pauli_block(label: str, angle: Angle) -> tuple[Gate, ...]:
    """exp(-i * angle / 2 * P): basis change, parity ladder, RZ, unwind."""
    n = len(label)
    support = [q for q in range(n) if label[n - 1 - q] != "I"]
    enter: list[Gate] = []
    for q in support:
        ch = label[n - 1 - q]
        if ch == "X":
            enter.append(Gate("H", (q,)))
        elif ch == "Y":
            enter.append(Gate("RX", (q,), (0.5 * math.pi,)))
    ladder = [Gate("CNOT", (support[i], support[i + 1])) for i in range(len(support) - 1)]
    core = [Gate("RZ", (support[-1],), (angle,))]
    unwind: list[Gate] = []
    for q in reversed(support):
        ch = label[n - 1 - q]
        if ch == "X":
            unwind.append(Gate("H", (q,)))
        elif ch == "Y":
            unwind.append(Gate("RX", (q,), (-0.5 * math.pi,)))
    return tuple(enter + ladder + core + list(reversed(ladder)) + unwind)


def ucc_circuit(spec: AnsatzSpec, excitations: tuple[Excitation, ...] | None = None) -> Circuit:
    """HF prep followed by one Trotter step of the excitation exponentials."""
    excitations = excitations if excitations is not None else spec.excitations
    if not excitations:
        raise ValueError("no excitations given")
    gates = list(hartree_fock_circuit(spec).gates)
    for exc in excitations:
        theta = Param(f"t{exc.index}")
        for label, sign in exc.strings:
            gates.extend(_pauli_block(label, theta.scaled(float(sign))))
    return Circuit(spec.n_qubits, tuple(gates))


def hardware_efficient_circuit(
    n_qubits: int,
    n_layers: int,
    entangler_map: tuple[tuple[int, int], ...],
    params,
    rotation_gates: tuple[str, ...] = ("RY",),
) -> Circuit:
    """(n_layers + 1) rotation layers interleaved with fixed CZ layers.

    `params` is consumed layer by layer, qubit-major within a layer. No HF
    prep is included here; compose with hartree_fock_circuit for a reference
    state other than |0...0>.
    """
    per_layer = n_qubits * len(rotation_gates)
    expect = per_layer * (n_layers + 1)
    params = tuple(params)
    if len(params) != expect:
        raise ValueError(
            f"{n_layers}-layer circuit on {n_qubits} qubits takes {expect} "
            f"parameters, got {len(params)}"
        )
    gates: list[Gate] = []
    k = 0
    for layer in range(n_layers + 1):
        if layer:
            gates.extend(Gate("CZ", pair) for pair in entangler_map)
        for q in range(n_qubits):
            for kind in rotation_gates:
                gates.append(Gate(kind, (q,), (params[k],)))
                k += 1
    return Circuit(n_qubits, tuple(gates))


@lru_cache(maxsize=64)
def ansatz_circuit(spec: AnsatzSpec) -> Circuit:
    """Fully parameterized circuit for `spec` with parameters t0..t{k-1}."""
    if spec.family == "compact-uccd":
        return h2_compact_circuit(Param("t0"))
    if spec.family == "uccsd":
        return ucc_circuit(spec)
    body = hardware_efficient_circuit(
        spec.n_qubits,
        spec.n_layers,
        spec.entangler_map,
        tuple(Param(name) for name in spec.parameter_names()),
        spec.rotation_gates,
    )
    return Circuit(spec.n_qubits, hartree_fock_circuit(spec).gates + body.gates)


def h2_compact_spec() -> AnsatzSpec:
    return AnsatzSpec("compact-uccd", 2, 1, "01")


def uccsd_spec(n_qubits: int, hf_bitstring: str | None = None) -> AnsatzSpec:
    excitations = uccsd_excitations(n_qubits)
    if hf_bitstring is None:
        hf_bitstring = "01" if n_qubits == 2 else "0011"
    return AnsatzSpec("uccsd", n_qubits, len(excitations), hf_bitstring, excitations)


# CZ connectivity used by the 4-qubit hardware-efficient runs: a T-shaped
# map with qubit 1 as the hub.
T_MAP = ((0, 1), (1, 2), (1, 3))


def hardware_efficient_spec(
    n_qubits: int = 4,
    n_layers: int = 2,
    entangler_map: tuple[tuple[int, int], ...] = T_MAP,
    hf_bitstring: str | None = None,
    rotation_gates: tuple[str, ...] = ("RY",),
) -> AnsatzSpec:
    if hf_bitstring is None:
        hf_bitstring = "0" * n_qubits
    n_params = n_qubits * len(rotation_gates) * (n_layers + 1)
    return AnsatzSpec(
        "hardware-efficient",
        n_qubits,
        n_params,
        hf_bitstring,
        entangler_map=tuple(entangler_map),
        n_layers=n_layers,
        rotation_gates=tuple(rotation_gates),
    )
