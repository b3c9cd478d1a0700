"""Builtin molecular datasets and Hamiltonian file ingestion.

Each dataset is a dissociation series: per interatomic distance r, a
qubit-reduced electronic Hamiltonian whose offset carries the nuclear
repulsion (plus the frozen-core energy for lih), alongside recorded
reference energies where available:

- e_exact_ref: exact energy of the Hartree-Fock determinant.
- e_exact_min: exact energy at the variational minimum of the matching
  ansatz family.
- e_exact_ground: lowest eigenvalue, recorded separately when the matching
  ansatz does not span the full ground state (lih hardware-efficient runs).

All energies are total energies in hartree; distances in angstrom.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _moldata
from .pauli import (
    PauliHamiltonian,
    expectation,
    format_hamiltonian,
    ground_state_energy,
    parse_hamiltonian,
)

BUILTIN_NAMES = ("h2", "heh+", "lih")


@dataclass(frozen=True)
class Geometry:
    r: float
    hamiltonian: PauliHamiltonian
    e_exact_ref: float | None = None
    e_exact_min: float | None = None
    e_exact_ground: float | None = None

    @property
    def ground_reference(self) -> float | None:
        """Recorded lowest exact energy (falls back to e_exact_min)."""
        return self.e_exact_ground if self.e_exact_ground is not None else self.e_exact_min


@dataclass(frozen=True)
class MoleculeDataset:
    name: str
    n_qubits: int
    hf_bitstring: str
    geometries: tuple[Geometry, ...]
    equilibrium_r: float

    def __post_init__(self) -> None:
        rs = [g.r for g in self.geometries]
        if any(b <= a for a, b in zip(rs, rs[1:])):
            raise ValueError(f"{self.name}: r values must be strictly increasing")
        for g in self.geometries:
            if g.hamiltonian.n_qubits != self.n_qubits:
                raise ValueError(
                    f"{self.name}: geometry r={g.r} has "
                    f"{g.hamiltonian.n_qubits} qubits, dataset declares {self.n_qubits}"
                )
        if len(self.hf_bitstring) != self.n_qubits:
            raise ValueError(f"{self.name}: hf_bitstring width mismatch")

    def geometry(self, r: float) -> Geometry:
        for g in self.geometries:
            if abs(g.r - r) <= 1e-9:
                return g
        known = ", ".join(f"{g.r:g}" for g in self.geometries)
        raise ValueError(f"{self.name} has no geometry r={r:g} (available: {known})")


def _series(name, labels, rows, n_qubits, hf, equilibrium) -> MoleculeDataset:
    geometries = []
    for r, coeffs, vnn, e_ref, e_min in rows:
        h = PauliHamiltonian(n_qubits, tuple(zip(labels, coeffs)), offset=vnn)
        geometries.append(Geometry(r, h, e_ref, e_min))
    return MoleculeDataset(name, n_qubits, hf, tuple(geometries), equilibrium)


def _lih_dataset() -> MoleculeDataset:
    offset = _moldata.LIH_FROZEN_CORE + _moldata.LIH_NUCLEAR_REPULSION
    h = PauliHamiltonian(4, _moldata.LIH_TERMS, offset=offset)
    geometry = Geometry(
        _moldata.LIH_R,
        h,
        _moldata.LIH_E_REF,
        _moldata.LIH_E_MIN,
        _moldata.LIH_E_GROUND,
    )
    return MoleculeDataset("lih", 4, "0011", (geometry,), _moldata.LIH_R)


def builtin(name: str) -> MoleculeDataset:
    """Embedded dissociation dataset for one of h2, heh+, lih."""
    key = name.strip().lower()
    if key == "h2":
        return _series(
            "h2", _moldata.H2_LABELS, _moldata.H2_ROWS, 2, "01", _moldata.H2_EQUILIBRIUM
        )
    if key == "heh+":
        return _series(
            "heh+", _moldata.HEH_LABELS, _moldata.HEH_ROWS, 2, "01",
            _moldata.HEH_EQUILIBRIUM,
        )
    if key == "lih":
        return _lih_dataset()
    raise ValueError(
        f"unknown molecule {name!r}; builtin datasets are {', '.join(BUILTIN_NAMES)}. "
        "Larger systems (beh2 and up) have no embedded coefficients; supply a "
        "Hamiltonian text file via load()."
    )


def load(path) -> PauliHamiltonian:
    """Parse a Hamiltonian text file (see the pauli module for the format)."""
    text = Path(path).read_text()
    try:
        return parse_hamiltonian(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def dump(ds: MoleculeDataset, directory) -> tuple[Path, ...]:
    """Write each geometry to `<name>_r<r>.txt`; load() round-trips them."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    safe_name = ds.name.replace("+", "p")
    for g in ds.geometries:
        path = directory / f"{safe_name}_r{g.r:g}.txt"
        header = f"# {ds.name} r={g.r:g} angstrom\n"
        path.write_text(header + format_hamiltonian(g.hamiltonian) + "\n")
        written.append(path)
    return tuple(written)


def reference_energy(ds: MoleculeDataset, r: float) -> tuple[float, float]:
    """(e_exact_ref, e_exact_min) recorded for the geometry at r."""
    g = ds.geometry(r)
    if g.e_exact_ref is None or g.e_exact_min is None:
        raise ValueError(f"{ds.name} r={r:g} has no recorded reference energies")
    return g.e_exact_ref, g.e_exact_min


def hartree_fock_energy(g: Geometry, hf_bitstring: str) -> float:
    """Exact energy of the computational basis determinant."""
    h = g.hamiltonian
    state = np.zeros(1 << h.n_qubits)
    state[int(hf_bitstring, 2)] = 1.0
    return expectation(h, state)


def device_angles(name: str) -> dict[float, tuple[float, ...]]:
    """Hardware-run optimized angles per geometry, for documentation only.

    h2 entries pair (uncorrected, readout-mitigated) single angles; heh+
    entries are 3-vectors; lih the 12-vector of its hardware-efficient runs.
    Device noise shaped these values, so they are not reproduction targets.
    """
    key = name.strip().lower()
    if key == "h2":
        return dict(_moldata.H2_DEVICE_THETA)
    if key == "heh+":
        return dict(_moldata.HEH_DEVICE_THETA)
    if key == "lih":
        return dict(_moldata.LIH_DEVICE_THETA)
    raise ValueError(f"no recorded device angles for {name!r}")


def audit(ds: MoleculeDataset, tol: float = 5e-4) -> list[str]:
    """Check every geometry's recorded energies against direct computation.

    Returns human-readable discrepancy descriptions; empty means the embedded
    coefficients reproduce their reference energies within `tol`. A failure
    indicates a transcription error in the data module, not a code error.
    """
    problems = []
    for g in ds.geometries:
        if g.e_exact_ref is not None:
            hf = hartree_fock_energy(g, ds.hf_bitstring)
            if abs(hf - g.e_exact_ref) > tol:
                problems.append(
                    f"{ds.name} r={g.r:g}: HF energy {hf:.6f} vs recorded "
                    f"{g.e_exact_ref:.6f}"
                )
        target = g.ground_reference
        if target is not None:
            ground, _ = ground_state_energy(g.hamiltonian)
            if abs(ground - target) > tol:
                problems.append(
                    f"{ds.name} r={g.r:g}: ground energy {ground:.6f} vs recorded "
                    f"{target:.6f}"
                )
    return problems
