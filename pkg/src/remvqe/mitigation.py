"""Readout-error mitigation and reference-state error mitigation.

Readout mitigation: a column-stochastic confusion matrix C with
C[j][i] = P(measure j | prepared i) is calibrated from prepare-and-measure
experiments and inverted through a simplex-constrained least-squares unfolding
(an exact active-set quadratic program; no matrix inversion).

Reference-state mitigation: the energy discrepancy of a classically tractable
reference state, delta = e_vqe_ref - e_exact_ref, is subtracted pointwise from
measured energies. The shift is affine, so it moves every point of an energy
curve equally and never changes the argmin. Corrected energies may fall below
the exact minimum; they are deliberately not clamped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

Counts = dict[str, int]

_COLUMN_TOL = 1e-9


@dataclass(frozen=True)
class ConfusionMatrix:
    """Column-stochastic readout matrix; entry [j][i] = P(measure j | prepared i)."""

    n_qubits: int
    matrix: np.ndarray
    uncertainty: np.ndarray | None = None

    def __post_init__(self) -> None:
        dim = 1 << self.n_qubits
        mat = np.array(self.matrix, dtype=float)
        if mat.shape != (dim, dim):
            raise ValueError(f"confusion matrix must be {dim}x{dim}, got {mat.shape}")
        if np.any(mat < -1e-12) or np.any(mat > 1 + 1e-12):
            raise ValueError("confusion entries must lie in [0, 1]")
        sums = mat.sum(axis=0)
        if np.max(np.abs(sums - 1.0)) > _COLUMN_TOL:
            raise ValueError(
                f"confusion columns must sum to 1 (max deviation {np.max(np.abs(sums - 1.0)):.2e})"
            )
        mat = np.clip(mat, 0.0, 1.0)
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        if self.uncertainty is not None:
            unc = np.array(self.uncertainty, dtype=float)
            if unc.shape != (dim, dim):
                raise ValueError("uncertainty shape must match matrix")
            unc.setflags(write=False)
            object.__setattr__(self, "uncertainty", unc)

    @classmethod
    def identity(cls, n_qubits: int) -> "ConfusionMatrix":
        return cls(n_qubits, np.eye(1 << n_qubits))

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits


# Measured two-qubit readout calibration of a superconducting device, used as
# the package's stock nontrivial readout model. Percent values, basis order
# 00, 01, 10, 11; raw columns sum to 99.9-100.1 and are normalized on load.
_DEVICE_PERCENT = [
    [96.8, 5.9, 5.9, 0.4],
    [2.0, 93.0, 0.1, 5.7],
    [1.1, 0.1, 92.1, 5.6],
    [0.0, 1.1, 1.9, 88.4],
]
_DEVICE_PERCENT_SIGMA = [
    [0.21, 0.67, 0.59, 0.08],
    [0.15, 0.69, 0.04, 0.58],
    [0.12, 0.03, 0.57, 0.56],
    [0.01, 0.13, 0.17, 0.86],
]


def device_confusion() -> ConfusionMatrix:
    """Stock two-qubit device readout calibration, column-normalized."""
    mat = np.array(_DEVICE_PERCENT) / 100.0
    mat = mat / mat.sum(axis=0, keepdims=True)
    return ConfusionMatrix(2, mat, np.array(_DEVICE_PERCENT_SIGMA) / 100.0)


Sampler = Callable[[int, int, np.random.SeedSequence], Counts]


def calibrate_confusion(
    sampler: Sampler,
    n_qubits: int,
    shots_per_state: int = 1000,
    repeats: int = 100,
    seed: int = 0,
) -> ConfusionMatrix:
    """Estimate the confusion matrix of a backend by prepare-and-measure runs.

    `sampler(prepared_index, shots, seed_sequence)` must return outcome counts
    for the requested computational basis state under the backend's readout
    noise. Column i is the empirical distribution averaged over `repeats`
    independent runs; the per-entry uncertainty is the sample std over repeats
    (zero when repeats == 1).
    """
    if shots_per_state <= 0:
        raise ValueError("shots_per_state must be positive")
    if repeats <= 0:
        raise ValueError("repeats must be positive")
    dim = 1 << n_qubits
    mean = np.zeros((dim, dim))
    sigma = np.zeros((dim, dim))
    for i in range(dim):
        runs = np.zeros((repeats, dim))
        for k in range(repeats):
            counts = sampler(i, shots_per_state, np.random.SeedSequence((seed, i, k)))
            for outcome, cnt in counts.items():
                runs[k, int(outcome, 2)] += cnt
            runs[k] /= shots_per_state
        mean[:, i] = runs.mean(axis=0)
        if repeats > 1:
            sigma[:, i] = runs.std(axis=0, ddof=1)
    return ConfusionMatrix(n_qubits, mean, sigma)


_KKT_TOL = 1e-10


def unfold(c: ConfusionMatrix, m: np.ndarray) -> np.ndarray:
    """argmin ||m - Cx||^2 over the probability simplex.

    Exact primal active-set quadratic program: the equality-constrained KKT
    system is solved on the free index set, bounds are added at the first
    blocking constraint and released at the most negative multiplier. The
    returned vector sums to 1 with entries >= 0 (tiny negatives clamped).
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (c.dim,):
        raise ValueError(f"measured vector must have length {c.dim}, got {m.shape}")
    if abs(m.sum() - 1.0) > 1e-6:
        raise ValueError(f"measured vector must sum to 1, got {m.sum():.8f}")
    C = c.matrix
    H = C.T @ C
    b = C.T @ m
    n = c.dim

    x = np.full(n, 1.0 / n)
    active: set[int] = set()
    for _ in range(100 * n):
        free = [i for i in range(n) if i not in active]
        k = len(free)
        kkt = np.zeros((k + 1, k + 1))
        kkt[:k, :k] = H[np.ix_(free, free)]
        # stationarity is Hx - b - mu = 0 on the free set, so the multiplier
        # column carries -1 while the constraint row carries +1
        kkt[:k, k] = -1.0
        kkt[k, :k] = 1.0
        rhs = np.append(b[free], 1.0)
        sol = np.linalg.solve(kkt, rhs)
        target = np.zeros(n)
        target[free] = sol[:k]
        mu = sol[k]

        step = target - x
        if np.max(np.abs(step)) <= _KKT_TOL:
            # stationary on the working set; check bound multipliers
            grad = H @ x - b
            lagrange = {i: grad[i] - mu for i in active}
            worst = min(lagrange, key=lagrange.get, default=None)
            if worst is None or lagrange[worst] >= -_KKT_TOL:
                break
            active.remove(worst)
            continue

        alpha = 1.0
        blocking = None
        for i in free:
            if step[i] < -1e-15:
                limit = max(x[i], 0.0) / -step[i]
                if limit < alpha:
                    alpha = limit
                    blocking = i
        x = x + alpha * step
        if blocking is not None:
            x[blocking] = 0.0
            active.add(blocking)
    else:
        raise RuntimeError("active-set unfolding failed to converge")

    return np.where(x < 0.0, 0.0, x)


def counts_to_distribution(counts: Counts, n_qubits: int) -> np.ndarray:
    """Normalized outcome distribution vector from counts."""
    vec = np.zeros(1 << n_qubits)
    total = 0
    for outcome, cnt in counts.items():
        vec[int(outcome, 2)] += cnt
        total += cnt
    if total <= 0:
        raise ValueError("counts are empty")
    return vec / total


def rem_delta(e_vqe_ref: float, e_exact_ref: float) -> float:
    """Reference-state energy discrepancy delta = e_vqe_ref - e_exact_ref."""
    if not (np.isfinite(e_vqe_ref) and np.isfinite(e_exact_ref)):
        raise ValueError("reference energies must be finite")
    return float(e_vqe_ref) - float(e_exact_ref)


Energy = Union[float, np.ndarray]


def rem_apply(e_vqe: Energy, delta: float) -> Energy:
    """Subtract the reference discrepancy pointwise from an energy or curve."""
    if np.isscalar(e_vqe):
        return float(e_vqe) - delta
    return np.asarray(e_vqe, dtype=float) - delta


def error_metrics(
    e_vqe_min: float, e_exact_min: float, delta: float
) -> tuple[float, float]:
    """(err_vqe, err_rem) against the noise-free minimum.

    err_vqe = e_vqe_min - e_exact_min; err_rem is the residual of the
    corrected energy, (e_vqe_min - delta) - e_exact_min. Positive err_vqe
    means noise raised the energy; err_rem may be negative (over-correction).
    """
    err_vqe = float(e_vqe_min) - float(e_exact_min)
    err_rem = (float(e_vqe_min) - float(delta)) - float(e_exact_min)
    return err_vqe, err_rem


@dataclass(frozen=True)
class RemReport:
    """All quantities of one reference-state mitigation run.

    The arithmetic identities delta_rem = e_vqe_ref - e_exact_ref and
    e_rem = e_vqe_min - delta_rem are enforced exactly at construction.
    """

    e_vqe_ref: float
    e_exact_ref: float
    delta_rem: float
    e_vqe_min: float
    e_rem: float
    e_exact_min: float | None = None
    err_vqe: float | None = None
    err_rem: float | None = None

    def __post_init__(self) -> None:
        if abs(self.delta_rem - (self.e_vqe_ref - self.e_exact_ref)) > 1e-12:
            raise ValueError("delta_rem must equal e_vqe_ref - e_exact_ref")
        if abs(self.e_rem - (self.e_vqe_min - self.delta_rem)) > 1e-12:
            raise ValueError("e_rem must equal e_vqe_min - delta_rem")


def rem_report(
    e_vqe_ref: float,
    e_exact_ref: float,
    e_vqe_min: float,
    e_exact_min: float | None = None,
) -> RemReport:
    """Assemble a RemReport from the four primary measured/exact energies."""
    delta = rem_delta(e_vqe_ref, e_exact_ref)
    e_rem = rem_apply(e_vqe_min, delta)
    err_vqe = err_rem = None
    if e_exact_min is not None:
        err_vqe, err_rem = error_metrics(e_vqe_min, e_exact_min, delta)
    return RemReport(
        e_vqe_ref=e_vqe_ref,
        e_exact_ref=e_exact_ref,
        delta_rem=delta,
        e_vqe_min=e_vqe_min,
        e_rem=e_rem,
        e_exact_min=e_exact_min,
        err_vqe=err_vqe,
        err_rem=err_rem,
    )


# --- confusion matrix CSV serialization -------------------------------------


def format_confusion_csv(c: ConfusionMatrix) -> str:
    """Row-major CSV with a `# confusion n=<qubits>` header; probabilities to
    8 decimal places, optional uncertainty block."""
    lines = [f"# confusion n={c.n_qubits}"]
    for row in c.matrix:
        lines.append(",".join(f"{v:.8f}" for v in row))
    if c.uncertainty is not None:
        lines.append("# uncertainty")
        for row in c.uncertainty:
            lines.append(",".join(f"{v:.8f}" for v in row))
    return "\n".join(lines) + "\n"


def parse_confusion_csv(text: str) -> ConfusionMatrix:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# confusion n="):
        raise ValueError("missing '# confusion n=<qubits>' header")
    n_qubits = int(lines[0].split("=", 1)[1])
    dim = 1 << n_qubits
    rows: list[list[float]] = []
    sigma_rows: list[list[float]] = []
    current = rows
    for ln in lines[1:]:
        if ln.startswith("#"):
            if ln == "# uncertainty":
                current = sigma_rows
                continue
            continue
        current.append([float(v) for v in ln.split(",")])
    if len(rows) != dim:
        raise ValueError(f"expected {dim} matrix rows, got {len(rows)}")
    # re-normalize columns: 8-decimal rounding may leave ~1e-8 drift
    mat = np.array(rows)
    mat = mat / mat.sum(axis=0, keepdims=True)
    unc = np.array(sigma_rows) if sigma_rows else None
    return ConfusionMatrix(n_qubits, mat, unc)


def write_confusion_csv(c: ConfusionMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_confusion_csv(c))


def read_confusion_csv(path) -> ConfusionMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_confusion_csv(fh.read())
