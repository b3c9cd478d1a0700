"""Experiment drivers: dissociation curves, depolarizing-noise sweeps, single
point runs, and readout calibration, with deterministic CSV and optional SVG
output.

Pipelines per point (all four always computed for curve commands):

- e_vqe: raw energies through the configured backend.
- e_vqe_readout: same counts, unfolded through the confusion matrix.
- e_rem / e_readout_rem: the above minus the reference-state shift, where the
  shift is (measured reference energy) - (exact reference energy) through the
  matching pipeline. Sweep-based runs take the measured reference from the
  fitted curve at theta = 0 rather than a separate draw.

err_vqe compares the raw pipeline and err_rem the readout+rem pipeline
against exact diagonalization. Identical configurations (seed included)
produce byte-identical CSV text; worker count never changes output.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import _svg
from .ansatz import (
    AnsatzSpec,
    h2_compact_spec,
    hardware_efficient_spec,
    uccsd_spec,
)
from .chemdata import MoleculeDataset, builtin, load
from .mitigation import (
    ConfusionMatrix,
    RemReport,
    Sampler,
    calibrate_confusion,
    device_confusion,
    format_confusion_csv,
    read_confusion_csv,
    rem_report,
)
from .pauli import PauliHamiltonian, ground_state_energy
from .sim import NoiseModel
from .vqe import (
    REFERENCE_INDEX,
    EnergyEvaluator,
    SweepFit,
    VqeOutcome,
    default_grid,
    evaluate,
    minimize,
    reference_exact_energy,
    sweep_and_fit,
    with_reference,
)

# Index for re-measuring the optimized point, disjoint from both optimizer
# iterates and the reference measurement.
MEASURE_INDEX = REFERENCE_INDEX + 1

DEVICE_P2 = 1.8e-2

BACKENDS = ("ideal", "noisy")
MITIGATIONS = ("none", "readout", "rem", "readout+rem")
ANSATZE = ("compact", "uccsd", "hwe")
OPTIMIZERS = ("nelder-mead", "spsa", "sweep")


class ConfigError(ValueError):
    """Invalid run configuration; maps to CLI exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    molecule: str | None = None
    hamiltonian_path: str | None = None
    backend: str = "ideal"
    p2: float = DEVICE_P2
    p1: float | None = None
    shots: int | None = None
    seed: int = 0
    mitigation: str = "none"
    confusion: str = "ideal"
    ansatz: str | None = None
    optimizer: str | None = None
    out: str | None = None
    svg: str | None = None
    r: float | None = None
    reference: str | None = None
    workers: int = 1
    grid_points: int = 25
    shots_per_state: int = 1000
    repeats: int = 100

    @property
    def readout_flag(self) -> bool:
        return self.mitigation in ("readout", "readout+rem")

    @property
    def rem_flag(self) -> bool:
        return self.mitigation in ("rem", "readout+rem")


@dataclass(frozen=True)
class _Problem:
    """Validated, fully resolved run inputs."""

    cfg: RunConfig
    dataset: MoleculeDataset | None
    hamiltonian: PauliHamiltonian | None
    spec: AnsatzSpec
    optimizer: str
    applied_confusion: ConfusionMatrix | None
    unfold_confusion: ConfusionMatrix | None


def _matrix_sampler(c: ConfusionMatrix) -> Sampler:
    """Readout sampler drawing outcomes from a confusion matrix's columns."""

    def sampler(prepared: int, shots: int, ss: np.random.SeedSequence):
        rng = np.random.default_rng(ss)
        draws = rng.multinomial(shots, c.matrix[:, prepared])
        n = c.n_qubits
        return {format(i, f"0{n}b"): int(v) for i, v in enumerate(draws) if v}

    return sampler


def _confusion_sources(cfg: RunConfig, n_qubits: int):
    """(matrix applied to outcomes, matrix used for unfolding)."""
    src = cfg.confusion
    if src == "ideal":
        return None, None
    if src in ("device", "figure-s2"):
        truth = device_confusion()
    elif src == "calibrate":
        truth = device_confusion()
    else:
        path = Path(src)
        if not path.exists():
            raise ConfigError(f"confusion source {src!r} is not a known mode or a file")
        try:
            truth = read_confusion_csv(path)
        except ValueError as exc:
            raise ConfigError(f"{src}: {exc}") from None
    if truth.n_qubits != n_qubits:
        raise ConfigError(
            f"confusion matrix covers {truth.n_qubits} qubits but the problem "
            f"has {n_qubits}"
        )
    if src == "calibrate":
        estimate = calibrate_confusion(
            _matrix_sampler(truth),
            n_qubits,
            shots_per_state=cfg.shots_per_state,
            repeats=cfg.repeats,
            seed=cfg.seed,
        )
        return truth, estimate
    return truth, truth


def _resolve_ansatz(cfg: RunConfig, n_qubits: int, hf_bitstring: str) -> AnsatzSpec:
    name = cfg.ansatz
    if name is None:
        if cfg.molecule == "h2":
            name = "compact"
        elif n_qubits in (2, 4):
            name = "uccsd"
        else:
            name = "hwe"
    if name == "compact":
        if n_qubits != 2:
            raise ConfigError("the compact ansatz is 2-qubit only")
        return h2_compact_spec()
    if name == "uccsd":
        if n_qubits not in (2, 4):
            raise ConfigError(
                f"uccsd excitation tables cover 2 or 4 qubits, problem has {n_qubits}"
            )
        return uccsd_spec(n_qubits, hf_bitstring)
    if name == "hwe":
        if n_qubits == 4:
            return hardware_efficient_spec(hf_bitstring=hf_bitstring)
        chain = tuple((q, q + 1) for q in range(n_qubits - 1))
        return hardware_efficient_spec(
            n_qubits, entangler_map=chain, hf_bitstring=hf_bitstring
        )
    raise ConfigError(f"unknown ansatz {name!r} (choose from {', '.join(ANSATZE)})")


def resolve(cfg: RunConfig) -> _Problem:
    """Validate the configuration before any simulation starts."""
    if cfg.backend not in BACKENDS:
        raise ConfigError(f"unknown backend {cfg.backend!r}")
    if cfg.mitigation not in MITIGATIONS:
        raise ConfigError(f"unknown mitigation {cfg.mitigation!r}")
    if not 0.0 <= cfg.p2 <= 1.0:
        raise ConfigError(f"p2 must lie in [0, 1], got {cfg.p2}")
    if cfg.p1 is not None and not 0.0 <= cfg.p1 <= 1.0:
        raise ConfigError(f"p1 must lie in [0, 1], got {cfg.p1}")
    if cfg.shots is not None and cfg.shots <= 0:
        raise ConfigError("shots must be positive")
    if cfg.workers < 1:
        raise ConfigError("workers must be at least 1")
    if cfg.grid_points < 4:
        raise ConfigError("sweep grids need at least 4 points")
    if cfg.molecule is not None and cfg.hamiltonian_path is not None:
        raise ConfigError("give either a molecule or a Hamiltonian file, not both")

    dataset = None
    hamiltonian = None
    if cfg.molecule is not None:
        try:
            dataset = builtin(cfg.molecule)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        n_qubits = dataset.n_qubits
        hf = dataset.hf_bitstring
    elif cfg.hamiltonian_path is not None:
        try:
            hamiltonian = load(cfg.hamiltonian_path)
        except (OSError, ValueError) as exc:
            raise ConfigError(str(exc)) from None
        n_qubits = hamiltonian.n_qubits
        if cfg.reference is not None:
            if len(cfg.reference) != n_qubits or set(cfg.reference) - {"0", "1"}:
                raise ConfigError(
                    f"reference {cfg.reference!r} is not a {n_qubits}-bit string"
                )
            hf = cfg.reference
        else:
            if cfg.rem_flag:
                raise ConfigError(
                    "rem on a file-loaded Hamiltonian needs --reference "
                    "<bitstring> to define the reference state"
                )
            hf = "0" * n_qubits
    else:
        raise ConfigError("a molecule or a Hamiltonian file is required")

    spec = _resolve_ansatz(cfg, n_qubits, hf)
    optimizer = cfg.optimizer
    if optimizer is None:
        if spec.n_params == 1:
            optimizer = "sweep"
        elif cfg.shots is not None:
            optimizer = "spsa"
        else:
            optimizer = "nelder-mead"
    if optimizer not in OPTIMIZERS:
        raise ConfigError(f"unknown optimizer {optimizer!r}")
    if optimizer == "sweep" and spec.n_params != 1:
        raise ConfigError(
            f"the sweep optimizer needs a 1-parameter ansatz, "
            f"{spec.family} has {spec.n_params}"
        )
    applied, unfolding = _confusion_sources(cfg, n_qubits)
    if cfg.readout_flag and unfolding is None:
        raise ConfigError(
            "readout mitigation needs a confusion source other than 'ideal'"
        )
    if cfg.r is not None and dataset is not None:
        dataset.geometry(cfg.r)
    return _Problem(cfg, dataset, hamiltonian, spec, optimizer, applied, unfolding)


def _point_seed(master: int, index: int) -> int:
    return int(np.random.SeedSequence((master, index)).generate_state(1)[0])


def _evaluator_pair(problem: _Problem, h: PauliHamiltonian, seed: int):
    """(raw, readout-unfolded) evaluators sharing every random draw."""
    cfg = problem.cfg
    confusion = problem.applied_confusion
    noise = None
    if cfg.backend == "noisy":
        noise = NoiseModel(cfg.p2, cfg.p1, confusion=confusion)
    elif confusion is not None:
        noise = NoiseModel(0.0, 0.0, confusion=confusion)
    raw = EnergyEvaluator(h, problem.spec, noise=noise, shots=cfg.shots, seed=seed)
    if problem.unfold_confusion is None:
        return raw, raw
    unfolded = replace(
        raw, readout_mitigation=True, unfold_matrix=problem.unfold_confusion
    )
    return raw, unfolded


@dataclass(frozen=True)
class PointResult:
    """Four-pipeline energies at one dissociation/sweep point."""

    e_exact: float
    e_vqe: float
    e_vqe_readout: float
    e_rem: float
    e_readout_rem: float
    converged: bool
    theta: tuple[float, ...]


def _run_point(problem: _Problem, h: PauliHamiltonian, seed: int) -> PointResult:
    raw, unfolded = _evaluator_pair(problem, h, seed)
    e_exact = ground_state_energy(h)[0]
    e_ref_exact = reference_exact_energy(raw)
    zeros = np.zeros(problem.spec.n_params)
    if problem.optimizer == "sweep":
        grid = default_grid(problem.cfg.grid_points)
        fit_raw = sweep_and_fit(raw, grid)
        fit_unf = sweep_and_fit(unfolded, grid) if unfolded is not raw else fit_raw
        e_vqe, e_vqe_readout = fit_raw.e_min, fit_unf.e_min
        delta_raw = fit_raw.value_at(0.0) - e_ref_exact
        delta_unf = fit_unf.value_at(0.0) - e_ref_exact
        theta = (fit_raw.theta_min,)
        converged = True
    else:
        outcome = minimize(raw, optimizer=problem.optimizer)
        theta = tuple(float(v) for v in outcome.theta)
        e_vqe = evaluate(raw, theta, index=MEASURE_INDEX)
        e_vqe_readout = (
            evaluate(unfolded, theta, index=MEASURE_INDEX)
            if unfolded is not raw
            else e_vqe
        )
        delta_raw = evaluate(raw, zeros, index=REFERENCE_INDEX) - e_ref_exact
        delta_unf = (
            evaluate(unfolded, zeros, index=REFERENCE_INDEX) - e_ref_exact
            if unfolded is not raw
            else delta_raw
        )
        converged = outcome.converged
    return PointResult(
        e_exact=e_exact,
        e_vqe=e_vqe,
        e_vqe_readout=e_vqe_readout,
        e_rem=e_vqe - delta_raw,
        e_readout_rem=e_vqe_readout - delta_unf,
        converged=converged,
        theta=theta,
    )


def four_pipelines(cfg: RunConfig) -> PointResult:
    """All four pipeline energies at one geometry (--r, default equilibrium)."""
    problem = resolve(cfg)
    if problem.dataset is not None:
        geometry = problem.dataset.geometry(
            cfg.r if cfg.r is not None else problem.dataset.equilibrium_r
        )
        h = geometry.hamiltonian
    else:
        h = problem.hamiltonian
    return _run_point(problem, h, _point_seed(cfg.seed, 0))


def _map_points(cfg: RunConfig, tasks):
    """Run point closures, preserving input order; workers=1 stays inline."""
    if cfg.workers == 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        futures = [pool.submit(task) for task in tasks]
        return [f.result() for f in futures]


@dataclass(frozen=True)
class DissociationResult:
    rs: tuple[float, ...]
    points: tuple[PointResult, ...]
    csv: str
    warnings: tuple[str, ...]


_DISSOCIATION_HEADER = "r,e_exact,e_vqe,e_vqe_readout,e_rem,e_readout_rem,err_vqe,err_rem"


def cmd_dissociation(cfg: RunConfig) -> DissociationResult:
    """Four-pipeline energies across a molecule's dissociation series."""
    problem = resolve(cfg)
    if problem.dataset is None:
        raise ConfigError("dissociation runs over a builtin molecule dataset")
    geometries = problem.dataset.geometries
    if len(geometries) < 2:
        raise ConfigError(
            f"{problem.dataset.name} has a single geometry; use single-point"
        )
    tasks = [
        (lambda g=g, i=i: _run_point(problem, g.hamiltonian, _point_seed(cfg.seed, i)))
        for i, g in enumerate(geometries)
    ]
    points = _map_points(cfg, tasks)
    lines = [_DISSOCIATION_HEADER]
    warnings = []
    for g, p in zip(geometries, points):
        err_vqe = p.e_vqe - p.e_exact
        err_rem = p.e_readout_rem - p.e_exact
        lines.append(
            f"{g.r:g},{p.e_exact:.6f},{p.e_vqe:.6f},{p.e_vqe_readout:.6f},"
            f"{p.e_rem:.6f},{p.e_readout_rem:.6f},{err_vqe:.6f},{err_rem:.6f}"
        )
        if not p.converged:
            warnings.append(f"r={g.r:g}: optimizer did not converge")
    csv = "\n".join(lines) + "\n"
    result = DissociationResult(
        tuple(g.r for g in geometries), tuple(points), csv, tuple(warnings)
    )
    if cfg.out:
        Path(cfg.out).write_text(csv)
    if cfg.svg:
        Path(cfg.svg).write_text(_dissociation_svg(result))
    return result


def _dissociation_svg(res: DissociationResult) -> str:
    rs = res.rs
    energies = [
        _svg.Series("exact", rs, tuple(p.e_exact for p in res.points), "#222222"),
        _svg.Series("vqe", rs, tuple(p.e_vqe for p in res.points), "#c62828", markers=True),
        _svg.Series(
            "vqe+readout", rs, tuple(p.e_vqe_readout for p in res.points),
            "#ef6c00", markers=True,
        ),
        _svg.Series("rem", rs, tuple(p.e_rem for p in res.points), "#1565c0", markers=True),
        _svg.Series(
            "readout+rem", rs, tuple(p.e_readout_rem for p in res.points),
            "#2e7d32", markers=True,
        ),
    ]
    errors = [
        _svg.Series(
            "err vqe", rs, tuple(abs(p.e_vqe - p.e_exact) for p in res.points),
            "#c62828", markers=True,
        ),
        _svg.Series(
            "err readout+rem", rs,
            tuple(abs(p.e_readout_rem - p.e_exact) for p in res.points),
            "#2e7d32", markers=True,
        ),
    ]
    panels = [
        _svg.line_chart(
            energies, title="Dissociation curve", xlabel="r (angstrom)",
            ylabel="energy (hartree)",
        ),
        _svg.line_chart(
            errors, title="Absolute error", xlabel="r (angstrom)",
            ylabel="|error| (hartree)", band=(0.0, 1.6e-3),
        ),
    ]
    return _svg.document(panels)


@dataclass(frozen=True)
class NoiseSweepResult:
    p2_values: tuple[float, ...]
    err_vqe: tuple[float, ...]
    err_readout: tuple[float, ...]
    err_rem: tuple[float, ...]
    err_readout_rem: tuple[float, ...]
    csv: str


_SWEEP_HEADER = "p2,err_vqe,err_readout,err_rem,err_readout_rem"


def default_p2_grid() -> tuple[float, ...]:
    return tuple(float(v) for v in np.geomspace(1e-4, 5e-2, 14))


def cmd_noise_sweep(cfg: RunConfig, p2_grid=None) -> NoiseSweepResult:
    """Absolute errors of the four pipelines vs two-qubit error rate.

    Runs the 1-parameter sweep protocol at one geometry (--r, default
    equilibrium) for each p2; p1 follows as 0.1*p2 unless pinned.
    """
    grid = tuple(float(v) for v in (default_p2_grid() if p2_grid is None else p2_grid))
    if not grid or any(v < 0 for v in grid):
        raise ConfigError("p2 grid values must be non-negative")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigError("p2 grid must be strictly increasing")
    if cfg.hamiltonian_path is not None:
        raise ConfigError("noise sweeps run on builtin molecules only")
    base = replace(cfg, backend="noisy", molecule=cfg.molecule or "h2")
    problem = resolve(base)
    if problem.dataset is None or problem.spec.n_params != 1:
        raise ConfigError(
            "noise sweeps use the 1-parameter sweep protocol on a builtin molecule"
        )
    geometry = problem.dataset.geometry(
        base.r if base.r is not None else problem.dataset.equilibrium_r
    )

    def run_at(i: int, p2: float) -> PointResult:
        p1 = base.p1 if base.p1 is not None else 0.1 * p2
        cfg_i = replace(base, p2=p2, p1=p1)
        problem_i = replace(problem, cfg=cfg_i, optimizer="sweep")
        return _run_point(problem_i, geometry.hamiltonian, _point_seed(base.seed, i))

    tasks = [(lambda i=i, p2=p2: run_at(i, p2)) for i, p2 in enumerate(grid)]
    points = _map_points(base, tasks)
    err = {
        "vqe": tuple(abs(p.e_vqe - p.e_exact) for p in points),
        "readout": tuple(abs(p.e_vqe_readout - p.e_exact) for p in points),
        "rem": tuple(abs(p.e_rem - p.e_exact) for p in points),
        "readout_rem": tuple(abs(p.e_readout_rem - p.e_exact) for p in points),
    }
    lines = [_SWEEP_HEADER, f"# device p2={DEVICE_P2:.6f}"]
    for p2, a, b, c, d in zip(
        grid, err["vqe"], err["readout"], err["rem"], err["readout_rem"]
    ):
        lines.append(f"{p2:g},{a:.6f},{b:.6f},{c:.6f},{d:.6f}")
    csv = "\n".join(lines) + "\n"
    result = NoiseSweepResult(
        grid, err["vqe"], err["readout"], err["rem"], err["readout_rem"], csv
    )
    if cfg.out:
        Path(cfg.out).write_text(csv)
    if cfg.svg:
        Path(cfg.svg).write_text(_sweep_svg(result))
    return result


def _sweep_svg(res: NoiseSweepResult) -> str:
    series = [
        _svg.Series("vqe", res.p2_values, res.err_vqe, "#c62828", markers=True),
        _svg.Series("readout", res.p2_values, res.err_readout, "#ef6c00", markers=True),
        _svg.Series("rem", res.p2_values, res.err_rem, "#1565c0", markers=True),
        _svg.Series(
            "readout+rem", res.p2_values, res.err_readout_rem, "#2e7d32", markers=True
        ),
    ]
    panel = _svg.line_chart(
        series,
        title="Error vs depolarizing rate",
        xlabel="two-qubit error probability p2",
        ylabel="|error| (hartree)",
        logx=True,
        band=(0.0, 1.6e-3),
        vline=DEVICE_P2,
    )
    return _svg.document([panel])


@dataclass(frozen=True)
class SinglePointResult:
    report: RemReport
    outcome: VqeOutcome | None
    fit: SweepFit | None
    record: dict
    text: str
    converged: bool


def cmd_single_point(cfg: RunConfig) -> SinglePointResult:
    """Reference evaluation, minimization, and correction at one geometry.

    The readout part of --mitigation selects whether energies are measured
    through unfolding; the reference-state correction is always reported.
    Errors compare against exact diagonalization.
    """
    problem = resolve(cfg)
    if problem.dataset is not None:
        geometry = problem.dataset.geometry(
            cfg.r if cfg.r is not None else problem.dataset.equilibrium_r
        )
        h = geometry.hamiltonian
        label = problem.dataset.name
    else:
        h = problem.hamiltonian
        label = str(cfg.hamiltonian_path)
    raw, unfolded = _evaluator_pair(problem, h, _point_seed(cfg.seed, 0))
    ev = unfolded if cfg.readout_flag else raw
    e_exact_min = ground_state_energy(h)[0]
    outcome = None
    fit = None
    if problem.optimizer == "sweep":
        fit = sweep_and_fit(ev, default_grid(cfg.grid_points))
        theta = (fit.theta_min,)
        e_vqe_min = fit.e_min
        e_vqe_ref = fit.value_at(0.0)
        e_exact_ref = reference_exact_energy(ev)
        converged = True
        n_evaluations = len(fit.grid)
    else:
        _, e_vqe_ref, e_exact_ref = with_reference(ev)
        outcome = minimize(ev, optimizer=problem.optimizer)
        theta = tuple(float(v) for v in outcome.theta)
        e_vqe_min = evaluate(ev, theta, index=MEASURE_INDEX)
        converged = outcome.converged
        n_evaluations = outcome.n_evaluations
    report = rem_report(e_vqe_ref, e_exact_ref, e_vqe_min, e_exact_min)
    record = {
        "problem": label,
        "r": cfg.r if problem.dataset is None or cfg.r is not None
        else problem.dataset.equilibrium_r,
        "backend": cfg.backend,
        "p2": cfg.p2 if cfg.backend == "noisy" else 0.0,
        "p1": (cfg.p1 if cfg.p1 is not None else 0.1 * cfg.p2)
        if cfg.backend == "noisy"
        else 0.0,
        "shots": cfg.shots,
        "seed": cfg.seed,
        "ansatz": problem.spec.family,
        "optimizer": problem.optimizer,
        "mitigation": cfg.mitigation,
        "theta_min": list(theta),
        "e_exact_ref": report.e_exact_ref,
        "e_vqe_ref": report.e_vqe_ref,
        "delta_rem": report.delta_rem,
        "e_vqe_min": report.e_vqe_min,
        "e_rem": report.e_rem,
        "e_exact_min": report.e_exact_min,
        "err_vqe": report.err_vqe,
        "err_rem": report.err_rem,
        "converged": converged,
        "n_evaluations": n_evaluations,
    }
    lines = [
        f"problem:      {label}",
        f"ansatz:       {problem.spec.family} ({problem.spec.n_params} parameters)",
        f"optimizer:    {problem.optimizer}" + ("" if converged else "  [not converged]"),
        f"e_exact_ref:  {report.e_exact_ref:+.6f}",
        f"e_vqe_ref:    {report.e_vqe_ref:+.6f}",
        f"delta_rem:    {report.delta_rem:+.6f}",
        f"e_vqe_min:    {report.e_vqe_min:+.6f}",
        f"e_rem:        {report.e_rem:+.6f}",
        f"e_exact_min:  {report.e_exact_min:+.6f}",
        f"err_vqe:      {report.err_vqe:+.6f}",
        f"err_rem:      {report.err_rem:+.6f}",
        "",
        json.dumps(record, indent=2),
    ]
    text = "\n".join(lines) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(json.dumps(record, indent=2) + "\n")
    return SinglePointResult(report, outcome, fit, record, text, converged)


def cmd_calibrate(cfg: RunConfig) -> ConfusionMatrix:
    """Prepare-and-measure calibration against the configured readout model."""
    if cfg.molecule is not None:
        try:
            n_qubits = builtin(cfg.molecule).n_qubits
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    else:
        n_qubits = 2
    if cfg.confusion in ("device", "figure-s2", "calibrate"):
        truth = device_confusion()
    elif cfg.confusion == "ideal":
        truth = ConfusionMatrix.identity(n_qubits)
    else:
        path = Path(cfg.confusion)
        if not path.exists():
            raise ConfigError(
                f"confusion source {cfg.confusion!r} is not a known mode or a file"
            )
        truth = read_confusion_csv(path)
    if truth.n_qubits != n_qubits:
        raise ConfigError(
            f"confusion matrix covers {truth.n_qubits} qubits but the problem "
            f"has {n_qubits}"
        )
    estimate = calibrate_confusion(
        _matrix_sampler(truth),
        n_qubits,
        shots_per_state=cfg.shots_per_state,
        repeats=cfg.repeats,
        seed=cfg.seed,
    )
    if cfg.out:
        Path(cfg.out).write_text(format_confusion_csv(estimate))
    return estimate
