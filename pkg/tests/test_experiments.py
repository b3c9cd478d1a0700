"""Experiment drivers: config resolution, the four pipelines, file outputs."""
import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from remvqe import (
    ConfusionMatrix,
    builtin,
    device_confusion,
    dump,
    read_confusion_csv,
    write_confusion_csv,
)
from remvqe.experiments import (
    DEVICE_P2,
    MEASURE_INDEX,
    ConfigError,
    RunConfig,
    cmd_calibrate,
    cmd_dissociation,
    cmd_noise_sweep,
    cmd_single_point,
    default_p2_grid,
    four_pipelines,
    resolve,
)
from remvqe.vqe import REFERENCE_INDEX


def h2_file(tmp_path) -> str:
    return str(dump(builtin("h2"), tmp_path)[4])  # r=0.7414


# --- configuration -----------------------------------------------------------


def test_mitigation_flags():
    assert not RunConfig(mitigation="none").readout_flag
    assert not RunConfig(mitigation="none").rem_flag
    assert RunConfig(mitigation="readout").readout_flag
    assert not RunConfig(mitigation="readout").rem_flag
    assert RunConfig(mitigation="rem").rem_flag
    assert RunConfig(mitigation="readout+rem").readout_flag
    assert RunConfig(mitigation="readout+rem").rem_flag


def test_measure_index_disjoint_from_reference():
    assert MEASURE_INDEX == REFERENCE_INDEX + 1


BAD_CONFIGS = [
    (dict(molecule="h2", backend="exact"), "unknown backend"),
    (dict(molecule="h2", mitigation="zne"), "unknown mitigation"),
    (dict(molecule="h2", p2=1.5), r"p2 must lie in \[0, 1\]"),
    (dict(molecule="h2", p1=-0.1), r"p1 must lie in \[0, 1\]"),
    (dict(molecule="h2", shots=0), "shots must be positive"),
    (dict(molecule="h2", workers=0), "workers must be at least 1"),
    (dict(molecule="h2", grid_points=3), "at least 4 points"),
    (dict(molecule="h2", hamiltonian_path="x.txt"), "not both"),
    (dict(), "a molecule or a Hamiltonian file is required"),
    (dict(molecule="xyz"), "unknown molecule"),
    (dict(molecule="lih", ansatz="compact"), "2-qubit only"),
    (dict(molecule="h2", ansatz="adapt"), "unknown ansatz"),
    (dict(molecule="heh+", optimizer="bfgs"), "unknown optimizer"),
    (dict(molecule="heh+", optimizer="sweep"), "1-parameter ansatz"),
    (dict(molecule="h2", mitigation="readout"), "other than 'ideal'"),
    (dict(molecule="h2", confusion="/nonexistent.csv"), "not a known mode or a file"),
    (dict(molecule="lih", confusion="figure-s2"), "covers 2 qubits but the problem has 4"),
]


@pytest.mark.parametrize("kwargs,fragment", BAD_CONFIGS)
def test_resolve_rejects_bad_configs(kwargs, fragment):
    with pytest.raises(ConfigError, match=fragment):
        resolve(RunConfig(**kwargs))


def test_resolve_file_reference_validation(tmp_path):
    path = h2_file(tmp_path)
    with pytest.raises(ConfigError, match="not a 2-bit string"):
        resolve(RunConfig(hamiltonian_path=path, reference="012"))
    with pytest.raises(ConfigError, match="needs --reference"):
        resolve(RunConfig(hamiltonian_path=path, mitigation="rem"))
    resolve(RunConfig(hamiltonian_path=path, mitigation="rem", reference="01"))


def test_resolve_rejects_unknown_geometry():
    with pytest.raises(ValueError, match="has no geometry"):
        resolve(RunConfig(molecule="h2", r=0.5))


def test_resolve_defaults():
    p = resolve(RunConfig(molecule="h2"))
    assert p.spec.n_params == 1 and p.optimizer == "sweep"
    p = resolve(RunConfig(molecule="heh+"))
    assert p.spec.family.startswith("uccsd") and p.optimizer == "nelder-mead"
    p = resolve(RunConfig(molecule="lih", shots=1000))
    assert p.spec.family.startswith("uccsd") and p.optimizer == "spsa"
    p = resolve(RunConfig(molecule="lih", ansatz="hwe"))
    assert p.spec.n_params == 12


def test_resolve_hwe_chain_for_odd_widths(tmp_path):
    path = tmp_path / "three.txt"
    path.write_text("qubits=3\nZII 1.0\nIZI 0.5\n")
    p = resolve(RunConfig(hamiltonian_path=str(path)))
    assert p.spec.family == "hardware-efficient"
    assert p.spec.n_qubits == 3
    with pytest.raises(ConfigError, match="cover 2 or 4 qubits"):
        resolve(RunConfig(hamiltonian_path=str(path), ansatz="uccsd"))


def test_resolve_confusion_sources():
    p = resolve(RunConfig(molecule="h2"))
    assert p.applied_confusion is None and p.unfold_confusion is None
    p = resolve(RunConfig(molecule="h2", confusion="figure-s2"))
    assert np.array_equal(p.applied_confusion.matrix, device_confusion().matrix)
    assert p.unfold_confusion is p.applied_confusion
    # calibrate mode unfolds with an estimate, not the true matrix
    p = resolve(
        RunConfig(molecule="h2", confusion="calibrate", shots_per_state=200, repeats=4)
    )
    assert np.array_equal(p.applied_confusion.matrix, device_confusion().matrix)
    assert not np.array_equal(p.unfold_confusion.matrix, p.applied_confusion.matrix)
    assert np.max(np.abs(p.unfold_confusion.matrix - p.applied_confusion.matrix)) < 0.05


def test_resolve_confusion_from_file(tmp_path):
    path = tmp_path / "c.csv"
    write_confusion_csv(device_confusion(), path)
    p = resolve(RunConfig(molecule="h2", confusion=str(path), mitigation="readout"))
    assert np.allclose(p.applied_confusion.matrix, device_confusion().matrix, atol=1e-7)
    bad = tmp_path / "bad.csv"
    bad.write_text("not a matrix\n")
    with pytest.raises(ConfigError, match="bad.csv"):
        resolve(RunConfig(molecule="h2", confusion=str(bad)))


# --- four_pipelines ----------------------------------------------------------


def test_four_pipelines_ideal_h2_recovers_exact():
    p = four_pipelines(RunConfig(molecule="h2"))
    assert p.converged
    assert p.e_vqe == pytest.approx(p.e_exact, abs=1e-6)
    assert p.e_vqe_readout == p.e_vqe
    assert p.e_rem == pytest.approx(p.e_vqe, abs=1e-9)
    assert p.e_readout_rem == pytest.approx(p.e_vqe, abs=1e-9)
    assert len(p.theta) == 1


def test_four_pipelines_deterministic_heh_point():
    cfg = RunConfig(
        molecule="heh+",
        r=0.7899,
        backend="noisy",
        p2=DEVICE_P2,
        confusion="figure-s2",
        mitigation="readout+rem",
    )
    p = four_pipelines(cfg)
    assert p.converged
    assert p.e_exact == pytest.approx(-2.8542, abs=1e-6)
    assert p.e_readout_rem - p.e_exact == pytest.approx(0.0015309, abs=1e-6)
    assert abs(p.e_readout_rem - p.e_exact) < 2e-3
    # shotless noisy runs are fully deterministic
    q = four_pipelines(cfg)
    assert (p.e_vqe, p.e_vqe_readout, p.e_rem, p.e_readout_rem) == (
        q.e_vqe,
        q.e_vqe_readout,
        q.e_rem,
        q.e_readout_rem,
    )


def test_four_pipelines_file_loaded_hamiltonian(tmp_path):
    cfg = RunConfig(hamiltonian_path=h2_file(tmp_path), reference="01")
    p = four_pipelines(cfg)
    assert p.e_exact == pytest.approx(-1.1373, abs=5e-4)
    assert p.e_vqe == pytest.approx(p.e_exact, abs=1e-5)


# --- dissociation ------------------------------------------------------------

HEADER = "r,e_exact,e_vqe,e_vqe_readout,e_rem,e_readout_rem,err_vqe,err_rem"


def test_dissociation_ideal_h2():
    res = cmd_dissociation(RunConfig(molecule="h2"))
    lines = res.csv.strip().split("\n")
    assert lines[0] == HEADER
    assert len(lines) == 13
    assert res.warnings == ()
    assert res.rs == tuple(g.r for g in builtin("h2").geometries)
    for p in res.points:
        assert abs(p.e_vqe - p.e_exact) < 1e-6
    # csv error columns restate the stored energies
    first = lines[1].split(",")
    assert float(first[6]) == pytest.approx(
        res.points[0].e_vqe - res.points[0].e_exact, abs=1e-6
    )
    assert float(first[7]) == pytest.approx(
        res.points[0].e_readout_rem - res.points[0].e_exact, abs=1e-6
    )


def test_dissociation_rejects_single_geometry_dataset():
    with pytest.raises(ConfigError, match="single geometry"):
        cmd_dissociation(RunConfig(molecule="lih"))


def noisy_h2_cfg(**kwargs) -> RunConfig:
    return RunConfig(
        molecule="h2",
        backend="noisy",
        p2=DEVICE_P2,
        shots=5000,
        seed=42,
        confusion="figure-s2",
        mitigation="readout+rem",
        **kwargs,
    )


def test_dissociation_noisy_h2_mitigation_wins_everywhere():
    res = cmd_dissociation(noisy_h2_cfg())
    errs_vqe = [abs(p.e_vqe - p.e_exact) for p in res.points]
    errs_rem = [abs(p.e_readout_rem - p.e_exact) for p in res.points]
    for ev, er in zip(errs_vqe, errs_rem):
        assert er < ev
    near = [er for r, er in zip(res.rs, errs_rem) if r <= 1.0]
    assert sum(near) / len(near) < 2e-3
    assert max(errs_rem) < 5e-3


def test_dissociation_runs_are_reproducible():
    a = cmd_dissociation(noisy_h2_cfg())
    b = cmd_dissociation(noisy_h2_cfg())
    assert a.csv == b.csv
    c = cmd_dissociation(noisy_h2_cfg(workers=2))
    assert a.csv == c.csv


def test_dissociation_output_files(tmp_path):
    out = tmp_path / "curve.csv"
    svg = tmp_path / "curve.svg"
    res = cmd_dissociation(RunConfig(molecule="h2", out=str(out), svg=str(svg)))
    assert out.read_text() == res.csv
    root = ET.fromstring(svg.read_text())
    assert root.tag.endswith("svg")
    plain = cmd_dissociation(RunConfig(molecule="h2"))
    assert plain.csv == res.csv


# --- noise sweep -------------------------------------------------------------


def test_default_p2_grid_shape():
    grid = default_p2_grid()
    assert len(grid) == 14
    assert grid[0] == pytest.approx(1e-4)
    assert grid[-1] == pytest.approx(5e-2)
    assert all(b > a for a, b in zip(grid, grid[1:]))


def test_noise_sweep_csv_layout():
    res = cmd_noise_sweep(RunConfig(molecule="h2"), p2_grid=(1e-3, 1e-2))
    lines = res.csv.strip().split("\n")
    assert lines[0] == "p2,err_vqe,err_readout,err_rem,err_readout_rem"
    assert lines[1] == "# device p2=0.018000"
    assert len(lines) == 4


def test_noise_sweep_zero_rate_columns_coincide():
    # without a confusion source the readout pipeline is the raw pipeline,
    # and sampling noise is all that remains at p2=0
    res = cmd_noise_sweep(RunConfig(molecule="h2", shots=20000), p2_grid=(0.0,))
    assert res.err_vqe[0] == res.err_readout[0]
    assert res.err_rem[0] == res.err_readout_rem[0]
    assert res.err_vqe[0] == pytest.approx(0.0026993809, abs=1e-9)
    assert res.err_rem[0] == pytest.approx(0.0001888445, abs=1e-9)
    assert res.err_rem[0] < res.err_vqe[0]
    assert all(v < 5e-3 for v in res.err_vqe + res.err_rem)


def test_noise_sweep_device_rate_ratio():
    res = cmd_noise_sweep(
        RunConfig(molecule="h2", confusion="figure-s2", mitigation="readout+rem"),
        p2_grid=(DEVICE_P2,),
    )
    assert res.err_vqe[0] / res.err_readout_rem[0] >= 10
    assert res.err_readout[0] == pytest.approx(0.0180842, abs=1e-6)
    assert res.err_readout_rem[0] == pytest.approx(0.0004204, abs=1e-6)


def test_noise_sweep_guards(tmp_path):
    with pytest.raises(ConfigError, match="builtin molecules only"):
        cmd_noise_sweep(RunConfig(hamiltonian_path=h2_file(tmp_path)))
    with pytest.raises(ConfigError, match="non-negative"):
        cmd_noise_sweep(RunConfig(molecule="h2"), p2_grid=(-0.1, 0.1))
    with pytest.raises(ConfigError, match="strictly increasing"):
        cmd_noise_sweep(RunConfig(molecule="h2"), p2_grid=(0.01, 0.01))
    with pytest.raises(ConfigError, match="1-parameter sweep protocol"):
        cmd_noise_sweep(RunConfig(molecule="lih"))


def test_noise_sweep_defaults_to_h2(tmp_path):
    out = tmp_path / "sweep.csv"
    res = cmd_noise_sweep(RunConfig(out=str(out)), p2_grid=(1e-3, 5e-3))
    assert out.read_text() == res.csv
    assert res.p2_values == (1e-3, 5e-3)
    assert res.err_vqe[0] < res.err_vqe[1]


# --- single point ------------------------------------------------------------

RECORD_KEYS = {
    "problem", "r", "backend", "p2", "p1", "shots", "seed", "ansatz", "optimizer",
    "mitigation", "theta_min", "e_exact_ref", "e_vqe_ref", "delta_rem", "e_vqe_min",
    "e_rem", "e_exact_min", "err_vqe", "err_rem", "converged", "n_evaluations",
}


def test_single_point_ideal_h2():
    res = cmd_single_point(RunConfig(molecule="h2"))
    assert res.converged
    assert res.fit is not None and res.outcome is None
    assert set(res.record) == RECORD_KEYS
    assert res.record["p2"] == 0.0 and res.record["p1"] == 0.0
    assert res.record["r"] == 0.7414
    assert res.report.delta_rem == pytest.approx(0.0, abs=1e-9)
    assert res.report.e_vqe_min == pytest.approx(-1.1373, abs=5e-4)
    for line in ("problem:", "delta_rem:", "e_rem:", "err_rem:"):
        assert line in res.text
    assert "[not converged]" not in res.text
    assert json.loads(res.text.split("\n\n", 1)[1]) == res.record


def test_single_point_writes_record(tmp_path):
    out = tmp_path / "point.json"
    res = cmd_single_point(RunConfig(molecule="h2", out=str(out)))
    assert json.loads(out.read_text()) == res.record


def test_single_point_file_loaded_reference(tmp_path):
    cfg = RunConfig(hamiltonian_path=h2_file(tmp_path), reference="01", mitigation="rem")
    res = cmd_single_point(cfg)
    assert res.converged
    assert res.report.delta_rem == pytest.approx(0.0, abs=1e-9)
    assert res.report.e_exact_ref == pytest.approx(-1.1167, abs=5e-4)
    assert res.report.e_exact_min == pytest.approx(-1.1373, abs=5e-4)
    assert res.record["r"] is None


def test_single_point_lih_noiseless_ground():
    res = cmd_single_point(RunConfig(molecule="lih"))
    assert res.converged
    assert res.record["ansatz"].startswith("uccsd")
    assert res.record["optimizer"] == "nelder-mead"
    assert res.report.e_vqe_min == pytest.approx(-7.8811, abs=1e-3)
    assert res.report.delta_rem == pytest.approx(0.0, abs=1e-9)
    assert abs(res.report.err_rem) < 1e-3


def test_single_point_lih_noisy_hardware_efficient():
    res = cmd_single_point(
        RunConfig(
            molecule="lih", ansatz="hwe", backend="noisy", p2=DEVICE_P2,
            mitigation="rem",
        )
    )
    # budget runs out long before the 12-parameter simplex settles, but the
    # reference correction still removes most of the depolarizing bias
    assert not res.converged
    assert "[not converged]" in res.text
    assert res.report.err_vqe == pytest.approx(0.0836, abs=1e-3)
    assert abs(res.report.err_rem) < res.report.err_vqe / 10


# --- calibration command -----------------------------------------------------


def test_calibrate_ideal_is_exact_identity():
    est = cmd_calibrate(RunConfig(molecule="h2", shots_per_state=100, repeats=3))
    assert np.array_equal(est.matrix, np.eye(4))
    assert np.array_equal(est.uncertainty, np.zeros((4, 4)))


def test_calibrate_device_small_budget():
    est = cmd_calibrate(
        RunConfig(confusion="figure-s2", shots_per_state=50, repeats=5, seed=1)
    )
    assert est.matrix.shape == (4, 4)
    assert np.allclose(est.matrix.sum(axis=0), 1.0, atol=1e-9)
    assert np.max(np.abs(est.matrix - device_confusion().matrix)) < 0.2


def test_calibrate_matches_molecule_width():
    est = cmd_calibrate(RunConfig(molecule="lih", shots_per_state=20, repeats=2))
    assert est.matrix.shape == (16, 16)
    with pytest.raises(ConfigError, match="covers 2 qubits but the problem has 4"):
        cmd_calibrate(RunConfig(molecule="lih", confusion="figure-s2"))


def test_calibrate_unknown_source():
    with pytest.raises(ConfigError, match="not a known mode or a file"):
        cmd_calibrate(RunConfig(confusion="/missing.csv"))


def test_calibrate_roundtrips_through_file(tmp_path):
    out = tmp_path / "estimate.csv"
    est = cmd_calibrate(
        RunConfig(confusion="figure-s2", shots_per_state=200, repeats=4, out=str(out))
    )
    back = read_confusion_csv(out)
    assert np.allclose(back.matrix, est.matrix, atol=1e-7)
    truth = tmp_path / "truth.csv"
    write_confusion_csv(device_confusion(), truth)
    est2 = cmd_calibrate(
        RunConfig(confusion=str(truth), shots_per_state=200, repeats=4)
    )
    assert est2.matrix.shape == (4, 4)
