"""Energy evaluation, minimization, sweep-and-fit, and the mitigation hooks."""
import math

import numpy as np
import pytest
import scipy.optimize

from remvqe import (
    ConfusionMatrix,
    EnergyEvaluator,
    NoiseModel,
    PauliHamiltonian,
    builtin,
    default_grid,
    evaluate,
    h2_compact_spec,
    minimize,
    reference_exact_energy,
    sweep_and_fit,
    uccsd_spec,
    with_reference,
)
from remvqe.vqe import REFERENCE_INDEX

H2 = builtin("h2")
HEH = builtin("heh+")


def h2_evaluator(r: float = 0.7414, **kwargs) -> EnergyEvaluator:
    return EnergyEvaluator(H2.geometry(r).hamiltonian, h2_compact_spec(), **kwargs)


def bowl_hamiltonian() -> PauliHamiltonian:
    # E(theta) = -cos(theta) on the compact ansatz: single minimum at 0
    return PauliHamiltonian(2, (("IZ", 0.5), ("ZI", -0.5)))


# --- evaluate ----------------------------------------------------------------


def test_evaluator_validation():
    with pytest.raises(ValueError, match="shots must be positive"):
        h2_evaluator(shots=0)
    with pytest.raises(ValueError, match="rem flag requires a reference"):
        evaluate(h2_evaluator(rem=True), [0.0])


def test_evaluate_rejects_wrong_parameter_count():
    with pytest.raises(ValueError, match="ansatz takes 1 parameters, got 2"):
        evaluate(h2_evaluator(), [0.0, 0.0])


def test_hartree_fock_point_is_reference_energy():
    ev = h2_evaluator()
    e = evaluate(ev, [0.0])
    assert e == pytest.approx(reference_exact_energy(ev), abs=1e-12)
    assert e == pytest.approx(-1.1167, abs=5e-4)


def test_hartree_fock_point_stretched_heh():
    ev = EnergyEvaluator(HEH.geometry(1.5).hamiltonian, uccsd_spec(2))
    assert evaluate(ev, [0.0, 0.0, 0.0]) == pytest.approx(-2.8234, abs=5e-4)


def test_sampled_energy_consistent_with_exact():
    ev = h2_evaluator(shots=10**6, seed=3)
    exact = evaluate(h2_evaluator(), [0.4])
    # the shot split gives 5e5 per group; the dominant-term spread stays
    # below ~3e-4, so 2e-3 is a comfortable multiple of sigma
    assert abs(evaluate(ev, [0.4], index=0) - exact) < 2e-3


def test_evaluate_seed_and_index_determinism():
    ev = h2_evaluator(shots=400, seed=11)
    assert evaluate(ev, [0.7], index=5) == evaluate(ev, [0.7], index=5)
    assert evaluate(ev, [0.7], index=5) != evaluate(ev, [0.7], index=6)
    other = h2_evaluator(shots=400, seed=12)
    assert evaluate(ev, [0.7], index=5) != evaluate(other, [0.7], index=5)


def test_identity_unfolding_preserves_sampled_energy():
    # same seed/index means both pipelines see identical counts, and an
    # identity confusion matrix makes the QP a passthrough
    raw = h2_evaluator(shots=500, seed=9)
    unfolded = h2_evaluator(
        shots=500,
        seed=9,
        readout_mitigation=True,
        unfold_matrix=ConfusionMatrix.identity(2),
    )
    for theta in (0.0, 0.3, -1.2):
        assert evaluate(raw, [theta], index=2) == pytest.approx(
            evaluate(unfolded, [theta], index=2), abs=1e-9
        )


def test_readout_mitigation_requires_matrix():
    ev = h2_evaluator(shots=100, readout_mitigation=True)
    with pytest.raises(ValueError, match="needs a confusion matrix"):
        evaluate(ev, [0.0])


def test_noisy_energy_stays_above_noiseless_minimum():
    noisy = h2_evaluator(noise=NoiseModel(p2=0.02))
    clean = h2_evaluator()
    fit = sweep_and_fit(clean)
    for theta in (-1.0, 0.0, 0.5):
        assert evaluate(noisy, [theta]) > fit.e_min


# --- minimize ----------------------------------------------------------------


def test_minimize_quadratic_bowl():
    ev = EnergyEvaluator(bowl_hamiltonian(), h2_compact_spec())
    grid = np.linspace(-3.0, 3.0, 13)
    for theta in grid:
        assert evaluate(ev, [theta]) == pytest.approx(-math.cos(theta), abs=1e-12)
    out = minimize(ev)
    assert out.converged
    assert out.energy == pytest.approx(-1.0, abs=1e-6)
    assert out.theta[0] == pytest.approx(0.0, abs=1e-3)


def test_minimize_heh_noiseless():
    ev = EnergyEvaluator(HEH.geometry(0.7899).hamiltonian, uccsd_spec(2))
    out = minimize(ev)
    assert out.converged
    assert out.energy == pytest.approx(-2.8542, abs=1e-4)
    assert np.max(np.abs(out.theta)) < 0.1


def test_minimize_outcome_bookkeeping():
    ev = EnergyEvaluator(bowl_hamiltonian(), h2_compact_spec())
    out = minimize(ev)
    assert out.n_evaluations == len(out.trace)
    assert out.energy == min(e for _, e in out.trace)
    assert evaluate(ev, out.theta) == pytest.approx(out.energy, abs=1e-12)
    with pytest.raises(ValueError):
        out.theta[0] = 99.0


def test_minimize_budget_exhaustion_is_not_an_error():
    ev = h2_evaluator()
    out = minimize(ev, max_evals=10)
    assert not out.converged
    assert out.n_evaluations <= 11
    assert out.message


def test_minimize_validation():
    ev = h2_evaluator()
    with pytest.raises(ValueError, match="unknown optimizer"):
        minimize(ev, optimizer="cobyla")
    with pytest.raises(ValueError, match="theta0 has shape"):
        minimize(ev, theta0=[0.1, 0.2])


def test_spsa_reduces_noisy_energy():
    ev = h2_evaluator(noise=NoiseModel(p2=0.018), shots=2000, seed=4)
    out = minimize(ev, optimizer="spsa", max_evals=300)
    assert out.energy < out.trace[0][1]


def test_spsa_trace_determinism():
    def run(seed):
        ev = h2_evaluator(shots=300, seed=seed)
        return minimize(ev, optimizer="spsa", max_evals=60).trace

    assert run(21) == run(21)
    assert run(21) != run(22)


# --- sweep-and-fit -----------------------------------------------------------


def test_default_grid():
    grid = default_grid()
    assert grid.size == 25
    assert grid[0] == pytest.approx(-math.pi)
    assert grid[-1] == pytest.approx(math.pi)


def test_sweep_validation():
    with pytest.raises(ValueError, match="1-parameter ansatz"):
        sweep_and_fit(EnergyEvaluator(HEH.geometry(1.0).hamiltonian, uccsd_spec(2)))
    ev = h2_evaluator()
    with pytest.raises(ValueError, match="at least 4 points"):
        sweep_and_fit(ev, grid=[0.0, 1.0, 2.0])
    with pytest.raises(ValueError, match="degenerate"):
        sweep_and_fit(ev, grid=[0.0, 0.0, 1.0, 1.0])


def test_sweep_recovers_synthetic_cosine():
    # coefficients chosen so E(theta) = 2 + 0.5 cos(theta - 0.3) exactly
    alpha, beta = -0.5 * math.cos(0.3), -0.5 * math.sin(0.3)
    h = PauliHamiltonian(
        2,
        (("IZ", 0.5 * alpha), ("ZI", -0.5 * alpha), ("XX", beta)),
        offset=2.0,
    )
    fit = sweep_and_fit(EnergyEvaluator(h, h2_compact_spec()))
    assert fit.c == pytest.approx(2.0, abs=1e-10)
    assert fit.a == pytest.approx(0.5, abs=1e-10)
    assert fit.alpha == pytest.approx(0.3, abs=1e-10)
    assert fit.e_min == pytest.approx(1.5, abs=1e-10)
    assert fit.theta_min == pytest.approx(0.3 - math.pi, abs=1e-10)
    assert fit.value_at(0.3) == pytest.approx(2.5, abs=1e-10)


def test_sweep_matches_scalar_minimizer():
    ev = h2_evaluator()
    fit = sweep_and_fit(ev, grid=np.linspace(-math.pi, math.pi, 13))
    res = scipy.optimize.minimize_scalar(
        lambda t: evaluate(ev, [t]), bounds=(-math.pi, math.pi), method="bounded",
        options={"xatol": 1e-10},
    )
    assert fit.e_min == pytest.approx(res.fun, abs=1e-9)
    assert fit.e_min == pytest.approx(-1.1373, abs=5e-4)


def test_sweep_energies_record_grid_order():
    ev = h2_evaluator()
    grid = np.linspace(-2.0, 2.0, 9)
    fit = sweep_and_fit(ev, grid=grid)
    assert fit.grid == tuple(grid)
    for theta, energy in zip(fit.grid, fit.energies):
        assert evaluate(ev, [theta]) == pytest.approx(energy, abs=1e-12)


@pytest.mark.parametrize("r", [g.r for g in H2.geometries])
def test_minimize_agrees_with_sweep_every_geometry(r):
    ev = h2_evaluator(r)
    fit = sweep_and_fit(ev)
    out = minimize(ev)
    assert out.converged
    assert out.energy == pytest.approx(fit.e_min, abs=1e-6)


# --- reference-state correction hooks ----------------------------------------


def test_with_reference_noiseless_delta_is_zero():
    armed, e_vqe_ref, e_exact_ref = with_reference(h2_evaluator())
    assert e_vqe_ref == pytest.approx(e_exact_ref, abs=1e-12)
    assert armed.rem and armed.delta == pytest.approx(0.0, abs=1e-12)


def test_with_reference_noisy_delta_positive():
    ev = h2_evaluator(noise=NoiseModel(p2=0.018))
    armed, e_vqe_ref, e_exact_ref = with_reference(ev)
    assert e_exact_ref == pytest.approx(-1.1167, abs=5e-4)
    assert e_vqe_ref > e_exact_ref
    assert armed.delta == pytest.approx(e_vqe_ref - e_exact_ref, abs=1e-15)
    # armed evaluator subtracts delta from every energy
    base = evaluate(ev, [0.2])
    assert evaluate(armed, [0.2]) == pytest.approx(base - armed.delta, abs=1e-12)


def test_with_reference_accepts_external_exact_value():
    armed, _, e_exact_ref = with_reference(h2_evaluator(), e_exact_ref=-1.25)
    assert e_exact_ref == -1.25
    assert armed.delta == pytest.approx(evaluate(h2_evaluator(), [0.0]) + 1.25)


def test_reference_index_outside_optimizer_range():
    assert REFERENCE_INDEX >= 10**9


def test_rem_shift_never_moves_the_argmin():
    ev = h2_evaluator(noise=NoiseModel(p2=0.018, p1=0.0018), shots=2000, seed=6)
    fit_raw = sweep_and_fit(ev)
    armed, *_ = with_reference(ev)
    fit_rem = sweep_and_fit(armed)
    raw = np.array(fit_raw.energies)
    rem = np.array(fit_rem.energies)
    assert np.argmin(raw) == np.argmin(rem)
    assert np.allclose(raw - rem, armed.delta, atol=1e-12)
    assert fit_rem.theta_min == pytest.approx(fit_raw.theta_min, abs=1e-9)
    assert fit_rem.a == pytest.approx(fit_raw.a, abs=1e-9)
    assert fit_rem.alpha == pytest.approx(fit_raw.alpha, abs=1e-9)
    assert fit_rem.c == pytest.approx(fit_raw.c - armed.delta, abs=1e-9)
