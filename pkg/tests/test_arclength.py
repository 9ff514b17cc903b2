import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcpath import SolverConfig, StallAtMinimumStep, ZeroDenominatorError, run, schur_solve
from arcpath.arclength import (
    NonConvergenceError,
    Prediction,
    StepState,
    adapt_step,
    constraint,
    corrector,
    first_step,
    predict,
)
from arcpath.linsolve import SingularMatrixError, factor, solve
from arcpath.model import assemble

from springs import spring_model


def augmented_solve(K, F, R, a, b, A):
    n = len(F)
    M = np.zeros((n + 1, n + 1))
    M[:n, :n], M[:n, n], M[n, :n], M[n, n] = K, -F, a, b
    x = np.linalg.solve(M, -np.append(R, A))
    return x[n], x[:n]


# constraint ---------------------------------------------------------------

def test_constraint_examples():
    assert constraint([0.0], 0.0, [1.0], 1.0, 0.0) == 0.0
    assert constraint([3.0, 4.0], 0.0, [1.0, 1.0], 0.0, 5.0) == 0.0
    assert constraint([1.0], 2.0, [1.0], 1.0, 0.0) == 5.0


# schur_solve --------------------------------------------------------------

def test_schur_first_step_values_reduce_to_newton(rng):
    K = rng.standard_normal((4, 4)) + 4 * np.eye(4)
    F, R = rng.standard_normal(4), rng.standard_normal(4)
    dlam, du = schur_solve(K, F, R, np.zeros(4), 1.0, 0.0)
    assert dlam == 0.0
    assert np.allclose(du, -np.linalg.solve(K, R), rtol=1e-13)


def test_schur_hand_example():
    dlam, du = schur_solve([[2.0]], [1.0], [0.0], [1.0], 0.0, 0.5)
    assert dlam == pytest.approx(-1.0)
    assert du == pytest.approx([-0.5])


@settings(max_examples=100, deadline=None)
@given(n=st.integers(1, 20), seed=st.integers(0, 2**32 - 1), spd=st.booleans())
def test_schur_matches_augmented_system(n, seed, spd):
    rng = np.random.default_rng(seed)
    Q = rng.standard_normal((n, n))
    K = Q @ Q.T + np.eye(n) if spd else Q + np.diag(rng.choice([-1.0, 1.0], n) * n)
    F, R, a = rng.standard_normal(n), rng.standard_normal(n), rng.standard_normal(n)
    b, A = rng.standard_normal(), rng.standard_normal()
    dlam, du = schur_solve(K, F, R, a, b, A)
    ref_lam, ref_u = augmented_solve(K, F, R, a, b, A)
    scale = np.linalg.norm(np.append(ref_u, ref_lam))
    assert np.linalg.norm(np.append(du - ref_u, dlam - ref_lam)) <= 1e-9 * scale


def test_schur_failures():
    with pytest.raises(ZeroDenominatorError):
        schur_solve(np.eye(2), [1.0, 0.0], [0.0, 0.0], [0.0, 0.0], 0.0, 1.0)
    with pytest.raises(SingularMatrixError):
        schur_solve(np.zeros((2, 2)), [1.0, 0.0], [0.0, 0.0], [1.0, 0.0], 1.0, 0.0)


# predict ------------------------------------------------------------------

def _state(ds, ds_n=1.0, u_n=2.0, u_prev=1.0, lam_n=0.2, lam_prev=0.1):
    return StepState(np.array([u_n]), lam_n, np.array([u_prev]), lam_prev, ds, ds_n, ds_n / 1024, ds_n)


def test_predict_uniform_step():
    p = predict(_state(1.0))
    assert p.alpha == 1.0
    assert p.u.tolist() == [3.0] and p.lam == pytest.approx(0.3)


def test_predict_half_step():
    p = predict(_state(0.5))
    assert p.u.tolist() == [2.5] and p.lam == pytest.approx(0.25)
    assert p.du.tolist() == [0.5] and p.dlam == pytest.approx(0.05)


def test_predict_stationary_history_is_degenerate():
    p = predict(_state(1.0, u_n=1.0, lam_n=0.1))
    assert not np.any(p.du) and p.dlam == 0.0


@settings(max_examples=50, deadline=None)
@given(st.floats(1e-3, 1e3), st.floats(-5, 5), st.floats(-5, 5))
def test_predict_keeps_direction(ds, dlam_n, du_n):
    p = predict(_state(ds, u_n=1.0 + du_n, u_prev=1.0, lam_n=dlam_n, lam_prev=0.0))
    assert p.alpha > 0
    assert np.sign(p.dlam) == np.sign(dlam_n)


# adapt_step ---------------------------------------------------------------

def test_adapt_step_examples():
    assert adapt_step(True, True, 0.1, 0.001, 0.15) == 0.15
    assert adapt_step(False, True, 0.1, 0.001, 0.15) == 0.05
    assert adapt_step(False, False, 0.002, 0.001, 0.15) == 0.001
    assert adapt_step(True, False, 0.01, 0.001, 0.15) == 0.01
    assert adapt_step(True, True, 0.0001, 0.001, 0.15) == 0.001


# corrector and first step -------------------------------------------------

def test_first_step_on_linear_model():
    m = spring_model(c1=4.0)
    cfg = SolverConfig(dlambda=0.5)
    u1, lam1, ds, iters = first_step(m, cfg)
    assert lam1 == 0.5 and u1 == pytest.approx([0.125])
    assert iters == 2
    assert ds == pytest.approx(np.hypot(0.125, 0.5))


def test_first_step_is_plain_load_control_newton():
    m = spring_model(c1=1.0, c3=1.0)
    cfg = SolverConfig(dlambda=0.8)
    u1, lam1, _, iters = first_step(m, cfg)
    u = np.zeros(1)
    for k in range(1, cfg.max_iter + 1):
        g = assemble(m, u)
        R = g.F_int - cfg.dlambda * m.F_ext
        if np.linalg.norm(R) <= cfg.tol:
            break
        u = u - solve(factor(g.K), R)
    assert np.array_equal(u, u1) and k == iters and lam1 == cfg.dlambda


def test_first_step_failure_is_fatal():
    m = spring_model(c1=1.0, limit=0.1)
    with pytest.raises(NonConvergenceError):
        first_step(m, SolverConfig(dlambda=1.0))


def test_converged_predictor_costs_one_evaluation():
    m = spring_model(c1=2.0)
    pred = Prediction(np.array([0.5]), 1.0, np.array([0.5]), 1.0, 1.0)
    res = corrector(m, np.zeros(1), 0.0, pred, np.hypot(0.5, 1.0), SolverConfig())
    assert res.converged and res.iterations == 1


def test_linear_model_corrects_in_two_evaluations():
    m = spring_model(c1=2.0)
    pred = Prediction(np.array([0.3]), 0.2, np.array([0.3]), 0.2, 1.0)
    res = corrector(m, np.zeros(1), 0.0, pred, 1.0, SolverConfig())
    assert res.converged and res.iterations <= 2


def test_cubic_spring_matches_scalar_newton_oracle():
    # F_int = u^3 - u, F = 1: solve both rows of the 2x2 system by scalar Newton
    m = spring_model(c1=-1.0, c3=1.0)
    cfg = SolverConfig(tol=1e-13, max_iter=30)
    u_n, lam_n, ds = 0.1, 0.1**3 - 0.1, 0.05
    du0, dl0 = -0.03, 0.02
    pred = Prediction(np.array([u_n + du0]), lam_n + dl0, np.array([du0]), dl0, 1.0)
    res = corrector(m, np.array([u_n]), lam_n, pred, ds, cfg)

    x = np.array([du0, dl0])
    for _ in range(50):
        u, lam = u_n + x[0], lam_n + x[1]
        G = np.array([u**3 - u - lam, x[0] ** 2 + x[1] ** 2 - ds**2])
        J = np.array([[3 * u**2 - 1, -1.0], [2 * x[0], 2 * x[1]]])
        x = x - np.linalg.solve(J, G)
    assert res.converged
    assert res.u[0] == pytest.approx(u_n + x[0], abs=1e-10)
    assert res.lam == pytest.approx(lam_n + x[1], abs=1e-10)


def test_singular_tangent_is_a_step_failure_not_a_crash():
    m = spring_model(c1=-1.0, c3=1.0)
    # K = 3u^2 - 1 vanishes at u = 1/sqrt(3); load control cannot pass it
    pred = Prediction(np.array([1 / np.sqrt(3)]), 1.0, np.zeros(1), 0.0, 1.0)
    res = corrector(m, np.zeros(1), 0.0, pred, 1.0, SolverConfig(), load_control=True)
    assert not res.converged


# run ----------------------------------------------------------------------

def test_linear_path_is_uniform():
    m = spring_model(c1=4.0)
    path = run(m, SolverConfig(dlambda=0.5, max_steps=3))
    assert [r.step for r in path.records] == [1, 2, 3]
    assert np.allclose(np.diff(np.r_[0.0, path.lam]), 0.5)
    assert np.allclose(path.monitor_values[:, 0], path.lam / 4)
    assert [r.iterations for r in path.records] == [2, 1, 1]
    assert path.restarts == 0
    assert path.average_iterations == pytest.approx(path.total_iterations / 3, abs=1e-12)


def test_snap_through_of_cubic_spring_is_traced():
    # lam = u - u^3 peaks at u = 1/sqrt(3) and then falls without bound
    m = spring_model(c1=-1.0, c3=1.0, load=-1.0)
    path = run(m, SolverConfig(dlambda=0.01, max_steps=200))
    u = path.monitor_values[:, 0]
    lam = path.lam
    assert np.allclose(u**3 - u, -lam, atol=1e-6)
    assert u.max() > 1.2  # well past the limit point
    assert np.sum(np.diff(np.sign(path.dlam)) != 0) == 1


def test_run_is_deterministic():
    m = spring_model(c1=-1.0, c3=1.0, load=-1.0)
    cfg = SolverConfig(dlambda=0.01, max_steps=60)
    a, b = run(m, cfg), run(m, cfg)
    assert np.array_equal(a.lam, b.lam)
    assert np.array_equal(a.monitor_values, b.monitor_values)


def test_stall_at_minimum_step_keeps_partial_path():
    m = spring_model(c1=1.0, limit=0.5)
    with pytest.raises(StallAtMinimumStep) as info:
        run(m, SolverConfig(dlambda=0.1, max_steps=1000))
    path = info.value.path
    assert 1 < len(path) < 1000
    assert path.monitor_values[-1, 0] <= 0.5


def test_config_validation():
    for bad in (dict(psi=-1), dict(tol=0), dict(max_iter=0), dict(max_steps=0), dict(dlambda=0)):
        with pytest.raises(ValueError):
            SolverConfig(**bad)
