"""Arc-length continuation with an extrapolated predictor.

Each load step after the first is predicted by linear extrapolation of the
two previous converged states, ``u(1) = u_n + alpha (u_n - u_{n-1})`` with
``alpha = ds / ds_n``.  Because ``alpha > 0`` the predicted increment always
points the way the path was already going, which is what keeps the solver
moving forward through limit points without any direction test.

The first step is a plain load-control Newton solve at ``lambda = dlambda``;
its converged increment fixes the arc length used afterwards.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .elements import ElementDomainError
from .linsolve import SingularMatrixError, factor, solve_multi
from .model import Model, assemble

log = logging.getLogger(__name__)


class ZeroDenominatorError(ArithmeticError):
    """The scalar pivot ``b + a.du_I`` of the bordered system vanished."""


class NonConvergenceError(RuntimeError):
    """The load-control first step did not converge; choose another dlambda."""


class StallAtMinimumStep(RuntimeError):
    """Repeated failures with the arc length pinned at its lower bound.

    The converged part of the path is available as ``.path``.
    """

    def __init__(self, message, path):
        super().__init__(message)
        self.path = path


@dataclass(frozen=True)
class SolverConfig:
    """Continuation settings.

    ``psi`` selects the constraint surface (0 cylindrical, 1 spherical,
    >1 elliptical).  ``tol`` is an absolute bound on the 2-norm of the force
    residual, so it carries force units.
    """

    psi: float = 1.0
    dlambda: float = 0.1
    tol: float = 1e-6
    max_iter: int = 10
    max_steps: int = 50
    min_step_divisor: float = 1024.0
    stall_limit: int = 10

    def __post_init__(self):
        if self.psi < 0:
            raise ValueError("psi must be >= 0")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1 or self.max_steps < 1:
            raise ValueError("max_iter and max_steps must be >= 1")
        if self.dlambda == 0 or not math.isfinite(self.dlambda):
            raise ValueError("dlambda must be finite and non-zero")


@dataclass
class StepState:
    """Two converged states plus the arc-length bookkeeping."""

    u_n: np.ndarray
    lam_n: float
    u_prev: np.ndarray
    lam_prev: float
    ds: float
    ds_n: float
    ds_min: float
    ds_max: float
    converged_prev: bool = True
    restarts: int = 0

    @property
    def dlam_n(self) -> float:
        return self.lam_n - self.lam_prev


@dataclass(frozen=True)
class Prediction:
    u: np.ndarray
    lam: float
    du: np.ndarray
    dlam: float
    alpha: float


@dataclass(frozen=True)
class CorrectorResult:
    converged: bool
    u: np.ndarray
    lam: float
    du: np.ndarray
    dlam: float
    iterations: int
    reason: str = ""


@dataclass
class StepRecord:
    step: int
    lam: float
    dlam: float
    monitors: np.ndarray
    iterations: int
    ds: float
    restarts: int
    failed_iterations: int = 0
    u: np.ndarray | None = None
    alpha: float | None = None
    du_pred: np.ndarray | None = None
    dlam_pred: float | None = None
    constraint: float = 0.0


@dataclass
class EquilibriumPath:
    monitors: tuple[tuple[int, str], ...]
    records: list[StepRecord] = field(default_factory=list)
    first_ds: float = float("nan")

    def __len__(self):
        return len(self.records)

    @property
    def lam(self) -> np.ndarray:
        return np.array([r.lam for r in self.records])

    @property
    def dlam(self) -> np.ndarray:
        return np.array([r.dlam for r in self.records])

    @property
    def monitor_values(self) -> np.ndarray:
        return np.array([r.monitors for r in self.records]).reshape(len(self.records), -1)

    @property
    def restarts(self) -> int:
        return sum(r.restarts for r in self.records)

    @property
    def total_iterations(self) -> int:
        """Residual evaluations over all attempts, failed ones included."""
        return sum(r.iterations + r.failed_iterations for r in self.records)

    @property
    def converged_iterations(self) -> int:
        return sum(r.iterations for r in self.records)

    @property
    def average_iterations(self) -> float:
        return self.total_iterations / len(self.records) if self.records else float("nan")


def constraint(du, dlam, F, psi, ds) -> float:
    """Arc-length constraint residual ``du.du + psi dlam^2 F.F - ds^2``."""
    du = np.asarray(du, dtype=float)
    F = np.asarray(F, dtype=float)
    return float(du @ du + psi * dlam * dlam * (F @ F) - ds * ds)


def schur_solve(K, F, R, a, b, A):
    """Solve the bordered Newton system

        [ K   -F ] [du  ]     [R]
        [ a^T  b ] [dlam] = - [A]

    with two solves against one factorization of ``K``.

    Returns ``(dlam, du)``.  Raises :class:`SingularMatrixError` or
    :class:`ZeroDenominatorError` when the split is not solvable.
    """
    f = factor(K)
    du_I, du_II = solve_multi(f, [F, R])
    a = np.asarray(a, dtype=float)
    denom = b + a @ du_I
    guard = 1e-14 * (abs(b) + np.linalg.norm(a) * np.linalg.norm(du_I)) + 1e-300
    if abs(denom) <= guard:
        raise ZeroDenominatorError(f"bordered pivot {denom:.3e}")
    dlam = (a @ du_II - A) / denom
    du = -du_II + dlam * du_I
    return float(dlam), du


def predict(state: StepState) -> Prediction:
    """Extrapolate from the last two converged states."""
    alpha = state.ds / state.ds_n
    du = alpha * (state.u_n - state.u_prev)
    dlam = alpha * (state.lam_n - state.lam_prev)
    return Prediction(state.u_n + du, state.lam_n + dlam, du, dlam, alpha)


def corrector(model: Model, u_n, lam_n, pred: Prediction, ds: float,
              config: SolverConfig, load_control: bool = False) -> CorrectorResult:
    """Newton iterations on the residual plus arc-length constraint.

    With ``load_control`` the constraint row is replaced by ``dlam = 0``
    (``a = 0, b = 1, A = 0``), which is how the first step is solved.
    The convergence test on ``|R|`` precedes each solve, so the returned
    iteration count is the number of residual evaluations.
    """
    F = model.F_ext
    FF = float(F @ F)
    u = np.array(pred.u, dtype=float)
    lam = float(pred.lam)
    du = np.array(pred.du, dtype=float)
    dlam = float(pred.dlam)
    zero = np.zeros_like(u)
    k = 0
    try:
        for k in range(1, config.max_iter + 1):
            glob = assemble(model, u)
            R = glob.F_int - lam * F
            rnorm = float(np.linalg.norm(R))
            if not math.isfinite(rnorm):
                return CorrectorResult(False, u, lam, du, dlam, k, "non-finite residual")
            if rnorm <= config.tol:
                return CorrectorResult(True, u, lam, du, dlam, k)
            if load_control:
                a, b, A = zero, 1.0, 0.0
            else:
                a = 2.0 * du
                b = 2.0 * config.psi * dlam * FF
                A = constraint(du, dlam, F, config.psi, ds)
            dl, d = schur_solve(glob.K, F, R, a, b, A)
            du = du + d
            dlam = dlam + dl
            u = u + d
            lam = lam + dl
    except (SingularMatrixError, ZeroDenominatorError, ElementDomainError, FloatingPointError) as exc:
        return CorrectorResult(False, u, lam, du, dlam, k, f"{type(exc).__name__}: {exc}")
    return CorrectorResult(False, u, lam, du, dlam, config.max_iter, "max iterations")


def first_step(model: Model, config: SolverConfig):
    """Load-control solve at ``lambda = dlambda`` from the unloaded state.

    Returns ``(u1, lam1, ds, iterations)`` where ``ds`` is the arc length
    spanned by the converged increment.
    """
    zero = np.zeros(model.n_free)
    pred = Prediction(zero, config.dlambda, zero, config.dlambda, 1.0)
    res = corrector(model, zero, 0.0, pred, 0.0, config, load_control=True)
    if not res.converged:
        raise NonConvergenceError(
            f"first load step at dlambda={config.dlambda} did not converge ({res.reason})"
        )
    ds = math.sqrt(res.du @ res.du + config.psi * res.dlam**2 * (model.F_ext @ model.F_ext))
    return res.u, res.lam, ds, res.iterations


def adapt_step(converged: bool, converged_prev: bool, ds: float,
               ds_min: float, ds_max: float) -> float:
    """Arc-length update after an attempt.

    Success after success doubles (clamped to the bounds); a success after a
    failure keeps ``ds``; a failure halves it, or quarters it when the
    previous attempt failed too.
    """
    if converged:
        if converged_prev:
            return min(max(2.0 * ds, ds_min), ds_max)
        return ds
    if converged_prev:
        return max(ds / 2.0, ds_min)
    return max(ds / 4.0, ds_min)


def run(model: Model, config: SolverConfig) -> EquilibriumPath:
    """Trace the equilibrium path for ``config.max_steps`` converged steps.

    Raises
    ------
    NonConvergenceError
        When the first (load-control) step fails.
    StallAtMinimumStep
        When ``stall_limit`` consecutive attempts fail at the minimum arc
        length; the partial path is attached to the exception.
    """
    path = EquilibriumPath(model.monitors)
    F = model.F_ext

    u1, lam1, ds, iters = first_step(model, config)
    path.first_ds = ds
    path.records.append(
        StepRecord(1, lam1, lam1, model.monitor_values(u1), iters, ds, 0, u=u1.copy())
    )
    log.info("step 1: lambda=%.6g ds=%.6g iterations=%d", lam1, ds, iters)
    if ds == 0.0:
        raise NonConvergenceError("first step produced a zero arc length")

    state = StepState(
        u_n=u1, lam_n=lam1, u_prev=np.zeros_like(u1), lam_prev=0.0,
        ds=ds, ds_n=ds, ds_min=ds / config.min_step_divisor, ds_max=ds,
        converged_prev=True,
    )
    step_restarts = 0
    failed_iters = 0
    stalls = 0
    step = 1
    while step < config.max_steps:
        pred = predict(state)
        converged_prev = state.converged_prev
        if not (np.any(pred.du) or pred.dlam):
            res = CorrectorResult(False, pred.u, pred.lam, pred.du, pred.dlam, 0, "stationary history")
        else:
            res = corrector(model, state.u_n, state.lam_n, pred, state.ds, config)
        state.converged_prev = res.converged

        if res.converged:
            step += 1
            path.records.append(StepRecord(
                step, res.lam, res.lam - state.lam_n, model.monitor_values(res.u),
                res.iterations, state.ds, step_restarts, failed_iters,
                u=res.u.copy(), alpha=pred.alpha, du_pred=pred.du, dlam_pred=pred.dlam,
                constraint=constraint(res.du, res.dlam, F, config.psi, state.ds),
            ))
            state.u_prev, state.lam_prev = state.u_n, state.lam_n
            state.u_n, state.lam_n = res.u, res.lam
            state.ds_n = state.ds
            state.ds = adapt_step(True, converged_prev, state.ds, state.ds_min, state.ds_max)
            step_restarts = failed_iters = stalls = 0
        else:
            log.debug("step %d attempt failed (ds=%.4g): %s", step + 1, state.ds, res.reason)
            step_restarts += 1
            failed_iters += res.iterations
            state.restarts += 1
            if state.ds <= state.ds_min:
                stalls += 1
                if stalls >= config.stall_limit:
                    raise StallAtMinimumStep(
                        f"step {step + 1}: {stalls} consecutive failures at ds_min={state.ds_min:.4g}",
                        path,
                    )
            state.ds = adapt_step(False, converged_prev, state.ds, state.ds_min, state.ds_max)
    return path
