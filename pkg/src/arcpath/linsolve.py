"""Dense factor-once / solve-many linear solver.

The tangent stiffness becomes indefinite past limit points, so the
factorization is LU with partial pivoting rather than Cholesky.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

PIVOT_RTOL = 1e-14


class SingularMatrixError(ArithmeticError):
    """Raised when a pivot vanishes relative to the largest diagonal entry."""


@dataclass(frozen=True)
class Factorization:
    lu: np.ndarray
    piv: np.ndarray
    singular: bool = False

    @property
    def n(self) -> int:
        return self.lu.shape[0]


def factor(A) -> Factorization:
    """Factorize a square matrix once for repeated solves.

    Raises
    ------
    SingularMatrixError
        If some pivot satisfies ``|u_ii| <= 1e-14 * max|A_ii|``.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise SingularMatrixError("matrix has non-finite entries")
    scale = np.max(np.abs(np.diag(A))) if A.size else 0.0
    if scale == 0.0:
        raise SingularMatrixError("matrix has an all-zero diagonal")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(A, check_finite=False)
    pivots = np.abs(np.diag(lu))
    if np.min(pivots) <= PIVOT_RTOL * scale:
        raise SingularMatrixError(
            f"near-zero pivot {np.min(pivots):.3e} (scale {scale:.3e})"
        )
    return Factorization(lu, piv)


def solve_multi(f: Factorization, rhs) -> list[np.ndarray]:
    """Solve ``A x_i = rhs_i`` for every right-hand side with one factorization."""
    cols = [np.asarray(b, dtype=float) for b in rhs]
    for b in cols:
        if b.shape != (f.n,):
            raise ValueError(f"right-hand side of shape {b.shape}, expected ({f.n},)")
    if not cols:
        return []
    X = scipy.linalg.lu_solve((f.lu, f.piv), np.column_stack(cols), check_finite=False)
    return [np.ascontiguousarray(X[:, i]) for i in range(len(cols))]


def solve(f: Factorization, b) -> np.ndarray:
    return solve_multi(f, [b])[0]
