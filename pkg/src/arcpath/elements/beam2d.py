"""Planar geometrically exact (Reissner) beam element.

Total Lagrangian, linear interpolation of ``u, v, theta`` and one-point
(midpoint) integration, which removes shear locking.  With ``beta`` the
reference orientation of the element axis and ``theta`` the nodal rotation,
the section strains at the midpoint are::

    eps   =  x' . t - 1          t = ( cos(beta + theta), sin(beta + theta))
    gamma =  x' . n              n = (-sin(beta + theta), cos(beta + theta))
    chi   =  (theta2 - theta1) / L0

where ``x' = (x2 - x1) / L0`` is the current chord per unit reference length.
Nodal ordering is ``(u1, v1, theta1, u2, v2, theta2)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import ElementResponse, ZeroLengthError


@dataclass(frozen=True)
class Beam2DElement:
    nodes: tuple[int, int]
    A: float
    I: float
    E: float
    nu: float = 0.0
    kappa: float = 1.0

    dof_components = ("ux", "uy", "rz")

    def __post_init__(self):
        if not (self.A > 0 and self.I > 0 and self.E > 0):
            raise ValueError("beam needs A, I, E > 0")
        if not (-1.0 < self.nu <= 0.5):
            raise ValueError(f"Poisson ratio {self.nu} outside (-1, 0.5]")
        if not self.kappa > 0:
            raise ValueError("shear correction factor must be positive")

    @property
    def G(self) -> float:
        return self.E / (2.0 * (1.0 + self.nu))

    @staticmethod
    def batch(elements, coords, u):
        """Forces and tangents for a list of elements of this type."""
        return batch_response(elements, coords, u)

    def response(self, coords, u) -> ElementResponse:
        return response_beam(self, coords, u)


def section_state(elem: Beam2DElement, coords, u):
    """Midpoint strains ``(eps, gamma, chi)`` and resultants ``(N, Q, M)``."""
    strain, stress, _, _ = batch_evaluate(
        _props([elem]), np.asarray(coords, dtype=float)[None], np.asarray(u, dtype=float)[None], tangent=False
    )
    return tuple(strain[0]), tuple(stress[0])


def response_beam(elem: Beam2DElement, coords, u) -> ElementResponse:
    _, _, force, stiffness = batch_evaluate(
        _props([elem]), np.asarray(coords, dtype=float)[None], np.asarray(u, dtype=float)[None]
    )
    return ElementResponse(force[0], stiffness[0])


def _props(elements):
    return np.array([[e.E * e.A, e.kappa * e.G * e.A, e.E * e.I] for e in elements])


def batch_response(elements, coords, u):
    """Forces ``(m, 6)`` and tangents ``(m, 6, 6)`` for ``m`` beams at once.

    ``coords`` is ``(m, 2, 2|3)``, ``u`` is ``(m, 6)``.
    """
    _, _, force, stiffness = batch_evaluate(_props(elements), coords, u)
    return force, stiffness


def batch_evaluate(props, coords, u, tangent=True):
    X = np.asarray(coords, dtype=float)[:, :, :2]
    u = np.asarray(u, dtype=float)
    dX = X[:, 1] - X[:, 0]
    L0 = np.hypot(dX[:, 0], dX[:, 1])
    scale = np.maximum(1.0, np.max(np.abs(X), axis=(1, 2)))
    if np.any(L0 <= 1e-14 * scale):
        raise ZeroLengthError("degenerate beam element")
    beta = np.arctan2(dX[:, 1], dX[:, 0])

    dx = (dX[:, 0] + u[:, 3] - u[:, 0]) / L0
    dy = (dX[:, 1] + u[:, 4] - u[:, 1]) / L0
    phi = beta + 0.5 * (u[:, 2] + u[:, 5])
    c, s = np.cos(phi), np.sin(phi)

    eps = dx * c + dy * s - 1.0
    gam = -dx * s + dy * c
    chi = (u[:, 5] - u[:, 2]) / L0
    strain = np.column_stack([eps, gam, chi])
    stress = strain * props
    N, Q = stress[:, 0], stress[:, 1]

    # strain gradients w.r.t. the element DOFs, shape (m, 3, 6)
    m = len(L0)
    B = np.zeros((m, 3, 6))
    B[:, 0, 0], B[:, 0, 1], B[:, 0, 3], B[:, 0, 4] = -c / L0, -s / L0, c / L0, s / L0
    B[:, 0, 2] = B[:, 0, 5] = 0.5 * gam
    B[:, 1, 0], B[:, 1, 1], B[:, 1, 3], B[:, 1, 4] = s / L0, -c / L0, -s / L0, c / L0
    B[:, 1, 2] = B[:, 1, 5] = -0.5 * (1.0 + eps)
    B[:, 2, 2], B[:, 2, 5] = -1.0 / L0, 1.0 / L0
    force = L0[:, None] * np.einsum("mij,mi->mj", B, stress)
    if not tangent:
        return strain, stress, force, None

    K = L0[:, None, None] * np.einsum("mki,mk,mkj->mij", B, props, B)

    # geometric part: second derivatives of eps and gamma couple the chord
    # (u, v) with the mean rotation phi; d(phi)/dq = 1/2 on both rotations
    cx = (-N * s - Q * c) / L0  # times d(dx)/dq = (-1, 0, 0, 1, 0, 0)
    cy = (N * c - Q * s) / L0  # times d(dy)/dq = (0, -1, 0, 0, 1, 0)
    cpp = -N * (1.0 + eps) - Q * gam
    v = np.zeros((m, 6))
    v[:, 0], v[:, 3] = -cx, cx
    v[:, 1], v[:, 4] = -cy, cy
    r = np.array([0.0, 0.0, 0.5, 0.0, 0.0, 0.5])
    mixed = v[:, :, None] * r[None, None, :]
    K += L0[:, None, None] * (mixed + mixed.transpose(0, 2, 1) + cpp[:, None, None] * np.outer(r, r))
    return strain, stress, force, K


def normalize_arch_outputs(P, u, v, R, E, I):
    """Return ``(P R^2 / (E I), u / R, v / R)``."""
    if not (R > 0 and E > 0 and I > 0):
        raise ValueError("R, E and I must be positive")
    return P * R * R / (E * I), u / R, v / R
