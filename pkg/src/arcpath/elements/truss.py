"""Two-node space truss with engineering or Green-Lagrange strain.

Nodal displacement ordering is ``(u1, v1, w1, u2, v2, w2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .base import ElementResponse, ZeroLengthError

ENGINEERING = "engineering"
GREEN = "green"

# d(B)/d(u): the fixed +-1 coupling pattern of the two end nodes
H = np.block([[np.eye(3), -np.eye(3)], [-np.eye(3), np.eye(3)]])

LENGTH_RTOL = 1e-14


@dataclass(frozen=True)
class TrussElement:
    nodes: tuple[int, int]
    A: float
    E: float
    strain: Literal["engineering", "green"] = GREEN

    dof_components = ("ux", "uy", "uz")

    def __post_init__(self):
        if not (self.A > 0 and self.E > 0):
            raise ValueError(f"truss needs A > 0 and E > 0, got A={self.A}, E={self.E}")
        if self.strain not in (ENGINEERING, GREEN):
            raise ValueError(f"unknown strain measure {self.strain!r}")

    @staticmethod
    def batch(elements, coords, u):
        """Forces and tangents for a list of elements of this type."""
        return batch_response(elements, coords, u)

    def response(self, coords, u) -> ElementResponse:
        if self.strain == ENGINEERING:
            return response_engineering(self, coords, u)
        return response_green(self, coords, u)


def _kinematics(coords, u):
    """Batched lengths and ``B`` vectors for ``(m, 2, 3)`` coords/displacements."""
    X = np.asarray(coords, dtype=float).reshape(-1, 2, 3)
    x = X + np.asarray(u, dtype=float).reshape(-1, 2, 3)
    d0 = X[:, 1] - X[:, 0]
    d = x[:, 1] - x[:, 0]
    L0 = np.sqrt(np.einsum("mi,mi->m", d0, d0))
    L = np.sqrt(np.einsum("mi,mi->m", d, d))
    scale = np.maximum(1.0, np.max(np.abs(X), axis=(1, 2)))
    if np.any(L0 <= LENGTH_RTOL * scale):
        raise ZeroLengthError("degenerate truss element (zero reference length)")
    if np.any(L <= LENGTH_RTOL * scale):
        raise ZeroLengthError("truss element collapsed to zero length")
    B = np.concatenate([-d, d], axis=1)
    return L0, L, B


def lengths(elem, coords, u) -> tuple[float, float]:
    """Reference and current lengths ``(L0, L)``.

    ``coords`` holds the two nodal reference positions (2x3 or flat 6),
    ``u`` the matching nodal displacements.
    """
    L0, L, _ = _kinematics(coords, u)
    return float(L0[0]), float(L[0])


def batch_response(elements, coords, u):
    """Forces ``(m, 6)`` and tangents ``(m, 6, 6)`` for ``m`` trusses at once."""
    EA = np.array([e.E * e.A for e in elements])
    green = np.array([e.strain == GREEN for e in elements])
    L0, L, B = _kinematics(coords, u)
    eng = (L - L0) / L0
    gl = (L * L - L0 * L0) / (2.0 * L0 * L0)
    # engineering: EA eps_E / L,  EA / L^3;  Green: EA eps_G / L0,  EA / L0^3
    axial = np.where(green, EA * gl / L0, EA * eng / L)
    material = np.where(green, EA / L0**3, EA / L**3)
    force = axial[:, None] * B
    stiffness = material[:, None, None] * (B[:, :, None] * B[:, None, :]) + axial[:, None, None] * H
    return force, stiffness


def response_engineering(elem: TrussElement, coords, u) -> ElementResponse:
    f, k = batch_response([_as(elem, ENGINEERING)], coords, u)
    return ElementResponse(f[0], k[0])


def response_green(elem: TrussElement, coords, u) -> ElementResponse:
    f, k = batch_response([_as(elem, GREEN)], coords, u)
    return ElementResponse(f[0], k[0])


def _as(elem, strain):
    if elem.strain == strain:
        return elem
    return TrussElement(elem.nodes, elem.A, elem.E, strain)


def strains(coords, u) -> tuple[float, float]:
    """Engineering and Green-Lagrange strain for the same kinematics."""
    L0, L, _ = _kinematics(coords, u)
    L0, L = float(L0[0]), float(L[0])
    return (L - L0) / L0, (L * L - L0 * L0) / (2.0 * L0 * L0)
