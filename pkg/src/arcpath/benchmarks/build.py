"""Geometry generators for the bundled benchmark models.

The committed ``*.toml`` files under ``data/`` are produced by
``python -m arcpath.benchmarks.build``; the bench command only reads the files.
"""
from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from ..arclength import SolverConfig, first_step
from ..elements import Beam2DElement, TrussElement
from ..model import Model
from ..modelio import write_model

DATA = Path(__file__).with_name("data")

PLANAR_TRUSS_E1 = (10.0, 2.0, 0.75, 0.5)

# overall length scale of the 12-bar dome; see calibrate_spacetruss_scale
SPACETRUSS_SCALE = 0.16009


def planar_truss(E1: float) -> tuple[Model, SolverConfig]:
    """Shallow two-bar truss whose apex (node 1) carries a hanging bar 1-2.

    The inclined bars are 3-4-5 triangles of unit length (E = A = 1); the
    vertical bar 1-2 has unit length and modulus ``E1``.  Node 2 is pulled
    down.  Both free nodes move vertically only.
    """
    coords = [(-0.6, 0.0, 0.0), (0.0, 0.8, 0.0), (0.0, -0.2, 0.0), (0.6, 0.0, 0.0)]
    elements = [
        TrussElement((0, 1), A=1.0, E=1.0, strain="engineering"),
        TrussElement((1, 2), A=1.0, E=E1, strain="engineering"),
        TrussElement((3, 1), A=1.0, E=1.0, strain="engineering"),
    ]
    supports = [(0, ("ux", "uy", "uz")), (3, ("ux", "uy", "uz")), (1, ("ux", "uz")), (2, ("ux", "uz"))]
    model = Model.build(
        coords, elements, supports, loads=[(2, "uy", -1.0)],
        monitors=[(1, "uy"), (2, "uy")], title=f"3-member planar truss, E1 = {E1:g}",
    )
    return model, SolverConfig(dlambda=0.05, max_steps=50)


def spacetruss(scale: float = SPACETRUSS_SCALE) -> tuple[Model, SolverConfig]:
    """12-bar triangulated dome: 3 supports, a 3-node ring and an apex.

    Supports sit on radius ``3 s`` at z = 0, the ring nodes on radius ``s``
    at height ``2 s`` (rotated by 60 degrees), the apex at ``2.5 s``.  Each
    ring node is tied to its two nearest supports, to the other ring nodes
    and to the apex.  Ring node 3 carries a downward point load.
    """
    deg = math.radians
    sup = [(3 * scale * math.cos(deg(90 + 120 * k)), 3 * scale * math.sin(deg(90 + 120 * k)), 0.0) for k in range(3)]
    ring = [(scale * math.cos(deg(30 + 120 * k)), scale * math.sin(deg(30 + 120 * k)), 2 * scale) for k in range(3)]
    coords = sup + ring + [(0.0, 0.0, 2.5 * scale)]
    elements = []
    for k in range(3):
        r = 3 + k
        elements += [
            TrussElement((k, r), A=1.0, E=1.0, strain="green"),
            TrussElement(((k + 1) % 3, r), A=1.0, E=1.0, strain="green"),
            TrussElement((r, 3 + (k + 1) % 3), A=1.0, E=1.0, strain="green"),
            TrussElement((r, 6), A=1.0, E=1.0, strain="green"),
        ]
    model = Model.build(
        coords, elements, supports=[(k, ("ux", "uy", "uz")) for k in range(3)],
        loads=[(3, "uz", -1.0)], monitors=[(3, "ux"), (3, "uy"), (3, "uz")],
        title="12-member space truss",
    )
    return model, SolverConfig(dlambda=0.025, max_steps=100)


def calibrate_spacetruss_scale(target: float = 0.10636) -> float:
    """Length scale at which the first load step spans the arc length ``target``."""
    from scipy.optimize import brentq

    def gap(s):
        model, config = spacetruss(s)
        return first_step(model, config)[2] - target

    return brentq(gap, 0.1, 0.3, xtol=1e-12)


def lee_frame() -> tuple[Model, SolverConfig]:
    """120 x 120 cm L-frame, pinned at both ends, 10 elements per member.

    The unit load acts downward on the beam 24 cm from the corner.
    """
    n = 10
    coords = [(0.0, 120.0 * i / n) for i in range(n + 1)]
    coords += [(120.0 * i / n, 120.0) for i in range(1, n + 1)]
    elements = [Beam2DElement((i, i + 1), A=6.0, I=2.0, E=720.0, nu=0.3, kappa=1.0) for i in range(2 * n)]
    load = n + 2
    model = Model.build(
        coords, elements, supports=[(0, ("ux", "uy")), (2 * n, ("ux", "uy"))],
        loads=[(load, "uy", -1.0)], monitors=[(load, "ux"), (load, "uy")],
        title="Lee frame",
    )
    return model, SolverConfig(dlambda=0.5, max_steps=50)


def _circular_arch(R, opening, n_el):
    phi = np.linspace(-opening / 2, opening / 2, n_el + 1)
    return np.column_stack([R * np.sin(phi), R * np.cos(phi)])


def arch215() -> tuple[Model, SolverConfig]:
    """215 degree arch, R = 100, hinged on the left and clamped on the right,
    60 elements, unit load at the crown."""
    n = 60
    coords = _circular_arch(100.0, math.radians(215.0), n)
    elements = [Beam2DElement((i, i + 1), A=2.29, I=1.0, E=1.0e6, nu=0.0, kappa=1.0) for i in range(n)]
    crown = n // 2
    model = Model.build(
        coords, elements, supports=[(0, ("ux", "uy")), (n, ("ux", "uy", "rz"))],
        loads=[(crown, "uy", -1.0)], monitors=[(crown, "ux"), (crown, "uy")],
        title="hinged-clamped 215 degree arch",
    )
    return model, SolverConfig(dlambda=50.0, max_steps=120)


def arch_semicircle(offset_nodes: int = 0) -> tuple[Model, SolverConfig]:
    """Semicircular arch, R = 127 cm, hinged at both ends, 50 elements.

    The node spacing is pi/50, so ``offset_nodes=1`` places the load at the
    pi/50 offset angle.
    """
    n = 50
    coords = _circular_arch(127.0, math.pi, n)
    elements = [Beam2DElement((i, i + 1), A=64.52, I=41.62, E=0.1378, nu=0.5, kappa=1.0) for i in range(n)]
    node = n // 2 + offset_nodes
    kind = "symmetric" if offset_nodes == 0 else "asymmetric"
    model = Model.build(
        coords, elements, supports=[(0, ("ux", "uy")), (n, ("ux", "uy"))],
        loads=[(node, "uy", -1.0)], monitors=[(node, "ux"), (node, "uy")],
        title=f"semicircular hinged arch, {kind} loading",
    )
    return model, SolverConfig(dlambda=1.0e-3, max_steps=400 if offset_nodes == 0 else 600)


def all_models() -> dict[str, tuple[Model, SolverConfig]]:
    models = {}
    for E1 in PLANAR_TRUSS_E1:
        models[f"planartruss3_E1_{E1:g}".replace(".", "p")] = planar_truss(E1)
    models["spacetruss12"] = spacetruss()
    models["leeframe"] = lee_frame()
    models["arch215"] = arch215()
    models["archsemicircle_symmetric"] = arch_semicircle(0)
    models["archsemicircle_asymmetric"] = arch_semicircle(1)
    return models


def main():
    DATA.mkdir(exist_ok=True)
    for name, (model, config) in all_models().items():
        (DATA / f"{name}.toml").write_text(write_model(model, config), encoding="utf-8")
        print(f"wrote {name}.toml")


if __name__ == "__main__":
    main()
