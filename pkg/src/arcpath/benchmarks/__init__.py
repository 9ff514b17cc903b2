"""Bundled benchmark cases backed by the model files in ``data/``."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..arclength import SolverConfig
from ..model import Model
from ..modelio import parse_model


@dataclass(frozen=True)
class Reference:
    """Reference step, iteration and restart counts for a run."""

    steps: int
    total_iterations: int
    average_iterations: float
    restarts: int


@dataclass(frozen=True)
class Case:
    group: str
    name: str
    reference: Reference
    # R, E, I of circular arches, used to normalize loads and displacements
    arch: tuple[float, float, float] | None = None

    def load(self) -> tuple[Model, SolverConfig]:
        text = resources.files(__package__).joinpath("data", f"{self.name}.toml").read_text(encoding="utf-8")
        return parse_model(text)


_ARCH215 = (100.0, 1.0e6, 1.0)
_SEMICIRCLE = (127.0, 0.1378, 41.62)

CASES: tuple[Case, ...] = (
    Case("planartruss3", "planartruss3_E1_10", Reference(50, 151, 3.00, 0)),
    Case("planartruss3", "planartruss3_E1_2", Reference(50, 148, 2.96, 0)),
    Case("planartruss3", "planartruss3_E1_0p75", Reference(50, 163, 3.26, 0)),
    Case("planartruss3", "planartruss3_E1_0p5", Reference(50, 184, 3.68, 0)),
    Case("spacetruss12", "spacetruss12", Reference(100, 344, 3.44, 0)),
    Case("leeframe", "leeframe", Reference(50, 277, 5.54, 0)),
    Case("arch215", "arch215", Reference(120, 843, 7.03, 16), arch=_ARCH215),
    Case("archsemicircle", "archsemicircle_symmetric", Reference(400, 2320, 5.80, 44), arch=_SEMICIRCLE),
    Case("archsemicircle", "archsemicircle_asymmetric", Reference(600, 4185, 6.98, 152), arch=_SEMICIRCLE),
)

GROUPS: tuple[str, ...] = tuple(dict.fromkeys(c.group for c in CASES))


def select(name: str) -> list[Case]:
    """Cases matching a run name, a group name or ``"all"``."""
    if name == "all":
        return list(CASES)
    found = [c for c in CASES if name in (c.name, c.group)]
    if not found:
        raise KeyError(name)
    return found


def get(name: str) -> Case:
    for c in CASES:
        if c.name == name:
            return c
    raise KeyError(name)
