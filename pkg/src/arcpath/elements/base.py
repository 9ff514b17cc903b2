from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ElementDomainError(ArithmeticError):
    """Element kinematics left the admissible domain (e.g. collapsed bar)."""


class ZeroLengthError(ElementDomainError):
    pass


@dataclass(frozen=True)
class ElementResponse:
    """Internal force vector and tangent stiffness of one element."""

    force: np.ndarray
    stiffness: np.ndarray
