"""Element formulations: nonlinear space truss and planar Reissner beam."""
from .base import ElementResponse, ElementDomainError, ZeroLengthError
from .truss import TrussElement, lengths, response_engineering, response_green
from .beam2d import Beam2DElement, response_beam, normalize_arch_outputs

__all__ = [
    "ElementResponse",
    "ElementDomainError",
    "ZeroLengthError",
    "TrussElement",
    "lengths",
    "response_engineering",
    "response_green",
    "Beam2DElement",
    "response_beam",
    "normalize_arch_outputs",
]
