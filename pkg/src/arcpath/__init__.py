"""Arc-length continuation with an extrapolated predictor for truss and
planar beam models."""
from .arclength import (
    EquilibriumPath,
    NonConvergenceError,
    SolverConfig,
    StallAtMinimumStep,
    ZeroDenominatorError,
    run,
    schur_solve,
)
from .elements import Beam2DElement, TrussElement
from .model import Model, ModelError, assemble, residual
from .modelio import ParseError, ValidationError, load_model, parse_model, write_deformed_shape, write_path

__version__ = "0.1.0"

__all__ = [
    "Beam2DElement",
    "EquilibriumPath",
    "Model",
    "ModelError",
    "NonConvergenceError",
    "ParseError",
    "SolverConfig",
    "StallAtMinimumStep",
    "TrussElement",
    "ValidationError",
    "ZeroDenominatorError",
    "assemble",
    "load_model",
    "parse_model",
    "residual",
    "run",
    "schur_solve",
    "write_deformed_shape",
    "write_path",
]
