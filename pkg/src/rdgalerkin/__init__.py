"""Galerkin weighted-residual solver for coupled reaction-diffusion systems.

Trial solutions are expansions in an endpoint-vanishing Bernstein-type
polynomial basis; time integration is backward difference with an inner
Picard loop on the nonlinear coupling.
"""

from .basis import BasisSpec
from .norms import FieldSample, NormReport, evaluate, self_convergence, table_emit
from .problems import (
    PicardSplit,
    ProblemSpec,
    ReactionForm,
    builtin_grayscott,
    builtin_tp1,
    picard_split,
)
from .quadrature import QuadratureRule, gauss_legendre, integrate
from .stepper import CoefficientState, PicardConvergenceError, SolverConfig, run, step

__all__ = [
    "BasisSpec",
    "CoefficientState",
    "FieldSample",
    "NormReport",
    "PicardConvergenceError",
    "PicardSplit",
    "ProblemSpec",
    "QuadratureRule",
    "ReactionForm",
    "SolverConfig",
    "builtin_grayscott",
    "builtin_tp1",
    "evaluate",
    "gauss_legendre",
    "integrate",
    "picard_split",
    "run",
    "self_convergence",
    "step",
    "table_emit",
]

__version__ = "0.1.0"
