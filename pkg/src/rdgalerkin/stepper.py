"""Implicit time marching of the coupled coefficient system.

Each step solves the theta-weighted block system

    C (c_new - c_prev)/dt + th * (K1 c_new + K2 d_new - F1)
                          + (1 - th) * (K1 c_prev + K2' d_prev - F1') = 0

(and its mirror for d), where K2, F1 are assembled at the current Picard
iterate and the primed blocks at the previous time level's converged
state.  th = 1 is plain backward difference (the default); th = 0.5 is the
trapezoidal member of the family and is genuinely second order in time
because the nonlinear blocks are weighted between the two time levels.
C, K1, K4 are iterate-independent and assembled once per run.
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from . import assembly, quadrature
from .linalg import BlockSystem, condition_estimate, lu_solve
from .problems import picard_split

log = logging.getLogger(__name__)

_DIVERGENCE_GUARD = 1e6
_INITIAL_RULE_BOOST = 3


class PicardConvergenceError(RuntimeError):
    """Inner fixed-point loop failed to converge within the iteration cap."""

    def __init__(self, iterations, last_correction):
        self.iterations = iterations
        self.last_correction = last_correction
        super().__init__(
            f"Picard iteration did not converge after {iterations} passes "
            f"(last correction {last_correction:.3e})"
        )


@dataclass(frozen=True)
class SolverConfig:
    dt: float
    t_end: float
    degree: int = 6
    theta: float = 1.0
    picard_tol: float = 1e-10
    picard_max: int = 50
    quad_points: Optional[int] = None

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.t_end < 0:
            raise ValueError("t_end must be non-negative")
        if not 0.0 < self.theta <= 1.0:
            raise ValueError("theta must lie in (0, 1]")
        if self.picard_tol <= 0 or self.picard_max < 1:
            raise ValueError("picard_tol must be > 0 and picard_max >= 1")
        steps = self.t_end / self.dt
        if abs(steps - round(steps)) > 1e-9 * max(1.0, steps):
            raise ValueError(
                f"t_end ({self.t_end}) must be an integer multiple of dt ({self.dt})"
            )

    @property
    def step_count(self):
        return int(round(self.t_end / self.dt))

    def resolve_quad_points(self):
        return (
            self.quad_points
            if self.quad_points is not None
            else quadrature.default_point_count(self.degree)
        )


@dataclass(frozen=True)
class CoefficientState:
    """Coefficient vectors for both species at one time level."""

    c: np.ndarray
    d: np.ndarray
    t: float
    picard_iters_last: int = 0


@dataclass(frozen=True)
class _StaticParts:
    """Iterate-independent pieces, assembled once per trajectory."""

    rule: quadrature.QuadratureRule
    C: np.ndarray
    K1: np.ndarray
    K4: np.ndarray


def _build_static(problem, basis, config):
    rule = quadrature.gauss_legendre(
        config.resolve_quad_points(), basis.lower, basis.upper
    )
    C = assembly.assemble_mass(basis, rule)
    K1 = assembly.assemble_stiffness(basis, rule, problem.eps1, problem.decay_M)
    K4 = assembly.assemble_stiffness(basis, rule, problem.eps2, problem.decay_N)
    return _StaticParts(rule=rule, C=C, K1=K1, K4=K4)


def _nonlinear_blocks(problem, basis, rule, c_at, d_at):
    """Iterate-dependent blocks (K2, K3, F1, F2) at one coefficient state."""
    split = picard_split(problem, basis, c_at, d_at)
    K2 = assembly.assemble_coupling(
        basis, rule, lambda x: -problem.sign_M * split.omega(x)
    )
    K3 = assembly.assemble_coupling(
        basis, rule, lambda x: -problem.sign_N * split.phi(x)
    )
    F1, F2 = assembly.assemble_loads(problem, basis, rule, split)
    return K2, K3, F1, F2


def _block(problem, basis, static, config, c_prev, d_prev, c_it, d_it, old_blocks):
    """Assemble the coupled theta-weighted system at one Picard iterate."""
    K2, K3, F1, F2 = _nonlinear_blocks(problem, basis, static.rule, c_it, d_it)

    n = basis.size
    th = config.theta
    Cdt = static.C / config.dt
    A = np.zeros((2 * n, 2 * n))
    A[:n, :n] = Cdt + th * static.K1
    A[:n, n:] = th * K2
    A[n:, :n] = th * K3
    A[n:, n:] = Cdt + th * static.K4
    rhs_c = Cdt @ c_prev + th * F1
    rhs_d = Cdt @ d_prev + th * F2
    if th < 1.0:
        K2o, K3o, F1o, F2o = old_blocks
        rhs_c -= (1 - th) * (static.K1 @ c_prev + K2o @ d_prev - F1o)
        rhs_d -= (1 - th) * (K3o @ c_prev + static.K4 @ d_prev - F2o)
    return BlockSystem(matrix=A, rhs=np.concatenate([rhs_c, rhs_d]))


def step(state, problem, basis, config, static=None):
    """Advance one time increment, iterating Picard to tolerance."""
    if static is None:
        static = _build_static(problem, basis, config)
    n = basis.size
    if state.c.shape != (n,) or state.d.shape != (n,):
        raise ValueError("state inconsistent with basis degree")

    c_prev, d_prev = state.c, state.d
    old_blocks = (
        _nonlinear_blocks(problem, basis, static.rule, c_prev, d_prev)
        if config.theta < 1.0
        else None
    )
    c_it, d_it = c_prev.copy(), d_prev.copy()
    for k in range(1, config.picard_max + 1):
        system = _block(
            problem, basis, static, config, c_prev, d_prev, c_it, d_it, old_blocks
        )
        sol = lu_solve(system)
        c_new, d_new = sol[:n], sol[n:]
        correction = max(
            np.abs(c_new - c_it).max(initial=0.0),
            np.abs(d_new - d_it).max(initial=0.0),
        )
        c_it, d_it = c_new, d_new
        if correction < config.picard_tol:
            return CoefficientState(
                c=c_it, d=d_it, t=state.t + config.dt, picard_iters_last=k
            )
        if correction > _DIVERGENCE_GUARD:
            raise PicardConvergenceError(k, correction)
    raise PicardConvergenceError(config.picard_max, correction)


def initial_state(problem, basis, config):
    """Galerkin projection of the initial data onto the basis."""
    boosted = quadrature.gauss_legendre(
        _INITIAL_RULE_BOOST * config.resolve_quad_points(),
        basis.lower,
        basis.upper,
    )
    c0, d0 = assembly.project_initial(problem, basis, boosted)
    return CoefficientState(c=c0, d=d0, t=0.0)


def run(problem, basis, config):
    """Full trajectory: projected initial state plus one state per step."""
    static = _build_static(problem, basis, config)
    cond = condition_estimate(
        np.block([
            [static.C / config.dt + static.K1, np.zeros_like(static.C)],
            [np.zeros_like(static.C), static.C / config.dt + static.K4],
        ])
    )
    log.debug("diagonal block condition estimate %.2e", cond)
    states = [initial_state(problem, basis, config)]
    for _ in range(config.step_count):
        states.append(step(states[-1], problem, basis, config, static=static))
    return states
