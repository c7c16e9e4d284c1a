"""Assembly of the dense Galerkin matrices and load vectors.

For trial solutions M = theta0 + sum_j c_j B_j and N = gamma0 + sum_j d_j B_j
the weighted-residual equations reduce, per species, to

    C dc/dt + K_diff c + K_couple d = F

with C the mass ("forced") matrix, K_diff the diffusion-plus-decay
stiffness block, K_couple the iterate-weighted cross-coupling block, and F
the load vector.  All blocks are (m+1) x (m+1) dense; at the degrees this
package targets (m <= ~10) no sparsity machinery is warranted.

The integration-by-parts boundary bracket eps * [B_j' B_i] would enter the
stiffness block, but every basis member vanishes at the endpoints; the
bracket is still computed and asserted negligible as a cheap self-check on
the basis.
"""

from dataclasses import dataclass

import numpy as np

from . import basis as basis_mod
from .linalg import lu_solve


@dataclass(frozen=True)
class SystemMatrices:
    """All blocks of one Picard iterate's coupled linear system."""

    C1: np.ndarray
    C2: np.ndarray
    K1: np.ndarray
    K2: np.ndarray
    K3: np.ndarray
    K4: np.ndarray
    F1: np.ndarray
    F2: np.ndarray


def _tables(spec, rule):
    B = basis_mod.value_matrix(spec, rule.nodes)
    dB = basis_mod.derivative_matrix(spec, rule.nodes)
    return B, dB


def assemble_mass(spec, rule):
    """Pairwise basis-product integrals, symmetrized."""
    B, _ = _tables(spec, rule)
    M = (B * rule.weights) @ B.T
    return 0.5 * (M + M.T)


def assemble_stiffness(spec, rule, eps, decay):
    """eps * derivative products + decay * mass - eps * endpoint bracket.

    The bracket is analytically zero (basis members vanish at the
    endpoints); it is evaluated anyway and asserted tiny.
    """
    B, dB = _tables(spec, rule)
    K = eps * (dB * rule.weights) @ dB.T + decay * assemble_mass(spec, rule)
    bracket = _endpoint_bracket(spec)
    scale = max(np.abs(K).max(), 1.0)
    assert np.abs(bracket).max() <= 1e-12 * scale, "basis endpoint bracket not zero"
    return K - eps * bracket


def _endpoint_bracket(spec):
    """[B_j'(x) B_i(x)] evaluated upper minus lower, shape (size, size)."""
    out = np.zeros((spec.size, spec.size))
    for edge, sign in ((spec.upper, 1.0), (spec.lower, -1.0)):
        Bi = np.array([basis_mod.value(spec, i, edge) for i in range(spec.size)])
        dBj = np.array([basis_mod.derivative(spec, j, edge) for j in range(spec.size)])
        out += sign * np.outer(Bi, dBj)
    return out


def assemble_coupling(spec, rule, weight_fn):
    """Weighted mass matrix with the iterate-dependent weight.

    ``weight_fn`` must already carry the equation's reaction sign, i.e. it
    is -sign_M * omega for the M-equation block and -sign_N * phi for the
    N-equation block.
    """
    B, _ = _tables(spec, rule)
    w = rule.weights * np.asarray(weight_fn(rule.nodes), dtype=float)
    K = (B * w) @ B.T
    return 0.5 * (K + K.T)


def assemble_loads(problem, spec, rule, split):
    """Load vectors for both species at one Picard iterate.

    F1 = sign_M * int(Gamma B_i) + (source_M - decay_M * theta0) * int(B_i)
    F2 = sign_N * int(Pi B_i)    + (source_N - decay_N * gamma0) * int(B_i)
    """
    B, _ = _tables(spec, rule)
    b_int = B @ rule.weights
    F1 = problem.sign_M * (B @ (rule.weights * split.gamma(rule.nodes)))
    F1 = F1 + (problem.source_M - problem.decay_M * problem.theta0) * b_int
    F2 = problem.sign_N * (B @ (rule.weights * split.pi(rule.nodes)))
    F2 = F2 + (problem.source_N - problem.decay_N * problem.gamma0) * b_int
    return F1, F2


def project_initial(problem, spec, rule):
    """Least-squares (Galerkin) projection of the initial data.

    Solves  C c0 = int (M0 - theta0) B_i  and the analogous system for d0.
    The caller supplies the rule; non-polynomial initial data (sin^100)
    needs a boosted point count.
    """
    B, _ = _tables(spec, rule)
    C = assemble_mass(spec, rule)
    rhs_c = B @ (rule.weights * (problem.initial_M(rule.nodes) - problem.theta0))
    rhs_d = B @ (rule.weights * (problem.initial_N(rule.nodes) - problem.gamma0))
    c0 = lu_solve(C, rhs_c)
    d0 = lu_solve(C, rhs_d)
    return c0, d0
