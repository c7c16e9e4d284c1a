"""Define and solve a problem outside the two built-ins.

Builds a weakly coupled system on [0, 4] directly from ProblemSpec (the
same flat parameter set the CLI accepts as JSON), runs it, and prints the
peak of each species over time.
"""

import numpy as np

from rdgalerkin.basis import BasisSpec
from rdgalerkin.norms import evaluate, sample_grid
from rdgalerkin.problems import ProblemSpec, ReactionForm, sine_power_profile
from rdgalerkin.stepper import SolverConfig, run

problem = ProblemSpec(
    lower=0.0, upper=4.0,
    eps1=0.05, eps2=0.05,
    theta0=0.0, gamma0=1.0,
    reaction=ReactionForm(alpha=2, beta=1),
    sign_M=+1, sign_N=-1,
    decay_M=0.05, decay_N=0.05,
    source_M=0.0, source_N=0.05,
    initial_M=sine_power_profile(0.2, 2, 0.0, 4.0, 0.0),
    initial_N=sine_power_profile(-0.3, 2, 0.0, 4.0, 1.0),
)

if __name__ == "__main__":
    basis = BasisSpec(problem.lower, problem.upper, 6)
    states = run(problem, basis, SolverConfig(dt=0.1, t_end=5.0))
    xs = sample_grid(problem, 201)
    print(f"{'t':>5} {'max M':>10} {'min N':>10} {'picard iters':>13}")
    for state in states[::10]:
        M, N = evaluate(state, problem, basis, xs)
        print(
            f"{state.t:>5.1f} {M.max():>10.5f} {N.min():>10.5f} "
            f"{state.picard_iters_last:>13d}"
        )
