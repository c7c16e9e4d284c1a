"""Reproduce the benchmark tables for both built-in problems.

Runs each problem at its table configuration (degree 6, dt = 0.1,
backward difference) and prints the sampled fields next to the stored
golden values, with a per-entry verdict. Expect the coupled parabolic
tables to check out and the Gray-Scott late-time rows to disagree; see
docs/benchmark-discrepancies.md for the analysis.
"""

from rdgalerkin import builtin_grayscott, builtin_tp1
from rdgalerkin.goldens import run_problem_goldens


def show(problem_id, problem):
    report = run_problem_goldens(problem_id, problem)
    print(f"\n=== {problem_id}: {len(report.verdicts)} golden entries ===")
    print(f"{'species':>7} {'x':>7} {'t':>5} {'stored':>12} {'computed':>12} verdict")
    for v in report.verdicts:
        e = v.entry
        tag = "ok" if v.passed else "FAIL"
        if v.via_mirror:
            tag = "ok (via mirror partner; printed value is a typo)"
        print(
            f"{e.species:>7} {e.x:>7.1f} {e.t:>5.0f} "
            f"{e.value:>12.5f} {v.computed:>12.5f}  {tag}"
        )
    print(
        f"summary: {len(report.failures)} failures, "
        f"worst concordant deviation {report.worst_deviation:.3e}"
    )


if __name__ == "__main__":
    show("tp1", builtin_tp1())
    show("grayscott", builtin_grayscott())
