"""Acceptance criteria 1-10, each checked exactly (tolerance 0).

The full verification matrix runs once per session; each criterion test
then inspects its own slice of the report.  Every test records a single
``PASS``/``FAIL`` line, printed at the end of the pytest run (see
``conftest.py``) and also when this file is executed as a script.
"""
import time

import pytest

from jackpfq.suite import CRITERIA, report_json, run_suite

SEED = 0
FULL_BUDGET = 600.0
SMOKE_BUDGET = 30.0

RESULTS: dict[int, tuple[bool, str]] = {}

TITLES = {
    1: "lowering/raising pair annihilates the two-alphabet series",
    2: "lowering solver, stability residuals and 2x2 determinants",
    3: "raising solver, residuals and the Euler ODE at n=1",
    4: "stability counterexample",
    5: "eigenvalue generating functions vs brute force",
    6: "commutator identities and the Pieri closed form",
    7: "special series 0F0, 1F0 and the Cauchy product",
    8: "Jack orthogonality, evaluation, stability and Schur case",
    9: "2F1-hat solvers and residuals",
    10: "suite timing, determinism and fault detection",
}


def record(criterion: int, passed: bool, detail: str = "") -> None:
    RESULTS[criterion] = (passed, detail)
    line = f"{'PASS' if passed else 'FAIL'} criterion {criterion:2d}: {TITLES[criterion]}"
    if detail:
        line += f" ({detail})"
    print(line)


@pytest.fixture(scope="module")
def full_run():
    t0 = time.perf_counter()
    report = run_suite("full", seed=SEED)
    return report, time.perf_counter() - t0


@pytest.mark.parametrize("criterion", sorted(CRITERIA))
def test_criterion(full_run, criterion):
    report, _ = full_run
    checks = [c for c in report["checks"] if c["criterion"] == criterion]
    bad = [c for c in checks if not c["passed"]]
    detail = f"{len(checks) - len(bad)}/{len(checks)} checks"
    if bad:
        detail += f", first failure {bad[0]['key']}: {bad[0]['detail']}"
    record(criterion, bool(checks) and not bad, detail)
    assert checks, "criterion produced no checks"
    assert not bad, detail


def test_criterion_10(full_run):
    report, full_time = full_run

    t0 = time.perf_counter()
    smoke = run_suite("smoke", seed=SEED)
    smoke_time = time.perf_counter() - t0
    smoke_again = run_suite("smoke", seed=SEED)

    full_again = run_suite("full", seed=SEED)

    faulty = run_suite("smoke", seed=SEED, fault="binom")

    ok = {
        "full passes": report["failures"] == 0,
        "full in budget": full_time < FULL_BUDGET,
        "smoke passes": smoke["failures"] == 0,
        "smoke in budget": smoke_time < SMOKE_BUDGET,
        "smoke deterministic": report_json(smoke) == report_json(smoke_again),
        "full deterministic": report_json(report) == report_json(full_again),
        "fault detected": faulty["failures"] > 0 and faulty["first_failure"] is not None,
    }
    detail = f"full {full_time:.1f}s, smoke {smoke_time:.1f}s"
    missed = [k for k, v in ok.items() if not v]
    if missed:
        detail += ", failed: " + ", ".join(missed)
    record(10, not missed, detail)
    assert not missed, detail


if __name__ == "__main__":
    t0 = time.perf_counter()
    rep = run_suite("full", seed=SEED)
    elapsed = time.perf_counter() - t0
    for crit in sorted(CRITERIA):
        test_criterion((rep, elapsed), crit)
    test_criterion_10((rep, elapsed))
