import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(results):
        passed, detail = results[criterion]
        line = f"{'PASS' if passed else 'FAIL'} criterion {criterion:2d}: {mod.TITLES[criterion]}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
