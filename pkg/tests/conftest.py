import re

CRITERIA = {
    1: "Jacobi identity on every basis triple",
    2: "cascade properties and type-A closed form, rank <= 5",
    3: "eps_K +- eps_L never a root for common cascade members",
    4: "cascade evaluation on common coroots has full rank",
    5: "A5 counterexample to the independence condition",
    6: "Borel slice pipeline",
    7: "A5 minimal parabolics: one exception at i = 3",
    8: "sampled index equals slice dimension",
    9: "structure identities, exhaustive and random",
    10: "byte-identical CLI JSON",
}

_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")
_failed: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    m = _ACCEPTANCE.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    bad = report.failed or (report.when == "call" and report.skipped)
    _failed[num] = _failed.get(num, False) or bad


def pytest_terminal_summary(terminalreporter):
    if not _failed:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        status = "NOT RUN" if num not in _failed else ("FAIL" if _failed[num] else "PASS")
        terminalreporter.write_line(f"criterion {num:2d}: {status:7s} {CRITERIA[num]}")
