import sys
import time

SUITE_BUDGET_S = 60.0
_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # runtime half of the determinism criterion: the whole suite fits the budget
    acceptance = sys.modules.get("test_acceptance")
    for line in getattr(acceptance, "REPORT_LINES", ()):
        terminalreporter.write_line(line)
    elapsed = time.perf_counter() - _start
    verdict = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
    terminalreporter.write_line(
        f"[{verdict}] suite runtime {elapsed:.1f}s < {SUITE_BUDGET_S:.0f}s")


def pytest_sessionfinish(session, exitstatus):
    if exitstatus == 0 and time.perf_counter() - _start >= SUITE_BUDGET_S:
        session.exitstatus = 1
