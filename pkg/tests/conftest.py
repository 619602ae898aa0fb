"""Shared test configuration.

The acceptance module names its tests ``test_criterion_<n>_...``; after
the run, one line per criterion is printed so the gate can be read off
directly from the terminal summary.
"""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)[a-z]?_([a-z0-9_]+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error", "xfailed", "xpassed",
                   "skipped"):
        for report in terminalreporter.stats.get(status, []):
            if getattr(report, "when", "call") != "call" and \
                    status not in ("error",):
                continue
            m = _CRITERION.search(report.nodeid)
            if not m:
                continue
            key = int(m.group(1))
            label = m.group(2).replace("_", " ")
            outcomes.setdefault(key, []).append((label, status))
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num, entries in sorted(outcomes.items()):
        statuses = {s for _, s in entries}
        if statuses <= {"passed"}:
            verdict = "PASS"
        elif statuses <= {"passed", "xfailed"}:
            verdict = "PASS (documented defect xfailed)"
        elif "skipped" in statuses and statuses <= {"passed", "skipped"}:
            verdict = "SKIPPED (slow-marked part deselected)"
        else:
            verdict = "FAIL"
        label = entries[0][0]
        terminalreporter.write_line(
            f"criterion {num}: {verdict} - {label}"
        )
