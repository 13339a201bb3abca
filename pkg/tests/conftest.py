import re

from hypothesis import settings

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call" or "test_acceptance" not in rep.nodeid:
                continue
            m = re.search(r"test_criterion_(\d+)_(\w+)", rep.nodeid)
            if m:
                rows.append((int(m.group(1)), m.group(2).replace("_", " "), outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, outcome in sorted(rows):
        terminalreporter.write_line(f"criterion {num:2d} {'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
