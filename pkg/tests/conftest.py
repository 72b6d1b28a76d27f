ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, ok, elapsed, detail in sorted(ACCEPTANCE, key=lambda r: int(r[0][1:])):
        terminalreporter.write_line(f"{crit:<4} {'PASS' if ok else 'FAIL'}  {elapsed:6.2f}s  {detail}")
