"""Shared pytest plumbing: the acceptance-criterion summary lines.

Each acceptance test registers exactly one line; they are replayed in a
dedicated section at the end of the run so the per-criterion verdicts are
visible without digging through captured output.
"""

_LINES = []


def record_criterion(code: str, description: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"{code} {status}  {description}"
    if detail and not ok:
        line += f"  [{detail}]"
    _LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES):
            terminalreporter.write_line(line)
