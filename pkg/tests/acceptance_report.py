"""One PASS/FAIL line per acceptance criterion, collected across the run."""

REPORT: list[str] = []


def report(number: int, ok: bool, detail: str) -> str:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    REPORT.append(line)
    return line
