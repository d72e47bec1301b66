"""Collects one PASS/FAIL line per acceptance criterion for the summary."""

LOG: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> str:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    LOG.append(line)
    print(line)
    return line
