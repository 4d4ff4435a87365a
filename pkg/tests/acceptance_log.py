"""Shared store for acceptance lines, printed again in the terminal summary."""

LINES = []


def record_acceptance(criterion: int, passed: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}  {detail}"
    LINES.append((criterion, line))
    print(line)
