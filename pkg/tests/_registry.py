"""Outcome registry for the acceptance criteria, printed at the end of the run."""
from __future__ import annotations

RESULTS: dict = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(line(n))


def line(n: int) -> str:
    ok, detail = RESULTS[n]
    return f"CRITERION {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


def lines() -> list:
    return [line(n) for n in sorted(RESULTS)]
