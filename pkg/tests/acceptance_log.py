"""Shared record of acceptance outcomes, printed at the end of the run."""

# criterion number -> (passed, detail, seconds)
RESULTS: dict[int, tuple[bool, str, float]] = {}


def record(number: int, ok: bool, detail: str, elapsed: float) -> None:
    prev = RESULTS.get(number)
    if prev is not None:
        ok = ok and prev[0]
        detail = f"{prev[1]}; {detail}"
        elapsed += prev[2]
    RESULTS[number] = (ok, detail, elapsed)
    print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {detail}")
