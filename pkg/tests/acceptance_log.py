"""One result line per acceptance criterion, shared with conftest."""

BUDGET = 10
LINES = {}


def record(number, ok, detail, seconds):
    status = "PASS" if ok else "FAIL"
    if seconds > BUDGET:
        detail += f"; runtime over the {BUDGET} s budget"
    LINES[number] = f"criterion {number}: {status}  {detail}  [{seconds:.1f} s]"
    print(LINES[number])
