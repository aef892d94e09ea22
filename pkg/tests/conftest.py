import itertools

import pytest

ACCEPTANCE_LINES: list[str] = []


def brute_odd_subset(rows, dim):
    """First odd-size subset (by size, then lexicographic) of rows XOR-ing to zero, or None."""
    for size in range(1, len(rows) + 1, 2):
        for combo in itertools.combinations(range(len(rows)), size):
            acc = [0] * dim
            for i in combo:
                acc = [a ^ b for a, b in zip(acc, rows[i])]
            if not any(acc):
                return combo
    return None


def brute_rank(rows, dim):
    """GF(2) rank as log2 of the size of the span, by enumerating all subset sums."""
    span = set()
    for mask in range(1 << len(rows)):
        acc = (0,) * dim
        for i, r in enumerate(rows):
            if (mask >> i) & 1:
                acc = tuple(a ^ b for a, b in zip(acc, r))
        span.add(acc)
    return len(span).bit_length() - 1


@pytest.fixture
def acceptance():
    def record(number, name, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {name}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
