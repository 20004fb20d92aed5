import pytest


def parity_prefix(n: int) -> str:
    """Thue-Morse prefix built from binary digit parity, independent of the library."""
    return "".join("a" if bin(i).count("1") % 2 == 0 else "b" for i in range(n))


def naive_has_overlap(w: str) -> bool:
    n = len(w)
    for i in range(n):
        for p in range(1, (n - i - 1) // 2 + 1):
            f = w[i:i + 2 * p + 1]
            if all(f[k] == f[k + p] for k in range(p + 1)):
                return True
    return False


def naive_has_cube(w: str) -> bool:
    n = len(w)
    for i in range(n):
        for p in range(1, (n - i) // 3 + 1):
            u = w[i:i + p]
            if w[i:i + 3 * p] == u * 3:
                return True
    return False


@pytest.fixture(scope="session")
def t_parity_2_15() -> str:
    return parity_prefix(1 << 15)


# (criterion number, one-line outcome) collected by test_acceptance.py
ACCEPTANCE_LINES: list[tuple[int, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
