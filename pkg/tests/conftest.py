from math import gcd

from hypothesis import strategies as st

from leafatlas.charges import Charge


def coprime_pairs(max_n: int, min_n: int = 2) -> list[tuple[int, int]]:
    return [(k, n) for n in range(min_n, max_n + 1) for k in range(1, n) if gcd(k, n) == 1]


def charges(min_rank: int = 1, max_rank: int = 50, max_abs_degree: int = 200):
    return st.builds(
        Charge,
        st.integers(min_rank, max_rank),
        st.integers(-max_abs_degree, max_abs_degree),
    )


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
