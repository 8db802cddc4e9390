import pytest

from partition_primes.models import ModelContext
from partition_primes.sieve import build_sieve

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def small_table():
    return build_sieve(200_000)


@pytest.fixture(scope="session")
def ctx_1e6():
    """Primes and semiprime counts to 1.2e6, enough for every table checkpoint."""
    return ModelContext.for_model2(10**6)


@pytest.fixture
def criterion():
    """Record a one-line verdict for the acceptance summary."""

    def record(number: int, name: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number:>2}: {name}" + (f" -- {detail}" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
