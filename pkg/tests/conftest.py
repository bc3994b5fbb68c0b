import pytest

from subnorm import catalog
from subnorm.families import FamilySpec


_RECORDED: list[str] = []


def record(line: str) -> None:
    """Print a line now and again in the terminal summary."""
    print(line)
    _RECORDED.append(line)


def pytest_terminal_summary(terminalreporter):
    if _RECORDED:
        terminalreporter.section("acceptance")
        for line in _RECORDED:
            terminalreporter.write_line(line)


def get(text: str):
    return catalog.lookup(text)


def el(G, cycles: str) -> int:
    return G.find(cycles)


@pytest.fixture(scope="session")
def S3():
    return get("S3")


@pytest.fixture(scope="session")
def S4():
    return get("S4")


@pytest.fixture(scope="session")
def PSL25():
    return get("psl2:5")


@pytest.fixture(scope="session")
def galois2():
    return catalog.get(FamilySpec("galois", (2,)))


@pytest.fixture(scope="session")
def full_catalog():
    return catalog.default_catalog()


@pytest.fixture(scope="session")
def small_catalog(full_catalog):
    return [G for G in full_catalog if G.order <= 120]
