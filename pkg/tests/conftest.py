import pytest

from primefrob.primes import build_table


@pytest.fixture(scope="session")
def table_small():
    return build_table(2_000)


@pytest.fixture(scope="session")
def table_100k():
    return build_table(100_000)


@pytest.fixture(scope="session")
def table_figure():
    # reaches 3 * 48623 for the staircase scans
    return build_table(3 * 48623 + 10)


@pytest.fixture(scope="session")
def table_wilf():
    # reaches 2 * p_1500 = 25106 for the large-n bound checks
    return build_table(28_000)


@pytest.fixture(scope="session")
def table_1m():
    return build_table(1_000_000)
