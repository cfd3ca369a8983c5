import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from aglab.tableio import FIXTURE_NAMES, load_fixture  # noqa: E402

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

DEFAULT_SEED = 20240607


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for randomized permutation and inflation tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


@pytest.fixture(scope="session")
def fx():
    return {name: load_fixture(name) for name in FIXTURE_NAMES}


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, elapsed, note = ACCEPTANCE[key]
        terminalreporter.write_line(
            f"criterion {key}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {note}")


@pytest.fixture(scope="session")
def cia_census():
    from aglab.census import enumerate_class
    return {n: enumerate_class(n, "cia").groupoids() for n in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def sga_census():
    from aglab.census import enumerate_class
    return {n: enumerate_class(n, "sga").groupoids() for n in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def order3_tables():
    from aglab import _kernels as K
    tables = K.all_tables(3)
    return tables, K.profile_batch(tables)
