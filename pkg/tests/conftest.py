import pytest

from widthk.genfun import SweepCaches


@pytest.fixture(scope="session")
def caches():
    # shared sweep memo so suites exercised by several tests enumerate S_n once
    return SweepCaches()
