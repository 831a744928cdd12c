import pytest

import divbounds as db

#: Hand-checkable asymmetric pair used for all spot values.
GOLDEN_RAW_P = [0.75, 0.25]
GOLDEN_RAW_Q = [0.25, 0.75]


@pytest.fixture(scope="session")
def golden_pair():
    return db.normalize(GOLDEN_RAW_P), db.normalize(GOLDEN_RAW_Q)


def make_pairs(count, seed=20240131, **kwargs):
    cfg = db.TrialConfig(seed=seed, trials=count, **kwargs)
    return [db.random_pair(cfg, i) for i in range(count)]


@pytest.fixture(scope="session")
def pairs_100():
    return make_pairs(100)


@pytest.fixture(scope="session")
def pairs_1k():
    return make_pairs(1000)


@pytest.fixture(scope="session")
def pairs_10k():
    return make_pairs(10_000)
