import os

import pytest
from hypothesis import HealthCheck, settings

from vulaug.corpus import listing1, load_corpus

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=300,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def listing():
    return listing1()


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()
