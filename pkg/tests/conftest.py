import pytest
from hypothesis import HealthCheck, settings

from mdssd.gf import ctx_for_q

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def field():
    """Cached field lookup by q."""
    return ctx_for_q
