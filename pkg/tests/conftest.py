import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "cmtkit",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("cmtkit")


@pytest.fixture(scope="session")
def all_fields():
    from cmtkit import GF2, GF3, GF5, RATIONALS
    return (GF2, GF3, GF5, RATIONALS)
