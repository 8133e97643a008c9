import pytest

from iterforge import Universe


@pytest.fixture(scope="session")
def universe():
    return Universe(9)
