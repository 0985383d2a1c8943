import pytest

from util import make_petersen


@pytest.fixture
def petersen():
    return make_petersen()
