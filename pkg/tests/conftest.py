import pytest

from matchjack import cache


@pytest.fixture(scope="session", autouse=True)
def jack_cache(tmp_path_factory):
    path = tmp_path_factory.mktemp("jack-cache")
    cache.configure(path)
    yield path
    cache.configure(enabled=False)
