import os

import pytest

from jacobiws import cache


@pytest.fixture(scope="session", autouse=True)
def shared_cache(tmp_path_factory):
    """Point the disk cache at a writable location for the whole session.

    Honors JACOBIWS_CACHE when set (useful to reuse expensive quotient
    builds across runs); otherwise uses a session temp directory.
    """
    if os.environ.get(cache.CACHE_ENV):
        yield
        return
    path = tmp_path_factory.mktemp("jacobiws-cache")
    cache.set_cache_dir(path)
    yield
    cache.set_cache_dir(None)
