import pytest

from resolvkit import families
from resolvkit import logutils
from resolvkit.settings import settings


@pytest.fixture(autouse=True)
def default_settings():
    settings.clear()
    yield
    settings.clear()


@pytest.fixture(autouse=True)
def logfile(tmp_path, monkeypatch):
    path = tmp_path / 'resolvkit.log'
    monkeypatch.setattr(logutils, 'LOGFILE', str(path))
    return path


@pytest.fixture(scope='session')
def corpus():
    """Seeded random undirected graphs with at most 10 vertices."""
    return families.random_corpus(200, 10, seed=0)


@pytest.fixture(scope='session')
def small_corpus(corpus):
    return [g for g in corpus if g.n <= 7]


@pytest.fixture(scope='session')
def tree_sample():
    return families.random_out_trees(100, 12, seed=0)
