import pytest

from braidpbw.corpus import build_cached, corpus_entries


@pytest.fixture(scope="session")
def corpus():
    return {entry.name: build_cached(entry.name) for entry in corpus_entries()}


@pytest.fixture(scope="session")
def h4(corpus):
    return corpus["sweedler_h4"]


@pytest.fixture(scope="session")
def taft(corpus):
    return corpus["taft3"]
