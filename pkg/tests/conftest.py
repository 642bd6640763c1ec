import pytest

from helpers import build_validity_suite


@pytest.fixture(scope="session")
def validity_suite():
    return build_validity_suite()


@pytest.fixture(scope="session")
def suite_optima(validity_suite):
    """Lazily computed exact optima for suite instances, keyed by name."""
    from domset.oracles import exact_min_dominating_set

    cache = {}

    def get(name, graph):
        if name not in cache:
            cache[name] = exact_min_dominating_set(graph).opt_size
        return cache[name]

    return get
