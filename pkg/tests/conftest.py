import random

import pytest

from lgorb import compute_hh, jacobian_algebra
from lgorb.catalog import catalog_group, klein_quartic


@pytest.fixture(scope="session")
def klein():
    return klein_quartic()


@pytest.fixture(scope="session")
def klein_algebra(klein):
    f, w = klein
    return jacobian_algebra(f, w)


@pytest.fixture(scope="session")
def slf():
    return catalog_group("slf")


@pytest.fixture(scope="session")
def rng():
    return random.Random(20260810)


class _HHCache:
    """Memoizes compute_hh by group element set (totals are what tests use
    repeatedly; conjugate copies of the same subgroup hit the cache)."""

    def __init__(self, f, w):
        self.f = f
        self.w = w
        self._cache = {}

    def report(self, group):
        key = group.element_set()
        if key not in self._cache:
            self._cache[key] = compute_hh(self.f, group, self.w)
        return self._cache[key]

    def total(self, group):
        return self.report(group).total_dim


@pytest.fixture(scope="session")
def hh(klein):
    f, w = klein
    return _HHCache(f, w)
