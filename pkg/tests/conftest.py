from functools import lru_cache

import pytest

from cubenets import Family, TopologySpec, build_graph


@lru_cache(maxsize=None)
def _built(family: str, dimension: int):
    return build_graph(TopologySpec(Family.parse(family), dimension))


@pytest.fixture
def built():
    """Cached graph factory shared by the whole suite: built('bvh', 2)."""
    return _built
