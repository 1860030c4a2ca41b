from functools import lru_cache

import pytest

from oddballoon.ballooning import BallooningSpec, decomposition_family, profile
from oddballoon.graph import complete_bipartite, cycle, path, star

BASES = {
    "S2": star(2),
    "S3": star(3),
    "P3": path(3),
    "P4": path(4),
    "P5": path(5),
    "C4": cycle(4),
}


@lru_cache(maxsize=None)
def family_of(name: str, t: int = 5):
    g = complete_bipartite(2, 3) if name == "K23" else BASES[name]
    fam = decomposition_family(BallooningSpec(g, t))
    return fam, profile(fam)


@pytest.fixture
def family():
    return family_of
