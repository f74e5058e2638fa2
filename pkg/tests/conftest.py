from __future__ import annotations

import pytest

from matchforge import Matching, build_g, build_h, from_cells

# Three named perfect matchings of G_1 used throughout the tests.
G1_MATCHINGS = {
    "M_a": [("u0", "u1"), ("v0", "v1"), ("w1", "w2"), ("z1", "z2"), ("u2", "v2")],
    "M_1": [("u0", "v0"), ("u1", "v1"), ("u2", "v2"), ("w1", "w2"), ("z1", "z2")],
    "M_c": [("u0", "v0"), ("w1", "u1"), ("w2", "u2"), ("z1", "v1"), ("z2", "v2")],
}


@pytest.fixture(scope="session")
def g1():
    return build_g(1)


@pytest.fixture(scope="session")
def g2():
    return build_g(2)


@pytest.fixture(scope="session")
def h1():
    return build_h(1)


@pytest.fixture(scope="session")
def g1_matchings(g1):
    return {k: Matching.from_labels(g1, v) for k, v in G1_MATCHINGS.items()}


@pytest.fixture(scope="session")
def square():
    return from_cells([(0, 0)])
