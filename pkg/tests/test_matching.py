from __future__ import annotations

import pytest

from matchforge.errors import SizeLimitExceeded
from matchforge.matching import (
    Matching,
    all_matching_masks,
    alternating_cycles,
    alternating_squares,
    are_compatible,
    are_crossing,
    are_disjoint,
    count_by_enumeration,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    face_cycle,
    has_alternating_cycle,
)
from matchforge.polyomino import build_g, build_h, from_cells


@pytest.mark.parametrize("n, phi", [(0, 1), (1, 6), (2, 32), (3, 168), (4, 880)])
def test_g_counts(n, phi):
    assert count_by_enumeration(build_g(n)) == phi
    assert count_perfect_matchings(build_g(n)) == phi


@pytest.mark.parametrize("n, phi", [(0, 1), (1, 5), (2, 26), (3, 136)])
def test_h_counts(n, phi):
    assert count_by_enumeration(build_h(n)) == phi
    assert count_perfect_matchings(build_h(n)) == phi


def test_enumeration_yields_distinct_perfect_matchings(g2):
    ms = list(enumerate_perfect_matchings(g2))
    assert len({m.mask for m in ms}) == 32
    assert all(m.is_perfect() for m in ms)


def test_no_perfect_matching():
    # three cells in an L: 8 vertices, but a 2x2 block minus one cell plus a tail
    g = from_cells([(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)])
    assert count_by_enumeration(g) == 0


def test_matching_constructors(g1, g1_matchings):
    M = g1_matchings["M_1"]
    assert len(M) == 5
    assert Matching.from_pairs(g1, M.pairs()) == M
    assert Matching.from_edges(g1, M.edges) == M
    assert {frozenset((l[:2], l[2:])) for l in M.labels()} == {
        frozenset(p) for p in [("u0", "v0"), ("u1", "v1"), ("u2", "v2"), ("w1", "w2"), ("z1", "z2")]
    }
    assert M.mate[g1.label_to_id["u0"]] == g1.label_to_id["v0"]


def test_transfer_between_graphs(g1, g1_matchings):
    from matchforge.polyomino import family_cells

    other = from_cells(family_cells("G", 1))
    moved = g1_matchings["M_c"].transfer(other)
    assert moved.is_perfect()
    assert sorted(moved.pairs()) != [] and len(moved) == 5


def test_alternating_squares(g1, g1_matchings):
    names = lambda M: sorted(f.name for f in alternating_squares(g1, M))  # noqa: E731
    assert names(g1_matchings["M_a"]) == ["s1,1"]
    assert names(g1_matchings["M_1"]) == ["s1,1", "s1,3"]
    assert names(g1_matchings["M_c"]) == ["s1,2", "s1,4"]


def _cycles(g, M):
    return ["".join(c.labels()) for c in alternating_cycles(g, M)]


def test_alternating_cycles_g1_m1(g1, g1_matchings):
    got = _cycles(g1, g1_matchings["M_1"])
    assert got == ["v0u0u1v1", "v1u1u2v2", "z1z2v2u2u1v1", "v1u1w1w2u2v2", "z1z2v2u2w2w1u1v1"]


def test_alternating_cycles_g1_ma(g1, g1_matchings):
    got = _cycles(g1, g1_matchings["M_a"])
    assert len(got) == 5
    # the square, the 6-cycle through the middle band and the periphery are all present
    assert "v0v1u1u0" in got
    assert "v0v1v2u2u1u0" in got
    assert "z1z2v2u2w2w1u1u0v0v1" in got


def test_alternating_cycles_g1_mc(g1, g1_matchings):
    assert len(_cycles(g1, g1_matchings["M_c"])) == 4


def test_square_graph_single_cycle(square):
    (M,) = all_matching_masks(square)[:1]
    assert len(alternating_cycles(square, M)) == 1


def test_cycles_alternate_and_are_distinct(g2):
    for m in all_matching_masks(g2)[:10]:
        cycles = alternating_cycles(g2, m)
        assert len({c.edge_mask for c in cycles}) == len(cycles)
        assert all(c.is_alternating(m) for c in cycles)


def test_cycle_search_limit():
    g = build_g(4)
    with pytest.raises(SizeLimitExceeded):
        alternating_cycles(g, all_matching_masks(g)[0], max_edges=40)


def test_has_alternating_cycle_agrees(g2):
    for m in all_matching_masks(g2):
        assert has_alternating_cycle(g2, m) == bool(alternating_cycles(g2, m))


def test_unique_matching_has_no_cycle():
    # 2x4 ladder: Fibonacci count
    assert len(all_matching_masks(from_cells([(0, 0), (0, 1), (0, 2)]))) == 5
    strip = from_cells([(0, 0)])
    removed = strip.remove_edges([0])
    (only,) = all_matching_masks(removed)
    assert not has_alternating_cycle(removed, only)


def test_compatibility_examples(g1, g1_matchings):
    M1 = g1_matchings["M_1"]
    s11, s13 = (face_cycle(g1, g1.face_by_name[n]) for n in ("s1,1", "s1,3"))
    assert are_compatible(s11, s13, M1)
    assert not are_disjoint(s11, s13)
    Ma = g1_matchings["M_a"]
    six = next(c for c in alternating_cycles(g1, Ma) if len(c) == 6)
    assert not are_compatible(s11, six, Ma)
    assert not are_disjoint(six, six)


def test_crossing_cycles():
    g = build_g(2)
    lab = g.label_to_id
    from matchforge.matching import AlternatingCycle

    left = AlternatingCycle(g, tuple(lab[x] for x in ("u0", "u1", "u2", "v2", "v1", "v0")))
    right = AlternatingCycle(g, tuple(lab[x] for x in ("u1", "u2", "u3", "v3", "v2", "v1")))
    assert are_crossing(left, right)
    big = AlternatingCycle(g, tuple(lab[x] for x in ("u0", "u1", "u2", "u3", "v3", "v2", "v1", "v0")))
    assert not are_crossing(left, big)


def test_interior_of_square(g1):
    f = g1.face_by_name["s1,1"]
    assert face_cycle(g1, f).interior == frozenset({(f.row, f.column)})
