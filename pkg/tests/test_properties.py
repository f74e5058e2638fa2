from __future__ import annotations

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from matchforge.antiforcing import antiforcing_number
from matchforge.errors import NotPolyomino
from matchforge.forcing import clar_number, forcing_number
from matchforge.matching import Matching, all_matching_masks, alternating_cycles, has_alternating_cycle
from matchforge.polyomino import build_g, build_h, from_cells

STEPS = ((0, 1), (1, 0), (0, -1), (-1, 0))


@st.composite
def polyominoes(draw, max_cells=10):
    """Grow a cell set by attaching neighbours of already chosen cells."""
    size = draw(st.integers(1, max_cells))
    cells = [(0, 0)]
    while len(cells) < size:
        r, c = cells[draw(st.integers(0, len(cells) - 1))]
        dr, dc = STEPS[draw(st.integers(0, 3))]
        new = (r + dr, c + dc)
        if new not in cells:
            cells.append(new)
    try:
        return from_cells(cells)
    except NotPolyomino:
        assume(False)


fast = settings(max_examples=60, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])


def _sample(masks, k=6):
    step = max(1, len(masks) // k)
    return masks[::step][:k]


@fast
@given(polyominoes())
def test_forcing_oracle_matches_cycle_route(g):
    masks = all_matching_masks(g)
    assume(masks)
    for m in _sample(masks):
        assert forcing_number(g, m, "oracle", matchings=masks) == forcing_number(g, m, "cycles")


@fast
@given(polyominoes())
def test_antiforcing_oracle_matches_compat_route(g):
    masks = all_matching_masks(g)
    assume(masks)
    assume(g.num_edges - g.num_vertices // 2 <= 16)
    for m in _sample(masks, 4):
        assert antiforcing_number(g, m, "oracle") == antiforcing_number(g, m, "compat")


@fast
@given(polyominoes())
def test_max_forcing_equals_clar(g):
    masks = all_matching_masks(g)
    assume(masks)
    assert max(forcing_number(g, m, "cycles") for m in masks) == clar_number(g)


@fast
@given(polyominoes())
def test_symmetric_difference_with_cycle_is_perfect(g):
    masks = all_matching_masks(g)
    assume(masks)
    known = set(masks)
    for m in _sample(masks, 3):
        M = Matching(g, m)
        for cycle in alternating_cycles(g, m):
            other = M.symmetric_difference(cycle)
            assert other.is_perfect() and other.mask in known


@fast
@given(polyominoes())
def test_cycle_existence_agrees_with_uniqueness(g):
    masks = all_matching_masks(g)
    assume(masks)
    for m in _sample(masks, 3):
        assert has_alternating_cycle(g, m) == (len(masks) > 1)


@fast
@given(polyominoes())
def test_forcing_at_most_antiforcing(g):
    masks = all_matching_masks(g)
    assume(masks)
    for m in _sample(masks, 4):
        assert forcing_number(g, m, "cycles") <= antiforcing_number(g, m, "compat")


def _interior_face_property(g):
    """Every alternating cycle encloses at least one face whose boundary
    alternates with respect to the same matching."""
    faces = {(f.row, f.column): f for f in g.faces}
    for m in all_matching_masks(g):
        for cycle in alternating_cycles(g, m):
            inside = [faces[c] for c in cycle.interior]
            assert any(
                (m >> f.edges[0] & 1 and m >> f.edges[2] & 1) or (m >> f.edges[1] & 1 and m >> f.edges[3] & 1)
                for f in inside
            ), cycle


@pytest.mark.parametrize("n", [1, 2])
def test_interior_face_property_family(n):
    _interior_face_property(build_g(n))
    _interior_face_property(build_h(n))


@fast
@given(polyominoes(max_cells=8))
def test_interior_face_property_random(g):
    _interior_face_property(g)
