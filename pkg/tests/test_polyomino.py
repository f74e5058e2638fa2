from __future__ import annotations

import pytest

from matchforge.errors import DisconnectedCells, NotPolyomino
from matchforge.polyomino import (
    build_family,
    build_g,
    build_h,
    family_cells,
    from_cells,
    parse_ascii_cells,
    validate,
    with_edges,
)


@pytest.mark.parametrize(
    "n, counts",
    [(0, (0, 0, 0)), (1, (10, 13, 4)), (2, (18, 25, 8)), (3, (26, 37, 12)), (6, (50, 73, 24))],
)
def test_g_counts(n, counts):
    g = build_g(n)
    assert (g.num_vertices, g.num_edges, g.num_faces) == counts


@pytest.mark.parametrize("n, counts", [(0, (0, 0, 0)), (1, (8, 10, 3)), (2, (16, 22, 7)), (3, (24, 34, 11))])
def test_h_counts(n, counts):
    h = build_h(n)
    assert (h.num_vertices, h.num_edges, h.num_faces) == counts


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("kind", ["G", "H"])
def test_euler_formula(kind, n):
    g = build_family(kind, n)
    assert g.num_edges == g.num_vertices + g.num_faces - 1


def test_g1_labels_and_faces(g1):
    assert sorted(v.label for v in g1.vertices) == sorted(
        ["u0", "u1", "u2", "v0", "v1", "v2", "w1", "w2", "z1", "z2"]
    )
    assert sorted(f.name for f in g1.faces) == ["s1,1", "s1,2", "s1,3", "s1,4"]
    assert g1.has_edge(g1.label_to_id["u0"], g1.label_to_id["v0"])
    assert not g1.has_edge(g1.label_to_id["w1"], g1.label_to_id["z1"])


def test_g2_face_names(g2):
    names = {f.name for f in g2.faces}
    assert names == {"s1,1", "s1,2", "s1,3", "s1,4", "t1", "s2,2", "s2,3", "s2,4"}


def test_h_removes_left_column(h1):
    assert "u0" not in h1.label_to_id and "v0" not in h1.label_to_id
    assert h1.kind == "H" and h1.n == 1


def test_bipartite_and_faces_valid():
    for n in range(0, 5):
        assert validate(build_g(n)) == []
        assert validate(build_h(n)) == []


def test_from_cells_single_square(square):
    assert (square.num_vertices, square.num_edges, square.num_faces) == (4, 4, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_from_cells_matches_family(n):
    g = from_cells(family_cells("G", n))
    assert g.canonical_form() == build_g(n).canonical_form()
    assert from_cells(family_cells("H", n)).canonical_form() == build_h(n).canonical_form()


def test_from_cells_errors():
    with pytest.raises(DisconnectedCells):
        from_cells([(0, 0), (0, 2)])
    with pytest.raises(DisconnectedCells):
        from_cells([])
    # diagonal contact only shares a corner, not an edge
    with pytest.raises(DisconnectedCells):
        from_cells([(0, 0), (1, 1)])
    ring = [(r, c) for r in range(4) for c in range(4) if not (1 <= r <= 2 and 1 <= c <= 2)]
    with pytest.raises(NotPolyomino):
        from_cells(ring)


def test_one_cell_hole_becomes_a_face():
    ring = [(r, c) for r in range(3) for c in range(3) if (r, c) != (1, 1)]
    g = from_cells(ring)
    assert g.num_faces == 9
    assert validate(g) == []


def test_parse_ascii():
    cells = parse_ascii_cells("#.\n##\n")
    assert cells == {(1, 0), (0, 0), (0, 1)}
    with pytest.raises(ValueError):
        parse_ascii_cells("#x")


def test_validate_detects_missing_face_edge():
    g = build_g(3)
    broken = with_edges(g, g.edges[1:])
    codes = {v.code for v in validate(broken)}
    assert "face-edge-missing" in codes


def test_validate_detects_non_unit_edge(g1):
    bad = with_edges(g1, list(g1.edges) + [(g1.label_to_id["u0"], g1.label_to_id["u2"])])
    assert "edge-not-unit" in {v.code for v in validate(bad)}


def test_null_graph_valid():
    assert validate(build_g(0)) == []


def test_remove_edges_keeps_positions(g1):
    smaller = g1.remove_edges([0])
    assert smaller.num_edges == g1.num_edges - 1
    assert smaller.num_faces == g1.num_faces - 1
