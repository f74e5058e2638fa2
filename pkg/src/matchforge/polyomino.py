"""Polyomino graphs: the G_n / H_n family and generic cell-set constructions.

Coordinates are lattice points ``(row, column)``. A unit cell ``(r, c)`` is the
square with corners ``(r, c)``, ``(r, c+1)``, ``(r+1, c+1)``, ``(r+1, c)``.
For the family graphs the rows are z=0, v=1, u=2, w=3, so the middle band of
squares lives in cell row 1, the top squares in cell row 2 and the bottom
squares in cell row 0.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, NamedTuple

from .errors import DisconnectedCells, NotPolyomino

Point = tuple[int, int]

ROW_LETTERS = {0: "z", 1: "v", 2: "u", 3: "w"}
LETTER_ROWS = {v: k for k, v in ROW_LETTERS.items()}

FAMILY_KINDS = ("G", "H")


@dataclass(frozen=True)
class LatticeVertex:
    id: int
    row: int
    column: int
    label: str


@dataclass(frozen=True)
class Face:
    """A unit square of the graph.

    ``vertices`` are in cyclic order starting at the lower-left corner and
    running counter-clockwise; ``edges[k]`` joins ``vertices[k]`` and
    ``vertices[k+1]``, so ``edges[0], edges[2]`` are the horizontal sides and
    ``edges[1], edges[3]`` the vertical ones.
    """

    row: int
    column: int
    vertices: tuple[int, int, int, int]
    edges: tuple[int, int, int, int]
    name: str


class Violation(NamedTuple):
    code: str
    detail: str


@dataclass(frozen=True, eq=False)
class PolyominoGraph:
    vertices: tuple[LatticeVertex, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[Face, ...]
    kind: str = "generic"
    n: int | None = None

    # derived structure -----------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def is_family(self) -> bool:
        return self.kind in FAMILY_KINDS

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the sorted ``(neighbour, edge index)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for i, (a, b) in enumerate(self.edges):
            adj[a].append((b, i))
            adj[b].append((a, i))
        return tuple(tuple(sorted(lst)) for lst in adj)

    @cached_property
    def point_to_id(self) -> dict[Point, int]:
        return {(v.row, v.column): v.id for v in self.vertices}

    @cached_property
    def label_to_id(self) -> dict[str, int]:
        return {v.label: v.id for v in self.vertices}

    @cached_property
    def face_by_name(self) -> dict[str, Face]:
        return {f.name: f for f in self.faces}

    def edge(self, a: int, b: int) -> int:
        """Index of the edge joining vertex ids ``a`` and ``b``."""
        return self.edge_index[(a, b) if a < b else (b, a)]

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edge_index

    def edge_by_labels(self, la: str, lb: str) -> int:
        return self.edge(self.label_to_id[la], self.label_to_id[lb])

    def edge_labels(self, index: int) -> tuple[str, str]:
        a, b = self.edges[index]
        return self.vertices[a].label, self.vertices[b].label

    def color(self, vid: int) -> int:
        v = self.vertices[vid]
        return (v.row + v.column) & 1

    # derived graphs ----------------------------------------------------------

    def remove_vertices(self, ids: Iterable[int], kind: str = "generic", n: int | None = None) -> PolyominoGraph:
        drop = set(ids)
        keep = [v for v in self.vertices if v.id not in drop]
        points = {(v.row, v.column): v.label for v in keep}
        kept_edges = set()
        for a, b in self.edges:
            if a in drop or b in drop:
                continue
            va, vb = self.vertices[a], self.vertices[b]
            kept_edges.add(((va.row, va.column), (vb.row, vb.column)))
        return _assemble(points, kept_edges, kind=kind, n=n, namer=_name_from(self))

    def remove_edges(self, indices: Iterable[int]) -> PolyominoGraph:
        """Spanning subgraph without the given edges (kind becomes generic)."""
        drop = set(indices)
        points = {(v.row, v.column): v.label for v in self.vertices}
        kept_edges = set()
        for i, (a, b) in enumerate(self.edges):
            if i in drop:
                continue
            va, vb = self.vertices[a], self.vertices[b]
            kept_edges.add(((va.row, va.column), (vb.row, vb.column)))
        return _assemble(points, kept_edges, kind="generic", n=None, namer=_name_from(self))

    def cells(self) -> set[Point]:
        return {(f.row, f.column) for f in self.faces}

    def canonical_form(self) -> tuple:
        """Edge set translated so the minimum point is the origin.

        Two graphs with equal canonical forms are identical up to vertex
        relabelling and translation.
        """
        if not self.vertices:
            return ()
        r0 = min(v.row for v in self.vertices)
        c0 = min(v.column for v in self.vertices)
        out = []
        for a, b in self.edges:
            va, vb = self.vertices[a], self.vertices[b]
            pa = (va.row - r0, va.column - c0)
            pb = (vb.row - r0, vb.column - c0)
            out.append((min(pa, pb), max(pa, pb)))
        return tuple(sorted(out))

    def __repr__(self):
        tag = self.kind if self.n is None else f"{self.kind}({self.n})"
        return f"<PolyominoGraph {tag}: |V|={self.num_vertices} |E|={self.num_edges} |F|={self.num_faces}>"


def _name_from(g: PolyominoGraph) -> Callable[[int, int], str]:
    names = {(f.row, f.column): f.name for f in g.faces}
    return lambda r, c: names.get((r, c), f"c({r},{c})")


def _assemble(
    points: dict[Point, str],
    edge_points: Iterable[tuple[Point, Point]],
    kind: str,
    n: int | None,
    namer: Callable[[int, int], str] | None = None,
) -> PolyominoGraph:
    """Build a graph from labelled lattice points and point-pair edges.

    Vertex ids are row-major; edges are sorted by endpoint ids; faces are all
    unit cells whose four sides are present, sorted by ``(row, column)``.
    """
    order = sorted(points)
    pid = {p: i for i, p in enumerate(order)}
    vertices = tuple(LatticeVertex(i, p[0], p[1], points[p]) for i, p in enumerate(order))
    edges = sorted({(min(pid[p], pid[q]), max(pid[p], pid[q])) for p, q in edge_points})
    eidx = {e: i for i, e in enumerate(edges)}

    def find(p: Point, q: Point) -> int | None:
        if p not in pid or q not in pid:
            return None
        a, b = pid[p], pid[q]
        return eidx.get((min(a, b), max(a, b)))

    namer = namer or (lambda r, c: f"c({r},{c})")
    faces = []
    for r, c in order:
        corners = ((r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c))
        sides = [find(corners[k], corners[(k + 1) % 4]) for k in range(4)]
        if any(s is None for s in sides):
            continue
        faces.append(Face(r, c, tuple(pid[p] for p in corners), tuple(sides), namer(r, c)))
    return PolyominoGraph(vertices, tuple(edges), tuple(faces), kind, n)


def _null(kind: str, n: int) -> PolyominoGraph:
    return PolyominoGraph((), (), (), kind, n)


def family_face_name(row: int, column: int) -> str:
    """Name of the cell ``(row, column)`` in the G_n/H_n layout."""
    if row == 1 and column == 0:
        return "s1,1"
    if column % 2 == 1:
        k = (column + 1) // 2
        return {2: f"s{k},2", 1: f"s{k},3", 0: f"s{k},4"}[row]
    return f"t{column // 2}"


def family_cells(kind: str, n: int) -> set[Point]:
    """Unit-cell layout of G_n (``kind='G'``) or H_n (``kind='H'``)."""
    kind = kind.upper()
    if n <= 0:
        return set()
    cells = {(1, j) for j in range(2 * n)}
    for k in range(1, n + 1):
        cells.add((2, 2 * k - 1))
        cells.add((0, 2 * k - 1))
    if kind == "H":
        cells.discard((1, 0))
    return cells


def build_g(n: int) -> PolyominoGraph:
    """The polyomino G_n of 4n squares; ``n = 0`` gives the null graph."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return _null("G", 0)
    points: dict[Point, str] = {}
    for j in range(2 * n + 1):
        points[(2, j)] = f"u{j}"
        points[(1, j)] = f"v{j}"
    for j in range(1, 2 * n + 1):
        points[(3, j)] = f"w{j}"
        points[(0, j)] = f"z{j}"
    edges: set[tuple[Point, Point]] = set()
    for j in range(2 * n):
        edges.add(((2, j), (2, j + 1)))
        edges.add(((1, j), (1, j + 1)))
    for k in range(1, n + 1):
        edges.add(((3, 2 * k - 1), (3, 2 * k)))
        edges.add(((0, 2 * k - 1), (0, 2 * k)))
    for j in range(2 * n + 1):
        edges.add(((1, j), (2, j)))
    for j in range(1, 2 * n + 1):
        edges.add(((2, j), (3, j)))
        edges.add(((0, j), (1, j)))
    return _assemble(points, edges, "G", n, family_face_name)


def build_h(n: int) -> PolyominoGraph:
    """H_n: G_n with u_0, v_0 and their edges deleted."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return _null("H", 0)
    g = build_g(n)
    return g.remove_vertices([g.label_to_id["u0"], g.label_to_id["v0"]], kind="H", n=n)


def build_family(kind: str, n: int) -> PolyominoGraph:
    kind = kind.upper()
    if kind == "G":
        return build_g(n)
    if kind == "H":
        return build_h(n)
    raise ValueError(f"unknown family {kind!r}")


def _edge_components(cells: set[Point]) -> list[set[Point]]:
    seen: set[Point] = set()
    comps = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            r, c = queue.popleft()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    comp.add(nb)
                    queue.append(nb)
        comps.append(comp)
    return comps


def _holes(cells: set[Point]) -> list[set[Point]]:
    rows = [r for r, _ in cells]
    cols = [c for _, c in cells]
    r0, r1, c0, c1 = min(rows) - 1, max(rows) + 1, min(cols) - 1, max(cols) + 1
    empty = {(r, c) for r in range(r0, r1 + 1) for c in range(c0, c1 + 1) if (r, c) not in cells}
    holes = []
    for comp in _edge_components(empty):
        if not any(r in (r0, r1) or c in (c0, c1) for r, c in comp):
            holes.append(comp)
    return holes


def from_cells(cells: Iterable[Iterable[int]]) -> PolyominoGraph:
    """Polyomino graph formed by the boundaries of unit cells.

    Raises :class:`DisconnectedCells` for an empty or non edge-connected set
    and :class:`NotPolyomino` if the cells enclose a hole larger than one
    square. A one-square hole has all four sides present and therefore shows
    up as an ordinary face.
    """
    cellset = {(int(r), int(c)) for r, c in cells}
    if not cellset:
        raise DisconnectedCells("empty cell set")
    comps = _edge_components(cellset)
    if len(comps) > 1:
        raise DisconnectedCells(f"cells form {len(comps)} edge-connected pieces")
    for hole in _holes(cellset):
        if len(hole) > 1:
            raise NotPolyomino(f"hole of {len(hole)} cells at {sorted(hole)[0]}")
    points: dict[Point, str] = {}
    edges: set[tuple[Point, Point]] = set()
    for r, c in cellset:
        corners = ((r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c))
        for k in range(4):
            p, q = corners[k], corners[(k + 1) % 4]
            points[p] = f"({p[0]},{p[1]})"
            edges.add((min(p, q), max(p, q)))
    g = _assemble(points, edges, "generic", None)
    problems = [v for v in validate(g) if v.code != "count-mismatch"]
    if problems:
        raise NotPolyomino("; ".join(f"{v.code}: {v.detail}" for v in problems))
    return g


def parse_ascii_cells(text: str) -> set[Point]:
    """Cells from an ASCII picture of ``#`` (cell) and ``.`` (empty).

    The first line is the top row, so it receives the largest row index.
    """
    lines = [ln.rstrip() for ln in text.splitlines() if ln.strip()]
    cells = set()
    height = len(lines)
    for i, line in enumerate(lines):
        for c, ch in enumerate(line):
            if ch == "#":
                cells.add((height - 1 - i, c))
            elif ch not in ". ":
                raise ValueError(f"unexpected character {ch!r} in cell picture")
    return cells


def _family_counts(kind: str, n: int) -> tuple[int, int, int]:
    if n == 0:
        return 0, 0, 0
    if kind == "G":
        return 8 * n + 2, 12 * n + 1, 4 * n
    return 8 * n, 12 * n - 2, 4 * n - 1


def validate(g: PolyominoGraph) -> list[Violation]:
    """List every broken structural invariant; empty when the graph is sound."""
    out: list[Violation] = []
    pts = g.point_to_id
    if len(pts) != g.num_vertices:
        out.append(Violation("vertex-duplicate", "two vertices share a lattice point"))
    for v in g.vertices:
        if g.is_family:
            letter = v.label[:1]
            if LETTER_ROWS.get(letter) != v.row:
                out.append(Violation("label-row-mismatch", f"{v.label} on row {v.row}"))
    for i, (a, b) in enumerate(g.edges):
        va, vb = g.vertices[a], g.vertices[b]
        if abs(va.row - vb.row) + abs(va.column - vb.column) != 1:
            out.append(Violation("edge-not-unit", f"edge {i} {va.label}-{vb.label}"))
        elif g.color(a) == g.color(b):
            out.append(Violation("not-bipartite", f"edge {i}"))
    seen_cells = set()
    for f in g.faces:
        key = (f.row, f.column)
        if key in seen_cells:
            out.append(Violation("face-duplicate", f.name))
        seen_cells.add(key)
        corners = ((f.row, f.column), (f.row, f.column + 1), (f.row + 1, f.column + 1), (f.row + 1, f.column))
        for k in range(4):
            p, q = corners[k], corners[(k + 1) % 4]
            if p not in pts or q not in pts or not g.has_edge(pts[p], pts[q]):
                out.append(Violation("face-edge-missing", f"{f.name} lacks side {p}-{q}"))
    for (r, c) in pts:
        corners = ((r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c))
        if all(p in pts for p in corners) and all(
            g.has_edge(pts[corners[k]], pts[corners[(k + 1) % 4]]) for k in range(4)
        ):
            if (r, c) not in seen_cells:
                out.append(Violation("face-missing", f"cell ({r},{c}) is bounded but not listed"))
    if g.is_family and g.n is not None:
        want = _family_counts(g.kind, g.n)
        have = (g.num_vertices, g.num_edges, g.num_faces)
        if want != have:
            out.append(Violation("count-mismatch", f"{g.kind}({g.n}) has |V|,|E|,|F|={have}, expected {want}"))
    return out


def with_edges(g: PolyominoGraph, edges: Iterable[tuple[int, int]]) -> PolyominoGraph:
    """Copy of ``g`` with a replaced edge list and untouched faces (for tests)."""
    return dataclasses.replace(g, edges=tuple(sorted(edges)))
