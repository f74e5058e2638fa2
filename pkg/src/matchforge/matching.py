"""Perfect matchings of polyomino graphs and their alternating structure.

A matching is stored as an integer bitmask over the parent graph's edge list,
which keeps hashing and set algebra exact and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import SizeLimitExceeded
from .polyomino import Face, PolyominoGraph

DEFAULT_CYCLE_EDGE_LIMIT = 40


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Matching:
    """Edge set of ``graph`` given as an index bitmask."""

    graph: PolyominoGraph = field(compare=False, repr=False)
    mask: int

    @classmethod
    def from_edges(cls, g: PolyominoGraph, indices: Iterable[int]) -> Matching:
        m = 0
        for i in indices:
            m |= 1 << i
        return cls(g, m)

    @classmethod
    def from_pairs(cls, g: PolyominoGraph, pairs: Iterable[Sequence[int]]) -> Matching:
        """From vertex-id pairs, e.g. the JSON form ``[[0, 3], [1, 4]]``."""
        return cls.from_edges(g, (g.edge(int(a), int(b)) for a, b in pairs))

    @classmethod
    def from_labels(cls, g: PolyominoGraph, pairs: Iterable[tuple[str, str]]) -> Matching:
        return cls.from_edges(g, (g.edge_by_labels(a, b) for a, b in pairs))

    @property
    def edges(self) -> list[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, edge: int) -> bool:
        return bool(self.mask >> edge & 1)

    @cached_property
    def mate(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i in self.edges:
            a, b = self.graph.edges[i]
            out[a] = b
            out[b] = a
        return out

    def is_matching(self) -> bool:
        seen = set()
        for i in self.edges:
            a, b = self.graph.edges[i]
            if a in seen or b in seen:
                return False
            seen.update((a, b))
        return True

    def is_perfect(self) -> bool:
        return self.is_matching() and 2 * len(self) == self.graph.num_vertices

    def pairs(self) -> list[list[int]]:
        return sorted([list(self.graph.edges[i]) for i in self.edges])

    def labels(self) -> list[str]:
        return [a + b for a, b in (self.graph.edge_labels(i) for i in self.edges)]

    def to_json(self) -> list[list[int]]:
        return self.pairs()

    def transfer(self, other: PolyominoGraph) -> Matching:
        """The same edges, located by lattice points, in another graph."""
        pts = other.point_to_id
        idx = []
        for i in self.edges:
            a, b = self.graph.edges[i]
            va, vb = self.graph.vertices[a], self.graph.vertices[b]
            idx.append(other.edge(pts[(va.row, va.column)], pts[(vb.row, vb.column)]))
        return Matching.from_edges(other, idx)

    def symmetric_difference(self, cycle: AlternatingCycle) -> Matching:
        return Matching(self.graph, self.mask ^ cycle.edge_mask)

    def __repr__(self):
        return f"Matching({' '.join(self.labels())})"


def _mask_of(M: Matching | int) -> int:
    return M.mask if isinstance(M, Matching) else int(M)


# enumeration -----------------------------------------------------------------


def iter_matching_masks(g: PolyominoGraph, forbidden: int = 0) -> Iterator[int]:
    """Bitmasks of all perfect matchings avoiding the ``forbidden`` edges.

    Depth-first, always branching on the lowest-id uncovered vertex with its
    neighbours in increasing order, so the output order is fixed.
    """
    V = g.num_vertices
    if V == 0:
        yield 0
        return
    full = (1 << V) - 1
    nbrs = [
        [(1 << b, 1 << e) for b, e in g.adjacency[v] if not forbidden >> e & 1]
        for v in range(V)
    ]
    stack = [(0, 0)]
    while stack:
        covered, m = stack.pop()
        if covered == full:
            yield m
            continue
        low = ~covered & (covered + 1)
        v = low.bit_length() - 1
        children = [(covered | low | vb, m | eb) for vb, eb in nbrs[v] if not covered & vb]
        children.reverse()
        stack.extend(children)


def enumerate_perfect_matchings(g: PolyominoGraph) -> Iterator[Matching]:
    for m in iter_matching_masks(g):
        yield Matching(g, m)


def all_matching_masks(g: PolyominoGraph) -> list[int]:
    return list(iter_matching_masks(g))


def count_by_enumeration(g: PolyominoGraph) -> int:
    return sum(1 for _ in iter_matching_masks(g))


def count_perfect_matchings(g: PolyominoGraph) -> int:
    """Number of perfect matchings.

    Family graphs use the exact recurrences; anything else is enumerated.
    """
    if g.is_family and g.n is not None:
        from .formulas import phi_g, phi_h

        return phi_g(g.n) if g.kind == "G" else phi_h(g.n)
    return count_by_enumeration(g)


# alternating structure ---------------------------------------------------------


def alternating_squares(g: PolyominoGraph, M: Matching | int) -> list[Face]:
    """Faces whose boundary is M-alternating, in face order."""
    m = _mask_of(M)
    out = []
    for f in g.faces:
        e = f.edges
        if (m >> e[0] & 1 and m >> e[2] & 1) or (m >> e[1] & 1 and m >> e[3] & 1):
            out.append(f)
    return out


@dataclass(frozen=True)
class AlternatingCycle:
    """A simple cycle of ``graph`` given by its cyclic vertex sequence."""

    graph: PolyominoGraph = field(compare=False, repr=False)
    vertices: tuple[int, ...]

    @cached_property
    def edge_mask(self) -> int:
        g = self.graph
        m = 0
        k = len(self.vertices)
        for i in range(k):
            m |= 1 << g.edge(self.vertices[i], self.vertices[(i + 1) % k])
        return m

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    @property
    def edges(self) -> list[int]:
        return bits(self.edge_mask)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_square(self) -> bool:
        return len(self.vertices) == 4

    @cached_property
    def interior(self) -> frozenset[tuple[int, int]]:
        """Unit cells enclosed by the cycle (crossing-parity test)."""
        g = self.graph
        pts = [(g.vertices[v].row, g.vertices[v].column) for v in self.vertices]
        k = len(pts)
        verticals: dict[int, list[int]] = {}
        for i in range(k):
            (r1, c1), (r2, c2) = pts[i], pts[(i + 1) % k]
            if c1 == c2:
                verticals.setdefault(min(r1, r2), []).append(c1)
        rows = [p[0] for p in pts]
        cols = [p[1] for p in pts]
        inside = set()
        for r in range(min(rows), max(rows)):
            crossing = sorted(verticals.get(r, []))
            for c in range(min(cols), max(cols)):
                if sum(1 for x in crossing if x > c) % 2:
                    inside.add((r, c))
        return frozenset(inside)

    def is_alternating(self, M: Matching | int) -> bool:
        m = _mask_of(M)
        g = self.graph
        k = len(self.vertices)
        if k % 2:
            return False
        flags = [m >> g.edge(self.vertices[i], self.vertices[(i + 1) % k]) & 1 for i in range(k)]
        return all(flags[i] != flags[(i + 1) % k] for i in range(k))

    def labels(self) -> list[str]:
        return [self.graph.vertices[v].label for v in self.vertices]

    def __repr__(self):
        return f"AlternatingCycle({''.join(self.labels())})"


def alternating_cycles(
    g: PolyominoGraph,
    M: Matching | int,
    forbidden: int = 0,
    max_edges: int = DEFAULT_CYCLE_EDGE_LIMIT,
) -> list[AlternatingCycle]:
    """Every simple M-alternating cycle of ``g`` minus the ``forbidden`` edges.

    Each cycle is found once: it is rooted at its smallest vertex ``s`` and
    walked starting with the matched edge at ``s``. Ordered by length, then by
    vertex sequence.
    """
    if g.num_edges > max_edges:
        raise SizeLimitExceeded(
            f"alternating cycle search limited to {max_edges} edges, graph has {g.num_edges}"
        )
    m = _mask_of(M)
    V = g.num_vertices
    mate = [-1] * V
    for e in bits(m):
        a, b = g.edges[e]
        mate[a], mate[b] = b, a
    free_nbrs = [
        [x for x, e in g.adjacency[v] if not (m >> e & 1) and not (forbidden >> e & 1)] for v in range(V)
    ]
    if any(mate[v] < 0 for v in range(V)):
        raise ValueError("matching is not perfect")
    found: list[tuple[int, ...]] = []
    for s in range(V):
        t = mate[s]
        if t < s:
            continue
        if forbidden >> g.edge(s, t) & 1:
            continue
        path = [s, t]
        on_path = (1 << s) | (1 << t)
        # stack of iterators over unmatched neighbours of the path's last vertex
        stack = [iter(free_nbrs[t])]
        while stack:
            advanced = False
            for x in stack[-1]:
                if x == s:
                    if len(path) >= 4:
                        found.append(tuple(path))
                    continue
                if x < s or on_path >> x & 1:
                    continue
                y = mate[x]
                if y < s or on_path >> y & 1:
                    continue
                if forbidden >> g.edge(x, y) & 1:
                    continue
                path += [x, y]
                on_path |= (1 << x) | (1 << y)
                stack.append(iter(free_nbrs[y]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if len(path) > 2:
                    y = path.pop()
                    x = path.pop()
                    on_path &= ~((1 << x) | (1 << y))
    found.sort(key=lambda p: (len(p), p))
    return [AlternatingCycle(g, p) for p in found]


def has_alternating_cycle(g: PolyominoGraph, M: Matching | int, forbidden: int = 0) -> bool:
    """Whether ``g`` minus ``forbidden`` has an M-alternating cycle.

    Orients matched edges from colour 0 to colour 1 and the remaining edges
    back; alternating cycles are exactly the directed cycles, found by peeling
    sources (Kahn).
    """
    m = _mask_of(M)
    V = g.num_vertices
    out: list[list[int]] = [[] for _ in range(V)]
    indeg = [0] * V
    for e, (a, b) in enumerate(g.edges):
        if forbidden >> e & 1:
            continue
        if g.color(a) == 1:
            a, b = b, a
        src, dst = (a, b) if m >> e & 1 else (b, a)
        out[src].append(dst)
        indeg[dst] += 1
    queue = [v for v in range(V) if indeg[v] == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed < V


def are_disjoint(c1: AlternatingCycle, c2: AlternatingCycle) -> bool:
    return not (c1.vertex_mask & c2.vertex_mask)


def are_crossing(c1: AlternatingCycle, c2: AlternatingCycle) -> bool:
    """True when neither enclosed region contains the other and they overlap."""
    i1, i2 = c1.interior, c2.interior
    return not (i1 <= i2 or i2 <= i1 or not (i1 & i2))


def are_compatible(c1: AlternatingCycle, c2: AlternatingCycle, M: Matching | int) -> bool:
    """Shared edges all lie in M and the two cycles do not cross."""
    shared = c1.edge_mask & c2.edge_mask
    if shared & ~_mask_of(M):
        return False
    return not are_crossing(c1, c2)


def face_cycle(g: PolyominoGraph, face: Face) -> AlternatingCycle:
    return AlternatingCycle(g, face.vertices)
