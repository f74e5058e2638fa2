"""Anti-forcing numbers and the anti-forcing polynomial.

Three independent routes:

* ``oracle``: smallest edge set outside M whose removal leaves M as the only
  perfect matching, by iterative deepening;
* ``compat``: maximum pairwise-compatible family of M-alternating cycles;
* ``structural`` (G_n/H_n only): every M-alternating square plus the best
  compatible choice among ladder (``L_k``) and wing (``W_r``) peripheries
  spanning two matched middle verticals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .cliques import adjacency_from_pairs, max_clique
from .errors import SizeLimitExceeded, WrongFamily
from .forcing import polynomial_from_values, spectrum
from .matching import (
    DEFAULT_CYCLE_EDGE_LIMIT,
    AlternatingCycle,
    Matching,
    all_matching_masks,
    alternating_cycles,
    alternating_squares,
    are_compatible,
    face_cycle,
    has_alternating_cycle,
)
from .polynomial import IntPolynomial
from .polyomino import Face, PolyominoGraph

DEFAULT_ANTIFORCING_ORACLE_LIMIT = 20


def _as_matching(g: PolyominoGraph, M: Matching | int) -> Matching:
    return M if isinstance(M, Matching) else Matching(g, int(M))


@dataclass(frozen=True)
class CompatibleSet:
    cycles: tuple[AlternatingCycle, ...]
    matching: Matching = field(repr=False)

    def __len__(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class SegmentCycleCatalog:
    """Candidate cycles of a family graph for one matching.

    ``ladders`` maps ``(i, j)`` to the periphery of the straight chain between
    matched verticals ``u_i v_i`` and ``u_j v_j``; ``wings`` maps ``(i, j)``
    (``i`` odd) to the periphery of the H_r-shaped block over the same span.
    """

    faces: tuple[Face, ...]
    ladders: dict[tuple[int, int], AlternatingCycle]
    wings: dict[tuple[int, int], AlternatingCycle]

    def cycles(self) -> list[AlternatingCycle]:
        return [self.ladders[k] for k in sorted(self.ladders)] + [self.wings[k] for k in sorted(self.wings)]


# oracle ----------------------------------------------------------------------


def minimum_antiforcing_set(
    g: PolyominoGraph, M: Matching | int, max_size: int = DEFAULT_ANTIFORCING_ORACLE_LIMIT
) -> list[int]:
    """Smallest set of non-matching edges whose removal makes M unique."""
    M = _as_matching(g, M)
    outside = [e for e in range(g.num_edges) if e not in M]
    if len(outside) > max_size:
        raise SizeLimitExceeded(
            f"anti-forcing oracle limited to |E\\M| <= {max_size}, got {len(outside)}"
        )
    for k in range(len(outside) + 1):
        for subset in combinations(outside, k):
            removed = 0
            for e in subset:
                removed |= 1 << e
            if not has_alternating_cycle(g, M, forbidden=removed):
                return list(subset)
    raise AssertionError("removing every non-matching edge always isolates M")


def antiforcing_number_oracle(
    g: PolyominoGraph, M: Matching | int, max_size: int = DEFAULT_ANTIFORCING_ORACLE_LIMIT
) -> int:
    return len(minimum_antiforcing_set(g, M, max_size))


# compatible-set route --------------------------------------------------------


def _max_compatible(cycles: list[AlternatingCycle], M: Matching | int) -> list[int]:
    adj = adjacency_from_pairs(len(cycles), lambda i, j: are_compatible(cycles[i], cycles[j], M))
    return max_clique(adj)


def max_compatible_set(
    g: PolyominoGraph, M: Matching | int, max_edges: int = DEFAULT_CYCLE_EDGE_LIMIT
) -> CompatibleSet:
    M = _as_matching(g, M)
    cycles = alternating_cycles(g, M, max_edges=max_edges)
    chosen = _max_compatible(cycles, M)
    return CompatibleSet(tuple(cycles[i] for i in chosen), M)


def antiforcing_number_compat(
    g: PolyominoGraph, M: Matching | int, max_edges: int = DEFAULT_CYCLE_EDGE_LIMIT
) -> int:
    return len(max_compatible_set(g, M, max_edges))


# structural route ------------------------------------------------------------


def _ladder(g: PolyominoGraph, i: int, j: int) -> AlternatingCycle:
    lab = g.label_to_id
    top = [lab[f"u{c}"] for c in range(i, j + 1)]
    bottom = [lab[f"v{c}"] for c in range(j, i - 1, -1)]
    return AlternatingCycle(g, tuple(top + bottom))


def _wing(g: PolyominoGraph, i: int, j: int) -> AlternatingCycle:
    lab = g.label_to_id
    seq = []
    for c in range(i, j, 2):
        seq += [f"u{c}", f"w{c}", f"w{c + 1}", f"u{c + 1}"]
    for c in range(j, i, -2):
        seq += [f"v{c}", f"z{c}", f"z{c - 1}", f"v{c - 1}"]
    return AlternatingCycle(g, tuple(lab[s] for s in seq))


def segment_catalog(g: PolyominoGraph, M: Matching | int) -> SegmentCycleCatalog:
    """All ladder and wing peripheries between matched middle verticals."""
    if not g.is_family:
        raise WrongFamily("segment catalog exists only for G_n and H_n")
    M = _as_matching(g, M)
    lab = g.label_to_id
    matched = []
    for c in range(0, 2 * g.n + 1):
        u, v = f"u{c}", f"v{c}"
        if u in lab and v in lab and g.edge(lab[u], lab[v]) in M:
            matched.append(c)
    ladders = {}
    wings = {}
    for a, i in enumerate(matched):
        for j in matched[a + 1:]:
            if (i + j) % 2 == 0:
                continue
            ladders[(i, j)] = _ladder(g, i, j)
            if i % 2 == 1:
                wings[(i, j)] = _wing(g, i, j)
    return SegmentCycleCatalog(g.faces, ladders, wings)


def structural_compatible_set(g: PolyominoGraph, M: Matching | int) -> CompatibleSet:
    M = _as_matching(g, M)
    squares = [face_cycle(g, f) for f in alternating_squares(g, M)]
    catalog = segment_catalog(g, M)
    candidates = [
        c
        for c in catalog.cycles()
        if not c.is_square
        and c.is_alternating(M)
        and all(are_compatible(c, s, M) for s in squares)
    ]
    chosen = _max_compatible(candidates, M)
    return CompatibleSet(tuple(squares) + tuple(candidates[i] for i in chosen), M)


def antiforcing_number_structural(g: PolyominoGraph, M: Matching | int) -> int:
    return len(structural_compatible_set(g, M))


def antiforcing_number(g: PolyominoGraph, M: Matching | int, method: str = "auto", **kw) -> int:
    """Dispatch to ``auto``, ``structural``, ``compat`` or ``oracle``."""
    if method == "auto":
        method = "structural" if g.is_family else "compat"
    if method == "structural":
        return antiforcing_number_structural(g, M)
    if method == "compat":
        return antiforcing_number_compat(g, M, **kw)
    if method == "oracle":
        return antiforcing_number_oracle(g, M, **kw)
    raise ValueError(f"unknown anti-forcing method {method!r}")


def antiforcing_numbers(g: PolyominoGraph, method: str = "auto", threads: int = 1) -> list[int]:
    masks = all_matching_masks(g)
    if threads > 1 and len(masks) > 1:
        from .parallel import map_matchings

        return map_matchings(_antiforcing_worker, g, masks, method, threads)
    return [antiforcing_number(g, m, method) for m in masks]


def _antiforcing_worker(g: PolyominoGraph, masks: list[int], method: str) -> list[int]:
    return [antiforcing_number(g, m, method) for m in masks]


def antiforcing_polynomial_enum(g: PolyominoGraph, method: str = "auto", threads: int = 1) -> IntPolynomial:
    return polynomial_from_values(antiforcing_numbers(g, method, threads))


antiforcing_spectrum = spectrum


def decomposition_class(g: PolyominoGraph, M: Matching | int) -> str:
    """Class of a G_n matching in the first-vertical split of Af(G_n, x).

    Keys match :func:`matchforge.formulas.af_decomposition_terms`.
    """
    if g.kind != "G":
        raise WrongFamily("the decomposition is defined for G_n only")
    M = _as_matching(g, M)
    lab = g.label_to_id
    verticals = [c for c in range(2 * g.n + 1) if g.edge(lab[f"u{c}"], lab[f"v{c}"]) in M]
    if not verticals or verticals[0] != 0:
        return "no-u0v0"
    if len(verticals) == 1:
        return "no-vertical"
    return f"first-odd-{(verticals[1] - 1) // 2}"
