"""Forcing numbers, resonant sets, Clar number and the forcing polynomial."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .cliques import adjacency_from_pairs, max_independent_set
from .errors import NoPerfectMatching, SizeLimitExceeded, WrongFamily
from .matching import (
    DEFAULT_CYCLE_EDGE_LIMIT,
    Matching,
    all_matching_masks,
    alternating_cycles,
    alternating_squares,
)
from .polynomial import IntPolynomial
from .polyomino import Face, PolyominoGraph

DEFAULT_FORCING_ORACLE_LIMIT = 13


def _as_matching(g: PolyominoGraph, M: Matching | int) -> Matching:
    return M if isinstance(M, Matching) else Matching(g, int(M))


@dataclass(frozen=True)
class ResonantSet:
    faces: tuple[Face, ...]
    matching: Matching = field(repr=False)

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class SpectrumReport:
    """Distribution of exponents of a forcing-type polynomial.

    ``support`` holds the positive exponents; a polynomial equal to 1 (unique
    perfect matching or null graph) has empty support and ``min``/``max`` of
    ``None``.
    """

    counts: dict[int, int]
    min: int | None
    max: int | None
    contiguous: bool

    @property
    def support(self) -> list[int]:
        return sorted(e for e in self.counts if e > 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "counts": [[e, str(c)] for e, c in sorted(self.counts.items())],
            "min": self.min,
            "max": self.max,
            "contiguous": self.contiguous,
        }


def max_resonant_set(g: PolyominoGraph, M: Matching | int) -> ResonantSet:
    """A largest family of pairwise vertex-disjoint M-alternating squares."""
    M = _as_matching(g, M)
    squares = alternating_squares(g, M)
    vmask = [sum(1 << v for v in f.vertices) for f in squares]
    conflict = adjacency_from_pairs(len(squares), lambda i, j: vmask[i] & vmask[j])
    chosen = max_independent_set(conflict)
    return ResonantSet(tuple(squares[i] for i in chosen), M)


def forcing_number_resonant(g: PolyominoGraph, M: Matching | int) -> int:
    """Forcing number of a G_n/H_n matching as its maximum resonant-set size."""
    if not g.is_family:
        raise WrongFamily("resonant-set forcing is only valid for G_n and H_n")
    return len(max_resonant_set(g, M))


def forcing_number_cycles(
    g: PolyominoGraph, M: Matching | int, max_edges: int = DEFAULT_CYCLE_EDGE_LIMIT
) -> int:
    """Maximum number of pairwise vertex-disjoint M-alternating cycles."""
    cycles = alternating_cycles(g, M, max_edges=max_edges)
    conflict = adjacency_from_pairs(len(cycles), lambda i, j: cycles[i].vertex_mask & cycles[j].vertex_mask)
    return len(max_independent_set(conflict))


def minimum_forcing_set(
    g: PolyominoGraph,
    M: Matching | int,
    matchings: Sequence[int] | None = None,
    max_size: int = DEFAULT_FORCING_ORACLE_LIMIT,
) -> list[int]:
    """Smallest ``S`` inside M contained in no other perfect matching.

    Plain iterative deepening over subset sizes, checked against the full list
    of perfect matchings.
    """
    M = _as_matching(g, M)
    if len(M) > max_size:
        raise SizeLimitExceeded(f"forcing oracle limited to |M| <= {max_size}, got {len(M)}")
    if matchings is None:
        matchings = all_matching_masks(g)
    others = [m for m in matchings if m != M.mask]
    edges = M.edges
    for k in range(len(edges) + 1):
        for subset in combinations(edges, k):
            s = 0
            for e in subset:
                s |= 1 << e
            if not any(o & s == s for o in others):
                return list(subset)
    raise AssertionError("M itself is always a forcing set")


def forcing_number_oracle(
    g: PolyominoGraph,
    M: Matching | int,
    matchings: Sequence[int] | None = None,
    max_size: int = DEFAULT_FORCING_ORACLE_LIMIT,
) -> int:
    return len(minimum_forcing_set(g, M, matchings, max_size))


def forcing_number(g: PolyominoGraph, M: Matching | int, method: str = "auto", **kw) -> int:
    """Dispatch to one route: ``auto``, ``resonant``, ``cycles`` or ``oracle``."""
    if method == "auto":
        method = "resonant" if g.is_family else "cycles"
    if method == "resonant":
        return forcing_number_resonant(g, M)
    if method == "cycles":
        return forcing_number_cycles(g, M, **kw)
    if method == "oracle":
        return forcing_number_oracle(g, M, **kw)
    raise ValueError(f"unknown forcing method {method!r}")


def clar_number(g: PolyominoGraph) -> int:
    """Largest resonant set over all perfect matchings."""
    best = -1
    for m in all_matching_masks(g):
        best = max(best, len(max_resonant_set(g, m)))
    if best < 0:
        raise NoPerfectMatching(f"{g!r} has no perfect matching")
    return best


def polynomial_from_values(values) -> IntPolynomial:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    return IntPolynomial.from_terms(counts.items())


def forcing_numbers(g: PolyominoGraph, method: str = "auto", threads: int = 1) -> list[int]:
    """Forcing number of every perfect matching, in enumeration order."""
    masks = all_matching_masks(g)
    if threads > 1 and len(masks) > 1:
        from .parallel import map_matchings

        return map_matchings(_forcing_worker, g, masks, method, threads)
    return [forcing_number(g, m, method) for m in masks]


def _forcing_worker(g: PolyominoGraph, masks: list[int], method: str) -> list[int]:
    return [forcing_number(g, m, method) for m in masks]


def forcing_polynomial_enum(g: PolyominoGraph, method: str = "auto", threads: int = 1) -> IntPolynomial:
    """Sum of ``x**f(M)`` over all perfect matchings."""
    return polynomial_from_values(forcing_numbers(g, method, threads))


def spectrum(p: IntPolynomial) -> SpectrumReport:
    counts = dict(p.terms())
    support = sorted(e for e in counts if e > 0)
    if not support:
        return SpectrumReport(counts, None, None, True)
    lo, hi = support[0], support[-1]
    return SpectrumReport(counts, lo, hi, len(support) == hi - lo + 1)


forcing_spectrum = spectrum


def resonant_faces(g: PolyominoGraph, M: Matching | int) -> list[str]:
    return [f.name for f in max_resonant_set(g, M).faces]

