"""Input checks shared by the estimators and the CLI."""

from __future__ import annotations

from typing import Iterable

from .errors import WrongFamily
from .matching import Matching
from .polyomino import PolyominoGraph, validate


def check_graph(g) -> PolyominoGraph:
    if not isinstance(g, PolyominoGraph):
        raise TypeError(f"expected a PolyominoGraph, got {type(g).__name__}")
    problems = validate(g)
    if problems:
        raise ValueError("invalid polyomino graph: " + "; ".join(f"{p.code}: {p.detail}" for p in problems))
    return g


def check_family(g: PolyominoGraph) -> PolyominoGraph:
    if not g.is_family:
        raise WrongFamily(f"{g!r} is not a G_n or H_n graph")
    return g


def check_n(n, minimum: int = 0) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"n must be >= {minimum}, got {n}")
    return n


def check_matching(g: PolyominoGraph, M) -> Matching:
    """Coerce ``M`` (Matching, edge bitmask or vertex-id pairs) to a perfect
    matching of ``g``."""
    if isinstance(M, Matching):
        if M.graph is not g:
            M = M.transfer(g)
    elif isinstance(M, int):
        if M < 0 or M >> g.num_edges:
            raise ValueError("edge bitmask refers to edges outside the graph")
        M = Matching(g, M)
    elif isinstance(M, Iterable):
        try:
            M = Matching.from_pairs(g, M)
        except KeyError as exc:
            raise ValueError(f"pair {exc.args[0]} is not an edge of the graph") from None
    else:
        raise TypeError(f"cannot interpret {type(M).__name__} as a matching")
    if not M.is_perfect():
        raise ValueError("not a perfect matching of the graph")
    return M
