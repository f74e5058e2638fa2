"""Exact maximum clique / independent set on small graphs given as bitmasks.

``adj[i]`` is an int whose bit ``j`` is set when vertices ``i`` and ``j`` are
adjacent. The search is a greedy-colouring branch and bound; results are
deterministic for a fixed input.
"""

from __future__ import annotations

from typing import Sequence


def _color_sort(P: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = P
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~low & ~adj[v]
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(adj: Sequence[int]) -> list[int]:
    """Vertices of one maximum clique, sorted."""
    n = len(adj)
    if n == 0:
        return []
    best: list[int] = []
    current: list[int] = []

    def expand(P: int) -> None:
        nonlocal best
        order, bounds = _color_sort(P, adj)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + bounds[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            sub = P & adj[v]
            if sub:
                expand(sub)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            P &= ~(1 << v)

    expand((1 << n) - 1)
    return sorted(best)


def max_independent_set(conflict: Sequence[int]) -> list[int]:
    """Maximum set of pairwise non-conflicting vertices, sorted."""
    n = len(conflict)
    full = (1 << n) - 1
    complement = [full & ~conflict[i] & ~(1 << i) for i in range(n)]
    return max_clique(complement)


def adjacency_from_pairs(n: int, pred) -> list[int]:
    """Bitmask adjacency for ``n`` items where ``pred(i, j)`` marks an edge."""
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if pred(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj
