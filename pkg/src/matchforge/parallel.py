"""Order-preserving fan-out of per-matching work across processes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable


def map_matchings(worker: Callable, g, masks: list[int], method: str, threads: int) -> list:
    """Split ``masks`` into contiguous chunks, run ``worker(g, chunk, method)``
    in a process pool and concatenate in input order."""
    chunk = max(1, -(-len(masks) // (threads * 4)))
    chunks = [masks[i:i + chunk] for i in range(0, len(masks), chunk)]
    out: list = []
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(worker, [g] * len(chunks), chunks, [method] * len(chunks)):
            out.extend(part)
    return out
