"""On-disk JSON result cache keyed by graph identity and command."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from pathlib import Path

from .polyomino import PolyominoGraph

ENV_VAR = "MATCHFORGE_CACHE"


def graph_key(g: PolyominoGraph) -> str:
    if g.is_family and g.n is not None:
        return f"{g.kind}:{g.n}"
    digest = hashlib.sha256(json.dumps(g.canonical_form(), sort_keys=True).encode()).hexdigest()
    return f"cells:{digest[:32]}"


def record_key(g: PolyominoGraph, command: str, method: str) -> str:
    return f"{graph_key(g)}:{command}:{method}"


def encode(payload) -> str:
    """Canonical serialisation used both for storage and byte comparison."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


class ResultCache:
    """A flat JSON object mapping record keys to ``{"payload", "stored_at"}``.

    Writes go through a temporary file and :func:`os.replace`, so a crash never
    leaves a half-written cache behind.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._data: dict[str, dict] | None = None

    @classmethod
    def from_env(cls, explicit: str | None = None) -> ResultCache | None:
        path = explicit or os.environ.get(ENV_VAR)
        return cls(path) if path else None

    def _load(self) -> dict[str, dict]:
        if self._data is None:
            try:
                self._data = json.loads(self.path.read_text())
            except FileNotFoundError:
                self._data = {}
        return self._data

    def get(self, key: str):
        rec = self._load().get(key)
        return None if rec is None else rec["payload"]

    def put(self, key: str, payload) -> None:
        data = self._load()
        data[key] = {"payload": json.loads(json.dumps(payload)), "stored_at": time.time()}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".matchforge-")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, indent=1)
        os.replace(tmp, self.path)

    def __contains__(self, key: str) -> bool:
        return key in self._load()

    def __len__(self) -> int:
        return len(self._load())

    def fetch(self, key: str, compute, self_test: bool = False):
        """Return the cached payload, computing and storing it on a miss.

        With ``self_test`` a hit is recomputed and must serialise to the same
        bytes; a mismatch raises ``AssertionError``.
        """
        hit = self.get(key)
        if hit is None:
            payload = compute()
            self.put(key, payload)
            return payload
        if self_test:
            fresh = compute()
            if encode(fresh) != encode(hit):
                raise AssertionError(f"cache entry {key} differs from recomputation")
        return hit
