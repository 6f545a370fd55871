"""On-disk cache of weight systems, one canonical JSON file per (type, hw)."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from orbitbound.irrep import HighestWeight, WeightSystem

CACHE_ENV = "ORBITBOUND_CACHE"
CACHE_FORMAT = 1


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "orbitbound"


def cache_key(hw: HighestWeight) -> str:
    blob = json.dumps({"format": CACHE_FORMAT, "type": str(hw.type), "hw": list(hw.coefficients)},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def canonical_dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


class WeightCache:
    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path(self, hw: HighestWeight) -> Path:
        return self.directory / f"{cache_key(hw)}.json"

    def load(self, hw: HighestWeight) -> WeightSystem | None:
        p = self.path(hw)
        try:
            doc = json.loads(p.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        if doc.get("type") != str(hw.type) or doc.get("hw") != list(hw.coefficients):
            return None
        try:
            return WeightSystem.from_json(doc)
        except (KeyError, TypeError, ValueError):
            return None

    def store(self, ws: WeightSystem) -> None:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(canonical_dumps(ws.to_json()))
            os.replace(tmp, self.path(ws.hw))
        except OSError:
            # a read-only or missing cache directory only costs recomputation
            pass
