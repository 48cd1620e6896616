"""On-disk memo of brute-force standard shifted tableau counts.

The cache is one JSON file::

    {"tool_version": "0.1.0", "counts": {"4,2,1": 7, ...}}

keyed by the shape's canonical string.  Only brute-force counts are ever
stored.  A file written by another tool version is ignored as a whole.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

from . import __version__
from .tableaux import DEFAULT_ENUMERATION_BOUND, StrictPartition, count_sst_bruteforce

log = logging.getLogger(__name__)

CACHE_DIR_ENV = "PRYMBN_CACHE_DIR"
CACHE_FILENAME = "sst_counts.json"


def default_cache_path() -> Path:
    """``$PRYMBN_CACHE_DIR/sst_counts.json``, else under the XDG data directory."""
    env = os.environ.get(CACHE_DIR_ENV)
    if env:
        base = Path(env)
    else:
        data_home = os.environ.get("XDG_DATA_HOME") or Path.home() / ".local" / "share"
        base = Path(data_home) / "prymbn"
    return base / CACHE_FILENAME


class CountCache:
    def __init__(
        self,
        path: Union[str, Path, None] = None,
        enabled: bool = True,
        tool_version: str = __version__,
    ):
        self.path = Path(path) if path is not None else default_cache_path()
        self.enabled = enabled
        self.tool_version = tool_version

    def _load(self) -> dict[str, int]:
        if not self.enabled or not self.path.exists():
            return {}
        try:
            data = json.loads(self.path.read_text())
            if data.get("tool_version") != self.tool_version:
                return {}
            counts = data["counts"]
            if not all(isinstance(v, int) for v in counts.values()):
                raise ValueError("non-integer count")
            return dict(counts)
        except (OSError, ValueError, KeyError, TypeError, AttributeError) as exc:
            log.warning("ignoring unreadable cache file %s: %s", self.path, exc)
            return {}

    def get(self, shape: StrictPartition) -> Optional[int]:
        return self._load().get(shape.key())

    def put(self, shape: StrictPartition, count: int) -> None:
        if not self.enabled:
            return
        counts = self._load()
        counts[shape.key()] = int(count)
        payload = json.dumps(
            {"tool_version": self.tool_version, "counts": dict(sorted(counts.items()))},
            indent=1,
        )
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".sst_counts.")
            try:
                with os.fdopen(fd, "w") as fh:
                    fh.write(payload)
                os.replace(tmp, self.path)
            except BaseException:
                os.unlink(tmp)
                raise
        except OSError as exc:
            log.warning("could not write cache file %s: %s", self.path, exc)

    def count(self, shape: StrictPartition, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
        """Brute-force count of ``shape``, served from the cache when possible."""
        hit = self.get(shape)
        if hit is not None:
            return hit
        value = count_sst_bruteforce(shape, bound)
        self.put(shape, value)
        return value


def cache_get(shape: StrictPartition, cache: CountCache) -> Optional[int]:
    return cache.get(shape)


def cache_put(shape: StrictPartition, count: int, cache: CountCache) -> None:
    cache.put(shape, count)
