"""Append-only on-disk cache of invariant values keyed by canonical graph form."""
from __future__ import annotations

import json
import logging
import os
from typing import Optional

log = logging.getLogger(__name__)


class ResultCache:
    """JSON-lines file of ``{"form", "invariant", "value"}`` records.

    Unreadable lines and keys recorded with conflicting values are dropped
    on load, so those values are recomputed.  Each write appends one line.
    """

    def __init__(self, path: str):
        self.path = path
        self._data: dict[tuple[bytes, str], int] = {}
        self.ignored = 0
        if os.path.exists(path):
            self._load()

    def _load(self) -> None:
        bad: set[tuple[bytes, str]] = set()
        with open(self.path, encoding="utf-8", errors="replace") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    key = (rec["form"].encode("ascii"), str(rec["invariant"]))
                    value = rec["value"]
                    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                        raise ValueError("value must be a non-negative integer")
                except (ValueError, KeyError, TypeError, AttributeError, UnicodeEncodeError) as exc:
                    log.warning("%s:%d: ignoring corrupt cache entry (%s)", self.path, lineno, exc)
                    self.ignored += 1
                    continue
                if key in self._data and self._data[key] != value:
                    bad.add(key)
                self._data[key] = value
        for key in bad:
            log.warning("ignoring conflicting cache entries for %s", key)
            self.ignored += 1
            del self._data[key]

    def get(self, key: tuple[bytes, str]) -> Optional[int]:
        return self._data.get(key)

    def put(self, key: tuple[bytes, str], value: int) -> None:
        if self._data.get(key) == value:
            return
        self._data[key] = value
        line = json.dumps({"form": key[0].decode("ascii"), "invariant": key[1], "value": value})
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")

    def __len__(self) -> int:
        return len(self._data)
