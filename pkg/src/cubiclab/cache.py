"""On-disk cache of line-bundle cohomology, one JSON object per line.

Each record carries a digest of its own payload. Lines that fail to parse or
whose digest does not match are ignored, so a damaged file only costs a
recomputation.
"""
from __future__ import annotations

import hashlib
import json
import os
import threading
from pathlib import Path
from typing import Dict, Optional, Tuple

from .bbw import CohomTable, Status

Key = Tuple[str, Tuple[int, ...]]


def _digest(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


class JsonlStore:
    """``get``/``put`` store for :func:`cubiclab.bbw.set_store`."""

    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._entries: Dict[Key, CohomTable] = {}
        self.skipped = 0
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8", errors="replace") as fh:
            for line in fh:
                rec = self._decode(line)
                if rec is None:
                    self.skipped += 1
                    continue
                key, table = rec
                self._entries[key] = table

    @staticmethod
    def _decode(line: str) -> Optional[Tuple[Key, CohomTable]]:
        try:
            rec = json.loads(line)
            payload = {k: rec[k] for k in ("space", "weight", "dims", "status")}
            if rec.get("digest") != _digest(payload):
                return None
            dims = {int(k): int(v) for k, v in payload["dims"].items()}
            if any(v < 0 for v in dims.values()):
                return None
            key = (str(payload["space"]), tuple(int(w) for w in payload["weight"]))
            return key, CohomTable(dims, Status(payload["status"]))
        except (ValueError, KeyError, TypeError, AttributeError):
            return None

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, key: Key) -> Optional[CohomTable]:
        return self._entries.get((key[0], tuple(key[1])))

    def put(self, key: Key, table: CohomTable) -> None:
        payload = {"space": key[0], "weight": list(key[1]),
                   "dims": {str(k): v for k, v in table.dims.items()}, "status": table.status.value}
        line = json.dumps({**payload, "digest": _digest(payload)}, sort_keys=True) + "\n"
        with self._lock:
            self._entries[(key[0], tuple(key[1]))] = table
            self.path.parent.mkdir(parents=True, exist_ok=True)
            # one write per record keeps concurrent appenders line-atomic
            fd = os.open(self.path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
            try:
                os.write(fd, line.encode())
            finally:
                os.close(fd)
