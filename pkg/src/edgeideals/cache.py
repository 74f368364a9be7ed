"""Persistent result cache: append-only JSON lines keyed by graph6 and field.

Each record stores the invariants and a digest of the Betti table.  The key
is the literal labelled graph6 string, so isomorphic relabelings are cache
misses by design (no canonicalization happens anywhere in this package).
Unreadable lines are skipped with a warning count rather than failing the
load, and appends go through a single writer.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path


def table_digest(table_json_obj: dict) -> str:
    blob = json.dumps(table_json_obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.records: dict[str, dict] = {}
        self.corrupt_lines = 0
        if self.path.exists():
            with self.path.open() as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                        self.records[rec["key"]] = rec
                    except Exception:
                        self.corrupt_lines += 1

    @staticmethod
    def key(graph6: str, fld: str) -> str:
        return f"{graph6}|{fld}"

    def get(self, graph6: str, fld: str) -> dict | None:
        return self.records.get(self.key(graph6, fld))

    def put(self, graph6: str, fld: str, invariants_obj: dict, betti_digest: str) -> None:
        key = self.key(graph6, fld)
        if key in self.records:
            return
        rec = {"key": key, "invariants": invariants_obj, "betti_digest": betti_digest}
        self.records[key] = rec
        with self.path.open("a") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
