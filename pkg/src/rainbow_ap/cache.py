"""Append-only text cache of exact counts.

One record per line, tab-separated ``field=value`` pairs::

    key=cyclic:7;r=3;k=3<TAB>count=381<TAB>method=Formula<TAB>version=0.1.0<TAB>timestamp=...

Records for one key may come from different methods (or merged files); they
must all carry the same count.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__

FIELDS = ("key", "count", "method", "version", "timestamp")


class CacheIntegrityError(RuntimeError):
    pass


@dataclass(frozen=True)
class CacheRecord:
    key: str
    count: int
    method: str
    version: str
    timestamp: str

    def to_line(self) -> str:
        return "\t".join(f"{f}={v}" for f, v in zip(FIELDS, (
            self.key, self.count, self.method, self.version, self.timestamp)))

    @classmethod
    def from_line(cls, line: str) -> CacheRecord:
        fields = dict(part.partition("=")[::2] for part in line.rstrip("\n").split("\t"))
        if set(fields) != set(FIELDS):
            raise CacheIntegrityError(f"malformed cache record: {line!r}")
        try:
            count = int(fields["count"])
        except ValueError:
            raise CacheIntegrityError(f"non-integer count in record: {line!r}") from None
        return cls(fields["key"], count, fields["method"], fields["version"], fields["timestamp"])


def job_key(structure_key: str, r: int, k: int, exact: int | None = None) -> str:
    key = f"{structure_key};r={r};k={k}"
    if exact is not None:
        key += f";exact={exact}"
    return key


class Cache:
    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._records: dict[str, list[CacheRecord]] = {}
        if self.path.exists():
            with self.path.open() as fh:
                for line in fh:
                    if line.strip() and not line.startswith("#"):
                        self._add(CacheRecord.from_line(line))

    def _add(self, rec: CacheRecord) -> None:
        prior = self._records.setdefault(rec.key, [])
        for old in prior:
            if old.count != rec.count:
                raise CacheIntegrityError(
                    f"{rec.key}: {old.method} gave {old.count} but {rec.method} gave {rec.count}")
        prior.append(rec)

    def lookup(self, key: str) -> CacheRecord | None:
        recs = self._records.get(key)
        return recs[0] if recs else None

    def records(self, key: str) -> list[CacheRecord]:
        return list(self._records.get(key, ()))

    def store(self, key: str, count: int, method: str) -> CacheRecord:
        rec = CacheRecord(key, count, method, __version__,
                          datetime.now(timezone.utc).isoformat(timespec="seconds"))
        with self._lock:
            self._add(rec)
            with self.path.open("a") as fh:
                fh.write(rec.to_line() + "\n")
        return rec
