"""Offline tables of best-known minimum distances d_best(n, k) over F_p.

Snapshot files are CSV without header, one ``p,n,k,d`` record per line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

IMPROVES = "improves"
TIES = "ties"
BELOW = "below"
UNKNOWN = "unknown"


class BktError(ValueError):
    """Malformed snapshot data."""


@dataclass
class BktTable:
    p: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    source: str = ""
    snapshot_date: str | None = None

    def lookup(self, n: int, k: int) -> int | None:
        return self.entries.get((n, k))

    def __len__(self):
        return len(self.entries)

    def check_monotone(self) -> None:
        for (n, k), d in self.entries.items():
            up = self.entries.get((n, k + 1))
            if up is not None and up > d:
                raise BktError(f"d_best({n},{k})={d} < d_best({n},{k + 1})={up}")
            longer = self.entries.get((n + 1, k))
            if longer is not None and longer < d:
                raise BktError(f"d_best({n + 1},{k})={longer} < d_best({n},{k})={d}")

    def to_csv(self) -> str:
        return "".join(f"{self.p},{n},{k},{d}\n" for (n, k), d in sorted(self.entries.items()))


def parse_records(text: str, p: int, origin: str = "<string>") -> dict[tuple[int, int], int]:
    """Records for base field p; records of other fields are skipped."""
    out: dict[tuple[int, int], int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split(",")
        try:
            rp, n, k, d = (int(x) for x in parts)
        except ValueError:
            raise BktError(f"{origin}:{lineno}: expected 'p,n,k,d', got {line!r}") from None
        if min(rp, n, d) < 1 or k < 0 or k > n:
            raise BktError(f"{origin}:{lineno}: invalid parameters {line!r}")
        if rp != p:
            continue
        out[(n, k)] = max(d, out.get((n, k), 0))
    return out


def ingest(paths: str | Path | Iterable[str | Path], p: int,
           snapshot_date: str | None = None) -> BktTable:
    """Load one or more snapshot CSVs; duplicate (n, k) keep the largest d."""
    if isinstance(paths, (str, Path)):
        paths = [paths]
    paths = [Path(x) for x in paths]
    entries: dict[tuple[int, int], int] = {}
    for path in paths:
        for key, d in parse_records(path.read_text(encoding="ascii"), p, str(path)).items():
            entries[key] = max(d, entries.get(key, 0))
    table = BktTable(p, entries, ",".join(x.name for x in paths), snapshot_date)
    table.check_monotone()
    return table


def shipped_snapshot(p: int) -> BktTable:
    """Table built from the best-known columns of the bundled figure snapshots."""
    entries: dict[tuple[int, int], int] = {}
    names = []
    data = resources.files("cyclogrs") / "data"
    for item in sorted(data.iterdir(), key=lambda x: x.name):
        if item.name.endswith(".csv"):
            recs = parse_records(item.read_text(encoding="ascii"), p, item.name)
            if recs:
                names.append(item.name)
            for key, d in recs.items():
                entries[key] = max(d, entries.get(key, 0))
    table = BktTable(p, entries, ",".join(names))
    table.check_monotone()
    return table


def snapshot_path(name: str) -> Path:
    return Path(str(resources.files("cyclogrs") / "data" / name))


def verdict(table: BktTable, n: int, k: int, d_lb: int) -> str:
    best = table.lookup(n, k)
    if best is None:
        return UNKNOWN
    if d_lb > best:
        return IMPROVES
    return TIES if d_lb == best else BELOW
