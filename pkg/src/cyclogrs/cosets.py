"""Minimal cyclotomic cosets of Z_N under multiplication by p."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator

from .galois import FieldSpec


@dataclass(frozen=True)
class CycCoset:
    b: int  # smallest element
    elements: tuple[int, ...]  # sorted

    @property
    def n_b(self) -> int:
        return len(self.elements)

    def __contains__(self, t: int) -> bool:
        return t in self.elements


@functools.lru_cache(maxsize=None)
def _cosets(p: int, N: int) -> tuple[CycCoset, ...]:
    seen = [False] * N
    out = []
    for t in range(N):
        if seen[t]:
            continue
        orbit = []
        x = t
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = x * p % N
        out.append(CycCoset(t, tuple(sorted(orbit))))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _index(p: int, N: int) -> tuple[int, ...]:
    owner = [0] * N
    for i, c in enumerate(_cosets(p, N)):
        for t in c.elements:
            owner[t] = i
    return tuple(owner)


def minimal_cosets(field: FieldSpec) -> list[CycCoset]:
    """All minimal cyclotomic cosets, sorted by representative."""
    return list(_cosets(field.p, field.N))


def coset_of(field: FieldSpec, t: int) -> CycCoset:
    if not 0 <= t < field.N:
        raise ValueError(f"{t} is outside Z_{field.N}")
    return _cosets(field.p, field.N)[_index(field.p, field.N)[t]]


def representatives(field: FieldSpec) -> list[int]:
    return [c.b for c in _cosets(field.p, field.N)]


def union_elements(field: FieldSpec, reps) -> list[int]:
    """Sorted union of the cosets with the given representatives."""
    out = set()
    for b in reps:
        c = coset_of(field, b)
        if c.b != b:
            raise ValueError(f"{b} is not a minimal coset representative (its coset starts at {c.b})")
        out.update(c.elements)
    return sorted(out)


def coset_unions(field: FieldSpec, max_parts: int, include_zero: bool = False) -> Iterator[tuple[int, ...]]:
    """Representative tuples of all unions of 1..max_parts distinct cosets.

    Grouped by number of parts, lexicographic within a group.  The coset {0}
    is left out unless ``include_zero``.
    """
    if max_parts < 1:
        raise ValueError("max_parts must be at least 1")
    reps = [b for b in representatives(field) if include_zero or b != 0]
    for r in range(1, max_parts + 1):
        yield from itertools.combinations(reps, r)
