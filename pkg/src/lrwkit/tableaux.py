"""Semi-standard skew tableaux, ballot words, and Littlewood-Richardson counts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .partitions import Partition, contains, size


@dataclass(frozen=True)
class SkewShape:
    """A skew Young diagram outer/inner; inner must fit inside outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        if not contains(self.outer, self.inner):
            raise ValueError(
                f"inner {list(self.inner)} does not fit inside outer {list(self.outer)}"
            )

    def row_span(self, i: int) -> tuple[int, int]:
        """Half-open column range of the cells in row i."""
        lo = self.inner[i] if i < len(self.inner) else 0
        return lo, self.outer[i]

    def cell_count(self) -> int:
        return size(self.outer) - size(self.inner)


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape, weakly increasing in rows, strict in columns."""

    shape: SkewShape
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "entries", tuple(tuple(int(v) for v in row) for row in self.entries)
        )
        outer = self.shape.outer
        if len(self.entries) != len(outer):
            raise ValueError(
                f"expected {len(outer)} rows of entries, got {len(self.entries)}"
            )
        for i, row in enumerate(self.entries):
            lo, hi = self.shape.row_span(i)
            if len(row) != hi - lo:
                raise ValueError(f"row {i} must have {hi - lo} entries, got {len(row)}")
            if any(v < 1 for v in row):
                raise ValueError(f"entries must be positive: row {i} = {row}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i} is not weakly increasing: {row}")
        for i in range(1, len(self.entries)):
            lo, hi = self.shape.row_span(i)
            alo, ahi = self.shape.row_span(i - 1)
            for j in range(lo, hi):
                if alo <= j < ahi:
                    if self.entries[i][j - lo] <= self.entries[i - 1][j - alo]:
                        raise ValueError(
                            f"column {j} is not strictly increasing between "
                            f"rows {i - 1} and {i}"
                        )


def reverse_row_word(t: SkewTableau) -> tuple[int, ...]:
    """Entries of each row read right to left, top row first."""
    word: list[int] = []
    for row in t.entries:
        word.extend(reversed(row))
    return tuple(word)


def is_ballot(seq: Sequence[int]) -> bool:
    """True iff in every prefix, i+1 never outruns i, for every value i >= 1."""
    counts: dict[int, int] = {}
    for v in seq:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def content(t: SkewTableau) -> Partition:
    """Occurrence counts of 1, 2, ... as a partition.

    Raises ValueError when the counts are not weakly decreasing (guaranteed not
    to happen when the reverse row word of t is a ballot sequence).
    """
    counts: dict[int, int] = {}
    top = 0
    for row in t.entries:
        for v in row:
            counts[v] = counts.get(v, 0) + 1
            top = max(top, v)
    vec = [counts.get(v, 0) for v in range(1, top + 1)]
    if any(a < b for a, b in zip(vec, vec[1:])):
        raise ValueError(f"content {vec} is not a partition")
    return Partition(vec)


def _ballot_fillings(
    shape: SkewShape, cap: Partition | None
) -> list[tuple[tuple[int, ...], ...]]:
    """Fillings whose reverse row word is ballot, optionally with capped content.

    Cells are filled in reverse-row-word order so the ballot condition can be
    enforced on every prefix; ballot also bounds the entry in row i by i+1,
    which keeps the search finite without further assumptions.
    """
    nrows = len(shape.outer)
    spans = [shape.row_span(i) for i in range(nrows)]
    cells = [
        (i, j) for i in range(nrows) for j in range(spans[i][1] - 1, spans[i][0] - 1, -1)
    ]
    if cap is not None and sum(cap) != len(cells):
        return []
    entries = [[0] * (hi - lo) for lo, hi in spans]
    counts = [0] * (nrows + 2)
    results: list[tuple[tuple[int, ...], ...]] = []

    def place(idx: int) -> None:
        if idx == len(cells):
            results.append(tuple(tuple(row) for row in entries))
            return
        i, j = cells[idx]
        lo, hi = spans[i]
        hi_val = i + 1
        if j + 1 < hi:
            hi_val = min(hi_val, entries[i][j + 1 - lo])
        lo_val = 1
        if i > 0:
            alo, ahi = spans[i - 1]
            if alo <= j < ahi:
                lo_val = entries[i - 1][j - alo] + 1
        for v in range(lo_val, hi_val + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if cap is not None and counts[v] >= (cap[v - 1] if v <= len(cap) else 0):
                continue
            entries[i][j - lo] = v
            counts[v] += 1
            place(idx + 1)
            counts[v] -= 1

    place(0)
    results.sort()
    return results


def enumerate_lr_tableaux(shape: SkewShape) -> list[SkewTableau]:
    """All semi-standard tableaux of the shape whose reverse row word is ballot.

    The list is sorted row by row, lexicographically on entries, so output
    order is reproducible.
    """
    return [SkewTableau(shape, rows) for rows in _ballot_fillings(shape, None)]


@lru_cache(maxsize=None)
def _lr_count(lam: Partition, mu: Partition, nu: Partition) -> int:
    return len(_ballot_fillings(SkewShape(lam, mu), nu))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: ballot tableaux of shape lam/mu, content nu."""
    if size(lam) != size(mu) + size(nu):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    return _lr_count(lam, mu, nu)
