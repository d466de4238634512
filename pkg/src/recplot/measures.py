"""Exact word frequencies for the fixed point, as rational numbers.

The frequency vector of length-2 words is the normalized eigenvector of
an integer transfer matrix: entry (ab, cd) counts how often ab starts in
the first q positions of the image of cd, where q is the image length.
Frequencies of longer words follow by pushing that vector through a
power of the substitution, and everything stays in exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .language import _require_language, allowed_words
from .patterns import InnerLinePattern
from .substitution import Substitution

__all__ = [
    "CylinderMeasureTable",
    "MeasureError",
    "PairCountMatrix",
    "PatternNotAllowedError",
    "cylinder_measures",
    "pair_matrix",
    "pair_measures",
    "pattern_density",
]


class MeasureError(ValueError):
    """An exact frequency computation failed a consistency check."""


class PatternNotAllowedError(MeasureError):
    """A density was requested for a pattern whose words never occur."""


@dataclass(frozen=True)
class PairCountMatrix:
    """Counts of each allowed pair in the first q windows of pair images.

    ``rows[r][c]`` counts ``words[r]`` starting at positions 0..q-1 of
    the image of ``words[c]``.  Every column sums to q, since those q
    positions each start exactly one pair.
    """

    words: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def column_sums(self) -> tuple[int, ...]:
        size = len(self.words)
        return tuple(sum(self.rows[r][c] for r in range(size)) for c in range(size))


@lru_cache(maxsize=None)
def pair_matrix(sub: Substitution) -> PairCountMatrix:
    words = allowed_words(sub, 2).words
    q = sub.length
    columns = []
    for source in words:
        window = sub.apply(source)[: q + 1]
        counts = {word: 0 for word in words}
        for i in range(q):
            counts[window[i : i + 2]] += 1
        columns.append(counts)
    rows = tuple(tuple(columns[c][words[r]] for c in range(len(words))) for r in range(len(words)))
    matrix = PairCountMatrix(words, rows)
    if matrix.column_sums() != (q,) * len(words):
        raise MeasureError("pair transfer matrix columns must sum to the image length")
    return matrix


def _nullspace_vector(matrix: list[list[int]]) -> list[Fraction]:
    """The solution direction of an integer system with a 1-dim nullspace.

    Fraction-free (Bareiss) elimination: every interior division is exact
    over the integers, and a nonzero remainder means the arithmetic went
    wrong rather than a rounding issue, so it is checked.
    """
    size = len(matrix)
    rows = [list(row) for row in matrix]
    pivot_cols: list[int] = []
    rank = 0
    previous = 1
    for col in range(size):
        pivot_row = next((r for r in range(rank, size) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        for r in range(rank + 1, size):
            for c in range(col + 1, size):
                numerator = rows[r][c] * rows[rank][col] - rows[r][col] * rows[rank][c]
                quotient, remainder = divmod(numerator, previous)
                if remainder:
                    raise MeasureError("inexact division during integer elimination")
                rows[r][c] = quotient
            rows[r][col] = 0
        previous = rows[rank][col]
        pivot_cols.append(col)
        rank += 1
    if size - rank != 1:
        raise MeasureError(
            f"expected a one dimensional frequency solution, found {size - rank} free directions"
        )
    free_col = next(c for c in range(size) if c not in pivot_cols)
    solution = [Fraction(0)] * size
    solution[free_col] = Fraction(1)
    for k in reversed(range(rank)):
        col = pivot_cols[k]
        trailing = sum(
            (Fraction(rows[k][c]) * solution[c] for c in range(col + 1, size)),
            Fraction(0),
        )
        solution[col] = -trailing / rows[k][col]
    return solution


@dataclass(frozen=True)
class CylinderMeasureTable:
    """Exact frequency of every allowed word of one length."""

    length: int
    values: Mapping[str, Fraction]

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(self.values)

    def __contains__(self, word: str) -> bool:
        return word in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, word: str) -> Fraction:
        try:
            return self.values[word]
        except KeyError:
            raise PatternNotAllowedError(
                f"{word!r} does not occur in the fixed point"
            ) from None

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))


@lru_cache(maxsize=None)
def pair_measures(sub: Substitution) -> CylinderMeasureTable:
    """Frequencies of the allowed pairs: the fixed direction of the transfer matrix."""
    matrix = pair_matrix(sub)
    q = sub.length
    size = len(matrix.words)
    shifted = [
        [matrix.rows[r][c] - (q if r == c else 0) for c in range(size)] for r in range(size)
    ]
    direction = _nullspace_vector(shifted)
    total = sum(direction, Fraction(0))
    if total == 0:
        raise MeasureError("frequency direction sums to zero")
    vector = [value / total for value in direction]
    for r in range(size):
        image = sum((Fraction(matrix.rows[r][c]) * vector[c] for c in range(size)), Fraction(0))
        if image != q * vector[r]:
            raise MeasureError("pair frequencies fail the exact eigenvector identity")
    if any(value <= 0 for value in vector):
        raise MeasureError("pair frequencies must all be positive")
    values = {word: vector[i] for i, word in enumerate(matrix.words)}
    return CylinderMeasureTable(2, MappingProxyType(values))


@lru_cache(maxsize=None)
def cylinder_measures(sub: Substitution, length: int) -> CylinderMeasureTable:
    """Exact frequencies of all allowed words of the given length.

    For lengths beyond 2: pick the smallest power p with q**p > length-2,
    so a word starting inside a level-p block reaches at most one block
    further.  Summing pair frequencies against window counts over the
    q**p start offsets gives the frequency of each word exactly.
    """
    _require_language(sub)
    if length < 1:
        raise MeasureError("word length must be at least 1")
    pairs = pair_measures(sub)
    if length == 2:
        return pairs
    if length == 1:
        zero = sum((pairs[w] for w in pairs if w.startswith("0")), Fraction(0))
        values = {"0": zero, "1": 1 - zero}
        return CylinderMeasureTable(1, MappingProxyType(values))
    q = sub.length
    power = 1
    while q**power <= length - 2:
        power += 1
    offsets = q**power
    span = offsets + length - 1
    accumulated: dict[str, Fraction] = {}
    for source in pairs:
        window = source
        for _ in range(power):
            window = sub.apply(window)
        window = window[:span]
        counts: dict[str, int] = {}
        for i in range(offsets):
            piece = window[i : i + length]
            counts[piece] = counts.get(piece, 0) + 1
        weight = pairs[source]
        for piece, count in counts.items():
            accumulated[piece] = accumulated.get(piece, Fraction(0)) + weight * count
    scale = Fraction(1, offsets)
    values = {word: scale * accumulated[word] for word in sorted(accumulated)}
    table = CylinderMeasureTable(length, MappingProxyType(values))
    if table.total() != 1:
        raise MeasureError("word frequencies must sum to one")
    if set(values) != set(allowed_words(sub, length).words):
        raise MeasureError("frequency support must equal the allowed word set")
    if any(value <= 0 for value in values.values()):
        raise MeasureError("allowed words must have positive frequency")
    return table


def pattern_density(sub: Substitution, pattern: InnerLinePattern) -> Fraction:
    """Planar density of line starts carrying this pattern.

    The two sides of the line are read independently, so the density is
    the product of the frequencies of the two pattern words.
    """
    table = cylinder_measures(sub, len(pattern) + 2)
    straight, flipped = pattern.words()
    for word in (straight, flipped):
        if word not in table:
            raise PatternNotAllowedError(
                f"pattern {pattern} needs {word!r}, which never occurs"
            )
    return table[straight] * table[flipped]
