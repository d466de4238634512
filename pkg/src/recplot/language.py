"""Allowed words of the fixed point and their occurrence residues mod q.

For every word w that occurs in the fixed point we track the set of
residues i mod q at which w starts, where q is the image length.  These
sets drive everything downstream: a length is "fully recognizable" when
every allowed word of that length starts at a single residue, and the
residue sets also decide how a word can be cut into image blocks.

All sets are computed exactly by scanning images of shorter allowed
words, never by sampling a finite prefix.  A word of length at most
k*q + 1 starting at residue i lies inside the image of k+1 consecutive
letters, so scanning the first q start positions of the images of all
allowed (k+1)-words sees every occurrence residue, and nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .substitution import CaseLabel, Substitution, classify, common_affixes

__all__ = [
    "AllowedWordSet",
    "CuttingClass",
    "CuttingError",
    "CuttingReport",
    "LanguageError",
    "RecognizabilityConstant",
    "RecognizabilityError",
    "WordNotAllowedError",
    "allowed_words",
    "classify_cuttings",
    "is_recognizable",
    "recognizability_constant",
]


class LanguageError(ValueError):
    """The substitution is outside the aperiodic regime, or bad input."""


class WordNotAllowedError(LanguageError):
    """A queried word never occurs in the fixed point."""


class RecognizabilityError(LanguageError):
    """No fully recognizable length was found below the sentinel."""


class CuttingError(LanguageError):
    """A block decomposition failed an internal consistency check."""


def _require_language(sub: Substitution) -> None:
    label = classify(sub).label
    if label is not CaseLabel.PRIMITIVE_APERIODIC:
        raise LanguageError(
            f"word analysis needs a primitive aperiodic substitution, got {label.value}"
        )


@lru_cache(maxsize=None)
def _pair_words(sub: Substitution) -> frozenset[str]:
    """All length-2 words of the fixed point.

    Seed with the pairs inside each image (both letters occur, so both
    images do).  A pair straddling two adjacent blocks is the last letter
    of one image followed by the first letter of the next, determined by
    the pair of source letters; closing under that map reaches exactly
    the straddling pairs, since desubstituting any occurrence walks it
    down to a seeded one.  At most four pairs exist, so this stabilizes
    immediately.
    """
    words = {sub.image0[i : i + 2] for i in range(sub.length - 1)}
    words |= {sub.image1[i : i + 2] for i in range(sub.length - 1)}
    while True:
        grown = words | {sub.image(a)[-1] + sub.image(b)[0] for a, b in words}
        if grown == words:
            return frozenset(words)
        words = grown


@lru_cache(maxsize=None)
def _residue_table(sub: Substitution, length: int) -> dict[str, frozenset[int]]:
    q = sub.length
    if length == 1:
        sources: tuple[str, ...] = ("0", "1")
    elif length == 2:
        sources = tuple(sorted(_pair_words(sub)))
    else:
        # smallest k with length <= k*q + 1; the word then fits in k+1 blocks
        blocks = (length - 2) // q + 1
        sources = tuple(sorted(_residue_table(sub, blocks + 1)))
    found: dict[str, set[int]] = {}
    span = length + q - 1
    for source in sources:
        window = sub.apply(source)[:span]
        for i in range(q):
            found.setdefault(window[i : i + length], set()).add(i)
    return {word: frozenset(found[word]) for word in sorted(found)}


@dataclass(frozen=True)
class AllowedWordSet:
    """The allowed words of one length, with their start residues mod q."""

    length: int
    residues: Mapping[str, frozenset[int]]

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(self.residues)

    def __contains__(self, word: str) -> bool:
        return word in self.residues

    def __iter__(self):
        return iter(self.residues)

    def __len__(self) -> int:
        return len(self.residues)

    def residues_of(self, word: str) -> frozenset[int]:
        try:
            return self.residues[word]
        except KeyError:
            raise WordNotAllowedError(
                f"{word!r} does not occur in the fixed point"
            ) from None


def allowed_words(sub: Substitution, length: int) -> AllowedWordSet:
    """Exact set of length-``length`` words of the fixed point."""
    _require_language(sub)
    if length < 1:
        raise LanguageError("word length must be at least 1")
    table = _residue_table(sub, length)
    if length == 1 and tuple(table) != ("0", "1"):
        raise LanguageError("internal: both letters must occur in a primitive fixed point")
    return AllowedWordSet(length, MappingProxyType(table))


def is_recognizable(sub: Substitution, length: int) -> bool:
    """True when every allowed word of this length has a single residue."""
    table = allowed_words(sub, length)
    return all(len(found) == 1 for found in table.residues.values())


@dataclass(frozen=True)
class RecognizabilityConstant:
    """Smallest safe desubstitution length and what blocks shorter ones.

    ``value`` is the larger of the first fully recognizable length (at
    least 3) and one more than the total common affix length, so that
    words of length >= value decompose uniquely into image blocks with
    a forced source letter on each side.  ``non_recognizable`` records,
    for each shorter length, the words with ambiguous residues.
    """

    value: int
    first_fully_recognizable: int
    non_recognizable: Mapping[int, tuple[str, ...]]


@lru_cache(maxsize=None)
def recognizability_constant(sub: Substitution) -> RecognizabilityConstant:
    _require_language(sub)
    q = sub.length
    sentinel = q**3
    ambiguous: dict[int, tuple[str, ...]] = {}
    for length in (1, 2):
        table = _residue_table(sub, length)
        ambiguous[length] = tuple(w for w, found in table.items() if len(found) > 1)
    first = None
    for length in range(3, sentinel + 1):
        table = _residue_table(sub, length)
        bad = tuple(w for w, found in table.items() if len(found) > 1)
        if not bad:
            first = length
            break
        ambiguous[length] = bad
    if first is None:
        raise RecognizabilityError(
            f"every length from 3 to {sentinel} still has words with ambiguous "
            "start residues"
        )
    value = max(first, common_affixes(sub).total + 1)
    return RecognizabilityConstant(value, first, MappingProxyType(ambiguous))


class CuttingClass(str, Enum):
    """How many ways a word can be cut at an image-block boundary."""

    NONE = "none"
    WEAKLY_UNIQUE = "weakly-unique"
    STRONGLY_UNIQUE = "strongly-unique"
    TWO_PLUS = "two-plus"


@dataclass(frozen=True)
class CuttingReport:
    """Block-boundary decompositions a word admits inside the fixed point.

    Each cutting is a tuple (head, block, ..., block, tail): the head
    completes a block begun before the word, the tail begins one ending
    after it, and the interior pieces are whole images.  Head and tail
    are kept even when empty.
    """

    word: str
    classification: CuttingClass
    cuttings: tuple[tuple[str, ...], ...]

    @property
    def cutting(self) -> tuple[str, ...] | None:
        """The decomposition, when there is exactly one."""
        if len(self.cuttings) == 1:
            return self.cuttings[0]
        return None


def _build_cutting(sub: Substitution, word: str, residue: int) -> tuple[str, ...]:
    q = sub.length
    head_len = 0 if residue == 0 else q - residue
    head = word[:head_len]
    rest = word[head_len:]
    full = len(rest) // q
    blocks = tuple(rest[i * q : (i + 1) * q] for i in range(full))
    tail = rest[full * q :]
    if head and not (sub.image0.endswith(head) or sub.image1.endswith(head)):
        raise CuttingError(f"head {head!r} of {word!r} is not an image suffix")
    for block in blocks:
        if block not in (sub.image0, sub.image1):
            raise CuttingError(f"interior piece {block!r} of {word!r} is not an image")
    if tail and not (sub.image0.startswith(tail) or sub.image1.startswith(tail)):
        raise CuttingError(f"tail {tail!r} of {word!r} is not an image prefix")
    return (head, *blocks, tail)


def classify_cuttings(sub: Substitution, word: str) -> CuttingReport:
    """Classify the block-boundary decompositions of an allowed word.

    A start residue p yields a cutting exactly when the word reaches the
    first block boundary, p + len(word) >= q.  Words seen at one residue
    either cut one way or not at all; words with several residues can
    still cut uniquely when only the largest residue crosses a boundary,
    and the cut is forced (strong) when the word ends exactly on it.
    """
    table = allowed_words(sub, len(word))
    residues = sorted(table.residues_of(word), reverse=True)
    q = sub.length
    span = len(word)
    top = residues[0]
    if len(residues) == 1:
        if top + span >= q:
            return CuttingReport(
                word, CuttingClass.STRONGLY_UNIQUE, (_build_cutting(sub, word, top),)
            )
        return CuttingReport(word, CuttingClass.NONE, ())
    second = residues[1]
    if second + span >= q:
        witnesses = (_build_cutting(sub, word, top), _build_cutting(sub, word, second))
        return CuttingReport(word, CuttingClass.TWO_PLUS, witnesses)
    if top + span > q:
        return CuttingReport(
            word, CuttingClass.WEAKLY_UNIQUE, (_build_cutting(sub, word, top),)
        )
    if top + span == q:
        return CuttingReport(
            word, CuttingClass.STRONGLY_UNIQUE, (_build_cutting(sub, word, top),)
        )
    return CuttingReport(word, CuttingClass.NONE, ())
