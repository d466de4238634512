"""Uniform binary substitutions on the alphabet {0, 1}.

A substitution maps each letter to an image word of one fixed length (at
least 2).  After normalization the image of 0 starts with 0, so iterating
from the letter 0 converges to a one sided fixed point.  Everything else
in this package analyzes the symbolic recurrence plot of that fixed
point, where positions i and j are linked exactly when the symbols at i
and j agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

__all__ = [
    "CaseLabel",
    "Classification",
    "CommonAffixes",
    "DEFAULT_PREFIX_CAP",
    "FLIP",
    "Normalization",
    "SequencePrefix",
    "Substitution",
    "SubstitutionError",
    "abelianization",
    "classify",
    "common_affixes",
    "fixed_point_prefix",
    "is_primitive",
    "normalize",
    "parse_substitution",
]

FLIP = str.maketrans("01", "10")

#: Hard cap on generated prefix length (symbols), overridable per call.
DEFAULT_PREFIX_CAP = 1 << 26


class SubstitutionError(ValueError):
    """Malformed substitution text or an operation outside its domain."""


@dataclass(frozen=True)
class Substitution:
    """A length-preserving map of each binary letter to a binary word."""

    image0: str
    image1: str

    def __post_init__(self) -> None:
        for image in (self.image0, self.image1):
            if not image:
                raise SubstitutionError("empty image: both letters need a nonempty image")
            if set(image) - {"0", "1"}:
                raise SubstitutionError(f"non-binary letter in image {image!r}")
        if len(self.image0) != len(self.image1):
            raise SubstitutionError(
                "image length mismatch: "
                f"{len(self.image0)} letters for 0 vs {len(self.image1)} for 1"
            )
        if len(self.image0) < 2:
            raise SubstitutionError("image length must be at least 2")

    @property
    def length(self) -> int:
        """The common image length."""
        return len(self.image0)

    @property
    def is_injective(self) -> bool:
        return self.image0 != self.image1

    def image(self, letter: str) -> str:
        if letter == "0":
            return self.image0
        if letter == "1":
            return self.image1
        raise SubstitutionError(f"not a binary letter: {letter!r}")

    def apply(self, word: str) -> str:
        """Replace every letter of ``word`` by its image."""
        return word.translate(_translation(self))

    def __str__(self) -> str:
        return f"0->{self.image0};1->{self.image1}"


@lru_cache(maxsize=None)
def _translation(sub: Substitution) -> dict[int, str]:
    return str.maketrans({"0": sub.image0, "1": sub.image1})


_TEXT_FORM = re.compile(r"^0->([01]+);1->([01]+)$")
_LOOSE_FORM = re.compile(r"^0->([^;]*);1->(.*)$")


def parse_substitution(text: str) -> Substitution:
    """Parse the textual form ``0->W;1->W`` (whitespace ignored anywhere)."""
    compact = "".join(text.split())
    match = _TEXT_FORM.match(compact)
    if match is None:
        loose = _LOOSE_FORM.match(compact)
        if loose is None:
            raise SubstitutionError("substitution text must look like '0->01;1->10'")
        left, right = loose.group(1), loose.group(2)
        if not left or not right:
            raise SubstitutionError("empty image: both letters need a nonempty image")
        if set(left + right) - {"0", "1"}:
            raise SubstitutionError(f"non-binary letter in substitution {compact!r}")
        raise SubstitutionError("substitution text must look like '0->01;1->10'")
    return Substitution(match.group(1), match.group(2))


@dataclass(frozen=True)
class Normalization:
    """A substitution rewritten so that the image of 0 starts with 0."""

    substitution: Substitution
    letters_swapped: bool = False
    squared: bool = False

    @property
    def flags(self) -> tuple[str, ...]:
        out = []
        if self.letters_swapped:
            out.append("letters-swapped")
        if self.squared:
            out.append("squared")
        return tuple(out)


def normalize(sub: Substitution) -> Normalization:
    """Return an equivalent substitution whose image of 0 starts with 0.

    If the image of 0 already starts with 0 the input is returned as is.
    If both images start with 1, the letters are relabeled (0 and 1
    exchanged throughout), which complements both images and swaps their
    roles; the recurrence plot is unchanged by a global relabeling.
    Otherwise the substitution has no one sided fixed point at all and
    the square is returned, whose fixed point is the original map's
    period-2 point starting with 0.
    """
    if sub.image0.startswith("0"):
        return Normalization(sub)
    if sub.image1.startswith("1"):
        swapped = Substitution(sub.image1.translate(FLIP), sub.image0.translate(FLIP))
        return Normalization(swapped, letters_swapped=True)
    squared = Substitution(sub.apply(sub.image0), sub.apply(sub.image1))
    return Normalization(squared, squared=True)


class CaseLabel(str, Enum):
    """The six mutually exclusive shapes a normalized substitution can take."""

    EQUAL = "equal-images"
    ODD_ALTERNATING = "odd-alternating"
    ALL_ZEROS = "all-zeros"
    ZERO_THEN_ONES = "zero-then-ones"
    NON_PRIMITIVE = "non-primitive"
    PRIMITIVE_APERIODIC = "primitive-aperiodic"


#: Labels whose fixed point is (eventually) periodic under the shift.
PERIODIC_LABELS = frozenset(
    {CaseLabel.EQUAL, CaseLabel.ODD_ALTERNATING, CaseLabel.ALL_ZEROS, CaseLabel.ZERO_THEN_ONES}
)

PERIODIC_VERDICT = (
    "fixed point is (eventually) shift periodic: "
    "no finite diagonal lines, infinitely many infinite lines"
)


@dataclass(frozen=True)
class Classification:
    label: CaseLabel
    verdict: str | None = field(default=None)


def classify(sub: Substitution) -> Classification:
    """Classify a normalized substitution into one of the six case labels.

    The first four labels have (eventually) shift periodic fixed points
    and carry a verdict string saying so.  The remaining two split the
    aperiodic world by primitivity.
    """
    if not sub.image0.startswith("0"):
        raise SubstitutionError("classify expects a normalized substitution")
    q = sub.length
    im0, im1 = sub.image0, sub.image1
    if im0 == im1:
        label = CaseLabel.EQUAL
    elif q % 2 == 1 and im0 == "01" * (q // 2) + "0" and im1 == "10" * (q // 2) + "1":
        label = CaseLabel.ODD_ALTERNATING
    elif im0 == "0" * q:
        label = CaseLabel.ALL_ZEROS
    elif im0 == "0" + "1" * (q - 1) and im1 == "1" * q:
        label = CaseLabel.ZERO_THEN_ONES
    elif im1 == "1" * q:
        # image0 here starts with 0, is not all zeros and not 01^(q-1),
        # so it contains a 1 and at least two 0s: the non-primitive case.
        label = CaseLabel.NON_PRIMITIVE
    else:
        label = CaseLabel.PRIMITIVE_APERIODIC
    verdict = PERIODIC_VERDICT if label in PERIODIC_LABELS else None
    return Classification(label, verdict)


@dataclass(frozen=True)
class CommonAffixes:
    """Lengths of the longest common prefix and suffix of the two images."""

    prefix_len: int
    suffix_len: int

    @property
    def total(self) -> int:
        return self.prefix_len + self.suffix_len


def common_affixes(sub: Substitution) -> CommonAffixes:
    if not sub.is_injective:
        raise SubstitutionError("common affixes are undefined for equal images")
    im0, im1 = sub.image0, sub.image1
    prefix = 0
    while im0[prefix] == im1[prefix]:
        prefix += 1
    suffix = 0
    while im0[-1 - suffix] == im1[-1 - suffix]:
        suffix += 1
    return CommonAffixes(prefix, suffix)


@dataclass(frozen=True)
class SequencePrefix:
    """A prefix of the one sided fixed point, with its generating map."""

    symbols: str
    generator: Substitution

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def __str__(self) -> str:
        return self.symbols


def fixed_point_prefix(sub: Substitution, n: int, cap: int = DEFAULT_PREFIX_CAP) -> SequencePrefix:
    """First ``n`` symbols of the fixed point starting with 0."""
    if not sub.image0.startswith("0"):
        raise SubstitutionError("no fixed point from 0: normalize the substitution first")
    if n < 0:
        raise SubstitutionError("prefix length must be nonnegative")
    if n > cap:
        raise SubstitutionError(f"requested prefix of {n} symbols exceeds the cap of {cap}")
    word = "0"
    while len(word) < n:
        word = sub.apply(word)
    return SequencePrefix(word[:n], sub)


def abelianization(sub: Substitution) -> tuple[tuple[int, int], tuple[int, int]]:
    """Letter-count matrix; entry (r, c) counts letter r in the image of c."""
    return (
        (sub.image0.count("0"), sub.image1.count("0")),
        (sub.image0.count("1"), sub.image1.count("1")),
    )


def is_primitive(sub: Substitution) -> bool:
    """True when the square of the letter-count matrix is entrywise positive.

    For a 2x2 nonnegative integer matrix the square already decides
    primitivity, so no higher power is needed.
    """
    m = abelianization(sub)
    square = [
        [sum(m[r][t] * m[t][c] for t in range(2)) for c in range(2)]
        for r in range(2)
    ]
    return all(square[r][c] > 0 for r in range(2) for c in range(2))
