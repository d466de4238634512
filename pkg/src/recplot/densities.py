"""Exact planar densities of maximal diagonal line lengths.

For a primitive aperiodic substitution the set of start positions of
maximal length-L lines has an exact rational planar density.  Short
lengths are summed directly over their line patterns.  Long lengths are
walked down by inverting the substitution action on patterns: each step
divides the density by the square of the image length, and a length
whose walk ever misses the image length-residue has no lines at all.

The supported lengths therefore form finitely many geometric-like
families plus finitely many isolated short lengths, and their counting
ratio inside [1, L] vanishes as L grows.

Non-primitive substitutions (the image of 1 is a block of ones) get a
separate verdict: every length supports lines, all with density zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .language import recognizability_constant
from .measures import pattern_density
from .patterns import (
    InnerLinePattern,
    enumerate_boundary,
    enumerate_inner,
)
from .substitution import (
    FLIP,
    CaseLabel,
    Substitution,
    classify,
    common_affixes,
    fixed_point_prefix,
)

__all__ = [
    "DensityError",
    "DensityFamily",
    "DensityResult",
    "FamilySet",
    "NonPrimitiveReport",
    "PROVENANCE_DIRECT",
    "PROVENANCE_EMPTY_RESIDUE",
    "PROVENANCE_EMPTY_ROOT",
    "PROVENANCE_SCALED",
    "SupportReport",
    "boundary_length_support",
    "density_families",
    "length_support",
    "line_density",
    "nonprimitive_verdict",
]

PROVENANCE_DIRECT = "direct"
PROVENANCE_SCALED = "scaled"
PROVENANCE_EMPTY_RESIDUE = "empty-residue"
PROVENANCE_EMPTY_ROOT = "empty-root"


class DensityError(ValueError):
    """Density requested outside the regime where it is defined."""


def _require_primitive_aperiodic(sub: Substitution) -> None:
    label = classify(sub).label
    if label is CaseLabel.NON_PRIMITIVE:
        raise DensityError(
            "this substitution is non-primitive; use nonprimitive_verdict, "
            "which reports zero-density lines at every length"
        )
    if label is not CaseLabel.PRIMITIVE_APERIODIC:
        raise DensityError(
            f"exact line densities need a primitive aperiodic substitution, got {label.value}"
        )


@dataclass(frozen=True)
class DensityResult:
    """Density of maximal lines of one length, with its derivation route.

    ``provenance`` is "direct" (summed over patterns at this length),
    "scaled" (walked down ``order`` inversion steps to ``root_length``),
    "empty-residue" (the walk hit a length residue no image core has), or
    "empty-root" (the walk landed on a patternless short length).  The
    decomposition lists the patterns at the root length with their own
    densities; for scaled results the value is their sum divided by
    q to the 2*order.
    """

    length: int
    value: Fraction
    provenance: str
    order: int
    root_length: int
    decomposition: tuple[tuple[InnerLinePattern, Fraction], ...]


def _direct_parts(
    sub: Substitution, length: int
) -> tuple[tuple[tuple[InnerLinePattern, Fraction], ...], Fraction]:
    parts = tuple(
        (pattern, pattern_density(sub, pattern)) for pattern in enumerate_inner(sub, length)
    )
    total = sum((density for _, density in parts), Fraction(0))
    return parts, total


@lru_cache(maxsize=None)
def line_density(sub: Substitution, length: int) -> DensityResult:
    """Exact planar density of start positions of maximal length-``length`` lines."""
    _require_primitive_aperiodic(sub)
    if length < 1:
        raise DensityError("line length must be at least 1")
    constant = recognizability_constant(sub).value
    q = sub.length
    affix_total = common_affixes(sub).total
    if length < constant:
        parts, total = _direct_parts(sub, length)
        return DensityResult(length, total, PROVENANCE_DIRECT, 0, length, parts)
    current = length
    order = 0
    while current >= constant:
        if (current - affix_total) % q != 0:
            return DensityResult(
                length, Fraction(0), PROVENANCE_EMPTY_RESIDUE, order, current, ()
            )
        current = (current - affix_total) // q
        order += 1
    parts, total = _direct_parts(sub, current)
    if total == 0:
        return DensityResult(length, Fraction(0), PROVENANCE_EMPTY_ROOT, order, current, ())
    scale = Fraction(1, q ** (2 * order))
    return DensityResult(length, total * scale, PROVENANCE_SCALED, order, current, parts)


@dataclass(frozen=True)
class DensityFamily:
    """All line lengths that walk down to one short root length.

    Member k has length root * q**k plus the affix total repeated along
    the geometric sum, and density base / q**(2k).
    """

    root_length: int
    base_density: Fraction
    block_length: int
    affix_total: int

    def length_at(self, k: int) -> int:
        if k < 0:
            raise DensityError("family index must be nonnegative")
        q = self.block_length
        return self.root_length * q**k + self.affix_total * ((q**k - 1) // (q - 1))

    def density_at(self, k: int) -> Fraction:
        if k < 0:
            raise DensityError("family index must be nonnegative")
        return self.base_density / self.block_length ** (2 * k)

    @property
    def formula_text(self) -> str:
        q = self.block_length
        aff = self.affix_total
        if aff == 0:
            return f"{self.root_length}*{q}^k"
        if aff % (q - 1) == 0:
            c = aff // (q - 1)
            return f"{self.root_length + c}*{q}^k-{c}"
        return f"{self.root_length}*{q}^k+{aff}*({q}^k-1)/({q}-1)"


@dataclass(frozen=True)
class FamilySet:
    """Density families and the short lengths that stay isolated.

    A positive-density root below the recognizability constant heads a
    family when its first image length already reaches the constant;
    otherwise its image length is just another short root and the length
    stays isolated.
    """

    families: tuple[DensityFamily, ...]
    isolated_roots: tuple[tuple[int, Fraction], ...]


@lru_cache(maxsize=None)
def density_families(sub: Substitution) -> FamilySet:
    _require_primitive_aperiodic(sub)
    constant = recognizability_constant(sub).value
    q = sub.length
    affix_total = common_affixes(sub).total
    families = []
    isolated = []
    for root in range(1, constant):
        result = line_density(sub, root)
        if result.value == 0:
            continue
        if q * root + affix_total >= constant:
            families.append(DensityFamily(root, result.value, q, affix_total))
        else:
            isolated.append((root, result.value))
    return FamilySet(tuple(families), tuple(isolated))


@dataclass(frozen=True)
class SupportReport:
    """Which lengths up to a limit carry lines, and how sparse they are."""

    limit: int
    lengths: tuple[int, ...]
    count: int
    ratio: Fraction


def length_support(sub: Substitution, limit: int) -> SupportReport:
    """All lengths up to ``limit`` whose maximal-line density is positive."""
    _require_primitive_aperiodic(sub)
    if limit < 1:
        raise DensityError("support limit must be at least 1")
    family_set = density_families(sub)
    lengths: set[int] = {root for root, _ in family_set.isolated_roots if root <= limit}
    for family in family_set.families:
        k = 0
        while True:
            member = family.length_at(k)
            if member > limit:
                break
            lengths.add(member)
            k += 1
    ordered = tuple(sorted(lengths))
    return SupportReport(limit, ordered, len(ordered), Fraction(len(ordered), limit))


def boundary_length_support(sub: Substitution, limit: int) -> SupportReport:
    """Lengths up to ``limit`` with a line against the sequence start.

    These lines live on two rows of the plot, so their planar density is
    zero; the support is still structured, by roots and image towers,
    except that only the leading affix pads the tower lengths.
    """
    _require_primitive_aperiodic(sub)
    if limit < 1:
        raise DensityError("support limit must be at least 1")
    constant = recognizability_constant(sub).value
    q = sub.length
    alpha = common_affixes(sub).prefix_len
    lengths: set[int] = set()
    for root in range(1, constant):
        if not enumerate_boundary(sub, root):
            continue
        if root <= limit:
            lengths.add(root)
        if q * root + alpha >= constant:
            k = 1
            while True:
                member = root * q**k + alpha * ((q**k - 1) // (q - 1))
                if member > limit:
                    break
                lengths.add(member)
                k += 1
    ordered = tuple(sorted(lengths))
    return SupportReport(limit, ordered, len(ordered), Fraction(len(ordered), limit))


@dataclass(frozen=True)
class NonPrimitiveReport:
    """Line structure when the image of 1 is a block of ones.

    Runs of ones grow without bound, so the pattern <0, 1^L, 1> exists at
    every length L; the report counts its two words in a scanned prefix.
    All densities vanish: maximal lines end at disagreeing index pairs,
    and those have vanishing planar density because the letter 0 does.
    """

    length: int
    witness: InnerLinePattern
    witness_counts: tuple[int, int]
    density: Fraction
    extra_patterns: tuple[InnerLinePattern, ...]
    scan_length: int
    justification: str


def _default_scan_length(q: int) -> int:
    scan = q
    while scan < 16384:
        scan *= q
    return scan


def nonprimitive_verdict(
    sub: Substitution, length: int, scan_length: int | None = None
) -> NonPrimitiveReport:
    """Witness and zero-density verdict for a non-primitive substitution."""
    label = classify(sub).label
    if label is not CaseLabel.NON_PRIMITIVE:
        raise DensityError(
            f"nonprimitive_verdict needs a non-primitive substitution, got {label.value}"
        )
    if length < 1:
        raise DensityError("line length must be at least 1")
    if scan_length is None:
        scan_length = _default_scan_length(sub.length)
    from .oracle import word_start_count

    prefix = fixed_point_prefix(sub, scan_length)
    witness = InnerLinePattern("0", "1" * length, "1")
    straight, flipped = witness.words()
    counts = (word_start_count(prefix, straight), word_start_count(prefix, flipped))
    span = length + 2
    observed = {prefix.symbols[t : t + span] for t in range(len(prefix) - span + 1)}
    extras = []
    skip = {witness, witness.mirror()}
    for word in sorted(observed):
        left, core, right = word[0], word[1:-1], word[-1]
        partner = left.translate(FLIP) + core + right.translate(FLIP)
        if partner in observed:
            found = InnerLinePattern(left, core, right)
            if found not in skip:
                extras.append(found)
    extras.sort(key=lambda p: (p.core, p.left, p.right))
    justification = (
        "runs of ones substitute to longer runs, so lines of every length occur; "
        "their density is zero because disagreeing index pairs need the vanishing letter 0"
    )
    return NonPrimitiveReport(
        length,
        witness,
        counts,
        Fraction(0),
        tuple(extras),
        scan_length,
        justification,
    )
