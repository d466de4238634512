"""Line patterns: the word contexts that create diagonal lines.

A maximal diagonal line of length L away from the axes pairs a position
reading a*w*b with one reading the end-flipped word, where |w| = L and
the ends disagree.  The pattern <a,w,b> records that context; it exists
exactly when both words occur in the fixed point.  Lines touching the
start of the sequence come from a shorter context w^b: the sequence
itself begins with w followed by the flipped b, while w*b occurs
somewhere inside.

Applying the substitution to a pattern yields the pattern of the image
line, stretching the core by the image length and padding it with the
common affixes of the two images.  For cores at least as long as the
recognizability constant the step inverts uniquely, which is what makes
exact density bookkeeping possible at every length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .language import allowed_words, recognizability_constant
from .substitution import FLIP, Substitution, common_affixes, fixed_point_prefix

__all__ = [
    "BoundaryLinePattern",
    "InnerLinePattern",
    "LengthResidueMismatch",
    "NotDesubstitutableError",
    "PatternChain",
    "PatternDecodeError",
    "PatternError",
    "SeparatorType",
    "boundary_is_allowed",
    "chain",
    "desubstitute",
    "desubstitute_boundary",
    "enumerate_boundary",
    "enumerate_inner",
    "induce",
    "induce_boundary",
    "inner_is_allowed",
    "separator_type",
]


class PatternError(ValueError):
    """Malformed pattern input."""


class NotDesubstitutableError(PatternError):
    """The core is shorter than the recognizability constant."""


class PatternDecodeError(PatternError):
    """The word does not decompose as an image of any shorter pattern."""


def _flip(text: str) -> str:
    return text.translate(FLIP)


def _check_letter(letter: str, role: str) -> None:
    if letter not in ("0", "1"):
        raise PatternError(f"{role} must be a single binary letter, got {letter!r}")


def _check_core(word: str) -> None:
    if not word or set(word) - {"0", "1"}:
        raise PatternError(f"pattern core must be a nonempty binary word, got {word!r}")


@dataclass(frozen=True)
class InnerLinePattern:
    """Context <left, core, right> of a diagonal line away from the axes."""

    left: str
    core: str
    right: str

    def __post_init__(self) -> None:
        _check_letter(self.left, "left separator")
        _check_letter(self.right, "right separator")
        _check_core(self.core)

    def __len__(self) -> int:
        return len(self.core)

    def words(self) -> tuple[str, str]:
        """The two words the pattern requires, one per side of the line."""
        straight = self.left + self.core + self.right
        flipped = _flip(self.left) + self.core + _flip(self.right)
        return (straight, flipped)

    def mirror(self) -> InnerLinePattern:
        """The same line read from the other side."""
        return InnerLinePattern(_flip(self.left), self.core, _flip(self.right))

    def __str__(self) -> str:
        return f"{self.left}|{self.core}|{self.right}"


@dataclass(frozen=True)
class BoundaryLinePattern:
    """Context of a line that starts against the sequence start.

    The fixed point begins with the core followed by the flip of
    ``right``; the line partners that prefix with an inner occurrence of
    core + right.
    """

    core: str
    right: str

    def __post_init__(self) -> None:
        _check_letter(self.right, "right separator")
        _check_core(self.core)

    def __len__(self) -> int:
        return len(self.core)

    def __str__(self) -> str:
        return f"{self.core}^{self.right}"


def inner_is_allowed(sub: Substitution, pattern: InnerLinePattern) -> bool:
    table = allowed_words(sub, len(pattern) + 2)
    straight, flipped = pattern.words()
    return straight in table and flipped in table


def boundary_is_allowed(sub: Substitution, pattern: BoundaryLinePattern) -> bool:
    length = len(pattern)
    prefix = fixed_point_prefix(sub, length + 1)
    if prefix.symbols != pattern.core + _flip(pattern.right):
        return False
    return pattern.core + pattern.right in allowed_words(sub, length + 1)


def enumerate_inner(sub: Substitution, length: int) -> tuple[InnerLinePattern, ...]:
    """All inner line patterns with a core of the given length.

    A pattern is found once, from its own straight word, so mirrors are
    listed as separate patterns (they describe the transposed lines).
    """
    table = allowed_words(sub, length + 2)
    out = []
    for word in table.words:
        left, core, right = word[0], word[1:-1], word[-1]
        if _flip(left) + core + _flip(right) in table:
            out.append(InnerLinePattern(left, core, right))
    out.sort(key=lambda p: (p.core, p.left, p.right))
    return tuple(out)


def enumerate_boundary(sub: Substitution, length: int) -> tuple[BoundaryLinePattern, ...]:
    """The boundary pattern with the given core length, if it exists.

    The core is forced to be the sequence prefix and the separator the
    flip of the next symbol, so there is at most one per length.
    """
    prefix = fixed_point_prefix(sub, length + 1)
    core = prefix.symbols[:length]
    right = _flip(prefix.symbols[length])
    if core + right in allowed_words(sub, length + 1):
        return (BoundaryLinePattern(core, right),)
    return ()


@dataclass(frozen=True)
class SeparatorType:
    """Whether applying the substitution preserves or flips separators.

    The left separator of the image pattern agrees with the source left
    letter exactly when ``left_sign`` is "+", and likewise on the right.
    Both signs are read off one image since both images share their
    affixes and differ just past them.
    """

    left_sign: str
    right_sign: str

    @property
    def boundary_sign(self) -> str:
        """Boundary patterns only have a right separator."""
        return self.right_sign

    def __str__(self) -> str:
        return f"({self.left_sign}{self.right_sign})"


def separator_type(sub: Substitution) -> SeparatorType:
    affixes = common_affixes(sub)
    q = sub.length
    left = "+" if sub.image0[q - affixes.suffix_len - 1] == "0" else "-"
    right = "+" if sub.image0[affixes.prefix_len] == "0" else "-"
    return SeparatorType(left, right)


def induce(sub: Substitution, pattern: InnerLinePattern) -> InnerLinePattern:
    """The pattern of the image line.

    The image core picks up the shared image suffix on the left and the
    shared prefix on the right; the new separators are the image letters
    just beyond, which is where the two images first disagree.
    """
    affixes = common_affixes(sub)
    q = sub.length
    alpha, beta = affixes.prefix_len, affixes.suffix_len
    left_pad = sub.image(pattern.left)[q - beta :]
    right_pad = sub.image(pattern.right)[:alpha]
    core = left_pad + sub.apply(pattern.core) + right_pad
    left = sub.image(pattern.left)[q - beta - 1]
    right = sub.image(pattern.right)[alpha]
    return InnerLinePattern(left, core, right)


def induce_boundary(sub: Substitution, pattern: BoundaryLinePattern) -> BoundaryLinePattern:
    affixes = common_affixes(sub)
    alpha = affixes.prefix_len
    core = sub.apply(pattern.core) + sub.image(pattern.right)[:alpha]
    right = sub.image(pattern.right)[alpha]
    return BoundaryLinePattern(core, right)


@dataclass(frozen=True)
class LengthResidueMismatch:
    """A core length that no image pattern can have.

    Image cores have length q * k + (shared affix total); a long core
    whose length misses that residue class cannot be desubstituted, and
    no line of that length exists at all.
    """

    length: int
    modulus: int
    expected: int
    actual: int


def _decode_blocks(sub: Substitution, text: str) -> str:
    q = sub.length
    letters = []
    for i in range(0, len(text), q):
        block = text[i : i + q]
        if block == sub.image0:
            letters.append("0")
        elif block == sub.image1:
            letters.append("1")
        else:
            raise PatternDecodeError(f"piece {block!r} is not an image block")
    return "".join(letters)


def _letter_whose_image_has(sub: Substitution, position: int, letter: str) -> str:
    # the images differ at this position, so exactly one source letter fits
    if sub.image0[position] == letter:
        return "0"
    return "1"


def desubstitute(
    sub: Substitution, pattern: InnerLinePattern
) -> InnerLinePattern | LengthResidueMismatch:
    """Invert ``induce`` on a sufficiently long pattern.

    Returns the unique source pattern, or a LengthResidueMismatch value
    when the core length is not of image form.  Below the
    recognizability constant the inversion is not defined and a
    NotDesubstitutableError is raised instead.
    """
    constant = recognizability_constant(sub).value
    length = len(pattern)
    if length < constant:
        raise NotDesubstitutableError(
            f"core length {length} is below the recognizability constant {constant}"
        )
    affixes = common_affixes(sub)
    q = sub.length
    alpha, beta = affixes.prefix_len, affixes.suffix_len
    if (length - alpha - beta) % q != 0:
        return LengthResidueMismatch(length, q, (alpha + beta) % q, length % q)
    core = _decode_blocks(sub, pattern.core[beta : length - alpha])
    left = _letter_whose_image_has(sub, q - beta - 1, pattern.left)
    if pattern.core[:beta] != sub.image(left)[q - beta :]:
        raise PatternDecodeError("left padding is not the shared image suffix")
    right = _letter_whose_image_has(sub, alpha, pattern.right)
    if pattern.core[length - alpha :] != sub.image(right)[:alpha]:
        raise PatternDecodeError("right padding is not the shared image prefix")
    return InnerLinePattern(left, core, right)


def desubstitute_boundary(
    sub: Substitution, pattern: BoundaryLinePattern
) -> BoundaryLinePattern | LengthResidueMismatch:
    constant = recognizability_constant(sub).value
    length = len(pattern)
    if length < constant:
        raise NotDesubstitutableError(
            f"core length {length} is below the recognizability constant {constant}"
        )
    alpha = common_affixes(sub).prefix_len
    q = sub.length
    if (length - alpha) % q != 0:
        return LengthResidueMismatch(length, q, alpha % q, length % q)
    core = _decode_blocks(sub, pattern.core[: length - alpha])
    right = _letter_whose_image_has(sub, alpha, pattern.right)
    if pattern.core[length - alpha :] != sub.image(right)[:alpha]:
        raise PatternDecodeError("trailing padding is not the shared image prefix")
    return BoundaryLinePattern(core, right)


@dataclass(frozen=True)
class PatternChain:
    """A pattern resolved to its short root by repeated desubstitution.

    ``links`` lists the intermediate patterns from just above the root up
    to the original input; ``order`` counts the desubstitution steps.
    """

    root: InnerLinePattern | BoundaryLinePattern
    links: tuple[InnerLinePattern | BoundaryLinePattern, ...]
    order: int


def chain(
    sub: Substitution, pattern: InnerLinePattern | BoundaryLinePattern
) -> PatternChain | LengthResidueMismatch:
    """Desubstitute until the core drops below the recognizability constant."""
    constant = recognizability_constant(sub).value
    if isinstance(pattern, InnerLinePattern):
        step = desubstitute
    elif isinstance(pattern, BoundaryLinePattern):
        step = desubstitute_boundary
    else:
        raise PatternError(f"not a line pattern: {pattern!r}")
    trail = [pattern]
    while len(trail[-1]) >= constant:
        shorter = step(sub, trail[-1])
        if isinstance(shorter, LengthResidueMismatch):
            return shorter
        trail.append(shorter)
    return PatternChain(trail[-1], tuple(reversed(trail[:-1])), len(trail) - 1)
