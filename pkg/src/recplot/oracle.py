"""Brute-force verification against actual symbol prefixes.

Everything in this module works by scanning a generated prefix of the
fixed point, independently of the exact pattern and measure machinery,
so the two sides can be played against each other in tests.  Diagonal
agreement runs are extracted with numpy; counting line starts by their
surrounding words gives a second, fully independent route to the same
numbers.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .language import recognizability_constant
from .substitution import (
    PERIODIC_VERDICT,
    CaseLabel,
    SequencePrefix,
    Substitution,
    classify,
    fixed_point_prefix,
)

__all__ = [
    "BoundCheckItem",
    "BoundCheckReport",
    "BoundViolationError",
    "EmpiricalDensity",
    "LineRecord",
    "OracleError",
    "PrefixTooShort",
    "bound_checks",
    "empirical_density",
    "extract_lines",
    "infinite_line_screen",
    "lines_through_window",
    "word_frequencies",
    "word_start_count",
]

KIND_INNER = "inner"
KIND_START_EDGE = "0-boundary"
KIND_FAR_EDGE = "n-boundary"
KIND_BOTH_EDGES = "both"

APERIODIC_VERDICT = (
    "no infinite diagonal lines; length-1 lines occur infinitely often"
)


class OracleError(ValueError):
    """A scan was asked for something the given prefix cannot support."""


class PrefixTooShort(OracleError):
    """A run reached the end of the data before its end was certified."""


class BoundViolationError(OracleError):
    """An observed quantity broke a guaranteed bound."""

    def __init__(self, message: str, report: "BoundCheckReport") -> None:
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class LineRecord:
    """One maximal diagonal line, keyed by its start cell (i, j)."""

    i: int
    j: int
    length: int
    kind: str


def _symbol_array(symbols: str) -> np.ndarray:
    return np.frombuffer(symbols.encode("ascii"), dtype=np.uint8)


def _runs(equal: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    padded = np.empty(equal.size + 2, dtype=np.int8)
    padded[0] = 0
    padded[-1] = 0
    padded[1:-1] = equal
    steps = np.diff(padded)
    starts = np.flatnonzero(steps == 1)
    ends = np.flatnonzero(steps == -1)
    return starts, ends - starts


def extract_lines(
    prefix: SequencePrefix, n: int | None = None, jobs: int = 1
) -> tuple[LineRecord, ...]:
    """All maximal diagonal lines of the finite n-by-n plot.

    Lines are maximal within the square, so a line hitting either edge
    is flagged: its true extent in the infinite plot may be longer.
    Both of (i, j) and (j, i) are reported; the main diagonal is not.
    """
    if n is None:
        n = len(prefix)
    if n > len(prefix):
        raise OracleError(f"window {n} exceeds the available {len(prefix)} symbols")
    arr = _symbol_array(prefix.symbols[:n])

    def scan(offsets: range) -> list[LineRecord]:
        found: list[LineRecord] = []
        for d in offsets:
            starts, lengths = _runs(arr[: n - d] == arr[d:n])
            for s, span in zip(starts.tolist(), lengths.tolist()):
                at_start = s == 0
                at_far = s + d + span == n
                if at_start and at_far:
                    kind = KIND_BOTH_EDGES
                elif at_start:
                    kind = KIND_START_EDGE
                elif at_far:
                    kind = KIND_FAR_EDGE
                else:
                    kind = KIND_INNER
                found.append(LineRecord(s, s + d, span, kind))
                found.append(LineRecord(s + d, s, span, kind))
        return found

    if jobs <= 1:
        records = scan(range(1, n))
    else:
        step = max(1, (n - 1) // jobs + 1)
        chunks = [range(lo, min(lo + step, n)) for lo in range(1, n, step)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = [record for part in pool.map(scan, chunks) for record in part]
    records.sort(key=lambda r: (r.i, r.j))
    return tuple(records)


def lines_through_window(prefix: SequencePrefix, n: int) -> tuple[LineRecord, ...]:
    """Maximal lines of the infinite plot that start inside [0, n) x [0, n).

    The prefix must be long enough to certify the right end of every such
    line; if an agreement run starting in the window reaches the end of
    the data, PrefixTooShort is raised rather than guessing.
    """
    m = len(prefix)
    if n > m:
        raise OracleError(f"window {n} exceeds the available {m} symbols")
    arr = _symbol_array(prefix.symbols)
    records: list[LineRecord] = []
    for d in range(1, n):
        starts, lengths = _runs(arr[: m - d] == arr[d:])
        keep = starts < n - d
        for s, span in zip(starts[keep].tolist(), lengths[keep].tolist()):
            if s + span == m - d:
                raise PrefixTooShort(
                    f"run at ({s}, {s + d}) still going at the end of {m} symbols"
                )
            kind = KIND_START_EDGE if s == 0 else KIND_INNER
            records.append(LineRecord(s, s + d, span, kind))
            records.append(LineRecord(s + d, s, span, kind))
    records.sort(key=lambda r: (r.i, r.j))
    return tuple(records)


@dataclass(frozen=True)
class EmpiricalDensity:
    """Count of maximal lines of one length starting in [0, n) x [0, n)."""

    length: int
    n: int
    count: int
    ratio: Fraction


_FLIP_CHAR = {"0": "1", "1": "0"}


def empirical_density(
    prefix: SequencePrefix, length: int, n: int | None = None
) -> EmpiricalDensity:
    """Exact window count of inner maximal lines, by surrounding words.

    A maximal length-L line starts at (i, j) with i, j >= 1 exactly when
    the word of length L+2 around position i becomes the one around j
    after flipping its end letters.  Counting words once and summing
    products therefore counts line starts without touching the plot, in
    linear time.
    """
    if length < 1:
        raise OracleError("line length must be at least 1")
    if n is None:
        n = len(prefix) - length
    if n < 2:
        raise OracleError("window must contain at least the starts 0 and 1")
    if n + length > len(prefix):
        raise OracleError(
            f"window {n} at length {length} needs {n + length} symbols, "
            f"have {len(prefix)}"
        )
    symbols = prefix.symbols
    counts = Counter(symbols[t - 1 : t + length + 1] for t in range(1, n))
    total = 0
    for word, count in counts.items():
        partner = _FLIP_CHAR[word[0]] + word[1:-1] + _FLIP_CHAR[word[-1]]
        total += count * counts.get(partner, 0)
    return EmpiricalDensity(length, n, total, Fraction(total, n * n))


def word_start_count(prefix: SequencePrefix, word: str, limit: int | None = None) -> int:
    """Number of occurrence starts of ``word``, overlaps included."""
    if not word:
        raise OracleError("cannot count the empty word")
    symbols = prefix.symbols if limit is None else prefix.symbols[: limit + len(word) - 1]
    count = 0
    at = symbols.find(word)
    while at != -1:
        count += 1
        at = symbols.find(word, at + 1)
    return count


def word_frequencies(prefix: SequencePrefix, length: int) -> dict[str, int]:
    """Occurrence counts of every word of one length, via coded windows.

    The denominator for frequencies is len(prefix) - length + 1 windows.
    """
    if not 1 <= length <= 24:
        raise OracleError("word length must be between 1 and 24")
    if length > len(prefix):
        raise OracleError("prefix shorter than the requested word length")
    bits = (_symbol_array(prefix.symbols) - ord("0")).astype(np.int64)
    windows = len(prefix) - length + 1
    codes = np.zeros(windows, dtype=np.int64)
    for i in range(length):
        codes = (codes << 1) | bits[i : i + windows]
    tallies = np.bincount(codes, minlength=1 << length)
    return {
        format(code, f"0{length}b"): int(tallies[code])
        for code in np.flatnonzero(tallies).tolist()
    }


@dataclass(frozen=True)
class BoundCheckItem:
    name: str
    observed: float
    bound: float
    margin: float
    ok: bool


@dataclass(frozen=True)
class BoundCheckReport:
    """Observed line statistics in a window against their guarantees."""

    n: int
    recognizability: int
    items: tuple[BoundCheckItem, ...]

    @property
    def all_ok(self) -> bool:
        return all(item.ok for item in self.items)


def bound_checks(prefix: SequencePrefix, n: int) -> BoundCheckReport:
    """Check the guaranteed line bounds on an n-window of the real plot.

    With R the recognizability constant and q the image length, lines
    starting in the window show at most (R-1) * (1 + log_q n) distinct
    lengths, all below R * n; and length-L lines starting within L of the
    far window edge number below 8 * R * n / L.  Violations raise
    BoundViolationError, which the command line maps to its own exit
    code, since they would falsify the theory rather than the input.
    """
    sub = prefix.generator
    if n < 2:
        raise OracleError("window must be at least 2")
    constant = recognizability_constant(sub).value
    q = sub.length
    needed = (constant + 1) * n + 1
    if len(prefix) < needed:
        raise OracleError(
            f"bound checks on window {n} need {needed} symbols, have {len(prefix)}"
        )
    records = lines_through_window(prefix, n)
    log_bound = (constant - 1) * (1 + math.log(n, q))
    items: list[BoundCheckItem] = []
    for label, kind in (("inner", KIND_INNER), ("start-edge", KIND_START_EDGE)):
        lengths = {r.length for r in records if r.kind == kind}
        observed = len(lengths)
        items.append(
            BoundCheckItem(
                f"{label}-distinct-lengths",
                observed,
                log_bound,
                log_bound - observed,
                observed <= log_bound,
            )
        )
        longest = max(lengths, default=0)
        items.append(
            BoundCheckItem(
                f"{label}-max-length",
                longest,
                constant * n,
                constant * n - longest,
                longest < constant * n,
            )
        )
    edge_tally: Counter[int] = Counter()
    for record in records:
        if max(record.i, record.j) >= n - record.length:
            edge_tally[record.length] += 1
    heaviest = max((length * count for length, count in edge_tally.items()), default=0)
    items.append(
        BoundCheckItem(
            "edge-line-mass",
            heaviest,
            8 * constant * n,
            8 * constant * n - heaviest,
            heaviest < 8 * constant * n,
        )
    )
    report = BoundCheckReport(n, constant, tuple(items))
    if not report.all_ok:
        failed = ", ".join(item.name for item in report.items if not item.ok)
        raise BoundViolationError(f"line bounds violated: {failed}", report)
    return report


def infinite_line_screen(sub: Substitution, n: int | None = None) -> str:
    """Verdict on infinite diagonal lines.

    Shift periodic fixed points have them (and no finite lines), so the
    classification answers without a scan.  Aperiodic ones do not; the
    scan confirms finite lines of length 1 recur, which in a substitution
    system means they recur forever.
    """
    label = classify(sub).label
    if label not in (CaseLabel.NON_PRIMITIVE, CaseLabel.PRIMITIVE_APERIODIC):
        return PERIODIC_VERDICT
    if n is None:
        n = sub.length**5 - 2
    prefix = fixed_point_prefix(sub, n)
    records = extract_lines(prefix, n)
    ones = sum(1 for r in records if r.kind == KIND_INNER and r.length == 1)
    if ones < 2:
        raise OracleError(
            f"screen expected recurring length-1 lines in a {n}-window, found {ones}"
        )
    return APERIODIC_VERDICT
