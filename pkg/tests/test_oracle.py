"""Diagonal-line extraction, empirical counting routes, and window bounds."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from recplot import (
    APERIODIC_VERDICT,
    KIND_BOTH_EDGES,
    KIND_INNER,
    KIND_START_EDGE,
    PERIODIC_VERDICT,
    BoundViolationError,
    LineRecord,
    OracleError,
    PrefixTooShort,
    SequencePrefix,
    Substitution,
    bound_checks,
    empirical_density,
    extract_lines,
    fixed_point_prefix,
    infinite_line_screen,
    lines_through_window,
    word_frequencies,
    word_start_count,
)


def brute_finite_plot(symbols: str, n: int) -> list[tuple[int, int, int]]:
    """Maximal equal runs inside the n-by-n window, straight from the definition."""
    records = []
    for i in range(n):
        for j in range(n):
            if i == j or symbols[i] != symbols[j]:
                continue
            if i > 0 and j > 0 and symbols[i - 1] == symbols[j - 1]:
                continue
            length = 0
            while i + length < n and j + length < n and symbols[i + length] == symbols[j + length]:
                length += 1
            records.append((i, j, length))
    return sorted(records)


def brute_window_inner_counts(symbols: str, n: int) -> Counter[int]:
    """Inner lines with both starts in [1, n), lengths read off the full prefix."""
    counts: Counter[int] = Counter()
    for i in range(1, n):
        for j in range(1, n):
            if i == j or symbols[i] != symbols[j]:
                continue
            if symbols[i - 1] == symbols[j - 1]:
                continue
            length = 0
            while symbols[i + length] == symbols[j + length]:
                length += 1
            counts[length] += 1
    return counts


class TestExtractLines:
    def test_tiny_hand_example(self, tm: Substitution) -> None:
        records = extract_lines(SequencePrefix("0110", tm), 4)
        assert records == (
            LineRecord(0, 3, 1, KIND_BOTH_EDGES),
            LineRecord(1, 2, 1, KIND_INNER),
            LineRecord(2, 1, 1, KIND_INNER),
            LineRecord(3, 0, 1, KIND_BOTH_EDGES),
        )

    def test_records_are_symmetric_and_sorted(self, tm: Substitution) -> None:
        records = extract_lines(fixed_point_prefix(tm, 256), 256)
        as_set = {(r.i, r.j) for r in records}
        assert all((j, i) in as_set for i, j in as_set)
        assert list(records) == sorted(records, key=lambda r: (r.i, r.j))
        assert all(r.i != r.j for r in records)

    @pytest.mark.parametrize("n", [16, 24, 33])
    def test_matches_brute_force_window(self, tm: Substitution, n: int) -> None:
        symbols = fixed_point_prefix(tm, n).symbols
        records = extract_lines(fixed_point_prefix(tm, n), n)
        assert sorted((r.i, r.j, r.length) for r in records) == brute_finite_plot(symbols, n)

    def test_kinds_and_maximality(self, pd: Substitution) -> None:
        n = 128
        symbols = fixed_point_prefix(pd, n).symbols
        for record in extract_lines(fixed_point_prefix(pd, n), n):
            i, j, length = record.i, record.j, record.length
            assert symbols[i : i + length] == symbols[j : j + length]
            start_edge = i == 0 or j == 0
            far_edge = i + length == n or j + length == n
            if not start_edge:
                assert symbols[i - 1] != symbols[j - 1]
            if not far_edge:
                assert symbols[i + length] != symbols[j + length]
            expected_kind = {
                (False, False): "inner",
                (True, False): "0-boundary",
                (False, True): "n-boundary",
                (True, True): "both",
            }[(start_edge, far_edge)]
            assert record.kind == expected_kind

    def test_parallel_extraction_is_identical(self, tm: Substitution) -> None:
        prefix = fixed_point_prefix(tm, 512)
        assert extract_lines(prefix, 512, jobs=3) == extract_lines(prefix, 512)

    def test_window_larger_than_prefix_raises(self, tm: Substitution) -> None:
        with pytest.raises(OracleError, match="exceeds"):
            extract_lines(fixed_point_prefix(tm, 40), 64)


class TestLinesThroughWindow:
    def test_kinds_are_inner_or_start_edge(self, tm: Substitution) -> None:
        prefix = fixed_point_prefix(tm, 5 * 64 + 1)
        records = lines_through_window(prefix, 64)
        assert {r.kind for r in records} == {KIND_INNER, KIND_START_EDGE}
        for record in records:
            assert record.i < 64 and record.j < 64
            symbols = prefix.symbols
            assert symbols[record.i : record.i + record.length] == (
                symbols[record.j : record.j + record.length]
            )
            end_i = record.i + record.length
            end_j = record.j + record.length
            assert symbols[end_i] != symbols[end_j]

    def test_short_prefix_raises_instead_of_truncating(self, tm: Substitution) -> None:
        with pytest.raises(PrefixTooShort):
            lines_through_window(SequencePrefix("0" * 8, tm), 4)

    def test_counts_match_brute_force(self, tm: Substitution) -> None:
        prefix = fixed_point_prefix(tm, 400)
        scanned = Counter(
            r.length for r in lines_through_window(prefix, 32) if r.kind == KIND_INNER
        )
        assert scanned == brute_window_inner_counts(prefix.symbols, 32)


class TestEmpiricalDensity:
    def test_tm_window_64(self, tm: Substitution) -> None:
        prefix = fixed_point_prefix(tm, 5 * 64 + 1)
        expected = {1: 442, 2: 220, 3: 120, 4: 52, 5: 0, 6: 24}
        for length, count in expected.items():
            result = empirical_density(prefix, length, 64)
            assert result.count == count
            assert result.n == 64
            assert result.ratio == Fraction(count, 64 * 64)

    def test_tm_window_32_against_brute(self, tm: Substitution) -> None:
        prefix = fixed_point_prefix(tm, 400)
        brute = brute_window_inner_counts(prefix.symbols, 32)
        assert {
            length: empirical_density(prefix, length, 32).count
            for length in (1, 2, 3, 4, 6, 8)
        } == {1: 110, 2: 52, 3: 24, 4: 12, 6: 8, 8: 4}
        for length in (1, 2, 3, 4, 5, 6, 7, 8):
            assert empirical_density(prefix, length, 32).count == brute.get(length, 0)

    @pytest.mark.parametrize(
        "images,n", [(("01", "00"), 64), (("01110", "01010"), 125)], ids=["pd", "q5"]
    )
    def test_word_route_equals_scan_route(self, images: tuple[str, str], n: int) -> None:
        sub = Substitution(*images)
        prefix = fixed_point_prefix(sub, 8 * n)
        scanned = Counter(
            r.length for r in lines_through_window(prefix, n) if r.kind == KIND_INNER
        )
        for length in range(1, 10):
            assert empirical_density(prefix, length, n).count == scanned.get(length, 0)

    def test_default_window_uses_whole_prefix(self, tm: Substitution) -> None:
        prefix = fixed_point_prefix(tm, 100)
        result = empirical_density(prefix, 2)
        assert result.n == 98

    def test_window_validation(self, tm: Substitution) -> None:
        prefix = fixed_point_prefix(tm, 20)
        with pytest.raises(OracleError):
            empirical_density(prefix, 2, 1)
        with pytest.raises(OracleError):
            empirical_density(prefix, 2, 19)


class TestWordCounting:
    def test_overlapping_occurrences(self, tm: Substitution) -> None:
        assert word_start_count(SequencePrefix("0000", tm), "00") == 3

    def test_limit_restricts_start_positions(self, tm: Substitution) -> None:
        prefix = SequencePrefix("010101", tm)
        assert word_start_count(prefix, "01") == 3
        assert word_start_count(prefix, "01", limit=3) == 2

    def test_frequencies_match_counter(self, tm: Substitution) -> None:
        symbols = fixed_point_prefix(tm, 512).symbols
        for length in range(1, 7):
            windows = len(symbols) - length + 1
            reference = Counter(symbols[i : i + length] for i in range(windows))
            table = word_frequencies(fixed_point_prefix(tm, 512), length)
            assert sum(table.values()) == windows
            for word, count in table.items():
                assert count == reference.get(word, 0)

    def test_frequency_length_bounds(self, tm: Substitution) -> None:
        prefix = fixed_point_prefix(tm, 64)
        with pytest.raises(OracleError):
            word_frequencies(prefix, 0)
        with pytest.raises(OracleError):
            word_frequencies(prefix, 25)


class TestBoundChecks:
    def test_tm_window_256(self, tm: Substitution) -> None:
        prefix = fixed_point_prefix(tm, 5 * 256 + 1)
        report = bound_checks(prefix, 256)
        assert report.n == 256
        assert report.recognizability == 4
        assert report.all_ok
        observed = {item.name: item.observed for item in report.items}
        assert observed == {
            "inner-distinct-lengths": 12,
            "inner-max-length": 64,
            "start-edge-distinct-lengths": 8,
            "start-edge-max-length": 128,
            "edge-line-mass": 256,
        }
        bounds = {item.name: item.bound for item in report.items}
        assert bounds["inner-max-length"] == 1024
        assert bounds["edge-line-mass"] == 8192
        for item in report.items:
            assert item.ok and item.margin > 0

    def test_needs_long_enough_prefix(self, tm: Substitution) -> None:
        with pytest.raises(OracleError):
            bound_checks(fixed_point_prefix(tm, 100), 64)

    def test_violation_error_carries_report(self) -> None:
        error = BoundViolationError("synthetic breach", report=None)
        assert error.report is None
        assert "synthetic" in str(error)
        assert isinstance(error, OracleError)


class TestInfiniteLineScreen:
    def test_aperiodic_fixtures(self, tm: Substitution, runs3: Substitution) -> None:
        assert infinite_line_screen(tm) == APERIODIC_VERDICT
        assert infinite_line_screen(runs3) == APERIODIC_VERDICT

    def test_periodic_shortcut(self) -> None:
        assert infinite_line_screen(Substitution("01", "01")) == PERIODIC_VERDICT
        assert infinite_line_screen(Substitution("00", "11")) == PERIODIC_VERDICT

    def test_explicit_window(self, tm: Substitution) -> None:
        assert infinite_line_screen(tm, n=64) == APERIODIC_VERDICT
