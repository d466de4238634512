"""End-to-end acceptance checks; each test prints one PASS/FAIL summary line."""

from __future__ import annotations

import time
from collections import Counter
from fractions import Fraction

from recplot import (
    KIND_INNER,
    CuttingClass,
    InnerLinePattern,
    Substitution,
    bound_checks,
    classify_cuttings,
    cylinder_measures,
    density_families,
    empirical_density,
    fixed_point_prefix,
    length_support,
    line_density,
    lines_through_window,
    nonprimitive_verdict,
    recognizability_constant,
)

TM = Substitution("01", "10")
PD = Substitution("01", "00")
Q5 = Substitution("01110", "01010")
Q4 = Substitution("0101", "0100")
RUNS3 = Substitution("010", "111")


def test_c01_tm_base_densities() -> None:
    started = time.perf_counter()
    values = [line_density(TM, length).value for length in (1, 2, 3)]
    elapsed = time.perf_counter() - started
    assert values == [Fraction(1, 9), Fraction(1, 18), Fraction(1, 36)]
    assert elapsed < 1.0


def test_c02_tm_family_scaling() -> None:
    for k in range(9):
        assert line_density(TM, 2 ** (k + 1)).value == Fraction(1, 18 * 4**k)
        assert line_density(TM, 3 * 2**k).value == Fraction(1, 36 * 4**k)
    families = {f.root_length: f for f in density_families(TM).families}
    for k in range(9):
        assert families[2].length_at(k) == 2 ** (k + 1)
        assert families[2].density_at(k) == Fraction(1, 18 * 4**k)
        assert families[3].length_at(k) == 3 * 2**k
        assert families[3].density_at(k) == Fraction(1, 36 * 4**k)


def test_c03_q5_family_scaling() -> None:
    bases = {
        1: Fraction(7, 50),
        2: Fraction(3, 50),
        3: Fraction(1, 50),
        4: Fraction(13, 1250),
    }
    for root, base in bases.items():
        assert line_density(Q5, root).value == base
        for k in range(6):
            length = (root + 1) * 5**k - 1
            assert line_density(Q5, length).value == base / 25**k
    families = {f.root_length: f for f in density_families(Q5).families}
    for root, base in bases.items():
        for k in range(6):
            assert families[root].length_at(k) == (root + 1) * 5**k - 1
            assert families[root].density_at(k) == base / 25**k


def test_c04_recognizability_constants() -> None:
    assert recognizability_constant(TM).value == 4
    assert recognizability_constant(PD).value == 3
    assert recognizability_constant(Q5).value == 5
    assert recognizability_constant(Q4).value == 14


def test_c05_measure_tables() -> None:
    sixth = Fraction(1, 6)
    twelfth = Fraction(1, 12)
    assert dict(cylinder_measures(TM, 3).values) == {
        w: sixth for w in ("001", "010", "011", "100", "101", "110")
    }
    assert dict(cylinder_measures(TM, 4).values) == {
        "0010": twelfth, "0011": twelfth, "0100": twelfth, "0101": twelfth,
        "0110": sixth, "1001": sixth,
        "1010": twelfth, "1011": twelfth, "1100": twelfth, "1101": twelfth,
    }
    assert dict(cylinder_measures(TM, 5).values) == {
        w: twelfth
        for w in (
            "00101", "00110", "01001", "01011", "01100", "01101",
            "10010", "10011", "10100", "10110", "11001", "11010",
        )
    }
    fifth = Fraction(1, 5)
    tenth = Fraction(1, 10)
    assert dict(cylinder_measures(Q5, 3).values) == {
        "001": fifth, "010": fifth, "100": fifth,
        "011": tenth, "101": tenth, "110": tenth, "111": tenth,
    }
    assert dict(cylinder_measures(Q5, 4).values) == {
        "1001": fifth,
        "0010": tenth, "0011": tenth, "0100": tenth, "0101": tenth,
        "0111": tenth, "1010": tenth, "1100": tenth, "1110": tenth,
    }
    assert dict(cylinder_measures(Q5, 5).values) == {
        w: tenth
        for w in (
            "00101", "00111", "01001", "01010", "01110",
            "10010", "10011", "10100", "11001", "11100",
        )
    }
    assert dict(cylinder_measures(Q5, 6).values) == {
        "001010": tenth, "001110": tenth,
        "010010": Fraction(1, 25), "010011": Fraction(3, 50),
        "010100": tenth, "011100": tenth, "100101": tenth, "100111": tenth,
        "101001": tenth,
        "110010": Fraction(3, 50), "110011": Fraction(1, 25),
        "111001": tenth,
    }


def test_c06_cutting_examples() -> None:
    assert (
        classify_cuttings(Substitution("0110", "0111"), "00").classification
        is CuttingClass.STRONGLY_UNIQUE
    )
    duplication = Substitution("010", "000")
    assert classify_cuttings(duplication, "0").classification is CuttingClass.STRONGLY_UNIQUE
    assert classify_cuttings(duplication, "1").classification is CuttingClass.NONE
    assert classify_cuttings(duplication, "00").classification is CuttingClass.TWO_PLUS
    assert classify_cuttings(Q5, "10").classification is CuttingClass.STRONGLY_UNIQUE
    assert classify_cuttings(Q5, "01").classification is CuttingClass.NONE
    assert (
        classify_cuttings(Substitution("01101", "10000"), "011").classification
        is CuttingClass.WEAKLY_UNIQUE
    )


def test_c07_dual_route_equality() -> None:
    started = time.perf_counter()
    for sub, n in ((TM, 2**10), (Q5, 5**4)):
        constant = recognizability_constant(sub).value
        prefix = fixed_point_prefix(sub, (constant + 1) * n + 1)
        scanned = Counter(
            record.length
            for record in lines_through_window(prefix, n)
            if record.kind == KIND_INNER
        )
        for length in range(1, constant + 3):
            word_route = empirical_density(prefix, length, n).count
            assert word_route == scanned.get(length, 0)
    assert time.perf_counter() - started < 30.0


def test_c08_empirical_convergence() -> None:
    plans = (
        (TM, (2**10, 2**12, 2**14), (1, 2, 3, 4, 6)),
        (Q5, (5**3, 5**5, 5**7), (1, 2, 3, 4)),
    )
    for sub, windows, lengths in plans:
        prefix = fixed_point_prefix(sub, windows[-1] + max(lengths) + 1)
        for length in lengths:
            exact = line_density(sub, length).value
            deviations = [
                abs(empirical_density(prefix, length, n).ratio / exact - 1)
                for n in windows
            ]
            assert deviations[0] > deviations[1] > deviations[2]
            assert deviations[-1] <= Fraction(1, 20)


def test_c09_window_bounds() -> None:
    for n in (2**8, 2**10, 2**12):
        prefix = fixed_point_prefix(TM, 5 * n + 1)
        report = bound_checks(prefix, n)
        assert report.all_ok
        for item in report.items:
            assert item.ok and item.margin > 0


def test_c10_nonprimitive_witnesses() -> None:
    scan = 3**9
    for length in range(1, 33):
        report = nonprimitive_verdict(RUNS3, length, scan_length=scan)
        assert report.witness == InnerLinePattern("0", "1" * length, "1")
        assert all(count >= 2 for count in report.witness_counts)
        assert report.density == 0
    prefix = fixed_point_prefix(RUNS3, scan + 40)
    for length in (1, 2, 3):
        early = empirical_density(prefix, length, 3**7).ratio
        late = empirical_density(prefix, length, 3**9).ratio
        assert early > late


def test_c11_support_sparsity() -> None:
    for sub in (TM, Q5):
        ratios = [length_support(sub, limit).ratio for limit in (2**6, 2**10, 2**14)]
        assert ratios[0] > ratios[1] > ratios[2]
