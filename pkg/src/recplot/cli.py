"""Command line front end.

Four subcommands: ``analyze`` prints the full structural report,
``densities`` emits a machine-readable TSV of exact line densities,
``verify`` replays the exact predictions against brute-force scans of a
generated prefix, and ``render`` draws the recurrence plot itself.

Exit codes: 0 on success, 1 for usage errors, 2 for invalid input or
unsupported requests, and 3 when a scan contradicts a guaranteed
prediction, which would falsify the analysis rather than the input.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

import numpy as np

from .densities import (
    DensityError,
    density_families,
    boundary_length_support,
    length_support,
    line_density,
    nonprimitive_verdict,
)
from .language import LanguageError, recognizability_constant
from .measures import MeasureError
from .oracle import (
    BoundViolationError,
    OracleError,
    bound_checks,
    empirical_density,
    extract_lines,
    infinite_line_screen,
    lines_through_window,
)
from .patterns import PatternError, separator_type
from .substitution import (
    CaseLabel,
    Normalization,
    Substitution,
    SubstitutionError,
    classify,
    common_affixes,
    fixed_point_prefix,
    normalize,
    parse_substitution,
)

__all__ = ["main"]

PGM_LIMIT = 4096
ASCII_TARGET_WIDTH = 120


class _Breach(RuntimeError):
    """A brute-force scan disagreed with an exact prediction."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _load(args: argparse.Namespace) -> tuple[Substitution, Normalization]:
    if args.subst is not None:
        text = args.subst
    else:
        text = Path(args.subst_file).read_text(encoding="ascii")
    parsed = parse_substitution(text)
    return parsed, normalize(parsed)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="\n") as handle:
            handle.write(text)


def _power_at_most(base: int, limit: int) -> int:
    value = base
    while value * base <= limit:
        value *= base
    return value


def _power_at_least(base: int, limit: int) -> int:
    value = base
    while value < limit:
        value *= base
    return value


def _density_rows(sub: Substitution, lmax: int, decimal: bool) -> list[str]:
    rows = []
    for length in range(1, lmax + 1):
        result = line_density(sub, length)
        cells = [
            str(length),
            str(result.value.numerator),
            str(result.value.denominator),
            result.provenance,
            str(result.order),
            str(result.root_length),
        ]
        if decimal:
            cells.append(f"{float(result.value):.10g}")
        rows.append("\t".join(cells))
    return rows


def _tsv_report(sub: Substitution, norm: Normalization, lmax: int, decimal: bool) -> str:
    target = norm.substitution
    label = classify(target).label
    if label is not CaseLabel.PRIMITIVE_APERIODIC:
        raise DensityError(
            f"tsv densities need a primitive aperiodic substitution, got {label.value}; "
            "use 'analyze' for the structural report"
        )
    constant = recognizability_constant(target)
    lines = [
        f"# substitution: {sub}",
        f"# normalized: {target}" + (f" [{','.join(norm.flags)}]" if norm.flags else ""),
        f"# class: {label.value}",
        f"# recognizability: {constant.value}",
        f"# separator: {separator_type(target)}",
    ]
    header = ["length", "numerator", "denominator", "provenance", "order", "root_length"]
    if decimal:
        header.append("decimal")
    lines.append("\t".join(header))
    lines.extend(_density_rows(target, lmax, decimal))
    family_set = density_families(target)
    for family in family_set.families:
        members = []
        k = 0
        while family.length_at(k) <= lmax:
            members.append(str(family.length_at(k)))
            k += 1
        lines.append(
            f"# family root={family.root_length} density={_frac(family.base_density)} "
            f"lengths={family.formula_text} members<=lmax: {','.join(members)}"
        )
    for root, value in family_set.isolated_roots:
        lines.append(f"# isolated root={root} density={_frac(value)}")
    support = length_support(target, lmax)
    lines.append(f"# support<={lmax}: {','.join(map(str, support.lengths))}")
    boundary = boundary_length_support(target, lmax)
    lines.append(f"# boundary-support<={lmax}: {','.join(map(str, boundary.lengths))}")
    return "\n".join(lines) + "\n"


def _analyze_text(sub: Substitution, norm: Normalization, lmax: int, decimal: bool) -> str:
    target = norm.substitution
    classification = classify(target)
    lines = [f"substitution: {sub}"]
    if norm.flags:
        lines.append(f"normalized: {target} [{','.join(norm.flags)}]")
    lines.append(f"class: {classification.label.value}")
    if classification.verdict is not None:
        lines.append(f"verdict: {classification.verdict}")
        return "\n".join(lines) + "\n"
    if classification.label is CaseLabel.NON_PRIMITIVE:
        report = None
        for length in range(1, min(lmax, 4) + 1):
            report = nonprimitive_verdict(target, length)
            straight, flipped = report.witness.words()
            extras = " ".join(str(p) for p in report.extra_patterns) or "(none)"
            lines.append(
                f"length {length}: witness {report.witness} "
                f"counts {report.witness_counts[0]}x{straight!r} "
                f"{report.witness_counts[1]}x{flipped!r}, extras: {extras}"
            )
        if report is not None:
            lines.append(f"justification: {report.justification}")
        lines.append("verdict: lines of every length occur; every length class has density 0")
        lines.append(f"screen: {infinite_line_screen(target)}")
        return "\n".join(lines) + "\n"
    constant = recognizability_constant(target)
    lines.append(f"image length: {target.length}")
    affixes = common_affixes(target)
    lines.append(f"shared affixes: prefix {affixes.prefix_len}, suffix {affixes.suffix_len}")
    lines.append(
        f"recognizability: {constant.value} "
        f"(first fully recognizable length {constant.first_fully_recognizable})"
    )
    for length in sorted(constant.non_recognizable):
        words = constant.non_recognizable[length]
        if words:
            lines.append(f"  ambiguous at length {length}: {' '.join(words)}")
    lines.append(f"separator type: {separator_type(target)}")
    lines.append(f"screen: {infinite_line_screen(target)}")
    lines.append("densities:")
    lines.append("  length  density  provenance  order  root")
    for length in range(1, lmax + 1):
        result = line_density(target, length)
        shown = _frac(result.value)
        if decimal:
            shown += f" ({float(result.value):.6g})"
        lines.append(
            f"  {length:>6}  {shown}  {result.provenance}  {result.order}  {result.root_length}"
        )
    family_set = density_families(target)
    lines.append("families:")
    for family in family_set.families:
        members = []
        k = 0
        while family.length_at(k) <= lmax and len(members) < 8:
            members.append(str(family.length_at(k)))
            k += 1
        lines.append(
            f"  root {family.root_length}: density {_frac(family.base_density)}, "
            f"lengths {family.formula_text}: {', '.join(members)}"
        )
    if family_set.isolated_roots:
        shown = ", ".join(f"{root} ({_frac(v)})" for root, v in family_set.isolated_roots)
        lines.append(f"isolated roots: {shown}")
    support = length_support(target, lmax)
    lines.append(
        f"support <= {lmax}: {', '.join(map(str, support.lengths))} "
        f"(ratio {_frac(support.ratio)})"
    )
    boundary = boundary_length_support(target, lmax)
    lines.append(f"boundary support <= {lmax}: {', '.join(map(str, boundary.lengths))}")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args: argparse.Namespace) -> int:
    sub, norm = _load(args)
    if args.format == "tsv":
        text = _tsv_report(sub, norm, args.lmax, args.decimal)
    else:
        text = _analyze_text(sub, norm, args.lmax, args.decimal)
    _emit(text, args.out)
    return 0


def _cmd_densities(args: argparse.Namespace) -> int:
    sub, norm = _load(args)
    _emit(_tsv_report(sub, norm, args.lmax, args.decimal), args.out)
    return 0


def _verify_primitive(target: Substitution, out: list[str]) -> None:
    constant = recognizability_constant(target).value
    q = target.length
    recon_n = _power_at_most(q, 1024)
    prefix = fixed_point_prefix(target, (constant + 1) * recon_n + 1)
    by_length = Counter(
        record.length
        for record in lines_through_window(prefix, recon_n)
        if record.kind == "inner"
    )
    for length in range(1, constant + 3):
        counted = empirical_density(prefix, length, recon_n).count
        scanned = by_length.get(length, 0)
        if counted != scanned:
            raise _Breach(
                f"reconstruction mismatch at length {length} in window {recon_n}: "
                f"word route {counted}, scan route {scanned}"
            )
    out.append(
        f"ok: reconstruction window={recon_n} lengths 1..{constant + 2} "
        "agree between word counting and diagonal scanning"
    )
    top = _power_at_least(q, 16384)
    # the signed counting error can flip between adjacent q-power windows, so
    # compare windows two exponents apart where the decay is monotone
    checkpoints = [n for n in (top // q**4, top // q**2, top) if n >= q]
    support = set(length_support(target, constant + 2).lengths)
    long_prefix = fixed_point_prefix(target, top + constant + 2)
    for length in sorted(support):
        exact = line_density(target, length).value
        deviations = []
        for n in checkpoints:
            ratio = empirical_density(long_prefix, length, n).ratio
            deviations.append(abs(ratio - exact) / exact)
        for earlier, later in zip(deviations, deviations[1:]):
            if later >= earlier:
                raise _Breach(
                    f"density deviation at length {length} did not shrink across "
                    f"windows {checkpoints}: "
                    + " -> ".join(f"{float(d) * 100:.4f}%" for d in deviations)
                )
        if deviations[-1] > Fraction(1, 20):
            raise _Breach(
                f"density deviation at length {length} is "
                f"{float(deviations[-1]) * 100:.2f}% in window {checkpoints[-1]}, over 5%"
            )
        shown = " -> ".join(f"{float(d) * 100:.4f}%" for d in deviations)
        out.append(f"ok: density length={length} exact={_frac(exact)} deviations {shown}")
    bound_n = _power_at_most(q, 4096)
    bound_prefix = fixed_point_prefix(target, (constant + 1) * bound_n + 1)
    report = bound_checks(bound_prefix, bound_n)
    for item in report.items:
        out.append(
            f"ok: bound {item.name} observed={item.observed:g} "
            f"bound={item.bound:g} margin={item.margin:g}"
        )
    out.append(f"ok: screen: {infinite_line_screen(target)}")


def _verify_nonprimitive(target: Substitution, out: list[str]) -> None:
    q = target.length
    top = _power_at_least(q, 16384)
    prefix = fixed_point_prefix(target, top + 40)
    for length in range(1, 33):
        report = nonprimitive_verdict(target, length, scan_length=top + 40)
        straight, flipped = report.witness.words()
        if min(report.witness_counts) < 2:
            raise _Breach(
                f"witness words {straight!r}/{flipped!r} for length {length} "
                f"occur {report.witness_counts} times in {top + 40} symbols, expected >= 2"
            )
    out.append(f"ok: witness patterns occur (twice or more) for lengths 1..32 in {top + 40} symbols")
    checkpoints = [top // q**2, top // q, top]
    for length in (1, 2, 3):
        ratios = [empirical_density(prefix, length, n).ratio for n in checkpoints]
        for earlier, later in zip(ratios, ratios[1:]):
            if later >= earlier:
                raise _Breach(
                    f"zero-density decay failed at length {length}: ratios "
                    + " -> ".join(f"{float(r):.3e}" for r in ratios)
                )
        out.append(
            f"ok: decay length={length} ratios "
            + " -> ".join(f"{float(r):.3e}" for r in ratios)
        )
    out.append("ok: every length class has density 0; witnesses exist at every length")


def _cmd_verify(args: argparse.Namespace) -> int:
    sub, norm = _load(args)
    target = norm.substitution
    classification = classify(target)
    out: list[str] = [f"substitution: {sub}", f"class: {classification.label.value}"]
    if classification.verdict is not None:
        out.append(f"ok: verdict: {classification.verdict}")
    elif classification.label is CaseLabel.NON_PRIMITIVE:
        _verify_nonprimitive(target, out)
    else:
        _verify_primitive(target, out)
    _emit("\n".join(out) + "\n", args.out)
    return 0


def _render_pgm(
    target: Substitution, n: int, overlay: bool, jobs: int, out: str | None
) -> None:
    if n > PGM_LIMIT:
        raise OracleError(
            f"pgm rendering is capped at {PGM_LIMIT}; use --format ascii for larger windows"
        )
    prefix = fixed_point_prefix(target, n)
    arr = np.frombuffer(prefix.symbols.encode("ascii"), dtype=np.uint8)
    image = np.where(arr[:, None] == arr[None, :], 0, 255).astype(np.uint8)
    if overlay:
        for record in extract_lines(prefix, n, jobs=jobs):
            image[record.i, record.j] = 128
    payload = f"P5\n{n} {n}\n255\n".encode("ascii") + image.tobytes()
    if out is None:
        sys.stdout.buffer.write(payload)
    else:
        Path(out).write_bytes(payload)


def _render_ascii(target: Substitution, n: int, out: str | None) -> None:
    stride = max(1, -(-n // ASCII_TARGET_WIDTH))
    prefix = fixed_point_prefix(target, n)
    sampled = prefix.symbols[::stride]
    rows = []
    for a in sampled:
        rows.append("".join("#" if a == b else "." for b in sampled))
    _emit("\n".join(rows) + "\n", out)


def _cmd_render(args: argparse.Namespace) -> int:
    _, norm = _load(args)
    target = norm.substitution
    if args.n < 2:
        raise OracleError("render window must be at least 2")
    if args.format == "pgm":
        _render_pgm(target, args.n, args.overlay, args.jobs, args.out)
    else:
        if args.overlay:
            raise OracleError("--overlay needs --format pgm")
        _render_ascii(target, args.n, args.out)
    return 0


def _build_parser() -> _Parser:
    shared = _Parser(add_help=False)
    group = shared.add_mutually_exclusive_group(required=True)
    group.add_argument("--subst", help="substitution like '0->01;1->10'")
    group.add_argument("--subst-file", help="file containing the substitution text")
    shared.add_argument("--out", help="write output to this file instead of stdout")

    parser = _Parser(
        prog="recplot",
        description="exact diagonal-line analysis of binary substitution recurrence plots",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    analyze = commands.add_parser(
        "analyze", parents=[shared], help="full structural report"
    )
    analyze.add_argument("--lmax", type=int, default=32, help="largest line length to report")
    analyze.add_argument("--format", choices=("text", "tsv"), default="text")
    analyze.add_argument("--decimal", action="store_true", help="include decimal densities")
    analyze.set_defaults(func=_cmd_analyze)

    densities = commands.add_parser(
        "densities", parents=[shared], help="exact density table as TSV"
    )
    densities.add_argument("--lmax", type=int, default=32)
    densities.add_argument("--decimal", action="store_true")
    densities.set_defaults(func=_cmd_densities)

    verify = commands.add_parser(
        "verify", parents=[shared], help="replay exact predictions against scans"
    )
    verify.set_defaults(func=_cmd_verify)

    render = commands.add_parser("render", parents=[shared], help="draw the plot")
    render.add_argument("--n", type=int, default=256, help="window size")
    render.add_argument("--format", choices=("ascii", "pgm"), default="ascii")
    render.add_argument("--overlay", action="store_true", help="mark line starts (pgm only)")
    render.add_argument("--jobs", type=int, default=1, help="threads for line extraction")
    render.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundViolationError as exc:
        print(f"breach: {exc}", file=sys.stderr)
        return 3
    except _Breach as exc:
        print(f"breach: {exc}", file=sys.stderr)
        return 3
    except (
        SubstitutionError,
        LanguageError,
        PatternError,
        MeasureError,
        DensityError,
        OracleError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
