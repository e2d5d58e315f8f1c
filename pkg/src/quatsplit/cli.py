"""Command-line front end.

Subcommands:
  classify      one division/split verdict with its criterion trace
  ramification  ramified places and reduced discriminant of H_Q(a, b)
  verify        sweep all ordered pairs of distinct primes <= max-prime,
                comparing the classifier against the local-global oracle

Exit codes: 0 ok, 2 bad arguments, 3 unsupported field, 4 verify found
disagreements (the report is still written).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import arith, cyclotomic
from .classify import (
    Biquadratic,
    Certainty,
    Cyclotomic,
    FieldDescriptor,
    Kummer,
    Outcome,
    Quadratic,
    Verdict,
    classify,
)
from .errors import BadModulusError, InvalidInputError, UnsupportedFieldError
from .hilbert import ramified_places
from .oracle import division_oracle

EXIT_OK = 0
EXIT_BAD_ARGS = 2
EXIT_UNSUPPORTED = 3
EXIT_DISAGREEMENTS = 4

MAX_SWEEP_PRIME = 10_000


def parse_field_spec(text: str) -> FieldDescriptor:
    """Grammar: quadratic:<d> | biquadratic:<d1>,<d2> | cyclotomic:<n> | kummer:<l>^<k>."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise InvalidInputError(f"field spec needs a kind prefix, got '{text}'")
    try:
        if kind == "quadratic":
            return Quadratic(int(rest))
        if kind == "biquadratic":
            first, comma, second = rest.partition(",")
            if not comma:
                raise ValueError
            return Biquadratic(int(first), int(second))
        if kind == "cyclotomic":
            return Cyclotomic(cyclotomic.canonical_n(int(rest)))
        if kind == "kummer":
            base, caret, exponent = rest.partition("^")
            if not caret:
                raise ValueError
            return Kummer(int(base), int(exponent))
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse field spec '{text}'") from exc
    raise InvalidInputError(f"unknown field kind '{kind}' in '{text}'")


def format_trace(verdict: Verdict) -> str:
    return "|".join(f"{s.criterion}:{'hit' if s.fired else 'miss'}" for s in verdict.trace)


# --- classify ----------------------------------------------------------------


def _render_classify(field: FieldDescriptor, p1: int, p2: int, verdict: Verdict, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "field": str(field),
            "p1": p1,
            "p2": p2,
            "outcome": verdict.outcome.value,
            "certainty": verdict.certainty.value,
            "trace": [{"criterion": s.criterion, "fired": s.fired} for s in verdict.trace],
        }
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["field", "p1", "p2", "classify", "certainty", "trace"])
        writer.writerow(
            [str(field), p1, p2, verdict.outcome.value, verdict.certainty.value, format_trace(verdict)]
        )
        return buffer.getvalue()
    return (
        f"field: {field}\n"
        f"p1: {p1}\n"
        f"p2: {p2}\n"
        f"outcome: {verdict.outcome.value}\n"
        f"certainty: {verdict.certainty.value}\n"
        f"trace: {format_trace(verdict)}\n"
    )


def _cmd_classify(args: argparse.Namespace) -> int:
    field = parse_field_spec(args.field)
    verdict = classify(field, args.p, args.q)
    sys.stdout.write(_render_classify(field, args.p, args.q, verdict, args.format))
    return EXIT_OK


# --- ramification ------------------------------------------------------------


def _cmd_ramification(args: argparse.Namespace) -> int:
    data = ramified_places(args.a, args.b)
    places = [str(v) for v in data.ramified]
    if args.format == "json":
        payload = {
            "a": args.a,
            "b": args.b,
            "ramified": places,
            "reduced_discriminant": data.reduced_discriminant,
        }
        sys.stdout.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["a", "b", "ramified", "reduced_discriminant"])
        writer.writerow([args.a, args.b, ";".join(places), data.reduced_discriminant])
        sys.stdout.write(buffer.getvalue())
    else:
        shown = " ".join(places) if places else "(none)"
        sys.stdout.write(
            f"a: {args.a}\nb: {args.b}\nramified: {shown}\n"
            f"reduced_discriminant: {data.reduced_discriminant}\n"
        )
    return EXIT_OK


# --- verify ------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    p1: int
    p2: int
    classify_outcome: Outcome
    classify_certainty: Certainty
    oracle_outcome: Outcome
    agree: bool
    trace: str


@dataclass(frozen=True)
class SweepReport:
    field: FieldDescriptor
    max_prime: int
    rows: tuple[SweepRow, ...]
    agree: int
    disagree: int
    unknown: int


def build_sweep_report(field: FieldDescriptor, max_prime: int) -> SweepReport:
    """Compare classifier and oracle on every ordered pair of distinct primes.

    For Kummer fields the oracle runs over Q(zeta_{l**k}): the radical layer
    has odd degree, so the division/split answer transfers unchanged.
    """
    if isinstance(field, Kummer):
        oracle_field: FieldDescriptor = Cyclotomic(field.ell**field.k)
    else:
        oracle_field = field
    primes = arith.primes_up_to(max_prime)
    rows = []
    agree = disagree = unknown = 0
    for p1 in primes:
        for p2 in primes:
            if p1 == p2:
                continue
            verdict = classify(field, p1, p2)
            oracle_outcome = division_oracle(oracle_field, p1, p2)
            matches = verdict.outcome is oracle_outcome
            if verdict.outcome is Outcome.UNKNOWN:
                unknown += 1
            elif matches:
                agree += 1
            else:
                disagree += 1
            rows.append(
                SweepRow(
                    p1=p1,
                    p2=p2,
                    classify_outcome=verdict.outcome,
                    classify_certainty=verdict.certainty,
                    oracle_outcome=oracle_outcome,
                    agree=matches,
                    trace=format_trace(verdict),
                )
            )
    return SweepReport(
        field=field, max_prime=max_prime, rows=tuple(rows), agree=agree, disagree=disagree, unknown=unknown
    )


def render_report_csv(report: SweepReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["field", "p1", "p2", "classify", "certainty", "oracle", "agree", "trace"])
    for row in report.rows:
        writer.writerow(
            [
                str(report.field),
                row.p1,
                row.p2,
                row.classify_outcome.value,
                row.classify_certainty.value,
                row.oracle_outcome.value,
                "true" if row.agree else "false",
                row.trace,
            ]
        )
    return buffer.getvalue()


def render_report_json(report: SweepReport) -> str:
    payload = {
        "field": str(report.field),
        "max_prime": report.max_prime,
        "rows": [
            {
                "p1": row.p1,
                "p2": row.p2,
                "classify": row.classify_outcome.value,
                "certainty": row.classify_certainty.value,
                "oracle": row.oracle_outcome.value,
                "agree": row.agree,
                "trace": row.trace,
            }
            for row in report.rows
        ],
        "summary": {"agree": report.agree, "disagree": report.disagree, "unknown": report.unknown},
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def render_report_text(report: SweepReport) -> str:
    lines = [
        f"field: {report.field}",
        f"max_prime: {report.max_prime}",
        f"pairs: {len(report.rows)}",
        f"agree: {report.agree}",
        f"disagree: {report.disagree}",
        f"unknown: {report.unknown}",
    ]
    for row in report.rows:
        if row.classify_outcome is not Outcome.UNKNOWN and not row.agree:
            lines.append(
                f"DISAGREE p1={row.p1} p2={row.p2} classify={row.classify_outcome.value} "
                f"oracle={row.oracle_outcome.value} trace={row.trace}"
            )
        elif row.classify_outcome is Outcome.UNKNOWN and row.oracle_outcome is Outcome.DIVISION:
            # division algebras the sufficient condition missed (informational)
            lines.append(f"UNCOVERED p1={row.p1} p2={row.p2} oracle=Division")
    return "\n".join(lines) + "\n"


_REPORT_RENDERERS = {"csv": render_report_csv, "json": render_report_json, "text": render_report_text}


def _cmd_verify(args: argparse.Namespace) -> int:
    if not 2 <= args.max_prime <= MAX_SWEEP_PRIME:
        raise InvalidInputError(f"--max-prime must be in [2, {MAX_SWEEP_PRIME}], got {args.max_prime}")
    field = parse_field_spec(args.field)
    report = build_sweep_report(field, args.max_prime)
    body = _REPORT_RENDERERS[args.format](report)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(body)
        sys.stdout.write(
            f"wrote {args.out}: pairs={len(report.rows)} agree={report.agree} "
            f"disagree={report.disagree} unknown={report.unknown}\n"
        )
    else:
        sys.stdout.write(body)
    return EXIT_DISAGREEMENTS if report.disagree else EXIT_OK


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatsplit",
        description="Decide whether quaternion algebras H(p1, p2) split or are division algebras "
        "over quadratic, biquadratic, cyclotomic, and Kummer base fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify one algebra over one field")
    p_classify.add_argument("--field", required=True, help="e.g. cyclotomic:7, quadratic:-7, kummer:3^2")
    p_classify.add_argument("--p", type=int, required=True, help="first prime")
    p_classify.add_argument("--q", type=int, required=True, help="second prime")
    p_classify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_classify.set_defaults(func=_cmd_classify)

    p_ram = sub.add_parser("ramification", help="ramified places and reduced discriminant over Q")
    p_ram.add_argument("--a", type=int, required=True)
    p_ram.add_argument("--b", type=int, required=True)
    p_ram.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_ram.set_defaults(func=_cmd_ramification)

    p_verify = sub.add_parser("verify", help="sweep classifier vs oracle over prime pairs")
    p_verify.add_argument("--field", required=True)
    p_verify.add_argument("--max-prime", type=int, default=200, dest="max_prime")
    p_verify.add_argument("--out", default=None, help="write the report here instead of stdout")
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnsupportedFieldError, BadModulusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
