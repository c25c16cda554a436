"""Command line for the verification lab.

Three subcommands:

  verify   sweep all primes p = a^2 + c^4 <= limit (c even), compare the
           congruence classification, the 2-adic square test, and the
           2-valuation of the class number computed by form enumeration
  density  count lattice/distinct primes per congruence class against
           the expected main term
  unit     fundamental unit of Q(sqrt(p)) with the h = T + p - 1 mod 16
           check and the congruence prediction from p = a^2 + c^4

Exit status: 0 on success, 3 when a request is refused (precondition or
budget), 2 on argparse usage errors, 1 on internal failure.  Identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import decompose_two_squares, is_prime
from .classgroup import class_number_enum
from .errors import Refusal
from .gauss2adic import RankCase, sixteen_divides, sixteen_rank_case
from .realquad import fundamental_unit, predict_unit_congruences, williams_check
from .sievecounts import CongruencePair, CountReport, count_report

VERIFY_BUDGET = 2 * 10**6
_CLI_MODULUS_CAP = 10**4


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation."""

    command: str
    limit_x: int | None = None
    pair: CongruencePair | None = None
    p: int | None = None
    mode: str = "lattice"
    format: str = "text"
    output: str | None = None
    threads: int = 1

    def __post_init__(self):
        if self.command in ("verify", "density"):
            if self.limit_x is None:
                raise Refusal(f"{self.command} needs --limit")
            if self.limit_x < 3:
                raise Refusal(f"counting commands need --limit >= 3, got {self.limit_x}")
        if self.command == "unit" and self.p is None:
            raise Refusal("unit needs --p")
        if self.threads < 1:
            raise Refusal(f"--threads must be >= 1, got {self.threads}")


@dataclass(frozen=True)
class VerifyRow:
    p: int
    a: int
    c: int
    case: str
    v2: int
    two_adic_16: bool | None
    agree: bool


@dataclass(frozen=True)
class VerifyReport:
    limit: int
    rows: tuple[VerifyRow, ...]
    tallies: dict
    all_agree: bool


def form_witnesses(limit: int) -> list[tuple[int, int, int]]:
    """All (p, a, c) with p = a^2 + c^4 <= limit prime, a odd > 0, c even > 0.

    Each such prime has exactly one representation of this shape, so the
    list, sorted by p, enumerates the family without repeats.
    """
    out = []
    cmax = math.isqrt(math.isqrt(limit)) if limit >= 16 else 0
    for c in range(2, cmax + 1, 2):
        c4 = c**4
        amax = math.isqrt(limit - c4)
        for a in range(1, amax + 1, 2):
            n = a * a + c4
            if is_prime(n):
                out.append((n, a, c))
    out.sort()
    return out


def _verify_row(item: tuple[int, int, int]) -> VerifyRow:
    p, a, c = item
    case = sixteen_rank_case(a, c)
    data = class_number_enum(p)
    if case is RankCase.NOT8:
        two_adic = None
        agree = data.v2 <= 2
    else:
        w = decompose_two_squares(p)
        assert w.c == c
        two_adic = sixteen_divides(w)
        if case is RankCase.DIV16:
            agree = data.v2 >= 4 and two_adic
        else:
            agree = data.v2 == 3 and not two_adic
    return VerifyRow(
        p=p, a=a, c=c, case=case.value, v2=data.v2, two_adic_16=two_adic, agree=agree
    )


def _verify_chunk(chunk: list[tuple[int, int, int]]) -> list[VerifyRow]:
    return [_verify_row(item) for item in chunk]


def cmd_verify_sixteen(limit: int, threads: int = 1) -> VerifyReport:
    """Run the three-route 16-rank comparison over the family up to limit."""
    if limit > VERIFY_BUDGET:
        raise Refusal(
            f"verify budget is limit <= {VERIFY_BUDGET}; rerun with a smaller --limit"
        )
    witnesses = form_witnesses(limit)
    if threads > 1 and len(witnesses) > 1:
        size = max(1, len(witnesses) // (4 * threads))
        chunks = [witnesses[i : i + size] for i in range(0, len(witnesses), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = [row for part in pool.map(_verify_chunk, chunks) for row in part]
    else:
        rows = [_verify_row(item) for item in witnesses]
    tallies = {case.value: 0 for case in RankCase}
    for row in rows:
        tallies[row.case] += 1
    return VerifyReport(
        limit=limit,
        rows=tuple(rows),
        tallies=tallies,
        all_agree=all(row.agree for row in rows),
    )


def cmd_density(limit: int, pair: CongruencePair | None = None,
                mode: str = "lattice") -> CountReport:
    """Count report over one pair, or the 16 canonical classes."""
    pairs = None if pair is None else [pair]
    return count_report(limit, pairs=pairs, ratio_mode=mode)


@dataclass(frozen=True)
class UnitReport:
    p: int
    t: int
    u: int
    norm: int
    t_mod_16: int
    u_mod_8: int
    h: int
    williams_ok: bool | None
    case: str | None
    predicted_t_mod_16: int | None
    predicted_u_mod_8: tuple[int, ...] | None
    prediction_match: bool | None


def cmd_unit(p: int) -> UnitReport:
    """Fundamental unit plus the congruence checks tied to it."""
    unit = fundamental_unit(p)
    data = class_number_enum(p)
    williams_ok = None
    if data.h % 8 == 0:
        williams_ok = williams_check(p, data.h, unit)
    w = decompose_two_squares(p)
    case = pred_t = pred_u = match = None
    if w.c is not None:
        rank_case = sixteen_rank_case(w.a, w.c)
        case = rank_case.value
        if rank_case is not RankCase.NOT8:
            pred = predict_unit_congruences(w.a, w.c)
            pred_t = pred.t_mod_16
            pred_u = tuple(sorted(pred.u_mod_8))
            match = unit.t % 16 == pred_t and unit.u % 8 in pred.u_mod_8
    return UnitReport(
        p=p,
        t=unit.t,
        u=unit.u,
        norm=unit.norm,
        t_mod_16=unit.t % 16,
        u_mod_8=unit.u % 8,
        h=data.h,
        williams_ok=williams_ok,
        case=case,
        predicted_t_mod_16=pred_t,
        predicted_u_mod_8=pred_u,
        prediction_match=match,
    )


def _bool_cell(value: bool | None) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def render_verify(report: VerifyReport, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "a", "c", "case", "v2", "two_adic_16", "agree"])
        for r in report.rows:
            writer.writerow(
                [r.p, r.a, r.c, r.case, r.v2, _bool_cell(r.two_adic_16),
                 _bool_cell(r.agree)]
            )
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "limit": report.limit,
            "tallies": report.tallies,
            "all_agree": report.all_agree,
            "rows": [
                {
                    "p": r.p, "a": r.a, "c": r.c, "case": r.case, "v2": r.v2,
                    "two_adic_16": r.two_adic_16, "agree": r.agree,
                }
                for r in report.rows
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [
        f"primes p = a^2 + c^4 <= {report.limit} (c even): {len(report.rows)}",
        f"  DIV16    (16 | h):        {report.tallies['DIV16']}",
        f"  EXACTLY8 (8 | h, not 16): {report.tallies['EXACTLY8']}",
        f"  NOT8     (8 does not divide h): {report.tallies['NOT8']}",
        f"all three routes agree: {report.all_agree}",
    ]
    return "\n".join(lines) + "\n"


def render_density(report: CountReport, fmt: str) -> str:
    if fmt == "csv":
        return report.to_csv()
    if fmt == "json":
        return report.to_json()
    lines = [f"X = {report.x}"]
    header = f"{'a0':>4} {'q1':>4} {'c0':>4} {'q2':>4} {'lattice':>9} {'distinct':>9} {'expected':>14} {'ratio':>8}"
    lines.append(header)
    for row in report.rows:
        lines.append(
            f"{row.pair.a0:>4} {row.pair.q1:>4} {row.pair.c0:>4} {row.pair.q2:>4} "
            f"{row.lattice_count:>9} {row.distinct_count:>9} "
            f"{row.expected:>14.2f} {row.ratio:>8.4f}"
        )
    return "\n".join(lines) + "\n"


def render_unit(report: UnitReport, fmt: str) -> str:
    as_dict = {
        "p": report.p,
        "t": report.t,
        "u": report.u,
        "norm": report.norm,
        "t_mod_16": report.t_mod_16,
        "u_mod_8": report.u_mod_8,
        "h": report.h,
        "williams_ok": report.williams_ok,
        "case": report.case,
        "predicted_t_mod_16": report.predicted_t_mod_16,
        "predicted_u_mod_8": list(report.predicted_u_mod_8)
        if report.predicted_u_mod_8 is not None
        else None,
        "prediction_match": report.prediction_match,
    }
    if fmt == "json":
        return json.dumps(as_dict, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = list(as_dict)
        writer.writerow(keys)
        writer.writerow(
            [
                as_dict[k]
                if not isinstance(as_dict[k], (bool, type(None), list))
                else (_bool_cell(as_dict[k]) if not isinstance(as_dict[k], list)
                      else " ".join(map(str, as_dict[k])))
                for k in keys
            ]
        )
        return buf.getvalue()
    lines = [
        f"p = {report.p}",
        f"fundamental unit: T = {report.t}, U = {report.u}, norm = {report.norm}",
        f"T mod 16 = {report.t_mod_16}, U mod 8 = {report.u_mod_8}",
        f"h(-4p) = {report.h}",
    ]
    if report.williams_ok is None:
        lines.append("unit congruence h = T + p - 1 mod 16: not applicable (8 does not divide h)")
    else:
        lines.append(f"unit congruence h = T + p - 1 mod 16: {report.williams_ok}")
    if report.case is None:
        lines.append("p is not of the form a^2 + c^4 with c even")
    else:
        lines.append(f"congruence class: {report.case}")
        if report.predicted_t_mod_16 is not None:
            lines.append(
                f"predicted T mod 16 = {report.predicted_t_mod_16}, "
                f"U mod 8 in {set(report.predicted_u_mod_8)}: "
                f"match = {report.prediction_match}"
            )
    return "\n".join(lines) + "\n"


def _parse_pair(args) -> CongruencePair | None:
    given = [v is not None for v in (args.a0, args.q1, args.c0, args.q2)]
    if not any(given):
        return None
    if not all(given):
        raise Refusal("provide all of --a0 --q1 --c0 --q2, or none")
    if args.q1 > _CLI_MODULUS_CAP or args.q2 > _CLI_MODULUS_CAP:
        raise Refusal(f"moduli budget is q1, q2 <= {_CLI_MODULUS_CAP}")
    try:
        return CongruencePair(a0=args.a0, q1=args.q1, c0=args.c0, q2=args.q2)
    except ValueError as exc:
        raise Refusal(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sixteenrank",
        description="class number divisibility lab for Q(sqrt(-p))",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="three-route 16-rank sweep")
    p_verify.add_argument("--limit", type=int, required=True)
    p_verify.add_argument("--threads", type=int, default=1)

    p_density = sub.add_parser("density", help="congruence class counts")
    p_density.add_argument("--limit", type=int, required=True)
    p_density.add_argument("--a0", type=int)
    p_density.add_argument("--q1", type=int)
    p_density.add_argument("--c0", type=int)
    p_density.add_argument("--q2", type=int)
    p_density.add_argument("--mode", choices=["lattice", "distinct"],
                           default="lattice")

    p_unit = sub.add_parser("unit", help="fundamental unit and congruences")
    p_unit.add_argument("--p", type=int, required=True)

    for sp in (p_verify, p_density, p_unit):
        sp.add_argument("--format", choices=["csv", "json", "text"], default="text")
        sp.add_argument("--out", type=str, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            cfg = RunConfig(command="verify", limit_x=args.limit,
                            format=args.format, output=args.out, threads=args.threads)
            report = cmd_verify_sixteen(cfg.limit_x, threads=cfg.threads)
            text = render_verify(report, cfg.format)
        elif args.command == "density":
            cfg = RunConfig(command="density", limit_x=args.limit,
                            pair=_parse_pair(args), mode=args.mode,
                            format=args.format, output=args.out)
            report = cmd_density(cfg.limit_x, pair=cfg.pair, mode=cfg.mode)
            text = render_density(report, cfg.format)
        else:
            cfg = RunConfig(command="unit", p=args.p, format=args.format, output=args.out)
            report = cmd_unit(cfg.p)
            text = render_unit(report, cfg.format)
    except Refusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
