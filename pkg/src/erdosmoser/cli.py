"""Command-line surface: emits every table and figure dataset as CSV or
JSON on stdout.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 factorization
budget exceeded.  Output is byte-identical across runs and across --jobs
values; figures are emitted as data, never rendered.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Union

from . import __version__
from .approx import RealArg, correction_ratio, first_correction, sum_eml_leading, sum_eml_truncated
from .arith import DivisorBudget
from .candidates import CaseKind, candidate_roots
from .errors import BudgetExceededError, DomainError
from .polyform import cleared_poly, eval_poly, full_eml_poly
from .powersum import PowerSumQuery, sum_direct, sum_eml_exact
from .search import find_solutions
from .signanalysis import Sign, dominance_ratio, dominance_series, sign_summary, sign_threshold

SCHEMA_VERSION = "1"

_FIG1_QUANTITIES = (
    "sum_exact",
    "sum_approx",
    "power",
    "diff_approx",
    "diff_corrected",
    "diff_exact",
)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems by default; the stable contract
    # here is 1 for usage, 2 for domain errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _range_arg(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return int(lo), int(hi)
        value = int(text)
        return value, value
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 7/2 or 3.5, got {text!r}") from None


def _exact(value: Union[int, Fraction]) -> str:
    """Canonical exact string: integer digits, or num/den in lowest terms."""
    return str(value)


def _log10_abs(value: Union[int, Fraction]) -> Optional[float]:
    if value == 0:
        return None
    f = Fraction(value)
    return math.log10(abs(f.numerator)) - math.log10(f.denominator)


def _sign_int(value: Union[int, Fraction]) -> int:
    return (value > 0) - (value < 0)


def _triplet(name: str, value, include_exact: bool) -> dict:
    cells = {}
    if include_exact:
        cells[name] = _exact(value)
    cells[f"{name}_log10"] = _log10_abs(value)
    cells[f"{name}_sign"] = _sign_int(value)
    return cells


def _triplet_columns(names, include_exact: bool) -> list[str]:
    cols = []
    for name in names:
        if include_exact:
            cols.append(name)
        cols.extend((f"{name}_log10", f"{name}_sign"))
    return cols


def _csv_cell(value, digits: int):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return value


def _json_cell(value, digits: int):
    if isinstance(value, float):
        return float(f"{value:.{digits}g}")
    return value


def _emit(args, command: str, params: dict, columns: list[str], rows: list[dict]) -> None:
    digits = args.digits
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "params": params,
            "rows": [{c: _json_cell(row.get(c), digits) for c in columns} for row in rows],
        }
        sys.stdout.write(json.dumps(doc) + "\n")
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row.get(c), digits) for c in columns])


def _validate_common(args) -> None:
    if not 1 <= args.digits <= 50:
        raise DomainError(f"--digits must be in [1, 50], got {args.digits}")
    if args.jobs < 1:
        raise DomainError(f"--jobs must be >= 1, got {args.jobs}")
    if args.trial_budget < 2:
        raise DomainError(f"--trial-budget must be >= 2, got {args.trial_budget}")


def _cmd_sum(args):
    if args.m < 2:
        raise DomainError(f"--m must be >= 2, got {args.m}")
    query = PowerSumQuery(args.m - 1, args.k)
    direct = sum_direct(query)
    expansion = sum_eml_exact(query)
    row = {
        "k": args.k,
        "m": args.m,
        "sum_direct": _exact(direct),
        "sum_eml": _exact(expansion),
        "diff": _exact(direct - expansion),
    }
    return "sum", {"k": args.k, "m": args.m}, list(row), [row]


def _cmd_approx(args):
    arg = RealArg(args.m)
    p = args.p if args.p is not None else args.k // 2
    leading = sum_eml_leading(arg, args.k)
    correction = first_correction(arg, args.k)
    truncated = sum_eml_truncated(arg, args.k, p)
    ratio = correction_ratio(arg, args.k) if arg.m >= 3 else None
    row = {"k": args.k, "m": _exact(arg.m), "p": p}
    row.update(_triplet("sum_approx", leading, args.exact))
    row.update(_triplet("first_correction", correction, args.exact))
    if ratio is None:
        for col in _triplet_columns(["correction_ratio"], args.exact):
            row[col] = None
    else:
        row.update(_triplet("correction_ratio", ratio, args.exact))
    row.update(_triplet("sum_truncated", truncated, args.exact))
    columns = ["k", "m", "p"] + _triplet_columns(
        ["sum_approx", "first_correction", "correction_ratio", "sum_truncated"], args.exact
    )
    params = {"k": args.k, "m": _exact(arg.m), "p": p}
    return "approx", params, columns, [row]


def _cmd_poly(args):
    cp = full_eml_poly(args.k) if args.full_eml else cleared_poly(args.k)
    rows = [{"power": i, "coefficient": _exact(c)} for i, c in enumerate(cp.poly.coeffs)]
    params = {
        "k": args.k,
        "full_eml": args.full_eml,
        "degree": cp.poly.degree,
        "multiplier": _exact(cp.multiplier),
        "leading": _exact(cp.poly.coeffs[-1]),
    }
    return "poly", params, ["power", "coefficient"], rows


def _cmd_candidates(args):
    cs = candidate_roots(args.k, DivisorBudget(args.trial_budget))
    integers = set(cs.integer_candidates_ge3)
    rows = [
        {
            "candidate": _exact(c),
            "is_integer": c.denominator == 1,
            "integer_ge3": c.denominator == 1 and int(c) in integers,
        }
        for c in cs.all_candidates
    ]
    params = {
        "k": cs.k,
        "source": cs.source.value,
        "factored_root_zero": cs.factored_root_zero,
        "count": len(cs.all_candidates),
    }
    return "candidates", params, ["candidate", "is_integer", "integer_ge3"], rows


def _cmd_signs(args):
    reports = sign_summary(args.k_max)
    rows = []
    zeros = 0
    for r in reports:
        if r.sign is Sign.ZERO:
            zeros += 1
        rows.append(
            {
                "k": r.k,
                "case": "FULL_SET" if r.case is None else r.case.name,
                "m0": r.m0,
                "value": _exact(r.value),
                "sign": r.sign.name,
            }
        )
    if zeros:
        print(
            f"warning: {zeros} candidate(s) evaluate to exactly zero, "
            "i.e. the cleared polynomial has a rational root",
            file=sys.stderr,
        )
    return "signs", {"k_max": args.k_max}, ["k", "case", "m0", "value", "sign"], rows


def _cmd_ratios(args):
    case = CaseKind[args.case]
    series = dominance_series(case, args.k_from, args.k_to, args.step)
    columns = ["case", "k", "ratio"]
    if args.exact:
        columns.append("exact")
    columns += ["limit", "series_decreasing"]
    rows = []
    for point in series.points:
        row = {
            "case": case.name,
            "k": point.k,
            "ratio": point.value,
            "limit": point.limit,
            "series_decreasing": series.decreasing_from_start,
        }
        if args.exact:
            row["exact"] = None if point.exact is None else _exact(point.exact)
        rows.append(row)
    params = {
        "case": case.name,
        "k_from": args.k_from,
        "k_to": args.k_to,
        "step": args.step,
        "monotone_start": series.monotone_start,
    }
    return "ratios", params, columns, rows


def _cmd_threshold(args):
    predicted, crossing = sign_threshold(args.k)
    row = {
        "k": args.k,
        "predicted": _exact(predicted),
        "predicted_float": float(predicted),
        "crossing": crossing,
    }
    return "threshold", {"k": args.k}, list(row), [row]


def _cmd_search(args):
    hits = find_solutions(args.k, args.m, shards=args.jobs)
    rows = [{"k": hit.k, "m": hit.m} for hit in hits]
    params = {
        "k_from": args.k[0],
        "k_to": args.k[1],
        "m_from": args.m[0],
        "m_to": args.m[1],
    }
    return "search", params, ["k", "m"], rows


def _cmd_figure1(args):
    k_from, k_to = args.k_from, args.k_to
    m_from, m_to = args.m_from, args.m_to
    if k_from < 1 or k_to < k_from:
        raise DomainError(f"invalid k range [{k_from}, {k_to}]")
    if m_from < 2 or m_to < m_from:
        raise DomainError(f"invalid m range [{m_from}, {m_to}]")
    rows = []
    for k in range(k_from, k_to + 1):
        running = sum_direct(PowerSumQuery(m_from - 1, k))
        for m in range(m_from, m_to + 1):
            arg = RealArg(Fraction(m))
            approx_sum = sum_eml_leading(arg, k)
            power = m**k
            diff_approx = approx_sum - power
            row = {"k": k, "m": m}
            row.update(_triplet("sum_exact", running, args.exact))
            row.update(_triplet("sum_approx", approx_sum, args.exact))
            row.update(_triplet("power", power, args.exact))
            row.update(_triplet("diff_approx", diff_approx, args.exact))
            row.update(
                _triplet("diff_corrected", diff_approx + first_correction(arg, k), args.exact)
            )
            row.update(_triplet("diff_exact", running - power, args.exact))
            rows.append(row)
            running += power
    columns = ["k", "m"] + _triplet_columns(_FIG1_QUANTITIES, args.exact)
    params = {"k_from": k_from, "k_to": k_to, "m_from": m_from, "m_to": m_to}
    return "figure1", params, columns, rows


def _cmd_figure2(args):
    if args.k_to < 4:
        raise DomainError(f"--k-to must be >= 4, got {args.k_to}")
    rows = []
    for case in CaseKind:
        for k in range(case.min_k, args.k_to + 1, 2):
            m0 = case.candidate(k)
            value = eval_poly(cleared_poly(k).poly, m0)
            point = dominance_ratio(k, case)
            row = {"case": case.name, "k": k, "m0": m0}
            row.update(_triplet("value", value, args.exact))
            row["sign"] = Sign.of(value).name
            row["ratio"] = point.value
            row["limit"] = point.limit
            rows.append(row)
    columns = (
        ["case", "k", "m0"]
        + _triplet_columns(["value"], args.exact)
        + ["sign", "ratio", "limit"]
    )
    return "figure2", {"k_to": args.k_to}, columns, rows


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default: csv)")
    common.add_argument("--digits", type=int, default=6,
                        help="decimal digits for float columns (default: 6)")
    common.add_argument("--exact", action=argparse.BooleanOptionalAction, default=True,
                        help="emit exact value columns alongside floats")
    common.add_argument("--jobs", type=int, default=1,
                        help="shard count for range scans (default: 1)")
    common.add_argument("--trial-budget", type=int, default=1_000_000,
                        help="largest trial divisor attempted when factoring")

    parser = _Parser(
        prog="erdosmoser",
        description="Exact-arithmetic workbench for the Erdős–Moser power-sum equation.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("sum", parents=[common],
                       help="direct power sum and its full expansion at integer m")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_cmd_sum)

    p = sub.add_parser("approx", parents=[common],
                       help="truncated approximants at a rational point m")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=_fraction_arg, required=True, metavar="RAT")
    p.add_argument("--p", type=int, default=None, help="correction terms to include")
    p.set_defaults(handler=_cmd_approx)

    p = sub.add_parser("poly", parents=[common], help="cleared polynomial coefficients")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--full-eml", action="store_true",
                   help="full-expansion polynomial instead of the truncated form")
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("candidates", parents=[common],
                       help="rational-root candidates for one exponent")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_candidates)

    p = sub.add_parser("signs", parents=[common],
                       help="exact signs at all candidates up to a k bound")
    p.add_argument("--k-max", type=int, required=True)
    p.set_defaults(handler=_cmd_signs)

    p = sub.add_parser("ratios", parents=[common],
                       help="dominance-ratio series for one case")
    p.add_argument("--case", choices=[c.name for c in CaseKind], required=True)
    p.add_argument("--k-from", type=int, required=True)
    p.add_argument("--k-to", type=int, required=True)
    p.add_argument("--step", type=int, default=2)
    p.set_defaults(handler=_cmd_ratios)

    p = sub.add_parser("threshold", parents=[common],
                       help="predicted and exact sign-crossing point")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_threshold)

    p = sub.add_parser("search", parents=[common],
                       help="brute-force scan for exact solutions")
    p.add_argument("--k", type=_range_arg, required=True, metavar="LO..HI")
    p.add_argument("--m", type=_range_arg, required=True, metavar="LO..HI")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("figure1", parents=[common],
                       help="sum/approximant/difference grid over (k, m)")
    p.add_argument("--k-from", type=int, default=2)
    p.add_argument("--k-to", type=int, default=102)
    p.add_argument("--m-from", type=int, default=3)
    p.add_argument("--m-to", type=int, default=200)
    p.set_defaults(handler=_cmd_figure1)

    p = sub.add_parser("figure2", parents=[common],
                       help="per-case candidate values, signs and ratios over k")
    p.add_argument("--k-to", type=int, required=True)
    p.set_defaults(handler=_cmd_figure2)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_common(args)
        command, params, columns, rows = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _emit(args, command, params, columns, rows)
    return 0
