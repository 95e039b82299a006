"""Command-line front end: ``numsimplex <command> ...``.

Every command builds an OutputDocument and renders it as text, JSON or CSV.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import baser, oracle, poly, reflexive, simplex
from .numsys import (
    BaseR,
    Numeral,
    decode,
    encode,
    format_system,
    parse_system,
    radices,
)
from .poly import IntPolynomial

FORMATS = ("text", "json", "csv")


@dataclass
class OutputDocument:
    kind: str  # polynomial | numeral | boolean-report | table
    payload: dict
    ok: bool = True

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps({"kind": self.kind, **_jsonable(self.payload)}, indent=2)
        if fmt == "csv":
            return _render_csv(self.payload)
        return _render_text(self.payload)


def poly_json(p: IntPolynomial) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(obj: dict) -> IntPolynomial:
    return IntPolynomial(tuple(int(c) for c in obj["coeffs"]))


def _jsonable(x: Any) -> Any:
    if isinstance(x, IntPolynomial):
        return poly_json(x)
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _text_value(x: Any) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(_text_value(v) for v in x) + ")"
    if x is None:
        return "none"
    return str(x)


def _render_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if key == "rows":
            for row in value:
                lines.append("  " + "  ".join(f"{k}={_text_value(v)}" for k, v in row.items()))
        else:
            lines.append(f"{key}: {_text_value(value)}")
    return "\n".join(lines)


def _csv_cell(x: Any) -> str:
    if isinstance(x, IntPolynomial):
        return " ".join(map(str, x.coeffs))
    if isinstance(x, (list, tuple)):
        return " ".join(_csv_cell(v) for v in x)
    if isinstance(x, bool):
        return str(x).lower()
    return "" if x is None else str(x)


def _render_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = payload.get("rows")
    if rows:
        header = list(rows[0])
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(row[h]) for h in header])
    else:
        writer.writerow(["key", "value"])
        for key, value in payload.items():
            writer.writerow([key, _csv_cell(value)])
    return buf.getvalue().rstrip("\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def property_flags(p: IntPolynomial, d: int) -> dict:
    return {
        "symmetric": poly.is_symmetric(p, d),
        "unimodal": poly.is_unimodal(p),
        "log_concave": poly.is_log_concave(p),
        "real_rooted": poly.is_real_rooted(p),
    }


def _divisor_q(system, n: int) -> simplex.QSimplex:
    if radices(system, n) is None:
        raise ValueError(
            f"{format_system(system)} is not mixed radix; use 'reflexive --divisors' instead"
        )
    dp = reflexive.mixed_radix_divisor_system(system, n)
    if dp is None:
        raise ValueError(f"{format_system(system)} has no divisor system up to n={n}")
    return reflexive.q_from_divisors(dp, n)


def run_hstar(args) -> OutputDocument:
    method = args.method
    payload: dict = {}
    if args.q is not None:
        if method != "omega":
            raise ValueError("--method nasc/sections needs --system base:R")
        s = simplex.QSimplex(args.q)
        h = simplex.hstar(s, workers=args.workers)
    else:
        if args.system is None or args.n is None:
            raise ValueError("give either --q or both --system and --n")
        system = parse_system(args.system)
        payload["system"] = format_system(system)
        if isinstance(system, BaseR):
            s = baser.BaseRSimplex(system.r, args.n).q
            if method == "nasc":
                h = baser.hstar_nasc(system.r, args.n, budget=args.budget)
            elif method == "sections":
                h = baser.hstar_sections(system.r, args.n)
            else:
                h = simplex.hstar(s, workers=args.workers)
        else:
            if method != "omega":
                raise ValueError("--method nasc/sections only applies to base:R systems")
            s = _divisor_q(system, args.n)
            h = simplex.hstar(s, workers=args.workers)
    payload.update(
        q=s.q,
        n=s.n,
        method=method,
        normalized_volume=simplex.normalized_volume(s),
        reflexive=simplex.is_reflexive(s),
        hstar=h,
        **property_flags(h, s.n),
    )
    ok = True
    if args.verify:
        others = {"omega": simplex.hstar(s, workers=args.workers)}
        if args.system is not None and isinstance(parse_system(args.system), BaseR):
            r = parse_system(args.system).r
            others["nasc"] = baser.hstar_nasc(r, args.n, budget=args.budget)
            others["sections"] = baser.hstar_sections(r, args.n)
        else:
            others["oracle"] = oracle.ehrhart_table(s, budget=args.budget).hstar
        ok = all(p == h for p in others.values())
        payload["verified_against"] = tuple(sorted(others))
        payload["agreement"] = ok
    return OutputDocument("polynomial", payload, ok)


def run_numeral(args) -> OutputDocument:
    system = parse_system(args.system)
    if args.mode == "encode":
        num = encode(system, int(args.value), args.width)
        payload = {"system": format_system(system), "value": int(args.value), "numeral": str(num)}
    else:
        num = Numeral.parse(args.value, system)
        payload = {"system": format_system(system), "numeral": args.value, "value": decode(num)}
    return OutputDocument("numeral", payload)


def run_reflexive(args) -> OutputDocument:
    system = parse_system(args.system)
    n_max = args.n_max
    payload: dict = {"system": format_system(system), "n_max": n_max}
    if args.divisors is not None:
        dp = reflexive.DivisorPrefix(system, args.divisors)
        if not reflexive.check_divisor_system(dp, n_max):
            dp = None
    else:
        if radices(system, n_max) is None:
            raise ValueError(
                f"{format_system(system)} is not mixed radix; supply --divisors d0,d1,... explicitly"
            )
        dp = reflexive.mixed_radix_divisor_system(system, n_max)
        failure = reflexive.first_divisor_failure(system, n_max)
        if failure is not None:
            payload["first_failure"] = f"n={failure[0]}: {failure[1]}"
    payload["divisors"] = dp.d if dp is not None else None
    rows = []
    if dp is not None:
        for n in range(1, n_max + 1):
            s = reflexive.q_from_divisors(dp, n)
            h = simplex.hstar(s)
            rows.append(
                {
                    "n": n,
                    "q": s.q,
                    "hstar": h,
                    "reflexive": simplex.is_reflexive(s),
                    "symmetric": poly.is_symmetric(h, n),
                }
            )
        payload["rows"] = rows
    return OutputDocument("table", payload)


def run_oracle(args) -> OutputDocument:
    s = simplex.QSimplex(args.q)
    table = oracle.ehrhart_table(s, t_max=args.t_max, budget=args.budget)
    formula = simplex.hstar(s)
    payload = {
        "q": s.q,
        "counts": table.counts,
        "ehrhart_coeffs": table.ehrhart_coeffs,
        "oracle_hstar": table.hstar,
        "formula_hstar": formula,
        "agreement": table.hstar == formula,
        "ehrhart_positive": oracle.is_ehrhart_positive(table),
    }
    ok = True
    if args.check == "hstar":
        ok = payload["agreement"]
    elif args.check == "positivity":
        ok = payload["ehrhart_positive"]
    return OutputDocument("table", payload, ok)


def run_check(args) -> OutputDocument:
    p = IntPolynomial(args.coeffs)
    if p.is_zero:
        raise ValueError("properties of the zero polynomial are undefined")
    d = p.degree if args.degree is None else args.degree
    payload = {"coeffs": p, **property_flags(p, d), "real_root_count": poly.real_root_count(p)}
    return OutputDocument("boolean-report", payload)


def run_sections(args) -> OutputDocument:
    seq = baser.section_sequence(args.r, args.n)
    m = args.r - 1
    rows = [
        {"ell": ell, "section": p}
        for ell, p in zip(range(m - 1, -1, -1), seq.polys)
    ]
    pairs = seq.interlacing_pairs(strict=True)
    g = baser.apply_H(args.r, seq.polys)
    payload = {
        "r": args.r,
        "n": args.n,
        "strictly_interlacing": all(pairs.values()),
        "pairs": tuple(f"{i}<{j}:{str(v).lower()}" for (i, j), v in pairs.items()),
        "H_last_entry": g[-1],
        "H_last_is_hstar": g[-1] == baser.hstar_sections(args.r, args.n),
        "rows": rows,
    }
    return OutputDocument("table", payload)


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    p.add_argument("--format", choices=FORMATS, **({"default": "text"} if not suppress else kw))
    p.add_argument("--budget", type=int, **({"default": None} if not suppress else kw))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numsimplex",
        description="h*-polynomials of simplices attached to numeral systems",
    )
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hstar", help="h*-polynomial and property flags")
    p.add_argument("--q", type=_int_list)
    p.add_argument("--system")
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=("omega", "nasc", "sections"), default="omega")
    p.add_argument("--verify", action="store_true", help="cross-check with the other methods")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=run_hstar)

    p = sub.add_parser("numeral", help="encode or decode numerals")
    p.add_argument("mode", choices=("encode", "decode"))
    p.add_argument("value")
    p.add_argument("--system", required=True)
    p.add_argument("--width", type=int)
    p.set_defaults(func=run_numeral)

    p = sub.add_parser("reflexive", help="divisor systems and their reflexive simplices")
    p.add_argument("--system", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--divisors", type=_int_list)
    p.set_defaults(func=run_reflexive)

    p = sub.add_parser("oracle", help="brute-force lattice-point counts")
    p.add_argument("--q", type=_int_list, required=True)
    p.add_argument("--t-max", type=int)
    p.add_argument("--check", choices=("hstar", "positivity"))
    p.set_defaults(func=run_oracle)

    p = sub.add_parser("check", help="property flags of a coefficient list")
    p.add_argument("--coeffs", type=_int_list, required=True)
    p.add_argument("--degree", type=int)
    p.set_defaults(func=run_check)

    p = sub.add_parser("sections", help="section sequence of (1+...+z^(r-1))^n")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=run_sections)

    for sp in sub.choices.values():
        _add_globals(sp, suppress=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = oracle.default_budget()
    try:
        doc = args.func(args)
    except (ValueError, IndexError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(doc.render(args.format))
    return 0 if doc.ok else 1


if __name__ == "__main__":
    sys.exit(main())
