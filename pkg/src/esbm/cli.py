"""Command-line interface: reproducible, machine-readable verification runs.

Exit codes: 0 = all records pass, 1 = at least one counterexample record,
2 = usage or validation error.  Output is deterministic for a fixed
configuration (including --seed); records stream in ascending n.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable

from math import isqrt

from . import brauer, fp, padic
from .arith import Sign, is_prime, primes_up_to
from .enumerate import integer_solutions, natural_solutions
from .hilbert import Place, reciprocity_check
from .surface import Solution, evaluate_form
from .yamamoto import RecoveryFailure, TypeNotApplicable, yamamoto_check

BRAUER_CHECKS = set(brauer.CHECKS)
EXTRA_CHECKS = {"yamamoto", "reciprocity", "two-adic"}


class UsageError(Exception):
    pass


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"need three comma-separated integers, got {text!r}")
    try:
        return tuple(int(x) for x in parts)
    except ValueError as exc:
        raise UsageError(f"bad triple {text!r}: {exc}") from None


def _parse_range(text: str) -> list[int]:
    try:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None


def _report_record(rep: brauer.InvariantReport) -> dict:
    rec = {
        "n": rep.n,
        "u": list(rep.u) if rep.u is not None else None,
        "class": rep.kind,
        "invariants": dict(rep.invariants),
        "product": rep.product,
        "prediction": rep.prediction,
        "pass": rep.passed,
    }
    if rep.note:
        rec["note"] = rep.note
    return rec


def serialize_report(records: list[dict], fmt: str = "json") -> bytes:
    """Deterministic bytes for a record stream (json, csv, or text)."""
    if fmt == "json":
        lines = [json.dumps(rec, separators=(",", ":")) for rec in records]
        return ("\n".join(lines) + "\n" if lines else "").encode()
    if fmt == "csv":
        if not records:
            return b""
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0].keys()))
        writer.writeheader()
        for rec in records:
            writer.writerow(
                {
                    key: json.dumps(val, separators=(",", ":"))
                    if isinstance(val, (dict, list))
                    else val
                    for key, val in rec.items()
                }
            )
        return buf.getvalue().encode()
    if fmt == "text":
        lines = []
        for rec in records:
            parts = []
            for key, val in rec.items():
                if key == "pass":
                    parts.append("PASS" if val else "FAIL")
                else:
                    parts.append(f"{key}={json.dumps(val, separators=(',', ':'))}")
            lines.append("  ".join(parts))
        return ("\n".join(lines) + "\n" if lines else "").encode()
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# Subcommand record builders
# ---------------------------------------------------------------------------


def _cmd_enumerate(args: argparse.Namespace) -> list[dict]:
    if args.n is None:
        raise UsageError("enumerate requires --n")
    records = []
    naturals = natural_solutions(args.n)
    for u in sorted(naturals):
        records.append({"n": args.n, "u": list(u), "class": "natural"})
    for u in sorted(integer_solutions(args.n) - naturals):
        records.append({"n": args.n, "u": list(u), "class": "integer"})
    return records


def _cmd_invariant(args: argparse.Namespace) -> list[dict]:
    if args.n is None or args.u is None:
        raise UsageError("invariant requires --n and --u")
    u = _parse_triple(args.u)
    value = evaluate_form(args.n, u)
    if value != 0 or 0 in u:
        raise UsageError(
            f"{u} is not a solution for n={args.n}: form evaluates to {value}"
        )
    return [_report_record(brauer.invariant_profile(Solution(args.n, u)))]


def _verify_one(task: tuple[str, int, int]) -> list[dict]:
    check, n, pmax = task
    return [_report_record(r) for r in brauer.verify(check, ns=[n], pmax=pmax)]


def _yamamoto_one(p: int) -> list[dict]:
    records = []
    for u in sorted(natural_solutions(p)):
        s = Solution(p, u)
        try:
            report = yamamoto_check(s, p)
        except (TypeNotApplicable, RecoveryFailure) as exc:
            records.append(
                {
                    "n": p,
                    "u": list(u),
                    "class": "natural",
                    "conditions": {},
                    "pass": True,
                    "note": f"recovery not applicable: {exc}",
                }
            )
            continue
        conditions = {
            c.name: (c.value if c.value is not None else "skipped")
            for c in report.conditions
        }
        records.append(
            {
                "n": p,
                "u": list(u),
                "class": "natural",
                "conditions": conditions,
                "pass": report.passed,
            }
        )
    return records


def _two_adic_one(task: tuple[int, int]) -> list[dict]:
    n, precision = task
    report = padic.exhaust_two_adic(n, precision)
    if n % 2:
        passed = report.all_trivial
        expect = "all +1"
    else:
        passed = report.signs == {1, -1}
        expect = "both signs"
    return [
        {
            "n": n,
            "k": report.k,
            "plus": report.plus_classes,
            "minus": report.minus_classes,
            "unresolved": report.unresolved_classes,
            "expect": expect,
            "pass": passed,
        }
    ]


def _pmap(fn, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _cmd_verify(args: argparse.Namespace) -> list[dict]:
    check = args.check
    if check in BRAUER_CHECKS:
        ns = _select_ns(args, check)
        chunks = _pmap(_verify_one, [(check, n, args.pmax) for n in ns], args.jobs)
        return [rec for chunk in chunks for rec in chunk]
    if check == "yamamoto":
        if args.n is not None:
            ps = [args.n]
        else:
            ps = [p for p in primes_up_to(args.pmax) if p != 2]
        chunks = _pmap(_yamamoto_one, ps, args.jobs)
        return [rec for chunk in chunks for rec in chunk]
    if check == "two-adic":
        ns = _select_ns(args, check, allow_even=True)
        chunks = _pmap(_two_adic_one, [(n, args.precision) for n in ns], args.jobs)
        return [rec for chunk in chunks for rec in chunk]
    if check == "reciprocity":
        return _reciprocity_records(args.count, args.seed)
    raise UsageError(
        f"unknown check {check!r}; known: "
        + ", ".join(sorted(BRAUER_CHECKS | EXTRA_CHECKS))
    )


def _select_ns(args: argparse.Namespace, check: str, allow_even: bool = False) -> list[int]:
    if args.n is not None:
        return [args.n]
    if args.odd_range is not None:
        ns = [n for n in _parse_range(args.odd_range) if n % 2]
        if not ns:
            raise UsageError(f"empty odd range {args.odd_range!r}")
        if check == "prime-legendre":
            ns = [n for n in ns if is_prime(n)]
        if check == "square-patterns":
            ns = [n for n in ns if n > 1 and isqrt(n) ** 2 == n]
        return ns
    raise UsageError(f"{check} requires --n or --odd-range")


def _reciprocity_records(count: int, seed: int) -> list[dict]:
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        num_a = rng.randint(-10000, 10000) or 1
        den_a = rng.randint(1, 10000)
        num_b = rng.randint(-10000, 10000) or 1
        den_b = rng.randint(1, 10000)
        a, b = Fraction(num_a, den_a), Fraction(num_b, den_b)
        if reciprocity_check(a, b) is not Sign.PLUS:
            failures.append(
                {
                    "check": "reciprocity",
                    "a": f"{a}",
                    "b": f"{b}",
                    "pass": False,
                }
            )
    summary = {
        "check": "reciprocity",
        "pairs": count,
        "seed": seed,
        "failures": len(failures),
        "pass": not failures,
    }
    return failures + [summary]


def _cmd_sample(args: argparse.Namespace) -> list[dict]:
    if args.n is None or args.p is None:
        raise UsageError("sample requires --n and --p")
    target = Sign.of(args.target)
    if args.p == 2:
        point = padic.sample_even_two(args.n, target, args.precision)
    else:
        point = padic.sample_bad_odd_prime(args.n, args.p, target, args.precision)
    value = int(brauer.local_invariant(point, Place.finite(point.p)))
    return [
        {
            "n": args.n,
            "p": point.p,
            "precision": point.k,
            "residues": list(point.a),
            "value_valuation": (
                "inf"
                if point.cert.value_valuation == float("inf")
                else int(point.cert.value_valuation)
            ),
            "derivative_valuation": point.cert.derivative_valuation,
            "invariant": value,
            "target": int(target),
            "pass": value == int(target),
        }
    ]


def _census_one(task: tuple[int, int]) -> dict:
    n, p = task
    c = fp.census(n, p)
    return {
        "n": c.n,
        "p": c.p,
        "total": c.total,
        "image": c.image_size,
        "witness": list(c.witness) if c.witness is not None else None,
        "surjective": c.witness is None,
    }


def _cmd_fp(args: argparse.Namespace) -> list[dict]:
    if args.n is None:
        raise UsageError("fp requires --n")
    if args.p is not None:
        primes = [args.p]
    elif args.pmax is not None:
        primes = primes_up_to(args.pmax)
    else:
        raise UsageError("fp requires --p or --pmax")
    return _pmap(_census_one, [(args.n, p) for p in primes], args.jobs)


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="esbm",
        description=(
            "Exact arithmetic for 4/n = 1/u1 + 1/u2 + 1/u3: enumeration, "
            "Hilbert symbols, and local invariants."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1)

    p_enum = sub.add_parser("enumerate", help="natural and integer solutions")
    p_enum.add_argument("--n", type=int)
    common(p_enum)

    p_inv = sub.add_parser("invariant", help="invariant profile of a triple")
    p_inv.add_argument("--n", type=int)
    p_inv.add_argument("--u", type=str, help="comma-separated triple, e.g. -5,2,2")
    common(p_inv)

    p_ver = sub.add_parser("verify", help="run a named check over a range")
    p_ver.add_argument("--check", required=True)
    p_ver.add_argument("--n", type=int)
    p_ver.add_argument("--odd-range", type=str, dest="odd_range")
    p_ver.add_argument("--pmax", type=int, default=50)
    p_ver.add_argument("--precision", type=int, default=8)
    p_ver.add_argument("--count", type=int, default=10000)
    common(p_ver)

    p_sam = sub.add_parser("sample", help="certified local point samplers")
    p_sam.add_argument("--n", type=int)
    p_sam.add_argument("--p", type=int)
    p_sam.add_argument("--target", type=int, choices=(1, -1), default=-1)
    p_sam.add_argument("--precision", type=int, default=8)
    common(p_sam)

    p_fp = sub.add_parser("fp", help="finite-field census and witnesses")
    p_fp.add_argument("--n", type=int)
    p_fp.add_argument("--p", type=int)
    p_fp.add_argument("--pmax", type=int)
    common(p_fp)

    return parser


_DISPATCH = {
    "enumerate": _cmd_enumerate,
    "invariant": _cmd_invariant,
    "verify": _cmd_verify,
    "sample": _cmd_sample,
    "fp": _cmd_fp,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records = _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.buffer.write(serialize_report(records, args.format))
    sys.stdout.buffer.flush()
    failed = any(rec.get("pass") is False for rec in records)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
