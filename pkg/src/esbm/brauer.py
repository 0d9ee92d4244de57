"""Local invariants of the quaternion class (-u1/u3, -u2/u3) and the
adelic machinery built on them: per-solution invariant profiles, the
product over bad primes, Brauer-set witnesses, and parameterized
verifiers for the global statements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import gcd

from .arith import Sign, is_prime, legendre_unit, odd_prime_divisors, primes_up_to
from .enumerate import integer_solutions, natural_solutions
from .hilbert import Place, hilbert
from .padic import PadicPoint, sample_bad_odd_prime, sample_even_two
from .surface import RealComponent, Solution, is_natural, unit_valuation_pair

CHECKS = (
    "natural-product",
    "integer-product",
    "prime-legendre",
    "square-patterns",
    "good-primes",
    "two-adic-trivial",
)


def _solution_invariant(s: Solution, v: Place) -> Sign:
    u1, u2, u3 = s.u
    return hilbert(Fraction(-u1, u3), Fraction(-u2, u3), v)


def _padic_invariant(pt: PadicPoint, v: Place) -> Sign:
    if v.is_infinite or v.p != pt.p:
        raise ValueError(
            f"point lives at p = {pt.p}, cannot evaluate at {v}"
        )
    svals = pt.coordinate_valuations()
    # The true point agrees with the representative to k - vG digits;
    # units must be determined mod p (mod 8 when p = 2).
    slack = pt.k - pt.cert.derivative_valuation - max(svals)
    if slack < (3 if pt.p == 2 else 1):
        raise ValueError(f"precision {pt.k} too small to read units at {pt.p}")
    u1, u2, u3 = pt.a
    return hilbert(Fraction(-u1, u3), Fraction(-u2, u3), v)


def local_invariant(s: Solution | PadicPoint, v: Place) -> Sign:
    """inv_v of the class (-u1/u3, -u2/u3) at a local point.

    Solutions are global, so any place is allowed; a certified p-adic
    point can only be evaluated at its own prime.
    """
    if isinstance(s, PadicPoint):
        return _padic_invariant(s, v)
    return _solution_invariant(s, v)


@dataclass(frozen=True)
class InvariantReport:
    """Per-place invariant values for one record, with the prediction."""

    n: int
    u: tuple[int, int, int] | None
    kind: str
    invariants: tuple[tuple[str, int], ...]
    product: int
    prediction: int
    passed: bool
    note: str = ""

    def __post_init__(self) -> None:
        prod = math.prod(v for _, v in self.invariants) if self.invariants else 1
        if prod != self.product:
            raise ValueError(
                f"product {self.product} is not the product of entries {prod}"
            )

    @property
    def invariant_map(self) -> dict[str, int]:
        return dict(self.invariants)


def invariant_profile(s: Solution) -> InvariantReport:
    """Invariants at infinity, 2, and all odd primes dividing n*u1*u2*u3.

    Every omitted place contributes +1, so reciprocity forces the
    recorded product to be +1 for any global solution.
    """
    primes = sorted(set(odd_prime_divisors(s.n * s.u[0] * s.u[1] * s.u[2])))
    entries = [("inf", int(local_invariant(s, Place.infinity())))]
    entries.append(("2", int(local_invariant(s, Place.finite(2)))))
    entries.extend(
        (str(p), int(local_invariant(s, Place.finite(p)))) for p in primes
    )
    product = math.prod(v for _, v in entries)
    return InvariantReport(
        n=s.n,
        u=s.u,
        kind="natural" if is_natural(s) else "integer",
        invariants=tuple(entries),
        product=product,
        prediction=1,
        passed=product == 1,
    )


def divisor_product(s: Solution) -> Sign:
    """Product of local invariants over the odd primes dividing n (odd n)."""
    if s.n % 2 == 0:
        raise ValueError(f"divisor product is stated for odd n, got {s.n}")
    total = Sign.PLUS
    for p in odd_prime_divisors(s.n):
        total = total * local_invariant(s, Place.finite(p))
    return total


# ---------------------------------------------------------------------------
# Adelic points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdelicPoint:
    """A real component together with local data at the bad primes.

    The support must cover every odd prime dividing n, plus 2 when n is
    even; all other places contribute +1 automatically.
    """

    n: int
    real: RealComponent
    finite: dict[int, Solution | PadicPoint] = field(compare=False)

    def __post_init__(self) -> None:
        required = set(odd_prime_divisors(self.n))
        if self.n % 2 == 0:
            required.add(2)
        missing = required - set(self.finite)
        if missing:
            raise ValueError(f"support must contain bad primes {sorted(missing)}")
        for q, datum in self.finite.items():
            if not is_prime(q):
                raise ValueError(f"support key is not a prime: {q}")
            if datum.n != self.n:
                raise ValueError(
                    f"local datum at {q} lives on the n = {datum.n} model"
                )
            if isinstance(datum, PadicPoint) and datum.p != q:
                raise ValueError(
                    f"p-adic point at key {q} has residue prime {datum.p}"
                )


def adelic_total_invariant(x: AdelicPoint) -> Sign:
    """Product of the real invariant and all supported local invariants.

    The real factor is -1 on the all-positive component and +1 on the
    other; unsupported places are +1 by the good-prime and odd-n 2-adic
    triviality results.
    """
    total = Sign.MINUS if x.real is RealComponent.PLUS else Sign.PLUS
    for q in sorted(x.finite):
        total = total * local_invariant(x.finite[q], Place.finite(q))
    return total


def brauer_set_witnesses(
    n: int, precision: int = 8
) -> tuple[AdelicPoint, AdelicPoint]:
    """Adelic points with total invariant +1 and -1 for the same n.

    The +1 witness shows the Brauer set of the all-positive component is
    nonempty; the -1 witness shows it is a proper subset.  Both are
    assembled from certified local samplers at one bad prime of 2n, with
    target +1 at every other bad prime.
    """
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    odd_bad = odd_prime_divisors(n)
    pivot = odd_bad[0] if odd_bad else 2

    def sampler(q: int, target: Sign) -> PadicPoint:
        if q == 2:
            return sample_even_two(n, target, precision)
        return sample_bad_odd_prime(n, q, target, precision)

    def witness(total: Sign) -> AdelicPoint:
        # real factor is -1, so the pivot target is -total... : total =
        # (-1) * pivot_target, every other place +1.
        pivot_target = Sign.MINUS if total is Sign.PLUS else Sign.PLUS
        finite: dict[int, Solution | PadicPoint] = {}
        for q in odd_bad:
            finite[q] = sampler(q, pivot_target if q == pivot else Sign.PLUS)
        if n % 2 == 0:
            finite[2] = sampler(2, pivot_target if pivot == 2 else Sign.PLUS)
        return AdelicPoint(n=n, real=RealComponent.PLUS, finite=finite)

    return witness(Sign.PLUS), witness(Sign.MINUS)


# ---------------------------------------------------------------------------
# Parameterized verifiers
# ---------------------------------------------------------------------------


def _require_odd(n: int, check: str) -> None:
    if n % 2 == 0:
        raise ValueError(f"{check} requires odd n, got {n}")


def _product_report(s: Solution, kind: str, prediction: int) -> InvariantReport:
    entries = tuple(
        (str(p), int(local_invariant(s, Place.finite(p))))
        for p in odd_prime_divisors(s.n)
    )
    product = math.prod(v for _, v in entries) if entries else 1
    return InvariantReport(
        n=s.n,
        u=s.u,
        kind=kind,
        invariants=entries,
        product=product,
        prediction=prediction,
        passed=product == prediction,
    )


def _matches_square_pattern(n: int, u: tuple[int, int, int]) -> str | None:
    for i, j, k in permutations(range(3)):
        if j > k:
            continue
        if u[i] % n == 0 and gcd(n, u[j] * u[k]) == 1:
            return "n divides one coordinate, the others are coprime to n"
        if gcd(n, u[i]) == 1 and u[j] % n == 0 and u[k] % n == 0:
            return "n divides two coordinates, the third is coprime to n"
    return None


def verify(
    check: str,
    ns: list[int] | range | None = None,
    pmax: int = 50,
) -> list[InvariantReport]:
    """Run one named check over a range of n, one report per record.

    Checks: natural-product (product over p | n is -1 on natural
    solutions, odd n); integer-product (+1 on non-natural ones);
    prime-legendre (unit pair exists with Legendre symbol -1, prime n);
    square-patterns (no natural solution of an odd square n matches a
    forbidden divisibility pattern; matching non-natural solutions are
    flagged); good-primes (invariant +1 at all p not dividing 2n up to
    pmax); two-adic-trivial (invariant +1 at 2 for odd n).
    """
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r}; known: {', '.join(CHECKS)}")
    if ns is None:
        raise ValueError("ns is required")
    ns = sorted(set(ns))
    reports: list[InvariantReport] = []

    if check == "natural-product":
        for n in ns:
            _require_odd(n, check)
            for u in sorted(natural_solutions(n)):
                reports.append(_product_report(Solution(n, u), "natural", -1))
        return reports

    if check == "integer-product":
        for n in ns:
            _require_odd(n, check)
            naturals = natural_solutions(n)
            for u in sorted(integer_solutions(n)):
                if u in naturals:
                    continue
                reports.append(_product_report(Solution(n, u), "integer", 1))
        return reports

    if check == "prime-legendre":
        for p in ns:
            if p == 2 or not is_prime(p):
                raise ValueError(f"prime-legendre needs odd primes, got {p}")
            for u in sorted(natural_solutions(p)):
                s = Solution(p, u)
                pair = unit_valuation_pair(s, p)
                if pair is None:
                    reports.append(
                        InvariantReport(
                            n=p, u=u, kind="natural", invariants=(),
                            product=1, prediction=-1, passed=False,
                            note="no unit valuation pair",
                        )
                    )
                    continue
                i, j = pair
                value = legendre_unit(Fraction(-s.u[i - 1], s.u[j - 1]), p)
                reports.append(
                    InvariantReport(
                        n=p,
                        u=u,
                        kind="natural",
                        invariants=((str(p), value),),
                        product=value,
                        prediction=-1,
                        passed=value == -1,
                        note=f"unit pair ({i},{j})",
                    )
                )
        return reports

    if check == "square-patterns":
        for n in ns:
            _require_odd(n, check)
            if math.isqrt(n) ** 2 != n or n == 1:
                raise ValueError(f"square-patterns needs odd squares > 1, got {n}")
            naturals = natural_solutions(n)
            for u in sorted(naturals):
                pattern = _matches_square_pattern(n, u)
                rep = _product_report(Solution(n, u), "natural", -1)
                reports.append(
                    InvariantReport(
                        n=rep.n, u=rep.u, kind=rep.kind,
                        invariants=rep.invariants, product=rep.product,
                        prediction=rep.prediction,
                        passed=pattern is None,
                        note=pattern or "",
                    )
                )
            for u in sorted(integer_solutions(n) - naturals):
                pattern = _matches_square_pattern(n, u)
                if pattern is None:
                    continue
                rep = _product_report(Solution(n, u), "integer", 1)
                reports.append(
                    InvariantReport(
                        n=rep.n, u=rep.u, kind=rep.kind,
                        invariants=rep.invariants, product=rep.product,
                        prediction=rep.prediction, passed=rep.passed,
                        note=f"{pattern} (allowed: not a natural solution)",
                    )
                )
        return reports

    if check == "good-primes":
        good = primes_up_to(pmax)
        for n in ns:
            for u in sorted(integer_solutions(n)):
                s = Solution(n, u)
                entries = tuple(
                    (str(p), int(local_invariant(s, Place.finite(p))))
                    for p in good
                    if (2 * n) % p
                )
                product = math.prod(v for _, v in entries) if entries else 1
                reports.append(
                    InvariantReport(
                        n=n,
                        u=u,
                        kind="natural" if is_natural(s) else "integer",
                        invariants=entries,
                        product=product,
                        prediction=1,
                        passed=all(v == 1 for _, v in entries),
                    )
                )
        return reports

    # two-adic-trivial
    for n in ns:
        _require_odd(n, check)
        for u in sorted(integer_solutions(n)):
            s = Solution(n, u)
            value = int(local_invariant(s, Place.finite(2)))
            reports.append(
                InvariantReport(
                    n=n,
                    u=u,
                    kind="natural" if is_natural(s) else "integer",
                    invariants=(("2", value),),
                    product=value,
                    prediction=1,
                    passed=value == 1,
                )
            )
    return reports
