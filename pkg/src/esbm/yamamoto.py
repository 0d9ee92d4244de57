"""Factorizations (a,b,c,d) of natural solutions at a prime p and the
classical Kronecker-symbol conditions derived from them.

Type 2 (p exactly divides two coordinates): the normalized triple
(u_unit, u/p, u/p) factors as (bcd, abd, acd) with pa + b + c = 4abcd.
Type 1 (p exactly divides one): (u/p, u, u) factors as (bcd, acd, abd)
with a + bp + cp = 4abcd.  The factorization is recovered by a divisor
search, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import kronecker
from .surface import Solution, TypeKind, classify_type, is_natural


class TypeNotApplicable(ValueError):
    """The solution is neither Type 1 nor Type 2 at this prime."""


class RecoveryFailure(ValueError):
    """No divisor choice satisfies the defining relation and coprimality."""


@dataclass(frozen=True)
class Factorization:
    p: int
    kind: TypeKind
    a: int
    b: int
    c: int
    d: int
    q: int
    # original 1-based coordinate positions, in normal-form slot order
    positions: tuple[int, int, int]


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if d * d != n]
    return out


def _split(x_bc: int, y: int, z: int) -> tuple[int, int, int] | None:
    # y = a*s, z = a*t with gcd(s, t) = 1, and s*t must equal x_bc.
    a = gcd(y, z)
    s, t = y // a, z // a
    if s * t != x_bc:
        return None
    return a, s, t


def all_factorizations(s: Solution, p: int) -> list[Factorization]:
    """Every (a,b,c,d) consistent with the defining relation at p.

    Searches d over divisors of the gcd of the normalized triple and
    both orderings of the coordinates sharing the p factor pattern.
    """
    if not is_natural(s):
        raise TypeNotApplicable("factorization is defined for natural solutions")
    tag = classify_type(s, p)
    if tag.kind is TypeKind.OTHER:
        raise TypeNotApplicable(
            f"{s.u} is neither Type 1 nor Type 2 at p = {p}"
        )
    special = tag.position - 1
    others = [i for i in range(3) if i != special]
    found: list[Factorization] = []
    seen: set[tuple[int, ...]] = set()

    if tag.kind is TypeKind.TYPE1:
        x = s.u[special] // p
        for o1, o2 in (tuple(others), tuple(reversed(others))):
            y, z = s.u[o1], s.u[o2]  # (acd, abd)
            g = gcd(gcd(x, y), z)
            for d in _divisors(g):
                split = _split(x // d, y // d, z // d)
                if split is None:
                    continue
                a, c, b = split
                if a + b * p + c * p != 4 * a * b * c * d:
                    continue
                if gcd(a, b) != 1 or gcd(b, c) != 1 or gcd(c, d) != 1:
                    continue
                if (a * b * c * d) % p == 0:
                    continue
                key = (a, b, c, d, o1, o2)
                if key in seen:
                    continue
                seen.add(key)
                found.append(
                    Factorization(
                        p, TypeKind.TYPE1, a, b, c, d,
                        q=4 * a * b * d - p,
                        positions=(special + 1, o1 + 1, o2 + 1),
                    )
                )
    else:
        x = s.u[special]
        for o1, o2 in (tuple(others), tuple(reversed(others))):
            y, z = s.u[o1] // p, s.u[o2] // p  # (abd, acd)
            g = gcd(gcd(x, y), z)
            for d in _divisors(g):
                split = _split(x // d, y // d, z // d)
                if split is None:
                    continue
                a, b, c = split
                if p * a + b + c != 4 * a * b * c * d:
                    continue
                if gcd(a, b) != 1 or gcd(b, c) != 1 or gcd(c, a) != 1:
                    continue
                if (b * c * d) % p == 0:
                    continue
                key = (a, b, c, d, o1, o2)
                if key in seen:
                    continue
                seen.add(key)
                found.append(
                    Factorization(
                        p, TypeKind.TYPE2, a, b, c, d,
                        q=4 * a * b * d - 1,
                        positions=(special + 1, o1 + 1, o2 + 1),
                    )
                )
    found.sort(key=lambda f: (f.d, f.positions))
    return found


def recover_factorization(s: Solution, p: int) -> Factorization:
    """The canonical factorization (least d, original coordinate order)."""
    found = all_factorizations(s, p)
    if not found:
        raise RecoveryFailure(
            f"no (a,b,c,d) satisfies the relation for {s.u} at p = {p}"
        )
    return found[0]


def reassemble(f: Factorization) -> tuple[int, int, int]:
    """Rebuild the solution triple from a factorization (round trip)."""
    a, b, c, d = f.a, f.b, f.c, f.d
    if f.kind is TypeKind.TYPE1:
        normal = (f.p * b * c * d, a * c * d, a * b * d)
    else:
        normal = (b * c * d, f.p * a * b * d, f.p * a * c * d)
    out = [0, 0, 0]
    for slot, pos in enumerate(f.positions):
        out[pos - 1] = normal[slot]
    return tuple(out)


@dataclass(frozen=True)
class ConditionResult:
    name: str
    value: int | None
    status: str  # "pass" | "fail" | "skipped"


@dataclass(frozen=True)
class YamamotoReport:
    p: int
    u: tuple[int, int, int]
    factorization: Factorization
    conditions: tuple[ConditionResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.conditions)


def yamamoto_check(s: Solution, p: int) -> YamamotoReport:
    """Evaluate the applicable Kronecker conditions for a solution.

    Type 2: (p | 4abd-1) = -1 for every odd p.  Type 1: (p | 4ab*q)
    with q = 4abd-p, only under p = 1 mod 4.  Either type: (p | 4bc),
    only under p = 1 mod 4.  Conditions outside their hypotheses are
    reported as skipped.
    """
    f = recover_factorization(s, p)
    conditions: list[ConditionResult] = []
    if f.kind is TypeKind.TYPE2:
        value = kronecker(p, f.q)
        conditions.append(
            ConditionResult(
                "kronecker(p, 4abd-1)", value, "pass" if value == -1 else "fail"
            )
        )
    elif p % 4 == 1:
        value = kronecker(p, 4 * f.a * f.b * f.q)
        conditions.append(
            ConditionResult(
                "kronecker(p, 4ab(4abd-p))",
                value,
                "pass" if value == -1 else "fail",
            )
        )
    else:
        conditions.append(
            ConditionResult("kronecker(p, 4ab(4abd-p))", None, "skipped")
        )
    if p % 4 == 1:
        value = kronecker(p, 4 * f.b * f.c)
        conditions.append(
            ConditionResult(
                "kronecker(p, 4bc)", value, "pass" if value == -1 else "fail"
            )
        )
    else:
        conditions.append(ConditionResult("kronecker(p, 4bc)", None, "skipped"))
    return YamamotoReport(p=p, u=s.u, factorization=f, conditions=conditions)
