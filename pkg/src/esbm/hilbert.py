"""Hilbert symbols (a,b)_v over the rationals, at every place.

The closed forms follow the classical unit-part formulas at odd primes,
the epsilon/omega formula at 2, and the sign rule at the real place.
``hilbert_oracle`` is an independent cross-check: it decides solvability
of z^2 = a x^2 + b y^2 over the completion by a digit-by-digit residue
search whose accepting states carry an explicit Hensel margin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    Rat,
    Sign,
    as_rat,
    is_prime,
    legendre_unit,
    odd_prime_divisors,
    unit_part,
    vp,
    _int_valuation,
)


@dataclass(frozen=True)
class Place:
    """The real place (p is None) or the finite place at a prime p."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"not a prime: {self.p}")

    @classmethod
    def infinity(cls) -> "Place":
        return cls(None)

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @property
    def is_infinite(self) -> bool:
        return self.p is None

    def __repr__(self) -> str:
        return "Place(oo)" if self.p is None else f"Place({self.p})"


INFINITY = Place.infinity()


class OracleInconclusive(RuntimeError):
    """Raised when the search depth is too small to decide solvability."""


def _require_nonzero(a: Rat, b: Rat) -> tuple[Rat, Rat]:
    a, b = as_rat(a), as_rat(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    return a, b


def hilbert_at_infinity(a: Rat | int, b: Rat | int) -> Sign:
    """(a,b)_oo = -1 iff both arguments are negative."""
    a, b = _require_nonzero(a, b)
    return Sign.MINUS if a < 0 and b < 0 else Sign.PLUS


def hilbert_at_odd_prime(a: Rat | int, b: Rat | int, p: int) -> Sign:
    """(a,b)_p for odd p via valuations and Legendre symbols of unit parts.

    With a = p^alpha * u and b = p^beta * v this is
    (-1)^(alpha*beta*(p-1)/2) * (u|p)^beta * (v|p)^alpha.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"needs an odd prime, got {p}")
    a, b = _require_nonzero(a, b)
    alpha, beta = vp(a, p), vp(b, p)
    u, v = unit_part(a, p), unit_part(b, p)
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= legendre_unit(u, p)
    if alpha % 2:
        sign *= legendre_unit(v, p)
    return Sign.of(sign)


def _odd_unit_mod8(x: Rat) -> int:
    # 1/d = d mod 8 for odd d, so n/d = n*d mod 8.
    return (x.numerator * x.denominator) % 8


def _eps(r: int) -> int:
    # parity of (r-1)/2 for odd r
    return 1 if r % 4 == 3 else 0


def _omega(r: int) -> int:
    # parity of (r^2-1)/8 for odd r
    return 1 if r % 8 in (3, 5) else 0


def hilbert_at_two(a: Rat | int, b: Rat | int) -> Sign:
    """(a,b)_2 via the epsilon/omega exponent on 2-adic unit parts."""
    a, b = _require_nonzero(a, b)
    alpha, beta = vp(a, 2), vp(b, 2)
    u = _odd_unit_mod8(unit_part(a, 2))
    v = _odd_unit_mod8(unit_part(b, 2))
    exponent = _eps(u) * _eps(v) + alpha * _omega(v) + beta * _omega(u)
    return Sign.from_parity(exponent)


def hilbert(a: Rat | int, b: Rat | int, v: Place) -> Sign:
    """(a,b)_v at an arbitrary place."""
    if v.is_infinite:
        return hilbert_at_infinity(a, b)
    if v.p == 2:
        return hilbert_at_two(a, b)
    return hilbert_at_odd_prime(a, b, v.p)


def reciprocity_check(a: Rat | int, b: Rat | int) -> Sign:
    """Product of (a,b)_v over all places that can be nontrivial.

    Covers the real place, 2, and every odd prime dividing a numerator
    or denominator; all other symbols are +1 by the odd-prime formula.
    The product formula says the result is always +1.
    """
    a, b = _require_nonzero(a, b)
    primes: set[int] = set()
    for part in (a.numerator, a.denominator, b.numerator, b.denominator):
        primes.update(odd_prime_divisors(part))
    total = hilbert_at_infinity(a, b) * hilbert_at_two(a, b)
    for p in sorted(primes):
        total = total * hilbert_at_odd_prime(a, b, p)
    return total


# ---------------------------------------------------------------------------
# Search oracle
# ---------------------------------------------------------------------------


def _square_reduce(x: Rat, p: int) -> int:
    """An integer in the square class of x with p-valuation 0 or 1.

    Clearing the denominator (times den^2) and stripping p^2 factors are
    substitutions x -> x/p on the quadric, so solvability is unchanged.
    """
    m = x.numerator * x.denominator
    v = _int_valuation(m, p)
    return m // p ** (v - v % 2)


def _margin_accepts(A: int, B: int, x: int, y: int, z: int, f: int, p: int) -> bool:
    """True if this exact representative certifies a nearby Q_p zero."""
    if f == 0:
        return True
    vf = _int_valuation(f, p)
    t = None
    for d in (2 * A * x, 2 * B * y, -2 * z):
        if d != 0:
            vd = _int_valuation(d, p)
            t = vd if t is None else min(t, vd)
    return t is not None and vf > 2 * t


def _children(A: int, B: int, node: tuple[int, int, int, int], p: int, pj: int):
    """Extensions of a mod-p^j class to mod-p^(j+1) classes with F = 0."""
    x, y, z, f = node
    pj1 = pj * p
    if p == 2:
        for dx in (0, pj):
            for dy in (0, pj):
                for dz in (0, pj):
                    xc, yc, zc = x + dx, y + dy, z + dz
                    fc = A * xc * xc + B * yc * yc - zc * zc
                    if fc % pj1 == 0:
                        yield (xc, yc, zc, fc)
        return
    # Odd p, j >= 1: the quadratic correction vanishes mod p^(j+1), so the
    # digit constraint is linear: c0 + cx*s + cy*t + cz*w = 0 mod p.
    c0 = (f // pj) % p
    cx, cy, cz = (2 * A * x) % p, (2 * B * y) % p, (-2 * z) % p
    if cx == cy == cz == 0:
        if c0 % p != 0:
            return
        for dx in range(p):
            for dy in range(p):
                for dz in range(p):
                    xc, yc, zc = x + dx * pj, y + dy * pj, z + dz * pj
                    yield (xc, yc, zc, A * xc * xc + B * yc * yc - zc * zc)
        return
    if cz != 0:
        inv = pow(cz, -1, p)
        for dx in range(p):
            for dy in range(p):
                dz = (-(c0 + cx * dx + cy * dy) * inv) % p
                xc, yc, zc = x + dx * pj, y + dy * pj, z + dz * pj
                yield (xc, yc, zc, A * xc * xc + B * yc * yc - zc * zc)
    elif cy != 0:
        inv = pow(cy, -1, p)
        for dx in range(p):
            for dz in range(p):
                dy = (-(c0 + cx * dx + cz * dz) * inv) % p
                xc, yc, zc = x + dx * pj, y + dy * pj, z + dz * pj
                yield (xc, yc, zc, A * xc * xc + B * yc * yc - zc * zc)
    else:
        inv = pow(cx, -1, p)
        for dy in range(p):
            for dz in range(p):
                dx = (-(c0 + cy * dy + cz * dz) * inv) % p
                xc, yc, zc = x + dx * pj, y + dy * pj, z + dz * pj
                yield (xc, yc, zc, A * xc * xc + B * yc * yc - zc * zc)


def _search_finite(A: int, B: int, p: int, depth: int) -> Sign:
    frontier: list[tuple[int, int, int, int]] = []
    for x in range(p):
        for y in range(p):
            for z in range(p):
                if x == y == z == 0:
                    continue
                f = A * x * x + B * y * y - z * z
                if f % p:
                    continue
                if _margin_accepts(A, B, x, y, z, f, p):
                    return Sign.PLUS
                frontier.append((x, y, z, f))
    pj = p
    for _ in range(1, depth):
        nxt: list[tuple[int, int, int, int]] = []
        for node in frontier:
            for child in _children(A, B, node, p, pj):
                if _margin_accepts(A, B, *child[:3], child[3], p):
                    return Sign.PLUS
                nxt.append(child)
        frontier = nxt
        pj *= p
        if not frontier:
            return Sign.MINUS
    if frontier:
        raise OracleInconclusive(
            f"undecided at depth {depth} for z^2 = {A} x^2 + {B} y^2 over Q_{p}"
        )
    return Sign.MINUS


def hilbert_oracle(a: Rat | int, b: Rat | int, v: Place, depth: int) -> Sign:
    """Decide (a,b)_v by searching for solutions of z^2 = a x^2 + b y^2.

    At the real place this is sign analysis.  At a finite place the
    search walks primitive residue classes mod p, p^2, ..., p^depth and
    accepts exactly when a class carries a Hensel margin (the value's
    valuation exceeds twice a partial derivative's), so a +1 answer
    certifies a genuine Q_p point and a -1 answer means the class tree
    died out.  Raises OracleInconclusive if depth was too small; depth
    2*vp(4ab) + 3 always suffices.
    """
    a, b = _require_nonzero(a, b)
    if depth < 1:
        raise ValueError("depth must be positive")
    if v.is_infinite:
        return Sign.PLUS if a > 0 or b > 0 else Sign.MINUS
    p = v.p
    assert p is not None
    return _search_finite(_square_reduce(a, p), _square_reduce(b, p), p, depth)
