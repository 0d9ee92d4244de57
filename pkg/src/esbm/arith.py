"""Exact rational arithmetic, p-adic valuations, and quadratic symbols.

Everything here is pure and deterministic.  Rationals are stdlib
``fractions.Fraction`` values (always in lowest terms with a positive
denominator), signs live in the two-element group ``Sign``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import gcd

Rat = Fraction

# Witnesses making Miller-Rabin deterministic below 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class Sign(enum.Enum):
    """An element of the multiplicative group {+1, -1}."""

    PLUS = 1
    MINUS = -1

    def __mul__(self, other: "Sign") -> "Sign":
        return Sign(self.value * other.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return "+1" if self is Sign.PLUS else "-1"

    @classmethod
    def from_parity(cls, exponent: int) -> "Sign":
        """(-1) raised to ``exponent``."""
        return cls.PLUS if exponent % 2 == 0 else cls.MINUS

    @classmethod
    def of(cls, value: int) -> "Sign":
        if value == 1:
            return cls.PLUS
        if value == -1:
            return cls.MINUS
        raise ValueError(f"not a sign: {value}")


def as_rat(x: Rat | int) -> Rat:
    return x if isinstance(x, Fraction) else Fraction(x)


@lru_cache(maxsize=1 << 18)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for all n below 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending (simple sieve)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {p: multiplicity}; empty for |n| <= 1."""
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def odd_prime_divisors(n: int) -> list[int]:
    return sorted(p for p in prime_factors(n) if p != 2)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(x: Rat | int, p: int) -> int:
    """p-adic valuation of a nonzero rational.

    Additive under multiplication; vp(0, p) is undefined and raises.
    """
    _check_prime(p)
    x = as_rat(x)
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def unit_part(x: Rat | int, p: int) -> Rat:
    """The p-adic unit u with x = p**vp(x, p) * u."""
    v = vp(x, p)
    return as_rat(x) / Fraction(p) ** v


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, in {-1, 0, +1}."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"Legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def legendre_unit(x: Rat | int, p: int) -> int:
    """Legendre symbol of a rational p-adic unit (vp(x, p) must be 0)."""
    x = as_rat(x)
    if vp(x, p) != 0:
        raise ValueError(f"{x} is not a p-adic unit at {p}")
    # 1/d and d agree mod squares, so (n/d | p) = (n*d | p).
    return legendre(x.numerator * x.denominator, p)


def kronecker(a: int, b: int) -> int:
    """Kronecker symbol (a|b) for arbitrary integers.

    Extends the Legendre symbol via (a|2) (nonzero iff a odd, +1 iff
    a = +-1 mod 8), (a|-1) = sign of a, (a|0) = 1 iff a = +-1, and
    complete multiplicativity in b.
    """
    if b == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and b % 2 == 0:
        return 0
    sign = 1
    twos = _int_valuation(b, 2) if b % 2 == 0 else 0
    b >>= twos
    if twos % 2 == 1 and a % 8 in (3, 5):
        sign = -sign
    if b < 0:
        b = -b
        if a < 0:
            sign = -sign
    # b is now positive and odd: standard binary Jacobi loop.
    a %= b
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                sign = -sign
        if a % 4 == 3 and b % 4 == 3:
            sign = -sign
        a, b = b % a, a
    return sign if b == 1 else 0


def least_nonresidue(p: int) -> int:
    """Smallest positive quadratic non-residue mod an odd prime p."""
    for a in range(2, p):
        if legendre(a, p) == -1:
            return a
    raise ValueError(f"no non-residue found: {p} is not an odd prime")


def modinv(a: int, m: int) -> int:
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible mod {m}")
    return pow(a, -1, m)
