"""Certified Z_p points on the integral model.

A point is never reported from a bare residue triple: it always carries
a Hensel certificate (value valuation > 2 * derivative valuation at an
exact integer representative), which guarantees a genuine p-adic point
above the residues and pins down every coordinate valuation used in
invariant computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import (
    Sign,
    is_prime,
    least_nonresidue,
    legendre,
    modinv,
    _int_valuation,
)
from .surface import evaluate_form

_BIG = 100  # valuation sentinel for exact zeros in the vectorized sweep


class NotCertifiable(ValueError):
    """The residue triple does not carry a Hensel margin."""


@dataclass(frozen=True)
class HenselCertificate:
    value_valuation: float  # math.inf when the representative is exact
    derivative_valuation: int

    @property
    def margin_holds(self) -> bool:
        return self.value_valuation > 2 * self.derivative_valuation


@dataclass(frozen=True)
class PadicPoint:
    """Residues mod p^k plus the certificate of a true point above them."""

    n: int
    p: int
    k: int
    a: tuple[int, int, int]
    cert: HenselCertificate

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def coordinate_valuations(self) -> tuple[int, int, int]:
        # Determined: the certificate bounds every coordinate valuation
        # strictly below k - vG.
        return tuple(_int_valuation(c, self.p) for c in self.a)

    def refined(self, new_k: int) -> "PadicPoint":
        return refine(self, new_k)


def _derivatives(n: int, u: tuple[int, int, int]) -> tuple[int, int, int]:
    u1, u2, u3 = u
    return (
        4 * u2 * u3 - n * (u2 + u3),
        4 * u1 * u3 - n * (u1 + u3),
        4 * u1 * u2 - n * (u1 + u2),
    )


def hensel_certify(
    n: int, p: int, a: tuple[int, int, int], k: int
) -> PadicPoint:
    """Certify the residue triple a mod p^k as a genuine Z_p point.

    Requires the form to vanish mod p^k at the representative, the
    Hensel margin vF > 2 vG, and all coordinate valuations < k - vG
    (so that refinements can never change them).
    """
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    if k < 1:
        raise ValueError(f"precision must be >= 1, got {k}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    pk = p**k
    a = tuple(int(c) % pk for c in a)
    value = evaluate_form(n, a)
    if value % pk:
        raise NotCertifiable(
            f"form is {value % pk} mod {p}^{k}, not a solution at this precision"
        )
    vf: float = math.inf if value == 0 else _int_valuation(value, p)
    dvals = [_int_valuation(d, p) for d in _derivatives(n, a) if d != 0]
    if not dvals:
        raise NotCertifiable("all partial derivatives vanish exactly")
    vg = min(dvals)
    if not vf > 2 * vg:
        raise NotCertifiable(
            f"margin violated: vF = {vf} <= 2 * vG = {2 * vg} at {a}"
        )
    for c in a:
        if c == 0 or _int_valuation(c, p) >= k - vg:
            raise NotCertifiable(
                f"coordinate valuation undetermined at precision {k}: {a}"
            )
    return PadicPoint(n, p, k, a, HenselCertificate(vf, vg))


def refine(pt: PadicPoint, new_k: int) -> PadicPoint:
    """The same p-adic point re-certified at precision new_k.

    Newton iteration along the coordinate of least derivative valuation;
    never changes any coordinate valuation (the update has valuation
    >= k - vG, beyond every determined digit).
    """
    if new_k <= pt.k:
        return pt if new_k == pt.k else hensel_certify(pt.n, pt.p, pt.a, new_k)
    p, n = pt.p, pt.n
    work = p ** (new_k + pt.cert.derivative_valuation + 2)
    goal = p**new_k
    u = [c % work for c in pt.a]
    for _ in range(64):
        value = evaluate_form(n, tuple(u))
        if value % goal == 0:
            return hensel_certify(n, p, tuple(u), new_k)
        derivs = _derivatives(n, tuple(u))
        j = min(
            (i for i in range(3) if derivs[i] != 0),
            key=lambda i: _int_valuation(derivs[i], p),
        )
        g = _int_valuation(derivs[j], p)
        step = (value // p**g) * modinv((derivs[j] // p**g) % work, work)
        u[j] = (u[j] - step) % work
    raise NotCertifiable(f"refinement to precision {new_k} did not converge")


# ---------------------------------------------------------------------------
# Local point samplers at the bad places
# ---------------------------------------------------------------------------


def sample_bad_odd_prime(
    n: int, p: int, target: Sign, k: int = 6
) -> PadicPoint:
    """A certified Z_p point whose local invariant at p equals target.

    For n = p * n' the construction pins u1 = p*a1 with 4*a1 = n' mod p
    and picks units u2 = 1, u3 in {1, least non-residue} so that the
    Legendre symbol (-u2/u3 | p) hits the target; a1 is then solved
    exactly to high precision.  For p^b || n with b > 1 the b = 1 point
    is rescaled by p^(b-1), which leaves the coordinate ratios (hence
    the invariant) unchanged.  Returned precision is at least k.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"needs an odd prime, got {p}")
    if n < 1 or n % p:
        raise ValueError(f"{p} does not divide n = {n}")
    b = _int_valuation(n, p)
    nprime = n // p**b
    u2 = 1
    u3 = 1 if legendre(-1, p) == int(target) else least_nonresidue(p)
    big_k = max(k, 2 * b + 2, 3 * b - 2)
    mod = p ** (big_k + 2)
    # Solve a1 * (4 u2 u3 - n' p (u2+u3)) = n' u2 u3 in Z_p; the
    # coefficient is a unit since it is 4 u2 u3 mod p.
    coeff = 4 * u2 * u3 - nprime * p * (u2 + u3)
    a1 = nprime * u2 * u3 * modinv(coeff % mod, mod) % mod
    scale = p ** (b - 1)
    residues = (p * a1 * scale, u2 * scale, u3 * scale)
    return hensel_certify(n, p, residues, big_k + b - 1)


def sample_even_two(n: int, target: Sign, k: int = 8) -> PadicPoint:
    """A certified Z_2 point for even n realizing the target invariant.

    The n = 2 model has the exact solution (1,2,2) with invariant -1,
    and the residue class (1,4,12) mod 64 carries a Hensel margin and
    lifts to a point with invariant +1 (its valuation pattern (0,2,2)
    kills the omega terms; every class of pattern (0,1,1) computes to
    -1, so a +1 witness needs the deeper pattern).  For n = 2m the
    point is rescaled by m.  Returned precision is at least k.
    """
    if n < 1 or n % 2:
        raise ValueError(f"needs an even n, got {n}")
    m = n // 2
    c = _int_valuation(m, 2)
    # Rescaling by m raises coordinate valuations by c and the derivative
    # valuation by 2c; the floor keeps units readable mod 8 at the output.
    k_out = max(k, 3 * c + 6, 4 * c + 4)
    if target is Sign.MINUS:
        base = (1, 2, 2)
    else:
        seed = hensel_certify(2, 2, (1, 4, 12), 6)
        base = refine(seed, max(k_out - c, 6)).a
    residues = tuple(m * x for x in base)
    return hensel_certify(n, 2, residues, k_out)


# ---------------------------------------------------------------------------
# Exhaustive 2-adic sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoAdicReport:
    """Census of certified residue classes mod 2^k and their invariants.

    Classes that vanish to full precision in some coordinate or lack a
    Hensel margin are counted as unresolved, not decided.
    """

    n: int
    k: int
    plus_classes: int
    minus_classes: int
    unresolved_classes: int
    s_patterns: frozenset[tuple[int, int, int]]

    @property
    def signs(self) -> set[int]:
        out = set()
        if self.plus_classes:
            out.add(1)
        if self.minus_classes:
            out.add(-1)
        return out

    @property
    def all_trivial(self) -> bool:
        return self.minus_classes == 0


def _v2_i64(arr: np.ndarray, default: int) -> np.ndarray:
    low = (arr & -arr).astype(np.float64)
    v = np.frexp(low)[1] - 1
    return np.where(arr == 0, default, v).astype(np.int64)


def _inv_odd(arr: np.ndarray, k: int) -> np.ndarray:
    # Newton inverse of odd ints mod 2^k (exact from mod 8 upward).
    mask = np.int64((1 << k) - 1)
    inv = arr & mask
    for _ in range(5):
        inv = (inv * (2 - arr * inv)) & mask
    return inv


def _residue_triples(n: int, k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All (u1,u2,u3) mod 2^k with the form vanishing mod 2^k.

    Linear in u3 for fixed (u1,u2): c*u3 = d mod 2^k with
    c = 4 u1 u2 - n (u1+u2) and d = n u1 u2.
    """
    size = 1 << k
    u1 = np.repeat(np.arange(size, dtype=np.int64), size)
    u2 = np.tile(np.arange(size, dtype=np.int64), size)
    c = 4 * u1 * u2 - n * (u1 + u2)
    d = n * u1 * u2
    t = np.minimum(_v2_i64(c, default=k), k)
    parts: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
    for tv in range(k + 1):
        rows = np.nonzero((t == tv) & ((d & ((1 << tv) - 1)) == 0))[0]
        if rows.size == 0:
            continue
        if tv == k:
            reps = size
            u3 = np.tile(np.arange(size, dtype=np.int64), rows.size)
        else:
            reps = 1 << tv
            codd = c[rows] >> tv
            base = ((d[rows] >> tv) * _inv_odd(codd, k - tv)) & ((1 << (k - tv)) - 1)
            u3 = np.repeat(base, reps) + np.tile(
                np.arange(reps, dtype=np.int64) << (k - tv), rows.size
            )
        parts.append((np.repeat(u1[rows], reps), np.repeat(u2[rows], reps), u3))
    return tuple(np.concatenate(cols) for cols in zip(*parts))


def exhaust_two_adic(n: int, k: int = 8) -> TwoAdicReport:
    """Certify every residue class mod 2^k and report its invariant.

    For odd n every certified class must come out +1; even n is the
    control case where both signs occur.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k < 4:
        raise ValueError(f"precision must be >= 4, got {k}")
    if k > 14:
        raise ValueError(f"precision {k} too large for the exhaustive sweep")
    w1, w2, w3 = _residue_triples(n, k)
    value = 4 * w1 * w2 * w3 - n * (w1 * w2 + w1 * w3 + w2 * w3)
    vf = _v2_i64(value, default=_BIG)
    vg = np.minimum(
        _v2_i64(4 * w2 * w3 - n * (w2 + w3), default=_BIG),
        np.minimum(
            _v2_i64(4 * w1 * w3 - n * (w1 + w3), default=_BIG),
            _v2_i64(4 * w1 * w2 - n * (w1 + w2), default=_BIG),
        ),
    )
    certified = vf > 2 * vg
    nonzero = (w1 != 0) & (w2 != 0) & (w3 != 0)
    s1 = _v2_i64(w1, default=_BIG)
    s2 = _v2_i64(w2, default=_BIG)
    s3 = _v2_i64(w3, default=_BIG)
    smax = np.maximum(s1, np.maximum(s2, s3))
    # The true point above a certified class agrees with the representative
    # to k - vG digits (one coordinate moves by the Newton step), so units
    # are determined mod 8 only when smax + vG + 3 <= k.
    determined = nonzero & (smax + np.minimum(vg, _BIG) + 3 <= k)
    resolved = certified & determined
    r1 = (w1 >> np.minimum(s1, 62)) & 7
    r2 = (w2 >> np.minimum(s2, 62)) & 7
    r3 = (w3 >> np.minimum(s3, 62)) & 7
    au = (-(r1 * r3)) & 7
    bu = (-(r2 * r3)) & 7
    eps_term = ((au & 3) == 3) & ((bu & 3) == 3)
    om_a = (au == 3) | (au == 5)
    om_b = (bu == 3) | (bu == 5)
    exponent = (
        eps_term.astype(np.int64)
        + (s1 - s3) * om_b.astype(np.int64)
        + (s2 - s3) * om_a.astype(np.int64)
    )
    minus = (exponent % 2 == 1) & resolved
    plus = (exponent % 2 == 0) & resolved
    patterns = np.stack([s1[resolved], s2[resolved], s3[resolved]], axis=1)
    patterns = -np.sort(-patterns, axis=1)  # descending
    uniq = np.unique(patterns, axis=0) if patterns.size else patterns
    return TwoAdicReport(
        n=n,
        k=k,
        plus_classes=int(plus.sum()),
        minus_classes=int(minus.sum()),
        unresolved_classes=int((~resolved).sum()),
        s_patterns=frozenset(tuple(int(x) for x in row) for row in uniq),
    )


# ---------------------------------------------------------------------------
# The six-row table of the odd-n 2-adic computation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LemmaTwoRow:
    r1: int
    r2: int
    r3_mod4: int
    f: int
    g: int


def _omega8(r: int) -> int:
    return 1 if r % 8 in (3, 5) else 0


def lemma_two_table() -> list[LemmaTwoRow]:
    """Recompute the residue table for the valuation gap s1 - s3 = 1.

    The constraint 2 r1 r2 + (r1 + r2) r3 = 0 mod 8 forces r1 = r2
    mod 4 (six unordered rows mod 8), fixes r3 mod 4, and on every row
    the exponent contributions f and g cancel mod 2.
    """
    rows = []
    for c in (1, 3):
        for r1, r2 in ((c, c), (c, c + 4), (c + 4, c + 4)):
            half = (r1 + r2) // 2  # odd, so invertible mod 4
            r3 = (-r1 * r2 * pow(half, -1, 4)) % 4
            e1 = 1 if (-r1 * r3) % 4 == 3 else 0
            e2 = 1 if (-r2 * r3) % 4 == 3 else 0
            f = e1 * e2
            g = (_omega8(r1) + _omega8(r2)) % 2
            if (f + g) % 2:
                raise AssertionError(f"row ({r1},{r2}): f and g fail to cancel")
            rows.append(LemmaTwoRow(r1, r2, r3, f, g))
    return rows
