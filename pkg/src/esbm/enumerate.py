"""Complete enumeration of unit-fraction solutions for a fixed n.

Natural solutions are produced in sorted order 0 < u1 <= u2 <= u3;
integer solutions as canonical triples sorted by (|u|, u).  Both use
the finiteness bounds coming from min |u_i| <= 3n/4; the brute-force
box oracle is the independent completeness check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

Triple = tuple[int, int, int]

# n*u1*u2 values must stay inside int64 for the vectorized inner loop.
_I64_SAFE = 1 << 62


def canonical(u: tuple[int, ...]) -> Triple:
    """Representative of the S3 orbit: sorted ascending by (|u|, u)."""
    a, b, c = sorted(u, key=lambda t: (abs(t), t))
    return (a, b, c)


def natural_solutions(n: int) -> set[Triple]:
    """All triples 0 < u1 <= u2 <= u3 with 4/n = 1/u1 + 1/u2 + 1/u3.

    u1 ranges over (n/4, 3n/4]; for the residual r = 4/n - 1/u1 > 0,
    u2 ranges over [max(u1, ceil(1/r)), floor(2/r)] and u3 is accepted
    iff 1/(r - 1/u2) is an integer >= u2.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out: set[Triple] = set()
    for u1 in range(n // 4 + 1, (3 * n) // 4 + 1):
        # r = (4 u1 - n) / (n u1)
        rn, rd = 4 * u1 - n, n * u1
        g = gcd(rn, rd)
        rn, rd = rn // g, rd // g
        lo = max(u1, -(-rd // rn))
        hi = (2 * rd) // rn
        for u2 in range(lo, hi + 1):
            den = rn * u2 - rd
            if den <= 0:
                continue
            num = rd * u2
            if num % den:
                continue
            u3 = num // den
            if u3 >= u2:
                out.add((u1, u2, u3))
    return out


def _integer_solutions_python(n: int) -> set[Triple]:
    out: set[Triple] = set()
    top = (3 * n) // 4
    for a1 in range(1, top + 1):
        for u1 in (a1, -a1):
            rn, rd = 4 * u1 - n, n * u1
            if rn == 0:
                continue  # degenerate family u2 = -u3
            m = abs(2 * rd) // abs(rn)
            for a2 in range(a1, m + 1):
                for u2 in (a2, -a2):
                    den = rn * u2 - rd
                    if den == 0:
                        continue
                    num = rd * u2
                    if num % den:
                        continue
                    u3 = num // den
                    if u3 == 0 or abs(u3) < a2:
                        continue
                    if u1 + u2 == 0 or u1 + u3 == 0 or u2 + u3 == 0:
                        continue
                    out.add(canonical((u1, u2, u3)))
    return out


def integer_solutions(n: int) -> set[Triple]:
    """All non-degenerate integer solutions, as canonical triples.

    Non-degenerate means u1 u2 u3 != 0 and u_i != -u_j for all i, j.
    Enumeration: the least-|u| coordinate satisfies |u1| <= 3n/4, the
    residual bounds |u2| <= 2/|r|, and u3 is determined by division.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if 9 * n**4 >= _I64_SAFE:
        return _integer_solutions_python(n)
    out: set[Triple] = set()
    top = (3 * n) // 4
    for a1 in range(1, top + 1):
        for u1 in (a1, -a1):
            rn, rd = 4 * u1 - n, n * u1
            if rn == 0:
                continue  # degenerate family u2 = -u3
            m = abs(2 * rd) // abs(rn)
            if m < a1:
                continue
            mags = np.arange(a1, m + 1, dtype=np.int64)
            for u2 in (mags, -mags):
                den = rn * u2 - rd
                num = rd * u2
                safe = np.where(den == 0, 1, den)
                q, r = np.divmod(num, safe)
                ok = (
                    (den != 0)
                    & (r == 0)
                    & (q != 0)
                    & (np.abs(q) >= np.abs(u2))
                    & (u1 + u2 != 0)
                    & (q + u1 != 0)
                    & (q + u2 != 0)
                )
                for v2, v3 in zip(u2[ok].tolist(), q[ok].tolist()):
                    out.add(canonical((u1, v2, v3)))
    return out


@dataclass(frozen=True)
class DegenerateFamily:
    """One-parameter solution family (exists iff 4 | n): the coordinate
    at ``position`` is pinned to n/4 and the other two are (t, -t)."""

    position: int  # 1-based
    fixed: int

    def member(self, t: int) -> Triple:
        if t == 0:
            raise ValueError("family parameter must be nonzero")
        triple = [t, -t]
        triple.insert(self.position - 1, self.fixed)
        return tuple(triple)


def degenerate_families(n: int) -> tuple[DegenerateFamily, ...]:
    """The three degenerate families when 4 | n, else empty."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n % 4:
        return ()
    return tuple(DegenerateFamily(i, n // 4) for i in (1, 2, 3))


def brute_force_oracle(n: int, bound: int) -> set[Triple]:
    """Box scan: solve the equation over every coordinate pair in the box.

    For each pair |u_i|, |u_j| <= bound the third coordinate is forced
    (the equation is linear in it), so this finds every non-degenerate
    solution whose two smallest coordinates lie in the box.  Any such
    solution has |u_1| <= 3n/4 and |u_2| <= 2 n |u_1|, so bound >= 3 n^2
    is always sufficient for completeness.
    """
    if n < 1 or bound < 1:
        raise ValueError("n and bound must be positive")
    if 4 * n * bound**2 >= _I64_SAFE:
        raise ValueError(f"bound {bound} too large for exact int64 scan")
    out: set[Triple] = set()
    mags = np.arange(1, bound + 1, dtype=np.int64)
    for a1 in range(1, bound + 1):
        sub = mags[a1 - 1 :]
        for u1 in (a1, -a1):
            for u2 in (sub, -sub):
                den = 4 * u1 * u2 - n * (u1 + u2)
                num = n * u1 * u2
                safe = np.where(den == 0, 1, den)
                q, r = np.divmod(num, safe)
                ok = (
                    (den != 0)
                    & (r == 0)
                    & (q != 0)
                    & (u1 + u2 != 0)
                    & (q + u1 != 0)
                    & (q + u2 != 0)
                )
                for v2, v3 in zip(u2[ok].tolist(), q[ok].tolist()):
                    out.add(canonical((u1, v2, v3)))
    return out
