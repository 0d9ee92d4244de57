"""Point counts of the affine model over F_p and the reduction image.

The census compares the full F_p point set (computed in O(p^2) by
solving the equation linearly in u3) against the reductions of all
integral points: non-degenerate solutions in every coordinate order,
the coordinate lines, and the degenerate families when 4 | n.  A point
counted but never hit witnesses non-surjectivity of reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .arith import is_prime
from .enumerate import degenerate_families, integer_solutions

FpPoint = tuple[int, int, int]


def _check_inputs(n: int, p: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")


def count_affine_points(n: int, p: int) -> int:
    """#{u in F_p^3 : 4 u1 u2 u3 = n (u1 u2 + u1 u3 + u2 u3)} in O(p^2).

    For fixed (u1, u2) the equation is linear in u3 with coefficient
    c = 4 u1 u2 - n (u1 + u2): one solution when c != 0, a full line
    when both c and n u1 u2 vanish, none otherwise.
    """
    _check_inputs(n, p)
    count = 0
    for u1 in range(p):
        for u2 in range(p):
            c = (4 * u1 * u2 - n * (u1 + u2)) % p
            if c:
                count += 1
            elif (n * u1 * u2) % p == 0:
                count += p
    return count


def count_affine_points_bruteforce(n: int, p: int) -> int:
    """O(p^3) oracle for the fast count."""
    _check_inputs(n, p)
    return sum(
        1
        for u1 in range(p)
        for u2 in range(p)
        for u3 in range(p)
        if (4 * u1 * u2 * u3 - n * (u1 * u2 + u1 * u3 + u2 * u3)) % p == 0
    )


def affine_points(n: int, p: int) -> set[FpPoint]:
    """The full F_p point set of the affine model."""
    _check_inputs(n, p)
    points: set[FpPoint] = set()
    for u1 in range(p):
        for u2 in range(p):
            c = (4 * u1 * u2 - n * (u1 + u2)) % p
            rhs = (n * u1 * u2) % p
            if c:
                points.add((u1, u2, rhs * pow(c, -1, p) % p))
            elif rhs == 0:
                points.update((u1, u2, u3) for u3 in range(p))
    return points


def reduction_image(n: int, p: int) -> set[FpPoint]:
    """Reductions mod p of all integral points of the model.

    Includes every coordinate order of the non-degenerate solutions,
    the coordinate-line points (t,0,0), (0,t,0), (0,0,t), and, when
    4 | n, the one-parameter degenerate families.
    """
    _check_inputs(n, p)
    image: set[FpPoint] = set()
    for t in range(p):
        image.update({(t, 0, 0), (0, t, 0), (0, 0, t)})
    for u in integer_solutions(n):
        for order in permutations(u):
            image.add(tuple(c % p for c in order))
    for family in degenerate_families(n):
        for t in range(p):
            image.add(tuple(c % p for c in family.member(t if t else p)))
    return image


def nonsurjectivity_witness(n: int, p: int) -> FpPoint | None:
    """An F_p point missed by every integral point, or None.

    Deterministic: the lexicographically least missed point.
    """
    missed = affine_points(n, p) - reduction_image(n, p)
    return min(missed) if missed else None


@dataclass(frozen=True)
class FpCensus:
    n: int
    p: int
    total: int
    image_size: int
    witness: FpPoint | None


def census(n: int, p: int) -> FpCensus:
    """Count, image size, and (possibly absent) witness for one (n, p)."""
    points = affine_points(n, p)
    image = reduction_image(n, p)
    stray = image - points
    if stray:
        raise RuntimeError(f"reduction image leaves the variety: {sorted(stray)[:3]}")
    missed = points - image
    return FpCensus(
        n=n,
        p=p,
        total=len(points),
        image_size=len(image),
        witness=min(missed) if missed else None,
    )
