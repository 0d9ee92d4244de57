"""The affine unit-fraction surface 4 u1 u2 u3 = n (u1 u2 + u1 u3 + u2 u3).

Integer triples with nonzero coordinates satisfying the equation are
exactly the solutions of 4/n = 1/u1 + 1/u2 + 1/u3.  Points with a zero
coordinate live on the coordinate lines and are handled in the
finite-field module, never as ``Solution`` values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .arith import is_prime, vp

PERMUTATIONS: tuple[tuple[int, int, int], ...] = tuple(permutations((1, 2, 3)))


def evaluate_form(n: int, u: tuple[int, int, int]) -> int:
    """4 u1 u2 u3 - n (u1 u2 + u1 u3 + u2 u3), exactly."""
    u1, u2, u3 = u
    return 4 * u1 * u2 * u3 - n * (u1 * u2 + u1 * u3 + u2 * u3)


def is_solution(n: int, u: tuple[int, int, int]) -> bool:
    return all(c != 0 for c in u) and evaluate_form(n, u) == 0


class RealComponent(enum.Enum):
    """Connected component of the real points: PLUS iff all u_i > 0."""

    PLUS = "+"
    MINUS = "-"


class TypeKind(enum.Enum):
    TYPE1 = 1
    TYPE2 = 2
    OTHER = 0


@dataclass(frozen=True)
class TypeTag:
    """Valuation pattern of a solution at an odd prime.

    TYPE1: p exactly divides one coordinate (position = that coordinate);
    TYPE2: p exactly divides two (position = the remaining unit one).
    """

    kind: TypeKind
    position: int | None = None


@dataclass(frozen=True)
class Solution:
    """A validated integer solution of 4/n = 1/u1 + 1/u2 + 1/u3."""

    n: int
    u: tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if len(self.u) != 3:
            raise ValueError(f"need a coordinate triple, got {self.u}")
        object.__setattr__(self, "u", tuple(int(c) for c in self.u))
        if any(c == 0 for c in self.u):
            raise ValueError(f"zero coordinate in {self.u}")
        value = evaluate_form(self.n, self.u)
        if value != 0:
            raise ValueError(
                f"{self.u} does not solve the n={self.n} equation: "
                f"form evaluates to {value}"
            )

    def permuted(self, perm: tuple[int, int, int]) -> "Solution":
        return Solution(self.n, tuple(self.u[i - 1] for i in perm))


def is_natural(s: Solution) -> bool:
    return all(c > 0 for c in s.u)


def real_component(s: Solution) -> RealComponent:
    return RealComponent.PLUS if is_natural(s) else RealComponent.MINUS


def cross_ratio_identity(s: Solution, perm: tuple[int, int, int]) -> bool | None:
    """Check -u_i/u_j = 1 / (1 + u_j/u_k - 4 u_j/n) exactly.

    perm = (i, j, k) is a permutation of (1, 2, 3).  Returns None when
    the denominator vanishes (a degenerate permutation) instead of
    judging the identity; for valid solutions the denominator equals
    -u_j/u_i, so this never happens.
    """
    if sorted(perm) != [1, 2, 3]:
        raise ValueError(f"not a permutation of (1,2,3): {perm}")
    i, j, k = perm
    ui, uj, uk = s.u[i - 1], s.u[j - 1], s.u[k - 1]
    den = 1 + Fraction(uj, uk) - Fraction(4 * uj, s.n)
    if den == 0:
        return None
    return Fraction(-ui, uj) == 1 / den


def classify_type(s: Solution, p: int) -> TypeTag:
    """Valuation-pattern classification at an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"needs an odd prime, got {p}")
    vals = [vp(c, p) for c in s.u]
    ones = [i for i, v in enumerate(vals) if v == 1]
    zeros = [i for i, v in enumerate(vals) if v == 0]
    if len(ones) == 1 and len(zeros) == 2:
        return TypeTag(TypeKind.TYPE1, ones[0] + 1)
    if len(ones) == 2 and len(zeros) == 1:
        return TypeTag(TypeKind.TYPE2, zeros[0] + 1)
    return TypeTag(TypeKind.OTHER)


def unit_valuation_pair(s: Solution, p: int) -> tuple[int, int] | None:
    """Least pair (i, j), i < j, with equal valuations (u_i/u_j a unit).

    Guaranteed present for odd p with vp(n, p) <= 1; may be absent
    otherwise (absence is a value, not an error).
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"needs an odd prime, got {p}")
    vals = [vp(c, p) for c in s.u]
    for i in range(3):
        for j in range(i + 1, 3):
            if vals[i] == vals[j]:
                return (i + 1, j + 1)
    return None
