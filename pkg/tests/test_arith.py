from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from esbm.arith import (
    Sign,
    is_prime,
    kronecker,
    least_nonresidue,
    legendre,
    legendre_unit,
    prime_factors,
    primes_up_to,
    unit_part,
    vp,
)

ODD_PRIMES_100 = [p for p in primes_up_to(100) if p != 2]

nonzero_rationals = st.fractions(
    min_value=-10**4, max_value=10**4, max_denominator=10**4
).filter(lambda x: x != 0)


def test_sign_group():
    assert Sign.PLUS * Sign.PLUS is Sign.PLUS
    assert Sign.PLUS * Sign.MINUS is Sign.MINUS
    assert Sign.MINUS * Sign.MINUS is Sign.PLUS
    assert int(Sign.MINUS) == -1
    assert Sign.from_parity(7) is Sign.MINUS
    assert Sign.of(1) is Sign.PLUS
    with pytest.raises(ValueError):
        Sign.of(0)


def test_is_prime_small():
    assert [p for p in range(60) if is_prime(p)] == primes_up_to(59)
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)


def test_prime_factors():
    assert prime_factors(360) == {2: 3, 3: 2, 5: 1}
    assert prime_factors(-7) == {7: 1}
    assert prime_factors(1) == {}


@pytest.mark.parametrize(
    "x,p,want",
    [(F(12), 2, 2), (F(4, 9), 3, -2), (F(7), 5, 0), (F(-50), 5, 2)],
)
def test_vp_examples(x, p, want):
    assert vp(x, p) == want


def test_vp_errors():
    with pytest.raises(ValueError):
        vp(F(0), 3)
    with pytest.raises(ValueError):
        vp(F(5), 6)


@pytest.mark.parametrize(
    "x,p,want",
    [(F(12), 2, F(3)), (F(-1, 12), 3, F(-1, 4)), (F(7), 5, F(7))],
)
def test_unit_part_examples(x, p, want):
    assert unit_part(x, p) == want


@given(x=nonzero_rationals, y=nonzero_rationals, p=st.sampled_from(primes_up_to(100)))
@settings(max_examples=300, deadline=None)
def test_vp_additive_and_unit_reconstruction(x, y, p):
    assert vp(x * y, p) == vp(x, p) + vp(y, p)
    assert x == F(p) ** vp(x, p) * unit_part(x, p)
    assert vp(unit_part(x, p), p) == 0


@pytest.mark.parametrize("a,p,want", [(-1, 5, 1), (-1, 3, -1), (1, 7, 1), (10, 5, 0)])
def test_legendre_examples(a, p, want):
    assert legendre(a, p) == want


def test_legendre_rejects_non_odd_primes():
    with pytest.raises(ValueError):
        legendre(3, 2)
    with pytest.raises(ValueError):
        legendre(3, 15)


def test_legendre_square_set_oracle():
    # independent oracle: the set of nonzero squares mod p
    for p in ODD_PRIMES_100:
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            assert legendre(a, p) == (1 if a in squares else -1)
        assert legendre(0, p) == 0


def test_legendre_euler_criterion():
    for p in ODD_PRIMES_100:
        for a in range(1, p):
            e = pow(a, (p - 1) // 2, p)
            assert legendre(a, p) == (1 if e == 1 else -1)


def test_legendre_multiplicative():
    for p in [q for q in primes_up_to(50) if q != 2]:
        for a in range(-p, p + 1):
            for b in range(-p, p + 1):
                assert legendre(a, p) * legendre(b, p) == legendre(a * b, p)


def test_legendre_unit_rational():
    # (n/d | p) = (n*d | p) since d and 1/d agree mod squares
    assert legendre_unit(F(-1, 12), 5) == legendre(-12, 5) == -1
    assert legendre_unit(F(2, 3), 5) == legendre(6, 5)
    with pytest.raises(ValueError):
        legendre_unit(F(5, 3), 5)


@pytest.mark.parametrize("a,b,want", [(5, 88, -1), (7, 11, -1), (3, 1, 1), (-7, 1, 1)])
def test_kronecker_examples(a, b, want):
    assert kronecker(a, b) == want


def test_kronecker_degenerate_arguments():
    assert kronecker(1, 0) == 1
    assert kronecker(-1, 0) == 1
    assert kronecker(5, 0) == 0
    assert kronecker(0, 1) == 1
    assert kronecker(0, 7) == 0
    assert kronecker(4, 2) == 0
    assert kronecker(7, 2) == 1
    assert kronecker(3, 2) == -1
    assert kronecker(-3, -1) == -1
    assert kronecker(3, -1) == 1


def test_kronecker_matches_legendre():
    for p in ODD_PRIMES_100:
        for a in range(-100, 101):
            assert kronecker(a, p) == legendre(a, p), (a, p)


@given(
    a=st.integers(min_value=-200, max_value=200),
    b=st.integers(min_value=-80, max_value=80),
    c=st.integers(min_value=-80, max_value=80),
)
@settings(max_examples=400, deadline=None)
def test_kronecker_multiplicative_in_lower(a, b, c):
    assert kronecker(a, b * c) == kronecker(a, b) * kronecker(a, c)


def test_least_nonresidue():
    assert least_nonresidue(3) == 2
    assert least_nonresidue(7) == 3
    for p in ODD_PRIMES_100:
        nr = least_nonresidue(p)
        assert legendre(nr, p) == -1
        assert all(legendre(a, p) != -1 for a in range(1, nr))
