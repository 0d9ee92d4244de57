from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from esbm.arith import Sign
from esbm.hilbert import (
    INFINITY,
    OracleInconclusive,
    Place,
    hilbert,
    hilbert_at_infinity,
    hilbert_at_odd_prime,
    hilbert_at_two,
    hilbert_oracle,
    reciprocity_check,
)

PLACES = [INFINITY, Place.finite(2), Place.finite(3), Place.finite(5), Place.finite(7), Place.finite(11)]

nonzero = st.fractions(
    min_value=-500, max_value=500, max_denominator=500
).filter(lambda x: x != 0)


def test_place_validation():
    assert Place.finite(7).p == 7
    assert INFINITY.is_infinite
    assert Place.finite(3) == Place(3)
    with pytest.raises(ValueError):
        Place.finite(6)


@pytest.mark.parametrize(
    "a,b,p,want",
    [
        (F(-1, 12), F(-1, 3), 3, Sign.MINUS),
        (F(1), F(17, 3), 7, Sign.PLUS),
        (F(3), F(3), 3, Sign.MINUS),
        (F(5), F(-1), 5, Sign.PLUS),
    ],
)
def test_odd_prime_examples(a, b, p, want):
    assert hilbert_at_odd_prime(a, b, p) is want


@pytest.mark.parametrize(
    "a,b,want",
    [
        (F(-1), F(-1), Sign.MINUS),
        (F(1), F(-7, 3), Sign.PLUS),
        (F(2), F(2), Sign.PLUS),
        (F(2), F(-1), Sign.PLUS),
        (F(-2), F(-2), Sign.MINUS),
    ],
)
def test_two_examples(a, b, want):
    assert hilbert_at_two(a, b) is want


@pytest.mark.parametrize(
    "a,b,want",
    [
        (F(-1), F(-1), Sign.MINUS),
        (F(1), F(-1), Sign.PLUS),
        (F(-1, 2), F(-1), Sign.MINUS),
    ],
)
def test_infinity_examples(a, b, want):
    assert hilbert_at_infinity(a, b) is want


def test_dispatch():
    assert hilbert(F(-1), F(-1), INFINITY) is Sign.MINUS
    assert hilbert(F(-1), F(-1), Place.finite(2)) is Sign.MINUS
    assert hilbert(F(-1), F(-1), Place.finite(5)) is Sign.PLUS


def test_zero_arguments_rejected():
    for fn in (hilbert_at_infinity, hilbert_at_two):
        with pytest.raises(ValueError):
            fn(F(0), F(1))
    with pytest.raises(ValueError):
        hilbert_at_odd_prime(F(1), F(0), 5)


@given(a=nonzero, b=nonzero, v=st.sampled_from(PLACES))
@settings(max_examples=300, deadline=None)
def test_symmetry(a, b, v):
    assert hilbert(a, b, v) is hilbert(b, a, v)


@given(a=nonzero, a2=nonzero, b=nonzero, v=st.sampled_from(PLACES))
@settings(max_examples=300, deadline=None)
def test_bimultiplicative(a, a2, b, v):
    assert hilbert(a * a2, b, v) is hilbert(a, b, v) * hilbert(a2, b, v)


@given(a=nonzero, v=st.sampled_from(PLACES))
@settings(max_examples=300, deadline=None)
def test_norm_relations(a, v):
    assert hilbert(a, -a, v) is Sign.PLUS
    if a != 1:
        assert hilbert(a, 1 - a, v) is Sign.PLUS


@given(a=nonzero, b=nonzero)
@settings(max_examples=500, deadline=None)
def test_reciprocity_random(a, b):
    assert reciprocity_check(a, b) is Sign.PLUS


def test_reciprocity_examples():
    assert reciprocity_check(F(-1), F(-1)) is Sign.PLUS
    assert reciprocity_check(F(1), F(999, 1000)) is Sign.PLUS
    assert reciprocity_check(F(-5, 3), F(14, 9)) is Sign.PLUS


@pytest.mark.parametrize(
    "a,b,v,depth,want",
    [
        (F(2), F(2), Place.finite(2), 8, Sign.PLUS),
        (F(-1), F(-1), INFINITY, 1, Sign.MINUS),
        (F(3), F(3), Place.finite(3), 5, Sign.MINUS),
        (F(1, 7), F(-3), INFINITY, 1, Sign.PLUS),
    ],
)
def test_oracle_examples(a, b, v, depth, want):
    assert hilbert_oracle(a, b, v, depth) is want


def test_oracle_matches_formula_small():
    vals = [x for x in range(-12, 13) if x]
    for v in (INFINITY, Place.finite(2), Place.finite(3), Place.finite(5)):
        for i, a in enumerate(vals):
            for b in vals[i:]:
                assert hilbert_oracle(a, b, v, 12) is hilbert(F(a), F(b), v), (a, b, v)


def test_oracle_rational_arguments():
    assert hilbert_oracle(F(-7, 2), F(-61), Place.finite(2), 12) is hilbert_at_two(
        F(-7, 2), F(-61)
    )


def test_oracle_inconclusive_at_tiny_depth():
    with pytest.raises(OracleInconclusive):
        hilbert_oracle(F(3), F(3), Place.finite(3), 1)
    with pytest.raises(ValueError):
        hilbert_oracle(F(3), F(3), Place.finite(3), 0)
