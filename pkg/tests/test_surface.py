from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from esbm.enumerate import integer_solutions
from esbm.surface import (
    PERMUTATIONS,
    RealComponent,
    Solution,
    TypeKind,
    classify_type,
    cross_ratio_identity,
    evaluate_form,
    is_natural,
    is_solution,
    real_component,
    unit_valuation_pair,
)


@pytest.mark.parametrize(
    "n,u,want",
    [(2, (1, 2, 2), 0), (9, (4, 6, 36), 0), (3, (1, 1, 1), -5)],
)
def test_evaluate_form_examples(n, u, want):
    assert evaluate_form(n, u) == want


@given(
    n=st.integers(min_value=1, max_value=50),
    u=st.tuples(*(st.integers(min_value=-40, max_value=40),) * 3),
)
@settings(max_examples=300, deadline=None)
def test_evaluate_form_symmetric(n, u):
    for perm in permutations(u):
        assert evaluate_form(n, perm) == evaluate_form(n, u)


def test_is_solution_examples():
    assert is_solution(9, (-18, 4, 4))
    assert is_solution(3, (1, 4, 12))
    assert not is_solution(3, (1, 1, 1))
    assert not is_solution(4, (1, 0, 0))  # zero coordinates are excluded


def test_solution_validation_names_form_value():
    with pytest.raises(ValueError, match="-31"):
        Solution(5, (1, 2, 3))
    with pytest.raises(ValueError):
        Solution(5, (0, 2, 2))
    with pytest.raises(ValueError):
        Solution(0, (1, 2, 2))


def test_is_natural_and_real_component():
    assert is_natural(Solution(2, (1, 2, 2)))
    assert not is_natural(Solution(5, (-5, 2, 2)))
    assert real_component(Solution(2, (1, 2, 2))) is RealComponent.PLUS
    assert real_component(Solution(5, (-5, 2, 2))) is RealComponent.MINUS
    assert real_component(Solution(9, (-9, 2, 18))) is RealComponent.MINUS


def test_cross_ratio_examples():
    assert cross_ratio_identity(Solution(2, (1, 2, 2)), (1, 2, 3)) is True
    assert cross_ratio_identity(Solution(3, (1, 4, 12)), (2, 3, 1)) is True
    for perm in PERMUTATIONS:
        assert cross_ratio_identity(Solution(9, (4, 6, 36)), perm) is True
    with pytest.raises(ValueError):
        cross_ratio_identity(Solution(2, (1, 2, 2)), (1, 1, 3))


def test_cross_ratio_on_enumerated_solutions():
    for n in range(2, 13):
        for u in integer_solutions(n):
            s = Solution(n, u)
            for perm in PERMUTATIONS:
                assert cross_ratio_identity(s, perm) is True


@pytest.mark.parametrize(
    "n,u,p,kind,pos",
    [
        (5, (2, 4, 20), 5, TypeKind.TYPE1, 3),
        (7, (2, 21, 42), 7, TypeKind.TYPE2, 1),
        (9, (4, 6, 36), 3, TypeKind.OTHER, None),
    ],
)
def test_classify_type(n, u, p, kind, pos):
    tag = classify_type(Solution(n, u), p)
    assert tag.kind is kind
    assert tag.position == pos


def test_classify_type_rejects_two():
    with pytest.raises(ValueError):
        classify_type(Solution(2, (1, 2, 2)), 2)


@pytest.mark.parametrize(
    "n,u,p,want",
    [
        (5, (-5, 2, 2), 5, (2, 3)),
        (9, (4, 6, 36), 3, None),
        (3, (2, 2, 3), 3, (1, 2)),
    ],
)
def test_unit_valuation_pair(n, u, p, want):
    assert unit_valuation_pair(Solution(n, u), p) == want


def test_unit_pair_exists_when_valuation_at_most_one():
    # guaranteed whenever vp(n) <= 1
    for n in range(2, 22):
        for u in integer_solutions(n):
            s = Solution(n, u)
            for p in (3, 5, 7, 11, 13):
                nv = 0
                m = n
                while m % p == 0:
                    m //= p
                    nv += 1
                if nv <= 1:
                    assert unit_valuation_pair(s, p) is not None, (n, u, p)
