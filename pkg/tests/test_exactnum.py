import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modules.exactnum import (
    IdentityViolationError,
    binomial,
    binomial_transform,
    exact_divide,
    factorial,
    format_rational,
    hockey_stick,
    inverse_binomial_transform,
    parse_rational,
    pascal_binomial,
    random_rational,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_factorial_small_values():
    assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(0, 0) == 1
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0


def test_binomial_is_exact_for_large_arguments():
    assert binomial(200, 100) == factorial(200) // factorial(100) ** 2


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=-2, max_value=42))
def test_binomial_matches_pascal_recurrence(n, k):
    assert binomial(n, k) == pascal_binomial(n, k)


def test_hockey_stick():
    assert hockey_stick(5, 2) == binomial(6, 3) == 20
    assert hockey_stick(0, 0) == 1


def test_hockey_stick_rejects_k_above_n():
    with pytest.raises(ValueError):
        hockey_stick(2, 3)


def test_binomial_transform_of_ones_is_powers_of_two():
    assert binomial_transform([1, 1, 1, 1]) == [1, 2, 4, 8]


def test_binomial_transform_rejects_empty_sequence():
    with pytest.raises(ValueError):
        binomial_transform([])
    with pytest.raises(ValueError):
        inverse_binomial_transform([])


@given(st.lists(rationals, min_size=1, max_size=10))
def test_binomial_transforms_are_inverse(a):
    assert inverse_binomial_transform(binomial_transform(a)) == a
    assert binomial_transform(inverse_binomial_transform(a)) == a


def test_exact_divide():
    assert exact_divide(720, 24) == 30
    with pytest.raises(IdentityViolationError):
        exact_divide(7, 2)


def test_parse_rational_accepts_exact_forms():
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("3") == 3
    assert parse_rational("0.25") == Fraction(1, 4)


@pytest.mark.parametrize("text", ["abc", "1/0", ""])
def test_parse_rational_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-691, 2730)) == "-691/2730"
    assert format_rational(7) == "7"


def test_random_rational_respects_bounds_and_seed():
    values = [random_rational(random.Random(5)) for _ in range(3)]
    assert values[0] == values[1] == values[2]
    rng = random.Random(1)
    for _ in range(200):
        q = random_rational(rng, 20, 12)
        assert abs(q) <= 20
        assert 1 <= q.denominator <= 12
