import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy.functions.combinatorial.numbers import stirling

from core.arithmetic import (
    falling_factorial,
    format_decimal,
    format_exact,
    gcd_list,
    h_poly,
    lcm_list,
    stirling2,
    to_rational,
)


def test_gcd_and_lcm_of_lists():
    assert gcd_list([6, 9, 20]) == 1
    assert gcd_list([12, 18, 18]) == 6
    assert lcm_list([6, 9, 20]) == 180
    with pytest.raises(ValueError):
        gcd_list([])


def test_h_poly_small_cases():
    assert h_poly(0, [Fraction(1, 6), Fraction(1, 9)]) == 1
    assert h_poly(1, [2, 3, 5]) == 10
    assert h_poly(2, [Fraction(1, 2), Fraction(1, 3)]) == Fraction(19, 36)


@given(
    p=st.integers(0, 4),
    values=st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=12), min_size=1, max_size=4),
)
def test_h_poly_matches_monomial_enumeration(p, values):
    expected = sum(
        (math.prod(combo) for combo in itertools.combinations_with_replacement(values, p)),
        Fraction(0),
    )
    assert h_poly(p, values) == expected


def test_stirling2_matches_sympy():
    for n in range(12):
        for i in range(n + 2):
            assert stirling2(n, i) == stirling(n, i)


def test_falling_factorial():
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(7, 3) == 210
    assert falling_factorial(2, 3) == 0


def test_to_rational_accepts_every_input_form():
    assert to_rational("1/20") == Fraction(1, 20)
    assert to_rational("0.05") == Fraction(1, 20)
    assert to_rational(3) == 3
    assert to_rational(0.25) == Fraction(1, 4)
    with pytest.raises(ValueError):
        to_rational(float("inf"))
    with pytest.raises(ValueError):
        to_rational("one half")
    with pytest.raises(TypeError):
        to_rational(True)


def test_format_decimal_rounds_half_to_even():
    assert format_decimal(Fraction(233, 465), 4) == "0.5011"
    assert format_decimal(Fraction(1, 8), 2) == "0.12"
    assert format_decimal(Fraction(3, 8), 2) == "0.38"
    assert format_decimal(Fraction(-1, 3), 4) == "-0.3333"
    assert format_decimal(Fraction(-1, 10**6), 4) == "0.0000"
    assert format_decimal(Fraction(5, 2), 0) == "2"
    assert format_decimal(1, 10) == "1.0000000000"


@given(value=st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6), places=st.integers(0, 8))
def test_format_decimal_agrees_with_exact_rounding(value, places):
    assert Fraction(format_decimal(value, places)) == round(value, places)


def test_format_exact():
    assert format_exact(Fraction(14500)) == "14500"
    assert format_exact(Fraction(25000000, 1807338)) == "12500000/903669"
