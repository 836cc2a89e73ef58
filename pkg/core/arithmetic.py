"""
=============================================================================
ARITHMETIC.PY - Exact Arithmetic Primitives
=============================================================================

Small exact building blocks shared by every other module:

- Rational       exact rationals (fractions.Fraction, always in lowest terms)
- BigCount       arbitrary-precision non-negative counts (Python int)
- gcd_list       gcd fold over a list
- lcm_list       lcm fold over a list
- h_poly         complete homogeneous symmetric polynomial h_p(x_1..x_k)
- stirling2      Stirling numbers of the second kind S(n, i)
- falling_factorial
- to_rational    parse "1/20", "0.05", 3, 0.25 into a Rational
- format_decimal fixed-place decimal rendering, rounding half to even

Nothing here rounds. Floating point enters only through to_rational(float),
which is exact because every binary float is a dyadic rational.
=============================================================================
"""

import math
from fractions import Fraction
from functools import reduce
from typing import List, Sequence, Union

Rational = Fraction
BigCount = int

RationalLike = Union[Fraction, int, float, str]


def gcd_list(values: Sequence[int]) -> int:
    """gcd of a non-empty list of positive integers."""
    if not values:
        raise ValueError("gcd_list needs at least one value")
    return reduce(math.gcd, values)


def lcm_list(values: Sequence[int]) -> int:
    """lcm of a non-empty list of positive integers."""
    if not values:
        raise ValueError("lcm_list needs at least one value")
    return reduce(lambda a, b: a * b // math.gcd(a, b), values)


def h_poly(p: int, values: Sequence[RationalLike]) -> Fraction:
    """
    Evaluate the complete homogeneous symmetric polynomial h_p exactly.

    h_p(x_1, ..., x_k) is the sum of all degree-p monomials in the x_j.

    Computed with the recurrence
        h_p(x_1..x_j) = h_p(x_1..x_{j-1}) + x_j * h_{p-1}(x_1..x_j)
    sweeping one variable at a time over a row h_0..h_p, which costs
    O(k * p) exact operations instead of enumerating monomials.

    Example:
    --------
    >>> h_poly(2, [Fraction(1, 2), Fraction(1, 3)])
    Fraction(19, 36)
    """
    if p < 0:
        raise ValueError(f"degree p must be non-negative, got {p}")
    if not values:
        raise ValueError("h_poly needs at least one value")

    row: List[Fraction] = [Fraction(1)] + [Fraction(0)] * p
    for raw in values:
        x = to_rational(raw)
        for degree in range(1, p + 1):
            row[degree] += x * row[degree - 1]
    return row[p]


def stirling2(n: int, i: int) -> BigCount:
    """
    Stirling number of the second kind: partitions of an n-set into i blocks.

    Uses S(n, i) = i*S(n-1, i) + S(n-1, i-1), one row at a time.
    """
    if n < 0 or i < 0:
        raise ValueError("stirling2 arguments must be non-negative")
    if i > n:
        return 0

    row = [1] + [0] * i  # S(0, j)
    for size in range(1, n + 1):
        new_row = [0] * (i + 1)
        for blocks in range(1, min(size, i) + 1):
            new_row[blocks] = blocks * row[blocks] + row[blocks - 1]
        row = new_row
    return row[i]


def falling_factorial(x: int, a: int) -> int:
    """x (x-1) ... (x-a+1); equals 1 when a == 0."""
    result = 1
    for offset in range(a):
        result *= x - offset
    return result


def to_rational(value: RationalLike) -> Fraction:
    """
    Convert user input to an exact Fraction.

    Strings may be integers, decimals or "p/q". Floats convert exactly.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, float)):
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(f"cannot convert {value!r} to a rational")
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_decimal(value: RationalLike, places: int) -> str:
    """
    Render an exact value with a fixed number of decimals, half to even.

    Rounding is done on integers, so the result is the correctly rounded
    decimal of the exact rational.

    Example:
    --------
    >>> format_decimal(Fraction(233, 465), 4)
    '0.5011'
    """
    exact = to_rational(value)
    sign = "-" if exact < 0 else ""
    numerator = abs(exact.numerator) * 10**places
    quotient, remainder = divmod(numerator, exact.denominator)
    twice = 2 * remainder
    if twice > exact.denominator or (twice == exact.denominator and quotient % 2 == 1):
        quotient += 1
    if quotient == 0:
        sign = ""
    digits = str(quotient).rjust(places + 1, "0")
    if places == 0:
        return f"{sign}{digits}"
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_exact(value: RationalLike) -> str:
    """Lossless string form: "7" for integers, "p/q" otherwise."""
    exact = to_rational(value)
    if exact.denominator == 1:
        return str(exact.numerator)
    return f"{exact.numerator}/{exact.denominator}"
