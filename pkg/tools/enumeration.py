"""
=============================================================================
ENUMERATION.PY - Factorizations and Length Multisets
=============================================================================

For an element n of S = <n_1, ..., n_k>, a factorization is a tuple
(a_1, ..., a_k) of non-negative integers with a_1 n_1 + ... + a_k n_k = n.
Its length is a_1 + ... + a_k. The length multiset L[[n]] holds one copy of
the length of every factorization.

TWO WAYS TO GET L[[n]]:
-----------------------
factorizations_bruteforce
    Enumerates every factorization explicitly. Exponential, capped, and only
    used as an oracle for checking the engine.

length_distribution / length_distributions / length_distribution_range
    The engine. Extracts coefficients of the two-variable generating function

        f(z, w) = prod_i 1 / (1 - w z^{n_i})

    with an unbounded-knapsack table counts[v][l] (value v, length l):

        for each generator g:
            for v = g .. n:
                counts[v][l] += counts[v - g][l - 1]

    One table up to n_max yields the distribution of every v <= n_max, so
    batch requests share a single pass.

The table is int64 while an a-priori bound on the number of factorizations,
prod_j (n // n_j + 1), stays below config.INT64_SAFE_LIMIT; past that it is
built from Python integers so no count can wrap around.

Two more expansions of f(z, w) serve as independent cross-checks:
generating_function_lengths (explicit truncated product) and
factorial_moment_series (the h_p derivative identity at w = 1).
=============================================================================
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Tuple

import numpy as np

import config
from core.arithmetic import BigCount
from core.errors import DomainError, OracleLimitError
from core.semigroup import NumericalSemigroup

logger = logging.getLogger(__name__)


# =============================================================================
# DOMAIN TYPES
# =============================================================================


@dataclass(frozen=True)
class Factorization:
    """One factorization (a_1, ..., a_k) of an element."""

    coefficients: Tuple[int, ...]

    @property
    def length(self) -> int:
        return sum(self.coefficients)

    def value(self, semigroup: NumericalSemigroup) -> int:
        return sum(a * g for a, g in zip(self.coefficients, semigroup.generators))


@dataclass(frozen=True)
class LengthDistribution:
    """
    The length multiset L[[n]] as a sparse map length -> multiplicity.

    Only non-zero multiplicities are stored. An element outside S has an
    empty distribution (total 0) rather than raising.
    """

    element: int
    counts: Dict[int, BigCount] = field(default_factory=dict)

    @property
    def total(self) -> BigCount:
        """|L[[n]]|, the number of factorizations."""
        return sum(self.counts.values())

    @property
    def is_empty(self) -> bool:
        return not self.counts

    @property
    def lengths(self) -> List[int]:
        return sorted(self.counts)

    def restricted(self, modulus: int, residue: int) -> Dict[int, BigCount]:
        """The sub-multiset of lengths congruent to residue mod modulus."""
        return {
            length: count
            for length, count in self.counts.items()
            if length % modulus == residue
        }

    def power_sum(self, p: int, modulus: int = 1, residue: int = 0) -> BigCount:
        """Sum of l^p over lengths l = residue (mod modulus), with multiplicity."""
        return sum(
            count * length**p
            for length, count in self.counts.items()
            if length % modulus == residue
        )


# =============================================================================
# BRUTE-FORCE ORACLE
# =============================================================================


def factorizations_bruteforce(
    semigroup: NumericalSemigroup,
    n: int,
    max_n: int = config.BRUTEFORCE_MAX_N,
    max_results: int = config.BRUTEFORCE_MAX_RESULTS,
) -> List[Factorization]:
    """
    Enumerate every factorization of n, in lexicographic order.

    Each coefficient a_j is bounded by the remaining value // n_j; the last
    coefficient is forced. The list is empty exactly when n is not in S.

    Raises:
    -------
    DomainError
        n is negative.
    OracleLimitError
        n exceeds max_n, or more than max_results factorizations appear.

    Example:
    --------
    >>> S = new_semigroup([3, 5])
    >>> [f.coefficients for f in factorizations_bruteforce(S, 15)]
    [(0, 3), (5, 0)]
    """
    if n < 0:
        raise DomainError(f"element must be non-negative, got {n}")
    if n > max_n:
        raise OracleLimitError(
            f"brute-force enumeration refused for n = {n} > {max_n}; "
            "use length_distribution() for large elements"
        )

    generators = semigroup.generators
    last = len(generators) - 1
    results: List[Factorization] = []
    prefix: List[int] = []

    def extend(index: int, remaining: int) -> None:
        generator = generators[index]
        if index == last:
            if remaining % generator == 0:
                if len(results) >= max_results:
                    raise OracleLimitError(
                        f"more than {max_results} factorizations of {n}; "
                        "raise max_results or use the dynamic-programming engine"
                    )
                results.append(Factorization(tuple(prefix) + (remaining // generator,)))
            return
        for coefficient in range(remaining // generator + 1):
            prefix.append(coefficient)
            extend(index + 1, remaining - coefficient * generator)
            prefix.pop()

    extend(0, n)
    return results


def bruteforce_distribution(semigroup: NumericalSemigroup, n: int, **limits) -> LengthDistribution:
    """Length histogram of factorizations_bruteforce."""
    counts: Dict[int, int] = {}
    for factorization in factorizations_bruteforce(semigroup, n, **limits):
        counts[factorization.length] = counts.get(factorization.length, 0) + 1
    return LengthDistribution(element=n, counts=counts)


# =============================================================================
# DYNAMIC-PROGRAMMING ENGINE
# =============================================================================


def _factorization_bound(semigroup: NumericalSemigroup, n_max: int) -> int:
    """Upper bound on the number of factorizations of any v <= n_max."""
    return math.prod(n_max // g + 1 for g in semigroup.generators)


def length_table(semigroup: NumericalSemigroup, n_max: int) -> np.ndarray:
    """
    counts[v][l] for 0 <= v <= n_max and 0 <= l <= n_max // n_1.

    Row v is the length distribution of v.
    """
    if n_max < 0:
        raise DomainError(f"element must be non-negative, got {n_max}")

    max_length = n_max // semigroup.smallest
    wide = _factorization_bound(semigroup, n_max) >= config.INT64_SAFE_LIMIT
    dtype = object if wide else np.int64
    logger.debug(
        "length table for %s up to %d: %d x %d cells, dtype %s",
        semigroup, n_max, n_max + 1, max_length + 1, "object" if wide else "int64",
    )

    table = np.zeros((n_max + 1, max_length + 1), dtype=dtype)
    table[0, 0] = 1
    if max_length == 0:
        return table

    for generator in semigroup.generators:
        for value in range(generator, n_max + 1):
            table[value, 1:] += table[value - generator, :-1]
    return table


def _row_to_distribution(element: int, row: np.ndarray) -> LengthDistribution:
    counts = {int(length): int(row[length]) for length in np.nonzero(row)[0]}
    return LengthDistribution(element=element, counts=counts)


def length_distribution(semigroup: NumericalSemigroup, n: int) -> LengthDistribution:
    """
    L[[n]] with exact multiplicities.

    Example:
    --------
    >>> length_distribution(new_semigroup([6, 9, 20]), 1000).total
    465
    """
    table = length_table(semigroup, n)
    return _row_to_distribution(n, table[n])


def length_distributions(
    semigroup: NumericalSemigroup, n_values: Iterable[int]
) -> Dict[int, LengthDistribution]:
    """Distributions for several elements from one table up to the largest."""
    wanted = sorted(set(n_values))
    if not wanted:
        return {}
    if wanted[0] < 0:
        raise DomainError(f"elements must be non-negative, got {wanted[0]}")
    table = length_table(semigroup, wanted[-1])
    return {n: _row_to_distribution(n, table[n]) for n in wanted}


def length_distribution_range(
    semigroup: NumericalSemigroup, n_lo: int, n_hi: int
) -> Iterator[LengthDistribution]:
    """
    Yield L[[n]] for n = n_lo .. n_hi in increasing order.

    Raises:
    -------
    DomainError
        n_lo < 0 or n_lo > n_hi.
    """
    if n_lo < 0:
        raise DomainError(f"range start must be non-negative, got {n_lo}")
    if n_lo > n_hi:
        raise DomainError(f"inverted range [{n_lo}, {n_hi}]")

    table = length_table(semigroup, n_hi)
    for n in range(n_lo, n_hi + 1):
        yield _row_to_distribution(n, table[n])


# =============================================================================
# GENERATING-FUNCTION CROSS-CHECKS
# =============================================================================
# Truncated power series are plain lists of Python ints indexed by the
# exponent of z. Every product below is cut at z^{n_max}.
# =============================================================================


def generating_function_lengths(
    semigroup: NumericalSemigroup, n_max: int
) -> List[Dict[int, int]]:
    """
    Expand prod_i (1 + w z^{n_i} + w^2 z^{2 n_i} + ...) up to z^{n_max}.

    Entry n of the result maps length l to the coefficient of w^l z^n.
    Each factor is multiplied in explicitly, term by term.
    """
    series: List[Dict[int, int]] = [dict() for _ in range(n_max + 1)]
    series[0][0] = 1
    for generator in semigroup.generators:
        product: List[Dict[int, int]] = [dict() for _ in range(n_max + 1)]
        for value, terms in enumerate(series):
            for power in range(0, (n_max - value) // generator + 1):
                target = product[value + power * generator]
                for length, count in terms.items():
                    target[length + power] = target.get(length + power, 0) + count
        series = product
    return series


def _series_mul(left: List[int], right: List[int], n_max: int) -> List[int]:
    result = [0] * (n_max + 1)
    for i, a in enumerate(left):
        if a == 0:
            continue
        for j in range(0, n_max + 1 - i):
            if right[j]:
                result[i + j] += a * right[j]
    return result


def factorial_moment_series(semigroup: NumericalSemigroup, p: int, n_max: int) -> List[int]:
    """
    Coefficients of p! * f(z, 1) * h_p(z^{n_1}/(1 - z^{n_1}), ...) up to z^{n_max}.

    This is the p-th w-derivative of f(z, w) at w = 1, so coefficient n equals
    sum over L[[n]] of l (l - 1) ... (l - p + 1).
    """
    if p < 0:
        raise DomainError(f"p must be non-negative, got {p}")

    def geometric(generator: int, start: int) -> List[int]:
        return [1 if v >= start and v % generator == 0 else 0 for v in range(n_max + 1)]

    base = [1] + [0] * n_max
    for generator in semigroup.generators:
        base = _series_mul(base, geometric(generator, 0), n_max)

    # h_d over series, one variable at a time (same recurrence as h_poly)
    one = [1] + [0] * n_max
    rows = [one] + [[0] * (n_max + 1) for _ in range(p)]
    for generator in semigroup.generators:
        variable = geometric(generator, generator)
        for degree in range(1, p + 1):
            step = _series_mul(variable, rows[degree - 1], n_max)
            rows[degree] = [a + b for a, b in zip(rows[degree], step)]

    result = _series_mul(base, rows[p], n_max)
    return [math.factorial(p) * value for value in result]
