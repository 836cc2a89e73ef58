"""
=============================================================================
ORACLE_SUITE.PY - Dynamic Programming Against Brute Force
=============================================================================

Checks the length tables three independent ways:

1. Brute-force enumeration of every factorization, for each n up to the
   oracle bound, on the semigroup under test and on seeded random
   semigroups.
2. The explicit truncated product of the generating function.
3. The factorial-moment series p! f(z, 1) h_p(...) for p <= VERIFY_MAX_POWER.
=============================================================================
"""

import math

import numpy as np

import config
from core.arithmetic import falling_factorial
from core.semigroup import NumericalSemigroup, new_semigroup
from state import VerificationState
from suites.common import suite_node
from templates.templates import ORACLE_DETAIL
from tools.enumeration import (
    bruteforce_distribution,
    factorial_moment_series,
    generating_function_lengths,
    length_distribution_range,
)

# random semigroups are checked on a shorter range; brute force grows like n^(k-1)
RANDOM_ORACLE_MAX_N = 60


def random_semigroup(rng: np.random.Generator, max_generator: int) -> NumericalSemigroup:
    """Draw 2 to 4 distinct generators in 2..max_generator with gcd 1."""
    while True:
        k = int(rng.integers(2, 5))
        values = sorted(int(v) for v in rng.choice(np.arange(2, max_generator + 1), size=k, replace=False))
        if math.gcd(*values) == 1:
            return new_semigroup(values)


def _compare_with_bruteforce(semigroup: NumericalSemigroup, distributions, n_max: int) -> int:
    for n in range(n_max + 1):
        expected = bruteforce_distribution(semigroup, n).counts
        assert distributions[n].counts == expected, (
            f"{semigroup}: table gives {distributions[n].counts} for n = {n}, brute force {expected}"
        )
    return n_max + 1


@suite_node("oracle")
def oracle_suite(state: VerificationState):
    semigroup = state["semigroup"]
    distributions = state["distributions"]
    max_n = state["max_n"]
    oracle_n = min(max_n, config.BRUTEFORCE_MAX_N)

    checks = _compare_with_bruteforce(semigroup, distributions, oracle_n)

    # =========================================================================
    # Generating-function expansions
    # =========================================================================

    for n, terms in enumerate(generating_function_lengths(semigroup, max_n)):
        assert distributions[n].counts == terms, f"product expansion differs at n = {n}"
        checks += 1

    for p in range(config.VERIFY_MAX_POWER + 1):
        series = factorial_moment_series(semigroup, p, max_n)
        for n in range(max_n + 1):
            expected = sum(falling_factorial(length, p) * count for length, count in distributions[n].counts.items())
            assert series[n] == expected, f"factorial moment series differs at p = {p}, n = {n}"
            checks += 1

    # =========================================================================
    # Random semigroups
    # =========================================================================

    count = state.get("random_semigroups", config.VERIFY_RANDOM_SEMIGROUPS)
    rng = np.random.default_rng(state.get("seed", config.VERIFY_SEED))
    random_n = min(max_n, RANDOM_ORACLE_MAX_N)
    for _ in range(count):
        other = random_semigroup(rng, config.VERIFY_RANDOM_MAX_GENERATOR)
        table = {d.element: d for d in length_distribution_range(other, 0, random_n)}
        checks += _compare_with_bruteforce(other, table, random_n)

    return checks, ORACLE_DETAIL.format(oracle_n=oracle_n, semigroup=semigroup, random_count=count)
