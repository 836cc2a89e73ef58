"""
=============================================================================
STATE.PY - Shared State of the Verification Pipeline
=============================================================================

The verify command runs a chain of suites, each a node of a LangGraph
StateGraph (see graph.py). This module defines the state that flows through
that chain.

HOW THE STATE FLOWS:
-------------------
app.py (verify)       sets generators, max_n, modulus_max, seed
                      → prepare fills semigroup and distributions
                      → oracle, congruence, gamma, exponential_sum,
                        common_zero, fourier each append one entry to
                        suite_results
app.py (verify)       reads suite_results, prints them, picks the exit code

suite_results uses an additive reducer: a node returns a one-element list
and LangGraph concatenates it onto what is already there.
=============================================================================
"""

import operator
from typing import Annotated, Dict, List, Tuple, TypedDict

from core.semigroup import NumericalSemigroup
from tools.enumeration import LengthDistribution


class SuiteResult(TypedDict):
    """One verification suite's outcome."""

    suite: str
    passed: bool
    checks: int
    detail: str


class VerificationState(TypedDict, total=False):
    """
    Everything the suites read and write.

    total=False: the input fields are set before the graph runs, the rest
    are filled in along the way.
    """

    # =========================================================================
    # INPUT - set by app.py before the graph runs
    # =========================================================================

    generators: Tuple[int, ...]
    # The semigroup under test, e.g. (6, 9, 20).

    max_n: int
    # Distributions are built and checked for every n in 0..max_n.

    modulus_max: int
    # Modular suites check every N in 1..modulus_max.

    seed: int
    # Seeds the random semigroups of the oracle suite.

    random_semigroups: int
    # How many random semigroups the oracle suite draws.

    # =========================================================================
    # PREPARED - set by suites.preparation.prepare
    # =========================================================================

    semigroup: NumericalSemigroup

    distributions: Dict[int, LengthDistribution]
    # n -> L[[n]] for n in 0..max_n, from one dynamic-programming table.

    # =========================================================================
    # RESULTS - one entry appended per suite
    # =========================================================================

    suite_results: Annotated[List[SuiteResult], operator.add]


def suite_result(suite: str, passed: bool, checks: int, detail: str) -> SuiteResult:
    return SuiteResult(suite=suite, passed=passed, checks=checks, detail=detail)
