"""
=============================================================================
ERRORS.PY - Exception Hierarchy
=============================================================================

Every error the library raises on purpose lives here.

TWO FAMILIES:
-------------
SemigroupError (a ValueError)
    The caller passed something the mathematics does not allow: a generator
    list with gcd 2, a residue outside 0..N-1, a density request for k = 2,
    a brute-force request above the oracle threshold. The CLI turns these
    into usage errors (exit code 2).

ConsistencyError (an AssertionError)
    An internal cross-check disagreed with a closed form, for example
    |Gamma| != gcd(delta, N). These can only fire if the implementation is
    wrong, so they are never caught inside the library.
=============================================================================
"""


class SemigroupError(ValueError):
    """Base class for invalid input to any semigroup computation."""


class InvalidGeneratorsError(SemigroupError):
    """The generator list does not define a valid numerical semigroup."""


class ResidueOutOfRangeError(SemigroupError):
    """A residue index i was not a canonical representative in 0..N-1."""


class DomainError(SemigroupError):
    """A parameter lies outside the range where an operation is defined."""


class OracleLimitError(SemigroupError):
    """The brute-force factorization oracle refused a request as too large."""


class ConsistencyError(AssertionError):
    """Two independent evaluations of the same quantity disagreed."""
