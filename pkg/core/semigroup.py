"""
=============================================================================
SEMIGROUP.PY - The Validated Numerical Semigroup Model
=============================================================================

A numerical semigroup S = <n_1, ..., n_k> is given here by a strictly
increasing list of positive generators with gcd 1. The list need not be a
minimal generating set, but it may not repeat a generator.

DERIVED INVARIANTS:
-------------------
delta   gcd(n_2 - n_1, ..., n_k - n_{k-1}). All factorization lengths of a
        fixed element are congruent modulo delta.
lcm     lcm(n_1, ..., n_k).
m       For a modulus N, m = gcd(delta, N) is the largest divisor of N modulo
        which all generators agree. Exactly N/m residues mod N can carry
        lengths of a given element.

Instances are frozen dataclasses: build them once with new_semigroup() and
share them freely.
=============================================================================
"""

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

from core.arithmetic import gcd_list, lcm_list
from core.errors import InvalidGeneratorsError, ResidueOutOfRangeError


@dataclass(frozen=True)
class NumericalSemigroup:
    """Generators plus the derived invariants delta and lcm."""

    generators: Tuple[int, ...]
    delta: int
    lcm: int

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def smallest(self) -> int:
        return self.generators[0]

    @property
    def largest(self) -> int:
        return self.generators[-1]

    @property
    def product(self) -> int:
        return math.prod(self.generators)

    def modulus_gcd(self, modulus: int) -> int:
        """m = gcd(delta, N)."""
        if modulus < 1:
            raise ResidueOutOfRangeError(f"modulus must be at least 1, got {modulus}")
        return math.gcd(self.delta, modulus)

    def attainable(self, modulus: int, residue: int, n: int) -> bool:
        """True iff n = residue * n_1 (mod m); only these classes hold lengths of n."""
        check_residue(modulus, residue)
        m = self.modulus_gcd(modulus)
        return (n - residue * self.smallest) % m == 0

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def check_residue(modulus: int, residue: int) -> None:
    """Reject anything that is not a canonical residue 0..N-1."""
    if modulus < 1:
        raise ResidueOutOfRangeError(f"modulus must be at least 1, got {modulus}")
    if not 0 <= residue < modulus:
        raise ResidueOutOfRangeError(
            f"residue {residue} is not in 0..{modulus - 1}; "
            "pass the canonical representative instead of reducing silently"
        )


def new_semigroup(generators: Iterable[int]) -> NumericalSemigroup:
    """
    Validate a generator list and build the semigroup.

    Parameters:
    -----------
    generators : iterable of int
        n_1 < n_2 < ... < n_k, all positive, k >= 2, gcd 1.

    Returns:
    --------
    NumericalSemigroup
        With delta and lcm populated.

    Raises:
    -------
    InvalidGeneratorsError
        Fewer than two generators, a non-positive generator, a repeated or
        out-of-order generator, or gcd != 1.

    Example:
    --------
    >>> new_semigroup([6, 9, 20]).lcm
    180
    >>> new_semigroup([17, 29, 47, 65]).delta
    6
    """
    values = tuple(generators)

    # =========================================================================
    # STEP 1: Shape checks
    # =========================================================================

    if not values:
        raise InvalidGeneratorsError("generator list is empty")
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidGeneratorsError(f"generator {value!r} is not an integer")
    if len(values) < 2:
        raise InvalidGeneratorsError(
            f"need at least two generators, got {len(values)}; "
            "delta is undefined for a single generator"
        )
    if any(value <= 0 for value in values):
        raise InvalidGeneratorsError(f"generators must be positive, got {list(values)}")

    # =========================================================================
    # STEP 2: Strictly increasing (this also rules out duplicates)
    # =========================================================================

    for previous, current in zip(values, values[1:]):
        if current == previous:
            raise InvalidGeneratorsError(f"generator {current} is repeated")
        if current < previous:
            raise InvalidGeneratorsError(
                f"generators must be strictly increasing, got {list(values)}"
            )

    # =========================================================================
    # STEP 3: gcd 1, i.e. finite complement
    # =========================================================================

    divisor = gcd_list(values)
    if divisor != 1:
        raise InvalidGeneratorsError(
            f"gcd of generators is {divisor}, not 1; the semigroup would have "
            "infinite complement"
        )

    differences = [current - previous for previous, current in zip(values, values[1:])]
    return NumericalSemigroup(
        generators=values,
        delta=gcd_list(differences),
        lcm=lcm_list(values),
    )


def parse_generators(text: str) -> NumericalSemigroup:
    """Build a semigroup from a comma-separated string such as "6,9,20"."""
    pieces = [piece.strip() for piece in text.split(",") if piece.strip()]
    try:
        values = [int(piece) for piece in pieces]
    except ValueError:
        raise InvalidGeneratorsError(f"generators must be integers, got {text!r}")
    return new_semigroup(values)
