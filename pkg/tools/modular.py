"""
=============================================================================
MODULAR.PY - Lengths Modulo N
=============================================================================

Everything that looks at factorization lengths through a modulus N.

THE SUBGROUP GAMMA:
-------------------
Gamma = { t in Z/NZ : n_1 t = n_2 t = ... = n_k t (mod N) }

is cyclic of order m = gcd(delta, N), generated by N/m. Multiplication by
any generator, alpha(t) = n_1 t mod N, permutes Gamma.

THE FILTER:
-----------
The restricted power sum

    Lambda^p_{i,N}(n) = sum of l^p over l in L[[n]] with l = i (mod N)

has a main term weighted by the exponential sum

    sum_{t in Gamma} zeta^(i alpha(t) - t n) = m   if i n_1 = n (mod m)
                                             = 0   otherwise

with zeta = exp(2 pi i / N). Trusted results use the closed form, which is
an integer congruence test. Complex arithmetic appears only in the
cross-checks (exponential_sum_complex, common_zero_check, fourier_moments),
which compare against config.CROSS_CHECK_TOLERANCE.
=============================================================================
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

import config
from core.arithmetic import BigCount, falling_factorial, stirling2
from core.errors import ConsistencyError, DomainError
from core.semigroup import NumericalSemigroup, check_residue
from tools.asymptotics import leading_coefficient, leading_term
from tools.enumeration import LengthDistribution, length_distribution, length_distributions

logger = logging.getLogger(__name__)


def _roots(exponents: Sequence[int], modulus: int) -> np.ndarray:
    """zeta^e for integer exponents, reduced mod N before going to floats."""
    reduced = np.asarray(exponents, dtype=np.int64) % modulus
    return np.exp(2j * np.pi * reduced / modulus)


# =============================================================================
# GAMMA AND ALPHA
# =============================================================================


@dataclass(frozen=True)
class GammaSubgroup:
    modulus: int
    elements: Tuple[int, ...]
    order: int
    alpha: Dict[int, int]


def gamma_subgroup(semigroup: NumericalSemigroup, modulus: int) -> GammaSubgroup:
    """
    Gamma by direct scan of t = 0 .. N-1, with alpha on it.

    Raises:
    -------
    ConsistencyError
        The scan disagrees with |Gamma| = gcd(delta, N), Gamma is not the
        subgroup generated by N/m, or alpha is not a permutation of Gamma.
    """
    m = semigroup.modulus_gcd(modulus)
    generators = semigroup.generators
    elements = tuple(
        t for t in range(modulus)
        if all((g * t - generators[0] * t) % modulus == 0 for g in generators[1:])
    )

    if len(elements) != m:
        raise ConsistencyError(
            f"Gamma for {semigroup} mod {modulus} has {len(elements)} elements, expected gcd(delta, N) = {m}"
        )
    if elements != tuple(range(0, modulus, modulus // m)):
        raise ConsistencyError(f"Gamma {elements} is not generated by N/m = {modulus // m}")

    alpha = {t: generators[0] * t % modulus for t in elements}
    if sorted(alpha.values()) != list(elements):
        raise ConsistencyError(f"alpha is not a permutation of Gamma mod {modulus}: {alpha}")

    logger.debug("Gamma for %s mod %d: %s", semigroup, modulus, elements)
    return GammaSubgroup(modulus=modulus, elements=elements, order=m, alpha=alpha)


# =============================================================================
# ATTAINABILITY AND THE EXPONENTIAL SUM
# =============================================================================


def attainable(semigroup: NumericalSemigroup, modulus: int, residue: int, n: int) -> bool:
    """
    True iff n = i n_1 (mod m); only then can lengths of n be = i (mod N).

    Example:
    --------
    >>> attainable(new_semigroup([17, 29, 47, 65]), 3, 1, 5000)
    True
    """
    return semigroup.attainable(modulus, residue, n)


def attainable_residues(semigroup: NumericalSemigroup, modulus: int, n: int) -> List[int]:
    """The N/m residues i in 0..N-1 that can carry lengths of n."""
    residues = [i for i in range(modulus) if semigroup.attainable(modulus, i, n)]
    expected = modulus // semigroup.modulus_gcd(modulus)
    if len(residues) != expected:
        raise ConsistencyError(f"{len(residues)} attainable residues mod {modulus}, expected N/m = {expected}")
    return residues


def exponential_sum_complex(semigroup: NumericalSemigroup, modulus: int, residue: int, n: int) -> complex:
    """Direct evaluation of sum over Gamma of zeta^(i alpha(t) - t n)."""
    check_residue(modulus, residue)
    gamma = gamma_subgroup(semigroup, modulus)
    exponents = [residue * gamma.alpha[t] - t * n for t in gamma.elements]
    return complex(_roots(exponents, modulus).sum())


def exponential_sum(
    semigroup: NumericalSemigroup, modulus: int, residue: int, n: int, check: bool = False
) -> int:
    """
    Closed form of the exponential sum: m if i n_1 = n (mod m), else 0.

    With check=True the complex sum is evaluated as well and must agree to
    within config.CROSS_CHECK_TOLERANCE.
    """
    check_residue(modulus, residue)
    m = semigroup.modulus_gcd(modulus)
    value = m if (residue * semigroup.smallest - n) % m == 0 else 0
    if check:
        direct = exponential_sum_complex(semigroup, modulus, residue, n)
        if abs(direct - value) > config.CROSS_CHECK_TOLERANCE:
            raise ConsistencyError(
                f"exponential sum for N={modulus}, i={residue}, n={n}: closed form {value}, direct {direct}"
            )
    return value


def common_zero_check(semigroup: NumericalSemigroup, modulus: int, r: int, t: int) -> bool:
    """
    Whether zeta^t is a common zero of 1 - conj(zeta)^r z^(n_j) for all j.

    Evaluated numerically and algebraically (t in Gamma and alpha(t) = r);
    the two answers must agree.
    """
    check_residue(modulus, r)
    check_residue(modulus, t)

    values = 1.0 - _roots([t * g - r for g in semigroup.generators], modulus)
    numeric = bool(np.all(np.abs(values) < config.CROSS_CHECK_TOLERANCE))

    gamma = gamma_subgroup(semigroup, modulus)
    algebraic = t in gamma.alpha and r in gamma.alpha and gamma.alpha[t] == r

    if numeric != algebraic:
        raise ConsistencyError(
            f"common zero test for N={modulus}, r={r}, t={t}: numeric {numeric}, algebraic {algebraic}"
        )
    return algebraic


# =============================================================================
# RESTRICTED MOMENTS AND HISTOGRAMS
# =============================================================================


@dataclass(frozen=True)
class MomentResult:
    p: int
    modulus: int
    residue: int
    n: int
    exact: BigCount
    attainable: bool
    leading: Fraction

    @property
    def residual(self) -> Fraction:
        return self.exact - self.leading


def restricted_moment(
    semigroup: NumericalSemigroup,
    n: int,
    p: int,
    modulus: int,
    residue: int,
    distribution: Optional[LengthDistribution] = None,
) -> MomentResult:
    """
    Lambda^p_{i,N}(n) exactly, next to its main term.

    Parameters:
    -----------
    semigroup : NumericalSemigroup
    n : int
        The element; an element outside S gives exact = 0.
    p : int
        Power of the lengths, p >= 0.
    modulus, residue : int
        N >= 1 and 0 <= i < N.
    distribution : LengthDistribution, optional
        A precomputed L[[n]] to reuse.

    Returns:
    --------
    MomentResult

    Example:
    --------
    >>> restricted_moment(new_semigroup([6, 9, 20]), 1000, 0, 7, 2).exact
    59
    """
    check_residue(modulus, residue)
    if p < 0:
        raise DomainError(f"power p must be non-negative, got {p}")
    if distribution is None:
        distribution = length_distribution(semigroup, n)

    exact = distribution.power_sum(p, modulus, residue)
    reachable = semigroup.attainable(modulus, residue, n)
    if not reachable and exact != 0:
        raise ConsistencyError(
            f"lengths of {n} found in the unattainable class {residue} mod {modulus}"
        )
    return MomentResult(
        p=p,
        modulus=modulus,
        residue=residue,
        n=n,
        exact=exact,
        attainable=reachable,
        leading=leading_term(semigroup, p, modulus, residue, n),
    )


@dataclass(frozen=True)
class ResidueHistogram:
    element: int
    modulus: int
    counts: Tuple[BigCount, ...]

    @property
    def total(self) -> BigCount:
        return sum(self.counts)

    @property
    def proportions(self) -> Optional[Tuple[Fraction, ...]]:
        """counts[i] / total, or None when the element has no factorization."""
        total = self.total
        if total == 0:
            return None
        return tuple(Fraction(count, total) for count in self.counts)


def residue_histogram(
    semigroup: NumericalSemigroup,
    n: int,
    modulus: int,
    distribution: Optional[LengthDistribution] = None,
) -> ResidueHistogram:
    """
    Number of lengths of n in each residue class mod N.

    Example:
    --------
    >>> residue_histogram(new_semigroup([6, 9, 20]), 1000, 2).counts
    (233, 232)
    """
    semigroup.modulus_gcd(modulus)
    if distribution is None:
        distribution = length_distribution(semigroup, n)
    counts = tuple(
        restricted_moment(semigroup, n, 0, modulus, i, distribution=distribution).exact
        for i in range(modulus)
    )
    return ResidueHistogram(element=n, modulus=modulus, counts=counts)


# =============================================================================
# FOURIER AND STIRLING CROSS-CHECKS
# =============================================================================


def fourier_moments(distribution: LengthDistribution, p: int, modulus: int) -> List[complex]:
    """V_j = sum over L[[n]] of zeta^(-j l) l^p, for j = 0 .. N-1."""
    if not distribution.counts:
        return [0j] * modulus
    lengths = sorted(distribution.counts)
    weights = np.array([distribution.counts[l] * l**p for l in lengths], dtype=float)
    exponents = -np.outer(np.arange(modulus), lengths)
    return [complex(v) for v in _roots(exponents, modulus) @ weights]


def invert_fourier_moments(values: Sequence[complex], modulus: int) -> List[int]:
    """
    Lambda_i = (1/N) sum_j zeta^(i j) V_j, rounded to integers.

    Exact while the moments stay well below 2**53. Raises ConsistencyError
    when a value is not within tolerance of an integer.
    """
    spectrum = np.asarray(values, dtype=complex)
    exponents = np.outer(np.arange(modulus), np.arange(modulus))
    restored = _roots(exponents, modulus) @ spectrum / modulus
    bound = config.CROSS_CHECK_TOLERANCE * max(1.0, float(np.abs(spectrum).max(initial=0.0)))

    result = []
    for i, value in enumerate(restored):
        nearest = round(value.real)
        if abs(value - nearest) > bound:
            raise ConsistencyError(f"inverse transform at residue {i} is {value}, not an integer")
        result.append(int(nearest))
    return result


def stirling_moment(distribution: LengthDistribution, p: int, modulus: int, residue: int) -> BigCount:
    """
    Lambda^p_{i,N} through falling factorials:
    l^p = sum_a S(p, a) l (l-1) ... (l-a+1).
    """
    check_residue(modulus, residue)
    restricted = distribution.restricted(modulus, residue)
    return sum(
        stirling2(p, a) * sum(falling_factorial(length, a) * count for length, count in restricted.items())
        for a in range(p + 1)
    )


# =============================================================================
# DEGREE BOUND
# =============================================================================


@dataclass(frozen=True)
class DegreeBoundReport:
    """
    |residual(n)| / n^(k+p-2) over a sample of n.

    bounded is True when the largest value over the last quarter of the
    samples is at most twice the median of all samples plus the floor.
    """

    p: int
    modulus: int
    residue: int
    samples: Tuple[Tuple[int, float], ...]
    median: float
    last_quartile_max: float
    floor: float

    @property
    def bounded(self) -> bool:
        return self.last_quartile_max <= 2 * self.median + self.floor


def degree_bound_check(
    semigroup: NumericalSemigroup,
    p: int,
    modulus: int,
    residue: int,
    n_values: Iterable[int],
    floor: Optional[float] = None,
) -> DegreeBoundReport:
    """
    Check that the residual after the main term grows no faster than n^(k+p-2).

    Parameters:
    -----------
    n_values : iterable of int
        Positive elements, all attainable for (N, i). A fixed class mod m N
        keeps the lower-order periodic terms comparable.
    floor : float, optional
        Absolute slack. Defaults to |c| (k+p-1) (n_1 + ... + n_k) N with c
        the N = 1 leading coefficient, the scale of the next term.

    Raises:
    -------
    DomainError
        Empty sample, a non-positive n, or an unattainable n.
    """
    samples_n = sorted(set(n_values))
    if not samples_n:
        raise DomainError("degree bound check needs at least one n")
    if samples_n[0] < 1:
        raise DomainError(f"sample elements must be positive, got {samples_n[0]}")
    for n in samples_n:
        if not semigroup.attainable(modulus, residue, n):
            raise DomainError(f"n = {n} is not attainable for residue {residue} mod {modulus}")

    k = semigroup.k
    if floor is None:
        coefficient = leading_coefficient(semigroup, p, 1)
        floor = float(abs(coefficient) * (k + p - 1) * sum(semigroup.generators) * modulus)

    distributions = length_distributions(semigroup, samples_n)
    samples = []
    for n in samples_n:
        result = restricted_moment(semigroup, n, p, modulus, residue, distribution=distributions[n])
        samples.append((n, float(abs(result.residual) / Fraction(n) ** (k + p - 2))))

    values = np.array([value for _, value in samples])
    tail = values[(3 * len(values)) // 4:]
    report = DegreeBoundReport(
        p=p,
        modulus=modulus,
        residue=residue,
        samples=tuple(samples),
        median=float(np.median(values)),
        last_quartile_max=float(tail.max()),
        floor=floor,
    )
    logger.debug(
        "degree bound for p=%d, i=%d mod %d: median %.3g, tail max %.3g, floor %.3g",
        p, residue, modulus, report.median, report.last_quartile_max, floor,
    )
    return report
