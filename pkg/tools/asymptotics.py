"""
=============================================================================
ASYMPTOTICS.PY - Main Terms, Distribution Statistics and Convergence Reports
=============================================================================

Three groups of functions live here:

LEADING TERMS:
--------------
leading_term(S, p, N, i, n)
    The main term of the restricted power sum of lengths,

        p! m h_p(1/n_1, ..., 1/n_k)
        ---------------------------  n^(k+p-1)     if n = i n_1 (mod m)
          N (k+p-1)! n_1 ... n_k

    and exactly 0 otherwise. m = gcd(delta, N).

STATISTICS:
-----------
stats(S, n, N, i)
    Mean, variance, standard deviation, skewness, harmonic and geometric
    means, median and mode of L[[n]]
    or of its residue-restricted part, computed from exact multiplicities.

CONVERGENCE:
------------
equidistribution_check / moment_convergence
    Compare exact finite-n quantities with their limits from the density F
    along a caller-chosen schedule of n, and report the gaps.

The limits are taken along n in one congruence class; a schedule mixing
classes modulo m is rejected rather than silently averaged.
=============================================================================
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.arithmetic import BigCount, RationalLike, h_poly, to_rational
from core.errors import DomainError
from core.semigroup import NumericalSemigroup, check_residue
from tools.density import density_integral_exact, density_model, density_moment
from tools.enumeration import LengthDistribution, length_distribution, length_distributions

logger = logging.getLogger(__name__)


# =============================================================================
# LEADING TERMS
# =============================================================================


def leading_coefficient(semigroup: NumericalSemigroup, p: int, modulus: int) -> Fraction:
    """
    Coefficient of n^(k+p-1) in the main term for an attainable residue.

    Example:
    --------
    >>> leading_coefficient(new_semigroup([17, 29, 47, 65]), 0, 1)
    Fraction(1, 9036690)
    """
    if p < 0:
        raise DomainError(f"power p must be non-negative, got {p}")
    k = semigroup.k
    m = semigroup.modulus_gcd(modulus)
    reciprocals = [Fraction(1, g) for g in semigroup.generators]
    numerator = math.factorial(p) * m * h_poly(p, reciprocals)
    return numerator / (modulus * math.factorial(k + p - 1) * semigroup.product)


def leading_term(semigroup: NumericalSemigroup, p: int, modulus: int, residue: int, n: int) -> Fraction:
    """The exact main term of the restricted p-th power sum at n (0 when unattainable)."""
    check_residue(modulus, residue)
    if not semigroup.attainable(modulus, residue, n):
        return Fraction(0)
    return leading_coefficient(semigroup, p, modulus) * n ** (semigroup.k + p - 1)


def limiting_mean(semigroup: NumericalSemigroup, n: int, modulus: int = 1, residue: int = 0) -> Fraction:
    """
    (m/N) (n/k) sum_j 1/n_j, the main term of Lambda^1_{i,N}(n) / |L[[n]]|.

    The sum of lengths in the class is divided by the count of all
    factorizations, so for N > 1 this is not the mean of the class alone
    but the N = 1 value scaled by m/N. For N = 1 it is n times the first
    moment of the density F. 0 when the class is unattainable.
    """
    check_residue(modulus, residue)
    if not semigroup.attainable(modulus, residue, n):
        return Fraction(0)
    m = semigroup.modulus_gcd(modulus)
    reciprocal_sum = sum(Fraction(1, g) for g in semigroup.generators)
    return Fraction(m, modulus) * Fraction(n, semigroup.k) * reciprocal_sum


def equidistributed_for_all_moduli(semigroup: NumericalSemigroup) -> bool:
    """True iff lengths tend to equidistribute modulo every N, i.e. delta = 1."""
    return semigroup.delta == 1


# =============================================================================
# STATISTICS
# =============================================================================


@dataclass(frozen=True)
class DistributionStats:
    """
    Summary of a (possibly residue-restricted) length multiset.

    When the multiset is empty, `empty` is True and every statistic is None.
    Skewness is None as well when the variance is 0. A length of 0 (only
    n = 0 has one) leaves the harmonic mean None and the geometric mean 0.
    """

    element: int
    modulus: int
    residue: int
    total: BigCount
    empty: bool
    mean: Optional[Fraction] = None
    variance: Optional[Fraction] = None
    stddev: Optional[float] = None
    skewness: Optional[float] = None
    harmonic_mean: Optional[Fraction] = None
    geometric_mean: Optional[float] = None
    median: Optional[int] = None
    mode: Optional[int] = None


def stats(
    semigroup: NumericalSemigroup,
    n: int,
    modulus: Optional[int] = None,
    residue: Optional[int] = None,
    distribution: Optional[LengthDistribution] = None,
) -> DistributionStats:
    """
    Exact statistics of L[[n]], or of its lengths = residue (mod modulus).

    Parameters:
    -----------
    semigroup : NumericalSemigroup
    n : int
        The element.
    modulus, residue : int, optional
        Both or neither. Omitted means the whole multiset (N = 1, i = 0).
    distribution : LengthDistribution, optional
        A precomputed L[[n]] to reuse.

    Returns:
    --------
    DistributionStats
        mean and variance are exact Fractions; median is the smallest length
        whose cumulative multiplicity reaches half the total; mode is the
        smallest length of maximal multiplicity.
        harmonic_mean is an exact Fraction, geometric_mean a float from the
        sum of logarithms.
    """
    if (modulus is None) != (residue is None):
        raise DomainError("pass both modulus and residue, or neither")
    modulus = 1 if modulus is None else modulus
    residue = 0 if residue is None else residue
    check_residue(modulus, residue)

    if distribution is None:
        distribution = length_distribution(semigroup, n)
    counts = distribution.restricted(modulus, residue)
    total = sum(counts.values())
    if total == 0:
        return DistributionStats(element=n, modulus=modulus, residue=residue, total=0, empty=True)

    mean = Fraction(sum(length * count for length, count in counts.items()), total)
    variance = sum(count * (length - mean) ** 2 for length, count in counts.items()) / total
    third = sum(count * (length - mean) ** 3 for length, count in counts.items()) / total

    stddev = math.sqrt(variance)
    skewness = float(third) / stddev**3 if variance else None

    if 0 in counts:
        harmonic_mean, geometric_mean = None, 0.0
    else:
        harmonic_mean = total / sum(Fraction(count, length) for length, count in counts.items())
        geometric_mean = math.exp(math.fsum(count * math.log(length) for length, count in counts.items()) / total)

    cumulative = 0
    median = None
    for length in sorted(counts):
        cumulative += counts[length]
        if 2 * cumulative >= total:
            median = length
            break

    top = max(counts.values())
    mode = min(length for length, count in counts.items() if count == top)

    return DistributionStats(
        element=n,
        modulus=modulus,
        residue=residue,
        total=total,
        empty=False,
        mean=mean,
        variance=variance,
        stddev=stddev,
        skewness=skewness,
        harmonic_mean=harmonic_mean,
        geometric_mean=geometric_mean,
        median=median,
        mode=mode,
    )


# =============================================================================
# CONVERGENCE REPORTS
# =============================================================================


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    empirical: Fraction
    limit: Fraction

    @property
    def gap(self) -> Fraction:
        return abs(self.empirical - self.limit)


@dataclass(frozen=True)
class ConvergenceReport:
    """
    Empirical values against their limit along a schedule of n.

    The verdict fields summarize the trend: the gap at the last n, and the
    mean gap over the first and second halves of the schedule.
    """

    semigroup: NumericalSemigroup
    query: Dict[str, str]
    rows: Tuple[ConvergenceRow, ...]
    final_gap: Fraction
    first_half_gap: Fraction
    second_half_gap: Fraction

    @property
    def trend_decreasing(self) -> bool:
        return self.second_half_gap <= self.first_half_gap


def _report(semigroup: NumericalSemigroup, query: Dict[str, str], rows: List[ConvergenceRow]) -> ConvergenceReport:
    half = max(1, len(rows) // 2)
    first, second = rows[:half], rows[half:] or rows[:half]

    def mean_gap(part: Sequence[ConvergenceRow]) -> Fraction:
        return sum((row.gap for row in part), Fraction(0)) / len(part)

    report = ConvergenceReport(
        semigroup=semigroup,
        query=query,
        rows=tuple(rows),
        final_gap=rows[-1].gap,
        first_half_gap=mean_gap(first),
        second_half_gap=mean_gap(second),
    )
    if not report.trend_decreasing:
        logger.warning(
            "gaps are not shrinking for %s %s: first half %.3g, second half %.3g",
            semigroup, query, float(report.first_half_gap), float(report.second_half_gap),
        )
    return report


def _schedule(n_list: Iterable[int]) -> List[int]:
    schedule = list(n_list)
    if not schedule:
        raise DomainError("the n schedule is empty")
    if any(n < 0 for n in schedule):
        raise DomainError(f"schedule elements must be non-negative, got {schedule}")
    return schedule


def equidistribution_check(
    semigroup: NumericalSemigroup,
    modulus: int,
    residue: int,
    alpha: RationalLike,
    beta: RationalLike,
    n_list: Iterable[int],
) -> ConvergenceReport:
    """
    Proportion of lengths l = i (mod N) with alpha n <= l <= beta n, per n.

    The limit is (m/N) times the integral of F over [alpha, beta] when the
    class is attainable, and 0 otherwise.

    Raises:
    -------
    DomainError
        The schedule is empty, holds a negative n, or mixes classes mod m;
        k < 3; alpha > beta.
    """
    check_residue(modulus, residue)
    schedule = _schedule(n_list)
    m = semigroup.modulus_gcd(modulus)
    classes = {n % m for n in schedule}
    if len(classes) > 1:
        raise DomainError(
            f"schedule mixes congruence classes {sorted(classes)} mod {m}; "
            "pick n values in a single class"
        )

    low, high = to_rational(alpha), to_rational(beta)
    model = density_model(semigroup)
    integral = density_integral_exact(model, low, high)
    distributions = length_distributions(semigroup, schedule)

    rows = []
    for n in schedule:
        distribution = distributions[n]
        limit = Fraction(m, modulus) * integral if semigroup.attainable(modulus, residue, n) else Fraction(0)
        if distribution.total == 0:
            empirical = Fraction(0)
        else:
            hits = sum(
                count
                for length, count in distribution.restricted(modulus, residue).items()
                if low * n <= length <= high * n
            )
            empirical = Fraction(hits, distribution.total)
        rows.append(ConvergenceRow(n=n, empirical=empirical, limit=limit))

    query = {"modulus": str(modulus), "residue": str(residue), "alpha": str(low), "beta": str(high)}
    return _report(semigroup, query, rows)


def moment_convergence(semigroup: NumericalSemigroup, p: int, n_list: Iterable[int]) -> ConvergenceReport:
    """
    Scaled moments (1/|L[[n]]|) sum l^p / n^p against the p-th moment of F.
    """
    schedule = _schedule(n_list)
    if 0 in schedule:
        raise DomainError("moments are scaled by n^p, so n = 0 is not allowed")
    limit = density_moment(density_model(semigroup), p)
    distributions = length_distributions(semigroup, schedule)

    rows = []
    for n in schedule:
        distribution = distributions[n]
        if distribution.total == 0:
            empirical = Fraction(0)
        else:
            empirical = Fraction(distribution.power_sum(p), distribution.total * n**p)
        rows.append(ConvergenceRow(n=n, empirical=empirical, limit=limit))

    return _report(semigroup, {"power": str(p)}, rows)
