"""
=============================================================================
ZETA.PY - How Often a Random Semigroup Has delta = 1
=============================================================================

For k random generators with gcd 1, the probability that delta = 1 (so that
lengths equidistribute modulo every N) is zeta(k) / zeta(k-1). Locally at a
prime p, the chance that k integers not all divisible by p are also not all
congruent mod p is (p^k - p) / (p^k - 1); the product over primes is the
Euler product of the ratio.

    zeta_ratio(k)                 series value, the trusted number
    zeta_ratio_euler_product(k)   truncated product over primes (cross-check)
    delta_one_probability_mc      seeded Monte Carlo estimate

For k = 2 the ratio is 0: zeta(1) diverges, and only consecutive pairs
n_2 = n_1 + 1 have delta = 1.
=============================================================================
"""

import logging
from fractions import Fraction

import numpy as np
from sympy import isprime, primerange

import config
from core.errors import DomainError

logger = logging.getLogger(__name__)


def zeta(s: float, terms: int = config.ZETA_TERMS) -> float:
    """
    Riemann zeta at real s > 1.

    sum_{n < M} n^(-s) plus the Euler-Maclaurin tail
    M^(1-s)/(s-1) + M^(-s)/2 + s M^(-s-1)/12 with M = terms.
    """
    if s <= 1:
        raise DomainError(f"zeta(s) diverges for s <= 1, got s = {s}")
    if terms < 2:
        raise DomainError(f"need at least 2 terms, got {terms}")
    n = np.arange(terms - 1, 0, -1, dtype=float)
    head = float(np.sum(n ** (-s)))
    m = float(terms)
    tail = m ** (1 - s) / (s - 1) + m ** (-s) / 2 + s * m ** (-s - 1) / 12
    return head + tail


def zeta_ratio(k: int, terms: int = config.ZETA_TERMS) -> float:
    """
    zeta(k) / zeta(k-1), the probability that a k-generator semigroup has delta = 1.

    Example:
    --------
    >>> round(zeta_ratio(3), 4)
    0.7308
    """
    if k < 2:
        raise DomainError(f"need k >= 2 generators, got {k}")
    if k == 2:
        return 0.0
    return zeta(k, terms) / zeta(k - 1, terms)


def prime_congruence_probability(p: int, k: int) -> Fraction:
    """
    (p^k - p) / (p^k - 1): given k integers not all divisible by p, the
    probability that they are not all congruent mod p.
    """
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    return Fraction(p**k - p, p**k - 1)


def zeta_ratio_euler_product(k: int, prime_bound: int = 10**5) -> float:
    """Product over primes p <= prime_bound of (1 - p^(1-k)) / (1 - p^(-k))."""
    if k < 3:
        raise DomainError(f"the Euler product converges for k >= 3, got {k}")
    primes = np.array(list(primerange(2, prime_bound + 1)), dtype=float)
    return float(np.prod((1.0 - primes ** (1 - k)) / (1.0 - primes ** (-k))))


def delta_one_probability_mc(k: int, R: int, trials: int, seed: int) -> float:
    """
    Monte Carlo estimate of P(delta = 1) for k-tuples in {1..R}^k with gcd 1.

    Tuples are drawn uniformly, tuples with gcd > 1 are rejected, and delta
    is taken over the sorted tuple. The stream comes from
    numpy.random.SeedSequence(seed), so a fixed seed reproduces the estimate.

    Parameters:
    -----------
    k : int
        Tuple size, k >= 2.
    R : int
        Largest generator value, R >= k.
    trials : int
        Number of accepted (gcd 1) tuples, trials >= 1.
    seed : int
    """
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    if R < k:
        raise DomainError(f"need R >= k, got R = {R}, k = {k}")
    if trials < 1:
        raise DomainError(f"need at least one trial, got {trials}")

    rng = np.random.default_rng(np.random.SeedSequence(seed))
    accepted = []
    remaining = trials
    while remaining > 0:
        batch = rng.integers(1, R + 1, size=(2 * remaining, k))
        keep = batch[np.gcd.reduce(batch, axis=1) == 1][:remaining]
        accepted.append(keep)
        remaining -= len(keep)

    tuples = np.sort(np.concatenate(accepted), axis=1)
    deltas = np.gcd.reduce(np.diff(tuples, axis=1), axis=1)
    estimate = float(np.mean(deltas == 1))
    logger.debug("delta = 1 in %d of %d tuples (k=%d, R=%d, seed=%d)", int((deltas == 1).sum()), trials, k, R, seed)
    return estimate
