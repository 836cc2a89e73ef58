"""
=============================================================================
DENSITY.PY - The Limiting Density F of Scaled Factorization Lengths
=============================================================================

For k >= 3 generators, the measures putting mass 1/|L[[n]]| at each l/n
(l in L[[n]]) converge to a distribution with density

    F(x) = ((k-1) n_1 ... n_k / 2) * sum_r |1 - n_r x| (1 - n_r x)^(k-3)
                                         / prod_{j != r} (n_j - n_r)

supported on [1/n_k, 1/n_1]. F is a B-spline: between consecutive
breakpoints 1/n_r every factor (1 - n_j x) has a fixed sign, so on each
piece

    F(x) = sum_r c_r * s_r * (1 - n_r x)^(k-2),     s_r = sign(1 - n_r x)

is a polynomial of degree k-2 with exact rational coefficients.

HOW EACH QUANTITY IS COMPUTED:
------------------------------
density_eval / density_eval_array
    The displayed sum in floating point, with the c_r computed exactly and
    converted to float once. Outside the closed support the value is 0.

density_integral / density_integral_exact / density_moment
    Exact piecewise antiderivatives in Fraction arithmetic; converted to
    float only at the end (density_integral). The full-support integral is
    exactly 1.

weighted_integral
    Composite Simpson quadrature (scipy.integrate.simpson) of g(t) F(t) for
    an arbitrary callback g, one call per piece between breakpoints.
=============================================================================
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

import numpy as np
from scipy import integrate

import config
from core.arithmetic import RationalLike, to_rational
from core.errors import DomainError
from core.semigroup import NumericalSemigroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DensityPiece:
    """One polynomial piece of F between consecutive breakpoints."""

    left: Fraction
    right: Fraction
    signs: Tuple[int, ...]


@dataclass(frozen=True)
class DensityModel:
    semigroup: NumericalSemigroup
    support: Tuple[Fraction, Fraction]
    breakpoints: Tuple[Fraction, ...]
    coefficients: Tuple[Fraction, ...]
    float_coefficients: Tuple[float, ...]
    pieces: Tuple[DensityPiece, ...]


def density_model(semigroup: NumericalSemigroup) -> DensityModel:
    """
    Build the density model of a semigroup with at least three generators.

    Raises:
    -------
    DomainError
        k < 3; the exponent k - 3 would be negative and the limit law is
        only stated for k >= 3.
    """
    k = semigroup.k
    if k < 3:
        raise DomainError(
            f"the limiting density needs k >= 3 generators, {semigroup} has k = {k}"
        )

    generators = semigroup.generators
    scale = Fraction((k - 1) * semigroup.product, 2)
    coefficients = []
    for r, n_r in enumerate(generators):
        denominator = math.prod(n_j - n_r for j, n_j in enumerate(generators) if j != r)
        coefficients.append(scale / denominator)

    breakpoints = tuple(sorted(Fraction(1, g) for g in generators))
    pieces = []
    for left, right in zip(breakpoints, breakpoints[1:]):
        middle = (left + right) / 2
        signs = tuple(1 if 1 - g * middle > 0 else -1 for g in generators)
        pieces.append(DensityPiece(left=left, right=right, signs=signs))

    return DensityModel(
        semigroup=semigroup,
        support=(breakpoints[0], breakpoints[-1]),
        breakpoints=breakpoints,
        coefficients=tuple(coefficients),
        float_coefficients=tuple(float(c) for c in coefficients),
        pieces=tuple(pieces),
    )


# =============================================================================
# POINTWISE EVALUATION
# =============================================================================


def density_eval(model: DensityModel, x: float) -> float:
    """F(x) from the displayed sum; 0.0 outside [1/n_k, 1/n_1]."""
    lo, hi = model.support
    x = float(x)
    if x < float(lo) or x > float(hi):
        return 0.0
    k = model.semigroup.k
    total = 0.0
    for coefficient, generator in zip(model.float_coefficients, model.semigroup.generators):
        u = 1.0 - generator * x
        total += coefficient * abs(u) * u ** (k - 3)
    return total


def density_eval_array(model: DensityModel, xs: Sequence[float]) -> np.ndarray:
    """Vectorized density_eval."""
    points = np.asarray(xs, dtype=float)
    generators = np.asarray(model.semigroup.generators, dtype=float)[:, None]
    coefficients = np.asarray(model.float_coefficients, dtype=float)[:, None]
    u = 1.0 - generators * points[None, :]
    values = (coefficients * np.abs(u) * u ** (model.semigroup.k - 3)).sum(axis=0)
    lo, hi = (float(end) for end in model.support)
    return np.where((points < lo) | (points > hi), 0.0, values)


def density_grid(model: DensityModel, samples: int) -> List[Tuple[float, float]]:
    """(x, F(x)) at `samples` evenly spaced points spanning the support."""
    if samples < 2:
        raise DomainError(f"need at least 2 samples to span the support, got {samples}")
    lo, hi = (float(end) for end in model.support)
    xs = np.linspace(lo, hi, samples)
    return list(zip(xs.tolist(), density_eval_array(model, xs).tolist()))


# =============================================================================
# EXACT INTEGRATION
# =============================================================================


def _clip(model: DensityModel, alpha: RationalLike, beta: RationalLike) -> Tuple[Fraction, Fraction]:
    a, b = to_rational(alpha), to_rational(beta)
    if a > b:
        raise DomainError(f"integration bounds out of order: {a} > {b}")
    lo, hi = model.support
    return max(a, lo), min(b, hi)


def density_integral_exact(model: DensityModel, alpha: RationalLike, beta: RationalLike) -> Fraction:
    """
    The exact value of the integral of F over [alpha, beta].

    On a piece, the antiderivative of s_r (1 - n_r x)^(k-2) is
    -s_r (1 - n_r x)^(k-1) / (n_r (k-1)).
    """
    lo, hi = _clip(model, alpha, beta)
    if lo >= hi:
        return Fraction(0)

    k = model.semigroup.k
    total = Fraction(0)
    for piece in model.pieces:
        left, right = max(piece.left, lo), min(piece.right, hi)
        if left >= right:
            continue
        for coefficient, sign, generator in zip(
            model.coefficients, piece.signs, model.semigroup.generators
        ):
            antiderivative_gap = (1 - generator * left) ** (k - 1) - (1 - generator * right) ** (k - 1)
            total += coefficient * sign * antiderivative_gap / (generator * (k - 1))
    return total


def density_integral(model: DensityModel, alpha: RationalLike, beta: RationalLike) -> float:
    """Float value of density_integral_exact."""
    return float(density_integral_exact(model, alpha, beta))


def density_moment(model: DensityModel, p: int) -> Fraction:
    """
    The exact p-th moment, integral of t^p F(t) dt.

    Each piece term s_r (1 - n_r x)^(k-2) is expanded binomially and
    multiplied by x^p before integrating.
    """
    if p < 0:
        raise DomainError(f"moment order must be non-negative, got {p}")
    k = model.semigroup.k
    total = Fraction(0)
    for piece in model.pieces:
        for coefficient, sign, generator in zip(
            model.coefficients, piece.signs, model.semigroup.generators
        ):
            for e in range(k - 1):
                power = e + p + 1
                term = math.comb(k - 2, e) * Fraction(-generator) ** e
                total += coefficient * sign * term * (piece.right**power - piece.left**power) / power
    return total


# =============================================================================
# QUADRATURE
# =============================================================================


def weighted_integral(
    model: DensityModel,
    g: Callable[[float], float],
    subdivisions: int = config.SIMPSON_SUBDIVISIONS,
) -> float:
    """
    Integral of g(t) F(t) over the support by composite Simpson quadrature.

    Subdivisions are shared among the pieces in proportion to their width
    (at least two, always even), so every breakpoint is a panel edge and the
    integrand is smooth on every panel.

    Raises:
    -------
    DomainError
        g returned a non-finite value; the message names the sample point.
    """
    if subdivisions < 2:
        raise DomainError(f"need at least 2 subdivisions, got {subdivisions}")

    lo, hi = model.support
    width = float(hi - lo)
    total = 0.0
    for piece in model.pieces:
        share = float(piece.right - piece.left) / width
        panels = max(2, int(round(subdivisions * share)))
        if panels % 2:
            panels += 1
        xs = np.linspace(float(piece.left), float(piece.right), panels + 1)
        gs = np.array([g(float(x)) for x in xs], dtype=float)
        bad = ~np.isfinite(gs)
        if bad.any():
            where = float(xs[np.argmax(bad)])
            raise DomainError(f"integrand g is not finite at t = {where!r}")
        total += float(integrate.simpson(gs * density_eval_array(model, xs), x=xs))
    logger.debug("weighted integral over %s with %d subdivisions: %r", model.semigroup, subdivisions, total)
    return total
