"""
=============================================================================
TEMPLATES.PY - Centralized Report Templates
=============================================================================

Human-readable lines printed by the command line. Machine-readable output
(csv, json) never goes through these; it is built by tools.records.

Every template is a plain str filled with .format(); placeholders are named
after the values they take.
=============================================================================
"""

# =============================================================================
# VERIFY COMMAND
# Used by: app.py (verify)
# =============================================================================

VERIFY_HEADER = "Verifying {semigroup}: n <= {max_n}, N <= {modulus_max}, seed {seed}"

SUITE_LINE = "{status:<4}  {suite:<16}{checks:>8} checks  {detail}"

VERIFY_SUMMARY = "{passed}/{total} suites passed"

# =============================================================================
# SUITE DETAILS
# Used by: suites/*.py
# =============================================================================

ORACLE_DETAIL = (
    "brute force matches the table for n <= {oracle_n} on {semigroup} "
    "and {random_count} random semigroups"
)

CONGRUENCE_DETAIL = "all lengths agree mod delta = {delta}"

CONGRUENCE_ELEMENT_DETAIL = "lengths of {n} are all {residue} mod {delta}"

CONGRUENCE_OUTSIDE_DETAIL = "{n} is not in {semigroup}"

GAMMA_DETAIL = "|Gamma| = gcd({delta}, N) for N <= {modulus_max}"

EXPONENTIAL_SUM_DETAIL = "closed form equals the complex sum for N <= {modulus_max}"

COMMON_ZERO_DETAIL = "numeric and algebraic tests agree for N <= {modulus_max}"

FOURIER_DETAIL = "restricted sums rebuild every moment for p <= {max_power}"

# =============================================================================
# CONVERGENCE COMMAND
# Used by: app.py (convergence)
# =============================================================================

TREND_LINE = (
    "# final gap {final_gap}; mean gap first half {first_half}, "
    "second half {second_half}; decreasing: {decreasing}"
)
