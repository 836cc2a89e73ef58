# =============================================================================
# CORE PACKAGE - __init__.py
# =============================================================================
# The validated semigroup model, exact arithmetic primitives and the error
# hierarchy. Everything in tools/ and suites/ builds on these.
#
# Imports stay explicit (from core.semigroup import new_semigroup) so each
# module's dependencies are visible at the top of the file.
# =============================================================================
