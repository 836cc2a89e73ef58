# =============================================================================
# TOOLS PACKAGE - __init__.py
# =============================================================================
# The computations behind every command: length tables, residue classes,
# the limiting density, main terms and convergence reports, the zeta ratio,
# and output records.
#
# TOOLS vs SUITES:
# - Tools are reusable functions that compute one quantity each
# - Suites are pipeline nodes that call tools and check their results
# Import from the module directly: from tools.modular import residue_histogram
# =============================================================================
