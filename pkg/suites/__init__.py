# =============================================================================
# SUITES PACKAGE - __init__.py
# =============================================================================
# One verification suite per file. Each exposes a node function
# fn(state) -> dict that graph.py wires into the pipeline, e.g.
#   from suites.gamma_suite import gamma_suite
# =============================================================================
