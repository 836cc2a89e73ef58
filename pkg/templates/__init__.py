# =============================================================================
# TEMPLATES PACKAGE - __init__.py
# =============================================================================
# Marks 'templates' as a package so report text can be imported with:
#   from templates.templates import SUITE_LINE
# =============================================================================
