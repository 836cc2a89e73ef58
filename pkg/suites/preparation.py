"""
=============================================================================
PREPARATION.PY - First Node of the Verification Pipeline
=============================================================================

Builds the semigroup from the requested generators and computes L[[n]] for
every n in 0..max_n from a single dynamic-programming table, so the suites
downstream share one set of distributions.

ROLE IN THE PIPELINE:
--------------------
START → [PREPARE] → oracle → congruence → gamma → exponential_sum
      → common_zero → fourier → END
=============================================================================
"""

import logging

from core.semigroup import new_semigroup
from state import VerificationState
from tools.enumeration import length_distribution_range

logger = logging.getLogger(__name__)


def prepare(state: VerificationState) -> dict:
    """
    Parameters:
    -----------
    state : VerificationState
        Reads generators and max_n.

    Returns:
    --------
    dict
        semigroup and distributions.
    """
    semigroup = new_semigroup(state["generators"])
    max_n = state["max_n"]
    distributions = {
        distribution.element: distribution
        for distribution in length_distribution_range(semigroup, 0, max_n)
    }
    logger.debug("prepared %d distributions for %s", len(distributions), semigroup)
    return {"semigroup": semigroup, "distributions": distributions}
