"""
=============================================================================
COMMON.PY - Turning a Check Function into a Pipeline Node
=============================================================================

A suite body takes the state and returns (checks, detail): how many
individual checks ran and a one-line description. It signals failure by
raising; ConsistencyError comes from the library's own cross-checks and
AssertionError from comparisons made in the suite itself.

suite_node() wraps such a body into a LangGraph node returning
{"suite_results": [result]}.
=============================================================================
"""

import functools
import logging
from typing import Callable, Tuple

from state import VerificationState, suite_result

logger = logging.getLogger(__name__)

SuiteBody = Callable[[VerificationState], Tuple[int, str]]


def suite_node(name: str) -> Callable[[SuiteBody], Callable[[VerificationState], dict]]:
    def decorate(body: SuiteBody) -> Callable[[VerificationState], dict]:
        @functools.wraps(body)
        def node(state: VerificationState) -> dict:
            logger.debug("running suite %s", name)
            try:
                checks, detail = body(state)
            except AssertionError as error:
                # ConsistencyError is an AssertionError too
                logger.warning("suite %s failed: %s", name, error)
                return {"suite_results": [suite_result(name, False, 0, str(error) or "assertion failed")]}
            return {"suite_results": [suite_result(name, True, checks, detail)]}

        return node

    return decorate
