"""
=============================================================================
GRAPH.PY - LangGraph Workflow of the Verification Suites
=============================================================================

This module wires the verification suites into a LangGraph StateGraph. The
verify command (app.py) invokes the compiled graph once per run.

KEY CONCEPTS:
-------------
STATE   VerificationState (state.py). Nodes return partial updates and
        LangGraph merges them; suite_results concatenates.
NODES   prepare, then one node per suite (suites/*.py).
EDGES   A straight line in DEFAULT_SUITES order. Every suite runs even when
        an earlier one fails, so one run reports all failures.

Graph Structure:
---------------
START → prepare → oracle → congruence → gamma → exponential_sum
      → common_zero → fourier → END
=============================================================================
"""

from typing import Callable, Dict, Mapping, Optional

from langgraph.graph import END, START, StateGraph

from state import VerificationState
from suites.common_zero_suite import common_zero_suite
from suites.congruence_suite import congruence_suite
from suites.exponential_sum_suite import exponential_sum_suite
from suites.fourier_suite import fourier_suite
from suites.gamma_suite import gamma_suite
from suites.oracle_suite import oracle_suite
from suites.preparation import prepare

SuiteNode = Callable[[VerificationState], dict]

DEFAULT_SUITES: Dict[str, SuiteNode] = {
    "oracle": oracle_suite,
    "congruence": congruence_suite,
    "gamma": gamma_suite,
    "exponential_sum": exponential_sum_suite,
    "common_zero": common_zero_suite,
    "fourier": fourier_suite,
}


def build_graph(*, suites: Optional[Mapping[str, SuiteNode]] = None):
    """
    Build and compile the verification workflow.

    Parameters:
    -----------
    suites : mapping of name -> node, optional
        Replaces the default node of the same name, or appends a new suite
        at the end. Used to run a deliberately failing suite in tests.

    How to Use:
    ----------
    graph = build_graph()
    final_state = graph.invoke({"generators": (6, 9, 20), "max_n": 200,
                                "modulus_max": 12, "seed": 0})
    failed = [r for r in final_state["suite_results"] if not r["passed"]]
    """

    # =========================================================================
    # STEP 1: Choose the nodes
    # =========================================================================

    nodes = dict(DEFAULT_SUITES)
    nodes.update(suites or {})

    # =========================================================================
    # STEP 2: Add them to the graph
    # =========================================================================

    workflow = StateGraph(VerificationState)
    workflow.add_node("prepare", prepare)
    for name, node in nodes.items():
        workflow.add_node(name, node)

    # =========================================================================
    # STEP 3: Chain them in order
    # =========================================================================

    previous = "prepare"
    workflow.add_edge(START, previous)
    for name in nodes:
        workflow.add_edge(previous, name)
        previous = name
    workflow.add_edge(previous, END)

    return workflow.compile()
