"""
=============================================================================
CONGRUENCE_SUITE.PY - All Lengths of an Element Agree Modulo delta
=============================================================================

If a_1 n_1 + ... + a_k n_k = n then n = (a_1 + ... + a_k) n_1 (mod delta),
since every generator is n_1 mod delta. So every length l of n satisfies
l n_1 = n (mod delta), and in particular all lengths of n agree mod delta.
=============================================================================
"""

from state import VerificationState
from suites.common import suite_node
from templates.templates import CONGRUENCE_DETAIL, CONGRUENCE_ELEMENT_DETAIL, CONGRUENCE_OUTSIDE_DETAIL


@suite_node("congruence")
def congruence_suite(state: VerificationState):
    semigroup = state["semigroup"]
    delta = semigroup.delta
    checks = 0
    for n, distribution in state["distributions"].items():
        classes = {length % delta for length in distribution.counts}
        assert len(classes) <= 1, f"lengths of {n} fall in classes {sorted(classes)} mod {delta}"
        for length in distribution.counts:
            assert (length * semigroup.smallest - n) % delta == 0, (
                f"length {length} of {n} breaks l n_1 = n (mod {delta})"
            )
        checks += 1

    max_n = state["max_n"]
    top = state["distributions"][max_n]
    if top.is_empty:
        tail = CONGRUENCE_OUTSIDE_DETAIL.format(n=max_n, semigroup=semigroup)
    else:
        tail = CONGRUENCE_ELEMENT_DETAIL.format(n=max_n, residue=top.lengths[0] % delta, delta=delta)
    return checks, CONGRUENCE_DETAIL.format(delta=delta) + "; " + tail
