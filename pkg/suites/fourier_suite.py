"""
=============================================================================
FOURIER_SUITE.PY - Restricted Moments Rebuild the Whole
=============================================================================

For every n <= max_n, N <= modulus_max and p <= VERIFY_MAX_POWER:

- the N restricted power sums add up to the unrestricted one,
- unattainable classes are exactly empty,
- inverting the discrete Fourier transform of the lengths gives back the
  restricted power sums,
- the falling-factorial (Stirling) form gives the same numbers.
=============================================================================
"""

import config
from state import VerificationState
from suites.common import suite_node
from templates.templates import FOURIER_DETAIL
from tools.modular import fourier_moments, invert_fourier_moments, stirling_moment


@suite_node("fourier")
def fourier_suite(state: VerificationState):
    semigroup = state["semigroup"]
    modulus_max = state["modulus_max"]
    max_power = config.VERIFY_MAX_POWER
    checks = 0
    for n, distribution in state["distributions"].items():
        for p in range(max_power + 1):
            whole = distribution.power_sum(p)
            for modulus in range(1, modulus_max + 1):
                restricted = [distribution.power_sum(p, modulus, i) for i in range(modulus)]
                assert sum(restricted) == whole, f"restricted sums miss the total at n={n}, p={p}, N={modulus}"
                for i, value in enumerate(restricted):
                    if not semigroup.attainable(modulus, i, n):
                        assert value == 0, f"unattainable class {i} mod {modulus} holds lengths of {n}"
                inverted = invert_fourier_moments(fourier_moments(distribution, p, modulus), modulus)
                assert inverted == restricted, f"Fourier inversion differs at n={n}, p={p}, N={modulus}"
                stirling = [stirling_moment(distribution, p, modulus, i) for i in range(modulus)]
                assert stirling == restricted, f"Stirling form differs at n={n}, p={p}, N={modulus}"
                checks += 1
    return checks, FOURIER_DETAIL.format(max_power=max_power)
