"""Resource caps for the exhaustive enumerations.

All searches are exponential in the worst case; the caps make them fail
loudly instead of running away.  Every cap can be overridden per call.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True, slots=True)
class Limits:
    max_chambers: int = 10**6        # chamber enumeration
    max_bruteforce_n: int = 16       # 2^n sign-vector sweeps
    max_circuit_n: int = 16          # circuit subset search
    max_poincare_n: int = 20         # Whitney subset sum
    max_bipartition_n: int = 20      # decomposability brute force
    max_exponent: int = 24           # log2 of the truth-table candidate space
    max_tuples: int = 10**7          # |Ch|^m evaluations per candidate

    def with_exponent(self, exponent: int) -> "Limits":
        return replace(self, max_exponent=exponent)


DEFAULT_LIMITS = Limits()
