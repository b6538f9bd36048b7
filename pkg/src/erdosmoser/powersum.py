"""Ground-truth power sums.

``sum_direct`` is the literal summation that every other result in this
package is checked against.  ``sum_eml_exact`` evaluates the full
Euler-Maclaurin expansion of the same sum -- integral, boundary term, and
every non-vanishing Bernoulli correction -- in exact rationals.  For a
polynomial summand the remainder vanishes identically, so the two must
agree exactly, integer for integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import bernoulli, falling_factorial
from .errors import DomainError, InternalConsistencyError

__all__ = ["PowerSumQuery", "sum_direct", "sum_eml_exact"]


@dataclass(frozen=True)
class PowerSumQuery:
    """Parameters of the sum 1^k + 2^k + ... + n^k."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"upper limit must be >= 0, got {self.n}")
        if self.k < 1:
            raise DomainError(f"exponent must be >= 1, got {self.k}")


def sum_direct(q: PowerSumQuery) -> int:
    """Sum of i^k for i = 1..n by literal addition; 0 when n = 0."""
    return sum(i**q.k for i in range(1, q.n + 1))


def sum_eml_exact(q: PowerSumQuery) -> Fraction:
    """Full Euler-Maclaurin expansion of the power sum, evaluated exactly::

        integral_1^n x^k dx  +  (1^k + n^k)/2
          + sum_{r=1}^{floor(k/2)}  B_{2r}/(2r)! * k_(2r-1) * (n^{k-(2r-1)} - 1)

    where ``k_(j)`` is the falling factorial.  Corrections with derivative
    order above k vanish, so the sum stops at floor(k/2); r-values beyond
    that would contribute nothing.  The result is always integer-valued
    (denominator 1); anything else is a bug and raises
    :class:`InternalConsistencyError`.
    """
    if q.n < 1:
        raise DomainError("expansion requires n >= 1 (integral lower bound is 1)")
    n, k = q.n, q.k
    total = Fraction(n ** (k + 1) - 1, k + 1) + Fraction(1 + n**k, 2)
    for r in range(1, k // 2 + 1):
        drop = 2 * r - 1
        weight = bernoulli(2 * r) * falling_factorial(k, drop) / math.factorial(2 * r)
        total += weight * (n ** (k - drop) - 1)
    if total.denominator != 1:
        raise InternalConsistencyError(
            f"expansion for n={n}, k={k} is not an integer: {total}"
        )
    return total
