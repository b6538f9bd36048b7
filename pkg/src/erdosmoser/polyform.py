"""Integer polynomials in m derived from the power-sum identities.

Polynomials are dense ascending-power coefficient tuples (index i holds
the coefficient of m^i).  Degrees stay near k + 1 at desk scale, so the
dense form is compact, and Horner evaluation is exact for both int and
Fraction arguments.

Two cleared forms are built here:

* ``cleared_poly`` -- 2(k+1) times the leading (integral + boundary)
  approximation of the power-sum difference, the degree-(k+1) polynomial
  whose rational roots are enumerated by :mod:`erdosmoser.candidates`;
* ``full_eml_poly`` -- the exact difference with every Bernoulli
  correction included, multiplied by the least common multiple D of all
  denominators, so that dividing its integer values by D reproduces the
  direct sum difference exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .arith import bernoulli, binomial, falling_factorial, lcm_all
from .errors import DomainError, InternalConsistencyError

__all__ = [
    "ClearedPoly",
    "IntPoly",
    "cleared_poly",
    "constant_and_linear_terms",
    "eval_poly",
    "full_eml_poly",
    "quotient_poly",
]

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class IntPoly:
    """Dense integer-coefficient polynomial, ascending powers.

    The highest stored coefficient is non-zero; the zero polynomial is the
    empty tuple.  Instances are immutable (and therefore hashable and
    freely shareable).
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, m: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc


def eval_poly(p: IntPoly, m: Scalar) -> Scalar:
    """Exact Horner evaluation; an int argument gives an int result."""
    return p(m)


@dataclass(frozen=True)
class ClearedPoly:
    """An integer polynomial plus the multiplier that cleared its
    denominators: 2(k+1) for the truncated form, D for the full expansion."""

    poly: IntPoly
    k: int
    multiplier: int


@lru_cache(maxsize=None)
def cleared_poly(k: int) -> ClearedPoly:
    """2(m-1)^{k+1} + (k+1)(m-1)^k - 2(k+1) m^k + (k-1), fully expanded.

    Degree k + 1, leading coefficient 2.  The constant term is 2(k-1) for
    even k and 0 for odd k (so m factors out in the odd case).
    """
    if k < 1:
        raise DomainError(f"exponent must be >= 1, got {k}")
    c = [0] * (k + 2)
    for i in range(k + 2):
        c[i] += 2 * binomial(k + 1, i) * (-1) ** (k + 1 - i)
    for i in range(k + 1):
        c[i] += (k + 1) * binomial(k, i) * (-1) ** (k - i)
    c[k] -= 2 * (k + 1)
    c[0] += k - 1
    return ClearedPoly(IntPoly(tuple(c)), k, 2 * (k + 1))


def constant_and_linear_terms(k: int) -> tuple[int, int]:
    """(constant, linear) coefficients of the cleared polynomial, read off
    the expansion rather than recomputed from closed forms.

    The parity law (constant = 2(k-1) for even k, 0 for odd k) and the
    odd-k linear coefficient (k+1)(k-2) are asserted against these values
    by the test suite.
    """
    if k < 2:
        raise DomainError(f"defined for k >= 2, got {k}")
    coeffs = cleared_poly(k).poly.coeffs
    return coeffs[0], coeffs[1]


def quotient_poly(k: int) -> IntPoly:
    """The cleared polynomial divided by m, for odd k >= 3.

    Odd k makes the constant term vanish, so the quotient is again an
    integer polynomial; its constant term is the original linear
    coefficient (k+1)(k-2) and its leading coefficient stays 2.
    """
    if k % 2 == 0:
        raise DomainError(f"quotient by m undefined for even k (constant term 2(k-1) != 0), got {k}")
    if k < 3:
        raise DomainError(f"quotient requires odd k >= 3, got {k}")
    poly = cleared_poly(k).poly
    if poly.coeffs[0] != 0:
        raise InternalConsistencyError(f"constant term {poly.coeffs[0]} != 0 for odd k={k}")
    return IntPoly(poly.coeffs[1:])


@lru_cache(maxsize=None)
def full_eml_poly(k: int) -> ClearedPoly:
    """The exact power-sum difference as an integer polynomial.

    Expands the full Euler-Maclaurin form of sum_{i=1}^{m-1} i^k - m^k
    with rational coefficients, then multiplies by

        D = lcm(k+1, 2, (2r)! for r = 1..floor(k/2))

    which clears every denominator.  Degree k + 1, leading coefficient
    D/(k+1).  The constant term is whatever the expansion produces; it is
    not assembled from a separate closed form.  Master identity, asserted
    by the tests:  poly(m) == D * (sum_{i<m} i^k - m^k) for integer m.

    D grows factorially with k; memory is the only practical limit.
    """
    if k < 1:
        raise DomainError(f"exponent must be >= 1, got {k}")
    pmax = k // 2
    coeffs = [Fraction(0)] * (k + 2)
    # ((m-1)^{k+1} - 1)/(k+1)
    for i in range(k + 2):
        coeffs[i] += Fraction(binomial(k + 1, i) * (-1) ** (k + 1 - i), k + 1)
    coeffs[0] -= Fraction(1, k + 1)
    # (1 + (m-1)^k)/2
    coeffs[0] += Fraction(1, 2)
    for i in range(k + 1):
        coeffs[i] += Fraction(binomial(k, i) * (-1) ** (k - i), 2)
    # -m^k
    coeffs[k] -= 1
    # Bernoulli corrections
    for r in range(1, pmax + 1):
        drop = 2 * r - 1
        weight = bernoulli(2 * r) * falling_factorial(k, drop) / math.factorial(2 * r)
        e = k - drop
        for i in range(e + 1):
            coeffs[i] += weight * binomial(e, i) * (-1) ** (e - i)
        coeffs[0] -= weight
    multiplier = lcm_all([k + 1, 2] + [math.factorial(2 * r) for r in range(1, pmax + 1)])
    cleared = []
    for i, c in enumerate(coeffs):
        v = c * multiplier
        if v.denominator != 1:
            raise InternalConsistencyError(
                f"coefficient of m^{i} not cleared by D={multiplier}: {v}"
            )
        cleared.append(int(v))
    return ClearedPoly(IntPoly(tuple(cleared)), k, multiplier)
