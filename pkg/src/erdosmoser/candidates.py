"""Rational-root candidate enumeration for the cleared polynomials.

Any rational root p/q (lowest terms) of an integer polynomial has p
dividing the constant term and q dividing the leading coefficient.  For
even k that applies to the cleared polynomial directly (constant 2(k-1),
leading 2); for odd k the constant vanishes, m = 0 factors out, and the
theorem applies to the quotient (constant (k+1)(k-2), leading 2).

Since the equation constrains m >= 3 > 0, only positive candidates are
retained.  The complete divisor-derived set is enumerated here;
``highlighted_candidates`` gives the handful of named values analyzed case
by case.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import DEFAULT_BUDGET, DivisorBudget, divisors
from .errors import DomainError

__all__ = [
    "CASE_ORDER",
    "CandidateSet",
    "CaseKind",
    "Source",
    "candidate_roots",
    "highlighted_candidates",
]


class Source(Enum):
    """Which polynomial the divisibility constraints were read from."""

    CLEARED = "cleared"  # even k: the cleared polynomial itself
    QUOTIENT = "quotient"  # odd k: the quotient after factoring out m


class CaseKind(Enum):
    """The five named candidate-root cases, keyed by the parity of k.

    Each member knows its parity, its minimum admissible k, and the
    candidate value it designates.
    """

    EVEN_KM1 = "even k, candidate k - 1"
    EVEN_2KM1 = "even k, candidate 2(k - 1)"
    ODD_KM2 = "odd k, candidate k - 2"
    ODD_KP1 = "odd k, candidate k + 1"
    ODD_PROD = "odd k, candidate (k + 1)(k - 2)"

    @property
    def even_k(self) -> bool:
        return self in (CaseKind.EVEN_KM1, CaseKind.EVEN_2KM1)

    @property
    def min_k(self) -> int:
        return _MIN_K[self]

    def accepts(self, k: int) -> bool:
        """True iff k has this case's parity and meets its minimum."""
        return k % 2 == (0 if self.even_k else 1) and k >= self.min_k

    def require(self, k: int) -> None:
        if not self.accepts(k):
            raise DomainError(
                f"{self.name} requires {'even' if self.even_k else 'odd'} "
                f"k >= {self.min_k}, got {k}"
            )

    def candidate(self, k: int) -> int:
        """The integer candidate value this case designates for k."""
        self.require(k)
        return _CANDIDATE[self](k)


_MIN_K = {
    CaseKind.EVEN_KM1: 4,
    CaseKind.EVEN_2KM1: 4,
    CaseKind.ODD_KM2: 5,  # k = 3 would put the candidate below 3
    CaseKind.ODD_KP1: 3,
    CaseKind.ODD_PROD: 3,
}

_CANDIDATE = {
    CaseKind.EVEN_KM1: lambda k: k - 1,
    CaseKind.EVEN_2KM1: lambda k: 2 * (k - 1),
    CaseKind.ODD_KM2: lambda k: k - 2,
    CaseKind.ODD_KP1: lambda k: k + 1,
    CaseKind.ODD_PROD: lambda k: (k + 1) * (k - 2),
}

#: Declaration order of the cases; used for canonical report sorting.
CASE_ORDER = {case: i for i, case in enumerate(CaseKind)}


@dataclass(frozen=True)
class CandidateSet:
    """All positive rational-root candidates for one exponent k.

    ``integer_candidates_ge3`` is the subset of integers >= 3 (the
    equation constrains m >= 3).  For odd k the factored-out root m = 0 is
    recorded in ``factored_root_zero`` and never tested against that
    constraint.
    """

    k: int
    source: Source
    all_candidates: tuple[Fraction, ...]
    integer_candidates_ge3: tuple[int, ...]
    factored_root_zero: bool


def candidate_roots(k: int, budget: DivisorBudget = DEFAULT_BUDGET) -> CandidateSet:
    """Every positive p/q allowed by the divisibility constraints.

    The set is the divisors d of the relevant constant term together with
    their halves d/2, deduplicated and normalized (leading coefficient 2
    allows denominator 1 or 2).  This is deliberately the complete set,
    not only the named values: exact evaluation over all of it is cheap
    and strictly stronger than spot checks.
    """
    if k < 2:
        raise DomainError(f"candidate enumeration requires k >= 2, got {k}")
    if k % 2 == 0:
        constant = 2 * (k - 1)
        source = Source.CLEARED
        zero_root = False
    else:
        constant = (k + 1) * (k - 2)
        source = Source.QUOTIENT
        zero_root = True
    divs = divisors(constant, budget)
    cands = sorted({Fraction(d) for d in divs} | {Fraction(d, 2) for d in divs})
    ints = tuple(int(c) for c in cands if c.denominator == 1 and c >= 3)
    return CandidateSet(k, source, tuple(cands), ints, zero_root)


def highlighted_candidates(k: int) -> list[tuple[CaseKind, int]]:
    """The named integer candidates whose minimum-k guards admit k.

    Even k >= 4 yields k-1 and 2(k-1); odd k >= 5 yields k-2; odd k >= 3
    yields k+1 and (k+1)(k-2).  Values below 3 are dropped.  A k too small
    for every case (even k < 4, odd k < 3) gives an empty list.  At k = 3
    the two odd cases coincide at the same value, 4; both are reported.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    out: list[tuple[CaseKind, int]] = []
    for case in CaseKind:
        if case.accepts(k):
            value = case.candidate(k)
            if value >= 3:
                out.append((case, value))
    return out
