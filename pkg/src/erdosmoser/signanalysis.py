"""Exact sign evaluation at candidate roots, the per-case dominance
ratios with their limits, and the large-m sign-crossing analysis.

Signs come from exact integer evaluation of the cleared polynomial, never
from floats.  The dominance ratio |negative term group| / (positive term
group) explains WHY a sign holds at a candidate: above 1 the lone negative
term wins, below 1 the positive group does.  Ratios are exact rationals up
to a cutoff and log-space floats beyond it, where only limits matter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .candidates import CASE_ORDER, CaseKind, candidate_roots, highlighted_candidates
from .errors import DomainError, InternalConsistencyError
from .polyform import cleared_poly, eval_poly, full_eml_poly

__all__ = [
    "EXACT_CUTOFF_DEFAULT",
    "FULL_SET",
    "RatioPoint",
    "RatioSeries",
    "Sign",
    "SignReport",
    "asymptotic_value",
    "dominance_limit",
    "dominance_ratio",
    "dominance_series",
    "sign_at",
    "sign_summary",
    "sign_threshold",
]

#: Marker for sign reports coming from the full enumerated divisor set
#: rather than one of the named cases.
FULL_SET = None

#: Largest k for which dominance ratios are computed as exact rationals by
#: default; the powers involved stay near k*log2(k) bits, which is cheap.
EXACT_CUTOFF_DEFAULT = 200


class Sign(Enum):
    NEG = -1
    ZERO = 0
    POS = 1

    @classmethod
    def of(cls, value) -> "Sign":
        if value > 0:
            return cls.POS
        if value < 0:
            return cls.NEG
        return cls.ZERO


@dataclass(frozen=True)
class SignReport:
    """Exact value and sign of the cleared polynomial at one candidate.

    A ZERO sign would exhibit a rational root of the cleared polynomial --
    an extraordinary finding that callers must surface loudly, never
    swallow.
    """

    k: int
    m0: int
    case: Optional[CaseKind]  # FULL_SET (None) = from the enumerated divisor set
    value: int
    sign: Sign


@dataclass(frozen=True)
class RatioPoint:
    """Dominance ratio at one (case, k), exact when cheap enough."""

    k: int
    case: CaseKind
    exact: Optional[Fraction]  # present when k <= the exact cutoff
    value: float
    limit: float


@dataclass(frozen=True)
class RatioSeries:
    """Sampled ratio values plus a monotonicity verdict.

    ``decreasing_from_start`` covers only the sampled points with
    k >= monotone_start (each case's analysis begins there); it is
    trivially true when fewer than two such points were sampled.
    """

    points: tuple[RatioPoint, ...]
    monotone_start: int
    decreasing_from_start: bool


def sign_at(k: int, m0: int, case: Optional[CaseKind] = FULL_SET) -> SignReport:
    """Evaluate the cleared polynomial at integer m0 and classify the sign."""
    if k < 2:
        raise DomainError(f"sign analysis requires k >= 2, got {k}")
    if m0 < 3:
        raise DomainError(f"candidates are constrained to m0 >= 3, got {m0}")
    value = eval_poly(cleared_poly(k).poly, m0)
    return SignReport(k, m0, case, value, Sign.of(value))


def sign_summary(k_max: int) -> list[SignReport]:
    """Sign reports for every named candidate and every enumerated integer
    candidate with k <= k_max, in canonical (k, case, m0) order.

    ZERO entries are data, not errors; callers decide how loudly to react.
    Per-k evaluations are independent (parallelizable by k); the final
    sort restores the canonical order regardless of evaluation order.
    """
    if k_max < 3:
        raise DomainError(f"k_max must be >= 3, got {k_max}")
    reports = []
    for k in range(2, k_max + 1):
        for case, m0 in highlighted_candidates(k):
            reports.append(sign_at(k, m0, case))
        for m0 in candidate_roots(k).integer_candidates_ge3:
            reports.append(sign_at(k, m0, FULL_SET))
    reports.sort(key=_report_key)
    return reports


def _report_key(r: SignReport):
    case_rank = -1 if r.case is None else CASE_ORDER[r.case]
    return (r.k, r.case is None, case_rank, r.m0)


def _ratio_parts(case: CaseKind, k: int) -> tuple[Fraction, Fraction]:
    """(prefactor, base) with ratio = prefactor * base**k."""
    if case is CaseKind.EVEN_KM1:
        return Fraction(2 * (k + 1), 3 * (k - 1)), Fraction(k - 1, k - 2)
    if case is CaseKind.EVEN_2KM1:
        return Fraction(2 * (k + 1), 5 * (k - 1)), Fraction(2 * (k - 1), 2 * k - 3)
    if case is CaseKind.ODD_KM2:
        return Fraction(2 * (k + 1), 3 * k - 5), Fraction(k - 2, k - 3)
    if case is CaseKind.ODD_KP1:
        return Fraction(2 * (k + 1), 3 * k + 1), Fraction(k + 1, k)
    return (
        Fraction(2 * (k + 1), 2 * k * k - k - 5),
        Fraction((k + 1) * (k - 2), k * k - k - 3),
    )


def dominance_ratio(
    k: int, case: CaseKind, exact_cutoff: int = EXACT_CUTOFF_DEFAULT
) -> RatioPoint:
    """|negative term group| / positive term group at the case's candidate.

    Exact rational for k <= exact_cutoff, with the float column derived
    from it; log-space float beyond the cutoff (log1p keeps the base
    accurate when it is 1 + tiny).
    """
    case.require(k)
    pref, base = _ratio_parts(case, k)
    if k <= exact_cutoff:
        exact: Optional[Fraction] = pref * base**k
        value = float(exact)
    else:
        exact = None
        value = math.exp(math.log(float(pref)) + k * math.log1p(float(base - 1)))
    return RatioPoint(k, case, exact, value, dominance_limit(case))


_TWO_E_THIRDS = 2.0 * math.e / 3.0
_TWO_SQRT_E_FIFTHS = 2.0 * math.sqrt(math.e) / 5.0


def dominance_limit(case: CaseKind) -> float:
    """Large-k limit of the dominance ratio: 2e/3, 2*sqrt(e)/5, or 0."""
    if case is CaseKind.EVEN_2KM1:
        return _TWO_SQRT_E_FIFTHS
    if case is CaseKind.ODD_PROD:
        return 0.0
    return _TWO_E_THIRDS


#: k at which each case's monotone-decrease claim starts.
_MONOTONE_START = {
    CaseKind.EVEN_KM1: 4,
    CaseKind.EVEN_2KM1: 8,
    CaseKind.ODD_KM2: 5,
    CaseKind.ODD_KP1: 3,
    CaseKind.ODD_PROD: 5,
}


def dominance_series(
    case: CaseKind,
    k_from: int,
    k_to: int,
    step: int = 2,
    exact_cutoff: int = EXACT_CUTOFF_DEFAULT,
) -> RatioSeries:
    """Ratio values over k = k_from, k_from + step, ..., <= k_to.

    The step must be even so the sampled k keep the case's parity.  The
    strict-decrease verdict is evaluated over the sampled grid only,
    starting at the case's monotone-start index; it is a statement about
    the samples, not a symbolic proof.
    """
    case.require(k_from)
    if step < 2 or step % 2 != 0:
        raise DomainError(f"step must be a positive even number, got {step}")
    if k_to < k_from:
        raise DomainError(f"empty range [{k_from}, {k_to}]")
    points = tuple(
        dominance_ratio(k, case, exact_cutoff) for k in range(k_from, k_to + 1, step)
    )
    start = _MONOTONE_START[case]
    tail = [p for p in points if p.k >= start]
    decreasing = all(_strictly_less(nxt, prev) for prev, nxt in zip(tail, tail[1:]))
    return RatioSeries(points, start, decreasing)


def _strictly_less(b: RatioPoint, a: RatioPoint) -> bool:
    if a.exact is not None and b.exact is not None:
        return b.exact < a.exact
    return b.value < a.value


def asymptotic_value(m: int, k: int) -> Fraction:
    """The factored large-m form m^k (m/(k+1) - 3/2 + 1/(2m)), exactly.

    Predicts a sign change near m = 3(k+1)/2.  The form drops the
    Bernoulli corrections, which enter at order m^{k-1}; near the crossing
    it is therefore a heuristic, and far from it (m >= 2(k+1), say) its
    sign agrees with the exact polynomial.
    """
    if m < 3:
        raise DomainError(f"m must be >= 3, got {m}")
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    return m**k * (Fraction(m, k + 1) - Fraction(3, 2) + Fraction(1, 2 * m))


def sign_threshold(k: int) -> tuple[Fraction, int]:
    """(predicted crossing 3(k+1)/2, first integer m >= 3 where the exact
    full-expansion polynomial turns positive).

    Scans upward in exact arithmetic, so every m below the returned
    crossing was observed <= 0.  k = 1 is admitted for completeness: the
    scan passes the exact zero at m = 3 (the known solution) and reports
    the first strictly positive point, m = 4.  No crossing below the scan
    bound 4(k+2) would contradict the crossing analysis and raises
    :class:`InternalConsistencyError`.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    predicted = Fraction(3 * (k + 1), 2)
    poly = full_eml_poly(k).poly
    bound = 4 * (k + 2)
    for m in range(3, bound + 1):
        if eval_poly(poly, m) > 0:
            return predicted, m
    raise InternalConsistencyError(f"no sign crossing for k={k} scanning m <= {bound}")
