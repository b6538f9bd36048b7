"""Brute-force exact verification of the power-sum equation over finite
(k, m) ranges.

A hit means literal equality of big integers.  For each k the running sum
is carried incrementally (one addition per m), keeping a full sweep linear
in the number of grid points instead of quadratic.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import DomainError, InternalConsistencyError
from .powersum import PowerSumQuery, sum_direct

__all__ = ["SearchHit", "check_pair", "find_solutions"]


@dataclass(frozen=True, order=True)
class SearchHit:
    """A pair (k, m) with 1^k + 2^k + ... + (m-1)^k = m^k exactly."""

    k: int
    m: int


def check_pair(k: int, m: int) -> bool:
    """Exact test of a single (k, m) pair."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if m < 3:
        raise DomainError(f"m must be >= 3, got {m}")
    return sum_direct(PowerSumQuery(m - 1, k)) == m**k


def find_solutions(
    k_range: tuple[int, int], m_range: tuple[int, int], shards: int = 1
) -> list[SearchHit]:
    """All hits with k and m in the given inclusive ranges, (k, m) sorted.

    Work is sharded by k -- each k keeps its own incremental sum -- and
    the merged result is sorted, so the output is identical for any shard
    count.  The running difference turning back non-positive after having
    been positive would contradict the single-crossing picture and raises
    :class:`InternalConsistencyError` rather than being ignored.
    """
    k_lo, k_hi = k_range
    m_lo, m_hi = m_range
    if k_lo < 1 or k_hi < k_lo:
        raise DomainError(f"invalid k range [{k_lo}, {k_hi}]")
    if m_lo < 3 or m_hi < m_lo:
        raise DomainError(f"invalid m range [{m_lo}, {m_hi}]")
    if shards < 1:
        raise DomainError(f"shard count must be >= 1, got {shards}")
    ks = range(k_lo, k_hi + 1)
    if shards == 1:
        shard_hits = [_scan_one_k(k, m_lo, m_hi) for k in ks]
    else:
        with ThreadPoolExecutor(max_workers=shards) as pool:
            shard_hits = list(pool.map(lambda k: _scan_one_k(k, m_lo, m_hi), ks))
    return sorted(hit for hits in shard_hits for hit in hits)


def _scan_one_k(k: int, m_lo: int, m_hi: int) -> list[SearchHit]:
    hits = []
    running = sum_direct(PowerSumQuery(m_lo - 1, k))
    turned_positive = False
    for m in range(m_lo, m_hi + 1):
        power = m**k
        diff = running - power
        if diff == 0:
            hits.append(SearchHit(k, m))
        if diff > 0:
            turned_positive = True
        elif turned_positive:
            raise InternalConsistencyError(
                f"difference returned to {diff} at k={k}, m={m} after turning positive"
            )
        running += power
    return hits
