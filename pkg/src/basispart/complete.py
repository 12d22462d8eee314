"""Complete basis partitions: every length 1..k-1 appears as a column right of
the Durfee square or a row below it.

Counts are compared with partitions into parts differing by at least 3,
weighted by 2^(nu-1) when 1 is a part and 2^nu otherwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import List, Mapping, Optional, Tuple

from .basis import _basis_members, _basis_profile
from .errors import PreconditionError, VerificationError
from .partitions import _check_limit, as_partition, conjugate, decompose, partitions_of, rank_vector
from .qseries.formulas import complete_gf

__all__ = [
    "is_complete",
    "CompleteCensus",
    "complete_census",
    "d3_weighted_sum",
    "two_adic_valuation",
    "power_of_two_profile",
]


def is_complete(p) -> bool:
    """Check the length criterion and the rank criterion r_j != r_(j+1); they must agree."""
    p = as_partition(p)
    profile = _basis_profile(tuple(p))
    if profile is None:
        raise PreconditionError(f"{tuple(p)} is not a basis partition")
    d = decompose(p)
    present = set(conjugate(d.right)) | set(d.below)
    by_length = all(j in present for j in range(1, d.side))
    r = rank_vector(p)
    by_ranks = all(r[j] != r[j + 1] for j in range(d.side - 1))
    if by_length != by_ranks:
        raise VerificationError(f"criteria disagree on {tuple(p)}")
    return by_length


def _complete_fast(t: tuple, k: int) -> bool:
    # lengths present: right column length i iff b_i > b_(i+1) (i < k), below rows
    present = set(t[k:])
    present.update(i for i in range(1, k) if t[i - 1] > t[i])
    return all(j in present for j in range(1, k))


@dataclass(frozen=True)
class CompleteCensus:
    n: int
    by_signature: Mapping[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.by_signature.values())

    def signed_total(self) -> int:
        return sum(c * (-1) ** s for s, c in self.by_signature.items())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "by_signature": [{"s": s, "count": c} for s, c in sorted(self.by_signature.items())],
        }


@lru_cache(maxsize=None)
def _complete_census(n: int) -> CompleteCensus:
    counts: Counter = Counter()
    for p, (k, s) in _basis_members(n):
        if _complete_fast(p, k):
            counts[s] += 1
    return CompleteCensus(n, MappingProxyType(dict(counts)))


def complete_census(n: int, limit: Optional[int] = None) -> CompleteCensus:
    _check_limit(n, limit)
    return _complete_census(n)


def d3_weighted_sum(n: int, limit: Optional[int] = None, check: bool = True) -> int:
    """Sum over partitions of n with gaps >= 3 of 2^(nu-1) if 1 is a part, else 2^nu.

    With ``check`` the result is compared with the complete-basis census.
    """
    _check_limit(n, limit)
    total = 0
    for p in partitions_of(n, min_gap=3, limit=limit):
        nu = len(p)
        total += 2 ** (nu - 1) if p and p[-1] == 1 else 2 ** nu
    if check:
        census = complete_census(n, limit=limit).total
        if census != total:
            raise VerificationError(f"n={n}: weighted sum {total}, complete census {census}")
    return total


def two_adic_valuation(m: int) -> Optional[int]:
    if m == 0:
        return None
    v = 0
    while m % 2 == 0:
        m //= 2
        v += 1
    return v


def power_of_two_profile(n_max: int, source: str = "series", limit: Optional[int] = None) -> List[Tuple[int, int]]:
    """(n, v) with 2^v the largest power of two dividing the complete-basis count.

    ``source`` is "series" (the corrected generating function) or "census".
    Valuations of at least 2 are required for 5 <= n <= n_max.
    """
    _check_limit(n_max, limit)
    if source == "series":
        counts = complete_gf(n_max).integer_coefficients()
    elif source == "census":
        counts = [complete_census(n, limit=limit).total for n in range(n_max + 1)]
    else:
        raise PreconditionError(f"unknown source {source!r}")
    out = [(n, two_adic_valuation(c)) for n, c in enumerate(counts)]
    for n, v in out:
        if n >= 5 and (v is None or v < 2):
            raise VerificationError(f"count at n={n} is {counts[n]}, not a multiple of 4")
    return out
