"""Primary partitions, the hook bijection with Rogers-Ramanujan partitions,
sliding, and the weighted counts built on them.

A primary partition has nothing below its Durfee square.  Sliding moves all
columns of one length from the right of the square to rows below it; sliding
every subset of the distinct column lengths of a primary partition produces
each basis partition exactly once.
"""

from __future__ import annotations

import enum
from collections import Counter
from math import comb
from typing import Iterable, List, Optional

from .basis import assemble, basis_census, is_basis
from .errors import PreconditionError, SlideError, VerificationError
from .partitions import (
    Partition,
    _check_limit,
    as_partition,
    conjugate,
    decompose,
    durfee_side,
    hook_sums,
    is_primary,
    partitions_of,
)
from .qseries.formulas import signature_gf
from .qseries.poly import ONE, ParamPolynomial, z

__all__ = [
    "Weight",
    "is_primary",
    "primary_to_rr",
    "rr_to_primary",
    "is_rogers_ramanujan",
    "slide_all",
    "spawn_basis",
    "t_primary",
    "t_rr",
    "primaries_of",
    "rr_partitions_of",
    "weighted_census",
    "signature_fiber",
    "basis_by_spawning",
]


class Weight(str, enum.Enum):
    TWO_POW_T = "two_pow_t"
    ONE_PLUS_Z_POW_T = "one_plus_z_pow_t"
    BINOM_T_CHOOSE_J = "binom_t_choose_j"


def is_rogers_ramanujan(q: Iterable[int]) -> bool:
    q = as_partition(q)
    return all(x - y >= 2 for x, y in zip(q, q[1:]))


def primary_to_rr(p: Iterable[int]) -> Partition:
    """Hook sums of a primary partition; parts differ by at least 2."""
    return hook_sums(p, strict=True)


def rr_to_primary(q: Iterable[int]) -> Partition:
    """Inverse of the hook map: with k parts, b_i = q_i - k + 2i - 1."""
    q = as_partition(q)
    if not is_rogers_ramanujan(q):
        raise PreconditionError(f"{tuple(q)} has parts differing by less than 2")
    k = len(q)
    return Partition._trusted(tuple(x - k + 2 * i + 1 for i, x in enumerate(q)))


def _column_lengths(p: Partition) -> Partition:
    return conjugate(decompose(p).right)


def slide_all(p: Iterable[int], ell: int) -> Partition:
    """Move every column of length ``ell`` right of the Durfee square to rows below it."""
    p = as_partition(p)
    d = decompose(p)
    cols = list(conjugate(d.right))
    if ell not in cols:
        raise SlideError(f"{tuple(p)} has no column of length {ell} right of its Durfee square", "no-such-column")
    if ell in d.below:
        raise SlideError(f"{tuple(p)} already has a row of length {ell} below its Durfee square", "would-collide")
    if not is_basis(p):
        raise PreconditionError(f"{tuple(p)} is not a basis partition")
    moved = cols.count(ell)
    kept = [c for c in cols if c != ell]
    out = assemble(d.side, kept, list(d.below) + [ell] * moved)
    if out.total != p.total or durfee_side(out) != d.side or hook_sums(out) != hook_sums(p):
        raise VerificationError(f"sliding {ell} in {tuple(p)} changed an invariant")
    return out


def spawn_basis(p: Iterable[int]) -> List[Partition]:
    """All 2^t basis partitions obtained from a primary by sliding subsets of column lengths.

    Subset s (as a bit mask over the ascending distinct lengths) gives entry s.
    """
    p = as_partition(p)
    if not is_primary(p):
        raise PreconditionError(f"{tuple(p)} is not primary")
    lengths = sorted(set(_column_lengths(p)))
    out = []
    for mask in range(1 << len(lengths)):
        q = p
        for bit, ell in enumerate(lengths):
            if mask >> bit & 1:
                q = slide_all(q, ell)
        out.append(q)
    return out


def t_primary(p: Iterable[int]) -> int:
    """Distinct column lengths right of the Durfee square of a primary partition."""
    p = as_partition(p)
    if not is_primary(p):
        raise PreconditionError(f"{tuple(p)} is not primary")
    return len(set(_column_lengths(p)))


def t_rr(q: Iterable[int]) -> int:
    """Strict inequalities among b_i - b_(i+1) >= 2 and b_k >= 1."""
    q = as_partition(q)
    if not q:
        return 0
    return sum(1 for x, y in zip(q, q[1:]) if x - y > 2) + (q[-1] > 1)


def primaries_of(n: int, k: int, limit: Optional[int] = None) -> List[Partition]:
    """Primary partitions of n with Durfee side k: exactly k parts, each at least k."""
    if k == 0:
        return [Partition()] if n == 0 else []
    return [p for p in partitions_of(n, max_count=k, min_part=k, limit=limit) if len(p) == k]


def rr_partitions_of(n: int, k: int, limit: Optional[int] = None) -> List[Partition]:
    """Partitions of n into exactly k parts with consecutive differences at least 2."""
    if k == 0:
        return [Partition()] if n == 0 else []
    return [q for q in partitions_of(n, max_count=k, min_gap=2, limit=limit) if len(q) == k]


def _weight(t: int, weight: Weight, j: Optional[int]) -> ParamPolynomial:
    if weight is Weight.TWO_POW_T:
        return ParamPolynomial.const(2 ** t)
    if weight is Weight.ONE_PLUS_Z_POW_T:
        return (ONE + z) ** t
    return ParamPolynomial.const(comb(t, j))


def weighted_census(
    n: int, k: int, weight, j: Optional[int] = None, limit: Optional[int] = None
) -> ParamPolynomial:
    """Sum of 2^t, (1+z)^t or C(t, j) over Rogers-Ramanujan partitions of n into k parts.

    The same sum is taken over primary partitions of n with Durfee side k;
    each pair is matched through the hook map and t is compared on both sides.
    """
    _check_limit(n, limit)
    weight = Weight(weight)
    if weight is Weight.BINOM_T_CHOOSE_J and (j is None or j < 0):
        raise PreconditionError("binom_t_choose_j needs a non-negative j")
    rr_total = ParamPolynomial.const(0)
    for q in rr_partitions_of(n, k, limit=limit):
        rr_total = rr_total + _weight(t_rr(q), weight, j)
    primary_total = ParamPolynomial.const(0)
    for p in primaries_of(n, k, limit=limit):
        q = primary_to_rr(p)
        t = t_primary(p)
        if t != t_rr(q):
            raise VerificationError(f"t differs across the hook map: {tuple(p)} -> {tuple(q)}")
        primary_total = primary_total + _weight(t, weight, j)
    if rr_total != primary_total:
        raise VerificationError(f"n={n}, k={k}: RR tally {rr_total} but primary tally {primary_total}")
    return rr_total


_SIGNATURE_SERIES = {"order": -1, "series": None}


def _signature_coefficient(n: int, j: int) -> int:
    cache = _SIGNATURE_SERIES
    if n > cache["order"]:
        order = max(n, 2 * cache["order"], 40)
        cache["series"] = signature_gf(order)
        cache["order"] = order
    return cache["series"].coefficient(n).coefficient(z=j)


def _count_by_total(parts_iter_factory, n: int) -> List[int]:
    counts = [0] * (n + 1)
    for m in range(n + 1):
        counts[m] = sum(1 for _ in parts_iter_factory(m))
    return counts


def signature_fiber(n: int, j: int, limit: Optional[int] = None) -> int:
    """Basis partitions of n with signature j, counted three independent ways.

    (a) the census; (b) pairs (pi_3, pi_2) where pi_3 has exactly j parts
    with gaps >= 3 and least part >= 2, and pi_2 has gaps >= 2 and least part
    >= 2j+1; (c) the z^j q^n coefficient of sum_k q^(k^2) (-zq;q)_k / (q;q)_k.
    """
    _check_limit(n, limit)
    if j < 0:
        raise PreconditionError("signature must be non-negative")
    census = basis_census(n, limit=limit).by_signature(j)

    def threes(m):
        if j == 0:
            return iter([()] if m == 0 else [])
        return (x for x in partitions_of(m, max_count=j, min_gap=3, min_part=2, limit=limit) if len(x) == j)

    def twos(m):
        return partitions_of(m, min_gap=2, min_part=2 * j + 1, limit=limit)

    a3 = _count_by_total(threes, n)
    a2 = _count_by_total(twos, n)
    pairs = sum(a3[m] * a2[n - m] for m in range(n + 1))
    series = _signature_coefficient(n, j)
    if not census == pairs == series:
        raise VerificationError(f"B({n};{j}): census {census}, pairs {pairs}, series {series}")
    return census


def basis_by_spawning(n: int, limit: Optional[int] = None) -> Counter:
    """Multiset of basis partitions of n reached by spawning from every primary."""
    _check_limit(n, limit)
    seen: Counter = Counter()
    for k in range(n + 1):
        if k * k > n:
            break
        for p in primaries_of(n, k, limit=limit):
            seen.update(spawn_basis(p))
    return seen
