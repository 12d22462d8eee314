"""Basis partitions: the predicate, signature, construction from a rank vector,
blocks and the Franklin-type involution, fiber counts and censuses.

A partition is a basis partition iff no column to the right of its Durfee
square has the same length as a row below it.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .errors import FixedPointError, PreconditionError, VerificationError
from .partitions import (
    Partition,
    RankVector,
    _check_limit,
    as_partition,
    conjugate,
    count_at_most_k_parts,
    decompose,
    durfee_side,
    partitions_of,
    rank_vector,
)


class Side(enum.Enum):
    RIGHT = "right"
    BOTTOM = "bottom"


_SIDE_ORDER = {Side.RIGHT: 0, Side.BOTTOM: 1}


@dataclass(frozen=True)
class Block:
    side: Side
    length: int
    multiplicity: int

    def to_json(self) -> dict:
        return {"side": self.side.value, "length": self.length, "multiplicity": self.multiplicity}


def _column_lengths(p: Partition) -> Tuple[int, Partition]:
    d = decompose(p)
    return d.side, conjugate(d.right)


def assemble(k: int, column_lengths: Iterable[int], row_lengths: Iterable[int]) -> Partition:
    """Build a partition from a k x k square, columns to its right and rows below.

    Every column length and row length must be at most k.
    """
    cols = list(column_lengths)
    rows = list(row_lengths)
    if any(not 1 <= c <= k for c in cols) or any(not 1 <= r <= k for r in rows):
        raise PreconditionError(f"lengths must lie in 1..{k}")
    top = [k + sum(1 for c in cols if c > i) for i in range(k)]
    return Partition(top + rows)


def _basis_profile(t: tuple):
    # (k, signature) for a basis partition, None otherwise; column length i
    # is present on the right iff b_i > b_(i+1) (i < k) or b_k > k
    k = 0
    for part in t:
        if part > k:
            k += 1
        else:
            break
    if k == len(t):
        return k, 0
    below = set(t[k:])
    for i in range(1, k):
        if t[i - 1] > t[i] and i in below:
            return None
    if t[k - 1] > k and k in below:
        return None
    return k, len(below)


def is_basis(p: Iterable[int]) -> bool:
    return _basis_profile(tuple(as_partition(p))) is not None


def signature(p: Iterable[int]) -> int:
    """Number of distinct part sizes below the Durfee square of a basis partition."""
    profile = _basis_profile(tuple(as_partition(p)))
    if profile is None:
        raise PreconditionError(f"{tuple(p)} is not a basis partition")
    return profile[1]


def extended_deltas(r: Sequence[int]) -> Tuple[int, ...]:
    """delta_i = r_i - r_(i+1), with r_(k+1) taken as 0."""
    r = tuple(r)
    return tuple(r[i] - (r[i + 1] if i + 1 < len(r) else 0) for i in range(len(r)))


def negative_delta_count(r: Sequence[int]) -> int:
    return sum(1 for d in extended_deltas(r) if d < 0)


def construct_basis(r: Sequence[int]) -> Partition:
    """The basis partition with successive rank vector r.

    Working from i = k down to 1, a positive delta_i inserts delta_i columns
    of length i to the right of the square and a negative one inserts
    |delta_i| rows of length i below it.
    """
    r = tuple(int(x) for x in r)
    k = len(r)
    cols: List[int] = []
    rows: List[int] = []
    deltas = extended_deltas(r)
    for i in range(k, 0, -1):
        d = deltas[i - 1]
        if d > 0:
            cols.extend([i] * d)
        elif d < 0:
            rows.extend([i] * -d)
    p = assemble(k, cols, rows)
    if rank_vector(p) != r or durfee_side(p) != k:
        raise VerificationError(f"construction for {r} produced {tuple(p)} with ranks {rank_vector(p)}")
    return p


def blocks_of(p: Iterable[int]) -> List[Block]:
    p = as_partition(p)
    k, cols = _column_lengths(p)
    blocks = [Block(Side.RIGHT, length, m) for length, m in Counter(cols).items()]
    blocks += [Block(Side.BOTTOM, length, m) for length, m in Counter(p[k:]).items()]
    blocks.sort(key=lambda blk: (-blk.length, _SIDE_ORDER[blk.side]))
    return blocks


def franklin_type(p: Iterable[int]) -> Side:
    """Side whose extreme block moves: BOTTOM for Type B, RIGHT for Type R."""
    p = as_partition(p)
    if not is_basis(p):
        raise PreconditionError(f"{tuple(p)} is not a basis partition")
    k, cols = _column_lengths(p)
    right = min(cols, default=None)
    bottom = min(p[k:], default=None)
    if right is None and bottom is None:
        raise FixedPointError(f"{tuple(p)} is a bare Durfee square")
    if bottom is not None and (right is None or bottom < right):
        return Side.BOTTOM
    return Side.RIGHT


def franklin_step(p: Iterable[int]) -> Partition:
    """Move the bottom block to the far right (Type B) or the right block to the bottom (Type R)."""
    p = as_partition(p)
    kind = franklin_type(p)
    k, cols = _column_lengths(p)
    cols = list(cols)
    rows = list(p[k:])
    if kind is Side.BOTTOM:
        length = rows[-1]
        moved = rows.count(length)
        rows = rows[: len(rows) - moved]
        cols += [length] * moved
    else:
        length = cols[-1]
        moved = cols.count(length)
        cols = cols[: len(cols) - moved]
        rows += [length] * moved
    return assemble(k, cols, rows)


@lru_cache(maxsize=None)
def _rank_vector_counts(n: int) -> Mapping[RankVector, int]:
    return MappingProxyType(Counter(rank_vector(p) for p in partitions_of(n, limit=n)))


class FiberCount(NamedTuple):
    observed: int
    predicted: int


def predicted_fiber_count(r: Sequence[int], n: int) -> int:
    """Partitions of n with rank vector r, from the basis total sigma alone."""
    sigma = construct_basis(r).total
    k = len(r)
    if n < sigma or (n - sigma) % 2:
        return 0
    return count_at_most_k_parts((n - sigma) // 2, k)


def fiber_count(r: Sequence[int], n: int, limit: Optional[int] = None) -> FiberCount:
    """Count partitions of n with rank vector r by enumeration and check the prediction."""
    _check_limit(n, limit)
    r = tuple(int(x) for x in r)
    observed = _rank_vector_counts(n).get(r, 0)
    predicted = predicted_fiber_count(r, n)
    if observed != predicted:
        raise VerificationError(f"rank vector {r}, n={n}: enumerated {observed}, predicted {predicted}")
    return FiberCount(observed, predicted)


@dataclass(frozen=True)
class BasisCensus:
    n: int
    entries: Mapping[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def by_side(self, k: int) -> int:
        return sum(c for (kk, _), c in self.entries.items() if kk == k)

    def by_signature(self, s: int) -> int:
        return sum(c for (_, ss), c in self.entries.items() if ss == s)

    def signed_total(self) -> int:
        """Even-signature count minus odd-signature count."""
        return sum(c * (-1) ** s for (_, s), c in self.entries.items())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"k": k, "s": s, "count": c} for (k, s), c in sorted(self.entries.items())],
        }


def _parts_from(total: int, allowed: Sequence[int]):
    # partitions of total into parts taken from ``allowed`` (descending)
    if total == 0:
        yield ()
        return
    for i, x in enumerate(allowed):
        if x <= total:
            for rest in _parts_from(total - x, allowed[i:]):
                yield (x,) + rest


@lru_cache(maxsize=None)
def _basis_members(n: int) -> Tuple[Tuple[tuple, Tuple[int, int]], ...]:
    """(partition, (k, signature)) for every basis partition of n.

    Enumerates the decomposition directly: a k x k square, column lengths
    right of it in 1..k, and rows below it restricted to lengths that are not
    column lengths.  Shared by the censuses.
    """
    out = []
    k = 0
    while k * k <= n:
        rest = n - k * k
        lengths = tuple(range(k, 0, -1))
        for m in range(rest + 1):
            for cols in _parts_from(m, lengths):
                used = set(cols)
                free = tuple(x for x in lengths if x not in used)
                top = tuple(k + sum(1 for c in cols if c > i) for i in range(k))
                for rows in _parts_from(rest - m, free):
                    out.append((top + rows, (k, len(set(rows)))))
        k += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _basis_census(n: int) -> BasisCensus:
    counts = Counter(profile for _, profile in _basis_members(n))
    return BasisCensus(n, MappingProxyType(dict(counts)))


def basis_census(n: int, limit: Optional[int] = None) -> BasisCensus:
    _check_limit(n, limit)
    return _basis_census(n)


def basis_partitions_of(n: int, limit: Optional[int] = None) -> List[Partition]:
    return [p for p in partitions_of(n, limit=limit) if is_basis(p)]
