"""Partitions as value objects, Ferrers-graph quantities and enumeration.

A partition is stored as a non-increasing tuple of positive integers.  The
Durfee decomposition splits the Ferrers graph into the k x k Durfee square,
the part to its right (kept as the partition of row remainders) and the part
below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .errors import EnumerationLimitError, PreconditionError

DEFAULT_LIMIT = 120

RankVector = tuple  # tuple[int, ...]; ranks r_1..r_k


class Partition(tuple):
    """Non-increasing tuple of positive integers.

    Input is normalized: zeros are dropped and the parts are sorted, so
    ``Partition([1, 3, 0])`` is ``(3, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        vals = []
        for x in parts:
            x = int(x)
            if x < 0:
                raise PreconditionError(f"negative part {x}")
            if x:
                vals.append(x)
        vals.sort(reverse=True)
        return tuple.__new__(cls, vals)

    @classmethod
    def _trusted(cls, parts: tuple) -> "Partition":
        # caller guarantees parts are already canonical
        return tuple.__new__(cls, parts)

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def count(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def to_json(self) -> list:
        return list(self)


def as_partition(p: Iterable[int]) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


@dataclass(frozen=True)
class DurfeeDecomposition:
    side: int
    right: Partition
    below: Partition

    def reassemble(self) -> Partition:
        k = self.side
        rows = [k + (self.right[i] if i < len(self.right) else 0) for i in range(k)]
        return Partition._trusted(tuple(rows) + tuple(self.below))

    def to_json(self) -> dict:
        return {"side": self.side, "right": list(self.right), "below": list(self.below)}


def conjugate(p: Iterable[int]) -> Partition:
    p = as_partition(p)
    if not p:
        return Partition._trusted(())
    cols = []
    i = len(p)
    for j in range(1, p[0] + 1):
        while p[i - 1] < j:
            i -= 1
        cols.append(i)
    return Partition._trusted(tuple(cols))


def durfee_side(p: Iterable[int]) -> int:
    k = 0
    for part in p:
        if part >= k + 1:
            k += 1
        else:
            break
    return k


def decompose(p: Iterable[int]) -> DurfeeDecomposition:
    p = as_partition(p)
    k = durfee_side(p)
    right = tuple(x - k for x in p[:k] if x > k)
    return DurfeeDecomposition(k, Partition._trusted(right), Partition._trusted(tuple(p[k:])))


def rank_vector(p: Iterable[int]) -> RankVector:
    """Successive ranks b_i - c_i for i up to the Durfee side."""
    p = as_partition(p)
    k = durfee_side(p)
    c = conjugate(p)
    return tuple(p[i] - c[i] for i in range(k))


def is_primary(p: Iterable[int]) -> bool:
    """Nothing below the Durfee square.  The empty partition counts as primary."""
    p = as_partition(p)
    return len(p) == durfee_side(p)


def hook_sums(p: Iterable[int], strict: bool = False) -> Partition:
    """Hook lengths along the Durfee diagonal, b_i + c_i - 2i + 1.

    With ``strict=True`` only primary partitions are accepted; that is the
    domain on which the hook map is a bijection onto Rogers-Ramanujan
    partitions.
    """
    p = as_partition(p)
    if strict and not is_primary(p):
        raise PreconditionError(f"{tuple(p)} is not primary")
    k = durfee_side(p)
    c = conjugate(p)
    return Partition._trusted(tuple(p[i] + c[i] - 2 * i - 1 for i in range(k)))


def _check_limit(n: int, limit: Optional[int]) -> None:
    limit = DEFAULT_LIMIT if limit is None else limit
    if n > limit:
        raise EnumerationLimitError(n, limit)


def _all_partitions(n: int) -> Iterator[tuple]:
    # reverse-lexicographic successor: strip trailing ones, decrement the
    # last part > 1 and refill greedily
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        x = a.pop() - 1
        rem = ones + 1
        a.append(x)
        while rem > x:
            a.append(x)
            rem -= x
        if rem:
            a.append(rem)


def _constrained(n, max_part, max_count, min_part, min_gap, distinct_odd):
    out = []

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield tuple(out)
            return
        if slots == 0:
            return
        top = min(cap, remaining)
        for x in range(top, min_part - 1, -1):
            rest = remaining - x
            if rest and rest < min_part:
                continue
            if max_count is not None and x * slots < remaining:
                break
            if min_gap:
                nxt = x - min_gap
            elif distinct_odd and x % 2:
                nxt = x - 1
            else:
                nxt = x
            if rest and nxt < min_part:
                continue
            out.append(x)
            yield from rec(rest, nxt, slots - 1)
            out.pop()

    slots = n if max_count is None else max_count
    cap = n if max_part is None else max_part
    yield from rec(n, cap, slots)


def partitions_of(
    n: int,
    *,
    max_part: Optional[int] = None,
    max_count: Optional[int] = None,
    min_part: int = 1,
    distinct: bool = False,
    distinct_odd: bool = False,
    min_gap: int = 0,
    predicate: Optional[Callable[[Partition], bool]] = None,
    limit: Optional[int] = None,
) -> Iterator[Partition]:
    """Yield the partitions of ``n`` meeting the constraints, reverse-lex order.

    ``min_gap`` bounds consecutive differences from below (``distinct`` is
    ``min_gap=1``); ``distinct_odd`` forbids repeated odd parts.  A
    ``predicate`` filters after the structural constraints.
    """
    if n < 0:
        raise PreconditionError("n must be non-negative")
    _check_limit(n, limit)
    if distinct:
        min_gap = max(min_gap, 1)
    if max_part is None and max_count is None and min_part <= 1 and not min_gap and not distinct_odd:
        source = _all_partitions(n)
    else:
        source = _constrained(n, max_part, max_count, max(min_part, 1), min_gap, distinct_odd)
    for t in source:
        p = Partition._trusted(t)
        if predicate is None or predicate(p):
            yield p


def count_at_most_k_parts(m: int, k: int) -> int:
    """Number of partitions of m into at most k parts (by dynamic programming)."""
    if m < 0 or k < 0:
        return 0
    # parts of size <= k, by conjugation
    ways = [1] + [0] * m
    for size in range(1, k + 1):
        for total in range(size, m + 1):
            ways[total] += ways[total - size]
    return ways[m]


def ferrers_diagram(p: Iterable[int], node: str = "*") -> str:
    """ASCII Ferrers graph; the Durfee square is set off by a blank margin."""
    p = as_partition(p)
    k = durfee_side(p)
    lines = []
    for i, part in enumerate(p):
        if i == k and k:
            lines.append("")
        if i < k:
            lines.append(node * k + (" " + node * (part - k) if part > k else ""))
        else:
            lines.append(node * part)
    return "\n".join(lines)
