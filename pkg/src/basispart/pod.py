"""Partitions with non-repeating odd parts through their 2-modular graphs.

In the 2-modular graph a part b is a row of ceil(b/2) nodes, all 2 except a
trailing 1 when b is odd.  Length counts nodes and size sums them.  Column j
has size 2 * #{rows of length >= j} minus 1 when 2j-1 is a part.  Ranks are
row size minus column size along the Durfee square.

Basis partitions (here) have no row below the square equal in size to a
column right of it.  Each basis partition is described by its class vector:
for every length j, E_j is the signed number of 2j's (+ for columns on the
right, - for rows below) and O_j in {-1, 0, 1} records the single 2j-1.
Then r_i - r_(i+1) = 2 E_i + O_i + O_(i+1), which is what the spawning
operations below manipulate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import PreconditionError, VerificationError
from .partitions import Partition, _check_limit, partitions_of
from .qseries.poly import ParamPolynomial, b as b_var

__all__ = [
    "PodPartition",
    "is_pod",
    "as_pod",
    "TwoModularGraph",
    "pod_durfee_side",
    "column_sizes",
    "pod_rank_vector",
    "right_column_sizes",
    "below_sizes",
    "is_pod_basis",
    "is_minimal_basis",
    "construct_minimal",
    "construct_minimal_steps",
    "ClassVector",
    "class_vector",
    "allowable_hooks",
    "spawn_from_minimal",
    "proviso_hooks",
    "pod_hook_sums",
    "is_pod_primary",
    "is_special",
    "special_hook_map",
    "special_to_primary",
    "slidable_classes",
    "pod_spawn_basis",
    "literal_gap_count",
    "corrected_gap_count",
    "psi",
    "ell_signature",
    "odd_part_count",
    "PodCensus",
    "pod_census",
]


def is_pod(p: Iterable[int]) -> bool:
    odd = [x for x in p if x % 2]
    return len(odd) == len(set(odd))


class PodPartition(Partition):
    """Partition whose odd parts are pairwise distinct."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        p = Partition.__new__(cls, parts)
        if not is_pod(p):
            raise PreconditionError(f"{tuple(p)} repeats an odd part")
        return p

    def __repr__(self):
        return f"PodPartition({tuple(self)!r})"


def as_pod(p: Iterable[int]) -> PodPartition:
    return p if isinstance(p, PodPartition) else PodPartition(p)


def _lengths(p: Sequence[int]) -> List[int]:
    return [(x + 1) // 2 for x in p]


def pod_durfee_side(p: Iterable[int]) -> int:
    k = 0
    for length in _lengths(tuple(p)):
        if length >= k + 1:
            k += 1
        else:
            break
    return k


def column_sizes(p: Iterable[int]) -> Tuple[int, ...]:
    p = tuple(p)
    lengths = _lengths(p)
    parts = set(p)
    out = []
    i = len(lengths)
    for j in range(1, (lengths[0] if lengths else 0) + 1):
        while lengths[i - 1] < j:
            i -= 1
        out.append(2 * i - (1 if 2 * j - 1 in parts else 0))
    return tuple(out)


def pod_rank_vector(p: Iterable[int]) -> Tuple[int, ...]:
    """Row size minus column size for j = 1..k."""
    p = tuple(as_pod(p))
    k = pod_durfee_side(p)
    cols = column_sizes(p)
    return tuple(p[j] - cols[j] for j in range(k))


def right_column_sizes(p: Iterable[int]) -> Tuple[int, ...]:
    p = tuple(as_pod(p))
    return column_sizes(p)[pod_durfee_side(p):]


def below_sizes(p: Iterable[int]) -> Tuple[int, ...]:
    p = tuple(as_pod(p))
    return p[pod_durfee_side(p):]


def _corner_one(p: Sequence[int], k: int) -> bool:
    return bool(k) and p[k - 1] == 2 * k - 1


@dataclass(frozen=True)
class TwoModularGraph:
    parts: PodPartition
    durfee: int
    corner: int
    row_lengths: Tuple[int, ...]
    row_sizes: Tuple[int, ...]
    column_lengths: Tuple[int, ...]
    column_sizes: Tuple[int, ...]

    @classmethod
    def of(cls, p: Iterable[int]) -> "TwoModularGraph":
        p = as_pod(p)
        k = pod_durfee_side(p)
        lengths = tuple(_lengths(p))
        col_lengths = tuple(sum(1 for x in lengths if x >= j) for j in range(1, (lengths[0] if lengths else 0) + 1))
        corner = 0 if not k else (1 if _corner_one(p, k) else 2)
        return cls(p, k, corner, lengths, tuple(p), col_lengths, column_sizes(p))

    def conjugate(self) -> PodPartition:
        """The partition read off the column sizes."""
        return PodPartition(self.column_sizes)

    def render(self) -> str:
        """Rows of 2 digits with a trailing 1 for odd parts; the square is set off by a margin."""
        k = self.durfee
        lines = []
        for i, (length, size) in enumerate(zip(self.row_lengths, self.row_sizes)):
            cells = "2" * (length - 1) + ("1" if size % 2 else "2")
            if i == k and k:
                lines.append("")
            if i < k and length > k:
                cells = cells[:k] + " " + cells[k:]
            lines.append(cells)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "parts": list(self.parts),
            "durfee": self.durfee,
            "corner": self.corner,
            "row_sizes": list(self.row_sizes),
            "column_sizes": list(self.column_sizes),
        }


def _profile(t: tuple):
    # (k, corner_one, right sizes, right lengths, r_k) computed without objects
    k = 0
    for x in t:
        if (x + 1) // 2 >= k + 1:
            k += 1
        else:
            break
    if not k:
        return 0, False, (), (), 0
    parts = set(t)
    top = (t[0] + 1) // 2
    i = len(t)
    sizes = []
    lengths = []
    for j in range(k, top + 1):
        while (t[i - 1] + 1) // 2 < j:
            i -= 1
        sizes.append(2 * i - (1 if 2 * j - 1 in parts else 0))
        lengths.append(i)
    return k, t[k - 1] == 2 * k - 1, sizes[1:], lengths[1:], t[k - 1] - sizes[0]


def _is_basis_t(t: tuple, prof) -> bool:
    k, _, right, _, _ = prof
    return not (set(right) & set(t[k:]))


def _is_minimal_t(t: tuple, prof) -> bool:
    k, corner_one, _, right_lengths, r_k = prof
    below_lengths = {(x + 1) // 2 for x in t[k:]}
    if below_lengths & set(right_lengths):
        return False
    return not (k and r_k == 0 and not corner_one)


def is_pod_basis(p: Iterable[int]) -> bool:
    """No row below the 2-modular Durfee square equals a column right of it in size."""
    t = tuple(as_pod(p))
    return _is_basis_t(t, _profile(t))


def is_minimal_basis(p: Iterable[int]) -> bool:
    """Row and column lengths outside the square are disjoint, and r_k = 0 forces a corner 1."""
    t = tuple(as_pod(p))
    prof = _profile(t)
    minimal = _is_minimal_t(t, prof)
    if minimal and not _is_basis_t(t, prof):
        raise VerificationError(f"{t} passes the minimal test but not the basis test")
    return minimal


def _rows_with_columns(k: int, corner_one: bool, right: Iterable[int]) -> List[int]:
    # sizes of rows 1..k given the sizes of the columns right of the square
    rows = [2 * k] * k
    if corner_one:
        rows[k - 1] -= 1
    for s in right:
        length = (s + 1) // 2
        for i in range(length):
            rows[i] += 2
        if s % 2:
            rows[length - 1] -= 1
    return rows


def _ranks_of(k: int, corner_one: bool, right: Sequence[int], below: Sequence[int]) -> Tuple[int, ...]:
    rows = _rows_with_columns(k, corner_one, right)
    cols = _rows_with_columns(k, corner_one, below)
    return tuple(x - y for x, y in zip(rows, cols))


def construct_minimal_steps(r: Sequence[int]) -> Tuple[PodPartition, List[Tuple[int, ...]]]:
    """Build the minimal basis partition for r; also return the rank vector after each insertion.

    Start from a k x k square of 2s with a 1 in the corner.  For j = k down
    to 1, delta = r_j minus the current j-th rank of the partial graph.  A
    positive delta adds ceil(delta/2) columns of length j on the right, all
    of size 2j except the last, which has size 2j-1 when delta is odd; a
    negative delta adds the same rows below.  At j = k a nonzero delta also
    turns the corner into a 2.
    """
    r = tuple(int(x) for x in r)
    k = len(r)
    if not k:
        return PodPartition(), []
    right: List[int] = []
    below: List[int] = []
    corner_one = True
    steps = []
    for j in range(k, 0, -1):
        d = r[j - 1] - _ranks_of(k, corner_one, right, below)[j - 1]
        if d == 0:
            continue
        if j == k:
            corner_one = False
        m = (abs(d) + 1) // 2
        sizes = [2 * j] * (m - 1) + [2 * j - abs(d) % 2]
        (right if d > 0 else below).extend(sizes)
        steps.append(_ranks_of(k, corner_one, right, below))
    p = PodPartition(_rows_with_columns(k, corner_one, right) + below)
    if pod_rank_vector(p) != r or pod_durfee_side(p) != k:
        raise VerificationError(f"construction for {r} produced {tuple(p)} with ranks {pod_rank_vector(p)}")
    return p, steps


def construct_minimal(r: Sequence[int]) -> PodPartition:
    p, _ = construct_minimal_steps(r)
    if not is_minimal_basis(p):
        raise VerificationError(f"{tuple(p)} built for {tuple(r)} is not minimal")
    return p


@dataclass(frozen=True)
class ClassVector:
    """Class data of a basis partition: entry j-1 of even/odd describes length j."""

    k: int
    corner_one: bool
    even: Tuple[int, ...]
    odd: Tuple[int, ...]

    def deltas(self) -> Tuple[int, ...]:
        e, o = self.even, self.odd
        return tuple(2 * e[i] + o[i] + (o[i + 1] if i + 1 < self.k else 0) for i in range(self.k))

    def assemble(self) -> PodPartition:
        if self.corner_one and (self.even[-1] or self.odd[-1]):
            raise PreconditionError("a corner 1 leaves no room for length-k columns or rows")
        right: List[int] = []
        below: List[int] = []
        for j in range(1, self.k + 1):
            e, o = self.even[j - 1], self.odd[j - 1]
            (right if e > 0 else below).extend([2 * j] * abs(e))
            if o:
                (right if o > 0 else below).append(2 * j - 1)
        return PodPartition(_rows_with_columns(self.k, self.corner_one, right) + below)


def class_vector(p: Iterable[int]) -> ClassVector:
    p = as_pod(p)
    if not is_pod_basis(p):
        raise PreconditionError(f"{tuple(p)} is not a basis partition")
    k = pod_durfee_side(p)
    even = [0] * k
    odd = [0] * k
    for s in right_column_sizes(p):
        j = (s + 1) // 2
        if s % 2:
            odd[j - 1] = 1
        else:
            even[j - 1] += 1
    for s in below_sizes(p):
        j = (s + 1) // 2
        if s % 2:
            odd[j - 1] = -1
        else:
            even[j - 1] -= 1
    cv = ClassVector(k, _corner_one(p, k), tuple(even), tuple(odd))
    if cv.assemble() != p:
        raise VerificationError(f"class vector of {tuple(p)} does not reassemble")
    return cv


def allowable_hooks(mu: Iterable[int]) -> int:
    """Hooks of a minimal basis partition whose 1 can move: one per odd part."""
    mu = as_pod(mu)
    if not is_minimal_basis(mu):
        raise PreconditionError(f"{tuple(mu)} is not a minimal basis partition")
    cv = class_vector(mu)
    return sum(1 for o in cv.odd if o) + cv.corner_one


def spawn_from_minimal(mu: Iterable[int]) -> List[PodPartition]:
    """The 2^alpha basis partitions sharing the rank vector of the minimal ``mu``.

    Bit b of the subset mask moves the 1 of the b-th hook, hooks taken by
    increasing length with the corner last.  Moving the lone 2j-1 to the other
    side adds its sign to E_j and E_(j-1) so that every delta is unchanged;
    moving the corner 1 turns it into a 2.
    """
    mu = as_pod(mu)
    if not is_minimal_basis(mu):
        raise PreconditionError(f"{tuple(mu)} is not a minimal basis partition")
    cv = class_vector(mu)
    hooks = [j for j in range(1, cv.k + 1) if cv.odd[j - 1]]
    alpha = len(hooks) + cv.corner_one
    ranks = pod_rank_vector(mu)
    out = []
    for mask in range(1 << alpha):
        even = list(cv.even)
        odd = list(cv.odd)
        for bit, j in enumerate(hooks):
            if mask >> bit & 1:
                o = cv.odd[j - 1]
                odd[j - 1] = -o
                even[j - 1] += o
                if j >= 2:
                    even[j - 2] += o
        corner_one = cv.corner_one and not (mask >> len(hooks) & 1)
        q = ClassVector(cv.k, corner_one, tuple(even), tuple(odd)).assemble()
        if pod_rank_vector(q) != ranks or not is_pod_basis(q):
            raise VerificationError(f"spawning {tuple(q)} from {tuple(mu)} broke the rank vector")
        out.append(q)
    return out


def proviso_hooks(mu: Iterable[int]) -> int:
    """Hooks whose 1 can move under the adjacency reading of the allowable-hook rule.

    A hook ending in 1 on one arm counts when the node that would receive the
    1 at the other arm's end sits next to a 2, plus the corner 1.  This
    reading misses members of some fibers (e.g. (6,5)); ``allowable_hooks``
    is the count that matches the fibers.
    """
    mu = tuple(as_pod(mu))
    g = [[2] * (x // 2) + ([1] if x % 2 else []) for x in mu]
    k = pod_durfee_side(mu)

    def at(i, j):
        if 0 <= i < len(g) and 0 <= j < len(g[i]):
            return g[i][j]
        return None

    count = 0
    for i in range(k):
        col_len = sum(1 for row in g if len(row) > i)
        east = (i, len(g[i]) - 1)
        south = (col_len - 1, i)
        if east == south:
            count += g[i][-1] == 1
        elif g[east[0]][east[1]] == 1:
            anchor = at(col_len, i - 1) if i else at(col_len - 1, i)
            count += anchor == 2 and at(col_len, i) is None
        elif g[south[0]][south[1]] == 1:
            anchor = at(i - 1, len(g[i])) if i else at(i, len(g[i]) - 1)
            count += anchor == 2
    return count


def pod_hook_sums(p: Iterable[int]) -> Tuple[int, ...]:
    """Sum of 2-modular entries along each diagonal hook i = 1..k."""
    p = tuple(as_pod(p))
    k = pod_durfee_side(p)
    lengths = _lengths(p)
    out = []
    for i in range(1, k + 1):
        arm = p[i - 1] - 2 * (i - 1)
        leg = sum(2 - (lengths[m] == i and p[m] % 2) for m in range(i, len(p)) if lengths[m] >= i)
        out.append(arm + leg)
    return tuple(out)


def is_pod_primary(p: Iterable[int]) -> bool:
    p = tuple(p)
    return is_pod(p) and len(p) == pod_durfee_side(p)


def is_special(s: Iterable[int]) -> bool:
    """Consecutive parts differ by at least 4, and by at least 5 when either is odd."""
    s = Partition(s)
    for x, y in zip(s, s[1:]):
        if x - y < (5 if (x % 2 or y % 2) else 4):
            return False
    return True


def special_hook_map(p: Iterable[int]) -> Partition:
    p = as_pod(p)
    if not is_pod_primary(p):
        raise PreconditionError(f"{tuple(p)} is not a primary partition with distinct odd parts")
    return Partition(pod_hook_sums(p))


def special_to_primary(s: Iterable[int]) -> PodPartition:
    """Inverse hook map: with k parts, b_i = s_i - 2k + 4i - 2."""
    s = Partition(s)
    if not is_special(s):
        raise PreconditionError(f"{tuple(s)} is not a special partition")
    k = len(s)
    p = PodPartition(x - 2 * k + 4 * i + 2 for i, x in enumerate(s))
    if not is_pod_primary(p) or pod_hook_sums(p) != tuple(s):
        raise VerificationError(f"{tuple(s)} did not invert to a primary partition")
    return p


def literal_gap_count(s: Iterable[int]) -> int:
    """Gaps b_i - b_(i+1) > 4 with b_(k+1) = -2."""
    s = tuple(Partition(s)) + (-2,)
    return sum(1 for x, y in zip(s, s[1:]) if x - y > 4)


def corrected_gap_count(s: Iterable[int]) -> int:
    """Number of slidable classes of the primary partition behind a special partition.

    Each gap exceeding 4 + o(b_i) + o(b_(i+1)) (o = 1 on odd parts, b_(k+1) = -2)
    marks a class of 2j columns; each odd part other than 1 marks a lone odd column.
    """
    s = tuple(Partition(s))
    ext = s + (-2,)
    gaps = sum(1 for x, y in zip(ext, ext[1:]) if x - y - 4 - x % 2 - y % 2 > 0)
    return gaps + sum(1 for x in s if x % 2 and x > 1)


def slidable_classes(p: Iterable[int]) -> List[int]:
    """Distinct column sizes right of the square of a primary, ascending."""
    p = as_pod(p)
    if not is_pod_primary(p):
        raise PreconditionError(f"{tuple(p)} is not a primary partition with distinct odd parts")
    return sorted(set(right_column_sizes(p)))


def pod_spawn_basis(p: Iterable[int]) -> List[PodPartition]:
    """Slide every subset of column classes of a primary below its square.

    All 2j columns of one length move together; a lone odd column moves on
    its own.  Bit b of the subset mask slides the b-th class by ascending size.
    """
    p = as_pod(p)
    classes = slidable_classes(p)
    hooks = pod_hook_sums(p)
    ell = corrected_gap_count(hooks)
    if ell != len(classes):
        raise VerificationError(f"{tuple(p)}: {len(classes)} classes but gap statistic {ell}")
    k = pod_durfee_side(p)
    corner_one = _corner_one(p, k)
    cols = right_column_sizes(p)
    out = []
    for mask in range(1 << len(classes)):
        slid = {s for bit, s in enumerate(classes) if mask >> bit & 1}
        kept = [s for s in cols if s not in slid]
        below = [s for s in cols if s in slid]
        q = PodPartition(_rows_with_columns(k, corner_one, kept) + below)
        if not is_pod_basis(q) or pod_durfee_side(q) != k or pod_hook_sums(q) != hooks:
            raise VerificationError(f"sliding {sorted(slid)} in {tuple(p)} broke an invariant")
        out.append(q)
    return out


def psi(p: Iterable[int]) -> int:
    """Distinct part sizes below the 2-modular Durfee square."""
    return len(set(below_sizes(p)))


def ell_signature(p: Iterable[int]) -> int:
    """Distinct row lengths below the 2-modular Durfee square."""
    return len({(s + 1) // 2 for s in below_sizes(p)})


def odd_part_count(p: Iterable[int]) -> int:
    return sum(1 for x in p if x % 2)


def _square_index(n: int) -> Optional[int]:
    k = int(round((n / 2) ** 0.5)) if n >= 0 else 0
    for c in (k - 1, k, k + 1):
        if c >= 0 and 2 * c * c == n:
            return c
    return None


def basis_parity_expected(n: int) -> ParamPolynomial:
    """1 at n = 2k^2, b at n = 2k^2 - 1, else 0."""
    if _square_index(n) is not None:
        return ParamPolynomial.const(1)
    if n >= 1 and _square_index(n + 1) is not None:
        return b_var
    return ParamPolynomial.const(0)


def minimal_parity_expected(n: int) -> int:
    """1 at n = 0 or n = 2k^2 - 1 (k >= 1), else 0."""
    return int(n == 0 or (n >= 1 and _square_index(n + 1) is not None))


@dataclass(frozen=True)
class PodCensus:
    n: int
    basis: Mapping[Tuple[int, int], int] = field(default_factory=dict)
    minimal: Mapping[int, int] = field(default_factory=dict)
    # basis tallies by (Durfee side, corner is 1)
    by_square: Mapping[Tuple[int, bool], int] = field(default_factory=dict)

    @property
    def basis_total(self) -> int:
        return sum(self.basis.values())

    @property
    def minimal_total(self) -> int:
        return sum(self.minimal.values())

    def basis_signed(self) -> ParamPolynomial:
        """Even-signature minus odd-signature tally, with b marking odd parts."""
        total = ParamPolynomial.const(0)
        for (s, odd), c in self.basis.items():
            total = total + ParamPolynomial.const(c * (-1) ** s) * b_var ** odd
        return total

    def minimal_signed(self) -> int:
        return sum(c * (-1) ** ell for ell, c in self.minimal.items())

    def verdicts(self) -> dict:
        return {
            "basis_parity": self.basis_signed() == basis_parity_expected(self.n),
            "minimal_parity": self.minimal_signed() == minimal_parity_expected(self.n),
        }

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": [{"psi": s, "odd_parts": o, "count": c} for (s, o), c in sorted(self.basis.items())],
            "minimal": [{"ell_signature": e, "count": c} for e, c in sorted(self.minimal.items())],
            "basis_total": self.basis_total,
            "minimal_total": self.minimal_total,
            "basis_signed": self.basis_signed().to_json(),
            "minimal_signed": self.minimal_signed(),
            "verdicts": self.verdicts(),
        }


@lru_cache(maxsize=None)
def _pod_census(n: int) -> PodCensus:
    basis: Counter = Counter()
    minimal: Counter = Counter()
    by_square: Counter = Counter()
    for t in partitions_of(n, distinct_odd=True, limit=n):
        prof = _profile(t)
        if not _is_basis_t(t, prof):
            continue
        k = prof[0]
        by_square[(k, prof[1])] += 1
        below = t[k:]
        basis[(len(set(below)), sum(1 for x in t if x % 2))] += 1
        if _is_minimal_t(t, prof):
            minimal[len({(x + 1) // 2 for x in below})] += 1
    return PodCensus(n, MappingProxyType(dict(basis)), MappingProxyType(dict(minimal)),
                     MappingProxyType(dict(by_square)))


def pod_census(n: int, limit: Optional[int] = None, check: bool = True) -> PodCensus:
    """Basis tallies by (psi, odd parts) and minimal tallies by l-signature.

    With ``check`` both parity verdicts must hold.
    """
    _check_limit(n, limit)
    census = _pod_census(n)
    if check:
        failed = [name for name, ok in census.verdicts().items() if not ok]
        if failed:
            raise VerificationError(f"n={n}: parity check failed for {', '.join(failed)}")
    return census
