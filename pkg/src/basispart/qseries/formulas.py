"""Closed-form generating functions, expanded as truncated series.

Every builder sums only the terms whose leading power of q is within the
requested order, so the results are exact to q^order.  Builders that take an
optional index (``k`` or ``j``) sum over all index values when it is None.
"""

from __future__ import annotations

from typing import Optional

from .poly import ONE, ParamPolynomial, a, b, z, zeta
from .series import Series, inverse_pochhammer, pochhammer, q_binomial


def _indices(first: int, valuation, order: int):
    i = first
    while valuation(i) <= order:
        yield i
        i += 1


def _sum_over(first, valuation, term, order, index):
    if index is not None:
        if index < first or valuation(index) > order:
            return Series.zero(order)
        return term(index)
    total = Series.zero(order)
    for i in _indices(first, valuation, order):
        total = total + term(i)
    return total


def durfee_square_gf(order: int, k: Optional[int] = None) -> Series:
    """Partitions with a k x k Durfee square: q^(k^2) / (q;q)_k^2."""

    def term(k):
        s = Series.monomial(k * k, 1, order)
        for i in range(1, k + 1):
            s = s.divide_one_minus(i).divide_one_minus(i)
        return s

    return _sum_over(0, lambda k: k * k, term, order, k)


def basis_gf(order: int, k: Optional[int] = None) -> Series:
    """Basis partitions with Durfee side k: q^(k^2) (-q;q)_k / (q;q)_k."""

    def term(k):
        s = Series.monomial(k * k, 1, order) * pochhammer(k, order, coeff=-1)
        for i in range(1, k + 1):
            s = s.divide_one_minus(i)
        return s

    return _sum_over(0, lambda k: k * k, term, order, k)


def durfee_square_from_basis_gf(order: int, k: Optional[int] = None) -> Series:
    """Basis generating function divided by (q^2;q^2)_k (inserting matched row/column pairs)."""

    def term(k):
        s = basis_gf(order, k)
        for i in range(1, k + 1):
            s = s.divide_one_minus(2 * i)
        return s

    return _sum_over(0, lambda k: k * k, term, order, k)


def rogers_ramanujan_gf(order: int, k: Optional[int] = None) -> Series:
    """Partitions into exactly k parts with gaps >= 2: q^(k^2) / (q;q)_k."""

    def term(k):
        return Series.monomial(k * k, 1, order) * inverse_pochhammer(k, order)

    return _sum_over(0, lambda k: k * k, term, order, k)


def signature_gf(order: int, k: Optional[int] = None, mark_side: bool = False) -> Series:
    """Basis partitions by Durfee side and signature: q^(k^2) (-zq;q)_k / (q;q)_k.

    With ``mark_side`` each term also carries a^k, which gives the two-parameter
    series sum_k a^k q^(k^2) (-zq;q)_k / (q;q)_k.
    """

    def term(k):
        s = Series.monomial(k * k, a ** k if mark_side else ONE, order)
        s = s * pochhammer(k, order, coeff=-z)
        for i in range(1, k + 1):
            s = s.divide_one_minus(i)
        return s

    return _sum_over(0, lambda k: k * k, term, order, k)


def partial_theta(order: int) -> Series:
    """sum_{k>=0} q^(k^2)."""
    s = Series.zero(order)
    for k in _indices(0, lambda k: k * k, order):
        s = s + Series.monomial(k * k, 1, order)
    return s


def signature_binomial_form(order: int) -> Series:
    """sum_k q^(k^2)/(q)_k sum_{j<=k} z^j q^(j(j+1)/2) [k choose j]_q."""
    total = Series.zero(order)
    for k in _indices(0, lambda k: k * k, order):
        outer = Series.monomial(k * k, 1, order) * inverse_pochhammer(k, order)
        inner = Series.zero(order)
        for j in range(k + 1):
            lead = j * (j + 1) // 2
            if k * k + lead > order:
                break
            qb = q_binomial(k, j, max(order, j * (k - j))).truncate(order)
            inner = inner + qb.shift(lead) * (z ** j)
        total = total + outer * inner
    return total


def _rr_tail(order: int, j: int) -> Series:
    # sum_i q^(i^2 + 2ij) / (q)_i
    s = Series.zero(order)
    for i in _indices(0, lambda i: i * i + 2 * i * j, order):
        s = s + Series.monomial(i * i + 2 * i * j, 1, order) * inverse_pochhammer(i, order)
    return s


def fixed_signature_gf(order: int, j: Optional[int] = None) -> Series:
    """Basis partitions of signature j: q^((3j^2+j)/2)/(q)_j sum_i q^(i^2+2ij)/(q)_i.

    Summed over j (j=None) each term is weighted by z^j.
    """

    def term(j):
        head = Series.monomial((3 * j * j + j) // 2, z ** j if marked else ONE, order)
        head = head * inverse_pochhammer(j, order)
        return head * _rr_tail(order, j)

    marked = j is None
    return _sum_over(0, lambda j: (3 * j * j + j) // 2, term, order, j)


def complete_gf(order: int, corrected: bool = True, with_z: bool = False) -> Series:
    """Complete basis partitions.

    The published form is 1 + sum_k w^(k-1) q^((3k^2-k)/2) (1 + v q^k)/(1 - q^k)
    with w = 2, v = 1 (or w = 1+z, v = z).  The corrected form divides each
    summand by (q;q)_(k-1), accounting for the free extra columns of lengths
    1..k-1 in the underlying primary distinct-part partition.
    """
    w = (1 + z) if with_z else ParamPolynomial.const(2)
    v = z if with_z else ONE
    total = Series.one(order)
    for k in _indices(1, lambda k: (3 * k * k - k) // 2, order):
        s = Series.monomial((3 * k * k - k) // 2, w ** (k - 1), order)
        s = s + s.shift(k) * v
        s = s.divide_one_minus(k)
        if corrected:
            for i in range(1, k):
                s = s.divide_one_minus(i)
        total = total + s
    return total


def pod_basis_case_gf(order: int, k: int, corner_one: bool, refined: bool = False) -> Series:
    """P_{o,d} basis partitions with a k x k 2-modular Durfee square.

    ``corner_one`` selects the square with a 1 in its corner (weight
    q^(2k^2-1), lengths up to k-1); otherwise the all-twos square.  With
    ``refined`` z marks the signature and b the number of odd parts.
    """
    if corner_one:
        if k < 1:
            return Series.zero(order)
        lead, m, mark = 2 * k * k - 1, k - 1, (b if refined else ONE)
    else:
        lead, m, mark = 2 * k * k, k, ONE
    if lead > order:
        return Series.zero(order)
    s = Series.monomial(lead, mark, order)
    s = s * pochhammer(m, order, coeff=(-z if refined else -1), start=2, step=2)
    s = s * pochhammer(m, order, coeff=(-b * (1 + z) if refined else -2), start=1, step=2)
    for i in range(1, m + 1):
        s = s.divide_one_minus(2 * i)
    return s


def pod_basis_gf(order: int, refined: bool = False) -> Series:
    total = Series.zero(order)
    for k in _indices(0, lambda k: 2 * k * k - 1, order):
        total = total + pod_basis_case_gf(order, k, corner_one=False, refined=refined)
        total = total + pod_basis_case_gf(order, k, corner_one=True, refined=refined)
    return total


def _length_class_factor(order: int, j: int, weight: ParamPolynomial, with_empty: bool) -> Series:
    # [1 +] w q^(2j-1) + w q^(2j)(1 + q^(2j-1))/(1 - q^(2j))
    s = Series.monomial(2 * j - 1, weight, order)
    evens = Series.monomial(2 * j, weight, order)
    evens = (evens + evens.shift(2 * j - 1)).divide_one_minus(2 * j)
    s = s + evens
    if with_empty:
        s = s + 1
    return s


def pod_minimal_gf(order: int, refined: bool = False) -> Series:
    """Minimal basis partitions in P_{o,d}; with ``refined`` zeta marks the l-signature."""
    weight = (1 + zeta) if refined else ParamPolynomial.const(2)
    total = Series.one(order)
    for k in _indices(1, lambda k: 2 * k * k - 1, order):
        prod = Series.one(order)
        for j in range(1, k):
            prod = prod * _length_class_factor(order, j, weight, with_empty=True)
        total = total + prod.shift(2 * k * k - 1)
        if 2 * k * k <= order:
            last = _length_class_factor(order, k, weight, with_empty=False)
            total = total + (prod * last).shift(2 * k * k)
    return total


def pod_parity_collapse(order: int) -> Series:
    """sum_{k>=0} q^(2k^2) + b sum_{k>=1} q^(2k^2-1)."""
    s = Series.zero(order)
    for k in _indices(0, lambda k: 2 * k * k - 1, order):
        s = s + Series.monomial(2 * k * k, 1, order)
        if k:
            s = s + Series.monomial(2 * k * k - 1, b, order)
    return s


def minimal_parity_collapse(order: int) -> Series:
    """1 + sum_{k>=1} q^(2k^2-1)."""
    s = Series.one(order)
    for k in _indices(1, lambda k: 2 * k * k - 1, order):
        s = s + Series.monomial(2 * k * k - 1, 1, order)
    return s
