"""Truncated power series in q with ParamPolynomial coefficients.

All arithmetic is exact and carried out modulo q^(order+1).
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .poly import Monomial, ParamPolynomial, Scalar, _add_into, _mul_terms

_ONE_TERM = {(0, 0, 0, 0): 1}


def _terms_of(c: Scalar) -> Dict[Monomial, int]:
    return ParamPolynomial.coerce(c)._terms


class Series:
    """Power series c_0 + c_1 q + ... + c_N q^N, known exactly up to q^N."""

    __slots__ = ("order", "_c")

    def __init__(self, order: int, coeffs: Optional[Iterable[Scalar]] = None):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.order = order
        self._c: List[Dict[Monomial, int]] = [{} for _ in range(order + 1)]
        if coeffs is not None:
            for n, c in enumerate(coeffs):
                if n > order:
                    break
                self._c[n] = dict(_terms_of(c))

    @classmethod
    def _raw(cls, order: int, c: List[Dict[Monomial, int]]) -> "Series":
        s = cls.__new__(cls)
        s.order = order
        s._c = c
        return s

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.monomial(0, 1, order)

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar, order: int) -> "Series":
        s = cls(order)
        if 0 <= exponent <= order:
            s._c[exponent] = dict(_terms_of(coeff))
        return s

    def copy(self) -> "Series":
        return Series._raw(self.order, [dict(t) for t in self._c])

    def coefficient(self, n: int) -> ParamPolynomial:
        if n < 0 or n > self.order:
            raise IndexError(f"q^{n} is outside the known range 0..{self.order}")
        return ParamPolynomial._wrap(dict(self._c[n]))

    __getitem__ = coefficient

    @property
    def coeffs(self) -> Tuple[ParamPolynomial, ...]:
        return tuple(ParamPolynomial._wrap(dict(t)) for t in self._c)

    def valuation(self) -> Optional[int]:
        for n, t in enumerate(self._c):
            if t:
                return n
        return None

    def truncate(self, order: int) -> "Series":
        order = min(order, self.order)
        return Series._raw(order, [dict(t) for t in self._c[: order + 1]])

    def _binary(self, other, scale):
        if isinstance(other, Series):
            order = min(self.order, other.order)
            out = [dict(t) for t in self._c[: order + 1]]
            for n in range(order + 1):
                _add_into(out[n], other._c[n], scale)
            return Series._raw(order, out)
        out = [dict(t) for t in self._c]
        _add_into(out[0], _terms_of(other), scale)
        return Series._raw(self.order, out)

    def __add__(self, other):
        return self._binary(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, -1)

    def __rsub__(self, other):
        return (-self)._binary(other, 1)

    def __neg__(self):
        return Series._raw(self.order, [{m: -c for m, c in t.items()} for t in self._c])

    def __mul__(self, other):
        if isinstance(other, Series):
            order = min(self.order, other.order)
            out: List[Dict[Monomial, int]] = [{} for _ in range(order + 1)]
            for i in range(order + 1):
                ti = self._c[i]
                if not ti:
                    continue
                for j in range(order + 1 - i):
                    tj = other._c[j]
                    if tj:
                        _add_into(out[i + j], _mul_terms(ti, tj))
            return Series._raw(order, out)
        terms = _terms_of(other)
        return Series._raw(self.order, [_mul_terms(t, terms) if t else {} for t in self._c])

    __rmul__ = __mul__

    def shift(self, m: int) -> "Series":
        """Multiply by q^m (m >= 0)."""
        if m < 0:
            raise ValueError("negative shift")
        out = [{} for _ in range(min(m, self.order + 1))] + [dict(t) for t in self._c[: max(self.order + 1 - m, 0)]]
        return Series._raw(self.order, out)

    def times_one_minus(self, j: int, coeff: Scalar = 1) -> "Series":
        """Multiply by (1 - coeff * q^j)."""
        if j < 1:
            raise ValueError("j must be positive")
        terms = _terms_of(coeff)
        out = [dict(t) for t in self._c]
        for n in range(self.order, j - 1, -1):
            src = self._c[n - j]
            if src:
                _add_into(out[n], _mul_terms(src, terms), -1)
        return Series._raw(self.order, out)

    def divide_one_minus(self, j: int, coeff: Scalar = 1) -> "Series":
        """Divide by (1 - coeff * q^j), i.e. multiply by its geometric expansion."""
        if j < 1:
            raise ValueError("j must be positive")
        terms = _terms_of(coeff)
        out = [dict(t) for t in self._c]
        for n in range(j, self.order + 1):
            src = out[n - j]
            if src:
                _add_into(out[n], _mul_terms(src, terms))
        return Series._raw(self.order, out)

    def substitute(self, **values: int) -> "Series":
        return Series._raw(self.order, [ParamPolynomial._wrap(t).evaluate(**values)._terms for t in self._c])

    def integer_coefficients(self) -> List[int]:
        out = []
        for n, t in enumerate(self._c):
            if any(m != (0, 0, 0, 0) for m in t):
                raise ValueError(f"coefficient of q^{n} is not a constant")
            out.append(t.get((0, 0, 0, 0), 0))
        return out

    def first_mismatch(self, other: "Series") -> Optional[Tuple[int, ParamPolynomial, ParamPolynomial]]:
        order = min(self.order, other.order)
        for n in range(order + 1):
            if self._c[n] != other._c[n]:
                return n, self.coefficient(n), other.coefficient(n)
        return None

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __hash__(self):
        return hash((self.order, tuple(frozenset(t.items()) for t in self._c)))

    def __repr__(self):
        return f"Series({self}, order={self.order})"

    def __str__(self):
        pieces = []
        for n, t in enumerate(self._c):
            if not t:
                continue
            c = ParamPolynomial._wrap(t)
            qpart = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if not qpart:
                pieces.append(f"{c}")
            elif c == 1:
                pieces.append(qpart)
            elif len(t) == 1:
                pieces.append(f"{c}*{qpart}")
            else:
                pieces.append(f"({c})*{qpart}")
        return " + ".join(pieces) if pieces else "0"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [ParamPolynomial._wrap(t).to_json() for t in self._c]}


def from_counts(counts: Sequence[int], order: Optional[int] = None) -> Series:
    order = len(counts) - 1 if order is None else order
    return Series(order, list(counts))


def geometric_factor(j: int, numerator: Union[Scalar, Series], order: int) -> Series:
    """numerator / (1 - q^j) to the given order."""
    if j < 1:
        raise ValueError("j must be positive")
    if isinstance(numerator, Series):
        base = numerator.truncate(order)
        if base.order < order:
            raise ValueError("numerator series is known to a lower order")
    else:
        base = Series.monomial(0, numerator, order)
    return base.divide_one_minus(j)


def pochhammer(count: int, order: int, coeff: Scalar = 1, start: int = 1, step: int = 1) -> Series:
    """Finite product (1 - c q^start)(1 - c q^(start+step)) ... with ``count`` factors.

    (q;q)_n is ``pochhammer(n, N)``; (-zq;q)_n is ``pochhammer(n, N, coeff=-z)``;
    (-q^2;q^2)_n is ``pochhammer(n, N, coeff=-1, start=2, step=2)``.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    s = Series.one(order)
    for i in range(count):
        e = start + i * step
        if e > order:
            break
        if e == 0:
            s = s * (1 - ParamPolynomial.coerce(coeff))
        else:
            s = s.times_one_minus(e, coeff)
    return s


def inverse_pochhammer(count: int, order: int, coeff: Scalar = 1, start: int = 1, step: int = 1) -> Series:
    """1 / pochhammer(...); every factor must have a positive q-exponent."""
    if start < 1:
        raise ValueError("start must be positive")
    s = Series.one(order)
    for i in range(count):
        e = start + i * step
        if e > order:
            break
        s = s.divide_one_minus(e, coeff)
    return s


def q_binomial(m: int, j: int, order: Optional[int] = None) -> Series:
    """Gaussian binomial [m choose j]_q from the product formula.

    The result is a polynomial of degree j(m-j); ``order`` defaults to that
    degree and may not be smaller.
    """
    if not 0 <= j <= m:
        raise ValueError(f"q-binomial index j={j} outside 0..{m}")
    degree = j * (m - j)
    order = degree if order is None else order
    if order < degree:
        raise ValueError(f"order {order} is below the polynomial degree {degree}")
    # (q;q)_m / ((q;q)_j (q;q)_{m-j}) with the division done term by term
    s = pochhammer(m, order)
    for i in list(range(1, j + 1)) + list(range(1, m - j + 1)):
        s = s.divide_one_minus(i)
    return s
