"""Exact integer polynomials in the formal parameters z, b, zeta, a."""

from __future__ import annotations

from typing import Dict, Mapping, Tuple, Union

VARIABLES = ("z", "b", "zeta", "a")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ZERO_EXP = (0, 0, 0, 0)

Monomial = Tuple[int, int, int, int]
Scalar = Union[int, "ParamPolynomial"]


def _add_into(acc: Dict[Monomial, int], terms: Mapping[Monomial, int], scale: int = 1) -> None:
    for m, c in terms.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


def _mul_terms(x: Mapping[Monomial, int], y: Mapping[Monomial, int]) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                del out[m]
    return out


class ParamPolynomial:
    """Sparse polynomial with integer coefficients; the zero polynomial has no terms."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    m = tuple(m)
                    if len(m) != len(VARIABLES) or any(e < 0 for e in m):
                        raise ValueError(f"bad monomial {m}")
                    clean[m] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, int]) -> "ParamPolynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "ParamPolynomial":
        return cls._wrap({_ZERO_EXP: int(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "ParamPolynomial":
        exp = [0, 0, 0, 0]
        exp[_INDEX[name]] = power
        return cls._wrap({tuple(exp): 1})

    @classmethod
    def coerce(cls, x: Scalar) -> "ParamPolynomial":
        if isinstance(x, ParamPolynomial):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot use {type(x).__name__} as a coefficient")

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == _ZERO_EXP for m in self._terms)

    def constant(self) -> int:
        return self._terms.get(_ZERO_EXP, 0)

    def coefficient(self, **degrees: int) -> int:
        exp = [0, 0, 0, 0]
        for name, d in degrees.items():
            exp[_INDEX[name]] = d
        return self._terms.get(tuple(exp), 0)

    def degree(self, name: str) -> int:
        i = _INDEX[name]
        return max((m[i] for m in self._terms), default=0)

    def coefficients_in(self, name: str) -> list:
        """Integer coefficient list in one variable; other variables must be absent."""
        i = _INDEX[name]
        out = [0] * (self.degree(name) + 1)
        for m, c in self._terms.items():
            if any(e for j, e in enumerate(m) if j != i):
                raise ValueError(f"{self} involves variables other than {name}")
            out[m[i]] += c
        return out

    def evaluate(self, **values: int) -> "ParamPolynomial":
        """Substitute integer values for some variables; the rest stay formal."""
        subs = {_INDEX[k]: v for k, v in values.items()}
        out: Dict[Monomial, int] = {}
        for m, c in self._terms.items():
            exp = list(m)
            for i, v in subs.items():
                c *= v ** exp[i]
                exp[i] = 0
            if c:
                key = tuple(exp)
                v2 = out.get(key, 0) + c
                if v2:
                    out[key] = v2
                else:
                    del out[key]
        return ParamPolynomial._wrap(out)

    def __add__(self, other):
        other = ParamPolynomial.coerce(other)
        acc = dict(self._terms)
        _add_into(acc, other._terms)
        return ParamPolynomial._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return ParamPolynomial._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = ParamPolynomial.coerce(other)
        acc = dict(self._terms)
        _add_into(acc, other._terms, -1)
        return ParamPolynomial._wrap(acc)

    def __rsub__(self, other):
        return ParamPolynomial.coerce(other) - self

    def __mul__(self, other):
        other = ParamPolynomial.coerce(other)
        return ParamPolynomial._wrap(_mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = ParamPolynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = ParamPolynomial.const(other)
        if not isinstance(other, ParamPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"ParamPolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for m in sorted(self._terms):
            c = self._terms[m]
            factors = []
            for name, e in zip(VARIABLES, m):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            if not factors:
                pieces.append(str(c))
            elif c == 1:
                pieces.append("*".join(factors))
            elif c == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{c}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")

    def to_json(self) -> list:
        out = []
        for m in sorted(self._terms):
            degrees = {name: e for name, e in zip(VARIABLES, m) if e}
            out.append({"degrees": degrees, "coefficient": self._terms[m]})
        return out


z = ParamPolynomial.var("z")
b = ParamPolynomial.var("b")
zeta = ParamPolynomial.var("zeta")
a = ParamPolynomial.var("a")
ONE = ParamPolynomial.const(1)
