import pytest
from hypothesis import given, strategies as st

import oracles
from basispart.qseries import ParamPolynomial, Series, geometric_factor, inverse_pochhammer, pochhammer, q_binomial
from basispart.qseries import formulas as F
from basispart.qseries.catalogue import specialization_lattice
from basispart.qseries.poly import b, z, zeta

ORDER = 20

small_poly = st.builds(
    lambda c0, c1, c2: ParamPolynomial.const(c0) + z * c1 + b * zeta * c2,
    st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3),
)
series_st = st.lists(small_poly, min_size=ORDER + 1, max_size=ORDER + 1).map(lambda cs: Series(ORDER, cs))


def _ints(s):
    return s.integer_coefficients()


@given(series_st, series_st, series_st)
def test_ring_laws(x, y, w):
    assert (x + y) + w == x + (y + w)
    assert x + y == y + x
    assert (x * y) * w == x * (y * w)
    assert x * y == y * x
    assert x * (y + w) == x * y + x * w
    assert x - x == Series.zero(ORDER)
    assert x * Series.one(ORDER) == x


@given(series_st, st.integers(1, 6))
def test_division_inverts_multiplication(x, j):
    assert x.times_one_minus(j).divide_one_minus(j) == x


def test_polynomial_basics():
    p = (1 + z) ** 3
    assert p.coefficients_in("z") == [1, 3, 3, 1]
    assert p.evaluate(z=-1).is_zero()
    assert ParamPolynomial.const(0).terms == {}
    assert ParamPolynomial({(0, 0, 0, 0): 0}).is_zero()
    assert (2 * z * b - z).to_json() == [
        {"degrees": {"z": 1}, "coefficient": -1},
        {"degrees": {"z": 1, "b": 1}, "coefficient": 2},
    ]
    with pytest.raises(TypeError):
        ParamPolynomial.coerce(0.5)


def test_geometric_factor_examples():
    assert _ints(geometric_factor(1, 1, 4)) == [1, 1, 1, 1, 1]
    assert _ints(geometric_factor(2, 1, 5)) == [1, 0, 1, 0, 1, 0]
    numerator = Series(4, [1, 1])
    assert _ints(geometric_factor(1, numerator, 4)) == [1, 2, 2, 2, 2]
    with pytest.raises(ValueError):
        geometric_factor(0, 1, 4)


def test_pochhammer_examples():
    assert _ints(pochhammer(2, 5)) == [1, -1, -1, 1, 0, 0]
    s = pochhammer(1, 3, coeff=-z)
    assert s.coefficient(0) == 1 and s.coefficient(1) == z and s.coefficient(2).is_zero()
    assert _ints(pochhammer(2, 6, coeff=-2, start=1, step=2)) == [1, 2, 0, 2, 4, 0, 0]
    assert pochhammer(0, 5) == Series.one(5)
    assert pochhammer(4, 10) * inverse_pochhammer(4, 10) == Series.one(10)


def test_q_binomial_examples():
    assert _ints(q_binomial(2, 1)) == [1, 1]
    assert _ints(q_binomial(7, 0)) == [1]
    assert _ints(q_binomial(4, 2)) == [1, 1, 2, 1, 1]
    with pytest.raises(ValueError):
        q_binomial(3, 4)
    with pytest.raises(ValueError):
        q_binomial(4, 2, order=3)


def test_q_binomial_counts_partitions_in_a_box():
    for m in range(8):
        for j in range(m + 1):
            got = _ints(q_binomial(m, j))
            want = [sum(1 for p in oracles.partitions(n) if len(p) <= j and (not p or p[0] <= m - j))
                    for n in range(j * (m - j) + 1)]
            assert got == want


def test_basis_series_against_oracle():
    order = 18
    per_k = {}
    for n in range(order + 1):
        for p in oracles.partitions(n):
            if oracles.is_basis(p):
                k, s = oracles.durfee(p), oracles.signature(p)
                per_k.setdefault(k, [ParamPolynomial.const(0)] * (order + 1))
                per_k[k][n] = per_k[k][n] + z ** s
    for k, coeffs in per_k.items():
        assert F.signature_gf(order, k) == Series(order, coeffs)
        assert F.basis_gf(order, k) == F.signature_gf(order, k).substitute(z=1)


def test_durfee_and_rr_series_against_oracle():
    order = 16
    for k in range(4):
        durfee = [sum(1 for p in oracles.partitions(n) if oracles.durfee(p) == k) for n in range(order + 1)]
        rr = [sum(1 for p in oracles.partitions(n) if len(p) == k and oracles.is_rr(p)) for n in range(order + 1)]
        assert _ints(F.durfee_square_gf(order, k)) == durfee
        assert _ints(F.rogers_ramanujan_gf(order, k)) == rr
        assert F.durfee_square_from_basis_gf(order, k) == F.durfee_square_gf(order, k)


def test_partial_theta():
    assert _ints(F.partial_theta(9)) == [1, 1, 0, 0, 1, 0, 0, 0, 0, 1]


def test_lattice_small_order():
    checks = specialization_lattice(30)
    assert checks and all(c.ok for c in checks), [str(c) for c in checks if not c.ok]
