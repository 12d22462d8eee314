import pytest
from hypothesis import given, strategies as st

import oracles
from basispart.basis import (
    Block,
    Side,
    basis_census,
    basis_partitions_of,
    blocks_of,
    construct_basis,
    extended_deltas,
    fiber_count,
    franklin_step,
    franklin_type,
    is_basis,
    negative_delta_count,
    predicted_fiber_count,
    signature,
)
from basispart.errors import EnumerationLimitError, FixedPointError, PreconditionError
from basispart.partitions import conjugate, rank_vector


def _is_square(p):
    return len(set(p)) <= 1 and (not p or p[0] == len(p))


WORKED = (17, 12, 12, 12, 5, 5, 5, 5, 3, 3, 3, 2, 2, 2)


@pytest.mark.parametrize("p, expected", [((3, 1), False), ((2, 2), True), ((6, 2, 2), True)])
def test_is_basis_examples(p, expected):
    assert is_basis(p) is expected


def test_is_basis_matches_definition():
    for n in range(21):
        for p in oracles.partitions(n):
            assert is_basis(p) == oracles.is_basis(p)


@pytest.mark.parametrize("p, s", [((5, 5, 5, 5, 5), 0), ((2, 2, 1, 1), 1), (WORKED, 3)])
def test_signature_examples(p, s):
    assert signature(p) == s


def test_signature_rejects_non_basis():
    with pytest.raises(PreconditionError):
        signature((3, 1))


def test_signature_equals_negative_deltas():
    for n in range(31):
        for p in basis_partitions_of(n):
            assert signature(p) == negative_delta_count(rank_vector(p)) == oracles.signature(p)


def test_extended_deltas():
    assert extended_deltas((3, -2, 1, 4, -3)) == (5, -3, -3, 7, -3)
    assert extended_deltas(()) == ()


@pytest.mark.parametrize("r, p", [((0,) * 5, (5,) * 5), ((), ()), ((3, -2, 1, 4, -3), WORKED)])
def test_construct_examples(r, p):
    assert construct_basis(r) == p


def test_construct_is_fiber_minimum():
    # every vector with |r_i| <= 6 and length <= 4
    sigma = {r: construct_basis(r) for r in oracles.rank_vectors(4, 6)}
    for r, p in sigma.items():
        assert rank_vector(p) == r and is_basis(p)
    top = max(p.total for p in sigma.values())
    # no partition of a smaller total carries the same rank vector
    best = {}
    for n in range(min(top, 40) + 1):
        for p in oracles.partitions(n):
            best.setdefault(oracles.ranks(p), n)
    for r, p in sigma.items():
        if r in best:
            assert best[r] == p.total
        else:
            assert p.total > 40


@given(st.lists(st.integers(-8, 8), max_size=6))
def test_construct_roundtrip(r):
    p = construct_basis(r)
    assert rank_vector(p) == tuple(r) and is_basis(p)


def test_blocks_examples():
    assert blocks_of((4, 3)) == [Block(Side.RIGHT, 2, 1), Block(Side.RIGHT, 1, 1)]
    assert blocks_of((2, 2)) == []
    assert blocks_of((2, 2, 1, 1)) == [Block(Side.BOTTOM, 1, 2)]


def test_blocks_have_distinct_lengths_on_basis():
    for n in range(25):
        for p in basis_partitions_of(n):
            lengths = [b.length for b in blocks_of(p)]
            assert len(lengths) == len(set(lengths))


def test_franklin_examples():
    assert franklin_step((4,)) == (1, 1, 1, 1)
    assert franklin_step((4, 2)) == (2, 2, 1, 1)
    assert franklin_step((2, 2, 1, 1)) == (4, 2)
    assert franklin_type((4, 2)) is Side.RIGHT
    with pytest.raises(FixedPointError):
        franklin_step((2, 2))
    with pytest.raises(PreconditionError):
        franklin_step((3, 1))


def test_franklin_is_parity_flipping_involution():
    for n in range(31):
        for p in basis_partitions_of(n):
            if _is_square(p):
                with pytest.raises(FixedPointError):
                    franklin_step(p)
                continue
            q = franklin_step(p)
            assert q.total == n and is_basis(q)
            assert (signature(p) - signature(q)) % 2 == 1
            assert franklin_step(q) == p


@pytest.mark.parametrize("r, n, count", [((0,), 3, 1), ((1,), 6, 1), ((0,), 4, 0)])
def test_fiber_examples(r, n, count):
    assert fiber_count(r, n) == (count, count)


def test_fiber_at_sigma_is_one():
    for r in oracles.rank_vectors(2, 2):
        sigma = construct_basis(r).total
        assert predicted_fiber_count(r, sigma) == 1


def test_fiber_limit():
    with pytest.raises(EnumerationLimitError):
        fiber_count((0,), 200)


def test_census_examples():
    assert basis_census(2).entries == {(1, 0): 1, (1, 1): 1}
    c4 = basis_census(4)
    assert c4.total == 3 and c4.signed_total() == 1
    assert basis_census(0).entries == {(0, 0): 1}
    assert basis_census(2).to_json() == {"n": 2, "entries": [{"k": 1, "s": 0, "count": 1}, {"k": 1, "s": 1, "count": 1}]}


def test_census_matches_oracle():
    for n in range(21):
        expected = {}
        for p in oracles.partitions(n):
            if oracles.is_basis(p):
                key = (oracles.durfee(p), oracles.signature(p))
                expected[key] = expected.get(key, 0) + 1
        assert dict(basis_census(n).entries) == expected


def test_parity_and_conjugation():
    for n in range(41):
        c = basis_census(n)
        square = int(round(n ** 0.5)) ** 2 == n
        assert c.signed_total() == int(square)
        if not square:
            assert c.total % 2 == 0
    for n in range(25):
        for p in basis_partitions_of(n):
            q = conjugate(p)
            assert is_basis(q)
            assert (q == p) == _is_square(p)


def test_direct_member_enumeration_matches_filter():
    from basispart.basis import _basis_members

    for n in range(31):
        direct = sorted(p for p, _ in _basis_members(n))
        assert direct == sorted(basis_partitions_of(n))
        assert all(profile == (oracles.durfee(p), signature(p)) for p, profile in _basis_members(n))
