import pytest
from hypothesis import given, strategies as st

import oracles
from basispart.errors import EnumerationLimitError, PreconditionError
from basispart.partitions import (
    DurfeeDecomposition,
    Partition,
    conjugate,
    count_at_most_k_parts,
    decompose,
    durfee_side,
    ferrers_diagram,
    hook_sums,
    is_primary,
    partitions_of,
    rank_vector,
)

ALL_UP_TO_20 = [p for n in range(21) for p in oracles.partitions(n)]


@st.composite
def partitions_st(draw, max_total=60):
    n = draw(st.integers(0, max_total))
    parts = []
    while n:
        x = draw(st.integers(1, n))
        parts.append(x)
        n -= x
    return Partition(parts)


def test_partition_normalizes():
    assert Partition([1, 3, 0, 2]) == (3, 2, 1)
    assert Partition().total == 0 and Partition().count == 0
    with pytest.raises(PreconditionError):
        Partition([2, -1])


@pytest.mark.parametrize("p, expected", [((3, 1), (2, 1, 1)), ((), ()), ((4, 3, 1), (3, 2, 2, 1))])
def test_conjugate_examples(p, expected):
    assert conjugate(p) == expected


@pytest.mark.parametrize("p, k", [((5, 5, 5, 5, 5), 5), ((), 0), ((3, 1), 1)])
def test_durfee_examples(p, k):
    assert durfee_side(p) == k


@pytest.mark.parametrize(
    "p, side, right, below",
    [((4, 2), 2, (2,), ()), ((3, 2, 1), 2, (1,), (1,)), ((2, 2), 2, (), ())],
)
def test_decompose_examples(p, side, right, below):
    assert decompose(p) == DurfeeDecomposition(side, Partition(right), Partition(below))


@pytest.mark.parametrize("p, r", [((4, 1), (2,)), ((3, 2, 1), (0, 0)), ((5, 5, 5, 5, 5), (0,) * 5), ((), ())])
def test_rank_vector_examples(p, r):
    assert rank_vector(p) == r


@pytest.mark.parametrize("p, h", [((2, 2), (3, 1)), ((4, 3), (5, 2)), ((1,), (1,))])
def test_hook_sum_examples(p, h):
    assert hook_sums(p) == h


def test_hook_sums_strict_rejects_non_primary():
    with pytest.raises(PreconditionError):
        hook_sums((3, 2, 1), strict=True)


def test_is_primary():
    assert is_primary((4, 2)) and is_primary(()) and not is_primary((3, 2, 1))


def test_quantities_match_oracles():
    for p in ALL_UP_TO_20:
        assert conjugate(p) == oracles.conjugate(p)
        assert durfee_side(p) == oracles.durfee(p)
        assert rank_vector(p) == oracles.ranks(p)


@given(partitions_st())
def test_conjugation_properties(p):
    assert conjugate(conjugate(p)) == p
    assert durfee_side(conjugate(p)) == durfee_side(p)
    assert rank_vector(conjugate(p)) == tuple(-r for r in rank_vector(p))
    assert decompose(p).reassemble() == p


@given(partitions_st())
def test_decomposition_invariants(p):
    d = decompose(p)
    assert len(d.right) <= d.side and all(x <= d.side for x in d.below)


@given(partitions_st())
def test_hooks_on_primaries(p):
    k = durfee_side(p)
    primary = Partition(p[:k])
    h = hook_sums(primary)
    assert sum(h) == primary.total
    assert all(x - y >= 2 for x, y in zip(h, h[1:]))


def test_enumeration_counts_and_order():
    assert len(list(partitions_of(4))) == 5
    assert list(partitions_of(0)) == [()]
    for n in range(16):
        got = list(partitions_of(n))
        assert got == sorted(oracles.partitions(n), reverse=True)


def test_constrained_enumeration_matches_filters():
    for n in range(18):
        everything = list(oracles.partitions(n))
        assert set(partitions_of(n, distinct_odd=True)) == {p for p in everything if oracles.is_pod(p)}
        assert set(partitions_of(n, min_gap=2)) == {p for p in everything if oracles.is_rr(p)}
        assert set(partitions_of(n, distinct=True)) == {p for p in everything if len(set(p)) == len(p)}
        assert set(partitions_of(n, max_part=3, max_count=4)) == {p for p in everything if (not p or p[0] <= 3) and len(p) <= 4}
        assert set(partitions_of(n, min_part=2)) == {p for p in everything if all(x >= 2 for x in p)}
        got = list(partitions_of(n, distinct_odd=True))
        assert got == sorted(got, reverse=True) and len(got) == len(set(got))
    assert (1, 1, 1, 1, 1, 1) not in set(partitions_of(6, distinct_odd=True))


def test_predicate_filter():
    assert list(partitions_of(5, predicate=lambda p: len(p) == 2)) == [(4, 1), (3, 2)]


def test_limit():
    with pytest.raises(EnumerationLimitError):
        list(partitions_of(130))
    with pytest.raises(EnumerationLimitError):
        list(partitions_of(11, limit=10))


def test_count_at_most_k_parts():
    for m in range(15):
        for k in range(6):
            assert count_at_most_k_parts(m, k) == sum(1 for p in oracles.partitions(m) if len(p) <= k)


def test_ferrers_diagram():
    assert ferrers_diagram((4, 2, 1)) == "** **\n**\n\n*"
    assert ferrers_diagram(()) == ""
