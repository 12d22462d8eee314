from collections import Counter, defaultdict

import pytest
from hypothesis import given, strategies as st

import oracles
from basispart.errors import PreconditionError
from basispart.partitions import partitions_of
from basispart.pod import (
    PodPartition,
    TwoModularGraph,
    allowable_hooks,
    class_vector,
    column_sizes,
    construct_minimal,
    construct_minimal_steps,
    corrected_gap_count,
    ell_signature,
    is_minimal_basis,
    is_pod,
    is_pod_basis,
    is_special,
    literal_gap_count,
    pod_census,
    pod_durfee_side,
    pod_hook_sums,
    pod_rank_vector,
    pod_spawn_basis,
    proviso_hooks,
    psi,
    spawn_from_minimal,
    special_hook_map,
    special_to_primary,
)
from basispart.qseries.poly import b

POD_UP_TO_24 = [p for n in range(25) for p in oracles.pod_partitions(n)]


def _primaries(n):
    return [p for p in oracles.pod_partitions(n) if len(p) == oracles.pod_durfee(p)]


def test_pod_partition_rejects_repeated_odd_parts():
    assert is_pod((5, 3, 2, 2)) and not is_pod((3, 3))
    with pytest.raises(PreconditionError):
        PodPartition((3, 3))


@pytest.mark.parametrize("p, r", [((4, 3), (0, 0)), ((1,), (0,)), ((2,), (0,))])
def test_rank_examples(p, r):
    assert pod_rank_vector(p) == r


def test_graph_quantities_match_oracle():
    for p in POD_UP_TO_24:
        assert pod_durfee_side(p) == oracles.pod_durfee(p)
        assert pod_rank_vector(p) == oracles.pod_ranks(p)
        assert column_sizes(p) == tuple(sum(c) for c in oracles.pod_columns(p))
        assert is_pod_basis(p) == oracles.pod_is_basis(p)
        assert pod_hook_sums(p) == oracles.pod_hooks(p)
        (_, _), (sizes, lengths) = oracles.pod_right_and_below(p)
        assert psi(p) == len(set(sizes)) and ell_signature(p) == len(set(lengths))


def test_two_modular_graph():
    g = TwoModularGraph.of((5,))
    assert (g.row_lengths, g.row_sizes) == ((3,), (5,))
    assert TwoModularGraph.of((4, 3)).corner == 1 and TwoModularGraph.of((4, 4)).corner == 2
    assert TwoModularGraph.of((5, 4, 1)).render() == "22 1\n22\n\n1"
    assert TwoModularGraph.of((4, 3)).to_json()["column_sizes"] == [4, 3]


def test_conjugation_closure():
    for n in range(41):
        for p in partitions_of(n, distinct_odd=True):
            q = TwoModularGraph.of(p).conjugate()
            assert is_pod(q) and q.total == n
            assert TwoModularGraph.of(q).conjugate() == p


@pytest.mark.parametrize("p, basis, minimal", [((4, 4), True, False), ((4, 3), True, True), ((3, 2), True, False)])
def test_basis_and_minimal_examples(p, basis, minimal):
    assert is_pod_basis(p) is basis and is_minimal_basis(p) is minimal


def test_minimal_is_unique_fiber_minimum():
    fibers = defaultdict(list)
    for p in POD_UP_TO_24:
        fibers[oracles.pod_ranks(p)].append(p)
    for r, members in fibers.items():
        low = min(sum(p) for p in members)
        lightest = [p for p in members if sum(p) == low]
        assert len(lightest) == 1
        for p in members:
            assert is_minimal_basis(p) == (p == lightest[0])
        assert construct_minimal(r) == lightest[0]


@pytest.mark.parametrize("r, p", [
    ((0, 0), (4, 3)),
    ((0,) * 5, (10, 10, 10, 10, 9)),
    ((1, -4, 1, 2, -5), (23, 18, 18, 18, 10, 10, 10, 9, 5, 4, 4)),
    ((), ()),
])
def test_construct_examples(r, p):
    assert construct_minimal(r) == p


def test_construct_worked_vector_steps():
    p, steps = construct_minimal_steps((1, -4, 1, 2, -5))
    assert p.total == 129
    assert steps[:2] == [(-6, -6, -6, -6, -5), (2, 2, 2, 2, -5)]
    assert steps[-1] == (1, -4, 1, 2, -5)


@given(st.lists(st.integers(-7, 7), max_size=6))
def test_construct_roundtrip(r):
    p = construct_minimal(r)
    assert pod_rank_vector(p) == tuple(r) and is_minimal_basis(p)


def test_spawn_examples():
    assert allowable_hooks((1,)) == 1 and spawn_from_minimal((1,)) == [(1,), (2,)]
    assert allowable_hooks((4, 3)) == 1 and spawn_from_minimal((4, 3)) == [(4, 3), (4, 4)]
    assert (10, 10, 10, 10, 10) in spawn_from_minimal((10, 10, 10, 10, 9))
    with pytest.raises(PreconditionError):
        spawn_from_minimal((4, 4))


def test_adjacency_proviso_undercounts():
    # the literal proviso sees no movable hook in (6,5), yet its fiber has two members
    assert proviso_hooks((6, 5)) == 0
    assert allowable_hooks((6, 5)) == 1
    assert pod_rank_vector((8, 6, 3)) == pod_rank_vector((6, 5))
    assert spawn_from_minimal((6, 5)) == [(6, 5), (8, 6, 3)]


def test_spawn_from_minimal_covers_basis_once():
    seen = Counter()
    for p in POD_UP_TO_24:
        if is_minimal_basis(p):
            out = spawn_from_minimal(p)
            assert len(out) == 2 ** allowable_hooks(p) == len(set(out))
            assert all(pod_rank_vector(q) == pod_rank_vector(p) for q in out)
            seen.update(q for q in out if q.total <= 24)
    basis = [p for p in POD_UP_TO_24 if oracles.pod_is_basis(p)]
    assert set(seen) == set(basis) and set(seen.values()) == {1}


def test_class_vector_reassembles():
    for p in POD_UP_TO_24:
        if is_pod_basis(p):
            assert class_vector(p).assemble() == p


@pytest.mark.parametrize("p, s", [((2,), (2,)), ((4, 3), (6, 1)), ((6, 4), (8, 2))])
def test_special_examples(p, s):
    assert special_hook_map(p) == s and special_to_primary(s) == p


def test_special_map_is_bijection_onto_gap_set():
    for n in range(31):
        image = {special_hook_map(p) for p in _primaries(n)}
        expected = {s for s in oracles.partitions(n) if oracles.is_special(s)}
        assert image == expected
        for s in expected:
            assert is_special(s) and special_hook_map(special_to_primary(s)) == s
    with pytest.raises(PreconditionError):
        special_to_primary((5, 1))
    with pytest.raises(PreconditionError):
        special_hook_map((2, 2, 2))


def test_pod_spawn_examples():
    assert pod_spawn_basis((3,)) == [(3,), (2, 1)]
    assert pod_spawn_basis((2,)) == [(2,)]
    # a single member: (4,4) is itself primary, so nothing slides out of (4,3)
    assert pod_spawn_basis((4, 3)) == [(4, 3)]
    assert literal_gap_count((6, 1)) == 1 and corrected_gap_count((6, 1)) == 0


def test_pod_spawn_covers_basis_once():
    for n in range(26):
        seen = Counter()
        for p in _primaries(n):
            out = pod_spawn_basis(p)
            assert len(out) == 2 ** corrected_gap_count(special_hook_map(p))
            seen.update(out)
        basis = [p for p in oracles.pod_partitions(n) if oracles.pod_is_basis(p)]
        assert set(seen) == set(basis) and set(seen.values()) <= {1}


def test_census_examples():
    assert pod_census(1).basis_signed() == b
    assert pod_census(2).basis_signed() == 1
    assert pod_census(7).minimal_signed() == 1
    c = pod_census(12)
    assert c.basis_total >= c.minimal_total and all(v > 0 for v in c.basis.values())
    assert set(c.to_json()) >= {"n", "basis", "minimal", "verdicts"}


def test_census_matches_oracle():
    for n in range(21):
        basis = Counter()
        minimal = Counter()
        for p in oracles.pod_partitions(n):
            if oracles.pod_is_basis(p):
                (_, _), (sizes, lengths) = oracles.pod_right_and_below(p)
                basis[(len(set(sizes)), sum(1 for x in p if x % 2))] += 1
                if is_minimal_basis(p):
                    minimal[len(set(lengths))] += 1
        c = pod_census(n)
        assert dict(c.basis) == dict(basis) and dict(c.minimal) == dict(minimal)


def test_parity_verdicts():
    for n in range(51):
        assert all(pod_census(n).verdicts().values())
