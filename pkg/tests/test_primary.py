import pytest

import oracles
from basispart.basis import basis_census, basis_partitions_of
from basispart.errors import PreconditionError, SlideError
from basispart.partitions import durfee_side, hook_sums
from basispart.primary import (
    basis_by_spawning,
    primaries_of,
    primary_to_rr,
    rr_partitions_of,
    rr_to_primary,
    signature_fiber,
    slide_all,
    spawn_basis,
    t_primary,
    t_rr,
    weighted_census,
)
from basispart.qseries.poly import ParamPolynomial, z


@pytest.mark.parametrize("p, q", [((2, 2), (3, 1)), ((1,), (1,)), ((4, 2), (5, 1)), ((), ())])
def test_hook_bijection_examples(p, q):
    assert primary_to_rr(p) == q
    assert rr_to_primary(q) == p


def test_bijection_preconditions():
    with pytest.raises(PreconditionError):
        primary_to_rr((3, 2, 1))
    with pytest.raises(PreconditionError):
        rr_to_primary((3, 2))


def test_bijection_roundtrips():
    for n in range(31):
        for k in range(7):
            prim = primaries_of(n, k)
            rr = rr_partitions_of(n, k)
            assert sorted(primary_to_rr(p) for p in prim) == sorted(rr)
            for p in prim:
                assert rr_to_primary(primary_to_rr(p)) == p
            for q in rr:
                assert primary_to_rr(rr_to_primary(q)) == q


def test_enumerators_match_oracle():
    for n in range(19):
        everything = list(oracles.partitions(n))
        for k in range(5):
            assert set(primaries_of(n, k)) == {p for p in everything if len(p) == k and oracles.durfee(p) == k}
            assert set(rr_partitions_of(n, k)) == {p for p in everything if len(p) == k and oracles.is_rr(p)}


def test_slide_examples():
    assert slide_all((4, 2), 1) == (2, 2, 1, 1)
    assert slide_all((4, 3), 2) == (3, 2, 2)
    assert slide_all((3, 2, 2), 1) == (2, 2, 2, 1)


def test_slide_errors():
    with pytest.raises(SlideError) as err:
        slide_all((5, 5, 5, 5, 5), 1)
    assert err.value.reason == "no-such-column"
    with pytest.raises(SlideError) as err:
        slide_all((3, 1), 1)
    assert err.value.reason == "would-collide"
    with pytest.raises(SlideError) as err:
        slide_all((4, 4, 2), 2)
    assert err.value.reason == "would-collide"
    # not basis, though length 2 itself does not collide
    with pytest.raises(PreconditionError):
        slide_all((4, 3, 1), 2)


def test_slide_preserves_invariants():
    for n in range(21):
        for p in basis_partitions_of(n):
            k = durfee_side(p)
            right = [x - k for x in p[:k] if x > k]
            for ell in set(oracles.conjugate(tuple(right))):
                if ell in p[k:]:
                    continue
                q = slide_all(p, ell)
                assert q.total == n and durfee_side(q) == k and hook_sums(q) == hook_sums(p)


def test_spawn_examples():
    assert spawn_basis((4, 2)) == [(4, 2), (2, 2, 1, 1)]
    assert spawn_basis((5, 5, 5, 5, 5)) == [(5, 5, 5, 5, 5)]
    assert spawn_basis((4, 3)) == [(4, 3), (3, 3, 1), (3, 2, 2), (2, 2, 2, 1)]
    with pytest.raises(PreconditionError):
        spawn_basis((3, 2, 1))


def test_spawning_covers_basis_exactly_once():
    for n in range(31):
        seen = basis_by_spawning(n)
        assert all(v == 1 for v in seen.values())
        assert set(seen) == set(basis_partitions_of(n))


def test_t_agrees_through_bijection():
    for n in range(31):
        for k in range(6):
            for p in primaries_of(n, k):
                assert t_primary(p) == t_rr(primary_to_rr(p))
                assert len(spawn_basis(p)) == 2 ** t_primary(p)


def test_weighted_examples():
    assert weighted_census(6, 2, "two_pow_t") == 4
    assert weighted_census(4, 2, "two_pow_t") == 1
    assert weighted_census(6, 2, "one_plus_z_pow_t") == 2 * (1 + z)
    with pytest.raises(PreconditionError):
        weighted_census(6, 2, "binom_t_choose_j")


def test_weighted_census_matches_basis_census():
    for n in range(36):
        c = basis_census(n)
        for k in range(7):
            assert weighted_census(n, k, "two_pow_t") == c.by_side(k)
            poly = weighted_census(n, k, "one_plus_z_pow_t")
            assert poly.evaluate(z=1) == c.by_side(k)
            assert poly.evaluate(z=0) == len(rr_partitions_of(n, k))
            for s in range(7):
                assert poly.coefficient(z=s) == c.entries.get((k, s), 0)
                assert weighted_census(n, k, "binom_t_choose_j", s) == c.entries.get((k, s), 0)


@pytest.mark.parametrize("n, j, count", [(6, 1, 3), (4, 1, 1)])
def test_signature_fiber_examples(n, j, count):
    assert signature_fiber(n, j) == count


def test_signature_fiber_zero_is_rr_count():
    for n in range(30):
        assert signature_fiber(n, 0) == sum(len(rr_partitions_of(n, k)) for k in range(7))


def test_signature_fiber_all():
    for n in range(36):
        total = sum(signature_fiber(n, j) for j in range(8))
        assert total == basis_census(n).total


def test_weighted_tallies_are_polynomials():
    assert isinstance(weighted_census(9, 2, "one_plus_z_pow_t"), ParamPolynomial)
