import itertools
import random

import pytest

from unitary_schemes.fields import build_field
from unitary_schemes.space import (
    SCAN_BUDGET,
    enumerate_isotropic,
    hermitian_inner,
    hyperbolic_partner,
    isotropic_count,
    standard_isotropic_vector,
    witness_pair,
)

from _reference import RefField, inner, isotropic_vectors

COUNTS = {
    (2, 2): 9, (3, 2): 27, (4, 2): 135, (5, 2): 495, (6, 2): 2079,
    (2, 3): 32, (3, 3): 224, (4, 3): 2240,
}


@pytest.mark.parametrize("n,q", sorted(COUNTS))
def test_closed_count_matches_enumeration(n, q, get_space):
    assert isotropic_count(n, q) == COUNTS[n, q]
    assert get_space(n, q).size == COUNTS[n, q]


@pytest.mark.parametrize("n,q,count", [(5, 3, 19520), (6, 3, 177632)])
def test_counts_at_larger_q3_instances(n, q, count):
    assert isotropic_count(n, q) == count
    assert enumerate_isotropic(n, q).size == count


def test_degenerate_dimensions():
    assert isotropic_count(0, 2) == 0
    assert isotropic_count(1, 5) == 0
    assert enumerate_isotropic(1, 2).size == 0
    with pytest.raises(ValueError):
        isotropic_count(-1, 2)


def test_budget_rejection():
    with pytest.raises(ValueError, match="budget"):
        enumerate_isotropic(13, 2)  # 4^13 > 2^24
    assert 4**13 > SCAN_BUDGET


@pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (2, 3)])
def test_enumeration_matches_reference_order(n, q, get_space):
    ref = RefField(q)
    expected = [tuple(ref.id_of(c) for c in vec) for vec in isotropic_vectors(ref, n)]
    got = [tuple(int(c) for c in row) for row in get_space(n, q).vectors]
    assert got == expected


@pytest.mark.parametrize("n,q", [(4, 2), (3, 3)])
def test_enumeration_sorted_and_isotropic(n, q, get_space):
    us = get_space(n, q)
    rows = [tuple(int(c) for c in row) for row in us.vectors]
    assert rows == sorted(rows)
    assert len(set(rows)) == len(rows)
    for vec in rows[:: max(1, len(rows) // 50)]:
        assert us.is_isotropic(vec)
    for idx, vec in enumerate(rows):
        assert us.index_of(vec) == idx


def test_index_of_rejects_outsiders(get_space):
    us = get_space(2, 2)
    with pytest.raises(ValueError):
        us.index_of((1, 0))  # <x,x> = 1, not isotropic
    with pytest.raises(ValueError):
        us.index_of((1, 1, 0))


@pytest.mark.parametrize("q", [2, 3])
def test_hermitian_conjugate_symmetry(q, get_space):
    us = get_space(2, q)
    ft = us.ft
    for x in us.vectors:
        for y in us.vectors:
            assert hermitian_inner(ft, y, x) == ft.conj(hermitian_inner(ft, x, y))


def test_hermitian_examples():
    ft = build_field(2)
    assert hermitian_inner(ft, (1, 0), (1, 0)) == 1
    assert hermitian_inner(ft, (1, 1), (1, 1)) == 0
    with pytest.raises(ValueError):
        hermitian_inner(ft, (1, 0), (1, 0, 0))


def test_hermitian_sesquilinear():
    ft = build_field(3)
    rng = random.Random(7)
    for _ in range(50):
        x = tuple(rng.randrange(ft.order) for _ in range(3))
        y = tuple(rng.randrange(ft.order) for _ in range(3))
        lam = rng.randrange(1, ft.order)
        lx = tuple(ft.mul(lam, c) for c in x)
        ly = tuple(ft.mul(lam, c) for c in y)
        assert hermitian_inner(ft, lx, y) == ft.mul(lam, hermitian_inner(ft, x, y))
        assert hermitian_inner(ft, x, ly) == ft.mul(ft.conj(lam), hermitian_inner(ft, x, y))


def test_hermitian_against_reference():
    ref = RefField(3)
    ft = build_field(3)
    rng = random.Random(11)
    for _ in range(30):
        x = tuple(rng.randrange(ft.order) for _ in range(2))
        y = tuple(rng.randrange(ft.order) for _ in range(2))
        rx = tuple(ref.elements[c] for c in x)
        ry = tuple(ref.elements[c] for c in y)
        assert hermitian_inner(ft, x, y) == ref.id_of(inner(ref, rx, ry))


def test_hyperbolic_partner_exhaustive_4_2(get_space):
    us = get_space(4, 2)
    ft = us.ft
    for u in us.vectors:
        u = tuple(int(c) for c in u)
        v = us.hyperbolic_partner(u)
        assert hermitian_inner(ft, u, v) == 1
        assert hermitian_inner(ft, v, v) == 0
        assert us.hyperbolic_partner(u) == v  # deterministic


def test_hyperbolic_partner_spot_3_3(get_space):
    us = get_space(3, 3)
    ft = us.ft
    for u in us.vectors[::17]:
        u = tuple(int(c) for c in u)
        v = us.hyperbolic_partner(u)
        assert hermitian_inner(ft, u, v) == 1
        assert hermitian_inner(ft, v, v) == 0


def test_hyperbolic_partner_never_proportional(get_space):
    us = get_space(3, 2)
    ft = us.ft
    for u in us.vectors:
        u = tuple(int(c) for c in u)
        v = us.hyperbolic_partner(u)
        assert all(v != us.scalar_multiple(lam, u) for lam in range(1, ft.order))


def test_hyperbolic_partner_rejects_bad_input():
    ft = build_field(2)
    with pytest.raises(ValueError):
        hyperbolic_partner(ft, 2, (1, 0))  # not isotropic
    with pytest.raises(ValueError):
        hyperbolic_partner(ft, 2, (0, 0))


def test_standard_vector_is_isotropic():
    for q in (2, 3, 4, 5):
        ft = build_field(q)
        x = standard_isotropic_vector(ft, 4)
        assert hermitian_inner(ft, x, x) == 0
        assert x[0] == ft.one and all(c == 0 for c in x[2:])


def test_witness_pair_identity_and_perp():
    x, y = witness_pair(0, 4, 2)
    assert x == y == (1, 1, 0, 0)
    x, y = witness_pair(6, 4, 2)
    assert (x, y) == ((1, 1, 0, 0), (0, 0, 1, 1))
    ft = build_field(2)
    assert hermitian_inner(ft, x, y) == 0


def test_witness_pair_perp_requires_dim_4():
    with pytest.raises(ValueError, match="dimension"):
        witness_pair(6, 3, 2)
    with pytest.raises(ValueError, match="dimension"):
        witness_pair(2 * 24, 2, 5)


def test_witness_pair_range_checks():
    with pytest.raises(ValueError):
        witness_pair(7, 4, 2)
    with pytest.raises(ValueError):
        witness_pair(-1, 4, 2)
    with pytest.raises(ValueError):
        witness_pair(0, 1, 2)


@pytest.mark.parametrize("n,q", [(2, 2), (4, 2), (2, 3)])
def test_witness_pairs_are_isotropic(n, q, get_space):
    us = get_space(n, q)
    rank = 2 * q * q - 2 + (1 if n >= 4 else 0)
    for l in range(rank):
        x, y = witness_pair(l, n, q)
        assert us.is_isotropic(x) and us.is_isotropic(y)
        us.index_of(x), us.index_of(y)


def test_unit_scaling_preserves_isotropy(get_space):
    us = get_space(3, 2)
    ft = us.ft
    units = [lam for lam in range(1, ft.order) if ft.norm(lam) == ft.one]
    assert len(units) == ft.q + 1
    for x in us.vectors:
        x = tuple(int(c) for c in x)
        for lam in units:
            assert us.is_isotropic(us.scalar_multiple(lam, x))


def test_scan_order_is_code_order(get_space):
    # lexicographic on ids, first coordinate most significant
    us = get_space(2, 3)
    codes = [us._encode(vec) for vec in us.vectors]
    assert codes == sorted(codes)
    full = list(itertools.product(range(us.ft.order), repeat=2))
    positions = [full.index(tuple(int(c) for c in vec)) for vec in us.vectors]
    assert positions == sorted(positions)
