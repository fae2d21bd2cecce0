from itertools import combinations

import pytest

from topocheck.core import (
    PointSet,
    closure,
    discrete,
    indiscrete,
    interior,
    kernel,
    product,
    subspace,
    sum_spaces,
    validate_topology,
)
from topocheck.enumeration import spaces_up_to
from topocheck.errors import EmptyCarrier, NotATopology, SizeLimitExceeded, WidthMismatch
from topocheck.maps import map_classify

from .conftest import D2, E, I2, SIERPINSKI as S, empty, full, ps


def union_closure(masks):
    """Hand oracle: every union of a subfamily."""
    out = {0}
    for k in range(1, len(masks) + 1):
        for combo in combinations(masks, k):
            u = 0
            for m in combo:
                u |= m
            out.add(u)
    return out


def test_validate_strict_example():
    sp = validate_topology(3, [PointSet(3, 0b011)])
    assert sp.open_masks == (0, 0b011, 0b111)
    assert sp == E


def test_validate_empty_family_is_indiscrete():
    assert validate_topology(2, []) == I2


def test_validate_strict_rejects_missing_union():
    with pytest.raises(NotATopology) as err:
        validate_topology(3, [0b001, 0b010])
    assert err.value.failed == "union"
    assert err.value.pair == (0b001, 0b010)


def test_validate_complete_mode():
    sp = validate_topology(3, [0b001, 0b010], complete=True)
    # closing {0, {a}, {b}, X} under union and intersection by hand
    assert set(sp.open_masks) == {0, 0b001, 0b010, 0b011, 0b111}
    assert len(sp.opens) == 5


def test_validate_intersection_failure():
    with pytest.raises(NotATopology) as err:
        validate_topology(3, [0b011, 0b110, 0b111])
    assert err.value.failed == "intersection"


def test_width_checks():
    with pytest.raises(WidthMismatch):
        validate_topology(3, [PointSet(2, 1)])
    with pytest.raises(WidthMismatch):
        interior(E, PointSet(2, 1))


def test_interior_examples():
    assert interior(E, ps(E, "bc")) == empty(E)
    assert interior(S, ps(S, ["0"])) == ps(S, ["0"])
    for sp in (E, S, I2, D2):
        assert interior(sp, full(sp)) == full(sp)


def test_closure_examples():
    assert closure(E, ps(E, "c")) == ps(E, "c")
    assert closure(E, ps(E, "a")) == full(E)
    assert closure(E, empty(E)) == empty(E)


def test_kernel_examples():
    assert kernel(E, ps(E, "c")) == full(E)
    assert kernel(S, ps(S, ["0"])) == ps(S, ["0"])
    assert kernel(E, full(E)) == full(E)


def test_product_sierpinski_square():
    sq, projections = product([S, S])
    # the four basis boxes of S x S, closed under union
    basis = [0b0001, 0b0011, 0b0101, 0b1111]
    assert set(sq.open_masks) == union_closure(basis)
    assert len(sq.open_masks) == 6
    assert sq.labels == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
    assert [p.assign for p in projections] == [(0, 0, 1, 1), (0, 1, 0, 1)]


def test_product_indiscrete():
    sq, _ = product([I2, I2])
    assert sq == indiscrete(4)


def test_product_size_limit():
    big = indiscrete(9)
    with pytest.raises(SizeLimitExceeded):
        product([big, big])


def test_sum_examples():
    total, inj = sum_spaces([S, S])
    assert len(total.open_masks) == 9
    assert sum_spaces([I2])[0] == I2
    assert [f.assign for f in inj] == [(0, 1), (2, 3)]


def test_sum_size_limit():
    with pytest.raises(SizeLimitExceeded):
        sum_spaces([indiscrete(40), indiscrete(30)])


def test_subspace_examples():
    sub = subspace(E, ps(E, "bc"))
    assert sub.labels == ("b", "c")
    assert sub.open_masks == (0, 0b01, 0b11)
    assert subspace(E, full(E)) == E
    assert subspace(S, ps(S, ["1"])).n == 1
    with pytest.raises(EmptyCarrier):
        subspace(E, empty(E))


def test_canonical_order():
    sp = discrete(3)
    keys = [(bin(m).count("1"), m) for m in sp.open_masks]
    assert keys == sorted(keys)


def test_equality_ignores_labels():
    assert validate_topology(3, [0b011]) == E
    assert hash(validate_topology(3, [0b011])) == hash(E)


@pytest.fixture(scope="module")
def small_spaces():
    return spaces_up_to(4)


def test_operator_invariants(small_spaces):
    for sp in small_spaces:
        for a in range(1 << sp.n):
            A = PointSet(sp.n, a)
            i, c, k = interior(sp, A), closure(sp, A), kernel(sp, A)
            assert i.issubset(A) and A.issubset(c) and A.issubset(k)
            assert interior(sp, i) == i and closure(sp, c) == c
            assert c == ~interior(sp, ~A)
            by_union = 0
            for u in sp.open_masks:
                if u & ~a == 0:
                    by_union |= u
            assert i.bits == by_union


def test_min_nbhd_is_smallest_open(small_spaces):
    for sp in small_spaces:
        for p, row in enumerate(sp.min_nbhd):
            assert row in sp.open_masks
            assert all(row & ~u == 0 for u in sp.open_masks if u >> p & 1)


def test_projections_surjective_continuous_open():
    for x in spaces_up_to(2):
        for y in spaces_up_to(2):
            _, projections = product([x, y])
            for p in projections:
                r = map_classify(p)
                assert r.surjective and r.continuous and r.open


def test_subspace_of_sum_recovers_parts():
    parts = spaces_up_to(2)
    for x in parts:
        for y in parts:
            total, inj = sum_spaces([x, y])
            for part, f in zip((x, y), inj):
                assert subspace(total, PointSet.of(total.n, f.assign)) == part
