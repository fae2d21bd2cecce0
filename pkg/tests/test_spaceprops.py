from itertools import product as cartesian

import pytest

from topocheck.core import PointSet, space_from_rows, sum_spaces
from topocheck.enumeration import spaces_up_to
from topocheck.errors import EmptyCarrier
from topocheck.setclasses import tables
from topocheck.spaceprops import (
    PREDICATES,
    beta_subset_of_sg,
    is_hyperconnected,
    is_locally_indiscrete,
    is_quasi_hyperdisconnected,
    is_resolvable,
    is_semi_hausdorff,
    is_strongly_irresolvable,
    locally_indiscrete_by_opens,
    locally_indiscrete_by_sg_open,
    locally_indiscrete_by_singletons,
    resolution,
)

from .conftest import D2, E, I2, SIERPINSKI as S

ONE = space_from_rows([1])


def test_locally_indiscrete_examples():
    assert is_locally_indiscrete(I2)
    assert not is_locally_indiscrete(S)
    assert not is_locally_indiscrete(E)


def test_hyperconnected_examples():
    assert is_hyperconnected(E)
    assert not is_hyperconnected(D2)
    assert is_quasi_hyperdisconnected(E) and is_quasi_hyperdisconnected(D2)


def test_semi_hausdorff_examples():
    assert is_semi_hausdorff(D2)
    assert not is_semi_hausdorff(S)
    assert not is_semi_hausdorff(I2)


def test_resolvable_examples():
    assert is_resolvable(I2)
    assert resolution(I2) in (0b01, 0b10)
    assert not is_resolvable(S)
    assert is_strongly_irresolvable(S)
    assert not is_resolvable(D2)


def test_one_point_conventions():
    assert is_hyperconnected(ONE)
    assert not is_resolvable(ONE)
    assert is_semi_hausdorff(ONE)


def test_empty_space_resolvability():
    with pytest.raises(EmptyCarrier):
        is_resolvable(space_from_rows([]))


def test_beta_subset_of_sg_examples():
    total, _ = sum_spaces([I2, S])
    assert beta_subset_of_sg(total)
    assert beta_subset_of_sg(I2)
    # brute force over the 8 subsets of E
    t = tables(E)
    expected = all(t.sg_open[a] for a in range(8) if t.beta_open[a])
    assert beta_subset_of_sg(E) == expected


def test_sum_of_li_and_si_fixture():
    total, _ = sum_spaces([I2, S])
    assert not is_locally_indiscrete(total)
    assert is_locally_indiscrete(I2) and is_strongly_irresolvable(S)


@pytest.fixture(scope="module")
def small():
    return spaces_up_to(4)


def test_locally_indiscrete_routes_agree(small):
    for sp in small:
        routes = {
            locally_indiscrete_by_opens(sp),
            locally_indiscrete_by_singletons(sp),
            locally_indiscrete_by_sg_open(sp),
        }
        assert len(routes) == 1


def test_hyperconnected_means_opens_dense(small):
    for sp in small:
        dense = all(sp.cl_mask(u) == sp.full for u in sp.open_masks if u)
        assert is_hyperconnected(sp) == dense


def test_semi_hausdorff_not_hyperconnected(small):
    for sp in small:
        if sp.n >= 2 and is_semi_hausdorff(sp):
            assert not is_hyperconnected(sp)


def test_sums_of_li_and_si_parts():
    parts = spaces_up_to(3)
    li = [sp for sp in parts if is_locally_indiscrete(sp)]
    si = [sp for sp in parts if is_strongly_irresolvable(sp)]
    assert li and si
    for x, y in cartesian(li, si):
        assert beta_subset_of_sg(sum_spaces([x, y])[0])


def test_strongly_irresolvable_definition(small):
    for sp in small[:40]:
        expected = True
        for u in sp.open_masks:
            if not u:
                continue
            # resolvable subspace: a dense-in-U set with dense-in-U complement
            for d in range(1 << sp.n):
                if d & ~u or not d or d == u:
                    continue
                if sp.cl_mask(d) & u == u and sp.cl_mask(u ^ d) & u == u:
                    expected = False
        assert is_strongly_irresolvable(sp) == expected


def test_registry_names_are_snake_case():
    for name, pred in PREDICATES.items():
        assert name == name.lower() and " " not in name
        assert isinstance(pred(E), bool)
