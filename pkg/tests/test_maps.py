import pytest

from topocheck.core import PointSet, SpaceMap, product
from topocheck.enumeration import spaces, spaces_up_to
from topocheck.errors import SizeLimitExceeded
from topocheck.core import indiscrete
from topocheck.fixtures import I3_ABC, example_mixed_product, example_product
from topocheck.maps import (
    MapReport,
    all_maps,
    hsg_preimage_failure,
    identity,
    image,
    map_classify,
    preimage,
    preimage_preserves_hsg,
)
from topocheck.spaceprops import is_dense_in_itself, is_t_d, t_d_paper

from .conftest import E, I2, SIERPINSKI as S, empty, ps


def test_first_projection_of_square():
    _, (p, _) = example_product()
    r = map_classify(p)
    assert r.continuous and r.open and r.surjective
    assert r.irresolute and r.gs_irresolute
    assert not r.sg_irresolute


@pytest.mark.parametrize("sp", [E, S, I2])
def test_identity_has_every_property(sp):
    r = map_classify(identity(sp))
    assert all(value for _, value in r.items())
    assert preimage_preserves_hsg(identity(sp))


def test_mixed_projection_hsg_failure():
    mixed, (q, _) = example_mixed_product()
    s = ps(I3_ABC, "ab")
    pre = preimage(q, s)
    from topocheck.setclasses import is_hsg_closed

    assert is_hsg_closed(I3_ABC, s) and not is_hsg_closed(mixed, pre)
    assert not preimage_preserves_hsg(q)
    assert hsg_preimage_failure(q) is not None


def test_image_preimage():
    sq, (p, _) = example_product()
    pre = preimage(p, ps(E, "bc"))
    assert pre == sq.pointset([l for l in sq.labels if l[1] in "bc"])
    A = ps(E, "ac")
    assert image(identity(E), A) == A
    assert preimage(p, empty(E)) == empty(sq)


def test_size_limit():
    big = indiscrete(13)
    with pytest.raises(SizeLimitExceeded):
        map_classify(SpaceMap(big, E, (0,) * 13))


def test_assignment_validation():
    with pytest.raises(ValueError):
        SpaceMap(E, S, (0, 1, 2))


def test_all_maps_count():
    assert sum(1 for _ in all_maps(E, E)) == 27


def _three_point_sample():
    return spaces(3)[::3]


def test_map_implications_on_sample():
    for x in _three_point_sample():
        for y in _three_point_sample():
            for f in all_maps(x, y):
                r = map_classify(f)
                if r.open and r.continuous and r.surjective:
                    assert r.pre_semi_open
                if r.open and r.continuous:
                    assert r.delta_open
                if r.almost_open and r.continuous and r.anti_delta_open and r.surjective:
                    assert preimage_preserves_hsg(f)


def test_dense_in_itself_standard_t_d_is_vacuous_on_small_spaces():
    # a nonempty finite T_D space always has an isolated point
    for y in spaces_up_to(4):
        assert not (is_dense_in_itself(y) and is_t_d(y))


def test_locally_dense_reading_of_t_d_fails():
    # S has the nowhere dense singleton {1}; its image in I2 is dense
    f = SpaceMap(S, I2, (0, 1))
    assert is_dense_in_itself(I2) and t_d_paper(I2)
    assert not map_classify(f).anti_delta_open


def test_projections_irresolute_and_gs_irresolute():
    for x in spaces_up_to(2):
        for y in spaces_up_to(3):
            _, projections = product([x, y])
            for p in projections:
                r = map_classify(p)
                assert r.irresolute and r.gs_irresolute


def test_report_fields():
    assert [name for name, _ in map_classify(identity(E)).items()] == list(
        MapReport.__dataclass_fields__
    )
