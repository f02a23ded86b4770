import pytest

from affclass.cone import cone_from_generators, cone_from_normals, valuation_matrix
from affclass.errors import DimensionMismatch, NotFullDimensional, NotPointed, ZeroRay
from affclass.lattice import IntegerMatrix, content, dot, rank

import brute
from cones import random_rings
from conftest import A1_RAYS, SQUARE_RAYS


def test_first_quadrant():
    c = cone_from_generators(2, [(1, 0), (0, 1)])
    assert c.facet_normals == ((0, 1), (1, 0))
    # the identity up to the lexicographic facet order
    assert sorted(valuation_matrix(c).rows()) == sorted(IntegerMatrix.identity(2).rows())


def test_a1_cone():
    c = cone_from_generators(2, A1_RAYS)
    assert c.facet_normals == ((1, 0), (1, 2))
    # each normal vanishes on one ray and is positive on the other
    for n in c.facet_normals:
        assert sorted(dot(n, g) > 0 for g in A1_RAYS) == [False, True]
    assert valuation_matrix(c).rows() == [(1, 0), (1, 2)]


def test_line_is_not_pointed():
    with pytest.raises(NotPointed):
        cone_from_generators(2, [(1, 0), (-1, 0)])


def test_half_plane_is_not_pointed():
    with pytest.raises(NotPointed):
        cone_from_generators(2, [(1, 0), (-1, 0), (0, 1)])


def test_not_full_dimensional():
    with pytest.raises(NotFullDimensional):
        cone_from_generators(3, [(1, 0, 0), (0, 1, 0)])


def test_zero_ray():
    with pytest.raises(ZeroRay):
        cone_from_generators(2, [(0, 0), (1, 0)])


def test_wrong_length():
    with pytest.raises(DimensionMismatch):
        cone_from_generators(2, [(1, 0, 0)])


def test_redundant_and_scaled_rays_are_dropped():
    c = cone_from_generators(2, [(2, 0), (0, 3), (1, 1)])
    assert c.generators == ((0, 1), (1, 0))


def test_from_normals():
    assert cone_from_normals(2, [(0, 1), (1, 0)]).generators == ((0, 1), (1, 0))
    c = cone_from_normals(2, [(1, 0), (1, 2)])
    assert c.generators == ((0, 1), (2, -1))
    assert c.generators == tuple(brute.double_description([(1, 0), (1, 2)], 2))


def test_square_cone_from_normals():
    normals = [(1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1)]
    c = cone_from_normals(3, normals)
    assert len(c.generators) == 4
    assert list(c.generators) == brute.double_description(normals, 3)
    assert set(c.generators) == set(SQUARE_RAYS)


def test_from_normals_errors():
    with pytest.raises(NotPointed):
        cone_from_normals(2, [(1, 0)])
    with pytest.raises(NotFullDimensional):
        cone_from_normals(2, [(1, 0), (-1, 0), (0, 1)])


def test_square_valuation_matrix_rank():
    c = cone_from_generators(3, SQUARE_RAYS)
    nu = valuation_matrix(c)
    assert (nu.nrows, nu.ncols) == (4, 3)
    assert brute.brute_rank(nu.rows()) == 3


@pytest.fixture(scope="module")
def test_rings():
    return random_rings(seed=1, count=60, ranks=(2, 3, 4), entry=4, extra=3)


def test_invariants_on_random_cones(test_rings):
    for m in test_rings:
        c = m.cone
        d = c.ambient_rank
        assert list(c.facet_normals) == sorted(c.facet_normals)
        for n in c.facet_normals:
            assert content(n) == 1
            assert all(dot(n, g) >= 0 for g in c.generators)
            tight = [g for g in c.generators if dot(n, g) == 0]
            assert brute.brute_rank(tight) == d - 1
        assert rank(valuation_matrix(c)) == d
        assert brute.brute_rank(valuation_matrix(c).rows()) == d


def test_duality_round_trip(test_rings):
    for m in test_rings:
        c = m.cone
        back = cone_from_normals(c.ambient_rank, valuation_matrix(c).rows())
        assert back == c
        assert list(c.generators) == brute.double_description(c.facet_normals, c.ambient_rank)


def test_deterministic():
    assert cone_from_generators(3, SQUARE_RAYS) == cone_from_generators(3, list(reversed(SQUARE_RAYS)))
