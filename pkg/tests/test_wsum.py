"""Weighted counting polynomials of dilated faces and reciprocity."""
from fractions import Fraction

import pytest

from latticegfun import (MultiPoly, WeightPoly, check_ehrhart_macdonald,
                         check_weighted_reciprocity, ehrhart_polynomial,
                         lattice_points, volume, weighted_sum_poly)

F = Fraction
q = MultiPoly.variable("q")


def test_unit_square_constant_weight(unit_square):
    wsp = ehrhart_polynomial(unit_square)
    assert wsp.closed == (q + 1) ** 2
    assert wsp.open == (q - 1) ** 2


def test_segment_linear_weight(segment):
    # oracle: direct summation of m over 0..q for a few dilates
    def brute(qq):
        return sum(m for m in range(qq + 1))

    phi = WeightPoly.monomial(1, (1,))
    wsp = weighted_sum_poly(segment, segment.top_face(), phi)
    assert wsp.closed == q * (q + 1) / 2
    for qq in (1, 2, 3, 4):
        assert wsp.closed.evaluate({"q": qq}) == brute(qq)
    assert wsp.open == q * (q - 1) / 2


def test_pyramid_ehrhart(pyramid):
    wsp = ehrhart_polynomial(pyramid)
    assert wsp.closed == F(4, 3) * q ** 3 + 4 * q ** 2 + F(11, 3) * q + 1
    assert wsp.closed.evaluate({"q": 1}) == 10
    assert wsp.closed.evaluate({"q": 2}) == 35


def test_constant_terms(pyramid, unit_square):
    for P in (pyramid, unit_square):
        phi0 = WeightPoly.one(P.ambient_dim)
        wsp = weighted_sum_poly(P, P.top_face(), phi0)
        assert wsp.closed.evaluate({"q": 0}) == 1
        phi1 = WeightPoly.monomial(P.ambient_dim, (1,) + (0,) * (P.ambient_dim - 1))
        wsp1 = weighted_sum_poly(P, P.top_face(), phi1)
        assert wsp1.closed.evaluate({"q": 0}) == 0


def test_ehrhart_macdonald(unit_square, pyramid, right_triangle, corpus2d, corpus3d):
    for P in [unit_square, pyramid, right_triangle, *corpus2d, *corpus3d[:6]]:
        assert check_ehrhart_macdonald(P)


def test_weighted_reciprocity_segment(segment):
    assert check_weighted_reciprocity(segment, WeightPoly.monomial(1, (1,)))


def test_weighted_reciprocity_pyramid_x3(pyramid):
    phi = WeightPoly.monomial(3, (0, 0, 1))
    wsp = weighted_sum_poly(pyramid, pyramid.top_face(), phi)
    # brute-force sums of x3 over the dilates, q = 1..5
    for qq in range(1, 6):
        direct = sum(p[2] for p in lattice_points(pyramid, pyramid.top_face(), qq))
        assert wsp.closed.evaluate({"q": qq}) == direct
    assert check_weighted_reciprocity(pyramid, phi)


def test_interpolation_matches_direct_counts(corpus2d):
    monos = [(0, 0), (1, 0), (2, 0), (1, 1)]
    for P in corpus2d[:5]:
        for exps in monos:
            phi = WeightPoly.monomial(2, exps)
            wsp = weighted_sum_poly(P, P.top_face(), phi)
            for qq in range(1, 6):
                direct = sum(phi.eval_point(p)
                             for p in lattice_points(P, P.top_face(), qq))
                assert wsp.closed.evaluate({"q": qq}) == direct


def test_closed_is_sum_of_opens(pyramid, corpus2d):
    for P in [pyramid, *corpus2d[:4]]:
        phi = WeightPoly.one(P.ambient_dim)
        lat = P.face_lattice
        total = MultiPoly.zero()
        for i in lat.nonempty():
            total = total + weighted_sum_poly(P, lat.faces[i], phi).open
        assert total == weighted_sum_poly(P, P.top_face(), phi).closed


def test_leading_coefficient_is_volume(pyramid, unit_cube, right_triangle, corpus2d):
    for P in [pyramid, unit_cube, right_triangle, *corpus2d[:6]]:
        wsp = ehrhart_polynomial(P)
        lead = wsp.closed.coefficient("q", P.ambient_dim).constant_value()
        assert lead == volume(P)


def test_vertex_face_sums(pyramid):
    lat = pyramid.face_lattice
    vi = pyramid.vertices.index((1, 1, 1))
    vface = lat.faces[lat.index_of({vi})]
    phi = WeightPoly.monomial(3, (0, 0, 2))
    wsp = weighted_sum_poly(pyramid, vface, phi)
    assert wsp.closed == q ** 2  # phi(q * (1,1,1)) = q^2
    assert wsp.open == wsp.closed


def test_homogeneity_enforced():
    with pytest.raises(ValueError, match="homogeneous"):
        WeightPoly(MultiPoly(("x1",), {(1,): F(1), (0,): F(1)}), 1)
