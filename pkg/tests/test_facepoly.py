"""f/g/h polynomials, dual faces, master duality, and the g identity."""
from fractions import Fraction

import pytest

from latticegfun import (GradedPoset, MultiPoly, build_polytope, check_master_duality,
                         cube_face_poset, dual_g, fg_polynomials, gessel_cube_g,
                         h_polynomial)

F = Fraction
x = MultiPoly.variable("x")
t = MultiPoly.variable("t")


def poset_of(P):
    return GradedPoset.from_face_lattice(P.face_lattice)


def mgon_poset(m):
    """Abstract face poset of an m-gon: a cycle of m vertices and m edges."""
    ranks = [0] + [1] * m + [2] * m + [3]
    below = [set() for _ in range(2 * m + 2)]
    for v in range(1, m + 1):
        below[v] = {0}
    for e in range(m):
        below[m + 1 + e] = {0, 1 + e, 1 + (e + 1) % m}
    below[2 * m + 1] = set(range(2 * m + 1))
    return GradedPoset(ranks, below)


def test_h_polynomial_simplices(simplex2, simplex3, segment):
    assert h_polynomial(segment) == t + 1
    assert h_polynomial(simplex2) == t ** 2 + t + 1
    assert h_polynomial(simplex3) == t ** 3 + t ** 2 + t + 1


def test_h_polynomial_cube_and_square(unit_cube, unit_square):
    # oracle: resum the f-vector with an independent Horner loop
    def resum(fvec):
        total = MultiPoly.zero()
        for k, fk in enumerate(fvec):
            total = total + fk * (t - 1) ** k
        return total

    assert h_polynomial(unit_cube) == resum((8, 12, 6, 1)) == t ** 3 + 3 * t ** 2 + 3 * t + 1
    assert h_polynomial(unit_square) == resum((4, 4, 1)) == t ** 2 + 2 * t + 1


def test_fg_simplices(simplex2, simplex3, segment):
    for P in (segment, simplex2, simplex3):
        f, g = fg_polynomials(poset_of(P))
        assert g == 1
        n = P.ambient_dim
        assert f.degree_in("x") == n


def test_fg_square(unit_square):
    f, g = fg_polynomials(poset_of(unit_square))
    assert g == 1 + x
    assert f == x ** 2 + 2 * x + 1


def test_fg_mgons():
    for m in range(3, 9):
        _, g = fg_polynomials(mgon_poset(m))
        assert g == 1 + (m - 3) * x


def test_g_degree_bound(pyramid, unit_cube, octahedron, corpus2d, corpus3d):
    for P in [pyramid, unit_cube, octahedron, *corpus2d, *corpus3d]:
        _, g = fg_polynomials(poset_of(P))
        assert g.degree_in("x") <= P.ambient_dim // 2


def test_non_ranked_poset_rejected():
    # rank jump of two between bottom and top
    with pytest.raises(ValueError, match="not ranked"):
        GradedPoset([0, 2], [set(), {0}])


def test_dual_g_facet_and_top(pyramid):
    lat = pyramid.face_lattice
    for i in lat.faces_of_dim(2):
        assert dual_g(pyramid, lat.faces[i]) == 1
    assert dual_g(pyramid, lat.faces[lat.top_index]) == 1


def test_dual_g_pyramid_apex(pyramid):
    lat = pyramid.face_lattice
    apex = lat.faces[lat.index_of({pyramid.vertices.index((0, 0, 0))})]
    assert dual_g(pyramid, apex) == 1 + x
    # the four base vertices are simple; their dual g is trivial
    for i in lat.faces_of_dim(0):
        if lat.faces[i] is not apex:
            assert dual_g(pyramid, lat.faces[i]) == 1


def test_dual_g_cube_vertex(unit_cube):
    lat = unit_cube.face_lattice
    v = lat.faces[lat.faces_of_dim(0)[0]]
    assert dual_g(unit_cube, v) == 1


def test_dual_g_trivial_for_simple(unit_cube, simplex3, corpus2d):
    for P in [unit_cube, simplex3, *[Q for Q in corpus2d if Q.simple]]:
        lat = P.face_lattice
        for i in lat.nonempty():
            assert dual_g(P, lat.faces[i]) == 1


def test_gessel_closed_form():
    assert gessel_cube_g(0) == 1
    assert gessel_cube_g(1) == 1
    assert gessel_cube_g(2) == 1 + x
    assert gessel_cube_g(3) == 1 + 4 * x


def test_gessel_matches_recursion():
    for n in range(6):
        _, g = fg_polynomials(cube_face_poset(n))
        assert g == gessel_cube_g(n), n


def test_gessel_matches_geometry(unit_cube, unit_square):
    _, g3 = fg_polynomials(poset_of(unit_cube))
    assert g3 == gessel_cube_g(3)
    _, g2 = fg_polynomials(poset_of(unit_square))
    assert g2 == gessel_cube_g(2)


def test_master_duality(pyramid, unit_cube, octahedron, corpus2d, corpus3d):
    for P in [pyramid, unit_cube, octahedron, *corpus2d, *corpus3d]:
        assert check_master_duality(poset_of(P))


def subposet_g(lat, i):
    """g of the interval [empty, face i], built independently."""
    members = [j for j in range(len(lat.faces)) if lat.leq(j, i)]
    ranks = [lat.faces[j].rank for j in members]
    below = [{k for k, jj in enumerate(members) if jj != j and lat.leq(jj, j)}
             for j in members]
    _, g = fg_polynomials(GradedPoset(ranks, below))
    return g


def g_identity_holds(P):
    """x^(n+1) g(1/x) must equal the sum of g_F (x-1)^(n-dim F) over all
    faces including the empty one and P itself."""
    lat = P.face_lattice
    n = P.ambient_dim
    _, gP = fg_polynomials(GradedPoset.from_face_lattice(lat))
    left = MultiPoly.zero()
    for k, c in gP.coefficients_in("x").items():
        left = left + c.constant_value() * x ** (n + 1 - k)
    right = MultiPoly.zero()
    for i, face in enumerate(lat.faces):
        gF = MultiPoly.const(1) if face.dim < 0 else subposet_g(lat, i)
        right = right + gF * (x - 1) ** (n - face.dim)
    return left == right


def test_g_reversal_identity(pyramid, unit_cube, octahedron, corpus2d, corpus3d):
    for P in [pyramid, unit_cube, octahedron, *corpus2d, *corpus3d]:
        assert g_identity_holds(P)


def test_dehn_sommerville_h_symmetry(unit_cube, corpus2d, corpus3d):
    for P in [unit_cube, *corpus2d, *corpus3d]:
        if not P.simple:
            continue
        n = P.ambient_dim
        coeffs = {k: c.constant_value()
                  for k, c in h_polynomial(P).coefficients_in("t").items()}
        assert all(coeffs.get(k, F(0)) == coeffs.get(n - k, F(0)) for k in range(n + 1))
        assert all(coeffs.get(k, F(0)) >= 0 for k in range(n + 1))
