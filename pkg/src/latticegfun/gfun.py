"""The two-variable generating function of weighted face sums.

G(q, y) packages the weighted sums of all nonempty faces with signs and
powers of y, each face carrying the g-polynomial of its dual face.  Two
equivalent assemblies exist: the closed-face form, where the dual-face
factor is evaluated at -1/y and the formal 1/y is cleared through the
(-y)^codim prefactor, and the interior form built from relative-interior
sums with the factor at -y.  Every build computes both and insists they
agree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly
from .facepoly import dual_g, gessel_cube_g
from .polytope import Polytope, build_polytope, volume
from .wsum import WeightPoly, weighted_sum_poly


@dataclass
class GFunction:
    """An assembled generating function with its provenance."""

    poly: MultiPoly
    n: int
    d: int
    polytope: Polytope
    phi: WeightPoly
    form_used: str = "closed-face"


def _cleared_dual_factor(g_poly: MultiPoly, codim: int) -> MultiPoly:
    """(-y)^codim * g(-1/y) expanded as a polynomial in y.

    Sends the coefficient of x^j to (-1)^(codim + j) y^(codim - j); the
    degree bound deg g <= codim/2 keeps every exponent nonnegative.
    """
    y = MultiPoly.variable("y")
    out = MultiPoly.zero()
    for j, c in g_poly.coefficients_in("x").items():
        coeff = c.constant_value()
        if codim - j < 0:
            raise RuntimeError("dual-face polynomial exceeds its degree bound")
        out = out + coeff * Fraction((-1) ** (codim + j)) * y ** (codim - j)
    return out


def build_gfun(P: Polytope, phi: WeightPoly | None = None) -> GFunction:
    """Assemble G(q, y) for a polytope and homogeneous weight.

    Both the closed-face and interior forms are computed; a disagreement
    would indicate an internal error and raises.
    """
    if phi is None:
        phi = WeightPoly.one(P.ambient_dim)
    if phi.nvars != P.ambient_dim:
        raise ValueError("weight polynomial dimension does not match polytope")
    n = P.ambient_dim
    d = phi.degree
    y = MultiPoly.variable("y")
    lattice = P.face_lattice

    closed_total = MultiPoly.zero()
    open_total = MultiPoly.zero()
    for i in lattice.nonempty():
        face = lattice.faces[i]
        wsp = weighted_sum_poly(P, face, phi)
        g_dual = dual_g(P, face)
        codim = n - face.dim
        dim_factor = (y + 1) ** face.dim
        closed_total = closed_total + dim_factor * _cleared_dual_factor(g_dual, codim) * wsp.closed
        open_total = open_total + dim_factor * g_dual.substitute({"x": -y}) * wsp.open

    prefactor = (y + 1) ** d
    closed_form = prefactor * closed_total
    open_form = prefactor * open_total
    if closed_form != open_form:
        raise RuntimeError("closed-face and interior assemblies disagree")
    return GFunction(closed_form, n, d, P, phi)


def check_reciprocity(G: GFunction) -> bool:
    """G(q, y) == (-y)^(n+d) G(-q, 1/y) as exact polynomials."""
    total_deg = G.n + G.d
    transformed: dict[tuple[int, ...], Fraction] = {}
    poly = G.poly
    qi = poly.vars.index("q") if "q" in poly.vars else None
    yi = poly.vars.index("y") if "y" in poly.vars else None
    for exps, coeff in poly.terms.items():
        i = exps[qi] if qi is not None else 0
        j = exps[yi] if yi is not None else 0
        if total_deg - j < 0:
            return False
        key = list(exps)
        if qi is not None:
            key[qi] = i
        if yi is not None:
            key[yi] = total_deg - j
        sign = Fraction((-1) ** (i + total_deg))
        key = tuple(key)
        transformed[key] = transformed.get(key, Fraction(0)) + sign * coeff
    return MultiPoly(poly.vars, transformed) == poly


def y_coefficient_profile(G: GFunction) -> list[MultiPoly]:
    """Coefficient polynomials L_0..L_n of powers of y, for weight 1.

    Asserts that the leading q-coefficient of L_p is binom(n, p) times the
    Lebesgue volume, with the volume computed independently from a
    triangulation.
    """
    if G.d != 0:
        raise ValueError("the y-profile is defined for the constant weight")
    vol = volume(G.polytope)
    n = G.n
    layers = G.poly.coefficients_in("y")
    out = []
    for p in range(n + 1):
        layer = layers.get(p, MultiPoly.zero())
        lead = layer.coefficient("q", n).constant_value()
        if lead != math.comb(n, p) * vol:
            raise RuntimeError("leading coefficient does not match the volume profile")
        out.append(layer)
    return out


def cross_polytope(n: int) -> Polytope:
    """Convex hull of the standard basis vectors and their negatives."""
    verts = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        verts.append(tuple(e))
        verts.append(tuple(-x for x in e))
    return build_polytope(verts)


def cross_polytope_gfun(n: int, phi: WeightPoly | None = None) -> GFunction:
    """G(q, y) of the n-dimensional cross-polytope.

    Every dual face of the cross-polytope is a face of the cube, so each
    dual-face g-polynomial is checked against the closed-form cube value
    for the matching dimension before assembling.
    """
    P = cross_polytope(n)
    lattice = P.face_lattice
    for i in lattice.nonempty():
        face = lattice.faces[i]
        expected = MultiPoly.const(1) if face.dim == n else gessel_cube_g(n - 1 - face.dim)
        if dual_g(P, face) != expected:
            raise RuntimeError("cross-polytope dual face does not match the cube")
    return build_gfun(P, phi)
