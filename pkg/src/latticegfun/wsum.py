"""Weighted lattice-point sums over dilated faces, as exact polynomials.

For a homogeneous weight polynomial phi and a face F, the closed sum adds
phi over the lattice points of q*F and the open sum over the relative
interior.  Both are polynomials in q of degree dim F + deg phi, recovered
by exact interpolation at consecutive integers and guarded by one extra
validation node.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, interpolate, scalar_from_str, scalar_to_str
from .polytope import Face, Polytope, iter_lattice_points


class WeightPoly:
    """A homogeneous polynomial weight on the ambient space.

    Variables are x1..xn.  The constant weight 1 has degree 0.
    """

    def __init__(self, poly: MultiPoly, nvars: int):
        self.poly = poly
        self.nvars = nvars
        if not poly.is_homogeneous():
            raise ValueError("weight polynomial must be homogeneous")
        for v in poly.vars:
            if v not in {f"x{i + 1}" for i in range(nvars)}:
                raise ValueError(f"unexpected weight variable {v!r}")
        self.degree = max(poly.degree(), 0)

    @classmethod
    def one(cls, nvars: int) -> WeightPoly:
        return cls(MultiPoly.const(1), nvars)

    @classmethod
    def monomial(cls, nvars: int, exps, coeff=1) -> WeightPoly:
        names = tuple(f"x{i + 1}" for i in range(nvars))
        return cls(MultiPoly.monomial(names, tuple(exps), coeff), nvars)

    def at_origin(self) -> Fraction:
        return self.poly.evaluate({v: 0 for v in self.poly.vars})

    def eval_point(self, point) -> Fraction:
        total = Fraction(0)
        for exps, coeff in self.poly.terms.items():
            value = coeff
            for var, e in zip(self.poly.vars, exps):
                if e:
                    value = value * Fraction(point[int(var[1:]) - 1]) ** e
            total += value
        return total

    def to_json(self) -> dict:
        names = tuple(f"x{i + 1}" for i in range(self.nvars))
        mapped = self.poly._mapped(names)
        terms = [{"coeff": scalar_to_str(mapped[exps]), "exps": list(exps)}
                 for exps in sorted(mapped)]
        return {"vars": self.nvars, "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> WeightPoly:
        nvars = int(obj["vars"])
        names = tuple(f"x{i + 1}" for i in range(nvars))
        terms: dict[tuple[int, ...], Fraction] = {}
        for item in obj["terms"]:
            exps = tuple(int(e) for e in item["exps"])
            if len(exps) != nvars:
                raise ValueError("weight exponent width does not match vars")
            coeff = scalar_from_str(item["coeff"])
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return cls(MultiPoly(names, terms), nvars)

    def __repr__(self):
        return f"WeightPoly({self.poly})"


@dataclass
class WeightedSumPoly:
    """Closed and relative-interior weighted sums of one face, in q."""

    face: Face
    closed: MultiPoly
    open: MultiPoly


def _dilate_sum(P: Polytope, face: Face, phi: WeightPoly, q: int, interior: bool) -> Fraction:
    total = Fraction(0)
    for point in iter_lattice_points(P, face, q, interior):
        total += phi.eval_point(point)
    return total


def weighted_sum_poly(P: Polytope, F: Face, phi: WeightPoly) -> WeightedSumPoly:
    """Interpolate the closed and open weighted sums of dilates of F.

    Nodes are q = 0..(dim F + deg phi); the q = 0 value is phi(0) for the
    closed sum and is fixed by reciprocity for the open sum, which keeps
    both bona fide polynomials.  One extra node validates the degree bound.
    """
    if F.dim < 0:
        raise ValueError("weighted sums need a nonempty face")
    deg = F.dim + phi.degree
    sign = (-1) ** (phi.degree + F.dim)

    closed_nodes = [(0, phi.at_origin())]
    open_nodes = [(0, sign * phi.at_origin())]
    for q in range(1, deg + 1):
        closed_nodes.append((q, _dilate_sum(P, F, phi, q, False)))
        open_nodes.append((q, _dilate_sum(P, F, phi, q, True)))
    closed = interpolate(closed_nodes, deg)
    opened = interpolate(open_nodes, deg)

    check_q = deg + 1
    if closed.evaluate({"q": check_q}) != _dilate_sum(P, F, phi, check_q, False):
        raise RuntimeError("degree assumption violated")
    if opened.evaluate({"q": check_q}) != _dilate_sum(P, F, phi, check_q, True):
        raise RuntimeError("degree assumption violated")
    return WeightedSumPoly(F, closed, opened)


def ehrhart_polynomial(P: Polytope) -> WeightedSumPoly:
    """Closed and interior lattice-point counting polynomials of P."""
    return weighted_sum_poly(P, P.top_face(), WeightPoly.one(P.ambient_dim))


def check_ehrhart_macdonald(P: Polytope) -> bool:
    """E(-q) == (-1)^n E_interior(q), as exact polynomials."""
    wsp = ehrhart_polynomial(P)
    return _negated(wsp.closed) == (-1) ** P.ambient_dim * wsp.open


def check_weighted_reciprocity(P: Polytope, phi: WeightPoly) -> bool:
    """Closed sum at -q equals the signed open sum at q."""
    wsp = weighted_sum_poly(P, P.top_face(), phi)
    sign = (-1) ** (phi.degree + P.ambient_dim)
    return _negated(wsp.closed) == sign * wsp.open


def _negated(poly: MultiPoly) -> MultiPoly:
    """Substitute q -> -q."""
    q = MultiPoly.variable("q")
    return poly.substitute({"q": -q})
