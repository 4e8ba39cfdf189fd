"""Exact scalar, polynomial, interpolation, and Bernoulli tests."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticegfun import MultiPoly, bernoulli, interpolate, scalar_from_str, scalar_to_str

F = Fraction

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def poly_strategy(variables=("x", "y", "z"), max_exp=3, max_terms=4):
    term = st.tuples(
        st.tuples(*[st.integers(min_value=0, max_value=max_exp)] * len(variables)),
        rationals)
    return st.lists(term, max_size=max_terms).map(
        lambda items: MultiPoly(variables, {e: c for e, c in reversed(items)}))


def test_scalar_strings():
    assert scalar_to_str(F(3, 4)) == "3/4"
    assert scalar_to_str(F(-8, 2)) == "-4"
    assert scalar_from_str("7/3") == F(7, 3)
    assert scalar_from_str("-5") == F(-5)


@settings(max_examples=60, deadline=None)
@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_laws(p, r, s):
    assert p + r == r + p
    assert p * r == r * p
    assert (p + r) + s == p + (r + s)
    assert (p * r) * s == p * (r * s)
    assert (p + r) * s == p * s + r * s


@settings(max_examples=40, deadline=None)
@given(poly_strategy(), poly_strategy(),
       st.tuples(rationals, rationals, rationals))
def test_evaluation_is_a_homomorphism(p, r, point):
    at = dict(zip(("x", "y", "z"), point))
    assert (p * r).evaluate(at) == p.evaluate(at) * r.evaluate(at)
    assert (p + r).evaluate(at) == p.evaluate(at) + r.evaluate(at)


def test_no_zero_coefficients_stored():
    p = MultiPoly(("x",), {(1,): F(2), (0,): F(0)})
    assert (0,) not in p.terms
    q = p - p
    assert q.is_zero() and not q.terms


def test_substitution_and_derivative():
    x, y = MultiPoly.variable("x"), MultiPoly.variable("y")
    p = (x + 2 * y) ** 3
    assert p.substitute({"x": y}) == 27 * y ** 3
    assert p.derivative("x") == 3 * (x + 2 * y) ** 2
    assert p.coefficient("x", 2) == 6 * y
    assert p.degree() == 3 and p.is_homogeneous()
    assert not (p + 1).is_homogeneous()


def test_json_round_trip():
    x, y = MultiPoly.variable("x"), MultiPoly.variable("y")
    p = F(7, 3) * x ** 2 * y - 4 * y + 1
    assert MultiPoly.from_json(p.to_json()) == p


def test_interpolate_known_values():
    q = MultiPoly.variable("q")
    assert interpolate([(0, 1), (1, 4), (2, 9)], 2) == q ** 2 + 2 * q + 1
    c = F(9, 7)
    assert interpolate([(0, c)], 0) == MultiPoly.const(c)


def test_interpolate_unit_square_counts():
    # independent brute-force count of Z^2 inside q*[0,1]^2
    def count(q):
        return sum(1 for a in range(q + 1) for b in range(q + 1))

    q = MultiPoly.variable("q")
    nodes = [(qq, count(qq)) for qq in (0, 1, 2)]
    assert interpolate(nodes, 2) == (q + 1) ** 2


def test_interpolate_degenerate_nodes():
    with pytest.raises(ValueError, match="degenerate interpolation nodes"):
        interpolate([(0, 1), (0, 2), (1, 3)], 2)
    with pytest.raises(ValueError):
        interpolate([(0, 1), (1, 2)], 2)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=7))
def test_interpolate_inverts_evaluation(coeffs):
    poly = MultiPoly(("q",), {(i,): c for i, c in enumerate(coeffs)})
    deg = len(coeffs) - 1
    nodes = [(i, poly.evaluate({"q": i})) for i in range(deg + 1)]
    assert interpolate(nodes, deg) == poly


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == F(1, 2)
    assert bernoulli(2) == F(1, 6)
    assert bernoulli(4) == F(-1, 30)
    assert bernoulli(5) == 0
    assert bernoulli(6) == F(1, 42)
    assert bernoulli(8) == F(-1, 30)
    assert all(bernoulli(2 * k - 1) == 0 for k in range(2, 8))
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_division_by_scalar_only():
    x = MultiPoly.variable("x")
    assert (2 * x) / 2 == x
    with pytest.raises(ZeroDivisionError):
        (2 * x) / 0
    with pytest.raises(ValueError):
        (2 * x) / x
