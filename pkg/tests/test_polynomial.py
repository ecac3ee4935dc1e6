import random
from fractions import Fraction

import pytest

from cadec.polynomial import (
    ExactDivisionError, ParseError, Polynomial, VarOrder, content_primitive,
    discriminant, exact_div, integer_normalized, is_primitive, parse_poly,
    poly_gcd, poly_to_str, resultant, squarefree_basis, squarefree_part,
)
from oracles import sylvester_resultant

O2 = VarOrder(["y", "x"])
O3 = VarOrder(["z", "y", "x"])


def P(text, order=O2):
    return parse_poly(text, order)


def random_poly(order, rng, max_deg=3, terms=4, coeff=9):
    n = len(order)
    p = Polynomial.zero(order)
    for _ in range(terms):
        expt = tuple(rng.randint(0, max_deg) for _ in range(n))
        c = rng.randint(-coeff, coeff)
        if c:
            p = p + Polynomial.monomial(order, expt, Fraction(c))
    return p


def test_parse_roundtrip():
    p = P("3*x^2*y - 1/2*y + 7")
    assert parse_poly(poly_to_str(p), O2) == p


def test_parse_rejects_garbage():
    for bad in ("x +", "2 ** x", "(x", "x^", "and"):
        with pytest.raises(ParseError):
            parse_poly(bad, O2)


def test_ring_laws_random():
    rng = random.Random(7)
    for _ in range(200):
        p, q, r = (random_poly(O2, rng) for _ in range(3))
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)


def test_degree_multiplicative():
    rng = random.Random(11)
    for _ in range(100):
        p, q = random_poly(O2, rng), random_poly(O2, rng)
        if p.is_zero() or q.is_zero():
            continue
        for v in ("x", "y"):
            assert (p * q).degree_in(v) == p.degree_in(v) + q.degree_in(v)


def test_exact_div():
    p, q = P("x^2 - y^2"), P("x - y")
    assert exact_div(p, q) == P("x + y")
    with pytest.raises(ExactDivisionError):
        exact_div(P("x^2 + 1"), P("x - y"))


def test_gcd():
    g = P("x + y")
    a, b = g * P("x - 1"), g * P("y^2 + 2")
    got = poly_gcd(a, b)
    assert integer_normalized(got) == integer_normalized(g)


def test_content_primitive_examples():
    cont, prim = content_primitive(P("(y^2 - 1)*x^2 + (y^2 - 1)"), "x")
    assert cont == P("y^2 - 1") and prim == P("x^2 + 1")
    cont, prim = content_primitive(P("x + y"), "x")
    assert cont.is_constant() and prim == P("x + y")


def test_content_primitive_reconstruction_random():
    rng = random.Random(3)
    for _ in range(1000):
        p = random_poly(O2, rng)
        if p.is_zero():
            continue
        v = p.main_variable()
        if v is None:
            continue
        cont, prim = content_primitive(p, v)
        assert cont * prim == p


def test_is_primitive():
    assert is_primitive(P("x^2 + y^2 - 1"), "x")
    assert not is_primitive(P("(y - 1)*x + (y - 1)"), "x")


def test_product_equality_factor_contents():
    # the linking-block product equalities seen as polynomials in a chosen
    # variable: content = the factor not containing it
    o = VarOrder(["y0", "x0", "z", "x", "y"])
    a = parse_poly("(y0 - y)*(y - z)", o)
    cont, _ = content_primitive(a, "z")
    assert integer_normalized(cont) == integer_normalized(parse_poly("y0 - y", o))


def test_resultant_examples():
    assert resultant(P("x^2 + y^2 - 1"), P("x - y"), "x") == P("2*y^2 - 1")
    # common factor => zero resultant
    assert resultant(P("(x - y)*(x + 1)"), P("(x - y)*(x - 2)"), "x").is_zero()


def test_resultant_sylvester_oracle_random():
    rng = random.Random(42)
    checked = 0
    while checked < 200:
        p = random_poly(O3, rng, max_deg=3, terms=4)
        q = random_poly(O3, rng, max_deg=3, terms=4)
        v = "z"
        if p.degree_in(v) < 1 or q.degree_in(v) < 1:
            continue
        assert resultant(p, q, v) == sylvester_resultant(p, q, v)
        checked += 1


def test_discriminant():
    assert discriminant(P("x^2 - 2"), "x") == Polynomial.constant(O2, Fraction(8))
    assert discriminant(P("(x - 1)*(x - 1)"), "x").is_zero()


def test_squarefree():
    p = P("(x - y)*(x - y)*(x + 1)")
    sf = squarefree_part(p, "x")
    assert integer_normalized(sf) == integer_normalized(P("(x - y)*(x + 1)"))


def test_squarefree_basis_invariants():
    basis = squarefree_basis({P("(x-1)*(x-2)"), P("(x-2)*(x-3)"), P("x^2-1")}, "x")
    for b in basis:
        if b.degree_in("x") >= 2:
            assert not discriminant(b, "x").is_zero()
    bs = sorted(basis, key=poly_to_str)
    for i, a in enumerate(bs):
        for b in bs[i + 1:]:
            assert not resultant(a, b, "x").is_zero()
