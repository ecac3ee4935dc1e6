import random
from fractions import Fraction

import pytest

from cadec.polynomial import Polynomial, VarOrder, parse_poly
from cadec.realalg import (
    IDENTICALLY_ZERO, AlgebraicNumber, RealAlgebraError, SamplePoint, compare,
    compare_rational, isolate_coeffs, isolate_real_roots, roots_above, sign_at,
)
from oracles import sturm_count_all, sturm_count_between

O1 = VarOrder(["x"])
O2 = VarOrder(["y", "x"])


def test_isolation_matches_sturm_random():
    rng = random.Random(5)
    for _ in range(200):
        deg = rng.randint(1, 8)
        coeffs = [Fraction(rng.randint(-9, 9)) for _ in range(deg)] + [Fraction(rng.randint(1, 9))]
        roots = isolate_coeffs(tuple(coeffs))
        assert len(roots) == sturm_count_all(coeffs)
        for r in roots:
            assert sturm_count_between(r.coeffs, r.lo, r.hi) == 1


def test_known_roots():
    roots = isolate_real_roots(parse_poly("x^2 - 2", O1))
    assert len(roots) == 2
    assert roots[0].approx() < 0 < roots[1].approx()
    a = roots[1]
    assert abs(a.approx(Fraction(1, 10 ** 12)) ** 2 - 2) < Fraction(1, 10 ** 9)


def test_rational_roots_found_exactly():
    roots = isolate_real_roots(parse_poly("(x - 3)*(2*x + 1)*(x^2 - 3)", O1))
    values = sorted(r.approx() for r in roots)
    assert len(roots) == 4
    rationals = [r for r in roots if r.is_rational]
    assert sorted(r.rational_value() for r in rationals) == [Fraction(-1, 2), 3]


def test_compare_and_refine():
    r2, r3 = (isolate_real_roots(parse_poly(t, O1))[-1]
              for t in ("x^2 - 2", "x^2 - 3"))
    assert compare(r2, r3) < 0
    assert compare(r2, r2) == 0
    assert compare_rational(r2, Fraction(3, 2)) < 0
    assert compare_rational(r2, Fraction(7, 5)) > 0
    r2.refine()
    assert r2.hi - r2.lo < 1


def test_printing_format():
    rt = isolate_real_roots(parse_poly("x^2 - 2", O1))[1]
    assert str(rt).startswith("root(")
    assert str(AlgebraicNumber.from_rational(Fraction(5, 3))) == "5/3"


def test_sign_at_rational_point():
    p = parse_poly("x*y - 1", O2)
    s = SamplePoint(O2, (Fraction(2), Fraction(3)))  # y=2, x=3
    assert sign_at(p, s) == 1
    assert sign_at(parse_poly("x - y - 1", O2), s) == 0


def test_sign_at_algebraic_point():
    # at y = sqrt(2): y^2 - 2 is zero, y - 1 positive, y^3 - 3 negative
    rt = isolate_real_roots(parse_poly("x^2 - 2", O1))[1]
    o = VarOrder(["y"])
    s = SamplePoint(o, (rt,))
    assert sign_at(parse_poly("y^2 - 2", o), s) == 0
    assert sign_at(parse_poly("y - 1", o), s) == 1
    assert sign_at(parse_poly("y^3 - 3", o), s) == -1


def test_roots_above_rational_base():
    p = parse_poly("x^2 + y^2 - 1", O2)
    s = SamplePoint(O2, (Fraction(0),))
    roots = roots_above(p, s, "x")
    assert [r.approx() for r in roots] == [-1, 1]
    assert roots_above(p, SamplePoint(O2, (Fraction(2),)), "x") == []


def test_roots_above_algebraic_base():
    # over y = sqrt(1/2), the circle has sections at x = ±sqrt(1/2)
    half = isolate_real_roots(parse_poly("2*x^2 - 1", O1))[1]
    s = SamplePoint(O2, (half,))
    roots = roots_above(parse_poly("x^2 + y^2 - 1", O2), s, "x")
    assert len(roots) == 2
    assert compare(roots[0], roots[1]) < 0
    assert compare(roots[1], half) == 0  # x = y there


def test_roots_above_nullification():
    # y * x + y vanishes identically over y = 0
    p = parse_poly("y*x + y", O2)
    assert roots_above(p, SamplePoint(O2, (Fraction(0),)), "x") is IDENTICALLY_ZERO


def test_sample_point_extension():
    s = SamplePoint(O2, (Fraction(1),))
    s2 = s.extended(Fraction(2))
    assert s2.coordinate("y").rational_value() == 1
    assert s2.coordinate("x").rational_value() == 2
