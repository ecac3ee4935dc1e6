import pytest

from cadec.polynomial import VarOrder, integer_normalized, parse_poly
from cadec.formula import parse_formula
from cadec.projection import (
    CapExceededError, PrimitivityError, mccallum_project, plan_projection,
    propagate_ecs, reduced_project,
)

O2 = VarOrder(["y", "x"])


def P(text, order=O2):
    return parse_poly(text, order)


def N(text, order=O2):
    return integer_normalized(parse_poly(text, order))


def test_mccallum_circle():
    assert mccallum_project({P("x^2 + y^2 - 1")}, "x") == {N("y^2 - 1")}


def test_mccallum_circle_and_line():
    got = mccallum_project({P("x^2 + y^2 - 1"), P("x - y")}, "x")
    assert got == {N("y^2 - 1"), N("2*y^2 - 1"), N("y")}


def test_mccallum_passthrough_and_content():
    got = mccallum_project({P("(y - 1)*x + (y - 1)"), P("y + 2")}, "x")
    assert N("y - 1") in got and N("y + 2") in got


def test_reduced_project_example():
    got = reduced_project(P("x^2 + y^2 - 1"), {P("x - y")}, "x")
    assert got == {N("y^2 - 1"), N("2*y^2 - 1")}


def test_reduced_project_vacuous():
    assert (reduced_project(P("x^2 + y^2 - 1"), set(), "x")
            == mccallum_project({P("x^2 + y^2 - 1")}, "x"))


def test_reduced_project_is_subset_of_mccallum():
    ec = P("x^2 + y^2 - 1")
    others = {P("x - y"), P("x*y - 1")}
    red = reduced_project(ec, others, "x")
    full = mccallum_project({ec} | others, "x")
    assert red <= full


def test_reduced_project_imprimitive_rejected():
    with pytest.raises(PrimitivityError):
        reduced_project(P("(y - 1)*x + (y - 1)"), set(), "x")


def test_propagate_resultant():
    o = VarOrder(["y", "x", "z"])
    got = propagate_ecs({parse_poly("z - x*y", o), parse_poly("z - x - y", o)},
                        "z", "resultant")
    assert got == {integer_normalized(parse_poly("x*y - x - y", o))}


def test_propagate_groebner_degree_collapse():
    o = VarOrder(["y", "x", "z"])
    ecs = {parse_poly("z^2 - x", o), parse_poly("z^2 - y", o)}
    gb = propagate_ecs(ecs, "z", "groebner")
    res = propagate_ecs(ecs, "z", "resultant")
    assert integer_normalized(parse_poly("x - y", o)) in gb
    assert max(p.degree_in("x") for p in gb) == 1
    # resultant route only sees the squared polynomial before normalization
    assert all(p.degree_in("x") <= 1 for p in res)  # post-normalization
    assert propagate_ecs({parse_poly("z - x", o)}, "z", "resultant") == set()


def test_plan_auto_circle_line():
    f = parse_formula("x^2 + y^2 - 1 = 0 and x - y = 0", O2)
    plan = plan_projection(f, O2, "auto")
    assert plan.ell == 2
    assert plan.level(2).ec is not None
    assert plan.level(1).ec is not None
    assert plan.level(1).ec.origin in ("resultant-derived", "gb-derived")


def test_plan_no_ecs():
    f = parse_formula("x^2 + y^2 - 1 > 0", O2)
    plan = plan_projection(f, O2, "auto")
    assert plan.ell == 0
    assert all(lvl.ec is None for lvl in plan.levels)


def test_plan_designated_imprimitive_hard_error():
    f = parse_formula("(y - 1)*x + (y - 1) = 0", O2)
    with pytest.raises(PrimitivityError):
        plan_projection(f, O2, [P("(y - 1)*x + (y - 1)")])


def test_plan_auto_imprimitive_fallback():
    f = parse_formula("(y - 1)*x + (y - 1) = 0", O2)
    plan = plan_projection(f, O2, "auto")
    assert plan.level(2).ec is None
    assert plan.level(2).fallback


def test_projection_cap():
    f = parse_formula("x^2 + y^2 - 1 = 0 and x - y = 0", O2)
    with pytest.raises(CapExceededError):
        plan_projection(f, O2, "auto", projection_cap=1)


def test_plan_json_roundtrippable():
    f = parse_formula("x^2 + y^2 - 1 = 0 and x > 0", O2)
    plan = plan_projection(f, O2, "auto")
    import json
    js = json.loads(plan.to_json())
    assert js["ell"] == 1
    assert len(js["levels"]) == 2
    assert all("projection" in lvl for lvl in js["levels"])
