"""Shared quantifier-free test corpus: small formulas in at most three
variables, each with its variable ordering (lowest first)."""

from cadec.polynomial import VarOrder
from cadec.formula import parse_formula

# (id, order lowest-first, formula text, has primitive EC?)
_RAW = [
    ("circle", ("y", "x"), "x^2 + y^2 - 1 = 0", True),
    ("circle-and-x", ("y", "x"), "x^2 + y^2 - 1 = 0 and x > 0", True),
    ("circle-line", ("y", "x"), "x^2 + y^2 - 1 = 0 and x - y = 0", True),
    ("half-plane", ("y", "x"), "x - y > 0", False),
    ("sqrt2-strip", ("y", "x"), "x^2 - 2 = 0 and y > 0", True),
    ("parabola-arc", ("x", "y"), "y - x^2 = 0 and x > 0", True),
    ("hyperbola-or-diag", ("y", "x"), "x*y - 1 = 0 or x - y > 0", False),
    ("disk", ("y", "x"), "x^2 + y^2 < 1", False),
    ("cubic", ("x", "y"), "y - x^3 = 0", True),
    ("ellipse-line", ("y", "x"), "x^2 + 4*y^2 - 4 = 0 and x + y = 0", True),
    ("sphere", ("z", "y", "x"), "x^2 + y^2 + z^2 - 1 = 0", True),
    ("plane-in-space", ("z", "y", "x"), "x + y + z = 0 and x^2 + y^2 < 1", True),
]


def load_corpus():
    out = []
    for fid, names, text, has_ec in _RAW:
        order = VarOrder(list(names))
        out.append((fid, parse_formula(text, order), has_ec))
    return out
