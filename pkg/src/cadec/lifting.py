"""Lifting phase: build the CAD tree from a projection plan.

Stacks are built over base cells by isolating the real roots of the lifting
polynomials at the base sample point.  Two refinements apply when a level
has a designated equational constraint: only the EC is lifted (the plan
already reduced the lifting set), and stacks over sectors of an EC level
collapse to a single cylinder cell.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import ceil, floor

from .polynomial import Polynomial
from .projection import CapExceededError, ProjectionPlan
from .realalg import (
    IDENTICALLY_ZERO,
    AlgebraicNumber,
    SamplePoint,
    compare_rational,
    merge_roots,
    roots_above,
    sign_at,
)


class RealLocateError(Exception):
    """A query point's stack did not line up with the stored stack."""


class WellOrientednessError(Exception):
    """A lifting polynomial vanished identically over a cell sample
    (nullification); McCallum's operator is not valid for this input."""


class Cell:
    """A cylindrical cell: index vector, sample point, per-level kind."""

    __slots__ = ("index", "sample", "kind", "cylinder", "truth", "signs",
                 "children", "parent")

    def __init__(self, index, sample, kind, cylinder=False, parent=None):
        self.index = tuple(index)
        self.sample = sample
        self.kind = kind          # 'sector' or 'section' at this cell's level
        self.cylinder = cylinder  # sector spanning the whole line (EC refinement)
        self.truth = None
        self.signs = {}
        self.children = []
        self.parent = parent

    @property
    def level(self):
        return len(self.index)

    def is_section(self):
        return self.kind == "section"

    def __repr__(self):
        return "Cell(index=%r, kind=%s)" % (self.index, self.kind)


class CADTree:
    """Tree of stacks: the root is the level-0 cell (all of R^0)."""

    __slots__ = ("order", "plan", "root", "provenance")

    def __init__(self, order, plan, root, provenance):
        self.order = order
        self.plan = plan
        self.root = root
        self.provenance = provenance  # level -> sorted lifting polynomials

    def cells_at_level(self, k):
        frontier = [self.root]
        for _ in range(k):
            frontier = [c for cell in frontier for c in cell.children]
        return frontier

    def leaves(self):
        return self.cells_at_level(len(self.order))

    def all_cells(self):
        out = []
        stack = [self.root]
        while stack:
            c = stack.pop()
            out.append(c)
            stack.extend(c.children)
        return out

    def to_json(self):
        def dump(cell):
            entry = {
                "index": list(cell.index),
                "kind": cell.kind,
                "cylinder": cell.cylinder,
                "sample": [str(a) for a in cell.sample.coords],
            }
            if cell.truth is not None:
                entry["truth"] = cell.truth
            if cell.signs:
                entry["signs"] = {str(p): s for p, s in cell.signs.items()}
            if cell.children:
                entry["stack"] = [dump(c) for c in cell.children]
            return entry

        return json.dumps({
            "order": list(self.order.names),
            "provenance": {str(k): sorted(str(p) for p in ps)
                           for k, ps in self.provenance.items()},
            "root": dump(self.root),
        }, indent=2)


# ---------------------------------------------------------------------------
# stack construction


def _sector_samples(roots):
    """Rational sector samples strictly interleaving the given sorted roots."""
    if not roots:
        return [Fraction(0)]
    samples = [Fraction(floor(roots[0].lo)) - 1]
    for a, b in zip(roots, roots[1:]):
        while a.hi > b.lo:
            a.refine()
            b.refine()
        samples.append((a.hi + b.lo) / 2)
    samples.append(Fraction(ceil(roots[-1].hi)) + 1)
    return samples


def _build_stack(base, roots, contributors, polys_in_order, order):
    """The 2r+1 alternating cells over `base` for the given section roots."""
    sectors = _sector_samples(roots)
    cells = []
    for i, rational in enumerate(sectors):
        sample = base.sample.extended(AlgebraicNumber.from_rational(rational))
        cells.append(Cell(base.index + (2 * i + 1,), sample, "sector", parent=base))
        if i < len(roots):
            sample = base.sample.extended(roots[i])
            section = Cell(base.index + (2 * i + 2,), sample, "section", parent=base)
            for gi in contributors[i]:
                section.signs[polys_in_order[gi]] = 0
            cells.append(section)
    return cells


def lift_stack(cell, level_polys, ec_at_base_level, v):
    """Stack over `cell` in variable v.

    If the base level carries an EC and the base cell is a sector, the stack
    is the single cylinder cell (real root isolation is skipped there).
    Nullification of a lifting polynomial raises WellOrientednessError.
    """
    base_sample = cell.sample
    if ec_at_base_level and cell.kind == "sector":
        sample = base_sample.extended(AlgebraicNumber.from_rational(0))
        return [Cell(cell.index + (1,), sample, "sector", cylinder=True, parent=cell)]
    polys = sorted(level_polys, key=str)
    groups = []
    for p in polys:
        rts = roots_above(p, base_sample, v)
        if rts is IDENTICALLY_ZERO:
            raise WellOrientednessError(
                "lifting polynomial %s vanishes identically over cell %r"
                % (p, cell.index))
        groups.append(rts)
    roots, contributors = merge_roots(groups)
    return _build_stack(cell, roots, contributors, polys, cell.sample.order)


def build_cad(plan, cell_cap=1_000_000):
    """Lift a projection plan into a full CAD tree of R^n.

    Signs of lifting polynomials are recorded on section cells where they
    vanish; other signs are computed on demand (see cell_sign) and memoized.
    """
    order = plan.order
    root = Cell((), SamplePoint(order, ()), None)
    frontier = [root]
    total = 1
    provenance = {}
    for k in range(1, len(order) + 1):
        level = plan.level(k)
        provenance[k] = set(level.lifting_polys)
        v = level.var
        ec_below = k > 1 and plan.level(k - 1).ec is not None
        next_frontier = []
        for cell in frontier:
            stack = lift_stack(cell, level.lifting_polys, ec_below, v)
            cell.children = stack
            total += len(stack)
            if total > cell_cap:
                raise CapExceededError(
                    "cell count exceeded cap %d at level %d" % (cell_cap, k))
            next_frontier.extend(stack)
        frontier = next_frontier
    return CADTree(order, plan, root, provenance)


# ---------------------------------------------------------------------------
# signs and truth


def cell_sign(cell, poly, order):
    """Exact sign of poly at the cell's sample, memoized on the ancestor cell
    at the polynomial's own level (shared by the whole subtree)."""
    if poly.is_constant():
        c = poly.constant_value()
        return 0 if c == 0 else (1 if c > 0 else -1)
    mv = poly.main_variable()
    level = order.level(mv)
    target = cell
    while target.level > level:
        target = target.parent
    if poly not in target.signs:
        target.signs[poly] = sign_at(poly, target.sample)
    return target.signs[poly]


def truth_assign(tree, f):
    """Assign the truth of a quantifier-free formula to every top cell."""
    matrix = f.matrix if hasattr(f, "matrix") else f
    order = tree.order
    for leaf in tree.leaves():
        leaf.truth = matrix.evaluate(lambda p, c=leaf: cell_sign(c, p, order))
    return tree


def cell_count(tree):
    """Exact cell counts.

    total is the number of cells of the decomposition of R^n (the top-level
    cells); per_level[k-1] counts the cells of the induced CAD of R^k;
    sections/sectors classify the top-level cells by their level-n kind.
    """
    n = len(tree.order)
    per_level = [0] * n
    sections = sectors = 0
    stack = list(tree.root.children)
    while stack:
        c = stack.pop()
        per_level[c.level - 1] += 1
        if c.level == n:
            if c.is_section():
                sections += 1
            else:
                sectors += 1
        stack.extend(c.children)
    return {
        "total": per_level[-1] if n else 0,
        "per_level": per_level,
        "sections": sections,
        "sectors": sectors,
    }


def locate(tree, point):
    """The top-level cell containing an all-rational point.

    The stack boundaries stored in the tree sit over each base cell's
    sample, so the point's own stack boundaries are recomputed by isolating
    roots over the point's prefix; delineability makes the two stacks agree
    position by position."""
    point = [Fraction(q) for q in point]
    if len(point) != len(tree.order):
        raise ValueError("point dimension %d != %d" % (len(point), len(tree.order)))
    cell = tree.root
    prefix = SamplePoint(tree.order, ())
    for k, q in enumerate(point, start=1):
        stack = cell.children
        if len(stack) == 1 and stack[0].cylinder:
            cell = stack[0]
            prefix = prefix.extended(q)
            continue
        v = tree.order.names[k - 1]
        groups = []
        for p in sorted(tree.provenance[k], key=str):
            roots = roots_above(p, prefix, v)
            if roots is IDENTICALLY_ZERO:
                raise WellOrientednessError(
                    "%s vanishes identically at the query prefix" % p)
            groups.append(roots)
        merged, _ = merge_roots(groups)
        if 2 * len(merged) + 1 != len(stack):
            raise RealLocateError(
                "query stack has %d sections but the cell stack has %d"
                % (len(merged), (len(stack) - 1) // 2))
        chosen = None
        for i, root in enumerate(merged):
            c = compare_rational(root, q)
            if c == 0:
                chosen = stack[2 * i + 1]
                break
            if c > 0:  # first boundary above the point: previous sector
                chosen = stack[2 * i]
                break
        if chosen is None:
            chosen = stack[-1]
        cell = chosen
        prefix = prefix.extended(q)
    return cell
