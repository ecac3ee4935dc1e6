"""Walk through a sign-invariant decomposition of the plane by the unit
circle: projection, lifting, and the resulting cell structure.
"""

from cadec import VarOrder, parse_formula, plan_projection, build_cad
from cadec.lifting import cell_count, truth_assign

order = VarOrder(["y", "x"])  # lowest variable first; x is projected first
f = parse_formula("x^2 + y^2 - 1 = 0", order)

plan = plan_projection(f, order, ec_policy="none")
print("projection of x^2 + y^2 - 1 onto the y-axis:")
for lvl in plan.levels:
    print("  level %d (%s): %s" % (lvl.level, lvl.var,
                                   sorted(str(p) for p in lvl.projection_polys)))

tree = build_cad(plan)
truth_assign(tree, f)
counts = cell_count(tree)
print("\ncells of R^1 (induced) and R^2:", counts["per_level"])
print("sections/sectors at the top level: %d/%d"
      % (counts["sections"], counts["sectors"]))

print("\nbase line splits at the roots of y^2 - 1:")
for cell in tree.cells_at_level(1):
    print("  %-8s sample y = %s" % (cell.kind, cell.sample.coords[0]))

print("\ncells where the circle equation holds:")
for cell in tree.leaves():
    if cell.truth:
        y, x = cell.sample.coords
        print("  index %s (%s): y = %s, x = %s"
              % (cell.index, cell.kind, y, x))
