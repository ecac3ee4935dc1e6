"""cadec: exact cylindrical algebraic decomposition with equational
constraints.

Sparse exact-rational polynomials, real algebraic numbers, Groebner bases,
a small first-order formula layer, sign-invariant and reduced (equational
constraint) projection/lifting, quantifier-prefix decision, and a benchmark
harness for a doubly-exponential quantified formula family.
"""

from .polynomial import (
    VarOrder,
    Polynomial,
    PolynomialError,
    ParseError,
    ExactDivisionError,
    parse_poly,
    poly_to_str,
    integer_normalized,
    exact_div,
    poly_gcd,
    content_primitive,
    is_primitive,
    resultant,
    discriminant,
    squarefree_part,
    squarefree_basis,
)
from .realalg import (
    AlgebraicNumber,
    RealAlgebraError,
    SamplePoint,
    isolate_real_roots,
    sign_at,
    roots_above,
    compare,
    compare_rational,
)
from .groebner import (
    GroebnerError,
    MonomialOrder,
    IdealBasis,
    normal_form,
    s_polynomial,
    buchberger,
    is_trivial,
    dimension,
    elimination_ideal,
)
from .formula import (
    Atom,
    And,
    Or,
    Not,
    Formula,
    FormulaError,
    parse_formula,
    identify_ecs,
    evaluate_at_rationals,
    decide,
)
from .projection import (
    PrimitivityError,
    CapExceededError,
    ECDesignation,
    ProjectionPlan,
    mccallum_project,
    reduced_project,
    propagate_ecs,
    plan_projection,
)
from .lifting import (
    WellOrientednessError,
    Cell,
    CADTree,
    build_cad,
    truth_assign,
    cell_count,
    locate,
)
from .bench import (
    generate_dh,
    dh_target,
    dh_equivalence_sentences,
    bound_eq1,
    BoundReport,
    run_experiment,
    write_csv,
    primitivity_report,
)

__version__ = "1.0.0"
