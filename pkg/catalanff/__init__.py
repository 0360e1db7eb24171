"""
catalanff - Catalan's equation over function fields

Exact finite field, polynomial and function field arithmetic, L-polynomials
and class numbers of constant field extensions, the class-number criterion
for X^m - Y^n = 1 and bounded searches for its solutions in O_F.
"""

from .gf import PrimePowerField, FieldElement, make_field, extension_field, field_arith
from .polyarith import (
    Polynomial,
    poly_arith,
    poly_gcd,
    is_squarefree,
    is_irreducible,
    poly_mth_roots,
    roots_of_unity_factors,
    parse_polynomial,
)
from .ffield import (
    CurveModel,
    RingElement,
    make_curve,
    ring_arith,
    pole_order,
    enumerate_by_pole_order,
    count_by_pole_order,
    count_points,
    ring_mth_roots,
)
from .zeta import (
    LPolynomial,
    lpoly_from_counts,
    class_number,
    cyclotomic_degree,
    constant_extension_class_number,
    curve_lpolynomial,
)
from .catalan import (
    check_theorem,
    search,
    counterexample,
    verify_lemma2,
    lemma2_constant_solutions,
    check_lemma1,
)
from .curve_spec import CurveSpec, parse_curve_spec, load_curve
from .results import Status, TheoremVerdict, SearchReport, Solution, LemmaReport
from .config import CatalanConfig
from .exceptions import (
    CatalanError,
    FieldError,
    PolynomialError,
    CurveModelError,
    BudgetExceededError,
    ZetaError,
    SearchError,
    ConfigurationError,
    CurveSpecError,
)
from .version import __version__

__all__ = [
    "PrimePowerField",
    "FieldElement",
    "make_field",
    "extension_field",
    "field_arith",
    "Polynomial",
    "poly_arith",
    "poly_gcd",
    "is_squarefree",
    "is_irreducible",
    "poly_mth_roots",
    "roots_of_unity_factors",
    "parse_polynomial",
    "CurveModel",
    "RingElement",
    "make_curve",
    "ring_arith",
    "pole_order",
    "enumerate_by_pole_order",
    "count_by_pole_order",
    "count_points",
    "ring_mth_roots",
    "LPolynomial",
    "lpoly_from_counts",
    "class_number",
    "cyclotomic_degree",
    "constant_extension_class_number",
    "curve_lpolynomial",
    "check_theorem",
    "search",
    "counterexample",
    "verify_lemma2",
    "lemma2_constant_solutions",
    "check_lemma1",
    "CurveSpec",
    "parse_curve_spec",
    "load_curve",
    "Status",
    "TheoremVerdict",
    "SearchReport",
    "Solution",
    "LemmaReport",
    "CatalanConfig",
    "CatalanError",
    "FieldError",
    "PolynomialError",
    "CurveModelError",
    "BudgetExceededError",
    "ZetaError",
    "SearchError",
    "ConfigurationError",
    "CurveSpecError",
    "__version__",
]
