"""Exact real-field arithmetic recovered from a nilpotent group quotient.

The library implements, over the computable field Q(sqrt 2):

- `qfield`: exact scalars with decidable sign, floor, and integrality;
- `heisenberg`: the Heisenberg group, its quotient by the integer center,
  centralizers, line subgroups, and plane collinearity;
- `dilated`: the extension by positive dilations, where the number line
  acquires a canonical system of representatives;
- `geometry`: affine incidence primitives and the von Staudt sum and
  product constructions;
- `interp`: numbers as group classes, with addition, multiplication, and
  the integer predicate computed purely through group and incidence
  formulas;
- `termlang` and `cli`: the input language and the command-line front end;
- `checks`: seeded invariant suites for all of the above.
"""

from .checks import CheckResult, SUITE_NAMES, run_suite
from .dilated import (
    DILATE_2,
    GPrimeElem,
    SHEAR_A,
    SHEAR_B,
    SHEAR_B_TWISTED,
    central_in_embedded,
    centralizer_factors,
    embed,
    in_embedded_copy,
    orbit_conjugate,
    rep_of_value,
    value_of_rep,
)
from .errors import DomainError, ParseError, UsageError
from .geometry import (
    AXIS,
    ORIGIN,
    UNIT,
    AffLine,
    AffPoint,
    LineRelation,
    axis_point,
    axis_value,
    coll_det,
    is_parallel,
    line_through,
    meet,
    parallel_through,
    product_on_axis,
    sum_on_axis,
    vs_add,
    vs_mul,
)
from .heisenberg import (
    AXIS_LINE,
    EPoint,
    GElem,
    HElem,
    LinePredicates,
    LineSubgroup,
    axis_subgroup_definable,
    check_2divisible,
    coll,
    in_axis_subgroup,
    in_centralizer,
    in_integer_axis_subgroup,
    integer_axis_definable,
    is_central,
    is_line_pair,
    line_predicates,
    project,
    project_to_plane,
)
from .interp import (
    RNum,
    class_of,
    decode,
    definable_reals_demo,
    encode,
    formula_names,
    interp_add,
    interp_is_int,
    interp_mul,
)
from .qfield import ONE, QuadRat, Rational, SQRT2, TWO, ZERO, as_quadrat
from .termlang import (
    Call,
    Expr,
    GLit,
    GPLit,
    Mul,
    PointLit,
    Pow,
    ScalarLit,
    Token,
    eval_expr,
    format_expr,
    parse_element_text,
    parse_expr,
    parse_expr_text,
    parse_gelem_text,
    parse_gprime_text,
    parse_point_text,
    parse_scalar,
    parse_scalar_text,
    tokenize,
)

__all__ = [
    "AXIS",
    "AXIS_LINE",
    "AffLine",
    "AffPoint",
    "Call",
    "CheckResult",
    "DILATE_2",
    "DomainError",
    "EPoint",
    "Expr",
    "GElem",
    "GLit",
    "GPLit",
    "GPrimeElem",
    "HElem",
    "LinePredicates",
    "LineRelation",
    "LineSubgroup",
    "Mul",
    "ONE",
    "ORIGIN",
    "ParseError",
    "PointLit",
    "Pow",
    "QuadRat",
    "RNum",
    "Rational",
    "SHEAR_A",
    "SHEAR_B",
    "SHEAR_B_TWISTED",
    "SQRT2",
    "SUITE_NAMES",
    "ScalarLit",
    "TWO",
    "Token",
    "UNIT",
    "UsageError",
    "ZERO",
    "as_quadrat",
    "axis_point",
    "axis_subgroup_definable",
    "axis_value",
    "central_in_embedded",
    "centralizer_factors",
    "check_2divisible",
    "class_of",
    "coll",
    "coll_det",
    "decode",
    "definable_reals_demo",
    "embed",
    "encode",
    "eval_expr",
    "format_expr",
    "formula_names",
    "in_axis_subgroup",
    "in_centralizer",
    "in_embedded_copy",
    "in_integer_axis_subgroup",
    "integer_axis_definable",
    "interp_add",
    "interp_is_int",
    "interp_mul",
    "is_central",
    "is_line_pair",
    "is_parallel",
    "line_predicates",
    "line_through",
    "meet",
    "orbit_conjugate",
    "parallel_through",
    "parse_element_text",
    "parse_expr",
    "parse_expr_text",
    "parse_gelem_text",
    "parse_gprime_text",
    "parse_point_text",
    "parse_scalar",
    "parse_scalar_text",
    "product_on_axis",
    "project",
    "project_to_plane",
    "rep_of_value",
    "run_suite",
    "sum_on_axis",
    "tokenize",
    "value_of_rep",
    "vs_add",
    "vs_mul",
]
