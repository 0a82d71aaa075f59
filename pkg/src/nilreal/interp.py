"""The end-to-end interpretation: real-field arithmetic carried out inside
the group.

Numbers are classes of the vertical-axis subgroup modulo the center,
tagged by their b component and carried by the canonical representative
from the dilated group's conjugation orbit.  Addition and multiplication
never touch field arithmetic: a class is lifted to the group, projected
to the plane, pushed through the von Staudt constructions (incidence
primitives only), and the output axis point is read back as a class after
a collinearity check performed by the group-level predicate.  The integer
predicate is membership of the lift in the integer-axis subgroup, by its
definable form.

Everything here is demonstrated over the quadratic field, not all of the
reals: every formula involved is algebraic, so its restriction to the
field of the implementation is exactly the implemented structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .dilated import (
    GPrimeElem,
    in_embedded_copy,
    centralizer_factors,
    orbit_conjugate,
    rep_of_value,
)
from .dilated import in_centralizer as gp_in_centralizer
from .errors import DomainError, UsageError
from .geometry import AffPoint, product_on_axis, sum_on_axis
from .heisenberg import (
    EPoint,
    GElem,
    LineSubgroup,
    axis_subgroup_definable,
    coll,
    in_centralizer,
    integer_axis_definable,
    is_line_pair,
    line_predicates,
    project_to_plane,
)
from .qfield import ONE, ZERO, QuadRat, as_quadrat


def _q(x) -> QuadRat:
    v = as_quadrat(x)
    if v is None:
        raise TypeError(f"expected a scalar, got {x!r}")
    return v


@dataclass(frozen=True)
class RNum:
    """A number-line class: all group classes [0, b, c] with the same b.

    The tag b determines the class (two lifts agree exactly when their b
    components do), and the canonical dilated-group representative
    [0, b, 0, 1] is available as ``representative``.
    """

    b: QuadRat

    def __post_init__(self):
        object.__setattr__(self, "b", _q(self.b))

    @property
    def representative(self) -> GPrimeElem:
        return rep_of_value(self.b)

    def __str__(self) -> str:
        return str(self.b)


def encode(t) -> RNum:
    """The number t as a number-line class."""
    return RNum(_q(t))


def decode(r: RNum) -> QuadRat:
    """The number tagged by a class; inverse of encode."""
    return r.b


def class_of(g: GElem) -> RNum:
    """The class of a vertical-axis group element; its c part is forgotten."""
    if not g.a.is_zero():
        raise DomainError("element is outside the vertical-axis subgroup")
    return RNum(g.b)


_ZERO_CLASS = GElem(ZERO, ZERO, ZERO)
_UNIT_CLASS = GElem(ZERO, ONE, ZERO)
_AUX_CLASS = GElem(ONE, ZERO, ZERO)


def _lift(r: RNum) -> GElem:
    # read the lift off the dilated-group representative, not off raw fields
    rep = r.representative
    return GElem(rep.a, rep.b, rep.c)


def _plane_point(g: GElem) -> AffPoint:
    e = project_to_plane(g)
    return AffPoint(e.a, e.b)


def _class_of_plane_point(p: AffPoint) -> RNum:
    # the on-axis test goes through the group collinearity predicate
    e = EPoint(p.u, p.v)
    zero = project_to_plane(_ZERO_CLASS)
    unit = project_to_plane(_UNIT_CLASS)
    if not coll(zero, unit, e):
        raise DomainError("constructed point is off the number axis")
    return RNum(p.v)


def interp_add(x: RNum, y: RNum) -> RNum:
    """Sum of classes, computed by the incidence construction alone."""
    px = _plane_point(_lift(x))
    py = _plane_point(_lift(y))
    aux = _plane_point(_AUX_CLASS)
    return _class_of_plane_point(sum_on_axis(px, py, aux))


def interp_mul(x: RNum, y: RNum) -> RNum:
    """Product of classes, computed by the incidence construction alone."""
    px = _plane_point(_lift(x))
    py = _plane_point(_lift(y))
    aux = _plane_point(_AUX_CLASS)
    return _class_of_plane_point(product_on_axis(px, py, aux))


def interp_is_int(x: RNum) -> bool:
    """Integer predicate: the lift lands in the integer-axis subgroup,
    decided by the definable route (line membership plus a centralizer)."""
    return integer_axis_definable(_lift(x))


FormulaValue = Union[
    bool,
    GPrimeElem,
    Optional[LineSubgroup],
    Optional[tuple[GPrimeElem, GPrimeElem]],
]


def normalize_formula_id(formula_id: str) -> str:
    return formula_id.strip().lower().replace("-", "_")


def _want(args: Sequence, kinds: tuple[type, ...], what: str):
    if len(args) != len(kinds):
        raise UsageError(f"{what} takes {len(kinds)} argument(s), got {len(args)}")
    for i, (arg, kind) in enumerate(zip(args, kinds)):
        if not isinstance(arg, kind):
            raise UsageError(
                f"{what}: argument {i + 1} must be a {kind.__name__}, got "
                f"{type(arg).__name__}"
            )
    return args


def _formula_coll(args: Sequence) -> bool:
    p, q, r = _want(args, (EPoint, EPoint, EPoint), "coll")
    return coll(p, q, r)


def _formula_centralizer(args: Sequence) -> bool:
    if len(args) == 2 and all(isinstance(a, GPrimeElem) for a in args):
        g, h = args
        return gp_in_centralizer(h, g)
    g, h = _want(args, (GElem, GElem), "centralizer")
    return in_centralizer(h, g)


def _formula_in_l(args: Sequence) -> bool:
    a, b, h = _want(args, (QuadRat, QuadRat, GElem), "in_l")
    return line_predicates(a, b).by_centralizers(h)


def _formula_in_a(args: Sequence) -> bool:
    (h,) = _want(args, (GElem,), "in_a")
    return axis_subgroup_definable(h)


def _formula_in_b(args: Sequence) -> bool:
    (h,) = _want(args, (GElem,), "in_b")
    return integer_axis_definable(h)


def _formula_is_line_pair(args: Sequence) -> Optional[LineSubgroup]:
    g1, g2 = _want(args, (GElem, GElem), "is_line_pair")
    return is_line_pair(g1, g2)


def _formula_orbit(args: Sequence) -> GPrimeElem:
    (g,) = _want(args, (GPrimeElem,), "orbit")
    return orbit_conjugate(g)


def _formula_product_recovery(args: Sequence):
    (h,) = _want(args, (GPrimeElem,), "product_recovery")
    if not in_embedded_copy(h):
        return None
    return centralizer_factors(h)


_CATALOG: dict[str, Callable[[Sequence], FormulaValue]] = {
    "coll": _formula_coll,
    "centralizer": _formula_centralizer,
    "in_l": _formula_in_l,
    "in_a": _formula_in_a,
    "in_b": _formula_in_b,
    "is_line_pair": _formula_is_line_pair,
    "orbit": _formula_orbit,
    "product_recovery": _formula_product_recovery,
}


def formula_names() -> tuple[str, ...]:
    return tuple(sorted(_CATALOG))


def definable_reals_demo(formula_id: str, args: Sequence) -> FormulaValue:
    """Evaluate one formula from the fixed catalog on parsed arguments.

    Pure dispatch: ids are case-insensitive and hyphen/underscore agnostic;
    anything outside the catalog is a usage error.
    """
    key = normalize_formula_id(formula_id)
    handler = _CATALOG.get(key)
    if handler is None:
        known = ", ".join(formula_names())
        raise UsageError(f"unknown formula {formula_id!r} (known: {known})")
    return handler(args)
