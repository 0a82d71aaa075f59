"""Exact affine incidence geometry over the quadratic field, plus the
von Staudt constructions that recover addition and multiplication of
numbers placed on a fixed axis using nothing but lines through point
pairs, parallels, and intersections.

Numbers live on the vertical axis u = 0, with t encoded as the point
(0, t).  The constructions are written against the incidence primitives
only: they never touch coordinates, so their correctness is a statement
about the incidence structure rather than about coordinate algebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import DomainError
from .qfield import ONE, ZERO, QuadRat, as_quadrat


def _q(x) -> QuadRat:
    v = as_quadrat(x)
    if v is None:
        raise TypeError(f"expected a scalar, got {x!r}")
    return v


@dataclass(frozen=True)
class AffPoint:
    u: QuadRat
    v: QuadRat

    def __post_init__(self):
        object.__setattr__(self, "u", _q(self.u))
        object.__setattr__(self, "v", _q(self.v))

    def __str__(self) -> str:
        return f"({self.u},{self.v})"


@dataclass(frozen=True)
class AffLine:
    """Locus a*u + b*v + c = 0, scaled so the first nonzero of (a, b) is 1.

    The normalization makes structural equality coincide with equality of
    loci, so lines can be compared with == directly.
    """

    a: QuadRat
    b: QuadRat
    c: QuadRat

    def __post_init__(self):
        a, b, c = _q(self.a), _q(self.b), _q(self.c)
        lead = a if not a.is_zero() else b
        if lead.is_zero():
            raise DomainError("degenerate line coefficients (0, 0)")
        object.__setattr__(self, "a", a / lead)
        object.__setattr__(self, "b", b / lead)
        object.__setattr__(self, "c", c / lead)

    def contains(self, p: AffPoint) -> bool:
        return (self.a * p.u + self.b * p.v + self.c).is_zero()

    def __str__(self) -> str:
        return f"<{self.a},{self.b},{self.c}>"


class LineRelation(enum.Enum):
    """Non-point outcomes of meet: the three-way contract made explicit."""

    PARALLEL = "parallel"
    COINCIDENT = "coincident"


AXIS = AffLine(ONE, ZERO, ZERO)
ORIGIN = AffPoint(ZERO, ZERO)
UNIT = AffPoint(ZERO, ONE)


def line_through(p: AffPoint, q: AffPoint) -> AffLine:
    """The unique line containing two distinct points."""
    if p == q:
        raise DomainError("degenerate pair")
    return AffLine(p.v - q.v, q.u - p.u, p.u * q.v - q.u * p.v)


def is_parallel(l: AffLine, m: AffLine) -> bool:
    """Same direction, coincident lines included."""
    return (l.a * m.b - m.a * l.b).is_zero()


def meet(l: AffLine, m: AffLine) -> Union[AffPoint, LineRelation]:
    """Unique intersection point, or the reason there is none."""
    if l == m:
        return LineRelation.COINCIDENT
    det = l.a * m.b - m.a * l.b
    if det.is_zero():
        return LineRelation.PARALLEL
    return AffPoint((l.b * m.c - m.b * l.c) / det, (m.a * l.c - l.a * m.c) / det)


def parallel_through(l: AffLine, p: AffPoint) -> AffLine:
    """The unique line through p parallel to l; l itself when p is on l."""
    return AffLine(l.a, l.b, -(l.a * p.u + l.b * p.v))


def coll_det(p: AffPoint, q: AffPoint, r: AffPoint) -> bool:
    """Determinant collinearity test, the geometric ground truth."""
    lhs = (q.u - p.u) * (r.v - p.v)
    rhs = (q.v - p.v) * (r.u - p.u)
    return (lhs - rhs).is_zero()


def _meet_point(l: AffLine, m: AffLine) -> AffPoint:
    # construction steps only ever intersect transversal lines
    p = meet(l, m)
    if not isinstance(p, AffPoint):
        raise DomainError("construction lines failed to meet in a point")
    return p


def _require_off_axis(aux: AffPoint) -> None:
    if parallel_through(AXIS, aux) == AXIS:
        raise DomainError("auxiliary point lies on the axis")


def sum_on_axis(px: AffPoint, py: AffPoint, aux: AffPoint) -> AffPoint:
    """Point encoding x + y, built from the points encoding x and y.

    Translate the segment from the origin to px along the parallelogram
    spanned by aux: the vertical through aux and the parallel transport of
    the origin-aux line through py pin the translated copy of aux, and the
    line through that copy parallel to the aux-px line returns to the axis
    at x + y.  Incidence primitives only; no coordinates.
    """
    _require_off_axis(aux)
    vertical = parallel_through(AXIS, aux)
    spine = line_through(ORIGIN, aux)
    shifted = _meet_point(parallel_through(spine, py), vertical)
    return _meet_point(parallel_through(line_through(aux, px), shifted), AXIS)


def product_on_axis(px: AffPoint, py: AffPoint, aux: AffPoint) -> AffPoint:
    """Point encoding x * y, built from the points encoding x and y.

    Scale aux by x along the origin-aux line, using the unit point to
    calibrate: the parallel to the unit-aux line through px meets the
    spine at aux scaled by x, and transporting the aux-py line through
    that scaled point returns to the axis at x * y.
    """
    _require_off_axis(aux)
    spine = line_through(ORIGIN, aux)
    scaled = _meet_point(parallel_through(line_through(UNIT, aux), px), spine)
    return _meet_point(parallel_through(line_through(aux, py), scaled), AXIS)


def axis_point(t) -> AffPoint:
    """Encode the number t as the axis point (0, t)."""
    return AffPoint(ZERO, _q(t))


def axis_value(p: AffPoint) -> QuadRat:
    """Decode an axis point back to its number."""
    if not p.u.is_zero():
        raise DomainError("point is off the number axis")
    return p.v


def vs_add(x, y, aux: AffPoint) -> QuadRat:
    """Von Staudt sum: equals x + y for every auxiliary point off the axis."""
    return axis_value(sum_on_axis(axis_point(x), axis_point(y), aux))


def vs_mul(x, y, aux: AffPoint) -> QuadRat:
    """Von Staudt product: equals x * y for every auxiliary point off the axis."""
    return axis_value(product_on_axis(axis_point(x), axis_point(y), aux))
