"""The Heisenberg group over K = Q(sqrt 2) and its quotient by the integer center.

HElem is the upper unitriangular matrix [[1,a,c],[0,1,b],[0,0,1]].  GElem is
its class modulo the central subgroup of integer-c matrices; the class is
stored with the canonical representative c in [0,1), so equality and hashing
are structural.

On the quotient the commutation test, the family of line subgroups through
the origin, the plane quotient (mod center), and collinearity on that plane
are all computed exactly.  These predicates are the raw material from which
the arithmetic of the number line is rebuilt elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional
from random import Random

from .errors import DomainError
from .qfield import ONE, SQRT2, ZERO, QuadRat, as_quadrat

_HALF = QuadRat(Fraction(1, 2))


def _q(x) -> QuadRat:
    v = as_quadrat(x)
    if v is None:
        raise TypeError(f"expected a scalar, got {x!r}")
    return v


@dataclass(frozen=True)
class HElem:
    """Element (a, b, c) of the ambient group: all of K^3 under the Heisenberg law."""

    a: QuadRat
    b: QuadRat
    c: QuadRat

    def __post_init__(self):
        object.__setattr__(self, "a", _q(self.a))
        object.__setattr__(self, "b", _q(self.b))
        object.__setattr__(self, "c", _q(self.c))

    def __mul__(self, other: "HElem") -> "HElem":
        return HElem(
            self.a + other.a,
            self.b + other.b,
            self.c + other.c + self.a * other.b,
        )

    def inverse(self) -> "HElem":
        return HElem(-self.a, -self.b, self.a * self.b - self.c)

    @classmethod
    def identity(cls) -> "HElem":
        return cls(ZERO, ZERO, ZERO)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class GElem:
    """Class [a, b, c] of the quotient, stored with canonical c in [0, 1).

    Two classes are equal exactly when the a and b entries agree and the c
    entries differ by an integer; canonicalization makes that structural.
    """

    a: QuadRat
    b: QuadRat
    c: QuadRat

    def __post_init__(self):
        object.__setattr__(self, "a", _q(self.a))
        object.__setattr__(self, "b", _q(self.b))
        object.__setattr__(self, "c", _q(self.c).frac_part())

    def __mul__(self, other: "GElem") -> "GElem":
        return GElem(
            self.a + other.a,
            self.b + other.b,
            self.c + other.c + self.a * other.b,
        )

    def inverse(self) -> "GElem":
        return GElem(-self.a, -self.b, self.a * self.b - self.c)

    def __pow__(self, n: int) -> "GElem":
        base = self if n >= 0 else self.inverse()
        out = GElem.identity()
        for _ in range(abs(n)):
            out = out * base
        return out

    @classmethod
    def identity(cls) -> "GElem":
        return cls(ZERO, ZERO, ZERO)

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"


def project(h: HElem) -> GElem:
    """Quotient map from the ambient group: forget the integer part of c."""
    return GElem(h.a, h.b, h.c)


@dataclass(frozen=True)
class EPoint:
    """Point of the plane quotient (everything mod the center), i.e. K^2."""

    a: QuadRat
    b: QuadRat

    def __post_init__(self):
        object.__setattr__(self, "a", _q(self.a))
        object.__setattr__(self, "b", _q(self.b))

    def __add__(self, other: "EPoint") -> "EPoint":
        return EPoint(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EPoint") -> "EPoint":
        return EPoint(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "EPoint":
        return EPoint(-self.a, -self.b)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def project_to_plane(g: GElem) -> EPoint:
    """The homomorphism [a,b,c] -> (a,b) onto K^2; kernel = the center."""
    return EPoint(g.a, g.b)


def is_central(g: GElem) -> bool:
    """Center membership: both off-diagonal shear entries vanish."""
    return g.a.is_zero() and g.b.is_zero()


def in_centralizer(h: GElem, g: GElem) -> bool:
    """Does h commute with g?  Exactly when a*b' - b*a' is an integer.

    (a, b) come from g and (a', b') from h; the condition restates that the
    commutator of the two classes, always central, has trivial c part.
    """
    return (g.a * h.b - g.b * h.a).is_integer()


@dataclass(frozen=True)
class LineSubgroup:
    """The subgroup of classes whose (a, b) part is proportional to a fixed
    direction; parameters are normalized so the leading entry is 1."""

    a: QuadRat
    b: QuadRat

    def __post_init__(self):
        a, b = _q(self.a), _q(self.b)
        if not a.is_zero():
            b = b / a
            a = ONE
        elif not b.is_zero():
            b = ONE
        else:
            raise DomainError("degenerate line direction (0,0)")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def contains(self, h: GElem) -> bool:
        return (self.a * h.b - self.b * h.a).is_zero()

    def __str__(self) -> str:
        return f"L[{self.a},{self.b}]"


class LinePredicates(NamedTuple):
    """Two pointwise-equivalent readings of the same line subgroup."""

    by_centralizers: Callable[[GElem], bool]
    by_kernel: Callable[[GElem], bool]


def line_predicates(a, b) -> LinePredicates:
    """The line subgroup through direction (a, b), given two ways.

    ``by_centralizers`` intersects the centralizers of [a,b,0] and
    [sqrt2*a, sqrt2*b, 0]; ``by_kernel`` tests a*b' - b*a' = 0 directly.
    They agree pointwise: an integer t with sqrt2*t also an integer is 0.
    """
    a, b = _q(a), _q(b)
    if a.is_zero() and b.is_zero():
        raise DomainError("degenerate line direction (0,0)")
    anchor = GElem(a, b, ZERO)
    twisted = GElem(SQRT2 * a, SQRT2 * b, ZERO)
    line = LineSubgroup(a, b)

    def by_centralizers(h: GElem) -> bool:
        return in_centralizer(h, anchor) and in_centralizer(h, twisted)

    return LinePredicates(by_centralizers, line.contains)


AXIS_LINE = LineSubgroup(ZERO, ONE)
_B_ANCHOR = GElem(ONE, ZERO, ZERO)


def in_axis_subgroup(h: GElem) -> bool:
    """Membership in the vertical-axis subgroup {[0, b, c]}."""
    return h.a.is_zero()


def in_integer_axis_subgroup(h: GElem) -> bool:
    """Membership in the axis subgroup with integer b: {[0, b, c] : b integer}."""
    return h.a.is_zero() and h.b.is_integer()


def axis_subgroup_definable(h: GElem) -> bool:
    """The axis subgroup by its definable route: the line with direction (0, 1)."""
    return AXIS_LINE.contains(h)


def integer_axis_definable(h: GElem) -> bool:
    """The integer-axis subgroup by its definable route: axis line intersected
    with the centralizer of [1, 0, 0]."""
    return AXIS_LINE.contains(h) and in_centralizer(h, _B_ANCHOR)


def is_line_pair(g1: GElem, g2: GElem) -> Optional[LineSubgroup]:
    """Decide whether C(g1) and C(g2) intersect in a line subgroup.

    Writing v1, v2 for the plane parts, the intersection is a line exactly
    when v2 = lam * v1 with lam irrational in K; the line then has direction
    v1.  Otherwise (independent directions, or a rational ratio) the
    intersection is strictly larger than any line and None is returned.
    """
    if is_central(g1) or is_central(g2):
        raise DomainError("centralizer is everything")
    v1 = project_to_plane(g1)
    v2 = project_to_plane(g2)
    cross = v1.a * v2.b - v1.b * v2.a
    if not cross.is_zero():
        return None
    lam = v2.a / v1.a if not v1.a.is_zero() else v2.b / v1.b
    if lam.is_rational():
        return None
    return LineSubgroup(v1.a, v1.b)


def check_2divisible(
    g1: GElem, g2: GElem, rng: Random, samples: int = 12
) -> tuple[bool, Optional[GElem]]:
    """Sampling oracle for 2-divisibility of C(g1) & C(g2).

    Draws members of the intersection, and for each one builds its unique
    square-root candidate in the ambient quotient (the plane part of a square
    root is forced) and asks whether that root lies in the intersection too.
    Returns (True, None) if every sampled member halves inside, otherwise
    (False, witness) with a member that does not.

    The membership of every sample is re-verified with the commutation test,
    so the verdict never trusts the sampler's own linear algebra.
    """
    if is_central(g1) or is_central(g2):
        raise DomainError("centralizer is everything")
    for x in _intersection_samples(g1, g2, rng, samples):
        if not (in_centralizer(x, g1) and in_centralizer(x, g2)):
            raise AssertionError(f"sampler produced a non-member: {x}")
        root = _half(x)
        if not (in_centralizer(root, g1) and in_centralizer(root, g2)):
            return False, x
    return True, None


def _half(x: GElem) -> GElem:
    """A square root of x in the quotient group (its plane part is forced)."""
    return GElem(x.a * _HALF, x.b * _HALF, (x.c - x.a * x.b * _HALF * _HALF) * _HALF)


def _intersection_samples(g1: GElem, g2: GElem, rng: Random, samples: int):
    """Construct members of C(g1) & C(g2) by solving the two integrality
    constraints; generator elements come first so a non-halvable member is
    exhibited whenever one exists."""
    v1 = project_to_plane(g1)
    v2 = project_to_plane(g2)
    cross = v1.a * v2.b - v1.b * v2.a

    def elem(w_a: QuadRat, w_b: QuadRat) -> GElem:
        return GElem(w_a, w_b, _random_fraction(rng))

    if not cross.is_zero():
        # Independent constraints: (s, t) integer pairs pull back to members.
        targets = [(1, 0), (0, 1)]
        targets += [(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(samples)]
        for s, t in targets:
            w_a = (v1.a * t - v2.a * s) / cross
            w_b = (v1.b * t - v2.b * s) / cross
            yield elem(w_a, w_b)
        return

    lam = v2.a / v1.a if not v1.a.is_zero() else v2.b / v1.b
    if lam.is_rational():
        # Members are those with v1-cross value in n*Z, n = denominator of lam.
        n = lam.p.denominator
        d = v1.a * v1.a + v1.b * v1.b
        u_a, u_b = -v1.b / d, v1.a / d  # v1 x u = 1
        ks = [1] + [rng.randint(-5, 5) for _ in range(samples)]
        for k in ks:
            mu = _random_scalar(rng)
            yield elem(u_a * (n * k) + mu * v1.a, u_b * (n * k) + mu * v1.b)
        return

    # Irrational ratio: the intersection is the line through v1.
    for _ in range(samples + 1):
        mu = _random_scalar(rng)
        yield elem(mu * v1.a, mu * v1.b)


def _random_fraction(rng: Random) -> QuadRat:
    return QuadRat(Fraction(rng.randint(-20, 20), rng.randint(1, 20)))


def _random_scalar(rng: Random) -> QuadRat:
    return QuadRat(
        Fraction(rng.randint(-20, 20), rng.randint(1, 20)),
        Fraction(rng.randint(-20, 20), rng.randint(1, 20)),
    )


def coll(p: EPoint, q: EPoint, r: EPoint) -> bool:
    """Collinearity of three plane points, by the group-level definition.

    A line subgroup witnessing collinearity must contain both difference
    vectors; when p != q the only candidate is the line through q - p, so
    the existential is discharged by that canonical witness.  Degenerate
    triples (a repeated point) are collinear by convention.
    """
    u = q - p
    v = r - p
    if u.is_zero() or v.is_zero():
        return True
    witness = LineSubgroup(u.a, u.b)
    return witness.contains(GElem(v.a, v.b, ZERO))
