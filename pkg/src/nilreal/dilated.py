"""The dilated Heisenberg quotient: triangular matrices with a positive
dilation entry, modulo the integer center.

GPrimeElem is the class [a, b, c, x] of the matrix [[1,a,c],[0,x,b],[0,0,1]]
with x > 0, stored with canonical c in [0, 1).  The plain quotient group
embeds as the slice x = 1, and that slice is recovered inside this group as
a product of two centralizers.  Conjugating the unit shear by the dilation
centralizer sweeps out the positive half of the number-line subgroup, which
yields a canonical representative for every number-line class: this is what
makes the number line itself, and not just its quotient, available here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .heisenberg import GElem
from .qfield import ONE, SQRT2, ZERO, QuadRat, as_quadrat


def _q(x) -> QuadRat:
    v = as_quadrat(x)
    if v is None:
        raise TypeError(f"expected a scalar, got {x!r}")
    return v


@dataclass(frozen=True)
class GPrimeElem:
    """Class [a, b, c, x]: canonical c in [0, 1), dilation x strictly positive."""

    a: QuadRat
    b: QuadRat
    c: QuadRat
    x: QuadRat

    def __post_init__(self):
        object.__setattr__(self, "a", _q(self.a))
        object.__setattr__(self, "b", _q(self.b))
        object.__setattr__(self, "c", _q(self.c).frac_part())
        x = _q(self.x)
        if x.sign() != 1:
            raise DomainError("x must be positive")
        object.__setattr__(self, "x", x)

    def __mul__(self, other: "GPrimeElem") -> "GPrimeElem":
        return GPrimeElem(
            other.a + self.a * other.x,
            self.b + self.x * other.b,
            self.c + other.c + self.a * other.b,
            self.x * other.x,
        )

    def inverse(self) -> "GPrimeElem":
        return GPrimeElem(
            -self.a / self.x,
            -self.b / self.x,
            self.a * self.b / self.x - self.c,
            self.x.inv(),
        )

    def __pow__(self, n: int) -> "GPrimeElem":
        base = self if n >= 0 else self.inverse()
        out = GPrimeElem.identity()
        for _ in range(abs(n)):
            out = out * base
        return out

    @classmethod
    def identity(cls) -> "GPrimeElem":
        return cls(ZERO, ZERO, ZERO, ONE)

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c},{self.x}]"


SHEAR_B = GPrimeElem(ZERO, ONE, ZERO, ONE)
SHEAR_B_TWISTED = GPrimeElem(ZERO, SQRT2, ZERO, ONE)
SHEAR_A = GPrimeElem(ONE, ZERO, ZERO, ONE)
DILATE_2 = GPrimeElem(ZERO, ZERO, ZERO, QuadRat(2))


def in_centralizer(h: GPrimeElem, g: GPrimeElem) -> bool:
    """Does h commute with g?  Decided by carrying out both products.

    No closed form is assumed: for instance the full centralizer of the unit
    shear SHEAR_B is {[a,b,c,1] : a integer}, strictly larger than its
    connected component, and the sqrt2-twisted intersection
    C(SHEAR_B) & C(SHEAR_B_TWISTED) is what cuts it back down to {[0,b,c,1]}.
    """
    return g * h == h * g


def embed(g: GElem) -> GPrimeElem:
    """The isomorphism from the plain quotient onto the slice x = 1."""
    return GPrimeElem(g.a, g.b, g.c, ONE)


def centralizer_factors(h: GPrimeElem) -> tuple[GPrimeElem, GPrimeElem]:
    """Factor a slice element as (member of C(SHEAR_B)) * (member of C(SHEAR_A)).

    [a,b,c,1] = [0,b,c,1] * [a,0,0,1]; only x = 1 elements factor this way.
    """
    if h.x != ONE:
        raise DomainError("element has a nontrivial dilation part")
    return GPrimeElem(ZERO, h.b, h.c, ONE), GPrimeElem(h.a, ZERO, ZERO, ONE)


def in_embedded_copy(h: GPrimeElem) -> bool:
    """Membership in C(SHEAR_B) * C(SHEAR_A), the embedded copy of the plain
    quotient; each positive answer ships with a verified factorization."""
    if h.x != ONE:
        return False
    lo, hi = centralizer_factors(h)
    return (
        in_centralizer(lo, SHEAR_B)
        and in_centralizer(hi, SHEAR_A)
        and lo * hi == h
    )


def orbit_conjugate(g: GPrimeElem) -> GPrimeElem:
    """Conjugate the unit shear by a member of the dilation centralizer.

    The input must commute with DILATE_2 (i.e. have the form [0,0,c,x]); the
    result is then the shear [0, x, 0, 1], so the orbit of SHEAR_B under such
    conjugation is exactly the positive half of the number-line subgroup.
    """
    if not in_centralizer(g, DILATE_2):
        raise DomainError("conjugator must centralize the dilation by 2")
    return g * SHEAR_B * g.inverse()


def rep_of_value(b) -> GPrimeElem:
    """The canonical representative [0, b, 0, 1] of a number-line class.

    Positive values come from the conjugation orbit, negative ones from its
    inverses, zero from the identity; representatives add on the nose."""
    return GPrimeElem(ZERO, _q(b), ZERO, ONE)


def value_of_rep(h: GPrimeElem) -> QuadRat:
    """Inverse of rep_of_value; rejects anything off the representative set."""
    if not (h.a.is_zero() and h.c.is_zero() and h.x == ONE):
        raise DomainError("not a number-line representative")
    return h.b


def central_in_embedded(h: GPrimeElem) -> bool:
    """Is h in the center of the embedded copy, {[0, 0, c, 1]}?"""
    return h.a.is_zero() and h.b.is_zero() and h.x == ONE
