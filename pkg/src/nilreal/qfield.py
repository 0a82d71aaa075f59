"""Exact arithmetic in the quadratic field K = Q(sqrt 2).

Every scalar in the package is a QuadRat, a pair of rationals (p, q)
standing for the real number p + q*sqrt(2).  Because sqrt(2) is irrational
the pair is a unique name for the real it denotes, so equality, sign,
ordering, floor, and integrality are all decidable and computed exactly.
No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

Rational = Fraction

_COERCIBLE = (int, Fraction)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


@dataclass(frozen=True)
class QuadRat:
    """The element p + q*sqrt(2) of Q(sqrt 2), with p, q exact rationals."""

    p: Fraction
    q: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "p", _as_fraction(self.p))
        object.__setattr__(self, "q", _as_fraction(self.q))

    # -- field structure ----------------------------------------------------

    def __add__(self, other) -> "QuadRat":
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __neg__(self) -> "QuadRat":
        return QuadRat(-self.p, -self.q)

    def __sub__(self, other) -> "QuadRat":
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.p - other.p, self.q - other.q)

    def __rsub__(self, other) -> "QuadRat":
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "QuadRat":
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return QuadRat(
            self.p * other.p + 2 * self.q * other.q,
            self.p * other.q + self.q * other.p,
        )

    __rmul__ = __mul__

    def inv(self) -> "QuadRat":
        """Multiplicative inverse via the conjugate: (p - q*sqrt 2) / (p^2 - 2 q^2)."""
        norm = self.p * self.p - 2 * self.q * self.q
        if norm == 0:
            # p^2 = 2 q^2 forces p = q = 0 since sqrt(2) is irrational.
            raise DomainError("division by zero")
        return QuadRat(self.p / norm, -self.q / norm)

    def __truediv__(self, other) -> "QuadRat":
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> "QuadRat":
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int) -> "QuadRat":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inv()
        out = ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    # -- order structure ----------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real p + q*sqrt(2): -1, 0, or +1.

        When p and q disagree in sign the verdict reduces to comparing
        p^2 with 2 q^2 (the sides cannot tie: sqrt 2 is irrational).
        """
        sp = _fraction_sign(self.p)
        sq = _fraction_sign(self.q)
        if sq == 0:
            return sp
        if sp == 0:
            return sq
        if sp == sq:
            return sp
        return sp if self.p * self.p > 2 * self.q * self.q else sq

    def __lt__(self, other) -> bool:
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        other = as_quadrat(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() >= 0

    def __abs__(self) -> "QuadRat":
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        """The unique integer n with n <= self < n + 1.

        For irrational values the integer is found by exponential
        bracketing followed by binary search, every comparison an exact
        sign test; |p| + 2|q| bounds |self|, so both phases terminate.
        """
        if self.q == 0:
            return self.p.numerator // self.p.denominator
        lo, hi = -1, 1
        while (self - lo).sign() < 0:
            lo *= 2
        while (self - hi).sign() >= 0:
            hi *= 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if (self - mid).sign() >= 0:
                lo = mid
            else:
                hi = mid
        return lo

    def __floor__(self) -> int:
        return self.floor()

    def frac_part(self) -> "QuadRat":
        """self reduced mod 1 into [0, 1)."""
        return self - self.floor()

    # -- classification -----------------------------------------------------

    def is_rational(self) -> bool:
        return self.q == 0

    def is_integer(self) -> bool:
        return self.q == 0 and self.p.denominator == 1

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    # -- presentation ---------------------------------------------------------

    def __str__(self) -> str:
        if self.q == 0:
            return _fraction_str(self.p)
        root = _root_term_str(self.q)
        if self.p == 0:
            return root
        joiner = "+" if self.q > 0 else "-"
        return f"{_fraction_str(self.p)}{joiner}{_root_term_str(abs(self.q))}"

    def __repr__(self) -> str:
        return f"QuadRat({self.p}, {self.q})"


def as_quadrat(x) -> QuadRat | None:
    """Coerce an int, Fraction, or QuadRat to QuadRat; None if impossible."""
    if isinstance(x, QuadRat):
        return x
    if isinstance(x, _COERCIBLE):
        return QuadRat(_as_fraction(x))
    return None


def _fraction_sign(f: Fraction) -> int:
    if f > 0:
        return 1
    if f < 0:
        return -1
    return 0


def _fraction_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _root_term_str(q: Fraction) -> str:
    if q == 1:
        return "r2"
    if q == -1:
        return "-r2"
    return f"{_fraction_str(q)}r2"


ZERO = QuadRat(0)
ONE = QuadRat(1)
TWO = QuadRat(2)
SQRT2 = QuadRat(0, 1)
