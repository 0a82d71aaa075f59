"""Independent oracles and samplers for the test suite.

The sign and floor oracles work on plain Fractions with interval
arithmetic around sqrt2 (starting from the convergents 140/99 < sqrt2 <
99/70 and refining by Newton steps), so they share no logic with the
library's sign procedure.  The group-law oracles multiply literal 3x3
matrices entry by entry and read the result back off the matrix shape.
"""

from fractions import Fraction
from random import Random

from nilreal import GElem, GPrimeElem, HElem, ONE, QuadRat, ZERO

_LO = Fraction(140, 99)
_HI = Fraction(99, 70)


def _interval_sign_pq(p: Fraction, q: Fraction) -> int:
    """Sign of p + q*sqrt2 by shrinking a rational interval around sqrt2."""
    if q == 0:
        return (p > 0) - (p < 0)
    lo, hi = _LO, _HI
    while True:
        below = p + q * (lo if q > 0 else hi)
        above = p + q * (hi if q > 0 else lo)
        if below > 0:
            return 1
        if above < 0:
            return -1
        hi = (hi + 2 / hi) / 2
        lo = 2 / hi


def interval_sign(u: QuadRat) -> int:
    return _interval_sign_pq(u.p, u.q)


def floor_oracle(u: QuadRat) -> int:
    """Floor of p + q*sqrt2, bracketing with the interval sign oracle."""
    p, q = u.p, u.q
    if q == 0:
        return p.numerator // p.denominator
    lo, hi = _LO, _HI
    for _ in range(3):
        hi = (hi + 2 / hi) / 2
        lo = 2 / hi
    rough = p + q * (lo if q > 0 else hi)
    n = rough.numerator // rough.denominator
    while _interval_sign_pq(p - n, q) < 0:
        n -= 1
    while _interval_sign_pq(p - (n + 1), q) >= 0:
        n += 1
    return n


Mat3 = tuple


def mat3_mul(m: Mat3, n: Mat3) -> Mat3:
    idx = range(3)
    rows = []
    for i in idx:
        row = []
        for j in idx:
            acc = QuadRat(0)
            for k in idx:
                acc = acc + m[i][k] * n[k][j]
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def helem_matrix(h: HElem) -> Mat3:
    return ((ONE, h.a, h.c), (ZERO, ONE, h.b), (ZERO, ZERO, ONE))


def gelem_matrix(g: GElem) -> Mat3:
    return ((ONE, g.a, g.c), (ZERO, ONE, g.b), (ZERO, ZERO, ONE))


def gprime_matrix(g: GPrimeElem) -> Mat3:
    return ((ONE, g.a, g.c), (ZERO, g.x, g.b), (ZERO, ZERO, ONE))


def _assert_unitriangular(m: Mat3):
    assert m[0][0] == ONE and m[2][2] == ONE
    assert m[1][0] == ZERO and m[2][0] == ZERO and m[2][1] == ZERO


def helem_mul_oracle(g: HElem, h: HElem) -> HElem:
    m = mat3_mul(helem_matrix(g), helem_matrix(h))
    _assert_unitriangular(m)
    assert m[1][1] == ONE
    return HElem(m[0][1], m[1][2], m[0][2])


def gelem_mul_oracle(g: GElem, h: GElem) -> GElem:
    # multiply lifts as matrices; the class constructor canonicalizes c
    m = mat3_mul(gelem_matrix(g), gelem_matrix(h))
    _assert_unitriangular(m)
    assert m[1][1] == ONE
    return GElem(m[0][1], m[1][2], m[0][2])


def gprime_mul_oracle(g: GPrimeElem, h: GPrimeElem) -> GPrimeElem:
    m = mat3_mul(gprime_matrix(g), gprime_matrix(h))
    _assert_unitriangular(m)
    return GPrimeElem(m[0][1], m[1][2], m[0][2], m[1][1])


# bounded-height samplers (|num| <= 100, den <= 100)


def rand_fraction(rng: Random) -> Fraction:
    return Fraction(rng.randint(-100, 100), rng.randint(1, 100))


def rand_quadrat(rng: Random) -> QuadRat:
    shape = rng.randrange(6)
    if shape == 0:
        return QuadRat(rng.randint(-100, 100))
    if shape == 1:
        return QuadRat(rand_fraction(rng))
    if shape == 2:
        return QuadRat(0, rand_fraction(rng))
    return QuadRat(rand_fraction(rng), rand_fraction(rng))


def rand_nonzero_quadrat(rng: Random) -> QuadRat:
    while True:
        u = rand_quadrat(rng)
        if not u.is_zero():
            return u


def rand_helem(rng: Random) -> HElem:
    return HElem(rand_quadrat(rng), rand_quadrat(rng), rand_quadrat(rng))


def rand_gelem(rng: Random) -> GElem:
    return GElem(rand_quadrat(rng), rand_quadrat(rng), rand_quadrat(rng))


def rand_gprime(rng: Random) -> GPrimeElem:
    while True:
        x = rand_quadrat(rng)
        if x.sign() == 1:
            break
    return GPrimeElem(rand_quadrat(rng), rand_quadrat(rng), rand_quadrat(rng), x)
