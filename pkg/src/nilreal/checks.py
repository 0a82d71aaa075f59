"""Seeded invariant suites behind the `check` subcommand.

Each suite replays the algebraic laws its module promises, on random
samples of bounded height (numerators at most 100 in absolute value,
denominators at most 100).  A run is deterministic given (seed, count)
and reports the first counterexample verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable, Optional

from . import dilated, geometry, heisenberg, interp
from .dilated import GPrimeElem, SHEAR_A, SHEAR_B, SHEAR_B_TWISTED
from .errors import UsageError
from .heisenberg import EPoint, GElem, HElem
from .qfield import ONE, SQRT2, ZERO, QuadRat


class CheckFailure(Exception):
    """One invariant violated; the message is the counterexample."""


@dataclass(frozen=True)
class CheckResult:
    suite: str
    passed: int
    total: int
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def _expect(condition: bool, message: str):
    if not condition:
        raise CheckFailure(message)


# bounded-height samplers (|num| <= 100, den <= 100)


def rand_fraction(rng: Random) -> Fraction:
    return Fraction(rng.randint(-100, 100), rng.randint(1, 100))


def rand_quadrat(rng: Random) -> QuadRat:
    # occasionally degenerate to rationals and integers: the edge cases
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


def rand_gelem(rng: Random) -> GElem:
    return GElem(rand_quadrat(rng), rand_quadrat(rng), rand_quadrat(rng))


def rand_helem(rng: Random) -> HElem:
    return HElem(rand_quadrat(rng), rand_quadrat(rng), rand_quadrat(rng))


def rand_gprime(rng: Random) -> GPrimeElem:
    while True:
        x = rand_quadrat(rng)
        if x.sign() == 1:
            break
    return GPrimeElem(rand_quadrat(rng), rand_quadrat(rng), rand_quadrat(rng), x)


def rand_epoint(rng: Random) -> EPoint:
    return EPoint(rand_quadrat(rng), rand_quadrat(rng))


def rand_affpoint(rng: Random) -> geometry.AffPoint:
    return geometry.AffPoint(rand_quadrat(rng), rand_quadrat(rng))


def rand_off_axis(rng: Random) -> geometry.AffPoint:
    while True:
        p = rand_affpoint(rng)
        if not p.u.is_zero():
            return p


# independent sign oracle: interval arithmetic with sqrt2 convergents


def _interval_sign(u: QuadRat) -> int:
    if u.q == 0:
        return (u.p > 0) - (u.p < 0)
    lo, hi = Fraction(140, 99), Fraction(99, 70)  # 140/99 < sqrt2 < 99/70
    while True:
        if u.q > 0:
            below, above = u.p + u.q * lo, u.p + u.q * hi
        else:
            below, above = u.p + u.q * hi, u.p + u.q * lo
        if below > 0:
            return 1
        if above < 0:
            return -1
        hi = (hi + 2 / hi) / 2  # Newton step keeps hi above sqrt2
        lo = 2 / hi


# per-suite single iterations


def _iter_qfield(rng: Random):
    u = rand_quadrat(rng)
    v = rand_quadrat(rng)
    w = rand_quadrat(rng)
    _expect((u + v) + w == u + (v + w), f"addition not associative: {u}, {v}, {w}")
    _expect(u + v == v + u, f"addition not commutative: {u}, {v}")
    _expect((u * v) * w == u * (v * w), f"product not associative: {u}, {v}, {w}")
    _expect(u * v == v * u, f"product not commutative: {u}, {v}")
    _expect(u * (v + w) == u * v + u * w, f"no distributivity: {u}, {v}, {w}")
    _expect((u + (-u)).is_zero(), f"additive inverse broken: {u}")
    if not u.is_zero():
        _expect(u * u.inv() == ONE, f"multiplicative inverse broken: {u}")
    _expect(
        (u * v).sign() == u.sign() * v.sign(),
        f"sign not multiplicative: {u}, {v}",
    )
    s = u + v
    _expect(
        s.sign() == _interval_sign(s),
        f"sign disagrees with the interval oracle: {s}",
    )
    n = u.floor()
    _expect(
        (u - QuadRat(n)).sign() >= 0 and (u - QuadRat(n + 1)).sign() < 0,
        f"floor bracket broken: floor({u}) = {n}",
    )
    if u.is_integer() and (SQRT2 * u).is_integer():
        _expect(u.is_zero(), f"irrationality lemma broken: {u}")
    k = QuadRat(rng.randint(-100, 100))
    if not k.is_zero():
        _expect(
            not (SQRT2 * k).is_integer(),
            f"irrationality lemma broken: sqrt2*{k} integral",
        )


def _iter_group_core(rng: Random):
    g = rand_gelem(rng)
    h = rand_gelem(rng)
    k = rand_gelem(rng)
    _expect((g * h) * k == g * (h * k), f"not associative: {g}, {h}, {k}")
    _expect(g * GElem.identity() == g, f"identity broken: {g}")
    _expect(g * g.inverse() == GElem.identity(), f"inverse broken: {g}")
    prod = g * h
    _expect(
        prod.c.sign() >= 0 and (prod.c - ONE).sign() < 0,
        f"canonical c out of range: {prod}",
    )

    raw = rand_helem(rng)
    z = rng.randint(-5, 5)
    shifted = HElem(raw.a, raw.b, raw.c + QuadRat(z))
    _expect(
        heisenberg.project(raw) == heisenberg.project(shifted),
        f"central shift changes the class: {raw}, shift {z}",
    )

    _expect(
        heisenberg.in_centralizer(h, g) == (g * h == h * g),
        f"centralizer formula disagrees with commutation: {g}, {h}",
    )

    comm = g * h * g.inverse() * h.inverse()
    _expect(heisenberg.is_central(comm), f"commutator not central: {g}, {h}")
    _expect(
        comm.c == (g.a * h.b - h.a * g.b).frac_part(),
        f"commutator c-part wrong: {g}, {h}",
    )

    a = rand_quadrat(rng)
    b = rand_quadrat(rng)
    if a.is_zero() and b.is_zero():
        a = ONE
    preds = heisenberg.line_predicates(a, b)
    _expect(
        preds.by_centralizers(h) == preds.by_kernel(h),
        f"line definitions disagree: direction ({a},{b}), element {h}",
    )

    _expect(
        heisenberg.project_to_plane(g * h)
        == heisenberg.project_to_plane(g) + heisenberg.project_to_plane(h),
        f"plane projection not a homomorphism: {g}, {h}",
    )
    _expect(
        heisenberg.is_central(g) == heisenberg.project_to_plane(g).is_zero(),
        f"projection kernel is not the center: {g}",
    )

    p, q, r = rand_epoint(rng), rand_epoint(rng), rand_epoint(rng)
    det = (q.a - p.a) * (r.b - p.b) - (q.b - p.b) * (r.a - p.a)
    _expect(
        heisenberg.coll(p, q, r) == det.is_zero(),
        f"coll disagrees with the determinant: {p}, {q}, {r}",
    )

    _check_line_pair_case(rng)


def _check_line_pair_case(rng: Random):
    v = rand_epoint(rng)
    if v.is_zero():
        v = EPoint(ONE, ZERO)
    kind = rng.randrange(3)
    if kind == 0:
        lam = QuadRat(rand_fraction(rng), rand_fraction(rng))
        if lam.is_rational():
            lam = lam + SQRT2
        g2 = GElem(lam * v.a, lam * v.b, rand_quadrat(rng))
        expected_line = True
    elif kind == 1:
        lam = QuadRat(rand_fraction(rng))
        if lam.is_zero():
            lam = QuadRat(2)
        g2 = GElem(lam * v.a, lam * v.b, rand_quadrat(rng))
        expected_line = False
    else:
        w = rand_epoint(rng)
        if (v.a * w.b - v.b * w.a).is_zero():
            w = EPoint(-v.b, v.a)  # the perpendicular is always independent
        g2 = GElem(w.a, w.b, rand_quadrat(rng))
        expected_line = False
    g1 = GElem(v.a, v.b, rand_quadrat(rng))
    verdict = heisenberg.is_line_pair(g1, g2)
    _expect(
        (verdict is not None) == expected_line,
        f"line-pair verdict wrong: {g1}, {g2}",
    )
    divisible, witness = heisenberg.check_2divisible(g1, g2, rng)
    _expect(
        divisible == (verdict is not None),
        f"2-divisibility oracle disagrees: {g1}, {g2} (witness {witness})",
    )
    if not divisible:
        _expect(
            witness is not None,
            f"negative divisibility verdict without witness: {g1}, {g2}",
        )


def _iter_gprime(rng: Random):
    g = rand_gprime(rng)
    h = rand_gprime(rng)
    k = rand_gprime(rng)
    _expect((g * h) * k == g * (h * k), f"not associative: {g}, {h}, {k}")
    _expect(g * GPrimeElem.identity() == g, f"identity broken: {g}")
    _expect(g * g.inverse() == GPrimeElem.identity(), f"inverse broken: {g}")
    prod = g * h
    _expect(
        prod.c.sign() >= 0 and (prod.c - ONE).sign() < 0,
        f"canonical c out of range: {prod}",
    )
    _expect(prod.x.sign() == 1, f"dilation part not positive: {prod}")

    ga, gb = rand_gelem(rng), rand_gelem(rng)
    _expect(
        dilated.embed(ga * gb) == dilated.embed(ga) * dilated.embed(gb),
        f"embedding not a homomorphism: {ga}, {gb}",
    )

    flat = GPrimeElem(rand_quadrat(rng), rand_quadrat(rng), rand_quadrat(rng), ONE)
    lo, hi = dilated.centralizer_factors(flat)
    _expect(
        dilated.in_centralizer(lo, SHEAR_B), f"first factor not in C(shear): {flat}"
    )
    _expect(
        dilated.in_centralizer(hi, SHEAR_A), f"second factor not in C(shear): {flat}"
    )
    _expect(lo * hi == flat, f"factorization does not multiply back: {flat}")
    _expect(dilated.in_embedded_copy(flat), f"slice member rejected: {flat}")
    if g.x != ONE:
        _expect(not dilated.in_embedded_copy(g), f"non-slice member accepted: {g}")

    conj = GPrimeElem(ZERO, ZERO, rand_quadrat(rng), g.x)
    _expect(
        dilated.orbit_conjugate(conj) == GPrimeElem(ZERO, g.x, ZERO, ONE),
        f"orbit law broken: conjugator {conj}",
    )

    b = rand_quadrat(rng)
    member = GPrimeElem(ZERO, b, rand_quadrat(rng), ONE)
    rep = dilated.rep_of_value(b)
    _expect(
        dilated.central_in_embedded(member * rep.inverse()),
        f"representative misses its class: {member}",
    )
    other = rand_quadrat(rng)
    if other != b:
        _expect(
            not dilated.central_in_embedded(member * dilated.rep_of_value(other).inverse()),
            f"two representatives hit one class: {member}, {other}",
        )
    _expect(
        dilated.value_of_rep(rep) == b,
        f"representative round-trip broken: {b}",
    )

    a_int = QuadRat(rng.randint(-10, 10))
    candidate = GPrimeElem(a_int, rand_quadrat(rng), rand_quadrat(rng), ONE)
    _expect(
        dilated.in_centralizer(candidate, SHEAR_B),
        f"integer-a element should centralize the shear: {candidate}",
    )
    _expect(
        dilated.in_centralizer(candidate, SHEAR_B_TWISTED) == a_int.is_zero(),
        f"sqrt2-refined intersection wrong on: {candidate}",
    )


def _iter_geometry(rng: Random):
    p = rand_affpoint(rng)
    q = rand_affpoint(rng)
    if p == q:
        q = geometry.AffPoint(p.u + ONE, p.v)
    line = geometry.line_through(p, q)
    _expect(line.contains(p) and line.contains(q), f"line misses its points: {p}, {q}")

    other = geometry.parallel_through(line, rand_affpoint(rng))
    _expect(geometry.is_parallel(line, other), f"parallel lost direction: {line}")
    crossing = geometry.line_through(p, rand_off_axis(rng))
    hit = geometry.meet(line, crossing)
    if isinstance(hit, geometry.AffPoint):
        _expect(
            line.contains(hit) and crossing.contains(hit),
            f"meet point off its lines: {line}, {crossing}",
        )
    through = geometry.parallel_through(line, p)
    _expect(through == line, f"parallel through own point moved: {line}, {p}")

    x = rand_quadrat(rng)
    y = rand_quadrat(rng)
    aux1 = rand_off_axis(rng)
    aux2 = rand_off_axis(rng)
    got1 = geometry.vs_add(x, y, aux1)
    got2 = geometry.vs_add(x, y, aux2)
    _expect(got1 == x + y, f"constructed sum wrong: {x}, {y}, aux {aux1}")
    _expect(got1 == got2, f"sum depends on the auxiliary point: {x}, {y}")
    got1 = geometry.vs_mul(x, y, aux1)
    got2 = geometry.vs_mul(x, y, aux2)
    _expect(got1 == x * y, f"constructed product wrong: {x}, {y}, aux {aux1}")
    _expect(got1 == got2, f"product depends on the auxiliary point: {x}, {y}")

    a = rand_epoint(rng)
    b = rand_epoint(rng)
    c = rand_epoint(rng)
    _expect(
        heisenberg.coll(a, b, c)
        == geometry.coll_det(
            geometry.AffPoint(a.a, a.b),
            geometry.AffPoint(b.a, b.b),
            geometry.AffPoint(c.a, c.b),
        ),
        f"group and determinant collinearity disagree: {a}, {b}, {c}",
    )


def _iter_interp(rng: Random):
    s = rand_quadrat(rng)
    t = rand_quadrat(rng)
    x = interp.encode(s)
    y = interp.encode(t)
    _expect(
        interp.decode(interp.interp_add(x, y)) == s + t,
        f"interpreted sum wrong: {s}, {t}",
    )
    _expect(
        interp.decode(interp.interp_mul(x, y)) == s * t,
        f"interpreted product wrong: {s}, {t}",
    )
    _expect(
        interp.interp_is_int(x) == s.is_integer(),
        f"interpreted integer predicate wrong: {s}",
    )
    n = QuadRat(rng.randint(-100, 100))
    _expect(
        interp.interp_is_int(interp.encode(n)),
        f"integer rejected by the predicate: {n}",
    )
    z = interp.encode(rand_quadrat(rng))
    _expect(
        interp.interp_add(x, y) == interp.interp_add(y, x),
        f"interpreted sum not commutative: {s}, {t}",
    )
    _expect(
        interp.interp_mul(x, interp.interp_add(y, z))
        == interp.interp_add(interp.interp_mul(x, y), interp.interp_mul(x, z)),
        f"interpreted distributivity broken: {s}, {t}, {interp.decode(z)}",
    )


_SUITES: dict[str, Callable[[Random], None]] = {
    "qfield": _iter_qfield,
    "group-core": _iter_group_core,
    "gprime": _iter_gprime,
    "geometry": _iter_geometry,
    "interp": _iter_interp,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def run_suite(suite: str, seed: int, count: int) -> CheckResult:
    """Run `count` iterations of one suite (or every suite for "all")."""
    if suite == "all":
        passed = 0
        total = 0
        for name in _SUITES:
            result = run_suite(name, seed, count)
            passed += result.passed
            total += result.total
            if not result.ok:
                return CheckResult("all", passed, total, result.failure)
        return CheckResult("all", passed, total)
    iteration = _SUITES.get(suite)
    if iteration is None:
        known = ", ".join(SUITE_NAMES)
        raise UsageError(f"unknown suite {suite!r} (known: {known})")
    rng = Random(seed)
    for i in range(count):
        try:
            iteration(rng)
        except CheckFailure as bad:
            return CheckResult(suite, i, count, f"case {i}: {bad}")
    return CheckResult(suite, count, count)
