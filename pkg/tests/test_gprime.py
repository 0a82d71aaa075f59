"""The dilated group: its law, true centralizers, the embedded copy of the
plain quotient, the conjugation orbit, and the number-line representatives."""

from fractions import Fraction
from random import Random

import pytest

from nilreal import (
    DILATE_2,
    DomainError,
    GElem,
    GPrimeElem,
    ONE,
    QuadRat,
    SHEAR_A,
    SHEAR_B,
    SHEAR_B_TWISTED,
    SQRT2,
    ZERO,
    central_in_embedded,
    centralizer_factors,
    embed,
    in_embedded_copy,
    orbit_conjugate,
    rep_of_value,
    value_of_rep,
)
from nilreal.dilated import in_centralizer

from oracles import gprime_mul_oracle, rand_gelem, rand_gprime, rand_quadrat


def test_product_examples():
    assert SHEAR_B * SHEAR_A == GPrimeElem(1, 1, 0, 1)  # a-slot asymmetry
    assert DILATE_2 * GPrimeElem(0, 0, 0, Fraction(1, 2)) == GPrimeElem.identity()
    assert GPrimeElem(1, 1, 0, 2).inverse() == GPrimeElem(
        Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2)
    )


def test_product_matches_matrix_oracle():
    rng = Random(41)
    for _ in range(500):
        g = rand_gprime(rng)
        h = rand_gprime(rng)
        assert g * h == gprime_mul_oracle(g, h)
        assert gprime_mul_oracle(g, g.inverse()) == GPrimeElem.identity()
        assert gprime_mul_oracle(g.inverse(), g) == GPrimeElem.identity()


def test_group_axioms_and_canonical_form():
    rng = Random(42)
    for _ in range(300):
        g = rand_gprime(rng)
        h = rand_gprime(rng)
        k = rand_gprime(rng)
        assert (g * h) * k == g * (h * k)
        assert g * GPrimeElem.identity() == g
        assert g * g.inverse() == GPrimeElem.identity()
        prod = g * h
        assert prod.x.sign() == 1
        assert prod.c.sign() >= 0 and (prod.c - ONE).sign() < 0
        assert g**-2 == (g * g).inverse()


def test_dilation_part_must_be_positive():
    with pytest.raises(DomainError, match="x must be positive"):
        GPrimeElem(0, 0, 0, 0)
    with pytest.raises(DomainError, match="x must be positive"):
        GPrimeElem(1, 2, 0, -3)
    assert GPrimeElem(0, 0, 0, QuadRat(1, -1) * QuadRat(-1)).x == QuadRat(-1, 1)


def test_centralizer_examples():
    assert in_centralizer(GPrimeElem(0, 5, Fraction(1, 2), 1), SHEAR_B)
    # witness outside the zero-a slice: a = 1 commutes as well
    assert in_centralizer(SHEAR_A, SHEAR_B)
    assert not in_centralizer(GPrimeElem(Fraction(1, 2), 0, 0, 1), SHEAR_B)


def test_computed_centralizer_shapes():
    rng = Random(43)
    for _ in range(400):
        h = rand_gprime(rng)
        assert in_centralizer(h, SHEAR_B) == (h.x == ONE and h.a.is_integer())
        assert in_centralizer(h, SHEAR_A) == (h.x == ONE and h.b.is_integer())
        assert in_centralizer(h, DILATE_2) == (h.a.is_zero() and h.b.is_zero())


def test_sqrt2_refinement_cuts_centralizer_to_zero_a_slice():
    rng = Random(44)
    for _ in range(200):
        a = QuadRat(rng.randint(-10, 10))
        h = GPrimeElem(a, rand_quadrat(rng), rand_quadrat(rng), 1)
        assert in_centralizer(h, SHEAR_B)
        assert in_centralizer(h, SHEAR_B_TWISTED) == a.is_zero()
        sliced = GPrimeElem(0, rand_quadrat(rng), rand_quadrat(rng), 1)
        assert in_centralizer(sliced, SHEAR_B)
        assert in_centralizer(sliced, SHEAR_B_TWISTED)


def test_embedding_is_injective_homomorphism():
    rng = Random(45)
    for _ in range(300):
        g = rand_gelem(rng)
        h = rand_gelem(rng)
        assert embed(g * h) == embed(g) * embed(h)
        assert embed(g).x == ONE
        if g != h:
            assert embed(g) != embed(h)
    assert embed(GElem.identity()) == GPrimeElem.identity()


def test_embedded_copy_examples():
    assert in_embedded_copy(GPrimeElem(3, SQRT2, Fraction(1, 2), 1))
    assert not in_embedded_copy(DILATE_2)
    assert in_embedded_copy(GPrimeElem.identity())


def test_factorization_through_the_two_centralizers():
    rng = Random(46)
    for _ in range(300):
        b, c1, a, c2 = (rand_quadrat(rng) for _ in range(4))
        lo = GPrimeElem(ZERO, b, c1, ONE)
        hi = GPrimeElem(a, ZERO, c2, ONE)
        assert lo * hi == GPrimeElem(a, b, c1 + c2, ONE)

        flat = GPrimeElem(rand_quadrat(rng), rand_quadrat(rng), rand_quadrat(rng), ONE)
        first, second = centralizer_factors(flat)
        assert in_centralizer(first, SHEAR_B)
        assert in_centralizer(second, SHEAR_A)
        assert first * second == flat
        assert in_embedded_copy(flat)

        tall = rand_gprime(rng)
        if tall.x != ONE:
            assert not in_embedded_copy(tall)
            with pytest.raises(DomainError):
                centralizer_factors(tall)


def test_orbit_examples():
    assert orbit_conjugate(DILATE_2) == GPrimeElem(0, 2, 0, 1)
    assert orbit_conjugate(GPrimeElem(0, 0, Fraction(1, 2), 1)) == SHEAR_B
    assert orbit_conjugate(GPrimeElem(0, 0, Fraction(1, 3), 3)) == GPrimeElem(0, 3, 0, 1)
    with pytest.raises(DomainError):
        orbit_conjugate(SHEAR_A)


def test_orbit_law_random():
    rng = Random(47)
    for _ in range(200):
        g = rand_gprime(rng)
        conjugator = GPrimeElem(ZERO, ZERO, rand_quadrat(rng), g.x)
        assert orbit_conjugate(conjugator) == GPrimeElem(ZERO, g.x, ZERO, ONE)
        assert (
            conjugator * SHEAR_B * conjugator.inverse()
            == GPrimeElem(ZERO, g.x, ZERO, ONE)
        )


def test_representative_examples():
    assert rep_of_value(SQRT2) == GPrimeElem(0, SQRT2, 0, 1)
    assert rep_of_value(-1) == SHEAR_B.inverse()
    assert rep_of_value(0) == GPrimeElem.identity()
    assert value_of_rep(rep_of_value(QuadRat(Fraction(-3, 2)))) == QuadRat(Fraction(-3, 2))
    for bad in (SHEAR_A, GPrimeElem(0, 1, Fraction(1, 2), 1), DILATE_2):
        with pytest.raises(DomainError, match="not a number-line representative"):
            value_of_rep(bad)


def test_representatives_add_on_the_nose():
    rng = Random(48)
    for _ in range(200):
        b1 = rand_quadrat(rng)
        b2 = rand_quadrat(rng)
        assert rep_of_value(b1) * rep_of_value(b2) == rep_of_value(b1 + b2)


def test_section_hits_each_class_once():
    rng = Random(49)
    for _ in range(200):
        b = rand_quadrat(rng)
        member = GPrimeElem(ZERO, b, rand_quadrat(rng), ONE)
        assert central_in_embedded(member * rep_of_value(b).inverse())
        other = rand_quadrat(rng)
        if other != b:
            assert not central_in_embedded(member * rep_of_value(other).inverse())
    positive = rep_of_value(QuadRat(2, 1))
    assert central_in_embedded(positive * positive.inverse())
