"""Field arithmetic interpreted inside the group, plus the formula catalog."""

import ast
import inspect
import textwrap
from fractions import Fraction
from random import Random

import pytest

from nilreal import (
    DILATE_2,
    DomainError,
    EPoint,
    GElem,
    GPrimeElem,
    QuadRat,
    RNum,
    SQRT2,
    UsageError,
    class_of,
    decode,
    definable_reals_demo,
    encode,
    formula_names,
    interp_add,
    interp_is_int,
    interp_mul,
)
from nilreal import geometry, interp
from nilreal.interp import normalize_formula_id

from oracles import rand_quadrat


def test_encode_decode_round_trip():
    assert decode(encode(SQRT2)) == SQRT2
    assert encode(Fraction(-3, 2)).representative == GPrimeElem(
        0, Fraction(-3, 2), 0, 1
    )
    assert encode(5) == RNum(QuadRat(5))
    rng = Random(61)
    for _ in range(200):
        t = rand_quadrat(rng)
        assert decode(encode(t)) == t


def test_class_forgets_the_center():
    assert class_of(GElem(0, SQRT2, Fraction(1, 2))) == encode(SQRT2)
    assert class_of(GElem(0, 3, 0)) == class_of(GElem(0, 3, Fraction(7, 9)))
    with pytest.raises(DomainError, match="outside the vertical-axis subgroup"):
        class_of(GElem(1, 0, 0))


def test_interpreted_arithmetic_matches_the_field():
    assert interp_mul(encode(SQRT2), encode(SQRT2)) == encode(2)
    assert interp_add(encode(3), encode(5)) == encode(8)
    rng = Random(62)
    for _ in range(500):
        x = rand_quadrat(rng)
        y = rand_quadrat(rng)
        assert decode(interp_add(encode(x), encode(y))) == x + y
        assert decode(interp_mul(encode(x), encode(y))) == x * y


def test_interpreted_ring_laws():
    rng = Random(63)
    for _ in range(150):
        x, y, z = (encode(rand_quadrat(rng)) for _ in range(3))
        assert interp_add(x, y) == interp_add(y, x)
        assert interp_mul(x, y) == interp_mul(y, x)
        assert interp_add(interp_add(x, y), z) == interp_add(x, interp_add(y, z))
        assert interp_mul(interp_mul(x, y), z) == interp_mul(x, interp_mul(y, z))
        assert interp_mul(x, interp_add(y, z)) == interp_add(
            interp_mul(x, y), interp_mul(x, z)
        )


def test_integer_predicate():
    assert interp_is_int(encode(-7))
    assert not interp_is_int(encode(Fraction(1, 2)))
    assert not interp_is_int(encode(SQRT2))
    assert not interp_is_int(encode(QuadRat(1, 1)))
    rng = Random(64)
    for _ in range(300):
        t = rand_quadrat(rng)
        assert interp_is_int(encode(t)) == t.is_integer()
        k = QuadRat(rng.randint(-50, 50))
        assert interp_is_int(encode(k))


def test_arithmetic_path_is_free_of_binary_operators():
    path = (
        interp.interp_add,
        interp.interp_mul,
        interp._lift,
        interp._plane_point,
        interp._class_of_plane_point,
        geometry.sum_on_axis,
        geometry.product_on_axis,
    )
    for fn in path:
        tree = ast.parse(textwrap.dedent(inspect.getsource(fn)))
        assert not any(isinstance(node, ast.BinOp) for node in ast.walk(tree))


def test_catalog_names_and_normalization():
    assert formula_names() == (
        "centralizer",
        "coll",
        "in_a",
        "in_b",
        "in_l",
        "is_line_pair",
        "orbit",
        "product_recovery",
    )
    assert normalize_formula_id("Product-Recovery") == "product_recovery"
    assert normalize_formula_id("  IN_B ") == "in_b"


def test_catalog_dispatch():
    pts = [EPoint(0, 0), EPoint(1, 1), EPoint(2, 2)]
    assert definable_reals_demo("coll", pts) is True
    assert definable_reals_demo("coll", [pts[0], pts[1], EPoint(2, 3)]) is False

    assert (
        definable_reals_demo("centralizer", [GElem(1, 0, 0), GElem(0, SQRT2, 0)])
        is False
    )
    assert definable_reals_demo("centralizer", [GElem(1, 0, 0), GElem(0, 1, 0)]) is True
    assert definable_reals_demo("centralizer", [GElem(1, 0, 0), GElem(2, 0, 0)]) is True
    assert (
        definable_reals_demo(
            "centralizer", [GPrimeElem(0, 1, 0, 1), GPrimeElem(1, 0, 0, 1)]
        )
        is True
    )

    one = QuadRat(1)
    assert definable_reals_demo("in_l", [QuadRat(0), one, GElem(0, SQRT2, 0)]) is True
    assert definable_reals_demo("in_l", [QuadRat(0), one, GElem(1, 0, 0)]) is False

    assert definable_reals_demo("in_a", [GElem(0, SQRT2, Fraction(1, 2))]) is True
    assert definable_reals_demo("in_b", [GElem(0, 3, Fraction(1, 2))]) is True
    assert definable_reals_demo("in_b", [GElem(0, SQRT2, 0)]) is False

    line = definable_reals_demo("is_line_pair", [GElem(0, 1, 0), GElem(0, SQRT2, 0)])
    assert line is not None and line.contains(GElem(0, 5, Fraction(1, 3)))
    assert definable_reals_demo("is_line_pair", [GElem(0, 1, 0), GElem(0, 2, 0)]) is None

    assert definable_reals_demo("ORBIT", [DILATE_2]) == GPrimeElem(0, 2, 0, 1)

    factors = definable_reals_demo("product-recovery", [GPrimeElem(3, SQRT2, 0, 1)])
    assert factors is not None and factors[0] * factors[1] == GPrimeElem(3, SQRT2, 0, 1)
    assert definable_reals_demo("product_recovery", [DILATE_2]) is None


def test_catalog_rejects_bad_input():
    with pytest.raises(UsageError, match="unknown formula"):
        definable_reals_demo("frobenius", [])
    with pytest.raises(UsageError, match="takes 3 argument"):
        definable_reals_demo("coll", [EPoint(0, 0)])
    with pytest.raises(UsageError, match="must be a"):
        definable_reals_demo("orbit", [GElem(0, 0, 0)])
    with pytest.raises(UsageError, match="must be a"):
        definable_reals_demo("in_l", [QuadRat(0), QuadRat(1), GPrimeElem(0, 1, 0, 1)])
