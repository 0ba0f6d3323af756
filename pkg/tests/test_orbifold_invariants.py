from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, gcd

import pytest

from orbicover.fpgroups import group_order, presentation_Bn, presentation_triangle
from orbicover.orbifold import (
    COVER_BALL,
    COVER_C,
    COVER_P1,
    OrbifoldSignature,
    UniformizationType as U,
    classify_orbifold,
    conjecture_margin,
    corollary_order_Hbb,
    corollary_order_Htriple,
    covering_degree_theorem5,
    euler_Dn1b,
    euler_report,
    orb_euler_char,
    riemann_hurwitz_euler,
    triangle_order,
    universal_cover_label,
)
from orbicover.weights import INF, parse_weight, reciprocal

COPRIME = [(n, b) for n in range(2, 7) for b in range(1, 8) if gcd(n, b) == 1]


def test_weights():
    assert reciprocal(INF) == 0
    assert parse_weight("inf") is INF and parse_weight("7") == 7
    with pytest.raises(ValueError):
        OrbifoldSignature((1, 3))


def test_orb_euler_char_examples():
    for b in (2, 3, 7):
        assert orb_euler_char((b, b)) == Fraction(2, b)
    assert orb_euler_char((2, 3, 6)) == 0
    assert orb_euler_char((2, 3, 7)) == Fraction(-1, 42)
    assert orb_euler_char((INF, INF)) == 0


def test_classification_examples():
    assert classify_orbifold((5, 5)) is U.SPHERE
    assert classify_orbifold((2, 2, 2, 2)) is U.EUCLIDEAN
    assert classify_orbifold((2, 3, 7)) is U.HYPERBOLIC
    assert classify_orbifold((2, 3, 6)) is U.EUCLIDEAN
    assert classify_orbifold((INF, INF)) is U.EUCLIDEAN
    assert classify_orbifold((2, 2, INF)) is U.EUCLIDEAN
    assert classify_orbifold((3,)) is U.BAD
    assert classify_orbifold((2, 3)) is U.BAD
    assert classify_orbifold((2, INF)) is U.BAD
    assert classify_orbifold(()) is U.SPHERE


@pytest.mark.parametrize("k", [3, 4, 5])
def test_classification_agrees_with_euler_sign(k):
    weights = list(range(2, 9)) + [INF]
    for sig in combinations_with_replacement(weights, k):
        chi = orb_euler_char(sig)
        expected = U.SPHERE if chi > 0 else U.EUCLIDEAN if chi == 0 else U.HYPERBOLIC
        assert classify_orbifold(sig) is expected, sig


def test_triangle_order():
    assert triangle_order(2, 3, 3) == 12
    assert triangle_order(2, 3, 6) is INF
    for n in range(2, 9):
        assert triangle_order(2, 2, n) == 2 * n
        assert group_order(presentation_triangle(2, 2, n)) == 2 * n
    assert triangle_order(1, 4, 6) == 2
    for sig in combinations_with_replacement(range(2, 8), 3):
        if orb_euler_char(sig) > 0:
            assert triangle_order(*sig) == 2 / orb_euler_char(sig)


def test_corollary_orders():
    assert corollary_order_Hbb(2, 2) == 8
    assert corollary_order_Hbb(3, 2) == 48
    assert corollary_order_Hbb(2, 3) == 18 == group_order(presentation_Bn(2, 2, [3, 3]))
    assert corollary_order_Htriple(2, 2, 3, 3) == 288
    assert corollary_order_Htriple(3, 2, 3, 3) == 10368
    for b in range(2, 7):
        assert corollary_order_Htriple(2, 2, 2, b) == 8 * b * b
    assert corollary_order_Htriple(2, 2, 3, 6) is INF


def test_corollary_triple_against_enumeration():
    for bcd in [(2, 2, 2), (2, 2, 3), (2, 3, 3)]:
        assert group_order(presentation_Bn(2, 2, list(bcd))) == corollary_order_Htriple(2, *bcd)


def test_euler_examples():
    for n in range(2, 7):
        assert euler_Dn1b(n, 1) == 2 == riemann_hurwitz_euler(n, 1)
    assert euler_Dn1b(2, 3) == 0 == euler_Dn1b(3, 2)
    assert euler_Dn1b(2, 5) == -10
    assert riemann_hurwitz_euler(2, 3) == 0
    with pytest.raises(ValueError):
        euler_Dn1b(2, 4)
    with pytest.raises(ValueError):
        riemann_hurwitz_euler(3, 3)


@pytest.mark.parametrize("n,b", COPRIME)
def test_euler_formulas_agree(n, b):
    assert euler_Dn1b(n, b) == riemann_hurwitz_euler(n, b)


@pytest.mark.parametrize("n,b", COPRIME)
def test_cover_label_matches_euler_sign(n, b):
    e = euler_Dn1b(n, b)
    label = universal_cover_label(n, b)
    assert label == (COVER_P1 if e > 0 else COVER_C if e == 0 else COVER_BALL)


def test_cover_labels():
    assert universal_cover_label(4, 1) == COVER_P1
    assert universal_cover_label(2, 3) == COVER_C
    assert universal_cover_label(2, 5) == COVER_BALL


def test_covering_degree():
    assert covering_degree_theorem5(2, 3) == 18
    assert covering_degree_theorem5(3, 2) == 384
    for n in range(2, 7):
        assert covering_degree_theorem5(n, 1) == factorial(n)


def test_euler_report_dict():
    assert euler_report(2, 3).to_dict() == {"n": 2, "b": 3, "euler": 0, "degree": 18, "cover": COVER_C}


def test_conjecture_margin_examples():
    for b in range(2, 8):
        assert conjecture_margin(2, 2, (b, b)) == Fraction(2, b)
    assert conjecture_margin(3, 3, (INF,)) == Fraction(1, 3)
    with pytest.raises(ValueError):
        conjecture_margin(1, 2, ())


def test_conjecture_margin_on_table_rows():
    # exact margins of the finite rows of the orders table: the inequality as
    # printed predicts finiteness only for the first group
    margins = {
        (3, 3, (INF,)): Fraction(1, 3),
        (4, 4, ()): Fraction(1, 2),
        (4, 5, ()): Fraction(1, 5),
        (3, 4, (INF,)): 0,
        (3, 5, (INF,)): Fraction(-1, 5),
        (4, 3, (INF,)): 0,
        (5, 3, (INF,)): Fraction(-1, 3),
        (3, INF, (2,)): Fraction(-1, 2),
        (5, 4, ()): 0,
        (2, 4, (2, 2, 2)): 0,
        (2, 3, (3, 2, 2)): 0,
        (2, 2, (2, 2, 2)): Fraction(1, 2),
        (2, 3, (2, 2, 2)): Fraction(1, 6),
    }
    for (n, a, bs), m in margins.items():
        assert conjecture_margin(n, a, bs) == m
