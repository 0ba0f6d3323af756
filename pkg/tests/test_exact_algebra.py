import random
from fractions import Fraction
from itertools import permutations
from math import prod

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from orbicover.cyclotomic import CyclotomicScalar, cyclotomic_polynomial, euler_phi
from orbicover.exact import (
    BinaryForm,
    HomogeneousPoly,
    ProjectivePoint,
    binary_form_from_roots,
    determinant,
    discriminant_binary_form,
    elementary_symmetric,
    inverse_matrix,
    resultant,
    root_difference_discriminant,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
small = st.integers(-9, 9)


# ---------------------------------------------------------------- elementary symmetric


def test_elementary_symmetric_small_cases():
    pts = [ProjectivePoint(1, 1), ProjectivePoint(2, 1)]
    assert [elementary_symmetric(j, pts) for j in range(3)] == [1, 3, 2]


def test_elementary_symmetric_rejects_bad_input():
    pts = [ProjectivePoint(1, 1), ProjectivePoint(2, 1)]
    with pytest.raises(ValueError):
        elementary_symmetric(3, pts)
    with pytest.raises(ValueError):
        elementary_symmetric(0, [ProjectivePoint(1, 2, 3)])


def test_binary_form_from_roots_examples():
    assert binary_form_from_roots([ProjectivePoint(1, 0)]).coeffs == (0, 1)
    # 2A^2 - 3AB + B^2, stored from B^2 up to A^2
    assert binary_form_from_roots([ProjectivePoint(1, 1), ProjectivePoint(2, 1)]).coeffs == (1, -3, 2)
    with pytest.raises(ValueError):
        binary_form_from_roots([])


@pytest.mark.parametrize("n", range(1, 7))
def test_product_expansion_identity_symbolic(n):
    # points with independent symbolic coordinates u_i, v_i
    nv = 2 * n
    pts = [(HomogeneousPoly.var(2 * i, nv), HomogeneousPoly.var(2 * i + 1, nv)) for i in range(n)]
    form = binary_form_from_roots(pts)
    for j in range(n + 1):
        assert form.coeffs[j] == elementary_symmetric(j, pts) * (-1) ** (n - j)


@given(st.lists(st.tuples(small, small).filter(any), min_size=1, max_size=5))
def test_product_expansion_identity_numeric(pairs):
    pts = [ProjectivePoint(*p) for p in pairs]
    n = len(pts)
    form = binary_form_from_roots(pts)
    assert list(form.coeffs) == [(-1) ** (n - j) * elementary_symmetric(j, pts) for j in range(n + 1)]


# ---------------------------------------------------------------- polynomials


def test_homogeneous_poly_invariants():
    x = [HomogeneousPoly.var(i, 3) for i in range(3)]
    p = x[0] * x[1] - x[2] ** 2
    assert p.degree == 2
    assert all(c != 0 for c in p.terms.values())
    assert (p - p).is_zero() and (p - p).degree is None
    with pytest.raises(ValueError):
        _ = x[0] + x[1] * x[2]


def test_text_round_trip_and_order():
    x = [HomogeneousPoly.var(i, 3) for i in range(3)]
    p = x[1] ** 2 - x[0] * x[2] * 4 + x[2] ** 2 * Fraction(1, 3)
    text = p.to_text()
    assert text == "-4 * x0^1 x2^1 + 1 * x1^2 + 1/3 * x2^2"
    assert HomogeneousPoly.from_text(text, 3) == p


def test_exact_division():
    x = [HomogeneousPoly.var(i, 2) for i in range(2)]
    f = x[0] - x[1]
    g = x[0] * 2 + x[1] * 3
    assert (f * g).exact_div(f) == g
    with pytest.raises(ArithmeticError):
        (x[0] ** 2 + x[1] ** 2).exact_div(f)


def test_substitute_matches_evaluation(rng):
    x = [HomogeneousPoly.var(i, 3) for i in range(3)]
    p = x[0] ** 3 - x[0] * x[1] * x[2] * 2 + x[2] ** 3
    forms = [HomogeneousPoly.linear([rng.randint(-5, 5) for _ in range(3)]) for _ in range(3)]
    q = p.substitute(forms)
    for _ in range(10):
        pt = [Fraction(rng.randint(-5, 5)) for _ in range(3)]
        assert q.evaluate(pt) == p.evaluate([f.evaluate(pt) for f in forms])


# ---------------------------------------------------------------- projective points


def test_projective_point_equality():
    assert ProjectivePoint(1, 2) == ProjectivePoint(-3, -6)
    assert ProjectivePoint(0, 2) == ProjectivePoint(0, 1)
    assert ProjectivePoint(1, 2) != ProjectivePoint(2, 1)
    assert hash(ProjectivePoint(2, 4, 6)) == hash(ProjectivePoint(1, 2, 3))
    with pytest.raises(ValueError):
        ProjectivePoint(0, 0)


# ---------------------------------------------------------------- determinants


def cofactor_det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


def test_determinant_examples():
    eye = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert determinant(eye) == 1
    assert determinant([[1, 2, 3], [2, 4, 6], [-1, -2, -3]]) == 0
    with pytest.raises(ValueError):
        determinant([[1, 2]])


@given(st.lists(st.lists(fractions, min_size=4, max_size=4), min_size=4, max_size=4))
def test_determinant_matches_cofactor_oracle(m):
    assert determinant(m) == cofactor_det(m)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_matrix(m):
    if determinant(m) == 0:
        with pytest.raises(ZeroDivisionError):
            inverse_matrix(m)
        return
    inv = inverse_matrix(m)
    prod_ = [[sum(m[i][k] * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod_ == [[int(i == j) for j in range(3)] for i in range(3)]


# ---------------------------------------------------------------- resultants


def test_resultant_examples():
    assert resultant([1, 0, -1], [1, -1]) == 0
    a, b = 3, 7
    # Res(x - a, x - b) = prod of root differences = a - b
    assert resultant([1, -a], [1, -b]) == a - b
    with pytest.raises(ValueError):
        resultant([0], [1, 2])


@given(
    st.lists(small, min_size=2, max_size=4).filter(lambda f: f[0] != 0),
    st.lists(small, min_size=2, max_size=4).filter(lambda f: f[0] != 0),
    st.lists(small, min_size=2, max_size=4).filter(lambda f: f[0] != 0),
)
def test_resultant_multiplicative(f, h, g):
    fh = [0] * (len(f) + len(h) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(h):
            fh[i + j] += x * y
    assert resultant(fh, g) == resultant(f, g) * resultant(h, g)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=3), st.lists(st.integers(-6, 6), min_size=1, max_size=3))
def test_resultant_root_product(roots_f, roots_g):
    # Res(f, g) = prod (a_i - b_j) for monic f, g with roots a_i, b_j
    f = [int(c) for c in sympy.Poly(prod(sympy.Symbol("x") - r for r in roots_f)).all_coeffs()]
    g = [int(c) for c in sympy.Poly(prod(sympy.Symbol("x") - r for r in roots_g)).all_coeffs()]
    assert resultant(f, g) == prod(a - b for a in roots_f for b in roots_g)


# ---------------------------------------------------------------- discriminants


@given(fractions, fractions, fractions)
def test_quadratic_discriminant(a, b, c):
    # a A^2 + b AB + c B^2
    assert discriminant_binary_form(BinaryForm([c, b, a])) == b * b - 4 * a * c


def test_discriminant_repeated_root_and_degree():
    p = ProjectivePoint(3, 2)
    assert discriminant_binary_form(binary_form_from_roots([p, p])) == 0
    with pytest.raises(ValueError):
        discriminant_binary_form(BinaryForm([1, 1]))


@given(st.lists(st.tuples(small, st.integers(1, 9)), min_size=2, max_size=6))
def test_discriminant_matches_root_differences(pairs):
    pts = [ProjectivePoint(*p) for p in pairs]
    assert discriminant_binary_form(binary_form_from_roots(pts)) == root_difference_discriminant(pts)


@given(st.lists(small, min_size=3, max_size=7).filter(lambda c: c[-1] != 0))
def test_discriminant_zero_iff_repeated_factor(coeffs):
    x = sympy.Symbol("x")
    f = sympy.Poly(list(reversed(coeffs)), x)  # coeffs[j] multiplies A^j, B = 1
    repeated = sympy.degree(sympy.gcd(f, f.diff(x)), x) > 0
    assert (discriminant_binary_form(BinaryForm(coeffs)) == 0) == repeated


def test_discriminant_against_sympy(rng):
    a = sympy.Symbol("A")
    for n in range(2, 6):
        coeffs = [rng.randint(-9, 9) for _ in range(n)] + [rng.randint(1, 9)]
        f = sympy.Poly(list(reversed(coeffs)), a)
        # for a form of full degree the dehomogenised discriminant agrees
        assert discriminant_binary_form(BinaryForm(coeffs)) == sympy.discriminant(f)


# ---------------------------------------------------------------- cyclotomic field


@pytest.mark.parametrize("s", range(1, 13))
def test_omega_order_and_character_sums(s):
    w = CyclotomicScalar.omega(s)
    assert w**s == 1
    assert len(w.coeffs) == euler_phi(s)
    for m in range(0, 2 * s + 1):
        total = sum((w ** (k * m) for k in range(s)), CyclotomicScalar.rational(s, 0))
        assert total == (s if m % s == 0 else 0)


def test_cyclotomic_polynomials():
    x = sympy.Symbol("x")
    for s in range(1, 25):
        expected = sympy.Poly(sympy.cyclotomic_poly(s, x), x).all_coeffs()[::-1]
        assert list(cyclotomic_polynomial(s)) == [Fraction(int(c)) for c in expected]


@given(st.integers(1, 12), st.lists(fractions, min_size=12, max_size=12))
def test_cyclotomic_inverse(s, coeffs):
    z = CyclotomicScalar(s, coeffs[: max(1, s)])
    if z.is_zero():
        with pytest.raises(ZeroDivisionError):
            z.inverse()
    else:
        assert z * z.inverse() == 1


@given(st.integers(2, 9), st.lists(fractions, min_size=27, max_size=27))
def test_cyclotomic_ring_axioms(s, c):
    x, y, z = (CyclotomicScalar(s, c[9 * k: 9 * k + 9]) for k in range(3))
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(fractions, fractions, fractions)
def test_rational_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    for v in (x + y, x * y, x - z):
        assert v.denominator > 0
        assert Fraction(v.numerator, v.denominator) == v
