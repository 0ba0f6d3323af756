"""Exact scalars, homogeneous polynomials, binary forms, projective points,
fraction-free determinants and resultants.

Scalars are :class:`fractions.Fraction` or :class:`CyclotomicScalar`.  Nothing
here ever touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from math import comb

from .cyclotomic import CyclotomicScalar


def is_zero(x) -> bool:
    if isinstance(x, (CyclotomicScalar, HomogeneousPoly)):
        return x.is_zero()
    return x == 0


def exact_div(a, b):
    if isinstance(a, HomogeneousPoly):
        return a.exact_div(b)
    return a / b


# ------------------------------------------------------------------ polynomials


class HomogeneousPoly:
    """Sparse homogeneous polynomial in ``nvars`` variables over Q.

    ``terms`` maps exponent tuples to nonzero Fractions.  The zero polynomial
    has no degree (``degree is None``) and adds to anything.
    """

    __slots__ = ("nvars", "terms", "degree")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        degree = None
        for exp, c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {nvars} variables")
            d = sum(exp)
            if degree is None:
                degree = d
            elif d != degree:
                raise ValueError("terms of different degrees in a homogeneous polynomial")
            clean[exp] = c
        self.terms = clean
        self.degree = degree

    @classmethod
    def _raw(cls, nvars, terms, degree):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj.degree = degree if terms else None
        return obj

    @classmethod
    def var(cls, i: int, nvars: int) -> "HomogeneousPoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)}, 1)

    @classmethod
    def constant(cls, c, nvars: int) -> "HomogeneousPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars: int) -> "HomogeneousPoly":
        return cls._raw(nvars, {}, None)

    @classmethod
    def linear(cls, coeffs) -> "HomogeneousPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            exp = [0] * n
            exp[i] = 1
            terms[tuple(exp)] = c
        return cls(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, HomogeneousPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return HomogeneousPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.degree != other.degree:
            raise ValueError(f"adding degree {self.degree} and degree {other.degree}")
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return HomogeneousPoly._raw(self.nvars, out, self.degree)

    __radd__ = __add__

    def __neg__(self):
        return HomogeneousPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return HomogeneousPoly.zero(self.nvars)
            return HomogeneousPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()}, self.degree)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return HomogeneousPoly.zero(self.nvars)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        out = {e: c for e, c in out.items() if c}
        return HomogeneousPoly._raw(self.nvars, out, self.degree + other.degree)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = HomogeneousPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HomogeneousPoly.constant(other, self.nvars)
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def leading(self):
        """Leading (exponent, coefficient) in the canonical order."""
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, other) -> "HomogeneousPoly":
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.terms)
        quot: dict = {}
        le, lc = other.leading()
        while rem:
            e = max(rem)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, le))
            if any(x < 0 for x in qe):
                raise ArithmeticError("polynomial division is not exact")
            qc = c / lc
            quot[qe] = qc
            for e2, c2 in other.terms.items():
                t = tuple(a + b for a, b in zip(qe, e2))
                v = rem.get(t, 0) - qc * c2
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        if not quot:
            return HomogeneousPoly.zero(self.nvars)
        return HomogeneousPoly._raw(self.nvars, quot, self.degree - other.degree)

    def evaluate(self, point):
        """Value at a coordinate vector (Fractions or cyclotomic scalars)."""
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        total = 0
        cache: dict = {}
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = point[i] ** k
                    term = term * cache[key]
            total = total + term
        return total

    def substitute(self, forms) -> "HomogeneousPoly":
        """Replace variable i by the homogeneous polynomial ``forms[i]``."""
        if len(forms) != self.nvars:
            raise ValueError("need one form per variable")
        if not self.terms:
            return HomogeneousPoly.zero(forms[0].nvars)
        powers: dict = {}
        out = HomogeneousPoly.zero(forms[0].nvars)
        for e, c in self.terms.items():
            term = HomogeneousPoly.constant(c, forms[0].nvars)
            for i, k in enumerate(e):
                if k:
                    if (i, k) not in powers:
                        powers[(i, k)] = forms[i] ** k
                    term = term * powers[(i, k)]
            out = out + term
        return out

    def scale_exponents(self, b: int) -> "HomogeneousPoly":
        """Substitute x_i -> x_i^b."""
        return HomogeneousPoly._raw(
            self.nvars,
            {tuple(k * b for k in e): c for e, c in self.terms.items()},
            None if self.degree is None else self.degree * b,
        )

    def primitive(self) -> "HomogeneousPoly":
        """Scalar multiple with the leading coefficient equal to 1."""
        if not self.terms:
            return self
        return self * (1 / self.leading()[1])

    def proportional_to(self, other) -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.primitive() == other.primitive()

    # canonical text form: "c * x0^e0 x2^e2 + ...", graded-lex descending
    def to_text(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = " ".join(f"{var}{i}^{k}" for i, k in enumerate(e) if k)
            c = self.terms[e]
            parts.append(f"{c} * {mono}" if mono else f"{c}")
        return " + ".join(parts)

    @classmethod
    def from_text(cls, text: str, nvars: int, var: str = "x") -> "HomogeneousPoly":
        text = text.strip()
        if text == "0":
            return cls.zero(nvars)
        terms = {}
        pattern = re.compile(rf"^{re.escape(var)}(\d+)\^(\d+)$")
        for chunk in text.split(" + "):
            coeff, _, mono = chunk.partition(" * ")
            exp = [0] * nvars
            for factor in mono.split():
                m = pattern.match(factor)
                if not m:
                    raise ValueError(f"bad monomial factor {factor!r}")
                exp[int(m.group(1))] += int(m.group(2))
            terms[tuple(exp)] = Fraction(coeff)
        return cls(nvars, terms)

    def __repr__(self):
        return f"HomogeneousPoly({self.to_text()})"


# ------------------------------------------------------------------ P^1 and binary forms


class ProjectivePoint:
    """Nonzero coordinate vector up to scale.

    The coordinates given are kept as the chosen representative; equality
    compares the forms normalised by the first nonzero coordinate.
    """

    __slots__ = ("coords", "_normal")

    def __init__(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
            coords = tuple(coords[0])
        if not coords:
            raise ValueError("a projective point needs coordinates")
        coords = tuple(c if isinstance(c, CyclotomicScalar) else Fraction(c) for c in coords)
        if all(is_zero(c) for c in coords):
            raise ValueError("all coordinates vanish")
        self.coords = coords
        self._normal = None

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def normalized(self) -> tuple:
        if self._normal is None:
            lead = next(c for c in self.coords if not is_zero(c))
            if lead == 1:
                self._normal = self.coords
            else:
                inv = 1 / lead
                self._normal = tuple(c * inv for c in self.coords)
        return self._normal

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return len(self) == len(other) and self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def on_coordinate_hyperplanes(self) -> bool:
        return any(is_zero(c) for c in self.coords)

    def __repr__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def _pair(p):
    if isinstance(p, ProjectivePoint):
        if len(p) != 2:
            raise ValueError(f"{p} is not a point of P^1")
        return p.coords
    x, y = p
    return x, y


def elementary_symmetric(j: int, points):
    """sigma_j: sum over j-subsets A of prod_{A} x * prod_{not A} y.

    Points may be ProjectivePoints of P^1 or plain (x, y) pairs over any
    commutative ring (e.g. symbolic HomogeneousPolys).
    """
    pts = [_pair(p) for p in points]
    n = len(pts)
    if not 0 <= j <= n:
        raise ValueError(f"index {j} outside [0, {n}]")
    total = 0
    for subset in combinations(range(n), j):
        chosen = set(subset)
        term = 1
        for k, (x, y) in enumerate(pts):
            term = term * (x if k in chosen else y)
        total = total + term
    return total


class BinaryForm:
    """sum_j coeffs[j] A^j B^(n-j)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(c if isinstance(c, (HomogeneousPoly, CyclotomicScalar)) else Fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("empty binary form")
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(out)

    def derivative_A(self) -> "BinaryForm":
        return BinaryForm([(j + 1) * self.coeffs[j + 1] for j in range(self.degree)])

    def derivative_B(self) -> "BinaryForm":
        n = self.degree
        return BinaryForm([(n - j) * self.coeffs[j] for j in range(n)])

    def evaluate(self, A, B):
        n = self.degree
        return sum((c * A**j * B ** (n - j) for j, c in enumerate(self.coeffs)), 0)

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coeffs)

    def __repr__(self):
        return "BinaryForm(" + ", ".join(str(c) for c in self.coeffs) + ")"


def binary_form_from_roots(points) -> BinaryForm:
    """prod (u_i A - v_i B) for points [u_i : v_i]."""
    pts = [_pair(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    form = BinaryForm([1])
    for u, v in pts:
        form = form * BinaryForm([-v, u])
    return form


# ------------------------------------------------------------------ matrices


def determinant(matrix):
    """Fraction-free (Bareiss) determinant over any exact integral domain."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if is_zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not is_zero(a[i][k])), None)
            if swap is None:
                return a[k][k] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def inverse_matrix(matrix) -> list[list]:
    """Gauss-Jordan inverse over a field."""
    n = len(matrix)
    a = [[Fraction(x) if isinstance(x, int) else x for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for k in range(n):
        piv = next((i for i in range(k, n) if not is_zero(a[i][k])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and not is_zero(a[i][k]):
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


def mat_vec(matrix, vec) -> list:
    return [sum((m * v for m, v in zip(row, vec)), 0) for row in matrix]


# ------------------------------------------------------------------ resultants


def sylvester_matrix(f, g) -> list[list]:
    """Sylvester matrix of coefficient sequences given from the leading
    coefficient down; the formal degrees are len - 1."""
    p = len(f) - 1
    q = len(g) - 1
    size = p + q
    zero = (f[0] * 0) if not isinstance(f[0], int) else Fraction(0)
    rows = []
    for i in range(q):
        rows.append([zero] * i + list(f) + [zero] * (size - p - 1 - i))
    for i in range(p):
        rows.append([zero] * i + list(g) + [zero] * (size - q - 1 - i))
    return rows


def _strip(f):
    f = list(f)
    while f and is_zero(f[0]):
        f.pop(0)
    return f


def resultant(f, g):
    """Res(f, g) of univariate polynomials (coefficients leading first).

    Equals lc(f)^deg g * prod g(roots of f).
    """
    f = _strip(f)
    g = _strip(g)
    if not f or not g:
        raise ValueError("resultant with the zero polynomial")
    if len(f) == 1 and len(g) == 1:
        return Fraction(1) if not isinstance(f[0], HomogeneousPoly) else f[0] ** 0
    return determinant(sylvester_matrix(f, g))


def binary_resultant(F: BinaryForm, G: BinaryForm):
    """Resultant of binary forms at their formal degrees (zero when either
    form vanishes identically)."""
    return determinant(sylvester_matrix(F.coeffs[::-1], G.coeffs[::-1]))


def discriminant_binary_form(P: BinaryForm):
    """(-1)^(n(n-1)/2) Res(P_A, P_B) / n^(n-2).

    With this normalisation the discriminant of prod (u_i A - v_i B) is
    prod_{i<j} (u_i v_j - u_j v_i)^2, and that of aA^2 + bAB + cB^2 is
    b^2 - 4ac.
    """
    n = P.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = binary_resultant(P.derivative_A(), P.derivative_B())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    scale = Fraction(sign, n ** (n - 2))
    return res * scale


def root_difference_discriminant(points):
    """prod_{i<j} (u_i v_j - u_j v_i)^2, the discriminant of the binary form
    with the given roots."""
    pts = [_pair(p) for p in points]
    total = Fraction(1)
    for (u1, v1), (u2, v2) in combinations(pts, 2):
        total = total * (u1 * v2 - u2 * v1) ** 2
    return total


def binomial_row(n: int) -> list[int]:
    return [comb(n, j) for j in range(n + 1)]
