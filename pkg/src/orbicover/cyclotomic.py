"""Exact arithmetic in the cyclotomic field Q(w), w = exp(2 pi i / s).

Elements are stored as rational coefficient vectors on the power basis
1, w, ..., w^(phi(s)-1), reduced modulo the s-th cyclotomic polynomial, so
equal elements have equal coefficient vectors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

# univariate polynomials here are tuples of Fractions, lowest degree first


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _polydivmod(num, den):
    num = [Fraction(c) for c in num]
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return _trim(q), _trim(num[: len(den) - 1])


def _polymul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polysub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(s: int) -> tuple[Fraction, ...]:
    """Phi_s, by dividing x^s - 1 by Phi_d for every proper divisor d of s."""
    if s < 1:
        raise ValueError("order must be positive")
    p = [Fraction(-1)] + [Fraction(0)] * (s - 1) + [Fraction(1)]
    for d in range(1, s):
        if s % d == 0:
            p, r = _polydivmod(p, cyclotomic_polynomial(d))
            assert not r
    return tuple(p)


def euler_phi(s: int) -> int:
    return len(cyclotomic_polynomial(s)) - 1


def _reduce(coeffs, s):
    _, r = _polydivmod(coeffs, cyclotomic_polynomial(s))
    out = r + [Fraction(0)] * (euler_phi(s) - len(r))
    return tuple(out)


class CyclotomicScalar:
    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs=()):
        self.order = order
        self.coeffs = _reduce([Fraction(c) for c in coeffs], order)
        self._hash = None

    @classmethod
    def _raw(cls, order, coeffs):
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, order: int, value) -> "CyclotomicScalar":
        return cls(order, [Fraction(value)])

    @classmethod
    def omega(cls, order: int, k: int = 1) -> "CyclotomicScalar":
        """w^k."""
        k %= order
        return cls(order, [0] * k + [1])

    def _coerce(self, other):
        if isinstance(other, CyclotomicScalar):
            if other.order != self.order:
                raise ValueError(f"mixing Q(w_{self.order}) and Q(w_{other.order})")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicScalar._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicScalar._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicScalar(self.order, _polymul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicScalar.rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "CyclotomicScalar":
        """Inverse via the extended Euclidean algorithm against Phi_s."""
        a = _trim(self.coeffs)
        if not a:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        r0, r1 = list(cyclotomic_polynomial(self.order)), a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        c = r1[0]
        return CyclotomicScalar(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicScalar.rational(self.order, other)
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0] if self.coeffs else Fraction(0))
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*w^{k}")
        return f"Q(w_{self.order})[" + (" + ".join(terms) or "0") + "]"
