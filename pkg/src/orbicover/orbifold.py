"""Orbifold signatures on P^1, uniformization type, and the closed-form
orders, degrees and Euler numbers of the symmetric and power coverings."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .weights import INF, format_weight, reciprocal


class UniformizationType(enum.Enum):
    SPHERE = "SPHERE"
    EUCLIDEAN = "EUCLIDEAN"
    HYPERBOLIC = "HYPERBOLIC"
    BAD = "BAD"


@dataclass(frozen=True)
class OrbifoldSignature:
    """P^1 with branch weights (each >= 2 or INF) at distinct marked points."""

    weights: tuple = ()

    def __post_init__(self):
        ws = tuple(self.weights)
        for w in ws:
            if w is not INF and (not isinstance(w, int) or w < 2):
                raise ValueError(f"branch weight must be an integer >= 2 or INF, got {w!r}")
        object.__setattr__(self, "weights", ws)

    def __str__(self):
        return "F(" + ",".join(format_weight(w) for w in self.weights) + ")"


def _sig(sig) -> OrbifoldSignature:
    return sig if isinstance(sig, OrbifoldSignature) else OrbifoldSignature(tuple(sig))


def orb_euler_char(sig) -> Fraction:
    """2 - sum(1 - 1/b_i)."""
    sig = _sig(sig)
    return 2 - sum((1 - reciprocal(w) for w in sig.weights), Fraction(0))


def classify_orbifold(sig) -> UniformizationType:
    """Uniformization type of a weighted P^1.

    One marked point, or two with different weights, is BAD: no finite
    uniformization exists.  Two equal finite weights give a sphere, as does
    three with reciprocal sum above one; (inf, inf), (2, 2, inf), the
    reciprocal-sum-one triples and (2, 2, 2, 2) are Euclidean.  Everything
    else is hyperbolic.
    """
    ws = list(_sig(sig).weights)
    k = len(ws)
    if k == 0:
        return UniformizationType.SPHERE
    if k == 1:
        return UniformizationType.BAD
    if k == 2:
        b0, b1 = ws
        if b0 != b1:
            return UniformizationType.BAD
        return UniformizationType.EUCLIDEAN if b0 is INF else UniformizationType.SPHERE
    if k == 3:
        total = sum(reciprocal(w) for w in ws)
        if total > 1:
            return UniformizationType.SPHERE
        if total == 1:
            return UniformizationType.EUCLIDEAN
        if sorted(ws, key=lambda w: (w is INF, 0 if w is INF else w)) == [2, 2, INF]:
            return UniformizationType.EUCLIDEAN
        return UniformizationType.HYPERBOLIC
    if k == 4 and ws == [2, 2, 2, 2]:
        return UniformizationType.EUCLIDEAN
    return UniformizationType.HYPERBOLIC


def triangle_order(b0, b1, b2):
    """Order of the (b0, b1, b2) triangle group, INF unless spherical.

    A weight 1 kills its generator and leaves the cyclic group of order
    gcd of the other two.
    """
    ws = [b0, b1, b2]
    if 1 in ws:
        ws.remove(1)
        p, q = ws
        if p is INF and q is INF:
            return INF
        return q if p is INF else p if q is INF else gcd(p, q)
    total = reciprocal(b0) + reciprocal(b1) + reciprocal(b2)
    if total <= 1:
        return INF
    value = 2 / (total - 1)
    assert value.denominator == 1
    return int(value)


def corollary_order_Hbb(n: int, b: int) -> int:
    """Order of the braid group on n strands of F(b, b) with weight 2 on the
    discriminant: n! b^n."""
    if n < 2:
        raise ValueError("n >= 2 required")
    if b is INF:
        raise ValueError("b must be finite")
    return factorial(n) * b**n


def corollary_order_Htriple(n: int, b0, b1, b2):
    """n! 2^n (1/b0 + 1/b1 + 1/b2 - 1)^-n, INF off the spherical range.

    The reciprocal reading is the only one giving integers on spherical
    triples; the variant with the weights themselves in the bracket is not
    used.
    """
    excess = reciprocal(b0) + reciprocal(b1) + reciprocal(b2) - 1
    if excess <= 0:
        return INF
    value = factorial(n) * 2**n / excess**n
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral order {value}")
    return int(value)


def _require_coprime(n: int, b: int) -> None:
    if n < 2 or b < 1:
        raise ValueError("need n >= 2 and b >= 1")
    if gcd(n, b) != 1:
        raise ValueError(f"gcd(n, b) = {gcd(n, b)} != 1: the lifted curve is reducible")


def euler_Dn1b(n: int, b: int) -> int:
    """Euler number b^(n-1) (n + 1 + b - n b) of the lifted rational normal curve."""
    _require_coprime(n, b)
    return b ** (n - 1) * (n + 1 + b - n * b)


def riemann_hurwitz_euler(n: int, b: int) -> int:
    """Same Euler number, from Riemann-Hurwitz for the maximal abelian cover of
    P^1 branched with index b over n + 1 points."""
    _require_coprime(n, b)
    degree = b**n
    points = n + 1
    # e = d * e(P^1 minus branch points) + (points) * (d / b)
    return degree * (2 - points) + points * (degree // b)


def covering_degree_theorem5(n: int, b: int) -> int:
    """Degree of the covering of the lifted orbifold by the n-th power of the
    lifted curve.

    Assembled from the component coverings (abelian cover of degree b^(n^2),
    symmetric quotient of degree n!, power map of degree b^n) and checked
    against the closed form n! b^(n^2 - n).
    """
    _require_coprime(n, b)
    abelian = b ** (n * n)
    symmetric = factorial(n)
    power_map = b**n
    num = abelian * symmetric
    assert num % power_map == 0
    degree = num // power_map
    if degree != factorial(n) * b ** (n * n - n):
        raise ArithmeticError("component degrees disagree with the closed form")
    return degree


COVER_P1 = "(P1)^n"
COVER_C = "C^n"
COVER_BALL = "(B1)^n"


def universal_cover_label(n: int, b: int) -> str:
    _require_coprime(n, b)
    if b == 1:
        label = COVER_P1
    elif (n, b) in ((3, 2), (2, 3)):
        label = COVER_C
    else:
        label = COVER_BALL
    e = euler_Dn1b(n, b)
    expected = COVER_P1 if e > 0 else COVER_C if e == 0 else COVER_BALL
    if label != expected:
        raise ArithmeticError(f"cover {label} inconsistent with euler number {e}")
    return label


@dataclass(frozen=True)
class EulerReport:
    n: int
    b: int
    euler: int
    degree: int
    cover: str

    def to_dict(self) -> dict:
        return {"n": self.n, "b": self.b, "euler": self.euler, "degree": self.degree, "cover": self.cover}


def euler_report(n: int, b: int) -> EulerReport:
    return EulerReport(n, b, euler_Dn1b(n, b), covering_degree_theorem5(n, b), universal_cover_label(n, b))


def conjecture_margin(n: int, a, bs) -> Fraction:
    """2(n-1)/a + sum 1/b_i - (n + m - 2), with m + 1 = len(bs).

    Positive: conjecturally finite; zero: infinite solvable; negative: big.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    m = len(bs) - 1
    return 2 * (n - 1) * reciprocal(a) + sum((reciprocal(b) for b in bs), Fraction(0)) - (n + m - 2)
