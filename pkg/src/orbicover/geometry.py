"""The symmetric map (P^1)^n -> P^n, hyperplanes H_q, the Vandermonde frame
change, discriminant hypersurfaces, the coordinate power map and the
parametrized strata D_{n,k}.

Frames: ``X`` are the elementary-symmetric coordinates, ``Y = Van(q) X`` the
coordinates in which the hyperplanes H_{q_j} are the coordinate hyperplanes,
and ``Z`` the coordinates upstairs of the power map Y_j = Z_j^b.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exact import (
    BinaryForm,
    HomogeneousPoly,
    ProjectivePoint,
    discriminant_binary_form,
    elementary_symmetric,
    inverse_matrix,
    is_zero,
    mat_vec,
)

FRAMES = ("X", "Y", "Z")


def _p1(p) -> ProjectivePoint:
    p = p if isinstance(p, ProjectivePoint) else ProjectivePoint(*p)
    if len(p) != 2:
        raise ValueError(f"{p} is not a point of P^1")
    return p


def marked_points(points) -> list[ProjectivePoint]:
    """Validate a list of pairwise distinct points of P^1."""
    pts = [_p1(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("marked points must be pairwise distinct")
    return pts


def default_marked_points(n: int) -> list[ProjectivePoint]:
    """q_j = [j : 1], j = 0..n."""
    return [ProjectivePoint(j, 1) for j in range(n + 1)]


# ------------------------------------------------------------------ sampling


def random_p1(rng: random.Random, lo: int = -9, hi: int = 9) -> ProjectivePoint:
    while True:
        x, y = rng.randint(lo, hi), rng.randint(lo, hi)
        if x or y:
            return ProjectivePoint(x, y)


def random_point(rng: random.Random, dim: int, lo: int = -9, hi: int = 9) -> ProjectivePoint:
    while True:
        coords = [rng.randint(lo, hi) for _ in range(dim + 1)]
        if any(coords):
            return ProjectivePoint(coords)


def random_marked_points(rng: random.Random, count: int) -> list[ProjectivePoint]:
    pts: list[ProjectivePoint] = []
    while len(pts) < count:
        p = random_p1(rng)
        if p not in pts:
            pts.append(p)
    return pts


# ------------------------------------------------------------------ hypersurfaces


@dataclass(frozen=True)
class Hypersurface:
    poly: HomogeneousPoly
    frame: str = "X"

    def __post_init__(self):
        if self.frame not in FRAMES:
            raise ValueError(f"unknown frame {self.frame!r}")
        if self.poly.is_zero():
            raise ValueError("a hypersurface needs a nonzero polynomial")

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def dim(self) -> int:
        return self.poly.nvars - 1

    def value(self, point):
        coords = point.coords if isinstance(point, ProjectivePoint) else tuple(point)
        return self.poly.evaluate(coords)

    def contains(self, point) -> bool:
        return is_zero(self.value(point))

    def to_dict(self) -> dict:
        return {"frame": self.frame, "degree": self.degree, "poly": self.poly.to_text(self.frame.lower())}


# ------------------------------------------------------------------ maps


def phi_map(points) -> ProjectivePoint:
    """[sigma_0 : ... : sigma_n] of n points of P^1."""
    pts = [_p1(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    return ProjectivePoint([elementary_symmetric(j, pts) for j in range(len(pts) + 1)])


def is_on_diagonal(points) -> bool:
    pts = [_p1(p) for p in points]
    if len(pts) < 2:
        raise ValueError("the diagonal needs n >= 2")
    return len(set(pts)) < len(pts)


def psi_power(p: ProjectivePoint, b: int) -> ProjectivePoint:
    if b < 1:
        raise ValueError("power must be >= 1")
    return ProjectivePoint([c**b for c in p.coords])


def hyperplane_row(q, n: int) -> list:
    """Coefficients (-1)^(n-j) y^j x^(n-j) of H_q, q = [x : y]."""
    x, y = _p1(q).coords
    return [(-1) ** (n - j) * y**j * x ** (n - j) for j in range(n + 1)]


def hyperplane_H(q, n: int) -> Hypersurface:
    """The hyperplane of n-tuples containing q, in the X-frame."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return Hypersurface(HomogeneousPoly.linear(hyperplane_row(q, n)), "X")


def vandermonde(qs) -> list[list]:
    """Rows are the hyperplane coefficient vectors of q_0..q_n."""
    qs = [_p1(q) for q in qs]
    n = len(qs) - 1
    if n < 1:
        raise ValueError("need at least two marked points")
    return [hyperplane_row(q, n) for q in qs]


@lru_cache(maxsize=None)
def discriminant_hypersurface(n: int) -> Hypersurface:
    """D_n: the discriminant of sum (-1)^(n-j) X_j A^j B^(n-j)."""
    if n < 2:
        raise ValueError("D_n needs n >= 2")
    nv = n + 1
    form = BinaryForm([HomogeneousPoly.var(j, nv) * (-1) ** (n - j) for j in range(nv)])
    return Hypersurface(discriminant_binary_form(form), "X")


def _linear_forms(matrix) -> list[HomogeneousPoly]:
    return [HomogeneousPoly.linear(row) for row in matrix]


def change_frame_to_Y(h: Hypersurface, qs) -> Hypersurface:
    """Rewrite an X-frame hypersurface in Y = Van(qs) X coordinates."""
    if h.frame != "X":
        raise ValueError(f"expected an X-frame hypersurface, got {h.frame}")
    van = vandermonde(marked_points(qs))
    if len(van) != h.poly.nvars:
        raise ValueError("need n + 1 marked points")
    inv = inverse_matrix(van)
    return Hypersurface(h.poly.substitute(_linear_forms(inv)), "Y")


def change_frame_to_X(h: Hypersurface, qs) -> Hypersurface:
    """Inverse of change_frame_to_Y: substitute Y = Van X."""
    if h.frame != "Y":
        raise ValueError(f"expected a Y-frame hypersurface, got {h.frame}")
    van = vandermonde(marked_points(qs))
    return Hypersurface(h.poly.substitute(_linear_forms(van)), "X")


def to_Y(point: ProjectivePoint, qs) -> ProjectivePoint:
    return ProjectivePoint(mat_vec(vandermonde(qs), point.coords))


def to_X(point: ProjectivePoint, qs) -> ProjectivePoint:
    return ProjectivePoint(mat_vec(inverse_matrix(vandermonde(qs)), point.coords))


def power_lift(h: Hypersurface, b: int) -> Hypersurface:
    """Pull back a Y-frame hypersurface along Y_j = Z_j^b."""
    if h.frame != "Y":
        raise ValueError(f"expected a Y-frame hypersurface, got {h.frame}")
    if b < 1:
        raise ValueError("power must be >= 1")
    return Hypersurface(h.poly.scale_exponents(b), "Z")


def lifted_discriminant(n: int, b: int, qs=None) -> Hypersurface:
    qs = default_marked_points(n) if qs is None else qs
    return power_lift(change_frame_to_Y(discriminant_hypersurface(n), qs), b)


def descend(h: Hypersurface, b: int) -> Hypersurface:
    """The Y-frame polynomial whose power lift is ``h``; raises if some
    exponent is not divisible by b."""
    if h.frame != "Z":
        raise ValueError("expected a Z-frame hypersurface")
    terms = {}
    for e, c in h.poly.terms.items():
        if any(k % b for k in e):
            raise ValueError(f"monomial {e} is not a polynomial in Z^{b}")
        terms[tuple(k // b for k in e)] = c
    return Hypersurface(HomogeneousPoly(h.poly.nvars, terms), "Y")


# ------------------------------------------------------------------ strata


@dataclass(frozen=True)
class StratumParams:
    """Parameters of D_{n,k}: k - 1 free points p_1..p_{k-1} and the point
    [u : v] repeated n - k + 1 times."""

    n: int
    k: int
    free: tuple = ()
    uv: ProjectivePoint = ProjectivePoint(1, 0)

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        free = tuple(_p1(p) for p in self.free)
        if len(free) != self.k - 1:
            raise ValueError(f"D_(n,k) takes k - 1 = {self.k - 1} free points, got {len(free)}")
        object.__setattr__(self, "free", free)
        object.__setattr__(self, "uv", _p1(self.uv))

    def points(self) -> list[ProjectivePoint]:
        """The n-tuple p_1..p_n with p_k = ... = p_n = [u : v]."""
        return list(self.free) + [self.uv] * (self.n - self.k + 1)

    @classmethod
    def random(cls, rng: random.Random, n: int, k: int) -> "StratumParams":
        return cls(n, k, tuple(random_p1(rng) for _ in range(k - 1)), random_p1(rng))


def param_stratum(sp: StratumParams, qs) -> ProjectivePoint:
    """Y_j = (u y_j - v x_j)^(n-k+1) prod_i (u_i y_j - v_i x_j)."""
    qs = marked_points(qs)
    if len(qs) != sp.n + 1:
        raise ValueError("need n + 1 marked points")
    u, v = sp.uv.coords
    coords = []
    for q in qs:
        x, y = q.coords
        val = (u * y - v * x) ** (sp.n - sp.k + 1)
        for p in sp.free:
            ui, vi = p.coords
            val = val * (ui * y - vi * x)
        coords.append(val)
    assert any(not is_zero(c) for c in coords), "parameter collides with every marked point"
    return ProjectivePoint(coords)


def rational_normal_curve_X(n: int, uv) -> ProjectivePoint:
    """[C(n,0) v^n : C(n,1) u v^(n-1) : ... : C(n,n) u^n]."""
    u, v = _p1(uv).coords
    return ProjectivePoint([comb(n, j) * u**j * v ** (n - j) for j in range(n + 1)])


def _on_rational_normal_curve(X: ProjectivePoint) -> ProjectivePoint | None:
    """[u : v] with X = C(n,j) u^j v^(n-j), or None when X is off the curve."""
    n = len(X) - 1
    w = [c / comb(n, j) for j, c in enumerate(X.coords)]
    for i in range(n):
        for j in range(i + 1, n):
            if not is_zero(w[i] * w[j + 1] - w[i + 1] * w[j]):
                return None
    # rank one: w is (v^n, u v^(n-1), ...) up to scale
    if not is_zero(w[0]):
        uv = ProjectivePoint(w[1], w[0])
    else:
        uv = ProjectivePoint(1, 0)
    return uv if rational_normal_curve_X(n, uv) == X else None


def is_on_lifted_stratum(z: ProjectivePoint, n: int, k: int, b: int, qs=None) -> bool:
    """Membership of a Z-frame point in D_{n,k}^{(b)}.

    Supported strata: k = 1 (the lifted rational normal curve, tested by
    recovering the parameter and comparing with the parametrization), k = n-1
    (the lifted discriminant hypersurface, tested by incidence) and k = n
    (everything).
    """
    qs = default_marked_points(n) if qs is None else marked_points(qs)
    if len(z) != n + 1:
        raise ValueError("point has the wrong dimension")
    y = psi_power(z, b)
    if k == 1:
        uv = _on_rational_normal_curve(to_X(y, qs))
        return uv is not None and param_stratum(StratumParams(n, 1, (), uv), qs) == y
    if k == n - 1:
        return change_frame_to_Y(discriminant_hypersurface(n), qs).contains(y)
    if k == n:
        return True
    raise ValueError(f"no membership test for D_(n,k) with 1 < k < n - 1 (n={n}, k={k})")
