"""Line orbits under (Z/s)^2 and the singularity census of the curves
L^{r/s} = preimage of the line L: ax + by + cz = 0 under coordinate powers.

The nodes of L^{1/s} are counted upstairs: the s^2 lines
a w^i x + b w^j y + c z = 0 are the preimage of L under the s-th power map,
and each node of L^{1/s} corresponds to one (Z/s)^2-orbit of double points
of the arrangement off the coordinate triangle xyz = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from .cyclotomic import CyclotomicScalar
from .exact import ProjectivePoint

# tried in order when a coefficient triple fails the genericity check
GENERIC_COEFFS = ((1, 2, 5), (1, 3, 7), (2, 3, 11), (1, 5, 13))


@dataclass(frozen=True)
class OrbitLine:
    i: int
    j: int
    coeffs: tuple  # three CyclotomicScalars

    @property
    def order(self) -> int:
        return self.coeffs[0].order


def build_orbit(a, b, c, s: int) -> list[OrbitLine]:
    """All s^2 lines a w^i x + b w^j y + c z, (i, j) in [0, s)^2."""
    if s < 1:
        raise ValueError("s >= 1 required")
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if not (a and b and c):
        raise ValueError("line coefficients must be nonzero")
    w = [CyclotomicScalar.omega(s, k) for k in range(s)]
    cz = CyclotomicScalar.rational(s, c)
    return [OrbitLine(i, j, (w[i] * a, w[j] * b, cz)) for i in range(s) for j in range(s)]


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass
class CensusPoint:
    point: ProjectivePoint
    lines: frozenset  # indices into the line list
    on_triangle: bool

    @property
    def multiplicity(self) -> int:
        return len(self.lines)


@dataclass
class IntersectionCensus:
    points: list[CensusPoint]
    off_triangle_orbits: int

    def off_triangle(self) -> list[CensusPoint]:
        return [p for p in self.points if not p.on_triangle]

    def max_off_triangle_multiplicity(self) -> int:
        return max((p.multiplicity for p in self.off_triangle()), default=0)


def _scale(point: ProjectivePoint, k: int, w) -> ProjectivePoint:
    coords = list(point.coords)
    coords[k] = coords[k] * w
    return ProjectivePoint(coords)


def intersection_census(lines: list[OrbitLine]) -> IntersectionCensus:
    """Solve every pairwise intersection exactly and merge coincident points.

    Off-triangle points are grouped into orbits of the group generated by
    x -> w x and y -> w y, which permutes the lines of a full orbit.
    """
    found: dict[ProjectivePoint, set] = {}
    for (p, l1), (q, l2) in combinations(enumerate(lines), 2):
        v = _cross(l1.coeffs, l2.coeffs)
        if all(c.is_zero() for c in v):
            raise ValueError(f"lines {p} and {q} are proportional")
        pt = ProjectivePoint(v)
        found.setdefault(pt, set()).update((p, q))
    points = [CensusPoint(pt, frozenset(ls), pt.on_coordinate_hyperplanes()) for pt, ls in found.items()]

    # union-find over off-triangle points under the two scaling generators
    off = [cp.point for cp in points if not cp.on_triangle]
    index = {pt: k for k, pt in enumerate(off)}
    parent = list(range(len(off)))

    def root(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    if lines:
        w = CyclotomicScalar.omega(lines[0].order)
        for pt, k in index.items():
            for axis in (0, 1):
                image = index.get(_scale(pt, axis, w))
                if image is not None:
                    parent[root(k)] = root(image)
    orbits = len({root(k) for k in range(len(off))})
    return IntersectionCensus(points, orbits)


def genericity_check(lines: list[OrbitLine]) -> bool:
    """True when the arrangement meets the coordinate triangle transversally.

    Every line must avoid the three vertices of xyz = 0 (all coefficients
    nonzero) and no two lines may coincide.  Under this condition any
    off-triangle concurrency is a property of the index differences alone,
    which is what the nodality argument needs.  Two lines sharing the index
    i (or j) always meet on y = 0 (or x = 0), so the stronger reading that no
    two lines meet on the triangle can never hold for s >= 2.
    """
    seen = set()
    for line in lines:
        if any(c.is_zero() for c in line.coeffs):
            return False
        key = ProjectivePoint(line.coeffs)
        if key in seen:
            return False
        seen.add(key)
    return True


@dataclass(frozen=True)
class NodalCertificate:
    kind: str  # NODAL, TRIPLE_POINT_FOUND or NOT_GENERIC
    node_orbits: int | None = None
    witness: ProjectivePoint | None = None

    def __str__(self):
        if self.kind == "NODAL":
            return f"NODAL({self.node_orbits})"
        if self.kind == "TRIPLE_POINT_FOUND":
            return f"TRIPLE_POINT_FOUND({self.witness})"
        return self.kind


def nodal_certificate(s: int, a=1, b=2, c=5) -> NodalCertificate:
    lines = build_orbit(a, b, c, s)
    if not genericity_check(lines):
        return NodalCertificate("NOT_GENERIC")
    census = intersection_census(lines)
    for cp in census.off_triangle():
        if cp.multiplicity >= 3:
            return NodalCertificate("TRIPLE_POINT_FOUND", witness=cp.point)
    return NodalCertificate("NODAL", census.off_triangle_orbits)


def first_generic_coeffs(s: int, candidates=GENERIC_COEFFS):
    """First coefficient triple whose orbit passes the genericity check."""
    for coeffs in candidates:
        if genericity_check(build_orbit(*coeffs, s)):
            return coeffs
    raise ValueError(f"no generic coefficient triple among {candidates}")


def expected_node_orbits(s: int) -> int:
    return (s - 1) * (s - 2) // 2


def off_triangle_pair_count(s: int) -> int:
    """Pairs (i,j), (k,l) with i != k, j != l and i - k != j - l mod s."""
    return s * s * (s - 1) * (s - 2) // 2


def divisibility_criterion(s: int) -> tuple[int, int, bool]:
    """Brute force over index differences alpha, beta, gamma, theta in
    [1, s - 1]: whenever (w^a - 1)(w^t - 1) = (w^b - 1)(w^g - 1), check that
    s divides beta + gamma - alpha - theta.

    Returns (quadruples examined, vanishing determinants, criterion holds).
    """
    w1 = [CyclotomicScalar.omega(s, k) - 1 for k in range(s)]
    checked = vanishing = 0
    ok = True
    for al, be, ga, th in product(range(1, s), repeat=4):
        checked += 1
        if (w1[al] * w1[th] - w1[be] * w1[ga]).is_zero():
            vanishing += 1
            if (be + ga - al - th) % s:
                ok = False
    return checked, vanishing, ok


@dataclass(frozen=True)
class SingularityCensus:
    r: int
    s: int
    degree: int
    genus: int
    cusps: int
    nodes: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.degree, self.genus, self.cusps, self.nodes)

    def to_dict(self) -> dict:
        return {"r": self.r, "s": self.s, "degree": self.degree, "genus": self.genus, "cusps": self.cusps, "nodes": self.nodes}


def _require_coprime(r: int, s: int) -> None:
    if r < 1 or s < 1:
        raise ValueError("need r, s >= 1")
    if gcd(r, s) != 1:
        raise ValueError(f"r = {r} and s = {s} are not coprime")


def singularity_census(r: int, s: int) -> SingularityCensus:
    """Degree sr, genus (r-1)(r-2)/2, 3r cusps of type x^r = y^s and
    r^2 (s-1)(s-2)/2 nodes."""
    _require_coprime(r, s)
    return SingularityCensus(
        r=r,
        s=s,
        degree=s * r,
        genus=(r - 1) * (r - 2) // 2,
        cusps=3 * r,
        nodes=r * r * (s - 1) * (s - 2) // 2,
    )


def genus_balance(r: int, s: int) -> bool:
    """Arithmetic genus minus the delta invariants equals the stated genus.

    A node has delta 1 and an x^r = y^s point has delta (r-1)(s-1)/2.
    """
    _require_coprime(r, s)
    cen = singularity_census(r, s)
    d = cen.degree
    arithmetic = Fraction((d - 1) * (d - 2), 2)
    deltas = cen.nodes + cen.cusps * Fraction((r - 1) * (s - 1), 2)
    return arithmetic - deltas == cen.genus
