"""Finitely presented groups: presentation builders, enumeration, abelianization.

A word is a tuple of nonzero ints: ``g + 1`` is generator ``g`` and
``-(g + 1)`` its inverse.  Infinite exponents drop the power relator and keep
the generator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .coset import DEFAULT_MAX_COSETS, Enumeration, todd_coxeter, verify_table
from .orbifold import triangle_order
from .weights import INF, format_weight, parse_weight


def free_reduce(word) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(word) -> tuple[int, ...]:
    return tuple(-x for x in reversed(word))


def power(word, k: int) -> tuple[int, ...]:
    return free_reduce(tuple(word) * k) if k >= 0 else power(inverse(word), -k)


def commutator(u, v) -> tuple[int, ...]:
    """[u, v] = u v u^-1 v^-1."""
    return free_reduce(tuple(u) + tuple(v) + inverse(u) + inverse(v))


def equation(lhs, rhs) -> tuple[int, ...]:
    """Relator for lhs = rhs."""
    return free_reduce(tuple(lhs) + inverse(rhs))


@dataclass(frozen=True)
class Presentation:
    names: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for name in self.names:
            if not re.fullmatch(r"[a-z][a-z0-9_]*", name):
                raise ValueError(f"generator names must be lowercase identifiers: {name!r}")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        n = len(self.names)
        rels = []
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > n:
                    raise ValueError(f"letter {x} does not name a generator")
            r = free_reduce(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.names)

    def gen(self, name: str) -> tuple[int]:
        return (self.names.index(name) + 1,)

    def with_relators(self, *extra) -> "Presentation":
        return Presentation(self.names, self.relators + tuple(tuple(r) for r in extra))

    def format_word(self, word) -> str:
        return " ".join(self.names[x - 1] if x > 0 else _upper(self.names[-x - 1]) for x in word)

    def to_text(self) -> str:
        lines = ["gen " + " ".join(self.names)]
        lines += ["rel " + self.format_word(r) for r in self.relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        names: list[str] = []
        raw: list[list[str]] = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            head, *rest = line.split()
            if head == "gen":
                names.extend(rest)
            elif head == "rel":
                raw.append(rest)
            else:
                raise ValueError(f"unrecognised line: {line!r}")
        lookup = {name: i + 1 for i, name in enumerate(names)}
        rels = []
        for tokens in raw:
            word = []
            for tok in tokens:
                if tok in lookup:
                    word.append(lookup[tok])
                elif tok[0].isupper() and _lower(tok) in lookup:
                    word.append(-lookup[_lower(tok)])
                else:
                    raise ValueError(f"unknown generator token {tok!r}")
            rels.append(tuple(word))
        return cls(tuple(names), tuple(rels))


def _upper(name: str) -> str:
    return name[0].upper() + name[1:]


def _lower(tok: str) -> str:
    return tok[0].lower() + tok[1:]


def _power_relator(g: int, w) -> list[tuple[int, ...]]:
    if w is INF:
        return []
    return [(g,) * w]


# ---------------------------------------------------------------- builders


def presentation_Bn(n: int, a, bs=(), mixed_includes_tau0: bool = False) -> Presentation:
    """Braid group of the orbifold P^1(b_0, ..., b_m) on ``n`` strands, with
    weight ``a`` on the discriminant.

    Generators ``s1..s{n-1}`` (strand swaps) and ``t0..tm`` (loops around the
    marked points).  The mixed relations involve ``t_i`` for ``i >= 1`` only,
    unless ``mixed_includes_tau0`` extends them to ``i >= 0``.
    """
    if n < 2:
        raise ValueError("need n >= 2 strands")
    bs = list(bs)
    m = len(bs) - 1
    names = tuple(f"s{i}" for i in range(1, n)) + tuple(f"t{i}" for i in range(m + 1))

    def s(i):
        return (i,)

    def t(i):
        return (n + i,)

    rels: list[tuple[int, ...]] = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(commutator(s(i), s(j)))
    for i in range(1, n - 1):
        rels.append(equation(s(i) + s(i + 1) + s(i), s(i + 1) + s(i) + s(i + 1)))
    first = 0 if mixed_includes_tau0 else 1
    for i in range(first, m + 1):
        rels.append(equation(power(s(1) + t(i), 2), power(t(i) + s(1), 2)))
        for j in range(2, n):
            rels.append(commutator(t(i), s(j)))
        for j in range(i + 1, m + 1):
            rels.append(commutator(s(1) + t(i) + inverse(s(1)), t(j)))
    proj = sum((s(i) for i in range(1, n)), ())
    proj += sum((t(i) for i in range(m + 1)), ())
    proj += sum((s(i) for i in range(n - 1, 0, -1)), ())
    rels.append(free_reduce(proj))
    for i, b in enumerate(bs):
        rels += _power_relator(n + i, b)
    rels += _power_relator(1, a)
    return Presentation(names, tuple(rels))


def presentation_B1(bs) -> Presentation:
    bs = list(bs)
    if not bs:
        raise ValueError("need at least one marked point")
    names = tuple(f"t{i}" for i in range(len(bs)))
    rels = []
    for i, b in enumerate(bs):
        rels += _power_relator(i + 1, b)
    rels.append(tuple(range(1, len(bs) + 1)))
    return Presentation(names, tuple(rels))


def presentation_B2_abc(a, b, c) -> Presentation:
    """<t, s | (ts)^2 = (st)^2, t^b = (t s^2)^c = s^a = 1>."""
    t, s = (1,), (2,)
    rels = [equation(power(t + s, 2), power(s + t, 2))]
    rels += _power_relator(1, b)
    if c is not INF:
        rels.append(power(t + s + s, c))
    rels += _power_relator(2, a)
    return Presentation(("t", "s"), tuple(rels))


def presentation_B2_abcd(a, b, c, d) -> Presentation:
    """Two strands, three marked points; generators t, r, s."""
    t, r, s = (1,), (2,), (3,)
    rels = [
        equation(power(t + s, 2), power(s + t, 2)),
        equation(power(r + s, 2), power(s + r, 2)),
        commutator(r, t),
    ]
    rels += _power_relator(1, b)
    if d is not INF:
        rels.append(power(s + t + s + r, d))
    rels += _power_relator(2, c)
    rels += _power_relator(3, a)
    return Presentation(("t", "r", "s"), tuple(rels))


def presentation_triangle(p, q, r) -> Presentation:
    """<x, y | x^p = y^q = (xy)^r = 1>."""
    rels = _power_relator(1, p) + _power_relator(2, q)
    if r is not INF:
        rels.append(power((1, 2), r))
    return Presentation(("x", "y"), tuple(rels))


def cyclic(k: int) -> Presentation:
    return Presentation(("x",), ((1,) * k,))


# ---------------------------------------------------------------- spec strings

_SPEC_B = re.compile(r"^B\(\s*n\s*=\s*(\w+)\s*;\s*a\s*=\s*(\w+)\s*;\s*b\s*=\s*\[([^\]]*)\]\s*\)$")
_SPEC_CALL = re.compile(r"^(B2|T|B1)\(([^)]*)\)$")


def parse_group_spec(spec: str, mixed_includes_tau0: bool = False) -> Presentation:
    """Parse ``B(n=3; a=4; b=[inf])``, ``B2(a,b,c)``, ``B2(a,b,c,d)``,
    ``T(p,q,r)`` or ``B1(b0,...,bm)``."""
    text = spec.strip()
    m = _SPEC_B.match(text)
    if m:
        n = int(m.group(1))
        a = parse_weight(m.group(2))
        bs = [parse_weight(x) for x in m.group(3).split(",") if x.strip()]
        return presentation_Bn(n, a, bs, mixed_includes_tau0)
    m = _SPEC_CALL.match(text)
    if not m:
        raise ValueError(f"cannot parse group spec {spec!r}")
    kind = m.group(1)
    args = [parse_weight(x) for x in m.group(2).split(",") if x.strip()]
    if kind == "B2" and len(args) == 3:
        return presentation_B2_abc(*args)
    if kind == "B2" and len(args) == 4:
        return presentation_B2_abcd(*args)
    if kind == "T" and len(args) == 3:
        return presentation_triangle(*args)
    if kind == "B1" and args:
        return presentation_B1(args)
    raise ValueError(f"wrong number of arguments in {spec!r}")


def format_group_spec(n: int, a, bs) -> str:
    return f"B(n={n}; a={format_weight(a)}; b=[{','.join(format_weight(b) for b in bs)}])"


# ---------------------------------------------------------------- enumeration


def enumerate_cosets(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> Enumeration:
    return todd_coxeter(p.ngens, p.relators, max_cosets)


def group_order(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS):
    """Order of the group, or None when enumeration did not close."""
    e = enumerate_cosets(p, max_cosets)
    return e.order if e.closed else None


# ---------------------------------------------------------------- abelianization


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]
    rank: int

    @property
    def is_infinite(self) -> bool:
        return self.rank > 0

    @property
    def order(self):
        return INF if self.rank > 0 else prod(self.torsion)

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.rank
        return " x ".join(parts) if parts else "1"


def exponent_sum_matrix(p: Presentation) -> list[list[int]]:
    rows = []
    for r in p.relators:
        row = [0] * p.ngens
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form."""
    a = [list(row) for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag: list[int] = []
    for t in range(min(nrows, ncols)):
        entries = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, nrows) if a[i][t]]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, ncols) if a[t][j]]
            if rest:
                # a remainder smaller than the pivot becomes the new pivot
                _, i, j = min(rest)
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
    return diag


def abelianization(p: Presentation) -> AbelianInvariants:
    m = exponent_sum_matrix(p)
    diag = smith_diagonal(m) if m else []
    rank = p.ngens - len(diag)
    return AbelianInvariants(tuple(d for d in diag if d > 1), rank)


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class OrderResult:
    """Combined verdict: ``CLOSED`` (exact order), ``INFINITE`` (abelianization
    has free rank) or ``INCONCLUSIVE-FINITE-ABELIANIZATION``."""

    status: str
    order: object
    abelian: AbelianInvariants
    enumeration: Enumeration | None

    @property
    def is_closed(self) -> bool:
        return self.status == "CLOSED"


def analyse(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> OrderResult:
    ab = abelianization(p)
    if ab.is_infinite:
        # enumeration cannot close on an infinite group
        return OrderResult("INFINITE", INF, ab, None)
    e = enumerate_cosets(p, max_cosets)
    if e.closed:
        return OrderResult("CLOSED", e.order, ab, e)
    return OrderResult("INCONCLUSIVE-FINITE-ABELIANIZATION", None, ab, e)


def check_soundness(p: Presentation, e: Enumeration) -> bool:
    """Final table acts by permutations satisfying every relator, and the
    abelianization order divides the group order."""
    if not verify_table(e, p.relators):
        return False
    ab = abelianization(p)
    return not ab.is_infinite and e.order % ab.order == 0


@dataclass(frozen=True)
class CentralExtensionReport:
    status: str  # PASS, FAIL or INCONCLUSIVE
    group_order: int | None
    quotient_order: int | None
    triangle_order: object
    detail: str


def central_extension_check(a, b, c, max_cosets: int = 200_000) -> CentralExtensionReport:
    """Quotient of B2(a,b,c) by delta = (ts)^2 against the triangle group
    T(2, a, gcd(b, c))."""
    if b is INF or c is INF:
        raise ValueError("b and c must be finite")
    group = presentation_B2_abc(a, b, c)
    delta = power((1, 2), 2)
    quotient = group.with_relators(delta)
    g = enumerate_cosets(group, max_cosets)
    q = enumerate_cosets(quotient, max_cosets)
    d = gcd(b, c)
    expected = triangle_order(2, a, d)
    if not (g.closed and q.closed):
        return CentralExtensionReport(
            "INCONCLUSIVE", g.order, q.order, expected,
            f"group {g.status}, quotient {q.status}",
        )
    ok = g.order % q.order == 0 and (expected is INF or q.order == expected)
    return CentralExtensionReport(
        "PASS" if ok else "FAIL", g.order, q.order, expected,
        f"|G| = {g.order}, |G/<delta>| = {q.order}, |T(2,{format_weight(a)},{d})| = {format_weight(expected)}",
    )


def prop1_order(a, b):
    """2b (1/a + 1/b - 1/2)^-1 when positive, else INF."""
    from .weights import reciprocal

    margin = reciprocal(a) + reciprocal(b) - Fraction(1, 2)
    if margin <= 0:
        return INF
    value = 2 * b / margin
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral order {value}")
    return int(value)
