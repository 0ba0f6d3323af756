"""Command-line verification harness.

Each subcommand recomputes a family of claimed values and prints one report
per claim: the computed value, the expected value with its provenance, and a
status of MATCH, MISMATCH or INCONCLUSIVE.  The exit code is 0 iff no report
is a MISMATCH.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from . import curves, fpgroups, geometry, orbifold
from .coset import DEFAULT_MAX_COSETS
from .exact import ProjectivePoint
from .weights import INF, format_weight, parse_weight

DEFAULT_SEED = 2024
# infinite rows only need a failed closure as supporting evidence
INFINITE_ROW_LIMIT = 100_000

MATCH = "MATCH"
MISMATCH = "MISMATCH"
INCONCLUSIVE = "INCONCLUSIVE"

# neutral identifiers for the claim families a report can belong to
ANCHORS = {
    "orders-table": "finite braid group orders table",
    "symmetric-cover-order": "order n! b^n of the symmetric-cover braid group",
    "triple-weight-order": "order n! 2^n (1/b+1/c+1/d-1)^-n",
    "central-extension-order": "order 2b (1/a+1/b-1/2)^-1 of B2(a,b,b)",
    "infinite-rows": "infinite braid groups of the orders table",
    "lifted-discriminant": "degree 2b(n-1) of the lifted discriminant",
    "rational-normal-curve": "Euler number b^(n-1)(n+1+b-nb) and cover degree",
    "line-orbit-census": "singularities of L^(r/s)",
    "uniformization": "uniformization type of a weighted line",
    "finiteness-margin": "conjectured finiteness inequality",
    "group-order": "order of a finitely presented group",
}


def jsonable(value):
    if value is INF:
        return "inf"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, ProjectivePoint):
        return repr(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


@dataclass
class Report:
    claim: str
    anchor: str
    computed: object
    expected: object
    provenance: str
    status: str
    millis: int = 0

    def __post_init__(self):
        if self.anchor not in ANCHORS:
            raise ValueError(f"unknown anchor {self.anchor!r}")
        if self.status not in (MATCH, MISMATCH, INCONCLUSIVE):
            raise ValueError(f"unknown status {self.status!r}")

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "anchor": self.anchor,
            "computed": jsonable(self.computed),
            "expected": jsonable(self.expected),
            "provenance": self.provenance,
            "status": self.status,
            "millis": int(self.millis),
        }

    def line(self) -> str:
        c = json.dumps(jsonable(self.computed))
        e = json.dumps(jsonable(self.expected))
        return f"{self.status:<12} {self.claim:<44} computed={c} expected={e} [{self.provenance}; {self.millis} ms]"


def compare(computed, expected) -> str:
    return MATCH if computed == expected else MISMATCH


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, int(round((time.perf_counter() - t0) * 1000))


def dumps(reports: list[Report]) -> str:
    return json.dumps([r.to_dict() for r in sort_reports(reports)], indent=2)


def sort_reports(reports):
    return sorted(reports, key=lambda r: r.claim)


# ------------------------------------------------------------------ table


@dataclass(frozen=True)
class Row:
    claim: str
    spec: str
    expected: object  # int, or INF for groups expected to be infinite
    anchor: str
    provenance: str


def _bn(n, a, bs):
    return fpgroups.format_group_spec(n, a, bs)


def table_rows(skip_large: bool = False) -> list[Row]:
    rows = []
    for a, order in ((3, 24), (4, 96), (5, 600)):
        rows.append(Row(f"table/H3({a},inf)", _bn(3, a, [INF]), order, "orders-table", "PUBLISHED"))
    for n, order in ((4, 648), (5, 155520)):
        if skip_large and order > 10_000:
            continue
        rows.append(Row(f"table/H{n}(3,inf)", _bn(n, 3, [INF]), order, "orders-table", "PUBLISHED"))
    rows.append(Row("table/H3(inf,2)", _bn(3, INF, [2]), 192, "orders-table", "PUBLISHED"))
    for n, a, order in ((4, 4, 192), (4, 5, 60), (5, 4, 120)):
        rows.append(Row(f"table/H{n}({a})", _bn(n, a, []), order, "orders-table", "PUBLISHED (external computation)"))
    for a in (2, 3, 4):
        rows.append(Row(f"table/H2({a},2,2,2)", f"B2({a},2,2,2)", 4 * a**3, "orders-table", "PUBLISHED"))
    rows.append(Row("table/H2(3,3,2,2)", "B2(3,3,2,2)", 576, "orders-table", "PUBLISHED"))
    for n in (2, 3, 4):
        rows.append(Row(f"table/H{n}(2)", _bn(n, 2, []), factorial(n), "orders-table", "PUBLISHED"))
    for n in (2, 3):
        for b in (2, 3, 4):
            rows.append(
                Row(f"family/H{n}(2,{b},{b})", _bn(n, 2, [b, b]), orbifold.corollary_order_Hbb(n, b),
                    "symmetric-cover-order", "DERIVED: formula n! b^n")
            )
    for n in (2, 3):
        for bcd in ((2, 2, 2), (2, 2, 3), (2, 3, 3), (2, 3, 4)):
            order = orbifold.corollary_order_Htriple(n, *bcd)
            if skip_large and order > 10_000:
                continue
            rows.append(
                Row(f"family/H{n}(2,{','.join(map(str, bcd))})", _bn(n, 2, list(bcd)), order,
                    "triple-weight-order", "DERIVED: formula n! 2^n (1/b+1/c+1/d-1)^-n")
            )
    for a in range(2, 6):
        for b in range(2, 6):
            order = fpgroups.prop1_order(a, b)
            if order is INF:
                continue
            rows.append(
                Row(f"family/B2({a},{b},{b})", f"B2({a},{b},{b})", order,
                    "central-extension-order", "DERIVED: formula 2b (1/a+1/b-1/2)^-1")
            )
    infinite = [
        ("infinite/H2(inf,inf,inf)", _bn(2, INF, [INF, INF])),
        ("infinite/H3(inf,inf,inf)", _bn(3, INF, [INF, INF])),
        ("infinite/H2(inf,inf,inf,inf)", _bn(2, INF, [INF, INF, INF])),
        ("infinite/H2(2,2,3,6)", _bn(2, 2, [2, 3, 6])),
        ("infinite/H2(2,2,2,2,2)", _bn(2, 2, [2, 2, 2, 2])),
        ("infinite/H2(4,4,4)", "B2(4,4,4)"),
        ("infinite/H2(3,6,6)", "B2(3,6,6)"),
    ]
    for claim, spec in infinite:
        rows.append(Row(claim, spec, INF, "infinite-rows", "PUBLISHED"))
    return rows


def _conventions(mode: str) -> list[tuple[str, bool]]:
    return {"off": [("off", False)], "on": [("on", True)], "both": [("off", False), ("on", True)]}[mode]


def _evaluate(spec: str, flag: bool, limit: int):
    p = fpgroups.parse_group_spec(spec, flag)
    r = fpgroups.analyse(p, limit)
    if r.status == "CLOSED":
        return r.order, f"CLOSED({r.order})"
    if r.status == "INFINITE":
        return INF, f"INFINITE(abelianization {r.abelian})"
    return None, f"EXCEEDED(abelianization {r.abelian})"


def run_row(row: Row, mode: str, max_cosets: int) -> Report:
    t0 = time.perf_counter()
    limit = min(max_cosets, INFINITE_ROW_LIMIT) if row.expected is INF else max_cosets
    computed = {}
    values = {}
    seen: dict = {}
    for label, flag in _conventions(mode):
        # both conventions give the same presentation when there are no t's
        key = fpgroups.parse_group_spec(row.spec, flag).relators
        if key not in seen:
            seen[key] = _evaluate(row.spec, flag, limit)
        values[label], computed[label] = seen[key]
    if any(v == row.expected for v in values.values()):
        status = MATCH
    elif row.expected is INF and all(v is None for v in values.values()):
        status = INCONCLUSIVE
    elif all(v is None for v in values.values()):
        status = INCONCLUSIVE
    else:
        status = MISMATCH
    if len(computed) == 1:
        computed = next(iter(computed.values()))
    millis = int(round((time.perf_counter() - t0) * 1000))
    return Report(row.claim, row.anchor, computed, row.expected, f"{row.provenance}; {row.spec}", status, millis)


def _run_row_args(args):
    return run_row(*args)


def cmd_table1(mode: str = "off", max_cosets: int = DEFAULT_MAX_COSETS, skip_large: bool = False, jobs: int = 1) -> list[Report]:
    rows = table_rows(skip_large)
    work = [(row, mode, max_cosets) for row in rows]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            reports = list(pool.map(_run_row_args, work))
    else:
        reports = [run_row(*w) for w in work]
    return sort_reports(reports)


# ------------------------------------------------------------------ geometry


def parse_points(text: str) -> list[ProjectivePoint]:
    """``"0:1,1:1,2:1"`` -> [[0:1], [1:1], [2:1]]."""
    pts = []
    for tok in text.split(","):
        x, y = tok.split(":")
        pts.append(ProjectivePoint(Fraction(x), Fraction(y)))
    return pts


def lifted_sample(rng: random.Random, n: int, b: int):
    """A rational point z upstairs together with a frame qs in which z lies
    on the lifted rational normal curve.

    With u y_j - v x_j = r_j^b the curve point Y_j = (u y_j - v x_j)^n is
    psi_b of z_j = r_j^n.
    """
    while True:
        u, v = rng.randint(1, 9), rng.randint(-9, 9)
        rs = [rng.choice([k for k in range(-9, 10) if k]) for _ in range(n + 1)]
        xs = [rng.randint(-9, 9) for _ in range(n + 1)]
        qs = [ProjectivePoint(x, Fraction(r**b + v * x, u)) for x, r in zip(xs, rs)]
        if len(set(qs)) == n + 1:
            return qs, ProjectivePoint([r**n for r in rs])


def cmd_discriminant(n: int, b: int, qs=None, seed: int = DEFAULT_SEED, samples: int = 100, lifted_samples: int = 3) -> list[Report]:
    if n < 2:
        raise ValueError("n >= 2 required")
    if gcd(n, b) != 1:
        raise ValueError(f"gcd(n, b) = {gcd(n, b)} != 1")
    qs = geometry.default_marked_points(n) if qs is None else geometry.marked_points(qs)
    tag = f"seed {seed}"
    reports = []

    lifted, ms = timed(lambda: geometry.lifted_discriminant(n, b, qs))
    reports.append(Report(f"discriminant/n={n},b={b}/degree", "lifted-discriminant", lifted.degree, 2 * b * (n - 1),
                          f"PUBLISHED; {tag}", compare(lifted.degree, 2 * b * (n - 1)), ms))

    def incidence():
        rng = random.Random(seed)
        # the lift is a polynomial in Z^b whose descent is the Y-frame equation
        base = geometry.descend(lifted, b)
        hits = 0
        for _ in range(samples):
            sp = geometry.StratumParams.random(rng, n, 1)
            if base.contains(geometry.param_stratum(sp, qs)):
                hits += 1
        # genuine rational points upstairs, each in its own frame
        for _ in range(lifted_samples):
            frame, z = lifted_sample(rng, n, b)
            if geometry.lifted_discriminant(n, b, frame).contains(z) and geometry.is_on_lifted_stratum(z, n, 1, b, frame):
                hits += 1
        return hits

    hits, ms = timed(incidence)
    total = samples + lifted_samples
    reports.append(Report(f"discriminant/n={n},b={b}/incidence", "lifted-discriminant", hits, total,
                          f"DERIVED: parametrized points of D_(n,1) on the lifted equation; {tag}",
                          compare(hits, total), ms))
    return reports


def cmd_euler(n: int, b: int) -> list[Report]:
    rep, ms = timed(lambda: orbifold.euler_report(n, b))
    e = orbifold.riemann_hurwitz_euler(n, b)
    cover = orbifold.COVER_P1 if e > 0 else orbifold.COVER_C if e == 0 else orbifold.COVER_BALL
    expected = {"n": n, "b": b, "euler": e, "degree": factorial(n) * b ** (n * n - n), "cover": cover}
    return [Report(f"euler/n={n},b={b}", "rational-normal-curve", rep.to_dict(), expected,
                   "DERIVED: Riemann-Hurwitz and closed-form degree", compare(rep.to_dict(), expected), ms)]


def cmd_curve(r: int, s: int, coeffs=None) -> list[Report]:
    def run():
        cen = curves.singularity_census(r, s)
        used = tuple(coeffs) if coeffs else curves.first_generic_coeffs(s)
        cert = curves.nodal_certificate(s, *used)
        return cen, used, cert

    (cen, used, cert), ms = timed(run)
    computed = cen.to_dict()
    computed.update({"certificate": str(cert), "witness": cert.witness, "coeffs": list(used)})
    k = curves.expected_node_orbits(s)
    expected = {"nodes_downstairs": k, "certificate": f"NODAL({k})", "genus_balance": True}
    ok = (
        cert.kind == "NODAL"
        and cert.node_orbits == k
        and cen.nodes == r * r * k
        and curves.genus_balance(r, s)
    )
    if cert.kind == "NOT_GENERIC":
        status = INCONCLUSIVE
    else:
        status = MATCH if ok else MISMATCH
    return [Report(f"curve/r={r},s={s}", "line-orbit-census", computed, expected,
                   "PUBLISHED census; DERIVED line-orbit node count", status, ms)]


def cmd_classify(weights) -> list[Report]:
    sig = orbifold.OrbifoldSignature(tuple(weights))
    kind, ms = timed(lambda: orbifold.classify_orbifold(sig))
    chi = orbifold.orb_euler_char(sig)
    ws = list(sig.weights)
    if len(ws) == 1 or (len(ws) == 2 and ws[0] != ws[1]):
        expected = orbifold.UniformizationType.BAD.value
    else:
        expected = "SPHERE" if chi > 0 else "EUCLIDEAN" if chi == 0 else "HYPERBOLIC"
    name = ",".join(format_weight(w) for w in ws)
    return [Report(f"classify/({name})", "uniformization", {"type": kind.value, "euler_char": chi}, {"type": expected},
                   "DERIVED: sign of the orbifold Euler characteristic", compare(kind.value, expected), ms)]


def _prediction(margin: Fraction) -> str:
    return "finite" if margin > 0 else "infinite solvable" if margin == 0 else "big"


def cmd_conjecture(n: int, a, bs, max_cosets: int = 200_000) -> list[Report]:
    margin = orbifold.conjecture_margin(n, a, bs)
    pred = _prediction(margin)
    spec = _bn(n, a, list(bs))
    (value, detail), ms = timed(lambda: _evaluate(spec, False, max_cosets))
    if value is None:
        status, observed = INCONCLUSIVE, "unknown"
    else:
        observed = "finite" if value is not INF else "infinite"
        status = MATCH if (observed == "finite") == (pred == "finite") else MISMATCH
    return [Report(f"conjecture/{spec}", "finiteness-margin", {"margin": margin, "prediction": pred},
                   {"observed": observed, "enumeration": detail},
                   "DERIVED: coset enumeration and abelianization", status, ms)]


def expected_order(spec: str):
    """Expected order of a group spec from the table rows and the closed-form
    families, or None when nothing is known."""
    for row in table_rows():
        if row.spec == spec:
            return row.expected, row.anchor
    p = fpgroups.parse_group_spec(spec)
    if spec.startswith("T("):
        p_, q_, r_ = [parse_weight(x) for x in spec[2:-1].split(",")]
        if INF not in (p_, q_, r_):
            return orbifold.triangle_order(p_, q_, r_), "group-order"
    if spec.startswith("B1("):
        ws = [parse_weight(x) for x in spec[3:-1].split(",")]
        if len(ws) == 3 and INF not in ws:
            return orbifold.triangle_order(*ws), "group-order"
        if len(ws) == 2 and INF not in ws:
            return gcd(*ws), "group-order"
        if len(ws) == 1:
            return 1, "group-order"
    if spec.startswith("B2(") and p.ngens == 2:
        a, b, c = [parse_weight(x) for x in spec[3:-1].split(",")]
        if b == c and INF not in (a, b):
            return fpgroups.prop1_order(a, b), "central-extension-order"
    return None, "group-order"


def cmd_order(spec: str, mode: str = "off", max_cosets: int = DEFAULT_MAX_COSETS, expect=None) -> list[Report]:
    expected, anchor = expected_order(spec)
    if expect is not None:
        expected, anchor = expect, "group-order"
    row = Row(f"order/{spec}", spec, expected, anchor, "DERIVED" if expect is None else "user")
    if expected is None:
        t0 = time.perf_counter()
        value, detail = _evaluate(spec, mode == "on", max_cosets)
        ms = int(round((time.perf_counter() - t0) * 1000))
        return [Report(row.claim, anchor, detail, None, "no reference value", INCONCLUSIVE, ms)]
    return [run_row(row, mode, max_cosets)]


# ------------------------------------------------------------------ main


def _coeffs(text: str):
    parts = [Fraction(x) for x in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated coefficients")
    return parts


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON array of reports")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for random sampling")
    common.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    common.add_argument("--mixed-tau0", choices=("on", "off", "both"), default="off",
                        help="whether the mixed relations also involve t0")

    parser = argparse.ArgumentParser(prog="orbicover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", parents=[common], help="braid group orders table and formula families")
    p.add_argument("--skip-large", action="store_true", help="skip rows of order above 10000")
    p.add_argument("--jobs", type=int, default=1, help="rows enumerated in parallel")

    p = sub.add_parser("discriminant", parents=[common], help="lifted discriminant degree and incidence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--qs", help="marked points as x:y,x:y,... (default j:1)")
    p.add_argument("--samples", type=int, default=100)

    p = sub.add_parser("euler", parents=[common], help="Euler number and cover of the lifted curve")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("curve", parents=[common], help="singularity census of L^(r/s)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--coeffs", type=_coeffs, help="line coefficients a,b,c")

    p = sub.add_parser("classify", parents=[common], help="uniformization type of weights on P^1")
    p.add_argument("weights", nargs="*", type=parse_weight)

    p = sub.add_parser("conjecture", parents=[common], help="finiteness margin against enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=parse_weight, required=True)
    p.add_argument("--b", dest="bs", nargs="*", type=parse_weight, default=[])

    p = sub.add_parser("order", parents=[common], help="order of a group given by a spec string")
    p.add_argument("spec", help="B(n=3; a=4; b=[inf]), B2(a,b,c), B2(a,b,c,d), T(p,q,r) or B1(b0,...)")
    p.add_argument("--expect", type=int)
    return parser


def run(args) -> list[Report]:
    cmd = args.command
    if cmd == "table1":
        return cmd_table1(args.mixed_tau0, args.max_cosets, args.skip_large, args.jobs)
    if cmd == "discriminant":
        qs = parse_points(args.qs) if args.qs else None
        return cmd_discriminant(args.n, args.b, qs, args.seed, args.samples)
    if cmd == "euler":
        return cmd_euler(args.n, args.b)
    if cmd == "curve":
        return cmd_curve(args.r, args.s, args.coeffs)
    if cmd == "classify":
        return cmd_classify(args.weights)
    if cmd == "conjecture":
        return cmd_conjecture(args.n, args.a, args.bs, args.max_cosets)
    if cmd == "order":
        return cmd_order(args.spec, args.mixed_tau0, args.max_cosets, args.expect)
    raise AssertionError(cmd)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        reports = sort_reports(run(args))
    except ValueError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    if args.json:
        print(dumps(reports))
    else:
        print(f"# seed {args.seed}, coset limit {args.max_cosets}, mixed relations with t0: {args.mixed_tau0}")
        for r in reports:
            print(r.line())
        counts = {s: sum(r.status == s for r in reports) for s in (MATCH, MISMATCH, INCONCLUSIVE)}
        print("# " + ", ".join(f"{k} {v}" for k, v in counts.items()))
    return 1 if any(r.status == MISMATCH for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
