"""Euler numbers of the lifted rational normal curve and its universal cover.

The curve D_(n,1)^(b) is the maximal abelian cover of P^1 branched with
index b over n + 1 points.  Its Euler number decides whether the n-th power
of the curve is covered by (P^1)^n, C^n or the n-fold product of discs.
"""

from math import gcd

from orbicover.orbifold import (
    UniformizationType,
    classify_orbifold,
    euler_report,
    orb_euler_char,
    riemann_hurwitz_euler,
)

print(" n  b   euler   RH    degree        cover")
for n in range(2, 6):
    for b in range(1, 6):
        if gcd(n, b) != 1:
            continue
        r = euler_report(n, b)
        print(f"{n:2} {b:2} {r.euler:7} {riemann_hurwitz_euler(n, b):5} {r.degree:9}  {r.cover}")

print("\nweighted lines:")
for sig in [(3, 3), (2, 3), (2, 3, 5), (2, 3, 6), (2, 2, "inf"), (2, 3, 7), (2, 2, 2, 2)]:
    from orbicover.weights import parse_weight

    ws = tuple(parse_weight(str(w)) for w in sig)
    kind = classify_orbifold(ws)
    chi = orb_euler_char(ws)
    print(f"  {sig}: chi = {chi}, {kind.value}" + ("  (no finite uniformization)" if kind is UniformizationType.BAD else ""))
