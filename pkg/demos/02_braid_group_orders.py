"""Orders of orbifold braid groups by coset enumeration.

Each group is built from its presentation and enumerated over the trivial
subgroup.  A closed table certifies the order; a group with free
abelianization is certified infinite; anything else stays undecided.
"""

import time

from orbicover.fpgroups import (
    abelianization,
    analyse,
    central_extension_check,
    presentation_B2_abc,
    presentation_Bn,
    prop1_order,
)
from orbicover.orbifold import corollary_order_Hbb
from orbicover.weights import INF

p = presentation_Bn(3, 4, [INF])
print(p.to_text())
print()

for label, n, a, bs in [("H3(3,inf)", 3, 3, [INF]), ("H3(4,inf)", 3, 4, [INF]), ("H4(3,inf)", 4, 3, [INF]),
                        ("H3(inf,2)", 3, INF, [2]), ("H4(5)", 4, 5, [])]:
    t0 = time.perf_counter()
    r = analyse(presentation_Bn(n, a, bs))
    print(f"{label:10} {r.status:8} order {r.order}  abelianization {r.abelian}  ({time.perf_counter() - t0:.2f}s)")

print("\nsymmetric-cover family n! b^n:")
for n in (2, 3):
    for b in (2, 3):
        print(f"  n={n} b={b}: enumerated {analyse(presentation_Bn(n, 2, [b, b])).order}, formula {corollary_order_Hbb(n, b)}")

print("\ntwo-strand groups B2(a,b,b) against 2b (1/a+1/b-1/2)^-1:")
for a, b in [(3, 3), (2, 4), (3, 4), (3, 2), (5, 2)]:
    order = analyse(presentation_B2_abc(a, b, b)).order
    rep = central_extension_check(a, b, b)
    print(f"  ({a},{b}): enumerated {order}, formula {prop1_order(a, b)}; {rep.detail}")

print("\nan infinite example:", abelianization(presentation_Bn(3, INF, [INF, INF])))
