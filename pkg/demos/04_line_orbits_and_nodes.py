"""Nodes of L^(1/s), counted on the line orbit upstairs.

The preimage of the line ax + by + cz = 0 under [x:y:z] -> [x^s:y^s:z^s]
is the union of the s^2 lines a w^i x + b w^j y + c z = 0, w = exp(2 pi i/s).
Every intersection is computed exactly in Q(w).  Off the coordinate
triangle all points are double, and their orbits under (Z/s)^2 are the
(s-1)(s-2)/2 nodes of the rational curve L^(1/s).
"""

import time

from orbicover.curves import (
    build_orbit,
    divisibility_criterion,
    intersection_census,
    nodal_certificate,
    singularity_census,
)

lines = build_orbit(1, 2, 5, 3)
for line in lines[:3]:
    print(f"L_{line.i}{line.j}:", line.coeffs)
cen = intersection_census(lines)
print(f"s=3: {len(cen.points)} intersection points, {len(cen.off_triangle())} off the triangle, "
      f"{cen.off_triangle_orbits} orbit(s)")

for s in range(2, 8):
    t0 = time.perf_counter()
    cert = nodal_certificate(s)
    print(f"s={s}: {cert}  expected {(s - 1) * (s - 2) // 2}  ({time.perf_counter() - t0:.2f}s)")

checked, vanishing, ok = divisibility_criterion(5)
print(f"\ns=5 determinant criterion: {vanishing} of {checked} index quadruples vanish, all with s | b+g-a-t: {ok}")

for r, s in [(2, 3), (3, 2), (5, 2), (3, 4)]:
    c = singularity_census(r, s)
    print(f"L^({r}/{s}): degree {c.degree}, genus {c.genus}, {c.cusps} cusps, {c.nodes} nodes")
