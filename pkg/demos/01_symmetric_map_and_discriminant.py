"""The symmetric map (P^1)^n -> P^n and its branch locus.

An unordered n-tuple of points [u_i : v_i] is recorded by the coefficients
of prod (u_i A - v_i B).  Tuples with a repeated point land on the
discriminant hypersurface D_n, a form of degree 2(n - 1).
"""

import random

from orbicover.exact import ProjectivePoint as P
from orbicover.exact import binary_form_from_roots
from orbicover.geometry import (
    StratumParams,
    change_frame_to_Y,
    default_marked_points,
    discriminant_hypersurface,
    is_on_diagonal,
    lifted_discriminant,
    param_stratum,
    phi_map,
)

pts = [P(1, 1), P(2, 1)]
print("points:", pts)
print("phi(points) =", phi_map(pts))
print("binary form coefficients (B^2, AB, A^2):", binary_form_from_roots(pts).coeffs)

# D_n in the symmetric coordinates X_0..X_n
for n in range(2, 5):
    d = discriminant_hypersurface(n)
    print(f"D_{n}: degree {d.degree}, {len(d.poly.terms)} terms")
print("D_2 =", discriminant_hypersurface(2).poly.to_text())

# D_n vanishes at phi(p) exactly when two of the points coincide
rng = random.Random(0)
d3 = discriminant_hypersurface(3)
for _ in range(5):
    tup = [P(rng.randint(-2, 2), 1) for _ in range(3)]
    print(f"  {tup}: on diagonal {is_on_diagonal(tup)}, D_3 vanishes {d3.contains(phi_map(tup))}")

# in the frame where the hyperplanes H_q_j are coordinate hyperplanes, the
# rational normal curve D_(n,1) is [(u y_j - v x_j)^n]_j
qs = default_marked_points(3)
dy = change_frame_to_Y(d3, qs)
sp = StratumParams(3, 1, (), P(2, 5))
y = param_stratum(sp, qs)
print("Y-frame point of D_(3,1):", y, "on D_3:", dy.contains(y))

# pulling back along Y_j = Z_j^b multiplies the degree by b
for b in (1, 2, 4, 5):
    print(f"lift of D_3 by b = {b}: degree {lifted_discriminant(3, b).degree}")
