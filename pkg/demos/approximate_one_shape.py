"""Fit zonotopes to a single convex shape and check the guarantees.

Walks through the two approximation modes on an ellipse: the plain grid
interpolant, and the rotation-optimized fit that matters when the shape is
not aligned with the grid.
"""

import numpy as np

from zonofit import (
    Ellipse,
    c0_approximate,
    cinf_approximate,
    contains,
    diameter,
    hausdorff_bound,
    hausdorff_distance,
    regular_subdivision,
)

x = Ellipse(3.0, 1.0)
print(f"target: ellipse with semiaxes (3, 1), diameter {diameter(x):.1f}")
print()

print("grid interpolants: distance vs the a priori bound")
print(f"{'n':>4} {'d_H(X, Z_n)':>12} {'bound':>10} {'vertices':>9}")
for n in (2, 4, 8, 16, 32):
    z = c0_approximate(x, n)
    d = hausdorff_distance(x, z)
    b = hausdorff_bound(n, diameter(x))
    print(f"{n:>4} {d:>12.6f} {b:>10.4f} {len(z.vertices().vertices):>9}")
    # the interpolant matches H exactly at the grid angles and contains X
    th = regular_subdivision(n)
    assert np.abs(z.feret(th) - x.feret(th)).max() < 1e-9
    assert contains(z, x)
print()

# Tilt the same ellipse so it sits between the n = 2 grid directions.
# The axis-aligned interpolant degrades badly; re-optimizing the grid
# rotation recovers the aligned quality.
tilted = Ellipse(3.0, 1.0, phi=np.pi / 4)
d0 = hausdorff_distance(tilted, c0_approximate(tilted, 2))
tau, z_best = cinf_approximate(tilted, 2)
d_best = hausdorff_distance(tilted, z_best)
print("ellipse tilted by pi/4, n = 2:")
print(f"  unrotated grid:  d_H = {d0:.4f}")
print(f"  optimized grid:  d_H = {d_best:.4f} at offset tau = {tau:.4f}")
print(f"  (the offset recovers the tilt: pi/4 = {np.pi / 4:.4f})")
print()

# The optimized distance is a rotation invariant of the shape.
vals = []
for phi in np.linspace(0.0, np.pi, 8, endpoint=False):
    _, z = cinf_approximate(Ellipse(3.0, 1.0, phi=float(phi)), 2, grid_points=64)
    vals.append(hausdorff_distance(Ellipse(3.0, 1.0, phi=float(phi)), z))
print(f"optimized distance over 8 random orientations: "
      f"spread {max(vals) - min(vals):.2e} around {np.mean(vals):.6f}")
