"""A slab with a value held on one side and a flux on the other.

The solid occupies 10 < x < 30 inside a larger box. Nothing in the grid
knows where the walls are: the domain parameter psi fades from 1 to 0
across a few grid points, and the boundary conditions enter the equation
as source terms weighted by |grad psi|. Here C = 0.4 is imposed on the
left wall and an outward flux of -0.05 on the right, with a uniform
source S = 0.02. The exact steady state is a parabola.

Run:  python demos/01_mixed_boundary_slab.py
"""

import numpy as np

from sbm.cases import mixed_1d_exact, mixed_1d_setup
from sbm.diffusion import mixed_rate
from sbm.domain import band_width, level_crossing
from sbm.solvers import solve_steady

g, psi, bc, p = mixed_1d_setup()
x = g.coords(0)
print(f"grid: {g.shape[0]} nodes, dx = {g.dx}")
prof = psi.psi[: g.shape[0] // 2]
print(f"interface width: {band_width(prof, g.dx, 0.01, 0.99) / g.dx:.2f} grid points (0.01-0.99), "
      f"{band_width(prof, g.dx) / g.dx:.2f} (0.1-0.9)")

# The steady state is one sparse solve of the assembled SBM operator.
C = solve_steady(lambda c: mixed_rate(c, psi, p, bc), np.zeros(g.shape), psi.live)

half = g.shape[0] // 2
left = level_crossing(psi.psi[:half], x[:half])
right = level_crossing(psi.psi[half:][::-1], x[half:][::-1])
print(f"walls (psi = 0.5) at x = {left:.3f} and x = {right:.3f}")
print(f"C at the left wall        : {np.interp(left, x, C):.4f}   (imposed 0.4)")
print(f"dC/dx at the right wall   : {np.interp(right, x, np.gradient(C, g.dx)):.4f}  (imposed -0.05)")

print("\n   x      SBM       exact")
for xi in (10, 12.5, 15, 20, 25, 27.5, 30):
    i = int(round(xi / g.dx))
    print(f"{xi:5.1f}  {C[i]:8.4f}  {mixed_1d_exact(xi):8.4f}")

# The error lives in the diffuse band and shrinks as the band thins.
inside = (x >= left) & (x <= right)
err = np.abs(C - mixed_1d_exact(x))[inside].max()
print(f"\nmax bulk error: {err:.4f} ({err / mixed_1d_exact(x)[inside].max():.2%} of max C)")
