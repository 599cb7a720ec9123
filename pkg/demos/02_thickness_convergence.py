"""How boundary error depends on interface thickness.

Smoothed-boundary formulations are first order in the interface
thickness xi. This script halves xi twice for a flux condition and a
value condition and fits the log-log slope of the boundary error.

The flux study lands on a slope of 1. The value study comes out steeper,
around 1.2: at these thicknesses its error is a mix of a linear penalty
term and a quadratic profile term, so the apparent order sits above 1.

Run:  python demos/02_thickness_convergence.py
"""

from sbm.cases import convergence_study

for case in ("neumann1d", "dirichlet1d"):
    table = convergence_study(case, [4, 8, 16])
    print(table.format())
    print()
