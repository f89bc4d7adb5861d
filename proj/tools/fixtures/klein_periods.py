"""Regenerate the period-matrix fixtures in fixtures/.

Periods of a smooth plane quartic F(X, Y, Z) = 0 over a symplectic homology
basis, computed with Sage's numerical RiemannSurface (tested with the
pip-installable passagemath distribution: passagemath-schemes,
passagemath-groups, networkx). Run with a Sage-enabled python:

    python tools/fixtures/klein_periods.py > fixtures/klein.period
    python tools/fixtures/klein_periods.py "x^4 + 2*y^4 + 3 + x^2*y - 2*x*y^2 + x*y + y" > fixtures/generic.period

The optional argument is the affine chart Z = 1 of the quartic in x, y.
"""

import sys

from sage.all__sagemath_schemes import QQ, PolynomialRing
from sage.schemes.riemann_surfaces.riemann_surface import RiemannSurface

R = PolynomialRing(QQ, "x,y")
x, y = R.gens()
affine = R(sys.argv[1]) if len(sys.argv) > 1 else x**3 * y + y**3 + x
projective = affine.homogenize("Z")
surface = RiemannSurface(affine, prec=120)

# Sage's differentials are g dx/f_y for g in [1, y, x], i.e. the coordinates
# Z, Y, X of the canonical embedding. Reorder rows to X, Y, Z.
assert [str(g) for g in surface.cohomology_basis()] == ["1", "y", "x"]
periods = surface.period_matrix()
rows = [2, 1, 0]

print("# Plane quartic %s = 0" % str(projective).replace(" ", ""))
print("# Rows: periods of X dx/F_Y, Y dx/F_Y, Z dx/F_Y (affine chart Z = 1).")
print("# Columns: a symplectic homology basis gamma_1..gamma_6; Z = Omega1^-1 Omega2.")
print("# Source: Sage RiemannSurface(%s, prec=120).period_matrix()," % str(affine).replace(" ", ""))
print("# generated by tools/fixtures/klein_periods.py.")
print("PERIOD 3 6")
for r in rows:
    print(" ".join("%s %s" % (periods[r, c].real().n(digits=25), periods[r, c].imag().n(digits=25)) for c in range(6)))
