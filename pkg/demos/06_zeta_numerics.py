"""Numerical zeta integrals with a Gaussian test function.

Quadratic zeta functions in rank <= 2 are computed by quadrature and checked
against closed forms and their functional equations; quartic zeta functions
are computed by Monte Carlo and checked against closed-form oracles in the
square cases.
"""

import math

from cqforms import (
    fe_quadratic_numeric_check,
    rep_build,
    zeta_quadratic_numeric,
    zeta_quartic_mc,
)
from cqforms.zetafe import zeta_quadratic_closed, zeta_quartic_closed_square

# ---------------------------------------------------------------------------
# Quadrature vs closed forms
# ---------------------------------------------------------------------------

print("rank-one Gaussian zeta, quadrature vs closed form:")
for s in (1.0, 0.3, -0.6):
    got = zeta_quadratic_numeric(1, 0, "+", s).value
    want = zeta_quadratic_closed(1, 0, s)
    print(f"  s = {s:5.2f}: {got.real:.12f}  (closed {want.real:.12f})")
print()

print("functional equations with the self-dual Gaussian:")
print("  rank 1, s = -0.6  :", fe_quadratic_numeric_check(1, 0, -0.6, 1e-4))
print("  rank 2 definite   :", fe_quadratic_numeric_check(2, 0, -0.5, 1e-8))
print("  rank 2 split      :", fe_quadratic_numeric_check(1, 1, -0.5, 1e-4))
print()

# ---------------------------------------------------------------------------
# Monte Carlo quartic zeta vs closed-form oracle
# ---------------------------------------------------------------------------

rep = rep_build(1, 0, (4, 0))  # S_1 = identity on R^4: F = |w|^4
est = zeta_quartic_mc(rep, "+", 1.0, samples=10**6, seed=42)
want = zeta_quartic_closed_square(4, 1.0)
print(f"|w|^4 module at s = 1: MC {est.value.real:.6f} +- {est.stderr:.1e},"
      f" closed {want.real:.6f} (= 6/pi^2 = {6/math.pi**2:.6f})")
print()

# component masses of the (2, 1) Lorentz module partition the Gaussian
rep21 = rep_build(2, 1, (2, 1))
total = 0.0
for comp in ("+", "-+", "--"):
    e = zeta_quartic_mc(rep21, comp, 0.0, samples=200_000, seed=5)
    total += e.value.real
    print(f"Gaussian mass of component {comp:2s}: {e.value.real:.4f} +- {e.stderr:.1e}")
print(f"total: {total:.4f} (should be 1 up to Monte Carlo error)")
