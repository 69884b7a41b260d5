"""Independent check of the closed forms by direct integration of the radial equation.

Run:  python3 demos/oracle_check.py
"""

import math

import numpy as np

from dhs.bound_states import solve_bound_energies
from dhs.model import PotentialParams, SymmetryContext, orbital_l
from dhs.oracle import numerov_eigensolve, numerov_phase_extract, pekeris_quality_report
from dhs.scattering import phase_shift

# Same differential equation, two routes: the pole condition and a Numerov
# shooting solve.  Agreement tests the hypergeometric algebra, not the
# centrifugal surrogate both of them use.
p = PotentialParams(10.0, 0.15, 0.1)
ctx = SymmetryContext("pspin", C=-5.0)
print("closed form vs Numerov, pseudospin, D=10, C_ps=-5, sigma0=0.15")
for n in range(4):
    for sol in solve_bound_energies(p, ctx, n, -2):
        if not sol.decaying:
            print(f"  n={n}: second root {sol.E:.9f} belongs to the growing branch, no eigenfunction")
            continue
        E = numerov_eigensolve(p, ctx, n, -2, bracket=(sol.E - 0.01, sol.E + 0.01))
        print(f"  n={n}: {sol.E:.9f}  numerov {E:.9f}  gap {abs(E - sol.E):.1e}")

# Fourth order: halving the step should cut the error by about 16.
root = [s.E for s in solve_bound_energies(p, ctx, 2, 3) if s.decaying][0]
errs = [abs(numerov_eigensolve(p, ctx, 2, 3, bracket=(root - 0.02, root + 0.02), step=h) - root)
        for h in (0.08, 0.04, 0.02, 0.01)]
print("\nstep error ratios:", " ".join(f"{a / b:.1f}" for a, b in zip(errs, errs[1:])))

# Scattering: the tail phase of the integrated solution, mod pi, against
# delta - l pi/2 from the Gamma functions.
q = PotentialParams(1.0, 0.5, 0.5)
s = SymmetryContext("spin", C=0.0)
print("\ntail phase mod pi, spin, D=1, E=3")
for kappa in (-3, -2, -1, 1, 2, 3):
    l = orbital_l("spin", kappa)
    delta = phase_shift(q, s, 3.0, l, kappa).delta
    phi = numerov_phase_extract(q, s, 3.0, kappa)
    print(f"  kappa={kappa:+d}: closed {(delta - l * math.pi / 2) % math.pi:.8f}  numerov {phi:.8f}")

# How good is the exponential surrogate for 1/r^2?  Fine near the origin,
# useless far out where it tends to a constant.
print("\nsurrogate vs 1/r^2 (alpha = 0.1)")
rows = pekeris_quality_report(PotentialParams(1.0, 0.1, 0.1), np.array([0.05, 0.2, 1.0, 3.0]) / 0.1)
for row in rows:
    print(f"  c0={row.c0:.4f}  alpha r={row.r * 0.1:4.2f}  rel error {row.rel_error:.2e}")
