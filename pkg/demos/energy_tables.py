"""Bound-state energies from the pole conditions, next to the published tables.

Run:  python3 demos/energy_tables.py
"""

import numpy as np

from dhs import reference_data as ref
from dhs.bound_states import nonrel_energy, solve_bound_energies
from dhs.model import PotentialParams, SymmetryContext

# The relativistic conditions are implicit in E, so every (n, kappa) row is
# found by scanning an energy window and polishing each sign change.  Two
# roots come back per row; ``decaying`` marks the one whose matching
# solution falls off at large r.
print("pseudospin limit, D = 5, C_ps = 0, alpha = 0.1")
print(f"{'n':>2} {'kappa':>5} {'sigma0':>6}   {'root':>14} {'decaying':>8}   {'table':>12}")
ctx = SymmetryContext("pspin", C=0.0)
for n, kappa, sigma0, first, _ in ref.PSEUDOSPIN_ENERGIES[:8]:
    p = PotentialParams(5.0, sigma0, 0.1)
    for sol in solve_bound_energies(p, ctx, n, kappa):
        tab = min(first, key=lambda e: abs(e - sol.E))
        print(f"{n:>2} {kappa:>5} {sigma0:>6.2f}   {sol.E:>14.9f} {str(sol.decaying):>8}   {tab:>12.9f}")

# Spin limit with a nonzero constant C_s: the whole spectrum moves up.
print("\nspin limit, D = 10, alpha = 0.1, n = 0, kappa = -2")
for C in (0.0, 5.0):
    p = PotentialParams(10.0, 0.1, 0.1)
    roots = [s.E for s in solve_bound_energies(p, SymmetryContext("spin", C=C), 0, -2)]
    print(f"  C_s = {C:4.1f}: " + ", ".join(f"{e:.9f}" for e in roots))

# The explicit non-relativistic levels need no root finding.
print("\nnon-relativistic levels (mu = 1, D = 10)")
print("state sigma0 " + " ".join(f"a={a:<8}" for a in ref.NONREL_ALPHAS))
for n, l, name, sigma0, values in ref.NONREL_ENERGIES[:6]:
    got = [nonrel_energy(PotentialParams(10.0, sigma0, a), 1.0, n, l) for a in ref.NONREL_ALPHAS]
    gap = np.max(np.abs(np.array(got) - np.array(values)))
    print(f"{name:>5} {sigma0:6.2f} " + " ".join(f"{e:10.5f}" for e in got) + f"   max gap {gap:.1e}")
