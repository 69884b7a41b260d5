"""Phase shifts against the spin-orbit number, and where they cannot be formed.

Run:  python3 demos/phase_shift_sweep.py [--plot out.png]
"""

import math
import sys

import numpy as np

from dhs import reference_data as ref
from dhs.errors import DHSError
from dhs.model import PotentialParams, SymmetryContext, orbital_l
from dhs.scattering import asymptotic_form, phase_shift, radial_wavefunction
from dhs.validation import cli_marker

# A channel set where every kappa scatters: shallow well, energy well above
# the asymptote.  delta(l) is the same Gamma-function phase plus (l + 1) pi/2.
p = PotentialParams(1.0, 0.5, 0.5)
ctx = SymmetryContext("spin", C=0.0)
E = 3.0
kappas = [k for k in range(-5, 6) if k != 0]
curves = {}
for l in range(4):
    curves[l] = [phase_shift(p, ctx, E, l, k).delta for k in kappas]
    print(f"l={l}: " + " ".join(f"{d:8.4f}" for d in curves[l]))
print("consecutive l differ by", np.unique(np.round(np.diff([curves[l] for l in range(4)], axis=0), 12)))

# Near the origin the solution goes like r^lambda; far away it oscillates
# with the amplitude and phase read off the Gamma-function ratio.
amp, arg_ratio = asymptotic_form(p, ctx, E, -1)
k = phase_shift(p, ctx, E, 0, -1).k
r = np.linspace(50 / k, 60 / k, 5)
prof = radial_wavefunction(p, ctx, E, -1, r)
print("\ntail of the kappa=-1 wave vs the asymptotic sinusoid")
for ri, v in zip(r, prof.values):
    print(f"  r={ri:7.3f}  F={v.real:+.6f}  asymptote={amp * math.sin(k * ri + math.pi / 2 + arg_ratio):+.6f}")

# The tabulated setups sit in a regime where the pieces of the closed form
# stop being real: the pseudospin channel at C_ps = 0 has no propagating
# wave, and the spin channels at C_s = 5, 10 have a complex exponent.
print("\nstatus of the tabulated setups")
for limit, setup, columns, table in (
    ("pspin", ref.PSEUDOSPIN_PHASE_SETUP, ref.PSEUDOSPIN_PHASE_COLUMNS, ref.PSEUDOSPIN_PHASES),
    ("spin", ref.SPIN_PHASE_SETUP, ref.SPIN_PHASE_COLUMNS, ref.SPIN_PHASES),
):
    q = PotentialParams(setup["D"], setup["sigma0"], setup["alpha"])
    for C in columns:
        s = SymmetryContext(limit, C=C, M=setup["M"])
        tally = {}
        for kappa in (-3, -2, -1, 1, 2, 3):
            try:
                phase_shift(q, s, setup["E"], orbital_l(limit, kappa), kappa)
                tally["ok"] = tally.get("ok", 0) + 1
            except DHSError as exc:
                tally[cli_marker(exc)] = tally.get(cli_marker(exc), 0) + 1
        print(f"  {limit:5} C={C:5}: {tally}")

if "--plot" in sys.argv:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots()
    for l, ys in curves.items():
        ax.plot(kappas, ys, "o-", label=f"l={l}")
    ax.set_xlabel("kappa")
    ax.set_ylabel("delta (rad)")
    ax.legend()
    fig.savefig(sys.argv[sys.argv.index("--plot") + 1], dpi=120)
