import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhs.bound_states import (
    default_window,
    nonrel_decaying,
    nonrel_energy,
    pspin_residual,
    solve_bound_energies,
    spin_residual,
)
from dhs.errors import DomainError, EmptyWindowError
from dhs.model import Limit, PotentialParams, SymmetryContext
from dhs.reference_data import NONREL_ALPHAS, NONREL_ENERGIES

PSPIN = SymmetryContext("pspin", C=0.0)
SPIN0 = SymmetryContext("spin", C=0.0)
SPIN5 = SymmetryContext("spin", C=5.0)


@pytest.mark.parametrize("E", [2.279123264, 1.029346029])
def test_pseudospin_residual_at_tabulated_roots(E):
    r = pspin_residual(PotentialParams(5, 0.1, 0.1), PSPIN, E, 1, -1)
    assert r.params_valid
    assert abs(r.residual) < 1e-6


@pytest.mark.parametrize("ctx,E", [(SPIN0, 2.852748850), (SPIN5, 4.894455875), (SPIN0, -0.997190645)])
def test_spin_residual_at_tabulated_roots(ctx, E):
    r = spin_residual(PotentialParams(10, 0.1, 0.1), ctx, E, 0, -2)
    assert r.params_valid
    assert abs(r.residual) < 1e-6


def test_residual_changes_sign_around_tabulated_roots():
    p = PotentialParams(5, 0.1, 0.1)
    for E in (1.029346029, 2.279123264):
        lo = pspin_residual(p, PSPIN, E - 1e-4, 1, -1).residual
        hi = pspin_residual(p, PSPIN, E + 1e-4, 1, -1).residual
        assert lo * hi < 0


def test_residual_reports_invalid_exponent():
    # the pseudospin radicand turns negative once M - E + C is large and positive
    p = PotentialParams(10, 0.5, 0.1)
    r = pspin_residual(p, PSPIN, -5.0, 0, -1)
    assert not r.params_valid
    assert math.isnan(r.residual)


def test_residual_checks_limit():
    with pytest.raises(DomainError):
        spin_residual(PotentialParams(5, 0.1, 0.1), PSPIN, 1.0, 0, -1)


def test_solver_finds_both_pseudospin_roots():
    sols = solve_bound_energies(PotentialParams(5, 0.1, 0.1), PSPIN, 1, -1, window=(-0.99, 3))
    got = [s.E for s in sols]
    assert got == pytest.approx([1.029346029, 2.279123264], abs=1e-6)
    assert [s.decaying for s in sols] == [False, True]
    assert all(s.limit is Limit.PSEUDOSPIN and s.n == 1 and s.kappa == -1 for s in sols)


def test_solver_finds_both_spin_roots():
    sols = solve_bound_energies(PotentialParams(10, 0.1, 0.1), SPIN5, 0, -2, window=(3, 6))
    assert [s.E for s in sols] == pytest.approx([4.004884016, 4.894455875], abs=1e-6)


@pytest.mark.parametrize(
    "p,ctx,n,kappa",
    [
        (PotentialParams(5, 0.1, 0.1), PSPIN, 1, -1),
        (PotentialParams(10, 0.25, 0.1), SymmetryContext("pspin", C=-5.0), 2, 3),
        (PotentialParams(10, 0.1, 0.1), SPIN0, 0, -2),
        (PotentialParams(10, 0.2, 0.1), SPIN5, 1, 4),
    ],
)
def test_roots_are_tight_and_inside_brackets(p, ctx, n, kappa):
    sols = solve_bound_energies(p, ctx, n, kappa)
    assert sols
    fn = pspin_residual if ctx.limit is Limit.PSEUDOSPIN else spin_residual
    for s in sols:
        lo, hi = s.bracket
        assert lo < s.E < hi
        assert abs(fn(p, ctx, s.E, n, kappa).residual) < 1e-10
        assert fn(p, ctx, lo, n, kappa).residual * fn(p, ctx, hi, n, kappa).residual < 0
    assert [s.E for s in sols] == sorted(s.E for s in sols)


def test_root_count_stable_under_halved_step():
    p = PotentialParams(10, 0.15, 0.1)
    ctx = SymmetryContext("pspin", C=-5.0)
    for n, kappa in ((0, -1), (1, 2), (2, -3)):
        coarse = solve_bound_energies(p, ctx, n, kappa)
        fine = solve_bound_energies(p, ctx, n, kappa, step=5e-4)
        assert len(coarse) == len(fine)
        assert np.allclose([s.E for s in coarse], [s.E for s in fine], atol=1e-10)


def test_first_root_falls_as_sigma0_grows():
    energies = []
    for s0 in (0.10, 0.15, 0.20, 0.25):
        sols = solve_bound_energies(PotentialParams(5, s0, 0.1), PSPIN, 1, -1)
        energies.append(max(s.E for s in sols if s.decaying))
    assert all(np.diff(energies) < 0)


def test_spin_first_root_rises_as_kappa_decreases():
    energies = []
    for kappa in (-2, -3, -4, -5):
        sols = solve_bound_energies(PotentialParams(10, 0.1, 0.1), SPIN0, 0, kappa)
        energies.append(max(s.E for s in sols if s.decaying))
    assert all(np.diff(energies) > 0)


def test_empty_window():
    p = PotentialParams(10, 0.5, 0.1)
    with pytest.raises(EmptyWindowError):
        solve_bound_energies(p, PSPIN, 0, -1, window=(-10.0, -5.0))
    with pytest.raises(DomainError):
        solve_bound_energies(p, PSPIN, 0, -1, window=(1.0, 1.0))


def test_default_window_covers_constant():
    assert default_window(SymmetryContext("pspin", C=-5.0)) == (-16.0, 16.0)


@pytest.mark.parametrize("l", [0, 1, 2])
def test_spin_condition_reduces_to_nonrelativistic_levels(l):
    # E_nr = E - M, mu = M, C_s = 0, with M large
    M = 1e4
    p = PotentialParams(10, 0.1, 0.1)
    ctx = SymmetryContext("spin", C=0.0, M=M)
    want = nonrel_energy(p, M, 0, l)
    kappa = l if l else -1
    sols = solve_bound_energies(p, ctx, 0, kappa, window=(M + want - 0.3, M + want + 0.3))
    assert len(sols) == 1
    assert sols[0].E - M == pytest.approx(want, rel=1e-3)


def test_nonrel_examples():
    assert nonrel_energy(PotentialParams(10, 0.1, 0.1), 1.0, 0, 1) == pytest.approx(2.61886, abs=5e-6)
    assert nonrel_energy(PotentialParams(10, 0.2, 0.25), 1.0, 0, 3) == pytest.approx(5.35270, abs=5e-6)


def test_nonrel_table():
    for n, l, _, s0, values in NONREL_ENERGIES:
        for alpha, want in zip(NONREL_ALPHAS, values):
            got = nonrel_energy(PotentialParams(10, s0, alpha), 1.0, n, l)
            assert got == pytest.approx(want, abs=5e-6)


def test_nonrel_rejects_negative_numbers():
    with pytest.raises(DomainError):
        nonrel_energy(PotentialParams(10, 0.1, 0.1), 1.0, -1, 0)


def test_nonrel_branch_flag():
    p = PotentialParams(10, 0.1, 0.1)
    assert nonrel_decaying(p, 1.0, 0, 0)
    assert not nonrel_decaying(p, 1.0, 30, 0)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 0.4), st.floats(0.05, 0.3), st.integers(0, 3), st.integers(1, 4))
def test_nonrel_is_deterministic_and_finite(s0, alpha, n, l):
    p = PotentialParams(10, s0, alpha)
    e1 = nonrel_energy(p, 1.0, n, l)
    assert math.isfinite(e1)
    assert e1 == nonrel_energy(p, 1.0, n, l)
