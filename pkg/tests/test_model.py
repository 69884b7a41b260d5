import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhs.errors import ComplexExponentError, DomainError, EvanescentChannelError
from dhs.model import (
    C0_DEFAULT,
    Channel,
    Limit,
    PotentialParams,
    SymmetryContext,
    centrifugal_approx,
    centrifugal_factor,
    coupling,
    energy_params,
    k_squared,
    nonrel_params,
    orbital_l,
    potential_value,
    wave_number_squared,
)


def test_default_shift():
    assert PotentialParams(1, 0.1, 0.1).c0 == 0.0823058167837972 == C0_DEFAULT


@pytest.mark.parametrize("field", ["D", "sigma0", "alpha"])
def test_params_must_be_positive(field):
    kw = dict(D=1.0, sigma0=0.1, alpha=0.1)
    kw[field] = 0.0
    with pytest.raises(DomainError):
        PotentialParams(**kw)


def test_negative_shift_rejected():
    with pytest.raises(DomainError):
        PotentialParams(1, 0.1, 0.1, c0=-0.1)


def test_kappa_zero_rejected():
    with pytest.raises(DomainError):
        Channel(n=0, kappa=0)
    with pytest.raises(DomainError):
        centrifugal_factor(Limit.SPIN, 0)


def test_context_checks():
    with pytest.raises(DomainError):
        SymmetryContext("spin", M=0)
    with pytest.raises(DomainError):
        SymmetryContext("spin", hbar=2.0)
    with pytest.raises(ValueError):
        SymmetryContext("sideways")


def test_potential_far_limit():
    p = PotentialParams(10, 0.5, 0.5)
    assert potential_value(p, 200.0) == pytest.approx(2.5, rel=1e-14)
    assert p.asymptote == 2.5


def test_potential_diverges_at_origin():
    p = PotentialParams(10, 0.5, 0.5)
    r = 1e-5
    assert potential_value(p, r) == pytest.approx(p.sigma0**2 * p.D / (p.alpha * r) ** 2, rel=1e-3)


def test_potential_matches_direct_evaluation(derived):
    p = PotentialParams(10, 0.1, 0.1)
    assert potential_value(p, 5.0) == pytest.approx(derived["potential_D10_s0p1_a0p1_r5"], rel=1e-14)


def test_potential_vectorised_and_domain():
    p = PotentialParams(10, 0.1, 0.1)
    r = np.array([1.0, 2.0, 3.0])
    assert potential_value(p, r).shape == (3,)
    with pytest.raises(DomainError):
        potential_value(p, 0.0)
    with pytest.raises(DomainError):
        centrifugal_approx(p, np.array([1.0, -1.0]))


def test_potential_tail_decays_at_twice_alpha():
    p = PotentialParams(10, 0.3, 0.4)
    r = np.linspace(10, 30, 50)
    gap = potential_value(p, r) - p.asymptote
    slope = np.polyfit(r, np.log(np.abs(gap)), 1)[0]
    assert slope == pytest.approx(-2 * p.alpha, rel=0.01)


def test_surrogate_without_shift_tracks_inverse_square():
    p = PotentialParams(1, 0.1, 0.2, c0=0.0)
    r = np.linspace(1e-3, 0.05 / p.alpha, 200)
    rel = np.abs(centrifugal_approx(p, r) * r**2 - 1)
    assert rel.max() < 1e-3


def test_surrogate_at_alpha_r_one_tenth(derived):
    p = PotentialParams(1, 0.1, 0.1)
    rel = abs(centrifugal_approx(p, 1.0) - 1.0)
    assert rel == pytest.approx(derived["pekeris_relerr_ar0p1"], rel=1e-9)
    assert rel < 1e-4


def test_surrogate_far_limit():
    p = PotentialParams(1, 0.1, 0.3)
    assert centrifugal_approx(p, 500.0) == pytest.approx(4 * p.alpha**2 * p.c0, rel=1e-14)


def test_spin_worked_example_with_printed_exponent():
    p = PotentialParams(10, 0.5, 0.5)
    s = SymmetryContext("spin", C=5, spin_exponent="literal")
    ep = energy_params(p, s, 1.0, -1)
    assert ep.beta == -3 and ep.gamma == 0
    assert ep.k == pytest.approx(math.sqrt(7.5), rel=1e-15)
    assert ep.lam == pytest.approx(6.0, rel=1e-15)


def test_spin_worked_example_has_complex_exponent_in_ode_form():
    p = PotentialParams(10, 0.5, 0.5)
    s = SymmetryContext("spin", C=5)
    with pytest.raises(ComplexExponentError) as info:
        energy_params(p, s, 1.0, -1)
    assert info.value.radicand == pytest.approx(1 - 4 * 3 * 10 * 0.25 / 0.25)


def test_pseudospin_worked_example():
    p = PotentialParams(10, 0.1, 0.1)
    s = SymmetryContext("pspin", C=0.05)
    ep = energy_params(p, s, 1.0, -1)
    assert ep.beta == pytest.approx(0.05)
    assert ep.gamma == pytest.approx(0.1)
    want = 0.05 * 10 * 0.81 - 0.1 - 4 * 0.01 * 2 * C0_DEFAULT
    assert ep.k_squared == pytest.approx(want, rel=1e-13)


@pytest.mark.parametrize("kappa", [-3, -1, 2, 4])
def test_pseudospin_at_rest_is_evanescent(kappa):
    p = PotentialParams(10, 0.1, 0.1)
    s = SymmetryContext("pspin", C=0.0)
    with pytest.raises(EvanescentChannelError) as info:
        energy_params(p, s, 1.0, kappa)
    assert info.value.k_squared < 0


def test_nonrel_mapping():
    s = SymmetryContext("nonrel", M=1.5)
    assert coupling(s, 2.0) == (-6.0, 3.0)
    p = PotentialParams(10, 0.1, 0.1)
    ep = nonrel_params(p, s, 20.0, 1)
    assert ep.k_squared == pytest.approx(2 * 1.5 * (20 - p.asymptote) - 4 * p.alpha**2 * 2 * p.c0)
    with pytest.raises(DomainError):
        energy_params(p, s, 1.0, -1)


def test_orbital_pairing():
    assert [orbital_l("spin", k) for k in (-1, 1, -2, 2)] == [0, 1, 1, 2]
    assert [orbital_l("pspin", k) for k in (-1, 1, -2, 2)] == [1, 0, 2, 1]


@settings(max_examples=200, deadline=None)
@given(
    st.floats(0.1, 20), st.floats(0.05, 0.9), st.floats(0.05, 1.0),
    st.floats(-50, 50), st.floats(-10, 10), st.integers(-6, 6).filter(lambda k: k != 0),
)
def test_spin_and_pseudospin_wave_numbers_map_onto_each_other(D, s0, al, gamma, beta, kappa):
    # kappa(kappa-1) at kappa equals kappa(kappa+1) at -kappa; beta -> -beta
    p = PotentialParams(D, s0, al)
    nu_ps = centrifugal_factor(Limit.PSEUDOSPIN, kappa)
    nu_sp = centrifugal_factor(Limit.SPIN, -kappa)
    assert nu_ps == nu_sp
    k1 = wave_number_squared(p, Limit.PSEUDOSPIN, gamma, beta, nu_ps)
    k2 = wave_number_squared(p, Limit.SPIN, gamma, -beta, nu_sp)
    assert k1 == k2


def test_wave_number_formula_matches_energy_path():
    p = PotentialParams(10, 0.1, 0.1)
    for lim, E in (("pspin", 1.0), ("spin", 3.0)):
        s = SymmetryContext(lim, C=0.05)
        gamma, beta = coupling(s, E)
        nu = centrifugal_factor(lim, -2)
        assert k_squared(p, s, E, nu) == wave_number_squared(p, lim, gamma, beta, nu)
