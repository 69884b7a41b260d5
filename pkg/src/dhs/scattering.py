"""Scattering states of the two Dirac limits: 2F1 parameters, phase shifts,
normalisation constants and radial spinor profiles."""

from dataclasses import dataclass
import cmath
import math

import numpy as np

from . import model
from .errors import DomainError
from .model import Channel, Limit
from .special import abs_gamma, arg_gamma, hyp2f1, log_gamma


@dataclass(frozen=True)
class HypergeomTriple:
    a: complex
    b: complex
    c: complex

    def swapped(self):
        return HypergeomTriple(self.b, self.a, self.c)


@dataclass(frozen=True)
class PhaseShiftResult:
    delta: float
    k: float
    channel: Channel


@dataclass(frozen=True)
class WavefunctionProfile:
    r_grid: np.ndarray
    values: np.ndarray
    component: str  # "LowerG" (pseudospin) or "UpperF" (spin)


def _dirac(s):
    if s.limit is Limit.NONREL:
        raise DomainError("scattering quantities are defined for the Dirac limits")


def inner_root(ep, p, s):
    """Principal sqrt(+-beta D sigma0/alpha^2 - k^2/(4 alpha^2)).

    The sign of the beta term is minus for pseudospin, plus for spin.
    """
    rad = model.potential_sign(s) * ep.beta * p.D * p.sigma0 / p.alpha**2
    rad -= ep.k**2 / (4.0 * p.alpha**2)
    return cmath.sqrt(rad)


def hypergeom_params(ep, p, s):
    """(a, b, c) with a, b = lambda - i k/(2 alpha) -/+ root and c = 2 lambda."""
    _dirac(s)
    root = inner_root(ep, p, s)
    centre = ep.lam - 0.5j * ep.k / p.alpha
    return HypergeomTriple(a=centre - root, b=centre + root, c=complex(2.0 * ep.lam))


def _setup(p, s, E, kappa):
    _dirac(s)
    ep = model.energy_params(p, s, E, kappa)
    return ep, hypergeom_params(ep, p, s)


def phase_from_triple(triple, k, alpha, l):
    """pi/2 (l+1) + arg G(i k/alpha) - arg G(c-a) - arg G(c-b), continuous branch."""
    t = triple
    return (
        0.5 * math.pi * (l + 1)
        + arg_gamma(1j * k / alpha)
        - arg_gamma(t.c - t.a)
        - arg_gamma(t.c - t.b)
    )


def phase_shift(p, s, E, l, kappa):
    """Phase shift of partial wave ``l`` with spin-orbit number ``kappa``.

    ``l`` and ``kappa`` are independent inputs; see ``model.orbital_l`` for
    the physical pairing.  Raises EvanescentChannelError for imaginary k and
    PoleError when a Gamma argument hits a pole (e.g. k = 0).
    """
    if l < 0:
        raise DomainError("l must be non-negative")
    ep, triple = _setup(p, s, E, kappa)
    delta = phase_from_triple(triple, ep.k, p.alpha, l)
    return PhaseShiftResult(delta=delta, k=ep.k, channel=Channel(n=0, kappa=kappa, l=l))


def normalization_from_triple(triple, k, alpha):
    t = triple
    log_n = (
        log_gamma(t.c - t.a).real
        + log_gamma(t.c - t.b).real
        - 0.5 * math.log(t.c.real)
        - log_gamma(1j * k / alpha).real
    )
    return math.exp(log_n)


def normalization_constant(p, s, E, kappa):
    """|G(c-a)| |G(c-b)| / (sqrt(2 lambda) |G(i k/alpha)|)."""
    ep, triple = _setup(p, s, E, kappa)
    return normalization_from_triple(triple, ep.k, p.alpha)


def asymptotic_form(p, s, E, kappa):
    """(amplitude, phase) such that the spinor tends to amplitude * sin(k r + pi/2 + phase).

    amplitude = 2 N G(c) |G(c-a-b) / (G(c-a) G(c-b))| and phase is the
    argument of the same Gamma ratio.
    """
    ep, t = _setup(p, s, E, kappa)
    norm = normalization_from_triple(t, ep.k, p.alpha)
    ratio = log_gamma(t.c - t.a - t.b) - log_gamma(t.c - t.a) - log_gamma(t.c - t.b)
    amplitude = 2.0 * norm * abs_gamma(t.c) * math.exp(ratio.real)
    return amplitude, ratio.imag


def radial_wavefunction(p, s, E, kappa, r_grid):
    """N (1 - e^{-2 alpha r})^lambda e^{i k r} 2F1(a, b; c; 1 - e^{-2 alpha r}) on ``r_grid``.

    Lower component G for pseudospin, upper component F for spin.
    """
    r = np.asarray(r_grid, dtype=float)
    if r.ndim != 1 or r.size == 0 or np.any(r <= 0) or np.any(np.diff(r) <= 0):
        raise DomainError("r_grid must be positive and strictly ascending")
    ep, t = _setup(p, s, E, kappa)
    norm = normalization_from_triple(t, ep.k, p.alpha)
    values = np.empty(r.size, dtype=complex)
    for i, ri in enumerate(r):
        w = math.exp(-2.0 * p.alpha * ri)
        z = -math.expm1(-2.0 * p.alpha * ri)
        f = hyp2f1(t.a, t.b, t.c, z, one_minus_z=w)
        values[i] = norm * z**ep.lam * cmath.exp(1j * ep.k * ri) * f
    component = "LowerG" if s.limit is Limit.PSEUDOSPIN else "UpperF"
    return WavefunctionProfile(r_grid=r, values=values, component=component)
