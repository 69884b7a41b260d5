"""Hyperbolic potential, Pekeris-type centrifugal surrogate and the
per-energy parameters of the pseudospin and spin limits.

Units: hbar = 1, masses and energies in the same (atomic) unit.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .errors import ComplexExponentError, DomainError, EvanescentChannelError

C0_DEFAULT = 0.0823058167837972


class Limit(str, Enum):
    PSEUDOSPIN = "pspin"
    SPIN = "spin"
    NONREL = "nonrel"


# Spin-limit small-r exponent.  "consistent" follows from the spin ODE
# (+4 beta D sigma0^2 / alpha^2 under the root, mirroring the pseudospin
# limit with beta -> -beta_tilde); "literal" keeps the opposite sign.
SPIN_EXPONENT_CONVENTIONS = ("consistent", "literal")


@dataclass(frozen=True)
class PotentialParams:
    D: float
    sigma0: float
    alpha: float
    c0: float = C0_DEFAULT

    def __post_init__(self):
        for name in ("D", "sigma0", "alpha"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)}")
        if not self.c0 >= 0:
            raise DomainError(f"c0 must be non-negative, got {self.c0}")

    @property
    def asymptote(self):
        """V(r -> inf) = D (1 - sigma0)^2."""
        return self.D * (1.0 - self.sigma0) ** 2


@dataclass(frozen=True)
class SymmetryContext:
    """Which limit, its symmetry constant C (C_ps or C_s) and the mass.

    For ``Limit.NONREL`` the mass is the reduced mass mu and ``C`` is unused.
    """

    limit: Limit
    C: float = 0.0
    M: float = 1.0
    hbar: float = 1.0
    spin_exponent: str = "consistent"

    def __post_init__(self):
        object.__setattr__(self, "limit", Limit(self.limit))
        if not self.M > 0:
            raise DomainError(f"mass must be positive, got {self.M}")
        if self.hbar != 1.0:
            raise DomainError("only hbar = 1 units are supported")
        if self.spin_exponent not in SPIN_EXPONENT_CONVENTIONS:
            raise DomainError(f"unknown spin_exponent {self.spin_exponent!r}")


@dataclass(frozen=True)
class Channel:
    n: int = 0
    kappa: int = -1
    l: int = 0

    def __post_init__(self):
        if self.kappa == 0:
            raise DomainError("kappa = 0 is not a Dirac spin-orbit quantum number")
        if self.n < 0 or self.l < 0:
            raise DomainError("n and l must be non-negative")


@dataclass(frozen=True)
class EnergyParams:
    gamma: float
    beta: float
    k: float
    lam: float
    k_squared: float


def check_kappa(kappa):
    kappa = int(kappa)
    if kappa == 0:
        raise DomainError("kappa = 0 is not a Dirac spin-orbit quantum number")
    return kappa


def orbital_l(limit, kappa):
    """Orbital l paired with kappa: spin l, pseudospin l-tilde."""
    kappa = check_kappa(kappa)
    limit = Limit(limit)
    if limit is Limit.PSEUDOSPIN:
        return kappa - 1 if kappa > 0 else -kappa
    if limit is Limit.SPIN:
        return kappa if kappa > 0 else -kappa - 1
    raise DomainError("orbital_l is defined for the Dirac limits only")


def centrifugal_factor(limit, kappa):
    """kappa(kappa - 1) for pseudospin, kappa(kappa + 1) for spin."""
    kappa = check_kappa(kappa)
    if Limit(limit) is Limit.PSEUDOSPIN:
        return kappa * (kappa - 1)
    return kappa * (kappa + 1)


def _positive_r(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be positive")
    return r


def potential_value(p, r):
    """D (1 - sigma0 coth(alpha r))^2; accepts scalars or arrays."""
    r = _positive_r(r)
    out = p.D * (1.0 - p.sigma0 / np.tanh(p.alpha * r)) ** 2
    return out if out.ndim else float(out)


def centrifugal_approx(p, r):
    """Exponential surrogate 4 alpha^2 [c0 + y + y^2], y = x / (1 - x), x = exp(-2 alpha r)."""
    r = _positive_r(r)
    x = np.exp(-2.0 * p.alpha * r)
    y = x / -np.expm1(-2.0 * p.alpha * r)
    out = 4.0 * p.alpha**2 * (p.c0 + y + y * y)
    return out if out.ndim else float(out)


def coupling(s, E):
    """(gamma, beta) of the chosen limit at total energy E.

    Pseudospin: gamma = (M+E)(M-E+C), beta = M-E+C.
    Spin:       gamma = (M-E)(M+E-C), beta = M+E-C.
    Non-relativistic (mapped onto the spin form): gamma = -2 mu E, beta = 2 mu.
    """
    M, C = s.M, s.C
    if s.limit is Limit.PSEUDOSPIN:
        beta = M - E + C
        return (M + E) * beta, beta
    if s.limit is Limit.SPIN:
        beta = M + E - C
        return (M - E) * beta, beta
    return -2.0 * M * E, 2.0 * M


def potential_sign(s):
    """+1 when the ODE carries +beta V (spin, non-relativistic), -1 for pseudospin."""
    return -1.0 if s.limit is Limit.PSEUDOSPIN else 1.0


def wave_number_squared(p, limit, gamma, beta, nu):
    """k^2 from the couplings: pseudospin beta V_inf - gamma - 4 a^2 nu c0,
    spin (and non-relativistic) -beta V_inf - gamma - 4 a^2 nu c0."""
    sign = -1.0 if Limit(limit) is Limit.PSEUDOSPIN else 1.0
    return -sign * beta * p.asymptote - gamma - 4.0 * p.alpha**2 * nu * p.c0


def k_squared(p, s, E, nu):
    """Radicand of the asymptotic wave number for centrifugal factor ``nu``."""
    gamma, beta = coupling(s, E)
    return wave_number_squared(p, s.limit, gamma, beta, nu)


def lambda_radicand(p, s, E, nu):
    _, beta = coupling(s, E)
    strength = 4.0 * beta * p.D * p.sigma0**2 / p.alpha**2
    if s.limit is Limit.PSEUDOSPIN:
        return 1.0 + 4.0 * nu - strength
    if s.limit is Limit.SPIN and s.spin_exponent == "literal":
        return 1.0 + 4.0 * nu - strength
    return 1.0 + 4.0 * nu + strength


def exponent(p, s, E, nu):
    """Small-r exponent lambda = 1/2 + sqrt(radicand)/2."""
    rad = lambda_radicand(p, s, E, nu)
    if rad < 0:
        raise ComplexExponentError(
            f"lambda radicand {rad:.6g} < 0 (E={E}): complex small-r exponent", rad
        )
    return 0.5 + 0.5 * math.sqrt(rad)


def energy_params(p, s, E, kappa):
    """gamma, beta, k and lambda of a Dirac limit at energy E.

    Raises EvanescentChannelError when k^2 < 0 and ComplexExponentError when
    lambda would be complex.  For ``Limit.NONREL`` use ``nonrel_params``.
    """
    if s.limit is Limit.NONREL:
        raise DomainError("energy_params covers the Dirac limits; use nonrel_params")
    nu = centrifugal_factor(s.limit, kappa)
    return _params(p, s, E, nu)


def nonrel_params(p, s, E, l):
    """Non-relativistic analogue of ``energy_params`` (kappa(kappa+1) -> l(l+1))."""
    if s.limit is not Limit.NONREL:
        raise DomainError("nonrel_params needs a NONREL context")
    if l < 0:
        raise DomainError("l must be non-negative")
    return _params(p, s, E, l * (l + 1))


def _params(p, s, E, nu):
    gamma, beta = coupling(s, E)
    k2 = k_squared(p, s, E, nu)
    if k2 < 0:
        raise EvanescentChannelError(
            f"k^2 = {k2:.6g} < 0 at E={E}: no scattering state", k2
        )
    lam = exponent(p, s, E, nu)
    return EnergyParams(gamma=gamma, beta=beta, k=math.sqrt(k2), lam=lam, k_squared=k2)
