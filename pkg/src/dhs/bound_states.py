"""Bound-state energies from the S-matrix pole conditions.

The relativistic conditions are implicit in E (gamma, beta and lambda all
depend on it), so they are solved by scanning a window for sign changes and
refining each bracket.  The non-relativistic energies are explicit.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.optimize import brentq

from . import model
from .errors import DomainError, EmptyWindowError
from .model import Limit

SCAN_STEP = 1e-3
ROOT_XTOL = 1e-13
DEDUP_TOL = 1e-9


@dataclass(frozen=True)
class EnergyEquationResidual:
    E: float
    residual: float  # nan when params_valid is False
    params_valid: bool


@dataclass(frozen=True)
class BoundStateSolution:
    """A root of the pole condition.

    ``decaying`` tells which branch of the squared condition the root
    belongs to: True when the matching solution falls off like e^{-q r}
    with q > 0.  Both branches are reported.
    """

    E: float
    n: int
    kappa: int
    limit: Limit
    bracket: tuple
    decaying: bool


def _pieces(p, s, E, n, nu):
    """Vectorised (residual, bracket term, valid mask) for energies E."""
    E = np.asarray(E, dtype=float)
    M, C = s.M, s.C
    a2 = p.alpha**2
    if s.limit is Limit.PSEUDOSPIN:
        beta = M - E + C
        gamma = (M + E) * beta
        rad = 1.0 + 4.0 * nu - 4.0 * beta * p.D * p.sigma0**2 / a2
    elif s.limit is Limit.SPIN:
        beta = M + E - C
        gamma = (M - E) * beta
        sgn = -1.0 if s.spin_exponent == "literal" else 1.0
        rad = 1.0 + 4.0 * nu + sgn * 4.0 * beta * p.D * p.sigma0**2 / a2
    else:
        raise DomainError("pole conditions are solved for the Dirac limits")
    valid = rad >= 0
    lam = 0.5 + 0.5 * np.sqrt(np.where(valid, rad, 0.0))
    nl = n + lam
    if s.limit is Limit.PSEUDOSPIN:
        term = ((nl**2 + beta * p.D * p.sigma0 / a2) / (2.0 * nl))
        res = (
            gamma / (4.0 * a2)
            - beta * p.asymptote / (4.0 * a2)
            + nu * p.c0
            - term**2
        )
    else:
        term = ((nl**2 - beta * p.D * p.sigma0 / a2) / (2.0 * nl))
        res = (
            nu * p.c0
            + gamma / (4.0 * a2)
            + beta * p.asymptote / (4.0 * a2)
            - term**2
        )
    valid &= nl > 0
    return np.where(valid, res, np.nan), term, valid


def _residual(p, s, E, n, kappa, limit):
    if s.limit is not limit:
        raise DomainError(f"context limit is {s.limit.value}, expected {limit.value}")
    nu = model.centrifugal_factor(limit, kappa)
    res, _, valid = _pieces(p, s, float(E), n, nu)
    return EnergyEquationResidual(E=float(E), residual=float(res), params_valid=bool(valid))


def pspin_residual(p, s, E, n, kappa):
    """Pseudospin pole condition

    gamma/4a^2 - beta D (1-sigma0)^2/4a^2 + kappa(kappa-1) c0
    - [((n+lambda)^2 + beta D sigma0/a^2) / (2(n+lambda))]^2
    """
    return _residual(p, s, E, n, kappa, Limit.PSEUDOSPIN)


def spin_residual(p, s, E, n, kappa):
    """Spin pole condition

    kappa(kappa+1) c0 + gamma/4a^2 + beta D (1-sigma0)^2/4a^2
    - [((n+lambda)^2 - beta D sigma0/a^2) / (2(n+lambda))]^2
    """
    return _residual(p, s, E, n, kappa, Limit.SPIN)


def default_window(s):
    span = abs(s.C) + 10.0
    return (-s.M - span, s.M + span)


def solve_bound_energies(p, s, n, kappa, window=None, step=SCAN_STEP):
    """All roots of the pole condition inside ``window``, ascending.

    The window is scanned on a uniform grid; grid cells whose endpoints are
    both valid and of opposite sign are refined with Brent's method.
    Cells touching an invalid (complex-lambda) region are skipped.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    nu = model.centrifugal_factor(s.limit, kappa)
    lo, hi = default_window(s) if window is None else map(float, window)
    if not lo < hi:
        raise DomainError(f"empty energy window ({lo}, {hi})")
    count = int(math.ceil((hi - lo) / step))
    grid = np.linspace(lo, hi, count + 1)
    res, _, valid = _pieces(p, s, grid, n, nu)
    if not valid.any():
        raise EmptyWindowError(f"no valid parameters in window ({lo}, {hi})")

    def f(E):
        return float(_pieces(p, s, E, n, nu)[0])

    both = valid[:-1] & valid[1:]
    flips = np.nonzero(both & (np.sign(res[:-1]) * np.sign(res[1:]) <= 0))[0]
    roots = []
    for i in flips:
        a, b = grid[i], grid[i + 1]
        if res[i] == 0.0:
            E = a
        elif res[i + 1] == 0.0:
            E = b
        else:
            E = brentq(f, a, b, xtol=ROOT_XTOL, rtol=4 * np.finfo(float).eps)
        if roots and abs(E - roots[-1][0]) < DEDUP_TOL:
            continue
        roots.append((E, (float(a), float(b))))

    out = []
    for E, bracket in roots:
        _, term, _ = _pieces(p, s, E, n, nu)
        out.append(
            BoundStateSolution(
                E=float(E),
                n=n,
                kappa=kappa,
                limit=s.limit,
                bracket=bracket,
                decaying=bool(term < 0),
            )
        )
    return out


def nonrel_energy(p, mu, n, l):
    """Explicit non-relativistic level

    E = 2 a^2 l(l+1) c0 / mu + D (1-sigma0)^2
        - a^2/(8 mu) [((L+2n)^2 - 8 mu D sigma0/a^2) / (L+2n)]^2,
    L = 1 + sqrt(1 + 4 l(l+1) + 8 mu D sigma0^2 / a^2),  hbar = 1.
    """
    if n < 0 or l < 0:
        raise DomainError("n and l must be non-negative")
    a2 = p.alpha**2
    big_l = 1.0 + math.sqrt(1.0 + 4.0 * l * (l + 1) + 8.0 * mu * p.D * p.sigma0**2 / a2)
    x = big_l + 2 * n
    bracket = (x * x - 8.0 * mu * p.D * p.sigma0 / a2) / x
    return (
        2.0 * a2 * l * (l + 1) * p.c0 / mu
        + p.asymptote
        - a2 / (8.0 * mu) * bracket**2
    )


def nonrel_decaying(p, mu, n, l):
    """True when the explicit level sits on the decaying branch."""
    a2 = p.alpha**2
    big_l = 1.0 + math.sqrt(1.0 + 4.0 * l * (l + 1) + 8.0 * mu * p.D * p.sigma0**2 / a2)
    x = big_l + 2 * n
    return x * x - 8.0 * mu * p.D * p.sigma0 / a2 < 0
