"""Independent checks by direct integration of the radial equations.

The second-order equations are written as u'' = W(r) u with the
exponential centrifugal surrogate substituted (or, for comparison, the exact
1/r^2), and integrated with Numerov's three-term recurrence.  Nothing here
uses Gamma or hypergeometric functions, so agreement with ``bound_states``
and ``scattering`` tests their algebra.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.optimize import brentq

from . import model
from .errors import DomainError, FitQualityError, NoTransitionError
from .model import Limit

OVERFLOW_LIMIT = 1e300
EIGEN_XTOL = 1e-10
FIT_WINDOW = (50.0, 100.0)  # in units of k r
FIT_MAX_RESIDUAL = 0.01
DECAY_LENGTHS = 40.0  # integral of sqrt(W) past the matching point
START_LIMIT = 0.1  # largest h^2 |W| / 12 where the outward recurrence starts


@dataclass(frozen=True)
class RadialGrid:
    r_min: float
    r_max: float
    step: float

    def __post_init__(self):
        if not (self.r_min > 0 and self.step > 0 and self.r_min < self.r_max):
            raise DomainError(f"bad grid {self!r}")

    @property
    def count(self):
        return int(math.floor((self.r_max - self.r_min) / self.step)) + 1

    def points(self):
        return self.r_min + self.step * np.arange(self.count)


@dataclass(frozen=True)
class EffectiveOde:
    """u'' = W(r) u.

    ``W`` takes an array of radii.  ``small_r`` is lim r^2 W(r) and
    ``large_r`` is lim W(r); both fix the boundary behaviour.
    """

    W: object
    small_r: float
    large_r: float
    mode: str = "pekeris"

    def __post_init__(self):
        if self.mode not in ("pekeris", "exact"):
            raise DomainError(f"unknown centrifugal mode {self.mode!r}")

    def exponent(self):
        """Regular small-r power, u ~ r^lam."""
        rad = 0.25 + self.small_r
        if rad < 0:
            raise DomainError(f"r^2 W -> {self.small_r} < -1/4: no regular solution")
        return 0.5 + math.sqrt(rad)


def effective_ode(p, s, E, kappa=None, l=None, mode="pekeris"):
    """Build W(r) for a Dirac limit (give ``kappa``) or the NONREL limit (give ``l``).

    pseudospin  W = k(k-1) P(r) + gamma - beta V(r)
    spin        W = k(k+1) P(r) + gamma + beta V(r)
    nonrel      W = l(l+1) P(r) + 2 mu (V(r) - E)

    with P the surrogate or 1/r^2.  The coupling constants come from
    ``model.coupling`` and the potential from ``model.potential_value``.
    """
    if s.limit is Limit.NONREL:
        if l is None or l < 0:
            raise DomainError("the non-relativistic equation needs l >= 0")
        nu = l * (l + 1)
    else:
        if kappa is None:
            raise DomainError("the Dirac limits need kappa")
        nu = model.centrifugal_factor(s.limit, kappa)
    gamma, beta = model.coupling(s, E)
    sign = model.potential_sign(s)
    if mode == "pekeris":
        def cent(r):
            return model.centrifugal_approx(p, r)
        cent_inf = 4.0 * p.alpha**2 * p.c0
    else:
        def cent(r):
            return 1.0 / np.asarray(r, dtype=float) ** 2
        cent_inf = 0.0

    def W(r):
        r = np.asarray(r, dtype=float)
        return nu * cent(r) + gamma + sign * beta * model.potential_value(p, r)

    small_r = nu + sign * beta * p.D * p.sigma0**2 / p.alpha**2
    large_r = nu * cent_inf + gamma + sign * beta * p.asymptote
    return EffectiveOde(W=W, small_r=small_r, large_r=large_r, mode=mode)


def _numerov(w, h, u0, u1, reverse=False):
    # w: list of W values; returns list of u, integrating forwards or backwards
    n = len(w)
    h12 = h * h / 12.0
    f = [1.0 - h12 * x for x in w]
    u = [0.0] * n
    idx = range(n) if not reverse else range(n - 1, -1, -1)
    idx = list(idx)
    u[idx[0]], u[idx[1]] = u0, u1
    prev, cur = u0, u1
    fp, fc = f[idx[0]], f[idx[1]]
    for j in idx[2:]:
        fn = f[j]
        nxt = ((12.0 - 10.0 * fc) * cur - fp * prev) / fn
        if abs(nxt) > OVERFLOW_LIMIT:
            raise OverflowError(f"|u| exceeded {OVERFLOW_LIMIT:g} at index {j}")
        u[j] = nxt
        prev, cur, fp, fc = cur, nxt, fc, fn
    return u


def numerov_integrate(ode, grid, u0, u1):
    """Outward Numerov solution of u'' = W u from (u0, u1) at the first two points.

    Fourth order in the step.  Raises OverflowError past 1e300.
    """
    r = grid.points()
    w = ode.W(r).tolist()
    return np.asarray(_numerov(w, grid.step, float(u0), float(u1)))


def regular_solution(ode, r, w, h):
    """Outward solution behaving like r^lam at the origin.

    Close to r = 0 the centrifugal barrier makes h^2 |W| / 12 large and the
    recurrence unstable, so the values there are set to zero and the
    integration is seeded with r^lam at the first two points past that
    region.  Any irregular admixture from the seed dies off like
    r^(1 - 2 lam).
    """
    lam = ode.exponent()
    wl = list(w)
    rough = np.nonzero(np.abs(w) * h * h / 12.0 > START_LIMIT)[0]
    i0 = int(rough[-1]) + 1 if rough.size else 0
    if i0 > len(wl) - 3:
        raise DomainError("grid too coarse for the centrifugal barrier")
    u = _numerov(wl[i0:], h, r[i0] ** lam, r[i0 + 1] ** lam)
    return [0.0] * i0 + u


def _eigen_grid(ode, p, step):
    # the bound-state tail decays like exp(-sqrt(W_inf) r)
    if ode.large_r <= 0:
        raise NoTransitionError("continuum energy: W(r) does not stay positive at large r")
    q = math.sqrt(ode.large_r)
    r_max = 3.0 / p.alpha + DECAY_LENGTHS / q
    return RadialGrid(r_min=1e-6 / p.alpha, r_max=r_max, step=step)


def _shoot(ode, grid):
    """(matching value, outward u, inward u, matching index)."""
    r = grid.points()
    w = ode.W(r)
    neg = np.nonzero(w < 0)[0]
    if neg.size == 0:
        return None
    m = int(neg[-1])  # outer classical turning point
    m = min(max(m, 2), r.size - 3)
    wl = w.tolist()
    out = regular_solution(ode, r[: m + 2], w[: m + 2], grid.step)
    tail = wl[m - 1:]
    q = math.sqrt(ode.large_r)
    inn = _numerov(tail, grid.step, 1e-250, 1e-250 * math.exp(q * grid.step), reverse=True)
    a0, a1 = out[m], out[m + 1]
    b0, b1 = inn[1], inn[2]
    na = math.hypot(a0, a1)
    nb = math.hypot(b0, b1)
    value = (a1 * b0 - a0 * b1) / (na * nb)
    return value, out, inn, m


def _nodes(out, inn, m):
    # scale the inward piece onto the outward one at the matching point
    scale = out[m] / inn[1] if inn[1] != 0 else 1.0
    u = np.concatenate([np.asarray(out[: m + 1]), scale * np.asarray(inn[2:])])
    peak = np.max(np.abs(u))
    sig = u[np.abs(u) > 1e-8 * peak]
    return int(np.count_nonzero(np.diff(np.sign(sig)) != 0))


def numerov_eigensolve(p, s, n, kappa=None, bracket=None, l=None, step=None, mode="pekeris"):
    """Energy in ``bracket`` where the inward and outward solutions join smoothly.

    The join is measured by a normalised discrete Wronskian at the outer
    turning point, which has no poles in E.  The root is refined to 1e-10
    and the eigenfunction must have ``n`` nodes.  Raises NoTransitionError
    when the Wronskian keeps its sign across the bracket or the node count
    disagrees.
    """
    if bracket is None:
        raise DomainError("an energy bracket is required")
    lo, hi = map(float, bracket)
    if step is None:
        step = 2e-3 / p.alpha
    ode_at = lambda E: effective_ode(p, s, E, kappa=kappa, l=l, mode=mode)
    # one grid for the whole bracket keeps the matching function smooth in E
    grid = _eigen_grid(_largest_decay(ode_at, lo, hi), p, step)

    def f(E):
        res = _shoot(ode_at(E), grid)
        if res is None:
            raise NoTransitionError(f"no classically allowed region at E={E}")
        return res[0]

    flo, fhi = f(lo), f(hi)
    if flo * fhi > 0:
        raise NoTransitionError(f"matching function keeps its sign on [{lo}, {hi}]")
    E = brentq(f, lo, hi, xtol=EIGEN_XTOL, rtol=4 * np.finfo(float).eps)
    _, out, inn, m = _shoot(ode_at(E), grid)
    nodes = _nodes(out, inn, m)
    if nodes != n:
        raise NoTransitionError(f"eigenfunction at E={E} has {nodes} nodes, expected {n}")
    return E


def _largest_decay(ode_at, lo, hi):
    # the grid must be long enough for the slowest-decaying end of the bracket
    a, b = ode_at(lo), ode_at(hi)
    return a if 0 < a.large_r <= b.large_r or b.large_r <= 0 else b


def channel_grid(p, k, ode, window=FIT_WINDOW, points_per_wavelength=200):
    """Grid reaching the tail window, resolving both k and the potential scale."""
    step = min(2.0 * math.pi / (k * points_per_wavelength), 2e-3 / p.alpha)
    r_max = window[1] / k + 10.0 * step
    return RadialGrid(r_min=1e-6 / p.alpha, r_max=r_max, step=step)


def fit_tail_phase(r, u, k, window=FIT_WINDOW):
    """Least-squares u ~ A sin(k r + phi) on the k r window; returns (phi mod pi, A).

    Raises FitQualityError when the rms residual exceeds 1% of A.
    """
    r = np.asarray(r, dtype=float)
    u = np.asarray(u, dtype=float)
    sel = (k * r >= window[0]) & (k * r <= window[1])
    if np.count_nonzero(sel) < 10:
        raise DomainError("fit window holds fewer than 10 grid points")
    rs, us = r[sel], u[sel]
    basis = np.column_stack([np.sin(k * rs), np.cos(k * rs)])
    coef, *_ = np.linalg.lstsq(basis, us, rcond=None)
    amp = math.hypot(*coef)
    resid = us - basis @ coef
    rms = math.sqrt(np.mean(resid**2))
    if not amp > 0 or rms > FIT_MAX_RESIDUAL * amp:
        raise FitQualityError(f"tail fit residual {rms:.3g} vs amplitude {amp:.3g}")
    phi = math.atan2(coef[1], coef[0]) % math.pi
    return phi, amp


def numerov_phase_extract(p, s, E, kappa, grid=None, mode="pekeris"):
    """Asymptotic phase phi (mod pi) of the regular solution, u ~ A sin(k r + phi).

    For the closed-form solution phi = delta - l pi / 2 with l the orbital
    number paired with kappa.
    """
    ode = effective_ode(p, s, E, kappa=kappa, mode=mode)
    if ode.large_r >= 0:
        raise DomainError(f"no oscillating tail at E={E} (W -> {ode.large_r})")
    k = math.sqrt(-ode.large_r)
    if grid is None:
        grid = channel_grid(p, k, ode)
    r = grid.points()
    u = regular_solution(ode, r, ode.W(r), grid.step)
    return fit_tail_phase(r, u, k)[0]


@dataclass(frozen=True)
class PekerisRow:
    r: float
    c0: float
    exact: float
    approx: float
    rel_error: float


def pekeris_quality_report(p, r_values):
    """Exact 1/r^2 against the surrogate, for c0 = 0 and for ``p.c0``."""
    r = np.asarray(r_values, dtype=float)
    exact = 1.0 / r**2
    rows = []
    for c0 in (0.0, p.c0):
        q = model.PotentialParams(D=p.D, sigma0=p.sigma0, alpha=p.alpha, c0=c0)
        approx = np.atleast_1d(model.centrifugal_approx(q, r))
        for ri, ex, ap in zip(r, exact, approx):
            rows.append(PekerisRow(float(ri), c0, float(ex), float(ap), float(abs(ap - ex) / ex)))
    return rows
