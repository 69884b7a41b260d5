"""Complex log-gamma and Gauss hypergeometric 2F1 in double precision.

``log_gamma`` follows the continuous branch obtained from the recurrence
log G(z+1) = log G(z) + log z, so its imaginary part is unbounded
(scipy's ``loggamma`` underneath, plus pole and domain checks).  This is
what phase shifts need: taking ``arg`` of a computed Gamma value would fold
everything back into (-pi, pi].
"""

import cmath
import math

from scipy.special import loggamma as _loggamma

from .errors import ConvergenceError, DegenerateParameterError, DomainError, PoleError

__all__ = [
    "log_gamma",
    "arg_gamma",
    "abs_gamma",
    "hyp2f1",
    "hyp2f1_series",
    "hyp2f1_connection",
    "Z_SWITCH",
]

POLE_TOL = 1e-12
DEGENERATE_TOL = 1e-10
SERIES_RTOL = 1e-15
SERIES_MAX_TERMS = 100_000
Z_SWITCH = 0.5

_EPS = 2.220446049250313e-16
_FALLBACK_RTOL = 1e-13
_DIRECT_MAX_Z = 0.95


def _is_pole(z):
    if z.real > 0.5:
        return False
    return abs(z - round(z.real)) < POLE_TOL


def log_gamma(z):
    """Continuous-branch log Gamma(z) for complex ``z``.

    Raises PoleError when ``z`` is within 1e-12 of a non-positive integer.
    Conjugate symmetry log G(conj z) = conj log G(z) holds exactly off the
    negative real axis; on that cut the value from above is returned.
    """
    z = complex(z)
    # drop a signed negative zero so the real axis uses the upper branch
    z = complex(z.real, z.imag + 0.0)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"log_gamma needs a finite argument, got {z!r}")
    if _is_pole(z):
        raise PoleError(f"Gamma has a pole at {z!r}")
    # evaluated in the upper half plane so conjugate symmetry is exact
    if z.imag < 0.0:
        return complex(_loggamma(z.conjugate())).conjugate()
    return complex(_loggamma(z))


def arg_gamma(z):
    """Imaginary part of ``log_gamma(z)``; not reduced modulo 2 pi."""
    return log_gamma(z).imag


def abs_gamma(z):
    """|Gamma(z)| computed as exp(Re log_gamma(z))."""
    return math.exp(log_gamma(z).real)


def _rgamma_log(z):
    """log(1/Gamma(z)), or None where 1/Gamma vanishes."""
    z = complex(z)
    if _is_pole(z):
        return None
    return -log_gamma(z)


def _series(a, b, c, z, rtol=SERIES_RTOL, max_terms=SERIES_MAX_TERMS):
    # returns (sum, sum of |terms|); the second bounds the rounding error
    if _is_pole(c):
        raise PoleError(f"2F1 undefined for c = {c!r}")
    total = 1.0 + 0j
    term = 1.0 + 0j
    mass = 1.0
    small = 0
    for n in range(max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        mass += abs(term)
        if abs(term) <= rtol * abs(total):
            small += 1
            if small == 3:
                return total, mass
        else:
            small = 0
    raise ConvergenceError(
        f"2F1 series not converged after {max_terms} terms (z={z})"
    )


def hyp2f1_series(a, b, c, z, rtol=SERIES_RTOL, max_terms=SERIES_MAX_TERMS):
    """Direct Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n.

    Stops after three consecutive terms below ``rtol`` relative to the
    partial sum.  Works for any |z| < 1; accuracy degrades close to 1.
    """
    total, _ = _series(complex(a), complex(b), complex(c), z, rtol, max_terms)
    return total


def _check_degenerate(a, b, c):
    d = c - a - b
    if abs(d - round(d.real)) < DEGENERATE_TOL:
        raise DegenerateParameterError(
            f"c - a - b = {d!r} is an integer; connection formula does not apply"
        )
    return d


def _connection(a, b, c, w):
    # returns (value, absolute rounding-error estimate)
    d = _check_degenerate(a, b, c)
    lg_c = log_gamma(c)
    result = 0j
    err = 0.0
    den1 = (_rgamma_log(c - a), _rgamma_log(c - b))
    if None not in den1:
        logs = (lg_c, log_gamma(d), den1[0], den1[1])
        pref = cmath.exp(sum(logs))
        val, mass = _series(a, b, 1.0 - d, w)
        result += pref * val
        err += abs(pref) * (_EPS * mass + abs(val) * _lg_err(logs))
    den2 = (_rgamma_log(a), _rgamma_log(b))
    if None not in den2:
        if w == 0.0:
            if d.real <= 0.0:
                raise DomainError("2F1 diverges at z = 1 when Re(c-a-b) <= 0")
        else:
            logs = (d * math.log(w), lg_c, log_gamma(-d), den2[0], den2[1])
            pref = cmath.exp(sum(logs))
            val, mass = _series(c - a, c - b, d + 1.0, w)
            result += pref * val
            err += abs(pref) * (_EPS * mass + abs(val) * _lg_err(logs))
    return result, err


def _lg_err(logs):
    return _EPS * (4.0 + sum(abs(v) for v in logs))


def hyp2f1_connection(a, b, c, z, one_minus_z=None):
    """2F1(a, b; c; z) through the 1 - z connection formula.

    Two series at argument 1 - z combined with Gamma-ratio prefactors.
    ``one_minus_z`` may be passed when it is known more accurately than
    ``1 - z`` (e.g. exp(-2 alpha r) at large r).  ``z = 1`` is accepted
    when Re(c - a - b) > 0 (Gauss summation).
    """
    a, b, c = complex(a), complex(b), complex(c)
    w = 1.0 - z if one_minus_z is None else float(one_minus_z)
    if not 0.0 <= w < 1.0:
        raise DomainError(f"connection formula needs 0 < z <= 1, got z={z}")
    if _is_pole(c):
        raise PoleError(f"2F1 undefined for c = {c!r}")
    return _connection(a, b, c, w)[0]


def hyp2f1(a, b, c, z, one_minus_z=None):
    """Gauss hypergeometric 2F1(a, b; c; z) for complex parameters, 0 <= z < 1.

    Direct series for z <= 0.5, connection formula above; between 0.5 and
    0.95 the direct series is used instead when its rounding-error estimate
    beats the connection formula's.  When c - a - b is an integer the
    connection formula does not apply (the logarithmic case is not
    implemented) and the direct series is summed instead; if that hits the
    term cap, DegenerateParameterError is raised.
    """
    z = float(z)
    w = 1.0 - z if one_minus_z is None else float(one_minus_z)
    # z itself may round to 1 when the caller supplies a tiny positive 1 - z
    if not (0.0 <= z <= 1.0) or not 0.0 < w <= 1.0:
        raise DomainError(f"hyp2f1 needs 0 <= z < 1, got z={z}, 1-z={w}")
    a, b, c = complex(a), complex(b), complex(c)
    if z <= Z_SWITCH:
        return _series(a, b, c, z)[0]
    try:
        value, err = _connection(a, b, c, w)
    except DegenerateParameterError:
        # integer c - a - b: the direct series still converges for z < 1
        try:
            return _series(a, b, c, z)[0]
        except ConvergenceError as exc:
            raise DegenerateParameterError(
                f"c - a - b is an integer and z = {z} is too close to 1 for the direct series"
            ) from exc
    if err <= _FALLBACK_RTOL * abs(value) or z > _DIRECT_MAX_Z:
        return value
    # large parameters: the two connection terms can cancel badly just
    # above the switch point, where the direct series is still usable
    direct, mass = _series(a, b, c, z)
    if _EPS * mass < err:
        return direct
    return value
