import cmath
import logging
from typing import Iterable, Optional

import numpy as np
from scipy import special
from scipy.integrate import solve_ivp

from .types import WHITTAKER_BRANCH, BranchConvention
from .utils.config import pick
from .utils.exceptions import (
    ConnectionDegenerate, IllDefinedC, IllDefinedOrder,
    IndeterminateRatio, PoleAtNonpositiveInteger, StiffnessFailure,)


logger = logging.getLogger(__name__)

MAX_SERIES_TERMS = 20000


# ---------- GAMMA ----------


def nonpositive_integer_index(z: complex, tol: float = None) -> Optional[int]:
    """Returns n when z is within tol of -n (n = 0, 1, 2, ...), else None."""
    tol = pick(tol, 'POLE_TOL')
    z = complex(z)
    n = int(round(-z.real))
    if n >= 0 and abs(z + n) < tol:
        return n
    return None


def gamma(z: complex, tol: float = None) -> complex:
    n = nonpositive_integer_index(z, tol)
    if n is not None:
        raise PoleAtNonpositiveInteger(n)
    return complex(special.gamma(complex(z)))


def loggamma(z: complex, tol: float = None) -> complex:
    n = nonpositive_integer_index(z, tol)
    if n is not None:
        raise PoleAtNonpositiveInteger(n)
    return complex(special.loggamma(complex(z)))


def gamma_ratio(num: Iterable[complex], den: Iterable[complex], tol: float = None) -> complex:
    num, den = list(num), list(den)
    num_poles = [z for z in num if nonpositive_integer_index(z, tol) is not None]
    den_poles = [z for z in den if nonpositive_integer_index(z, tol) is not None]

    if num_poles and den_poles:
        raise IndeterminateRatio(
            f"Gamma poles at {num_poles} over {den_poles}")
    if num_poles:
        raise PoleAtNonpositiveInteger(nonpositive_integer_index(num_poles[0], tol))
    if den_poles:
        return 0j

    log_value = sum(loggamma(z) for z in num) - sum(loggamma(z) for z in den)
    return cmath.exp(log_value)


# ---------- GAUSS HYPERGEOMETRIC ----------


def _check_c(c: complex, tol: float) -> None:
    if nonpositive_integer_index(c, tol) is not None:
        raise IllDefinedC(f"c = {c} is a nonpositive integer")


def _hypergeometric_series(a: complex, b: complex, c: complex, z: complex) -> complex:
    total = term = 1 + 0j
    for n in range(MAX_SERIES_TERMS):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) <= 1e-17 * abs(total):
            break
    return total


def hyp2f1_connection(a: complex, b: complex, c: complex, z: complex,
                      tol: float = None) -> complex:
    """Gauss function through the z -> 1-z transformation.

    Both terms of the transformation are kept; a Gamma pole in a
    denominator simply switches its term off.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    tol = pick(tol, 'CONNECTION_TOL')
    s = c - a - b
    if abs(s - round(s.real)) < tol:
        raise ConnectionDegenerate(f"c - a - b = {s} is an integer")

    w = 1 - z
    first = gamma_ratio([c, s], [c - a, c - b])
    second = gamma_ratio([c, -s], [a, b])
    value = 0j
    if first != 0:
        value += first * _hypergeometric_series(a, b, 1 - s, w)
    if second != 0:
        value += second * cmath.exp(s * cmath.log(w)) * _hypergeometric_series(c - a, c - b, 1 + s, w)
    return value


def _hypergeometric_ode(a: complex, b: complex, c: complex, z: complex) -> complex:
    """Continues the series from z/(2|z|) to z along the ray through the Gauss equation."""
    z0 = 0.5 * z / abs(z)
    dz = z - z0
    start = [_hypergeometric_series(a, b, c, z0),
             a * b / c * _hypergeometric_series(a + 1, b + 1, c + 1, z0)]

    def rhs(t, y):
        point = z0 + t * dz
        second = (a * b * y[0] - (c - (a + b + 1) * point) * y[1]) / (point * (1 - point))
        return [y[1] * dz, second * dz]

    solution = solve_ivp(rhs, (0.0, 1.0), np.array(start, dtype=complex), method='DOP853',
                         rtol=pick(None, 'ODE_RTOL'), atol=1e-14)
    if not solution.success:
        raise StiffnessFailure(solution.message)
    return complex(solution.y[0, -1])


def hyp2f1(a: complex, b: complex, c: complex, z: complex,
           tol: float = None, eps: float = None) -> complex:
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    _check_c(c, pick(tol, 'POLE_TOL'))
    radius = pick(None, 'HYP2F1_SERIES_RADIUS')

    if abs(z) <= radius:
        return _hypergeometric_series(a, b, c, z)
    if z != 1 and abs(z / (z - 1)) <= radius:
        return cmath.exp(-a * cmath.log(1 - z)) * _hypergeometric_series(a, c - b, c, z / (z - 1))
    if abs(1 - z) < 1:
        try:
            return hyp2f1_connection(a, b, c, z)
        except ConnectionDegenerate:
            eps = pick(eps, 'RICHARDSON_EPS')
            logger.debug("Degenerate connection at (a, b, c) = (%s, %s, %s), extrapolating b + %g",
                         a, b, c, eps)
            # the error of b + eps is linear in eps
            return 2 * hyp2f1_connection(a, b + eps / 2, c, z) - hyp2f1_connection(a, b + eps, c, z)
    if abs(z) <= 1:
        return _hypergeometric_ode(a, b, c, z)
    raise ValueError(f"hyp2f1 is evaluated on |z| <= 1 only (z = {z})")


# ---------- WHITTAKER ----------


def _kummer_series(a: complex, b: complex, zeta: complex) -> complex:
    if zeta.real < 0:
        # Kummer transformation keeps the terms of one sign
        return cmath.exp(zeta) * _kummer_series(b - a, b, -zeta)
    total = term = 1 + 0j
    for n in range(MAX_SERIES_TERMS):
        term *= (a + n) / ((b + n) * (n + 1)) * zeta
        total += term
        if abs(term) <= 1e-17 * abs(total) and n > abs(zeta):
            break
    return total


def whittaker_m(kappa: complex, mu: complex, zeta: complex,
                branch: BranchConvention = WHITTAKER_BRANCH, tol: float = None) -> complex:
    kappa, mu, zeta = complex(kappa), complex(mu), complex(zeta)
    two_mu = 2 * mu
    if nonpositive_integer_index(two_mu, pick(tol, 'POLE_TOL')) not in (None, 0):
        raise IllDefinedOrder(two_mu)
    if zeta == 0:
        return 0j if (mu + 0.5).real > 0 else complex(np.inf)

    power = cmath.exp((mu + 0.5) * branch.log(zeta))
    return cmath.exp(-zeta / 2) * power * _kummer_series(mu - kappa + 0.5, 1 + two_mu, zeta)
