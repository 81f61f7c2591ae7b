import cmath
import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .frobenius import (
    SeriesPotential, exponential_tail, sinh_sq_laurent,
    cosh_sq_laurent, solve_series, tilde_transform,)
from .types import JostPair
from .utils.config import pick
from .utils.exceptions import (
    Breakdown, OriginSingularityTooStrong, StiffnessFailure,
    TailNotReached, WronskianDrift,)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NumericalPotential:
    """Potential on the half line, centrifugal part included in `sampler`.

    `laurent` holds v_n of V - (nu^2 - 1/4)/x^2 = sum v_n x^n near the
    origin, `tail` holds a_n of V = sum a_n exp(-n s x) for large x; both
    are optional. `radius` truncates V to zero beyond it.
    """
    sampler: Callable[[float], complex]
    nu: complex
    decay_rate: Optional[float] = None
    laurent: Optional[Dict[int, complex]] = field(default=None, compare=False)
    tail: Optional[Dict[int, complex]] = field(default=None, compare=False)
    radius: Optional[float] = None
    name: str = ''

    def __call__(self, x: float) -> complex:
        if self.radius is not None and x > self.radius:
            return 0j
        return self.sampler(x)

    def truncated(self, radius: float) -> 'NumericalPotential':
        if radius <= 0:
            raise ValueError("Truncation radius must be positive.")
        return replace(self, radius=radius, name=f'{self.name}|R={radius}')

    def series(self, k: complex) -> Optional[SeriesPotential]:
        if self.laurent is None:
            return None
        return SeriesPotential(nu=self.nu, v=self.laurent, k=k)

    @classmethod
    def free(cls) -> 'NumericalPotential':
        return cls(sampler=lambda x: 0j, nu=0.5, decay_rate=2.0, laurent={}, tail={}, name='free')

    @classmethod
    def sinh_sq(cls, nu: complex, order: int = 24) -> 'NumericalPotential':
        strength = complex(nu)**2 - 0.25
        return cls(
            sampler=lambda x: strength / np.sinh(x)**2,
            nu=complex(nu), decay_rate=2.0,
            laurent=sinh_sq_laurent(complex(nu), order),
            tail=exponential_tail(strength, 2.0, sign=1, order=order),
            name=f'sinh_sq(nu={nu})')

    @classmethod
    def cosh_sq(cls, kappa: complex, order: int = 24) -> 'NumericalPotential':
        strength = -complex(kappa) * (complex(kappa) - 1)
        return cls(
            sampler=lambda x: strength / np.cosh(x)**2,
            nu=0.5, decay_rate=2.0,
            laurent=cosh_sq_laurent(complex(kappa), order),
            tail=exponential_tail(strength, 2.0, sign=-1, order=order),
            name=f'cosh_sq(kappa={kappa})')


@dataclass(frozen=True)
class CutoffSpec:
    ir_radius: Optional[float] = None
    uv_radius: Optional[float] = None

    def __post_init__(self) -> None:
        for radius in (self.ir_radius, self.uv_radius):
            if radius is not None and radius <= 0:
                raise ValueError("Cutoff radii must be positive.")


def wronskian(f: complex, fp: complex, g: complex, gp: complex) -> complex:
    return f * gp - fp * g


def _solve(fun, x_start: float, y0, x_eval: Sequence[float], max_step: float = np.inf):
    rtol, atol = pick(None, 'ODE_RTOL'), pick(None, 'ODE_ATOL')
    x_end = x_eval[-1]
    solution = solve_ivp(fun, (x_start, x_end), np.asarray(y0, dtype=complex), method='DOP853',
                         t_eval=x_eval, rtol=rtol, atol=atol, max_step=max_step)
    if not solution.success:
        raise StiffnessFailure(solution.message)
    return solution.y


# ---------- REGULAR SOLUTION ----------


def _origin_start(pot: NumericalPotential, k: complex, nu: complex) -> Tuple[float, complex, complex]:
    series = pot.series(k)
    if series is not None:
        x0 = pick(None, 'SERIES_START')
        branch = '+' if nu == pot.nu else '-'
        solution = solve_series(series, branch=branch, order=pick(None, 'SERIES_ORDER'), strict=False)
        if solution.breakdown is not None:
            raise Breakdown(solution.breakdown, 'in the origin series')
        value, derivative = solution.evaluate(x0)
        return x0, value, derivative

    x0 = 1e-6 * (1 + abs(nu))
    strength = nu**2 - 0.25
    v_minus_one = (x0**2 * pot(x0) - strength) / x0
    if abs(v_minus_one) * x0 > 1e-3 * (1 + abs(strength)):
        raise OriginSingularityTooStrong(f"x^2 V(x) does not approach nu^2 - 1/4 = {strength}")
    lam = 0.5 + nu
    psi1 = v_minus_one / (1 + 2 * nu)
    value = x0**lam * (1 + psi1 * x0)
    derivative = x0**(lam - 1) * (lam + (lam + 1) * psi1 * x0)
    return x0, value, derivative


def integrate_regular(pot: NumericalPotential, k: complex, x_eval: Sequence[float],
                      nu: complex = None) -> Tuple[np.ndarray, np.ndarray]:
    """phi(nu) and phi' at x_eval, normalized to x^(1/2+nu) at the origin."""
    nu = pot.nu if nu is None else complex(nu)
    if abs(nu**2 - complex(pot.nu)**2) > 1e-12:
        raise ValueError(f"nu = {nu} does not match the potential (nu^2 = {complex(pot.nu)**2})")
    x_eval = sorted(x_eval)
    x0, value, derivative = _origin_start(pot, k, nu)
    if x_eval[0] < x0:
        raise ValueError(f"Regular solution is evaluated for x >= {x0}")

    scale = abs(value) or 1.0
    k2 = k * k

    def rhs(x, y):
        return [y[1], (pot(x) - k2) * y[0]]

    y = _solve(rhs, x0, [value / scale, derivative / scale], x_eval)
    return y[0] * scale, y[1] * scale


# ---------- JOST SOLUTIONS ----------


def _tail_start(pot: NumericalPotential, x_low: float) -> float:
    eps = pick(None, 'TAIL_EPS')
    if pot.decay_rate is None:
        return x_low
    x_high = pick(None, 'TAIL_SPAN') / pot.decay_rate
    if abs(pot(x_high)) > eps:
        raise TailNotReached(f"|V| > {eps} at x = {x_high}")
    if abs(pot(x_low)) <= eps:
        return x_low
    return brentq(lambda x: np.log(abs(pot(x)) + 1e-300) - np.log(eps), x_low, x_high)


def integrate_jost(pot: NumericalPotential, k: complex, x_eval: Sequence[float], sign: int = 1,
                   k_im_max: float = None) -> Tuple[np.ndarray, np.ndarray]:
    """f = exp(sign*ikx) g and f' at x_eval, integrating g'' = V g - 2 sign ik g' inward."""
    x_eval = sorted(x_eval, reverse=True)
    ik = sign * 1j * k

    if pot.radius is not None:
        x_seed = max(pot.radius, x_eval[0])
        g, gp = 1 + 0j, 0j
    elif pot.tail is not None:
        # x = infinity series through the origin engine in y = exp(-s x)
        s = pot.decay_rate
        x_seed = max(x_eval[0], np.log(1e3) / s)
        branch = '-' if sign < 0 else '+'
        solution = solve_series(tilde_transform(s, pot.tail, k, branch), branch='+',
                                order=pick(None, 'SERIES_ORDER') + 8, strict=True)
        y = np.exp(-s * x_seed)
        g = sum(complex(c) * y**m for m, c in enumerate(solution.coefficients))
        gp = sum(-s * m * complex(c) * y**m for m, c in enumerate(solution.coefficients))
    else:
        k_im_max = pick(k_im_max, 'K_IM_MAX')
        if abs(k.imag) > k_im_max:
            raise TailNotReached(f"|Im k| = {abs(k.imag)} exceeds {k_im_max}")
        x_seed = max(_tail_start(pot, x_eval[0]), x_eval[0])
        s = pot.decay_rate
        v = pot(x_seed)
        denominator = s * (s - 2 * ik) if s else 0
        delta = v / denominator if denominator and abs(s - 2 * ik) > 1e-8 else 0j
        g, gp = 1 + delta, -s * delta if s else 0j
    logger.debug("Jost seed for sign %+d at x = %.3f", sign, x_seed)

    def rhs(x, y):
        return [y[1], pot(x) * y[0] - 2 * ik * y[1]]

    if x_seed == x_eval[0] and len(x_eval) == 1:
        values = np.array([[g], [gp]])
    else:
        grid = x_eval if x_eval[0] < x_seed else x_eval[1:]
        values = _solve(rhs, x_seed, [g, gp], grid, max_step=0.5)
        if x_eval[0] >= x_seed:
            values = np.hstack([np.array([[g], [gp]]), values])

    x = np.array(x_eval)
    phase = np.exp(ik * x)
    f = phase * values[0]
    fp = phase * (values[1] + ik * values[0])
    order = np.argsort(x)
    return f[order], fp[order]


def jost_functions(pot: NumericalPotential, k: complex, nu: complex = None,
                   x_match: float = None, k_im_max: float = None) -> JostPair:
    """F+- = W[f+-, phi], checked at x_match and 1.5 x_match."""
    x_match = pick(x_match, 'X_MATCH')
    points = [x_match, 1.5 * x_match]
    phi, phip = integrate_regular(pot, k, points, nu)
    f_plus, f_plus_p = integrate_jost(pot, k, points, sign=1, k_im_max=k_im_max)
    f_minus, f_minus_p = integrate_jost(pot, k, points, sign=-1, k_im_max=k_im_max)

    plus = wronskian(f_plus, f_plus_p, phi, phip)
    minus = wronskian(f_minus, f_minus_p, phi, phip)
    scale = max(abs(plus[0]), abs(minus[0]), 1e-300)
    drift = max(abs(plus[1] - plus[0]), abs(minus[1] - minus[0])) / scale
    logger.debug("Wronskian drift %.2e at k = %s", drift, k)
    if drift > pick(None, 'WRONSKIAN_DRIFT'):
        logger.warning("Jost functions drift by %.2e at k = %s", drift, k)
        raise WronskianDrift(drift)
    return JostPair(complex(plus[0]), complex(minus[0]))


def numeric_s(pot: NumericalPotential, k: complex, nu: complex = None, **kwargs) -> complex:
    return jost_functions(pot, k, nu, **kwargs).s


# ---------- CUTOFFS ----------


def ir_cutoff_s(pot: NumericalPotential, cutoff: CutoffSpec, k: complex, nu: complex = None,
                **kwargs) -> complex:
    return numeric_s(pot.truncated(cutoff.ir_radius), k, nu, **kwargs)


def uv_cutoff_jost(pot: NumericalPotential, cutoff: CutoffSpec, k: complex,
                   k_im_max: float = None) -> complex:
    """F+ for V replaced by the constant V(a) on (0, a), where phi = sin(k0 x)/k0."""
    a = cutoff.uv_radius
    k0 = cmath.sqrt(k * k - pot(a))
    f, fp = integrate_jost(pot, k, [a], sign=1, k_im_max=k_im_max)
    if abs(k0) < 1e-14:
        return complex(f[0] - fp[0] * a)
    return complex(f[0] * cmath.cos(k0 * a) - fp[0] * cmath.sin(k0 * a) / k0)


def uv_cutoff_s(pot: NumericalPotential, cutoff: CutoffSpec, k: complex, **kwargs) -> complex:
    return uv_cutoff_jost(pot, cutoff, -k, **kwargs) / uv_cutoff_jost(pot, cutoff, k, **kwargs)
