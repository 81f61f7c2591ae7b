import logging
from dataclasses import replace
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import special

from .analytic import (
    describe_point, half_plane_state, jost_function,
    lattice_arguments, lattice_hits, physical_wave,)
from .types import Classification, JostPair, MobiusFit, PoleSkipPoint, PotentialModel
from .utils.config import pick
from .utils.exceptions import (
    AmbiguousWinding, DegenerateDoubleZero, FitDegenerate, IndeterminateRatio,
    NoConvergence, PoleAtNonpositiveInteger, PoleHit, SymmetryViolation,
    WrongModelSpecException,)


logger = logging.getLogger(__name__)

Proxy = Callable[[complex, complex], complex]


# ---------- NEWTON ----------


def newton_1d(fn: Callable[[complex], complex], seed: complex, tol: float = None,
              max_iter: int = None, derivative: Callable[[complex], complex] = None) -> complex:
    tol = pick(tol, 'NEWTON_TOL')
    max_iter = pick(max_iter, 'NEWTON_MAX_ITER')
    z = complex(seed)
    for iteration in range(max_iter):
        value = fn(z)
        if derivative is not None:
            slope = derivative(z)
        else:
            h = 1e-7 * (1 + abs(z))
            slope = (fn(z + h) - fn(z - h)) / (2 * h)
        if slope == 0:
            raise NoConvergence(f"Zero derivative at z = {z}")
        step = value / slope
        z -= step
        if abs(step) < tol * (1 + abs(z)):
            return z
    raise NoConvergence(f"Newton did not converge from {seed} in {max_iter} iterations")


def _newton_2d(proxies: Sequence[Proxy], seed: Tuple[complex, complex],
               tol: float, max_iter: int) -> np.ndarray:
    x = np.array(seed, dtype=complex)

    def evaluate(point: np.ndarray) -> np.ndarray:
        return np.array([proxy(point[0], point[1]) for proxy in proxies], dtype=complex)

    for iteration in range(max_iter):
        jacobian = np.empty((2, 2), dtype=complex)
        for col in range(2):
            h = 1e-7 * (1 + abs(x[col]))
            shift = np.zeros(2, dtype=complex)
            shift[col] = h
            jacobian[:, col] = (evaluate(x + shift) - evaluate(x - shift)) / (2 * h)
        try:
            step = np.linalg.solve(jacobian, -evaluate(x))
        except np.linalg.LinAlgError as e:
            raise NoConvergence(f"Singular Jacobian at {tuple(x)}") from e
        x = x + step
        if np.linalg.norm(step) < tol:
            logger.debug("Newton converged to %s after %d iterations", tuple(x), iteration + 1)
            return x
    logger.warning("Newton did not converge from %s", seed)
    raise NoConvergence(f"Newton did not converge from {seed} in {max_iter} iterations")


def _lattice_proxies(model: PotentialModel, seed: Tuple[complex, complex]) -> Tuple[Proxy, Proxy]:
    args = lattice_arguments(model)
    pairs = sorted(
        ((pole, zero) for pole in args if pole.is_pole for zero in args if not zero.is_pole),
        key=lambda pair: pair[0].distance(*seed) + pair[1].distance(*seed))
    for pole, zero in pairs:
        if abs(pole.c_param * zero.c_wave - pole.c_wave * zero.c_param) > 1e-14:
            logger.debug("Locating %s-%s from %s", pole.family, zero.family, seed)
            return _proxy(pole), _proxy(zero)
    raise WrongModelSpecException(f"Model '{model.tag}' has no independent pole and zero families")


def _proxy(arg) -> Proxy:
    if arg.lattice == 'linear':
        return arg.value
    return lambda param, wave: complex(special.rgamma(arg.value(param, wave)))


def find_skip(target: Union[PotentialModel, Callable], seed: Tuple[complex, complex],
              tol: float = None, max_iter: int = None,
              proxies: Optional[Tuple[Proxy, Proxy]] = None) -> PoleSkipPoint:
    """Pole-skipping point nearest to seed, as the common zero of two proxies.

    For a model the proxies are 1/Gamma of the nearest pole and zero lattice
    arguments; for a bare S function the caller passes e.g. (F+, F-).
    """
    tol = pick(tol, 'NEWTON_TOL')
    max_iter = pick(max_iter, 'NEWTON_MAX_ITER')
    seed = (complex(seed[0]), complex(seed[1]))
    model = target if isinstance(target, PotentialModel) else None

    if proxies is None:
        if model is None:
            raise WrongModelSpecException("Locating a skip of a bare S function needs proxies")
        proxies = _lattice_proxies(model, seed)
    param, wave = _newton_2d(proxies, seed, tol, max_iter)

    if model is None:
        return PoleSkipPoint(model='numeric', param_axis='param', wave_axis='k',
                             param=complex(param), k=complex(wave))

    poles, zeros = lattice_hits(model, param, wave)
    if len(poles) > 1 or len(zeros) > 1:
        raise DegenerateDoubleZero(
            f"{len(poles)} pole and {len(zeros)} zero families meet at ({param}, {wave})")
    point = describe_point(model, param, wave)
    if point is None:
        raise NoConvergence(f"Newton converged to ({param}, {wave}), which is not a skip")
    return point


# ---------- SLOPE ----------


def _coordinates(point) -> Tuple[complex, complex]:
    if isinstance(point, PoleSkipPoint):
        return point.param, point.k
    return complex(point[0]), complex(point[1])


def _fit_mobius(s_fn: Callable, param: complex, wave: complex, radius: float, n_angles: int) -> MobiusFit:
    theta = 2 * np.pi * (np.arange(n_angles) + 0.5) / n_angles
    rows, deltas, values = [], [], []
    for d1, d2 in zip(radius * np.cos(theta), radius * np.sin(theta)):
        try:
            value = s_fn(param + d2, wave + d1)
        except (PoleHit, IndeterminateRatio, PoleAtNonpositiveInteger):
            continue
        row = np.array([d1, d2, -value * d1, -value * d2]) / radius
        rows.append(row / np.linalg.norm(row))
        deltas.append((d1, d2))
        values.append(value)
    if len(rows) < 6:
        raise FitDegenerate(np.inf)

    _, _, vh = np.linalg.svd(np.array(rows))
    a, b, c, d = vh[-1].conj()
    if abs(a) > 1e-12:
        a, b, c, d = 1, b / a, c / a, d / a

    fit = MobiusFit(complex(a), complex(b), complex(c), complex(d), 0.0, radius)
    values = np.array(values)
    model = np.array([fit.evaluate(d1, d2) for d1, d2 in deltas])
    residual = float(np.max(np.abs(model - values)) / np.max(np.abs(values)))
    return replace(fit, residual=residual)


def _normalized_determinant(fit: MobiusFit) -> float:
    scale = abs(fit.a * fit.d) + abs(fit.b * fit.c)
    return abs(fit.determinant) / scale if scale else 0.0


def slope_probe(s_fn: Callable[[complex, complex], complex], point,
                radius: float = None, n_angles: int = None, check: bool = True) -> MobiusFit:
    """Fits S(p + d2, w + d1) to (a d1 + b d2)/(c d1 + d d2) on a small circle."""
    radius = pick(radius, 'PROBE_RADIUS')
    n_angles = pick(n_angles, 'PROBE_ANGLES')
    param, wave = _coordinates(point)

    fit = _fit_mobius(s_fn, param, wave, radius, n_angles)
    logger.debug("Mobius fit at (%s, %s): residual %.3e", param, wave, fit.residual)
    if fit.residual > pick(None, 'FIT_RESIDUAL'):
        raise FitDegenerate(fit.residual)

    if check:
        ndet = _normalized_determinant(fit)
        if ndet < 1e-6:
            raise FitDegenerate(fit.residual)
        inner = _fit_mobius(s_fn, param, wave, radius / 10, n_angles)
        if _normalized_determinant(inner) / ndet < 0.5:
            raise FitDegenerate(fit.residual)
    return fit


# ---------- WINDING ----------


def _circle(center: complex, radius: float, n_points: int) -> np.ndarray:
    return center + radius * np.exp(2j * np.pi * np.arange(n_points) / n_points)


def count_winding(fn: Callable[[complex], complex], center: complex, radius: float,
                  n_points: int = 128, floor: float = None) -> int:
    """Zeros minus poles of fn inside the circle, from the summed phase increments."""
    floor = pick(floor, 'WINDING_FLOOR')
    while True:
        values = np.array([fn(z) for z in _circle(center, radius, n_points)], dtype=complex)
        if np.any(np.abs(values) < floor):
            raise AmbiguousWinding(f"|f| < {floor} on the circle |z - {center}| = {radius}")
        steps = np.angle(np.roll(values, -1) / values)
        if np.max(np.abs(steps)) < np.pi / 2 or n_points >= 4096:
            break
        n_points *= 2

    total = steps.sum() / (2 * np.pi)
    winding = int(np.floor(0.5 + total))
    if abs(total - winding) > 0.1:
        raise AmbiguousWinding(f"Winding {total:.3f} is not close to an integer")
    return winding


def contour_moment(fn: Callable[[complex], complex], center: complex, radius: float,
                   n_points: int = 256, derivative: Callable[[complex], complex] = None) -> complex:
    """Sum of zeros minus sum of poles of fn inside the circle.

    Trapezoid rule for the contour integral of z f'/f / (2 pi i).
    """
    if derivative is None:
        h = 1e-5 * radius

        def derivative(z: complex) -> complex:
            return (fn(z + h) - fn(z - h)) / (2 * h)

    z = _circle(center, radius, n_points)
    values = np.array([fn(point) for point in z], dtype=complex)
    slopes = np.array([derivative(point) for point in z], dtype=complex)
    # dz = i (z - center) dtheta
    return complex(np.mean(z * slopes / values * (z - center)))


# ---------- CLASSIFICATION ----------


def classify(jost: Callable[[complex], JostPair], center: complex, radius: float = None,
             wave_number: complex = None) -> Classification:
    radius = 10 * pick(None, 'PROBE_RADIUS') if radius is None else radius
    w_plus = count_winding(lambda z: jost(z).f_plus, center, radius)
    w_minus = count_winding(lambda z: jost(z).f_minus, center, radius)

    pole_state = zero_state = None
    if w_plus > 0:
        pole_state = half_plane_state(center if wave_number is None else wave_number)
    elif w_minus < 0:
        pole_state = 'redundant'
    if w_minus > 0:
        zero_state = 'zero'
    elif w_plus < 0:
        zero_state = 'redundant'
    return Classification(w_plus, w_minus, pole_state, zero_state)


def classify_skip(model: PotentialModel, point: PoleSkipPoint,
                  eta: float = 1e-2) -> Tuple[Classification, Classification]:
    """Separates the pole and zero of a skip by shifting the parameter, then classifies both."""
    jost = jost_function(model)
    param = point.param + eta
    by_family = {arg.family: arg for arg in lattice_arguments(model)}
    wave_number = physical_wave(model, point.k)

    result = []
    for family in (point.pole_family, point.zero_family):
        arg = by_family[family]
        n = arg.nearest_index(point.param, point.k)
        center = (-n - arg.c0 - arg.c_param * param) / arg.c_wave
        result.append(classify(lambda wave: jost(param, wave), center, eta / 4, wave_number))
    return result[0], result[1]


def pair_check(target: Union[PotentialModel, Callable], point: PoleSkipPoint) -> PoleSkipPoint:
    """The partner skip at the mirrored wave number, which S(k)S(-k) = 1 forces."""
    param, wave = point.param, -point.k
    if isinstance(target, PotentialModel):
        partner = describe_point(target, param, wave)
        if partner is None:
            raise SymmetryViolation(f"No skip at the mirror point ({param}, {wave})")
        return partner
    try:
        fit = slope_probe(target, (param, wave))
    except FitDegenerate as e:
        raise SymmetryViolation(f"No skip at the mirror point ({param}, {wave})") from e
    return PoleSkipPoint(model=point.model, param_axis=point.param_axis, wave_axis=point.wave_axis,
                         param=param, k=wave, order=point.order, mobius=fit)
