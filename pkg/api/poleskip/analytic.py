import cmath
import logging
from typing import Callable, Dict, List, Optional, Tuple

import sympy

from .specfun import gamma_ratio, hyp2f1, whittaker_m
from .types import (
    WHITTAKER_BRANCH, JostConvention, JostPair, LadderSpec,
    LatticeArgument, PoleSkipPoint, PotentialModel,)
from .utils.config import pick
from .utils.exceptions import (
    BranchPointAtZeroK, IndeterminateRatio, PoleAtNonpositiveInteger,
    PoleHit, WrongModelSpecException,)


logger = logging.getLogger(__name__)

LOG2 = cmath.log(2)
SQRT_PI = cmath.sqrt(cmath.pi)
COULOMB_CONVENTION = JostConvention(log_phase=True)


def _s_ratio(num, den, prefactor: complex = 1) -> complex:
    try:
        return prefactor * gamma_ratio(num, den)
    except PoleAtNonpositiveInteger as e:
        raise PoleHit(str(e)) from e


def phase_shift(s: complex) -> complex:
    return cmath.log(s) / 2j


# ---------- ONE POLE ----------


def one_pole_s(k: complex, c: complex) -> complex:
    num, den = -(k + 1j * c), k - 1j * c
    if den == 0:
        if num == 0:
            raise IndeterminateRatio(f"S = 0/0 at k = c = 0")
        raise PoleHit(f"S has a pole at k = ic = {k}")
    return num / den


def one_pole_jost(k: complex, c: complex) -> JostPair:
    return JostPair(k - 1j * c, -(k + 1j * c))


# ---------- COULOMB ----------


def sommerfeld(k: complex, e2: complex) -> complex:
    if k == 0:
        raise BranchPointAtZeroK("Coulomb functions are not defined at k = 0")
    return e2 / (2 * k)


def coulomb_jost_plus(k: complex, nu: complex, e2: complex) -> complex:
    kappa = sommerfeld(k, e2)
    exponent = (0.5 - nu + 1j * kappa) * (cmath.log(2 * k) - 1j * cmath.pi / 2)
    return cmath.exp(exponent) * gamma_ratio([2 * nu + 1], [nu + 0.5 + 1j * kappa])


def coulomb_jost_minus(k: complex, nu: complex, e2: complex) -> complex:
    kappa = sommerfeld(k, e2)
    exponent = (0.5 - nu - 1j * kappa) * (cmath.log(2 * k) + 1j * cmath.pi / 2)
    return cmath.exp(exponent) * gamma_ratio([2 * nu + 1], [nu + 0.5 - 1j * kappa])


def coulomb_jost(k: complex, nu: complex, e2: complex) -> JostPair:
    """F+- against f+- ~ exp(+-i(kx - kappa ln x)), flagged by the log phase."""
    return JostPair(coulomb_jost_plus(k, nu, e2), coulomb_jost_minus(k, nu, e2), COULOMB_CONVENTION)


def coulomb_s_at(nu: complex, kappa: complex, k: complex) -> complex:
    """S on the (nu, kappa) plane at fixed wave number k."""
    if k == 0:
        raise BranchPointAtZeroK("Coulomb S is not defined at k = 0")
    prefactor = cmath.exp(-1j * cmath.pi * (nu - 0.5) - 2j * kappa * cmath.log(2 * k))
    return _s_ratio([nu + 0.5 + 1j * kappa], [nu + 0.5 - 1j * kappa], prefactor)


def coulomb_s(k: complex, nu: complex, e2: complex) -> complex:
    return coulomb_s_at(nu, sommerfeld(k, e2), k)


def coulomb_regular(k: complex, nu: complex, e2: complex, x: float) -> complex:
    kappa = sommerfeld(k, e2)
    normalization = cmath.exp(-(0.5 + nu) * WHITTAKER_BRANCH.log(2j * k))
    return normalization * whittaker_m(1j * kappa, nu, 2j * k * x)


def coulomb_bound_energies(e2: float, n_max: int) -> List[float]:
    if e2 >= 0:
        return []
    return [-e2**2 / (4 * n**2) for n in range(1, n_max + 1)]


# ---------- 1/SINH^2 ----------


def pt1_jost_plus(k: complex, nu: complex) -> complex:
    prefactor = cmath.exp((nu + 0.5) * LOG2) / SQRT_PI
    return prefactor * gamma_ratio([1 + nu, 1 - 1j * k], [nu + 0.5 - 1j * k])


def pt1_jost_minus(k: complex, nu: complex) -> complex:
    return pt1_jost_plus(-k, nu)


def pt1_s(k: complex, nu: complex) -> complex:
    return _s_ratio([1 + 1j * k, nu + 0.5 - 1j * k], [1 - 1j * k, nu + 0.5 + 1j * k])


def pt1_regular(k: complex, nu: complex, x: float) -> complex:
    """Regular solution normalized to x^(1/2+nu), through the Pfaff form on tanh^2 x."""
    lam = nu + 0.5
    t = cmath.tanh(x).real
    power = cmath.exp(lam * cmath.log(t) - 1j * k * cmath.log(cmath.cosh(x).real))
    return power * hyp2f1((lam + 1j * k) / 2, (nu + 1.5 + 1j * k) / 2, nu + 1, t * t)


def pt1_f_minus_series(k: complex, nu: complex, x: float) -> complex:
    y = cmath.exp(-2 * x).real
    prefactor = cmath.exp((0.5 - nu) * cmath.log(1 - y) - 1j * k * x)
    return prefactor * hyp2f1(0.5 - nu, 0.5 - nu + 1j * k, 1 + 1j * k, y)


def pt1_f_minus_coefficient(k, nu):
    """Coefficient of exp(-2x) in exp(ikx) f-(x)."""
    if isinstance(k, sympy.Basic) or isinstance(nu, sympy.Basic):
        num = sympy.nsimplify(nu**2 - sympy.Rational(1, 4))
        den = sympy.nsimplify(1 + sympy.I * k)
        if den.free_symbols or num.free_symbols:
            return sympy.cancel(num / den)
        if den == 0:
            if num == 0:
                raise IndeterminateRatio(f"coefficient is 0/0 at k = {k}, nu = {nu}")
            raise PoleHit(f"coefficient diverges at k = {k}")
        return num / den
    num, den = complex(nu)**2 - 0.25, 1 + 1j * complex(k)
    if abs(den) < pick(None, 'POLE_TOL'):
        if abs(num) < pick(None, 'POLE_TOL'):
            raise IndeterminateRatio(f"coefficient is 0/0 at k = {k}, nu = {nu}")
        raise PoleHit(f"coefficient diverges at k = {k}")
    return num / den


# ---------- 1/COSH^2 ----------


def pt2_jost_plus(k: complex, kappa: complex) -> complex:
    prefactor = cmath.exp(1j * k * LOG2) * SQRT_PI
    return prefactor * gamma_ratio([1 - 1j * k], [(2 - 1j * k - kappa) / 2, (1 - 1j * k + kappa) / 2])


def pt2_jost_minus(k: complex, kappa: complex) -> complex:
    return pt2_jost_plus(-k, kappa)


def pt2_s(k: complex, kappa: complex) -> complex:
    prefactor = cmath.exp(-2j * k * LOG2)
    return _s_ratio(
        [(2 - 1j * k - kappa) / 2, (1 - 1j * k + kappa) / 2, 1 + 1j * k],
        [(2 + 1j * k - kappa) / 2, (1 + 1j * k + kappa) / 2, 1 - 1j * k],
        prefactor)


def pt2_u_coefficient(k, kappa):
    """O(u) coefficient of f- in u = (1 - tanh x)/2."""
    exact = isinstance(k, sympy.Basic) or isinstance(kappa, sympy.Basic)
    i = sympy.I if exact else 1j
    num = k * (i * k + 1) + 2 * i * kappa * (kappa - 1)
    den = 2 * (k - i)
    if exact:
        num, den = sympy.nsimplify(num), sympy.nsimplify(den)
        if den.free_symbols or num.free_symbols:
            return sympy.cancel(num / den)
    tol = 0 if exact else pick(None, 'POLE_TOL')
    if abs(den) <= tol:
        if abs(num) <= tol:
            raise IndeterminateRatio(f"coefficient is 0/0 at k = {k}, kappa = {kappa}")
        raise PoleHit(f"coefficient diverges at k = {k}")
    return sympy.simplify(num / den) if exact else num / den


# ---------- LATTICES ----------


I = 1j

LATTICE_ARGUMENTS: Dict[str, Tuple[LatticeArgument, ...]] = {
    'onepole': (
        LatticeArgument('Pole1', 0, -I, 1, 'F+ zero', lattice='linear'),
        LatticeArgument('Zero1', 0, I, 1, 'F- zero', lattice='linear'),
    ),
    'coulomb': (
        LatticeArgument('Pole1', 0.5, 1, I, 'F+ zero'),
        LatticeArgument('Zero1', 0.5, 1, -I, 'F- zero'),
    ),
    'pt1': (
        LatticeArgument('Pole1', 0.5, 1, -I, 'F+ zero'),
        LatticeArgument('Pole2', 1, 0, I, 'F- pole', redundant=True),
        LatticeArgument('Zero1', 0.5, 1, I, 'F- zero'),
        LatticeArgument('Zero2', 1, 0, -I, 'F+ pole', redundant=True),
    ),
    'pt2': (
        LatticeArgument('Pole1', 1, -0.5, -I / 2, 'F+ zero'),
        LatticeArgument('Pole2', 0.5, 0.5, -I / 2, 'F+ zero'),
        LatticeArgument('Pole3', 1, 0, I, 'F- pole', redundant=True),
        LatticeArgument('Zero1', 1, -0.5, I / 2, 'F- zero'),
        LatticeArgument('Zero2', 0.5, 0.5, I / 2, 'F- zero'),
        LatticeArgument('Zero3', 1, 0, -I, 'F+ pole', redundant=True),
    ),
}


def lattice_arguments(model: PotentialModel) -> Tuple[LatticeArgument, ...]:
    return LATTICE_ARGUMENTS[model.tag]


def lattice_hits(model: PotentialModel, param: complex, wave: complex,
                 tol: float = 1e-8) -> Tuple[List[Tuple[LatticeArgument, int]], List[Tuple[LatticeArgument, int]]]:
    poles, zeros = [], []
    for arg in lattice_arguments(model):
        if arg.hits(param, wave, tol):
            (poles if arg.is_pole else zeros).append((arg, arg.nearest_index(param, wave)))
    return poles, zeros


def ladders(model: PotentialModel, n_max: int = 10) -> List[LadderSpec]:
    param_axis, wave_axis = model.axes
    param = model.get(param_axis)
    if param is None:
        raise WrongModelSpecException(f"Model '{model.tag}' needs '{param_axis}' to build ladders")

    specs = []
    for arg in lattice_arguments(model):
        def generator(n: int, arg: LatticeArgument = arg) -> complex:
            return (-n - arg.c0 - arg.c_param * param) / arg.c_wave

        stop = 1 if arg.lattice == 'linear' else n_max + 1
        specs.append(LadderSpec(arg.family, wave_axis, generator, (0, stop), arg.source, arg.redundant))
    return specs


# ---------- CATALOG ----------


def _admissible(model: PotentialModel, param: complex, wave: complex) -> bool:
    if model.tag != 'coulomb' and wave.imag < -1e-12:
        return False
    if model.tag == 'pt2' and param.real < 0.5 - 1e-12:
        return False
    return True


def _level(model: PotentialModel, pole: LatticeArgument, zero: LatticeArgument, i: int, j: int) -> int:
    if model.tag == 'coulomb':
        return i + j + 1
    if model.tag == 'pt1' and pole.family == 'Pole1':
        return (i + j) // 2 + 1
    if model.tag == 'onepole':
        return 1
    return i + 1


def _order(model: PotentialModel, pole: LatticeArgument, i: int, j: int, level: int) -> int:
    if model.tag == 'coulomb' or (model.tag == 'pt1' and pole.family == 'Pole1'):
        return i + j + 1
    return level


def half_plane_state(wave: complex, tol: float = 1e-10) -> str:
    wave = complex(wave)
    if abs(wave.imag) < tol:
        return 'threshold'
    return 'bound' if wave.imag > 0 else 'antibound'


def physical_wave(model: PotentialModel, wave: complex, tol: float = 1e-10) -> complex:
    """Wave number of a point; on the Coulomb plane k = e^2/(2 kappa), 0 at kappa = 0."""
    wave = complex(wave)
    if model.tag != 'coulomb':
        return wave
    if abs(wave) < tol:
        return 0j
    return model.get('e2', 1.0) / (2 * wave)


def wave_state(model: PotentialModel, wave: complex) -> str:
    return half_plane_state(physical_wave(model, wave))


def describe_point(model: PotentialModel, param: complex, wave: complex,
                   tol: float = 1e-8) -> Optional[PoleSkipPoint]:
    """PoleSkipPoint when exactly one pole family and one zero family meet, else None."""
    poles, zeros = lattice_hits(model, param, wave, tol)
    if len(poles) != 1 or len(zeros) != 1:
        return None
    (pole, i), (zero, j) = poles[0], zeros[0]
    level = _level(model, pole, zero, i, j)
    param_axis, wave_axis = model.axes
    return PoleSkipPoint(
        model=model.tag, param_axis=param_axis, wave_axis=wave_axis,
        param=_clean(param), k=_clean(wave),
        order=_order(model, pole, i, j, level), level=level,
        pole_family=pole.family, zero_family=zero.family,
        state='redundant' if pole.redundant else wave_state(model, wave),
        redundant=pole.redundant or zero.redundant,
        series_visible=not (wave_axis == 'k' and abs(wave) < tol))


def _clean(value: complex, digits: int = 12) -> complex:
    value = complex(value)
    return complex(round(value.real, digits) + 0.0, round(value.imag, digits) + 0.0)


def pole_skip_catalog(model: PotentialModel, n_max: int) -> List[PoleSkipPoint]:
    if n_max < 1:
        raise WrongModelSpecException("n_max must be positive")
    args = lattice_arguments(model)
    index_max = 2 * n_max + 2
    found: Dict[Tuple[float, ...], PoleSkipPoint] = {}

    for pole in (arg for arg in args if arg.is_pole):
        for zero in (arg for arg in args if not arg.is_pole):
            det = pole.c_param * zero.c_wave - pole.c_wave * zero.c_param
            if abs(det) < 1e-14:
                continue
            i_range = range(1) if pole.lattice == 'linear' else range(index_max + 1)
            j_range = range(1) if zero.lattice == 'linear' else range(index_max + 1)
            for i in i_range:
                for j in j_range:
                    r1, r2 = -i - pole.c0, -j - zero.c0
                    param = (r1 * zero.c_wave - pole.c_wave * r2) / det
                    wave = (pole.c_param * r2 - r1 * zero.c_param) / det
                    if not _admissible(model, param, wave):
                        continue
                    point = describe_point(model, param, wave)
                    if point is None or point.level > n_max:
                        continue
                    key = (round(point.param.real, 9), round(point.param.imag, 9),
                           round(point.k.real, 9), round(point.k.imag, 9))
                    found.setdefault(key, point)

    points = sorted(found.values(), key=lambda p: (p.level, p.k.imag, p.param.real))
    logger.debug("Catalog of %s up to n = %d: %d points", model.tag, n_max, len(points))
    return points


# ---------- TWO-ARGUMENT FUNCTIONS ----------


def s_function(model: PotentialModel) -> Callable[[complex, complex], complex]:
    if model.tag == 'onepole':
        return lambda c, k: one_pole_s(k, c)
    if model.tag == 'coulomb':
        k = model.get('k', 0.5)
        return lambda nu, kappa: coulomb_s_at(nu, kappa, k)
    if model.tag == 'pt1':
        return lambda nu, k: pt1_s(k, nu)
    return lambda kappa, k: pt2_s(k, kappa)


def jost_function(model: PotentialModel) -> Callable[[complex, complex], JostPair]:
    if model.tag == 'onepole':
        return lambda c, k: one_pole_jost(k, c)
    if model.tag == 'coulomb':
        k = model.get('k', 0.5)
        return lambda nu, kappa: coulomb_jost(k, nu, 2 * k * kappa)
    if model.tag == 'pt1':
        return lambda nu, k: JostPair(pt1_jost_plus(k, nu), pt1_jost_minus(k, nu))
    return lambda kappa, k: JostPair(pt2_jost_plus(k, kappa), pt2_jost_minus(k, kappa))
