import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple, Union

import numpy as np
import sympy

from .frobenius import SeriesPotential
from .utils.exceptions import HorizonDegeneracy, NonPositiveMatsubaraIndex


logger = logging.getLogger(__name__)

r = sympy.Symbol('r', positive=True)
x = sympy.Symbol('x', positive=True)


# ---------- METRIC ----------


def _derivatives(fn: Callable[[float], complex], point: float, h: float) -> Tuple[complex, complex]:
    """Fourth-order central differences for the first and second derivative."""
    f2p, f1p, f0, f1m, f2m = (fn(point + 2 * h), fn(point + h), fn(point),
                              fn(point - h), fn(point - 2 * h))
    first = (-f2p + 8 * f1p - 8 * f1m + f2m) / (12 * h)
    second = (-f2p + 16 * f1p - 30 * f0 + 16 * f1m - f2m) / (12 * h * h)
    return first, second


@dataclass
class MetricModel:
    """Black-hole metric function F(r) with its horizon at r = 1.

    F and V_extra are sympy expressions in `r` or plain callables.
    """
    F: Union[sympy.Expr, Callable[[float], float]]
    T: Optional[Any] = None
    mass2: Any = 0
    V_extra: Union[sympy.Expr, Callable[[float], complex], None] = None
    name: str = ''
    slope: Any = field(default=None, init=False)

    def __post_init__(self) -> None:
        self.__check_horizon()
        self.__check_temperature()

    @property
    def symbolic(self) -> bool:
        return isinstance(self.F, sympy.Basic)

    def __check_horizon(self) -> None:
        if self.symbolic:
            value = self.F.subs(r, 1)
            self.slope = sympy.simplify(sympy.diff(self.F, r).subs(r, 1))
        else:
            value = self.F(1.0)
            self.slope, _ = _derivatives(self.F, 1.0, 1e-4)
        if abs(complex(value)) > 1e-12:
            raise ValueError(f"F(1) = {value}, the horizon must sit at r = 1")
        if abs(complex(self.slope)) < 1e-12:
            raise HorizonDegeneracy("F'(1) = 0, extremal horizons are not supported")

    def __check_temperature(self) -> None:
        derived = self.slope / (4 * sympy.pi) if self.symbolic else self.slope / (4 * np.pi)
        if self.T is None:
            self.T = derived
        elif abs(complex(self.slope) - 4 * np.pi * complex(self.T)) > 1e-10:
            raise ValueError(f"F'(1) = {self.slope} does not match 4 pi T = {4 * np.pi * complex(self.T)}")

    @classmethod
    def btz_like(cls, mass2=0, V_extra=None, scale=1) -> 'MetricModel':
        return cls(F=scale * (r**2 - 1), mass2=mass2, V_extra=V_extra, name='btz-like')

    @classmethod
    def rindler(cls, T=1 / (2 * sympy.pi), mass2=0) -> 'MetricModel':
        return cls(F=4 * sympy.pi * T * (r - 1), T=T, mass2=mass2, name='rindler')


@dataclass
class EffectiveProblem:
    U: Optional[Callable[[float], complex]]
    nu: Any
    omega: Any
    metric: MetricModel
    expression: Optional[sympy.Expr] = None


def _u_expression(metric: MetricModel, omega) -> sympy.Expr:
    F = metric.F.subs(r, 1 + x)
    extra = 0 if metric.V_extra is None else metric.V_extra.subs(r, 1 + x)
    V = F * (metric.mass2 + extra)
    return ((V - omega**2) / F**2 + sympy.diff(F, x, 2) / (2 * F)
            - sympy.diff(F, x)**2 / (4 * F**2))


def effective_potential(metric: MetricModel, omega) -> EffectiveProblem:
    """Zero-energy Schrodinger problem -psi'' + U psi = 0 in x = r - 1."""
    if metric.symbolic:
        omega = sympy.sympify(omega)
        nu = sympy.simplify(-sympy.I * omega / metric.slope)
        expression = _u_expression(metric, omega)
        U = sympy.lambdify(x, expression, 'numpy') if expression.free_symbols <= {x} else None
        return EffectiveProblem(U=U, nu=complex(nu) if nu.is_number else nu,
                                omega=omega, metric=metric, expression=expression)

    omega = complex(omega)
    m2 = complex(metric.mass2)

    def U(point: float) -> complex:
        F = metric.F(1 + point)
        dF, ddF = _derivatives(metric.F, 1 + point, 0.01 * point)
        extra = 0 if metric.V_extra is None else metric.V_extra(1 + point)
        return (F * (m2 + extra) - omega**2) / F**2 + ddF / (2 * F) - dF**2 / (4 * F**2)

    nu = -1j * omega / complex(metric.slope)
    return EffectiveProblem(U=U, nu=nu, omega=omega, metric=metric)


def leading_coefficient(problem: EffectiveProblem, x_min: float = 1e-6, x_max: float = 1e-3,
                        n_points: int = 40) -> complex:
    """Coefficient of 1/x^2 in U from a quadratic fit of x^2 U(x)."""
    points = np.geomspace(x_min, x_max, n_points)
    values = np.array([point**2 * complex(problem.U(point)) for point in points])
    design = np.vander(points, 3, increasing=True).astype(complex)
    coefficients, *_ = np.linalg.lstsq(design, values, rcond=None)
    return complex(coefficients[0])


def incoming_condition(problem: EffectiveProblem) -> complex:
    """Exponent of psi ~ x^(1/2+nu) at the horizon."""
    return 0.5 + problem.nu


# ---------- MATSUBARA ----------


def matsubara_dictionary(n: int, T: float) -> Tuple[complex, float]:
    if n < 1:
        raise NonPositiveMatsubaraIndex(f"Matsubara index must be positive (got {n})")
    omega = -2j * np.pi * T * n
    return omega, -n / 2


# ---------- SERIES HANDOFF ----------


def _laurent(metric: MetricModel, omega, order: int) -> Dict[int, Any]:
    expansion = sympy.expand(sympy.series(_u_expression(metric, omega), x, 0, order + 1).removeO())
    lowest = min((term.as_coeff_exponent(x)[1] for term in sympy.Add.make_args(expansion)), default=0)
    if lowest < -2:
        raise ValueError(f"U is more singular than 1/x^2 at the horizon (x^{lowest})")
    return {n: sympy.simplify(expansion.coeff(x, n)) for n in range(-1, order + 1)}


def series_potential(problem: EffectiveProblem, order: int = 6) -> SeriesPotential:
    """Laurent data of U around the horizon for the frobenius engine.

    The frequency follows nu through omega = 4 pi T i nu when the engine
    moves nu to -n/2.
    """
    metric = problem.metric
    if not metric.symbolic:
        raise ValueError("Series data needs a symbolic metric")

    def family(nu) -> Dict[int, Any]:
        return _laurent(metric, sympy.I * metric.slope * nu, order)

    logger.debug("Horizon series of U to order %d for %s", order, metric.name or metric.F)
    nu = sympy.simplify(-sympy.I * sympy.sympify(problem.omega) / metric.slope)
    return SeriesPotential(nu=nu, v=family(nu), k=0, family=family)
