import logging
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import sympy

from .locator import newton_1d
from .types import PoleSkipPoint
from .utils.config import pick
from .utils.exceptions import Breakdown, NoConvergence, NoRootInWindow


logger = logging.getLogger(__name__)


# ---------- SERIES DATA ----------


def _is_exact(*values) -> bool:
    return any(isinstance(value, sympy.Basic) for value in values)


def _is_zero(value, tol: float = 1e-12) -> bool:
    if isinstance(value, sympy.Basic):
        return sympy.simplify(value) == 0
    return abs(complex(value)) < tol


def _simplify(value):
    if isinstance(value, sympy.Basic):
        return sympy.cancel(sympy.together(value))
    return value


@dataclass(frozen=True)
class SeriesPotential:
    """V = (nu^2 - 1/4)/x^2 + sum_n v[n] x^n with n >= -1, at energy k^2.

    `family` rebuilds the Laurent data for another nu when the coupling
    itself depends on nu (1/sinh^2).
    """
    nu: Any
    v: Dict[int, Any]
    k: Any = 0
    family: Optional[Callable[[Any], Dict[int, Any]]] = field(default=None, compare=False)

    def coefficient(self, n: int):
        return self.v.get(n, 0)

    def at_nu(self, nu) -> 'SeriesPotential':
        v = self.family(nu) if self.family is not None else self.v
        return replace(self, nu=nu, v=v)

    def at_k(self, k) -> 'SeriesPotential':
        return replace(self, k=k)

    @property
    def exact(self) -> bool:
        return _is_exact(self.nu, self.k, *self.v.values())

    @classmethod
    def zero(cls, nu=sympy.Rational(1, 2), k=0) -> 'SeriesPotential':
        return cls(nu=nu, v={}, k=k)

    @classmethod
    def coulomb(cls, e2, nu, k=0) -> 'SeriesPotential':
        return cls(nu=nu, v={-1: e2}, k=k)

    @classmethod
    def sinh_sq(cls, nu, k=0, order: int = 12) -> 'SeriesPotential':
        return cls(nu=nu, v=sinh_sq_laurent(nu, order), k=k,
                   family=lambda value: sinh_sq_laurent(value, order))

    @classmethod
    def cosh_sq(cls, kappa, k=0, order: int = 12) -> 'SeriesPotential':
        return cls(nu=sympy.Rational(1, 2), v=cosh_sq_laurent(kappa, order), k=k)


def sinh_sq_laurent(nu, order: int) -> Dict[int, Any]:
    """Coefficients of (nu^2 - 1/4)(1/sinh^2 x - 1/x^2) up to x^order."""
    strength = nu**2 - sympy.Rational(1, 4)
    v = {}
    for n in range(1, order // 2 + 2):
        c = -sympy.Integer(2)**(2 * n) * sympy.bernoulli(2 * n) * (2 * n - 1) / sympy.factorial(2 * n)
        v[2 * n - 2] = _numeric_like(strength * c, nu)
    return v


def cosh_sq_laurent(kappa, order: int) -> Dict[int, Any]:
    """Coefficients of -kappa(kappa-1)/cosh^2 x up to x^order."""
    strength = -kappa * (kappa - 1)
    v = {}
    for n in range(1, order // 2 + 2):
        c = (sympy.Integer(2)**(2 * n) * (sympy.Integer(2)**(2 * n) - 1) * sympy.bernoulli(2 * n)
             * (2 * n - 1) / sympy.factorial(2 * n))
        v[2 * n - 2] = _numeric_like(strength * c, kappa)
    return v


def _numeric_like(value, reference):
    if _is_exact(reference):
        return sympy.nsimplify(value) if value.is_number else sympy.expand(value)
    return complex(value)


def exponential_tail(strength, s: float, sign: int = 1, order: int = 24) -> Dict[int, Any]:
    """a_n of strength * 4y/(1 - sign*y)^2 = sum a_n y^n with y = exp(-s x).

    sign=+1 gives 1/sinh^2 x, sign=-1 gives 1/cosh^2 x for s=2.
    """
    return {n: strength * 4 * n * sign**(n + 1) for n in range(1, order + 1)}


# ---------- RECURSION MATRIX ----------


@dataclass(frozen=True)
class RecursionMatrix:
    order: int
    entries: Any
    exact: bool

    def superdiagonal(self, m: int):
        return self.entries[m - 1, m] if m < self.order else None


def build_matrix(pot: SeriesPotential, n: int) -> RecursionMatrix:
    if n < 1:
        raise ValueError("Matrix order must be positive.")
    exact = pot.exact
    k2 = pot.k**2

    def entry(m: int, j: int):
        if j < m:
            value = pot.coefficient(m - 2 - j)
            if j == m - 2:
                value = value - k2
            return value
        if j == m:
            return -m * (m + 2 * pot.nu)
        return 0

    if exact:
        entries = sympy.Matrix(n, n, lambda row, col: entry(row + 1, col))
    else:
        entries = np.array(
            [[complex(entry(row + 1, col)) for col in range(n)] for row in range(n)])
    return RecursionMatrix(order=n, entries=entries, exact=exact)


def det_truncation(pot: SeriesPotential, n: int):
    nu_n = sympy.Rational(-n, 2) if pot.exact else -n / 2
    matrix = build_matrix(pot.at_nu(nu_n), n)
    if matrix.exact:
        return sympy.expand(matrix.entries.det())
    return complex(np.linalg.det(matrix.entries))


# ---------- SERIES SOLUTION ----------


@dataclass
class SeriesSolution:
    lam: Any
    coefficients: List[Any]
    breakdown: Optional[int] = None
    free_orders: List[int] = field(default_factory=list)

    def evaluate(self, x: float):
        value = derivative = 0j
        for m, psi in enumerate(self.coefficients):
            power = complex(self.lam) + m
            term = complex(psi) * x**power
            value += term
            derivative += power * term / x
        return value, derivative


def solve_series(pot: SeriesPotential, branch: str = '+', order: int = 8,
                 strict: bool = True) -> SeriesSolution:
    if order < 1:
        raise ValueError("Series order must be positive.")
    nu = pot.nu if branch == '+' else -pot.nu
    lam = sympy.Rational(1, 2) + nu if _is_exact(nu) else 0.5 + nu
    k2 = pot.k**2
    psi = [sympy.Integer(1) if pot.exact else 1 + 0j]
    solution = SeriesSolution(lam=lam, coefficients=psi)

    for m in range(1, order + 1):
        rhs = sum(pot.coefficient(m - 2 - j) * psi[j] for j in range(m))
        if m >= 2:
            rhs -= k2 * psi[m - 2]
        rhs = _simplify(rhs)
        indicial = m * (m + 2 * nu)
        if _is_zero(indicial):
            if _is_zero(rhs):
                solution.free_orders.append(m)
                psi.append(sympy.Integer(0) if pot.exact else 0j)
                continue
            if strict:
                raise Breakdown(m, rhs)
            solution.breakdown = m
            break
        psi.append(_simplify(rhs / indicial))
    return solution


def tilde_transform(s: float, tail: Dict[int, Any], k, branch: str = '-') -> SeriesPotential:
    """x=infinity problem in the variable y = exp(-s x) as an origin problem.

    With psi = y^(-1/2) chi the tail sum a_n y^n becomes a Laurent series with
    v[n-2] = a_n / s^2 and angular momentum ik/s (f- branch) or -ik/s (f+).
    """
    i = sympy.I if _is_exact(k, *tail.values()) else 1j
    nu = i * k / s if branch == '-' else -i * k / s
    v = {n - 2: a / s**2 for n, a in tail.items()}
    return SeriesPotential(nu=nu, v=v, k=0)


def tilde_candidates(s: float, n_max: int, branch: str = '-') -> List[complex]:
    """Wave numbers where the tilde-frame order nu = -n/2 is reached."""
    sign = 1 if branch == '-' else -1
    return [sign * 1j * n * s / 2 for n in range(1, n_max + 1)]


# ---------- CANDIDATES ----------


@dataclass(frozen=True)
class SeriesFamily:
    """One-parameter family of series potentials.

    frame='origin': the free parameter is `axis` and nu is set to -n/2.
    frame='infinity': built through tilde_transform, the wave number is
    fixed by n and the free parameter is a coupling.
    """
    build: Callable[[Any], SeriesPotential]
    axis: str
    frame: str = 'origin'
    decay_rate: float = 1.0
    model: str = 'series'


def det_roots(family: SeriesFamily, n: int, window: float = None, grid: int = None) -> List[complex]:
    window = pick(window, 'CANDIDATE_WINDOW')
    grid = pick(grid, 'CANDIDATE_GRID')
    p = sympy.Symbol('p')
    det = sympy.expand(det_truncation(family.build(p), n))

    if det == 0:
        raise NoRootInWindow(f"det M({n}) vanishes identically")
    if not det.has(p):
        raise NoRootInWindow(f"det M({n}) = {det} does not depend on {family.axis}")

    f = sympy.lambdify(p, det, 'numpy')
    df = sympy.lambdify(p, sympy.diff(det, p), 'numpy')

    axis = np.linspace(-window, window, grid)
    z = (axis[None, :] + 1j * axis[:, None]).ravel()
    with np.errstate(all='ignore'):
        for _ in range(60):
            step = f(z) / df(z)
            step = np.where(np.isfinite(step), step, 0)
            z = z - step
    z = z[np.isfinite(z) & (np.abs(z) <= window)]
    z = np.unique(np.round(z, 6))

    roots: List[complex] = []
    for seed in z:
        try:
            root = newton_1d(lambda value: complex(f(value)), complex(seed),
                             derivative=lambda value: complex(df(value)))
        except NoConvergence:
            continue
        if family.axis == 'k' and abs(root) < 1e-6:
            continue
        if all(abs(root - other) > 1e-8 for other in roots):
            roots.append(root)

    if not roots:
        raise NoRootInWindow(f"No root of det M({n}) with |{family.axis}| <= {window}")
    roots.sort(key=lambda value: (round(value.imag, 9), round(value.real, 9)))
    logger.debug("det M(%d) roots in %s: %s", n, family.axis, roots)
    return roots


def find_candidates(family: SeriesFamily, n_max: int, window: float = None) -> List[PoleSkipPoint]:
    candidates: List[PoleSkipPoint] = []
    for n in range(1, n_max + 1):
        try:
            roots = det_roots(family, n, window)
        except NoRootInWindow as e:
            logger.debug("%s", e)
            continue
        for root in roots:
            if family.frame == 'origin':
                param, wave, param_axis, wave_axis = -n / 2, root, 'nu', family.axis
            else:
                param, wave = root, tilde_candidates(family.decay_rate, n)[-1]
                param_axis, wave_axis = family.axis, 'k'
            candidates.append(PoleSkipPoint(
                model=family.model, param_axis=param_axis, wave_axis=wave_axis,
                param=complex(param), k=complex(wave), order=n))
    if not candidates:
        raise NoRootInWindow(f"No candidates up to n = {n_max} for {family.model} along {family.axis}")
    return candidates
