from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .utils.exceptions import PoleHit, WrongModelSpecException


ComplexScalar = complex

MODEL_TAGS = ('onepole', 'coulomb', 'pt1', 'pt2')

# (parameter axis, wave-number axis) of the two-argument S of each model
MODEL_AXES: Dict[str, Tuple[str, str]] = {
    'onepole': ('c', 'k'),
    'coulomb': ('nu', 'kappa_c'),
    'pt1': ('nu', 'k'),
    'pt2': ('kappa', 'k'),
}

STATES = ('bound', 'antibound', 'redundant', 'threshold')


@dataclass(frozen=True)
class BranchConvention:
    """Branch of log z: principal, or with arg z confined to arg_zeta_range."""
    principal_log: bool = True
    arg_zeta_range: Tuple[float, float] = (-np.pi / 2, 3 * np.pi / 2)

    def arg(self, z: complex) -> float:
        phase = float(np.angle(z))
        if self.principal_log:
            return phase
        low, high = self.arg_zeta_range
        while phase <= low:
            phase += 2 * np.pi
        while phase > high:
            phase -= 2 * np.pi
        return phase

    def log(self, z: complex) -> complex:
        return complex(np.log(abs(z)), self.arg(z))


WHITTAKER_BRANCH = BranchConvention(principal_log=False)


@dataclass(frozen=True)
class PotentialModel:
    tag: str
    params: Dict[str, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.__check_tag()
        if self.tag == 'pt2' and 'kappa' in self.params:
            self.__canonicalize_kappa()

    def __check_tag(self) -> None:
        if self.tag not in MODEL_TAGS:
            raise WrongModelSpecException(
                f"Unknown model '{self.tag}' (expected one of {', '.join(MODEL_TAGS)})")

    def __canonicalize_kappa(self) -> None:
        kappa = complex(self.params['kappa'])
        if kappa.real < 0.5:
            object.__setattr__(self, 'params', {**self.params, 'kappa': 1 - kappa})

    @property
    def axes(self) -> Tuple[str, str]:
        return MODEL_AXES[self.tag]

    def get(self, name: str, default: complex = None) -> complex:
        value = self.params.get(name, default)
        return None if value is None else complex(value)

    @classmethod
    def one_pole(cls, c: float = None) -> 'PotentialModel':
        return cls('onepole', {} if c is None else {'c': c})

    @classmethod
    def coulomb(cls, e2: complex = 1.0, nu: complex = None, k: complex = 0.5) -> 'PotentialModel':
        params = {'e2': e2, 'k': k}
        if nu is not None:
            params['nu'] = nu
        return cls('coulomb', params)

    @classmethod
    def sinh_sq(cls, nu: complex = None) -> 'PotentialModel':
        return cls('pt1', {} if nu is None else {'nu': nu})

    @classmethod
    def cosh_sq(cls, kappa: complex = None) -> 'PotentialModel':
        return cls('pt2', {} if kappa is None else {'kappa': kappa})


@dataclass(frozen=True)
class JostConvention:
    phi_normalization: str = 'x^(1/2+nu)'
    log_phase: bool = False


@dataclass(frozen=True)
class JostPair:
    f_plus: complex
    f_minus: complex
    convention: JostConvention = JostConvention()

    @property
    def s(self) -> complex:
        if self.f_plus == 0:
            raise PoleHit("F+ vanishes, S has a pole")
        return self.f_minus / self.f_plus


@dataclass(frozen=True)
class LatticeArgument:
    """Affine function c0 + c_param*p + c_wave*w of the two model axes.

    A 'gamma' argument marks a ladder point whenever it equals a nonpositive
    integer, a 'linear' argument whenever it vanishes.
    """
    family: str
    c0: complex
    c_param: complex
    c_wave: complex
    source: str
    lattice: str = 'gamma'
    redundant: bool = False

    @property
    def is_pole(self) -> bool:
        return self.family.startswith('Pole')

    def value(self, param: complex, wave: complex) -> complex:
        return self.c0 + self.c_param * param + self.c_wave * wave

    def nearest_index(self, param: complex, wave: complex) -> int:
        if self.lattice == 'linear':
            return 0
        return max(0, int(round(-self.value(param, wave).real)))

    def distance(self, param: complex, wave: complex) -> float:
        return abs(self.value(param, wave) + self.nearest_index(param, wave))

    def hits(self, param: complex, wave: complex, tol: float) -> bool:
        return self.distance(param, wave) < tol


@dataclass(frozen=True)
class LadderSpec:
    family: str
    axis: str
    generator: Callable[[int], complex]
    index_range: Tuple[int, int]
    source: str
    redundant: bool = False

    def points(self) -> List[complex]:
        start, stop = self.index_range
        return [self.generator(n) for n in range(start, stop)]


@dataclass(frozen=True)
class MobiusFit:
    a: complex
    b: complex
    c: complex
    d: complex
    residual: float
    radius: float

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def ratios(self) -> Dict[str, complex]:
        return {
            'b/a': self.b / self.a,
            'c/a': self.c / self.a,
            'd/a': self.d / self.a,
        }

    def evaluate(self, delta1: complex, delta2: complex) -> complex:
        return (self.a * delta1 + self.b * delta2) / (self.c * delta1 + self.d * delta2)


@dataclass
class PoleSkipPoint:
    model: str
    param_axis: str
    wave_axis: str
    param: complex
    k: complex
    order: Optional[int] = None
    level: Optional[int] = None
    pole_family: str = ''
    zero_family: str = ''
    state: str = ''
    redundant: bool = False
    series_visible: bool = True
    mobius: Optional[MobiusFit] = None

    @property
    def point(self) -> Tuple[complex, complex]:
        return (self.param, self.k)

    @property
    def classification(self) -> str:
        if self.pole_family and self.zero_family:
            return f'{self.pole_family}-{self.zero_family}'
        return self.state


@dataclass(frozen=True)
class Classification:
    """Winding numbers of F+ and F- around a point and what they make of S there."""
    w_plus: int
    w_minus: int
    pole_state: Optional[str] = None
    zero_state: Optional[str] = None
