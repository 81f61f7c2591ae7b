import numpy as np
import sympy

from ...holography import (
    MetricModel, effective_potential, incoming_condition, leading_coefficient, r,)
from ...serializers import HoloReportSerializer
from ...utils.commands import PoleskipCommand, parse_assignments, render_json
from ...utils.relations import parse_complex


METRICS = ('btz-like', 'rindler')


class Command(PoleskipCommand):
    help = 'Maps a horizon frequency to nu and checks the 1/x^2 coefficient of U.'

    def add_arguments(self, parser):
        parser.add_argument('--metric', choices=METRICS, required=True)
        parser.add_argument('--omega', required=True, help="complex frequency, e.g. '0-1i'")
        parser.add_argument('--T', type=float, default=None, help='Hawking temperature')
        parser.add_argument('--mass2', type=float, default=0.0)
        parser.add_argument('--param', action='append', default=[], metavar='KEY=VAL',
                            help='q2=... adds q^2/r^2 to the btz-like potential')
        parser.add_argument('--tol', type=float, default=None)
        parser.add_argument('--out', default=None)
        parser.add_argument('--format', choices=('json',), default='json')

    def run(self, **options) -> str:
        omega = parse_complex(options['omega'])
        metric = self.__metric(options)
        problem = effective_potential(metric, omega)
        coefficient = leading_coefficient(problem)
        nu = complex(problem.nu)

        report = {
            'metric': options['metric'], 'omega': omega, 'T': float(complex(metric.T).real),
            'nu': nu, 'exponent': incoming_condition(problem),
            'leading_coefficient': _round(coefficient, options['tol']),
            'expected': nu**2 - 0.25,
        }
        return render_json(HoloReportSerializer(report).data)

    def __metric(self, options) -> MetricModel:
        T, mass2 = options['T'], options['mass2']
        if options['metric'] == 'rindler':
            return MetricModel.rindler(T=1 / (2 * sympy.pi) if T is None else T, mass2=mass2)
        q2 = parse_assignments(options['param']).get('q2')
        extra = None if q2 is None else q2.real / r**2
        scale = 1 if T is None else 2 * np.pi * T
        return MetricModel.btz_like(mass2=mass2, V_extra=extra, scale=scale)


def _round(value: complex, tol: float = None) -> complex:
    """Snaps parts below the fit tolerance to zero."""
    tol = 1e-6 if tol is None else tol
    return complex(0.0 if abs(value.real) < tol else value.real,
                   0.0 if abs(value.imag) < tol else value.imag)
