import logging

from ...analytic import s_function
from ...locator import count_winding
from ...serializers import CutoffReportSerializer
from ...solver import CutoffSpec, NumericalPotential, jost_functions, uv_cutoff_s
from ...utils.commands import PoleskipCommand, parse_assignments, render_json
from ...utils.exceptions import WrongModelSpecException


logger = logging.getLogger(__name__)


def numerical_potential(model) -> NumericalPotential:
    if model.tag == 'pt1':
        return NumericalPotential.sinh_sq(model.get('nu'))
    if model.tag == 'pt2':
        return NumericalPotential.cosh_sq(model.get('kappa'))
    raise WrongModelSpecException(f"No numerical potential for model '{model.tag}'")


def pole_message(poles: int, radius: float) -> str:
    if poles == 0:
        return f"no pole within {radius}"
    return f"{poles} pole{'s' if poles > 1 else ''} within {radius}"


class Command(PoleskipCommand):
    help = 'Counts the poles of S around a probe once an IR or UV cutoff is applied.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--nu', default=None, help='shorthand for --param nu=...')
        parser.add_argument('--ir', type=float, default=None, help='truncate V beyond R')
        parser.add_argument('--uv', type=float, default=None, help='flatten V below a')
        parser.add_argument('--probe', required=True, metavar='k=..')
        parser.add_argument('--radius', type=float, default=0.2)
        parser.add_argument('--points', type=int, default=64)

    def run(self, **options) -> str:
        extra = parse_assignments([f"nu={options['nu']}"]) if options['nu'] is not None else {}
        model = self.model_from(options, **extra)
        cutoff = CutoffSpec(ir_radius=options['ir'], uv_radius=options['uv'])
        if (cutoff.ir_radius is None) == (cutoff.uv_radius is None):
            raise WrongModelSpecException("Pass exactly one of --ir and --uv")
        probe = parse_assignments([options['probe']]).get('k')
        if probe is None:
            raise WrongModelSpecException("--probe needs k=...")

        param = model.get(model.axes[0])
        if param is None:
            raise WrongModelSpecException(f"Model '{model.tag}' needs {model.axes[0]}=...")
        pot = numerical_potential(model)
        radius, n_points = options['radius'], options['points']

        exact = s_function(model)
        before = count_winding(lambda k: exact(param, k), probe, radius, n_points)
        if cutoff.ir_radius is not None:
            # truncated Jost functions are entire, S poles are the zeros of F+
            truncated = pot.truncated(cutoff.ir_radius)
            after = count_winding(lambda k: jost_functions(truncated, k).f_plus, probe, radius, n_points)
        else:
            after = max(0, -count_winding(lambda k: uv_cutoff_s(pot, cutoff, k), probe, radius, n_points))
        logger.info("Around %s: S winds %d times without cutoff, %d poles with", probe, before, after)

        report = {
            'model': model.tag, 'probe': probe, 'radius': radius,
            'ir_radius': cutoff.ir_radius, 'uv_radius': cutoff.uv_radius,
            'winding_before': before, 'poles_after': after,
            'message': pole_message(after, radius),
        }
        return render_json(CutoffReportSerializer(report).data)
