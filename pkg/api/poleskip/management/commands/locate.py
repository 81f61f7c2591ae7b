from ...locator import find_skip, pair_check
from ...serializers import PoleSkipPointSerializer
from ...utils.commands import PoleskipCommand, parse_assignments, render_json
from ...utils.exceptions import WrongModelSpecException


def seed_from(model, text: str):
    """(param, wave) from an --at value such as 'nu=-1,k=0+0.5i'."""
    values = parse_assignments([text])
    param_axis, wave_axis = model.axes
    try:
        return values[param_axis], values[wave_axis]
    except KeyError as e:
        raise WrongModelSpecException(
            f"--at needs {param_axis}=... and {wave_axis}=... for model '{model.tag}'") from e


class Command(PoleskipCommand):
    help = 'Newton-refines a pole-skipping point from a seed.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--at', required=True, metavar='PARAM=..,WAVE=..')
        parser.add_argument('--max-iter', type=int, default=None)
        parser.add_argument('--pair', action='store_true', help='also report the mirrored partner')

    def run(self, **options) -> str:
        model = self.model_from(options)
        point = find_skip(model, seed_from(model, options['at']), tol=options['tol'],
                          max_iter=options['max_iter'])
        data = PoleSkipPointSerializer(point).data
        if options['pair']:
            data = {'point': data, 'partner': PoleSkipPointSerializer(pair_check(model, point)).data}
        return render_json(data)
