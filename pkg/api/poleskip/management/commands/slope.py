from ...analytic import describe_point, s_function
from ...locator import slope_probe
from ...serializers import SlopeReportSerializer
from ...utils.commands import PoleskipCommand, render_json
from .locate import seed_from


class Command(PoleskipCommand):
    help = 'Fits the Mobius slope of S on a small circle around a point.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--at', required=True, metavar='PARAM=..,WAVE=..')
        parser.add_argument('--radius', type=float, default=None)
        parser.add_argument('--angles', type=int, default=None)

    def run(self, **options) -> str:
        model = self.model_from(options)
        param, wave = seed_from(model, options['at'])
        fit = slope_probe(s_function(model), (param, wave), radius=options['radius'],
                          n_angles=options['angles'])
        point = describe_point(model, param, wave)
        return render_json(SlopeReportSerializer({'point': point, 'fit': fit}).data)
