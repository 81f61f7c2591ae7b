from ...analytic import pole_skip_catalog
from ...serializers import CatalogSerializer
from ...utils.commands import PoleskipCommand, complex_columns, render_csv, render_json


class Command(PoleskipCommand):
    help = 'Lists the closed-form pole-skipping points of a model up to level n.'
    formats = ('json', 'csv')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n-max', type=int, default=3)

    def run(self, **options) -> str:
        model = self.model_from(options)
        points = pole_skip_catalog(model, options['n_max'])
        if options['format'] == 'csv':
            header = ['n', 'param_re', 'param_im', 'k_re', 'k_im', 'class', 'redundant', 'state']
            rows = [[point.level, *complex_columns(point.param), *complex_columns(point.k),
                     point.classification, point.redundant, point.state] for point in points]
            return render_csv(header, rows)
        return render_json(CatalogSerializer({'model': model.tag, 'points': points}).data)
