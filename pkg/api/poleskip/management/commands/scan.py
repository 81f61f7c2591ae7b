import itertools
import logging
from typing import Callable, Dict, List, Tuple

from ...analytic import jost_function, s_function
from ...solver import CutoffSpec, NumericalPotential, jost_functions
from ...types import JostPair
from ...utils.commands import (
    PoleskipCommand, complex_columns, parse_assignments, parse_grid, render_csv, render_json,)
from ...utils.exceptions import WrongModelSpecException


logger = logging.getLogger(__name__)

POTENTIALS = ('free', 'sinh_sq', 'cosh_sq')


class Command(PoleskipCommand):
    help = 'Tabulates S and |F+-| over a grid of one or two complex axes.'
    formats = ('csv', 'json')
    model_required = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--potential', choices=POTENTIALS, default=None,
                            help='integrate a numerical potential instead of a closed form')
        parser.add_argument('--grid', action='append', default=[], metavar='AXIS:MIN:MAX:COUNT')
        parser.add_argument('--ir', type=float, default=None, help='truncate the potential at R')

    def run(self, **options) -> str:
        grids = [parse_grid(text) for text in options['grid']]
        if not 1 <= len(grids) <= 2:
            raise WrongModelSpecException("Scan needs one or two --grid axes")
        axes, evaluate = self.__target(options)
        unknown = [grid.axis for grid in grids if grid.axis not in axes]
        if unknown:
            raise WrongModelSpecException(f"Unknown axis {unknown} (expected one of {', '.join(axes)})")

        fixed = parse_assignments(options['param'])
        rows = []
        for nodes in itertools.product(*(grid.nodes() for grid in grids)):
            point = {**fixed, **{grid.axis: node for grid, node in zip(grids, nodes)}}
            rows.append([*itertools.chain(*(complex_columns(node) for node in nodes)), *evaluate(point)])

        header = [f'{grid.axis}_{part}' for grid in grids for part in ('re', 'im')]
        header += ['s_re', 's_im', 'abs_f_plus', 'abs_f_minus', 'status']
        failed = sum(row[-1] != 'ok' for row in rows)
        if failed:
            logger.warning("%d of %d grid nodes failed", failed, len(rows))
        if options['format'] == 'json':
            return render_json({'columns': header, 'rows': rows})
        return render_csv(header, rows)

    def __target(self, options) -> Tuple[Tuple[str, ...], Callable[[Dict[str, complex]], List]]:
        if options['potential'] is not None:
            return ('k',), self.__numeric(options)
        if options['model'] is None:
            raise WrongModelSpecException("Scan needs --model or --potential")
        model = self.model_from(options)
        param_axis, wave_axis = model.axes
        s_fn, jost = s_function(model), jost_function(model)

        def evaluate(point: Dict[str, complex]) -> List:
            missing = [axis for axis in (param_axis, wave_axis) if axis not in point]
            if missing:
                raise WrongModelSpecException(f"No value for {', '.join(missing)}, pass --param or --grid")
            param, wave = point[param_axis], point[wave_axis]
            return _row(lambda: s_fn(param, wave), lambda: jost(param, wave))

        return (param_axis, wave_axis), evaluate

    def __numeric(self, options) -> Callable[[Dict[str, complex]], List]:
        params = parse_assignments(options['param'])
        name = options['potential']
        try:
            if name == 'free':
                pot = NumericalPotential.free()
            elif name == 'sinh_sq':
                pot = NumericalPotential.sinh_sq(params['nu'])
            else:
                pot = NumericalPotential.cosh_sq(params['kappa'])
        except KeyError as e:
            raise WrongModelSpecException(f"Potential '{name}' needs --param {e.args[0]}=...") from e
        if options['ir'] is not None:
            pot = pot.truncated(CutoffSpec(ir_radius=options['ir']).ir_radius)

        def evaluate(point: Dict[str, complex]) -> List:
            try:
                pair = jost_functions(pot, point['k'])
            except (RuntimeError, ArithmeticError) as e:
                logger.debug("Scan node k = %s failed: %s", point['k'], e)
                return ['', '', '', '', type(e).__name__]
            return _row(lambda: pair.s, lambda: pair)

        return evaluate


def _row(s_fn: Callable[[], complex], jost: Callable[[], JostPair]) -> List:
    status, s, pair = 'ok', None, None
    try:
        s = s_fn()
    except (RuntimeError, ArithmeticError) as e:
        status = type(e).__name__
    try:
        pair = jost()
    except (RuntimeError, ArithmeticError) as e:
        status = status if status != 'ok' else type(e).__name__
    magnitudes = ['', ''] if pair is None else [repr(abs(pair.f_plus)), repr(abs(pair.f_minus))]
    return [*complex_columns(s), *magnitudes, status]
