import csv
import io
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
from django.core.exceptions import BadRequest
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from ..types import MODEL_TAGS, PotentialModel
from .config import pick
from .exceptions import (
    DegenerateDoubleZero, FitDegenerate, NoConvergence, WrongModelSpecException,)
from .relations import parse_complex


logger = logging.getLogger(__name__)

TOL_RANGE = (1e-14, 1e-2)

# numeric failures that end a command with their own exit code, anything
# raised as BadRequest or ValueError is a configuration error (2)
EXIT_CODES = {
    NoConvergence: 3,
    DegenerateDoubleZero: 3,
    FitDegenerate: 4,
}


@dataclass(frozen=True)
class GridSpec:
    axis: str
    start: complex
    stop: complex
    count: int

    def __post_init__(self) -> None:
        self.__check_count()

    def __check_count(self) -> None:
        if self.count < 1:
            raise WrongModelSpecException(f"Grid on '{self.axis}' needs at least one node")
        if self.count > pick(None, 'GRID_MAX'):
            raise WrongModelSpecException(
                f"Grid on '{self.axis}' has {self.count} nodes, the limit is {pick(None, 'GRID_MAX')}")

    def nodes(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count, dtype=complex)


# ---------- PARSING ----------


def parse_assignments(items: Optional[Iterable[str]]) -> Dict[str, complex]:
    """'nu=-1,k=0+0.5i' (or repeated key=val items) into a dict of complex values."""
    values = {}
    for item in items or ():
        for assignment in item.split(','):
            if not assignment.strip():
                continue
            key, sep, literal = assignment.partition('=')
            if not sep or not key.strip():
                raise WrongModelSpecException(f"Expected key=value, got '{assignment}'")
            try:
                values[key.strip()] = parse_complex(literal)
            except (ValueError, AssertionError) as e:
                raise WrongModelSpecException(str(e)) from e
    return values


def parse_grid(text: str) -> GridSpec:
    parts = text.split(':')
    if len(parts) != 4:
        raise WrongModelSpecException(f"Grid must read axis:min:max:count, got '{text}'")
    axis, start, stop, count = parts
    try:
        return GridSpec(axis.strip(), parse_complex(start), parse_complex(stop), int(count))
    except (ValueError, AssertionError) as e:
        raise WrongModelSpecException(f"Bad grid '{text}': {e}") from e


def check_tolerance(tol: Optional[float]) -> Optional[float]:
    if tol is None:
        return None
    low, high = TOL_RANGE
    if not low <= tol <= high:
        raise WrongModelSpecException(f"Tolerance {tol} outside [{low}, {high}]")
    return tol


# ---------- OUTPUT ----------


def render_json(data) -> str:
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def complex_columns(value: Optional[complex]) -> List:
    if value is None:
        return ['', '']
    return [repr(float(value.real)), repr(float(value.imag))]


# ---------- BASE COMMAND ----------


class PoleskipCommand(BaseCommand):
    """Shared --model/--param/--tol/--out/--format handling.

    Subclasses implement `run(**options)` and return the text to emit.
    """
    requires_system_checks = []
    formats = ('json',)
    model_required = True

    def add_arguments(self, parser):
        parser.add_argument('--model', choices=MODEL_TAGS, required=self.model_required)
        parser.add_argument('--param', action='append', default=[], metavar='KEY=VAL',
                            help='model parameter, repeatable (e.g. --param nu=2)')
        parser.add_argument('--tol', type=float, default=None)
        parser.add_argument('--out', default=None, help='write to a file instead of stdout')
        parser.add_argument('--format', choices=self.formats, default=self.formats[0])

    def model_from(self, options, **extra) -> PotentialModel:
        params = parse_assignments(options['param'])
        params.update({name: value for name, value in extra.items() if value is not None})
        return PotentialModel(options['model'], params)

    def handle(self, *args, **options):
        try:
            check_tolerance(options.get('tol'))
            text = self.run(**options)
        except (BadRequest, ValueError) as e:
            raise CommandError(str(e), returncode=2) from e
        except tuple(EXIT_CODES) as e:
            code = next(code for cls, code in EXIT_CODES.items() if isinstance(e, cls))
            raise CommandError(f"{type(e).__name__}: {e}", returncode=code) from e
        except RuntimeError as e:
            raise CommandError(f"{type(e).__name__}: {e}") from e
        self.emit(text, options.get('out'))

    def emit(self, text: str, out: Optional[str]) -> None:
        if out:
            with open(out, 'w', encoding='utf-8') as stream:
                stream.write(text)
            logger.info("Wrote %s", out)
        else:
            self.stdout.write(text, ending='' if text.endswith('\n') else '\n')

    def run(self, **options) -> str:
        raise NotImplementedError
