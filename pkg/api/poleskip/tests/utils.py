import json
from io import StringIO
from typing import Iterable, Set, Tuple

from django.core.management import call_command

from ..types import PoleSkipPoint, PotentialModel


def create_test_model(tag: str, **params) -> PotentialModel:
    return PotentialModel(tag, params)


def create_test_point_set(points: Iterable[PoleSkipPoint], digits: int = 6) -> Set[Tuple[float, ...]]:
    return {rounded(point.param, point.k, digits=digits) for point in points}


def rounded(*values: complex, digits: int = 6) -> Tuple[float, ...]:
    result = []
    for value in values:
        value = complex(value)
        result += [round(value.real, digits) + 0.0, round(value.imag, digits) + 0.0]
    return tuple(result)


def run_test_command(name: str, *args) -> str:
    out = StringIO()
    call_command(name, *args, stdout=out)
    return out.getvalue()


def run_test_command_json(name: str, *args) -> dict:
    return json.loads(run_test_command(name, *args))


class ComplexAssertions:
    def assertComplexAlmostEqual(self, first, second, tol: float = 1e-10, msg: str = None):
        first, second = complex(first), complex(second)
        scale = max(1.0, abs(second))
        if abs(first - second) > tol * scale:
            self.fail(msg or f"{first} != {second} within {tol} (scale {scale})")
