from typing import Dict

from django.core.exceptions import BadRequest
from django.http.response import HttpResponse, HttpResponseBadRequest
from django.http.request import QueryDict

from rest_framework import status, viewsets
from rest_framework.response import Response

from .analytic import describe_point, pole_skip_catalog, s_function
from .holography import matsubara_dictionary
from .locator import find_skip, slope_probe
from .serializers import (
    CatalogSerializer, MatsubaraSerializer, PoleSkipPointSerializer, SlopeReportSerializer,)
from .types import PotentialModel
from .utils.exceptions import WrongModelSpecException
from .utils.relations import parse_complex


RESERVED = ('model', 'n_max', 'radius', 'format')


def model_from_query(query: QueryDict) -> PotentialModel:
    if 'model' not in query:
        raise WrongModelSpecException("Query needs 'model'")
    params: Dict[str, complex] = {}
    for key, value in query.items():
        if key in RESERVED:
            continue
        try:
            params[key] = parse_complex(value)
        except (ValueError, AssertionError) as e:
            raise WrongModelSpecException(f"'{key}': {e}") from e
    return PotentialModel(query['model'], params)


def point_from_query(model: PotentialModel, query: QueryDict):
    param_axis, wave_axis = model.axes
    if model.get(param_axis) is None or model.get(wave_axis) is None:
        raise WrongModelSpecException(f"Query needs '{param_axis}' and '{wave_axis}'")
    return model.get(param_axis), model.get(wave_axis)


def numeric_failure(e: RuntimeError) -> Response:
    return Response({'error': type(e).__name__, 'detail': str(e)},
                    status=status.HTTP_422_UNPROCESSABLE_ENTITY)


# ---------- CATALOG API ----------


class CatalogViewset(viewsets.ViewSet):
    def list(self, request, *args, **kwargs) -> HttpResponse:
        try:
            model = model_from_query(request.query_params)
            n_max = int(request.query_params.get('n_max', 3))
            points = pole_skip_catalog(model, n_max)
        except (BadRequest, ValueError) as e:
            return HttpResponseBadRequest(e)
        return Response(CatalogSerializer({'model': model.tag, 'points': points}).data)


# ---------- LOCATE API ----------


class LocateViewset(viewsets.ViewSet):
    def list(self, request, *args, **kwargs) -> HttpResponse:
        try:
            model = model_from_query(request.query_params)
            point = find_skip(model, point_from_query(model, request.query_params))
        except (BadRequest, ValueError) as e:
            return HttpResponseBadRequest(e)
        except RuntimeError as e:
            return numeric_failure(e)
        return Response(PoleSkipPointSerializer(point).data)


# ---------- SLOPE API ----------


class SlopeViewset(viewsets.ViewSet):
    def list(self, request, *args, **kwargs) -> HttpResponse:
        try:
            model = model_from_query(request.query_params)
            param, wave = point_from_query(model, request.query_params)
            radius = request.query_params.get('radius')
            fit = slope_probe(s_function(model), (param, wave),
                              radius=None if radius is None else float(radius))
        except (BadRequest, ValueError) as e:
            return HttpResponseBadRequest(e)
        except RuntimeError as e:
            return numeric_failure(e)
        point = describe_point(model, param, wave)
        return Response(SlopeReportSerializer({'point': point, 'fit': fit}).data)


# ---------- MATSUBARA API ----------


class MatsubaraViewset(viewsets.ViewSet):
    def list(self, request, *args, **kwargs) -> HttpResponse:
        try:
            n = int(request.query_params.get('n', ''))
            T = float(request.query_params.get('T', ''))
            omega, nu = matsubara_dictionary(n, T)
        except (BadRequest, ValueError) as e:
            return HttpResponseBadRequest(e)
        return Response(MatsubaraSerializer({'n': n, 'T': T, 'omega': omega, 'nu': nu}).data)
