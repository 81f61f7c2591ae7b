from typing import Any

from django.conf import settings


DEFAULTS = {
    'POLE_TOL': 1e-12,
    'CONNECTION_TOL': 1e-10,
    'RICHARDSON_EPS': 1e-6,
    'HYP2F1_SERIES_RADIUS': 0.6,
    'NEWTON_TOL': 1e-12,
    'NEWTON_MAX_ITER': 50,
    'PROBE_RADIUS': 1e-3,
    'PROBE_ANGLES': 16,
    'FIT_RESIDUAL': 1e-2,
    'WINDING_FLOOR': 1e-13,
    'CANDIDATE_WINDOW': 10.0,
    'CANDIDATE_GRID': 40,
    'ODE_RTOL': 1e-12,
    'ODE_ATOL': 1e-30,
    'TAIL_EPS': 1e-12,
    'TAIL_SPAN': 40.0,
    'K_IM_MAX': 1.0,
    'X_MATCH': 1.0,
    'WRONSKIAN_DRIFT': 1e-6,
    'SERIES_START': 0.05,
    'SERIES_ORDER': 16,
    'GRID_MAX': 10**6,
}


def setting(name: str) -> Any:
    configured = getattr(settings, 'POLESKIP', {}) if settings.configured else {}
    if name in configured:
        return configured[name]
    return DEFAULTS[name]


def pick(value: Any, name: str) -> Any:
    return setting(name) if value is None else value
