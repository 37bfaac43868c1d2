"""Answer set solving for vertiport traffic scenarios."""

import json

from ._uamasp import Error, embedded_program, format_program, ground_text, scenario_names, version
from . import _uamasp

__all__ = [
    "Error",
    "Session",
    "embedded_program",
    "format_program",
    "ground_text",
    "network",
    "run_scenario",
    "scenario_names",
    "solve",
    "version",
]

__version__ = version()


def solve(source, max_models=1, pins=()):
    """Grounds and solves program text; 0 enumerates every model."""
    return json.loads(_uamasp.solve_json(source, max_models, list(pins)))


def run_scenario(name, pins=(), max_models=1, validate=False):
    """Report for a built-in scenario, as produced by `uamasp scenario run --json`."""
    return json.loads(_uamasp.scenario_json(name, list(pins), max_models, validate))


def network():
    """Vertiports, corridors, coverage bands and ownership of the environment."""
    return json.loads(_uamasp.network_json())["network"]


class Session:
    """Manager/UATM conversation over a built-in scenario."""

    def __init__(self, scenario, pins=()):
        self._session = _uamasp.Session(scenario, list(pins))

    @property
    def scenario(self):
        return self._session.scenario

    def report_congestion(self, from_vp, to_vp):
        return json.loads(self._session.report_congestion_json(from_vp, to_vp))

    def clear_corridor(self, from_vp, to_vp, behind):
        return json.loads(self._session.clear_corridor_json(from_vp, to_vp, behind))

    def history(self):
        return json.loads(self._session.history_json())

    def agents(self):
        return json.loads(self._session.agents_json())

    def repl(self, line):
        return self._session.repl(line)
