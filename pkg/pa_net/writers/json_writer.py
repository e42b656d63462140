"""JSON reports: the run configuration plus a result object."""

import json
from typing import Any

import numpy as np

from pa_net.config.run_config import RunConfig
from pa_net.utils.format_utils import round_floats
from pa_net.writers.base_writer import BaseWriter


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


class JsonWriter(BaseWriter):

    suffix = '.json'

    def render(self, config: RunConfig, payload: Any) -> str:
        doc = {'config': config.to_dict(), 'result': round_floats(_plain(payload))}
        return json.dumps(doc, indent=2, sort_keys=True) + '\n'
