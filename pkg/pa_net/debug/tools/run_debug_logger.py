"""
Debug logger for simulation, theory, fitting and oracle runs.
Component flags come from the environment (PA_SIM_DEBUG=1 and friends);
records go to stderr with a [TAG] prefix, snapshots go to JSON files
under the configured log directory.
"""

import os
import sys
import json
import logging
from typing import Any, Dict

import numpy as np

from pa_net.config.pa_settings import RUNTIME

COMPONENTS = ('sim', 'theory', 'fit', 'ingest', 'oracle', 'pipeline')


def _to_jsonable(obj: Any) -> Any:
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    return str(obj)


class RunDebugLogger:
    """Env-driven debug switches plus a tagged stderr logger."""

    def __init__(self):
        self._logger = logging.getLogger('pa_net')
        if not self._logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter('%(message)s'))
            self._logger.addHandler(handler)
        self._logger.propagate = False
        self.refresh()

    def refresh(self):
        """Re-read the component flags from the environment."""
        for component in COMPONENTS:
            flag = os.getenv(f'PA_{component.upper()}_DEBUG', '0') == '1'
            setattr(self, f'{component}_debug', flag)
        any_on = any(getattr(self, f'{c}_debug') for c in COMPONENTS)
        self._logger.setLevel(logging.DEBUG if any_on else logging.WARNING)

    def enabled(self, component: str) -> bool:
        return getattr(self, f'{component}_debug', False)

    def log(self, component: str, message: str, *args):
        """Emit a tagged debug record when the component flag is on."""
        if self.enabled(component):
            self._logger.debug(f"[{component.upper()}] " + message, *args)

    def warn(self, component: str, message: str, *args):
        self._logger.warning(f"[{component.upper()}] " + message, *args)

    def log_snapshot(self, component: str, name: str, data: Dict[str, Any]):
        """Write a JSON snapshot of intermediate data for one component."""
        if not self.enabled(component):
            return
        target_dir = RUNTIME.log_dir / component
        target_dir.mkdir(parents=True, exist_ok=True)
        path = target_dir / f"{name}.json"
        with open(path, 'w') as f:
            json.dump(data, f, indent=2, default=_to_jsonable)
        self.log(component, "snapshot written: %s", path)


debug_logger = RunDebugLogger()
