"""
Run Configuration
Validated parameter record of one CLI invocation, serialized into the
header of every output file.
"""

import json
import hashlib
from dataclasses import dataclass, field
from typing import Any, Dict

from pa_net import __version__
from pa_net.errors import ConfigError

COMMANDS = ('simulate', 'theory', 'fit', 'compare', 'verify')


@dataclass
class RunConfig:
    command: str
    settings: Dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    def validate(self) -> 'RunConfig':
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command '{self.command}'")
        seed = self.settings.get('seed')
        if seed is not None and not (isinstance(seed, int) and 0 <= seed < 2 ** 64):
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
        reps = self.settings.get('reps')
        if reps is not None and (not isinstance(reps, int) or reps < 1):
            raise ConfigError(f"reps must be a positive integer, got {reps!r}")
        steps = self.settings.get('steps')
        if steps is not None and (not isinstance(steps, int) or steps < 0):
            raise ConfigError(f"steps must be a non-negative integer, got {steps!r}")
        try:
            json.dumps(self.settings, sort_keys=True)
        except TypeError as e:
            raise ConfigError(f"settings are not serializable: {e}") from e
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {'command': self.command, 'settings': self.settings, 'version': self.version}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(',', ':'))

    def to_header(self) -> str:
        return '# ' + self.to_json()

    @property
    def config_hash(self) -> str:
        return hashlib.md5(self.to_json().encode()).hexdigest()

    def derive(self, **extra) -> 'RunConfig':
        """Copy with extra settings (e.g. the replication index of one output)."""
        merged = dict(self.settings)
        merged.update(extra)
        return RunConfig(self.command, merged, self.version)
