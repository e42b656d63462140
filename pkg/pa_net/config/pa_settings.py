"""
Centralized Configuration for pa_net
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from dotenv import load_dotenv

from pa_net.errors import ConfigError

BASE_DIR = Path(__file__).resolve().parents[2]
ENV_PATH = BASE_DIR / '.env'

if ENV_PATH.exists():
    load_dotenv(ENV_PATH)
else:
    load_dotenv()

PA_SETTINGS_DEBUG = os.getenv('PA_SETTINGS_DEBUG', '0') == '1'


def get_int(key: str, default: int) -> int:
    """Read a positive integer from the environment."""
    val = os.getenv(key)
    if val is None or not val.strip():
        return default
    if not val.strip().isdigit() or int(val) < 1:
        raise ConfigError(f"{key} must be a positive integer, got {val!r}")
    return int(val)


@dataclass
class RuntimeConfig:
    threads: int = field(default_factory=lambda: get_int('PA_NET_THREADS', os.cpu_count() or 1))
    enum_max_steps: int = field(default_factory=lambda: get_int('PA_NET_ENUM_MAX_STEPS', 4))
    float_digits: int = 12
    output_dir: Path = field(default_factory=lambda: Path(os.getenv('PA_NET_OUTPUT_DIR', './pa_net_output')))
    log_dir: Path = field(default_factory=lambda: Path(os.getenv('PA_NET_LOG_DIR', str(BASE_DIR / 'pa_net' / 'logs'))))

    def __post_init__(self):
        if self.threads < 1:
            raise ConfigError("PA_NET_THREADS must be at least 1")
        if self.enum_max_steps < 1:
            raise ConfigError("PA_NET_ENUM_MAX_STEPS must be at least 1")

    @property
    def float_format(self) -> str:
        return f"%.{self.float_digits}g"


# Singleton Instance
RUNTIME = RuntimeConfig()

if PA_SETTINGS_DEBUG:
    print("--- CONFIG LOADED ---")
    print(f"PA_NET_THREADS: {RUNTIME.threads} PA_NET_ENUM_MAX_STEPS: {RUNTIME.enum_max_steps}")
    print(f"PA_NET_OUTPUT_DIR: {RUNTIME.output_dir} PA_NET_LOG_DIR: {RUNTIME.log_dir}")
