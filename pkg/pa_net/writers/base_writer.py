"""
Abstract base class for all output writers.
Ensures every writer renders deterministic text and writes it to disk.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

from pa_net.config.run_config import RunConfig


class BaseWriter(ABC):

    suffix = ''

    @abstractmethod
    def render(self, config: RunConfig, payload: Any) -> str:
        """
        Render one output document.

        Args:
            config: Run configuration embedded as provenance
            payload: Table or result object to serialize

        Returns:
            Full file text, identical for identical inputs
        """
        pass

    def write(self, path: Path, config: RunConfig, payload: Any) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(self.render(config, payload))
        return path
