"""CSV tables with a '#'-prefixed JSON provenance line."""

import io
import json
from typing import Any

import pandas as pd

from pa_net.config.pa_settings import RUNTIME
from pa_net.config.run_config import RunConfig
from pa_net.writers.base_writer import BaseWriter


class CsvWriter(BaseWriter):

    suffix = '.csv'

    def render(self, config: RunConfig, payload: Any) -> str:
        frame = payload if isinstance(payload, pd.DataFrame) else pd.DataFrame(payload)
        buf = io.StringIO()
        buf.write(config.to_header() + '\n')
        frame.to_csv(buf, index=False, float_format=RUNTIME.float_format, lineterminator='\n')
        return buf.getvalue()


def read_table(path) -> pd.DataFrame:
    """Read a table written by CsvWriter (the header line is skipped)."""
    return pd.read_csv(path, skiprows=1)


def read_header(path) -> dict:
    with open(path, 'r', encoding='utf-8') as f:
        first = f.readline()
    return json.loads(first[2:]) if first.startswith('# ') else {}
