"""Number formatting shared by the writers."""

import math

from pa_net.config.pa_settings import RUNTIME


def fmt_float(value) -> str:
    """Fixed significant-digit rendering; NaN and inf spelled out."""
    if value is None:
        return ''
    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return RUNTIME.float_format % value


def round_floats(obj):
    """Recursively render floats in a JSON-able structure with the fixed precision."""
    if isinstance(obj, float):
        return float(fmt_float(obj)) if math.isfinite(obj) else fmt_float(obj)
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    return obj
