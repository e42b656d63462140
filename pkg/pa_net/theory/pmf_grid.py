"""Tabulated probabilities over (m, l) degree pairs or a single degree axis."""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd


@dataclass
class PmfGrid:
    values: np.ndarray
    m_values: np.ndarray
    l_values: Optional[np.ndarray] = None
    overflow: float = 0.0
    kind: str = 'joint'

    def get(self, m: int, l: Optional[int] = None) -> float:
        i = int(m - self.m_values[0])
        if self.l_values is None:
            return float(self.values[i])
        j = int(l - self.l_values[0])
        return float(self.values[i, j])

    def total(self) -> float:
        return float(self.values.sum())

    def to_frame(self) -> pd.DataFrame:
        """Long format: m[, l], probability."""
        if self.l_values is None:
            return pd.DataFrame({'m': self.m_values, 'probability': self.values})
        mm, ll = np.meshgrid(self.m_values, self.l_values, indexing='ij')
        return pd.DataFrame({'m': mm.ravel(), 'l': ll.ravel(), 'probability': self.values.ravel()})


def total_variation(a: PmfGrid, b: PmfGrid) -> float:
    """Half the L1 distance over the cells both grids share."""
    if not (np.array_equal(a.m_values, b.m_values)
            and ((a.l_values is None and b.l_values is None)
                 or np.array_equal(a.l_values, b.l_values))):
        raise ValueError("grids cover different cells")
    return 0.5 * float(np.abs(a.values - b.values).sum())
