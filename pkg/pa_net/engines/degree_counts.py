"""Empirical joint degree frequencies of a simulated graph."""

import numpy as np

from pa_net.graph.degree_state import DegreeState
from pa_net.theory.pmf_grid import PmfGrid


def joint_degree_counts(state: DegreeState, m_max: int, l_max: int) -> PmfGrid:
    """Frequency of (I_v, O_v) = (m, l) over m in 0..m_max, l in 1..l_max; the rest is overflow."""
    ins = state.in_degrees
    outs = state.out_degrees
    inside = (ins <= m_max) & (outs >= 1) & (outs <= l_max)
    counts = np.zeros((m_max + 1, l_max), dtype=np.int64)
    np.add.at(counts, (ins[inside], outs[inside] - 1), 1)
    n = state.node_count
    values = counts / n
    return PmfGrid(
        values=values,
        m_values=np.arange(m_max + 1),
        l_values=np.arange(1, l_max + 1),
        overflow=float(n - counts.sum()) / n,
        kind='empirical',
    )


def node_degree_at(state: DegreeState, node_id: int) -> tuple:
    """(in, out) of one node, or (0, 0) when it does not exist yet."""
    if node_id > state.node_count:
        return 0, 0
    return state.node_degree(node_id)
