"""Shared fixtures for the pa_net test suite."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[3]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from pa_net.graph.degree_state import DegreeState, ModelParams  # noqa: E402


@pytest.fixture
def base_params() -> ModelParams:
    """(p, delta_in, delta_out) = (0.2, 1, 1), the replication setting of the early-vs-late study."""
    return ModelParams(p=0.2, delta_in=1.0, delta_out=1.0)


@pytest.fixture
def poisson_params() -> ModelParams:
    return ModelParams(p=0.2, delta_in=1.0, delta_out=1.0, lam=10.0)


@pytest.fixture
def facebook_params() -> ModelParams:
    return ModelParams(p=0.066, delta_in=21.42, delta_out=22.66, lam=46.54)


@pytest.fixture
def two_node_state() -> DegreeState:
    """I = (2, 0), O = (1, 1), edge_total = 2."""
    state = DegreeState()
    state.add_node_with_edge(1)
    return state


@pytest.fixture
def small_edge_file(tmp_path) -> Path:
    """Four days of edges in UTC; day 3 has a single edge."""
    day = 86400
    t0 = 1_136_073_600  # 2006-01-01 00:00 UTC
    rows = [
        (1, 2, t0 + 100), (3, 1, t0 + 200), (2, 1, t0 + 400),
        (4, 1, t0 + day + 50), (1, 4, t0 + day + 150), (5, 2, t0 + day + 250), (2, 5, t0 + day + 450),
        (6, 1, t0 + 2 * day + 1000),
        (7, 6, t0 + 3 * day + 10), (1, 7, t0 + 3 * day + 20), (3, 2, t0 + 3 * day + 40),
    ]
    lines = ["% asym positive", "% 11 7 7"] + [f"{s} {d} 1 {t}" for s, d, t in rows]
    path = tmp_path / "edges.txt"
    path.write_text("\n".join(lines) + "\n")
    return path
