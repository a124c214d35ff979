import random
from pathlib import Path

import pytest

from src.core.config import reload_settings
from src.graph.graph import Graph, from_edges

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(autouse=True)
def quiet_settings(monkeypatch):
    """Run from the repo root with progress bars off."""
    monkeypatch.chdir(ROOT)
    settings = reload_settings()
    settings.classify.progress = False
    yield settings
    reload_settings()


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
