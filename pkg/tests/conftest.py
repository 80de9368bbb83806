"""
Pytest configuration and fixtures for dbs_rank tests
"""
import random
from pathlib import Path

import networkx as nx
import pytest

from dbs_rank.aaf import ArgFramework, load_framework, union

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    """Directory holding the golden framework and automaton files."""
    return DATA_DIR


@pytest.fixture(scope="session")
def fig1() -> ArgFramework:
    return load_framework(DATA_DIR / "fig1.apx")


@pytest.fixture(scope="session")
def fig2() -> ArgFramework:
    return load_framework(DATA_DIR / "fig2.apx")


@pytest.fixture(scope="session")
def fig3() -> ArgFramework:
    return load_framework(DATA_DIR / "fig3.apx")


@pytest.fixture(scope="session")
def fig5() -> ArgFramework:
    return load_framework(DATA_DIR / "fig5.apx")


@pytest.fixture(scope="session")
def joint(fig2, fig3) -> ArgFramework:
    """Union of fig2 and fig3 (14 arguments, a..g then h..o)."""
    return union(fig2, fig3)


def random_framework(rng: random.Random, max_arguments: int, p: float) -> ArgFramework:
    """gnp digraph on 1..max_arguments vertices plus self-attacks, each with probability p."""
    n = rng.randint(1, max_arguments)
    graph = nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 32), directed=True)
    names = [f"v{i}" for i in range(n)]
    attacks = {(names[a], names[b]) for a, b in graph.edges()}
    attacks |= {(x, x) for x in names if rng.random() < p}
    return ArgFramework(tuple(names), frozenset(attacks))


@pytest.fixture
def make_random_framework():
    """Factory fixture: make_random_framework(rng, max_arguments, p)."""
    return random_framework


@pytest.fixture
def clean_env(monkeypatch):
    """Remove DBS_* variables so settings fall back to their defaults."""
    for name in (
        "DBS_LOG_LEVEL",
        "DBS_LOG_FORMAT",
        "DBS_WALK_ENUMERATION_CAP",
        "DBS_RESTRICT_TO_ANCESTORS",
        "DBS_DEFAULT_FORMAT",
    ):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch
