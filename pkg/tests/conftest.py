import pytest
from hypothesis import settings

from stokesgraph.config import SectorConfig
from stokesgraph.enumeration import enum_standard_graphs
from stokesgraph.graph import Ray, StandardGraph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

CORPUS = [SectorConfig(5, {0, 2}), SectorConfig(6, {0, 3}), SectorConfig(6, {0, 2, 4})]


def mixed_graph() -> StandardGraph:
    """Two I-structures, a V-structure and a Y-structure on three junctions."""
    cfg = SectorConfig(6, {0, 3})
    u, v, y = 0, 1, 2
    return StandardGraph(
        cfg,
        {
            u: [y, v, Ray(5)],
            v: [u, Ray(2), Ray(3), Ray(4)],
            y: [u, Ray(0), Ray(1)],
        },
    )


@pytest.fixture
def mixed():
    return mixed_graph()


@pytest.fixture(scope="session")
def corpus():
    return {cfg: enum_standard_graphs(cfg, 1) for cfg in CORPUS}


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
