from pathlib import Path

import pytest
from hypothesis import settings

DATA = Path(__file__).parent / "data"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def census_lines(name: str) -> list[str]:
    return [line.strip() for line in (DATA / name).read_text().splitlines() if line.strip()]


@pytest.fixture(scope="session")
def small_graphs():
    """All graphs on 1..7 vertices, graph6 from networkx."""
    from omnitonal.graph import parse_graph6

    return [parse_graph6(s) for s in census_lines("graphs_n_le_7.g6")]


@pytest.fixture(scope="session")
def trees():
    from omnitonal.graph import parse_graph6

    return [parse_graph6(s) for s in census_lines("trees_n_le_9.g6")]


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
