"""
Common pytest fixtures for testing pydilworth.

This module provides small named digraphs, tight limits that keep the
exhaustive procedures fast, and helpers for writing graph files into a
temporary folder for the command-line tests.
"""

import os
import sys

import numpy as np
import pytest

# Add parent directory to path to import the library
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from pydilworth.base import Limits  # noqa: E402
from pydilworth.digraph import Digraph, write_graph  # noqa: E402
from pydilworth.families import generate_family  # noqa: E402


@pytest.fixture(autouse=True)
def _no_budget_override(monkeypatch):
    """Keep a user's PYDILWORTH_BUDGET from leaking into the tests."""
    monkeypatch.delenv("PYDILWORTH_BUDGET", raising=False)


@pytest.fixture
def limits():
    """Default limits with a budget generous enough that small solves are proved optimal."""
    return Limits(budget_seconds=120.0)


@pytest.fixture
def single_edge():
    return generate_family("L")


@pytest.fixture
def c5():
    """The cyclically oriented 5-cycle."""
    return generate_family("C", 5)


@pytest.fixture
def c5_sym():
    """The undirected 5-cycle as a symmetric digraph."""
    return generate_family("Csym", 5)


@pytest.fixture
def t5():
    return generate_family("T", 5)


@pytest.fixture
def a5():
    return generate_family("A5")


@pytest.fixture
def a5c():
    return generate_family("A5c")


@pytest.fixture
def bollobas_graph():
    return generate_family("F")


@pytest.fixture
def collision():
    """Channel where letters 0 and 1 can both come out as 2."""
    return generate_family("V")


@pytest.fixture
def random_digraphs():
    """Seeded random digraphs on 2..7 vertices with mixed edge densities.

    Returns:
        A list of ``Digraph`` instances, the same on every run.
    """
    rng = np.random.default_rng(20240611)
    graphs = []
    for n in range(2, 8):
        for density in (0.2, 0.4, 0.6):
            matrix = rng.random((n, n)) < density
            np.fill_diagonal(matrix, False)
            graphs.append(Digraph.from_matrix(matrix))
    return graphs


@pytest.fixture(scope="session")
def oracle_digraphs():
    """Two hundred seeded random digraphs on 2..8 vertices.

    Vertex counts cycle through 2..8 and densities through five levels, so
    every size appears with sparse and dense edge sets.
    """
    rng = np.random.default_rng(20240612)
    densities = (0.15, 0.3, 0.45, 0.6, 0.75)
    graphs = []
    for i in range(200):
        n = 2 + i % 7
        matrix = rng.random((n, n)) < densities[(i // 7) % len(densities)]
        np.fill_diagonal(matrix, False)
        graphs.append(Digraph.from_matrix(matrix))
    return graphs


@pytest.fixture
def graph_file(tmp_path):
    """Factory writing a digraph to a text file under ``tmp_path``.

    Returns:
        A function ``(G, name) -> path``.
    """

    def write(G: Digraph, name: str = "graph.txt") -> str:
        path = str(tmp_path / name)
        write_graph(G, path)
        return path

    return write
