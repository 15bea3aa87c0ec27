import functools

import networkx as nx
import pytest

from treeminor.enumeration import enumerate_trees
from treeminor.tree import Tree


def to_nx(T: Tree) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(T.n))
    G.add_edges_from(T.edges)
    return G


def from_nx(G) -> Tree:
    mapping = {v: i for i, v in enumerate(sorted(G.nodes))}
    return Tree(len(mapping), tuple((mapping[u], mapping[v]) for u, v in G.edges))


@functools.lru_cache(maxsize=None)
def trees_of_size(n: int) -> tuple:
    return tuple(enumerate_trees(n))


@pytest.fixture(scope="session")
def small_trees():
    return {n: trees_of_size(n) for n in range(1, 8)}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
