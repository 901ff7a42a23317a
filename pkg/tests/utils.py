# Standard Library
import random

from fractions import Fraction
from typing import Iterator, Optional, Sequence

# Third Party Library
import networkx as nx

# First Party Library
from sumflow.core import Graph
from sumflow.labels import LabelSet, flow_violation
from sumflow.solver import as_gamma

K4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
C3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
C6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
STAR3 = Graph(4, [(0, 1), (0, 2), (0, 3)])


def assert_flow(
    g: Graph,
    flow: Sequence[Fraction],
    gamma: object = 1,
    label_set: Optional[LabelSet] = None,
) -> None:
    violation = flow_violation(g, tuple(flow), as_gamma(g, gamma), label_set)
    assert violation is None, violation


def connected_atlas(min_n: int = 1, max_n: int = 7) -> Iterator[Graph]:
    """
    Every connected graph with ``min_n..max_n`` vertices, up to isomorphism.
    """
    for nx_graph in nx.graph_atlas_g():
        n = nx_graph.number_of_nodes()
        if min_n <= n <= max_n and nx.is_connected(nx_graph):
            yield Graph.from_networkx(nx_graph)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    code = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(code))


def random_connected(n: int, extra: int, rng: random.Random) -> Graph:
    """
    A random tree on ``n`` vertices plus up to ``extra`` random chords.
    """
    tree = random_tree(n, rng)
    edges = set(tree.edges)
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def random_bipartite(a: int, b: int, extra: int, rng: random.Random) -> Graph:
    """
    A connected bipartite graph with sides ``0..a-1`` and ``a..a+b-1``.
    """
    edges = set()
    order = list(range(a + b))
    rng.shuffle(order)
    left = [v for v in order if v < a]
    right = [v for v in order if v >= a]
    # a spanning caterpillar alternating between the sides
    for i, v in enumerate(right):
        edges.add((left[i % a], v))
    for i, u in enumerate(left[1:], start=1):
        edges.add((u, right[(i - 1) % b]))
    for _ in range(extra):
        edges.add((rng.randrange(a), a + rng.randrange(b)))
    return Graph(a + b, sorted(edges))
