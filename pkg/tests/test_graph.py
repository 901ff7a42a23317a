# Standard Library
import random
import reprlib

# Third Party Library
import networkx as nx
import pytest

# First Party Library
from sumflow.core import (
    CapExceededError,
    Graph,
    GraphStructureError,
    PreconditionError,
)
from sumflow.generators import complete, cycle, path, petersen, star
from sumflow.graph import (
    bipartite_double_cover,
    bipartition,
    bridges,
    components,
    euler_circuit,
    euler_circuits,
    find_odd_cycle,
    independence_number,
    is_balanced,
    is_connected,
    is_tree,
    is_unicyclic,
    regular_degree,
    spanning_tree,
)

# Local Folder
from .utils import C3, C4, C5, K4, P4, STAR3


@pytest.mark.parametrize(
    "n,edges,message",
    [
        (3, [(0, 0)], "loop at vertex 0"),
        (3, [(0, 1), (1, 0)], "parallel edge (0, 1)"),
        (2, [(0, 2)], "edge (0, 2) leaves the range 0..1"),
        (-1, [], "vertex count must be nonnegative, got -1"),
    ],
    ids=reprlib.repr,
)
def test_graph_rejects_non_simple_input(n, edges, message):
    with pytest.raises(PreconditionError) as exc_info:
        Graph(n, edges)

    assert str(exc_info.value) == message


def test_graph_normalizes_and_indexes_edges():
    g = Graph(3, [(2, 1), (0, 2)])
    assert g.edges == ((1, 2), (0, 2))
    assert g.edge_index(2, 0) == 1
    assert g.edge_index(0, 1) is None
    assert g.adjacency(2) == ((1, 0), (0, 1))
    assert g.other(0, 2) == 1
    assert g == Graph(3, [(1, 2), (0, 2)])
    assert g != Graph(3, [(0, 2), (1, 2)])
    assert repr(g) == "Graph(3, [(1, 2), (0, 2)])"


def test_networkx_round_trip_keeps_edge_indices():
    g = Graph(4, [(2, 3), (0, 1), (1, 2)])
    nx_graph = g.to_networkx()
    assert [nx_graph.edges[u, v]["index"] for u, v in g.edges] == [0, 1, 2]
    assert Graph.from_networkx(nx_graph) == Graph(4, [(0, 1), (1, 2), (2, 3)])


def test_edge_subgraph_and_vertex_removal():
    sub, back = K4.edge_subgraph([5, 0])
    assert sub == Graph(4, [(0, 1), (2, 3)])
    assert back == (0, 5)

    rest, vertices, kept = K4.remove_vertices([1])
    assert rest == Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert vertices == (0, 2, 3)
    assert kept == (1, 2, 5)


@pytest.mark.parametrize(
    "g,connected,tree,unicyclic,degree",
    [
        (P4, True, True, False, None),
        (C4, True, False, True, 2),
        (K4, True, False, False, 3),
        (Graph(4, [(0, 1), (2, 3)]), False, False, False, 1),
        (Graph(1), True, True, False, 0),
    ],
    ids=reprlib.repr,
)
def test_structure_predicates(g, connected, tree, unicyclic, degree):
    assert is_connected(g) is connected
    assert is_tree(g) is tree
    assert is_unicyclic(g) is unicyclic
    assert regular_degree(g) == degree


def test_components_are_sorted():
    assert components(Graph(5, [(3, 4), (0, 2)])) == [[0, 2], [1], [3, 4]]


def test_bipartition_and_balance():
    parts = bipartition(P4)
    assert parts is not None
    assert parts.side == (1, 2, 1, 2)
    assert parts.part(2) == (1, 3)
    assert [parts.sign(v) for v in range(4)] == [1, -1, 1, -1]
    assert is_balanced(parts)
    assert not is_balanced(bipartition(STAR3))
    assert not is_balanced(bipartition(C5))


def test_bipartition_requires_connected_graph():
    with pytest.raises(GraphStructureError):
        bipartition(Graph(2))


@pytest.mark.parametrize("g", [C3, C5, K4, petersen()], ids=reprlib.repr)
def test_find_odd_cycle_returns_a_closed_odd_walk(g):
    cycle_edges = find_odd_cycle(g)
    assert cycle_edges is not None
    assert len(cycle_edges) % 2 == 1
    assert len(set(cycle_edges)) == len(cycle_edges)
    degree = {}
    for e in cycle_edges:
        for v in g.edges[e]:
            degree[v] = degree.get(v, 0) + 1
    assert set(degree.values()) == {2}


def test_find_odd_cycle_on_bipartite_graph():
    assert find_odd_cycle(C4) is None


def test_bridges():
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert bridges(g) == frozenset({3, 4})
    assert bridges(C4) == frozenset()


@pytest.mark.parametrize("seed", range(20))
def test_bridges_by_deleting_each_edge(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 10)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = Graph(n, sorted(rng.sample(pairs, min(len(pairs), rng.randint(1, 20)))))
    assert g.m <= 20
    expected = set()
    for e in range(g.m):
        rest = Graph(n, [edge for f, edge in enumerate(g.edges) if f != e])
        if len(components(rest)) > len(components(g)):
            expected.add(e)
    assert bridges(g) == expected


@pytest.mark.parametrize("g", [P4, C5, K4, petersen()], ids=reprlib.repr)
def test_spanning_tree(g):
    tree_edges = spanning_tree(g)
    sub, _ = g.edge_subgraph(tree_edges)
    assert is_tree(sub)


def test_euler_circuit_walks_every_edge_once():
    g = complete(5)
    circuit = euler_circuit(g)
    assert sorted(circuit) == list(range(g.m))
    with pytest.raises(PreconditionError):
        euler_circuit(K4)


def test_euler_circuits_per_component():
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    circuits = euler_circuits(g, range(g.m))
    assert sorted(sorted(c) for c in circuits) == [[0, 1, 2], [3, 4, 5]]


def test_bipartite_double_cover():
    cover = bipartite_double_cover(C3)
    assert cover.graph.n == 6
    assert nx.is_isomorphic(cover.graph.to_networkx(), cycle(6).to_networkx())
    assert cover.lift(1) == (2, 3)
    assert cover.base_edge(3) == 1
    assert cover.top() == (0, 1, 2)


@pytest.mark.parametrize(
    "g,alpha",
    [(C5, 2), (K4, 1), (petersen(), 4), (star(5), 5), (path(7), 4)],
    ids=reprlib.repr,
)
def test_independence_number(g, alpha):
    assert independence_number(g) == alpha


def test_independence_number_cap():
    with pytest.raises(CapExceededError) as exc_info:
        independence_number(path(25))

    assert exc_info.value.cap == 24
    with pytest.raises(CapExceededError):
        independence_number(path(6), cap=5)
