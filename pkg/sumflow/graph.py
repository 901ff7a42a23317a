"""
==========================================
:mod:`graph` -- Structural graph utilities
==========================================

Connectivity, bipartiteness, odd cycles, bridges, spanning trees,
Euler circuits, the bipartite double cover and the independence number.
"""
# Standard Library
import logging

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

# Third Party Library
import networkx as nx

from typing_extensions import Final

# Local Folder
from .core import (
    Bipartition,
    CapExceededError,
    Graph,
    GraphStructureError,
    PreconditionError,
)

logger = logging.getLogger(__name__)

INDEPENDENCE_CAP: Final = 24


def components(g: Graph) -> List[List[int]]:
    """
    Connected components, each sorted, ordered by their smallest vertex.

    >>> components(Graph(4, [(0, 2)]))
    [[0, 2], [1], [3]]
    """
    seen = [False] * g.n
    result = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        component = []
        while queue:
            v = queue.popleft()
            component.append(v)
            for w, _ in g.adjacency(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        result.append(sorted(component))
    return result


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def require_connected(g: Graph) -> None:
    """
    :raises ~sumflow.core.GraphStructureError: ``g`` is disconnected or empty.
    """
    if not is_connected(g):
        raise GraphStructureError("graph must be connected")


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def is_unicyclic(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n


def regular_degree(g: Graph) -> Optional[int]:
    """
    The common degree of a regular graph, ``None`` otherwise.
    """
    degrees = set(g.degrees())
    if len(degrees) != 1:
        return None
    return degrees.pop()


def bipartition(g: Graph) -> Optional[Bipartition]:
    """
    Two-colour a connected graph, vertex 0 on side 1.

    >>> bipartition(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])).side
    (1, 2, 1, 2)
    >>> bipartition(Graph(3, [(0, 1), (1, 2), (0, 2)])) is None
    True

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    require_connected(g)
    try:
        colour = nx.bipartite.color(g.to_networkx())
    except nx.NetworkXError:
        return None

    return Bipartition(tuple(1 if colour[v] == colour[0] else 2 for v in range(g.n)))


def is_balanced(parts: Optional[Bipartition]) -> bool:
    return parts is not None and parts.balanced


def _bfs_tree(g: Graph, root: int = 0) -> Tuple[List[int], List[int], List[int]]:
    depth = [-1] * g.n
    parent = [-1] * g.n
    parent_edge = [-1] * g.n
    depth[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, e in g.adjacency(v):
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                parent[w] = v
                parent_edge[w] = e
                queue.append(w)
    return depth, parent, parent_edge


def find_odd_cycle(g: Graph) -> Optional[List[int]]:
    """
    A simple odd cycle as edge indices in cyclic order, ``None`` if bipartite.

    >>> find_odd_cycle(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    [0, 1, 2]

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    require_connected(g)
    depth, parent, parent_edge = _bfs_tree(g)
    for e, (u, v) in enumerate(g.edges):
        if depth[u] != depth[v]:
            continue

        # climb to the common ancestor; both sides have equal length
        left: List[int] = []
        right: List[int] = []
        a, b = u, v
        while a != b:
            left.append(parent_edge[a])
            right.append(parent_edge[b])
            a, b = parent[a], parent[b]
        return left[::-1] + [e] + right
    return None


def bridges(g: Graph) -> FrozenSet[int]:
    """
    Edges whose removal disconnects their component.

    >>> sorted(bridges(Graph(3, [(0, 1), (1, 2)])))
    [0, 1]
    """
    nx_graph = g.to_networkx()
    return frozenset(nx_graph.edges[u, v]["index"] for u, v in nx.bridges(nx_graph))


def spanning_tree(g: Graph) -> FrozenSet[int]:
    """
    Depth-first spanning tree from vertex 0, neighbours in edge index order.

    >>> sorted(spanning_tree(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])))
    [0, 1, 2]

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    require_connected(g)
    nx_graph = g.to_networkx()
    return frozenset(
        nx_graph.edges[u, v]["index"] for u, v in nx.dfs_edges(nx_graph, source=0)
    )


def _circuit_edges(g: Graph, edge_ids: Iterable[int], source: int) -> List[int]:
    nx_graph = nx.Graph()
    for e in edge_ids:
        u, v = g.edges[e]
        nx_graph.add_edge(u, v, index=e)
    return [
        nx_graph.edges[u, v]["index"]
        for u, v in nx.eulerian_circuit(nx_graph, source=source)
    ]


def euler_circuit(g: Graph) -> List[int]:
    """
    Closed walk from vertex 0 using every edge once, as edge indices.

    >>> sorted(euler_circuit(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])))
    [0, 1, 2, 3]

    :raises ~sumflow.core.PreconditionError: a vertex has odd degree.
    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    require_connected(g)
    odd = [v for v, d in enumerate(g.degrees()) if d % 2]
    if odd:
        raise PreconditionError(f"vertex {odd[0]} has odd degree")
    if g.m == 0:
        return []
    return _circuit_edges(g, range(g.m), 0)


def euler_circuits(g: Graph, edge_ids: Iterable[int]) -> List[List[int]]:
    """
    One Euler circuit per nontrivial component of the spanning subgraph
    given by ``edge_ids``; every degree in it must be even.
    """
    sub, back = g.edge_subgraph(edge_ids)
    circuits = []
    for component in components(sub):
        if len(component) < 2:
            continue
        members = set(component)
        local = [e for e, (u, _) in enumerate(sub.edges) if u in members]
        circuits.append([back[e] for e in _circuit_edges(sub, local, component[0])])
    return circuits


@dataclass(frozen=True)
class DoubleCover:
    """
    Bipartite double cover: ``x_i = i`` and ``y_i = n + i``.
    Base edge ``e = {u, v}`` with ``u < v`` lifts to cover edges
    ``2e = {x_u, y_v}`` and ``2e + 1 = {x_v, y_u}``.
    """

    graph: Graph
    base_n: int

    def lift(self, e: int) -> Tuple[int, int]:
        return 2 * e, 2 * e + 1

    def base_edge(self, cover_edge: int) -> int:
        return cover_edge // 2

    def top(self) -> Tuple[int, ...]:
        return tuple(range(self.base_n))


def bipartite_double_cover(g: Graph) -> DoubleCover:
    """
    >>> cover = bipartite_double_cover(Graph(2, [(0, 1)]))
    >>> cover.graph.edges
    ((0, 3), (1, 2))
    """
    pairs = []
    for u, v in g.edges:
        pairs.append((u, g.n + v))
        pairs.append((v, g.n + u))
    return DoubleCover(Graph(2 * g.n, pairs), g.n)


def independence_number(g: Graph, cap: int = INDEPENDENCE_CAP) -> int:
    """
    Exact independence number, as the maximum clique of the complement.

    >>> independence_number(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]))
    2

    :raises ~sumflow.core.CapExceededError: more than ``cap`` vertices.
    """
    if g.n > cap:
        raise CapExceededError("independence number vertex count", cap)
    if g.n == 0:
        return 0
    clique, size = nx.max_weight_clique(nx.complement(g.to_networkx()), weight=None)
    logger.debug("independence number %d, witness %s", size, sorted(clique))
    return int(size)


def vertex_component_map(g: Graph) -> Dict[int, int]:
    return {v: i for i, component in enumerate(components(g)) for v in component}


__all__ = (
    "DoubleCover",
    "INDEPENDENCE_CAP",
    "bipartite_double_cover",
    "bipartition",
    "bridges",
    "components",
    "euler_circuit",
    "euler_circuits",
    "find_odd_cycle",
    "independence_number",
    "is_balanced",
    "is_connected",
    "is_tree",
    "is_unicyclic",
    "regular_degree",
    "require_connected",
    "spanning_tree",
    "vertex_component_map",
)
