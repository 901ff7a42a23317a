"""
===================================
:mod:`core` -- Graph and exceptions
===================================
"""
# Standard Library
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Sequence, Tuple

if TYPE_CHECKING:
    # Third Party Library
    import networkx as nx

Edge = Tuple[int, int]
DegreeSequence = Tuple[int, ...]
GammaVector = Tuple[Fraction, ...]
FlowAssignment = Tuple[Fraction, ...]


class SumFlowError(Exception):
    """
    sumflow Base Exception.
    """


class GraphStructureError(SumFlowError):
    """
    The graph does not have the structure an operation needs,
    e.g. it is disconnected or it is not a tree.

    :param reason: what is wrong with the graph
    :type reason: str
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(str(self))

    def __str__(self) -> str:
        return self.reason

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.reason!r})"


class PreconditionError(SumFlowError, ValueError):
    """
    A parameter or a documented precondition is violated.

    :param reason: the violated precondition
    :type reason: str
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(str(self))

    def __str__(self) -> str:
        return self.reason

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.reason!r})"


class ConjectureError(PreconditionError):
    """
    The requested construction is only conjectured to exist.
    """


class InfeasibleError(SumFlowError):
    """
    The operation needs a feasible instance.

    :param reason: why the instance is infeasible
    :type reason: str
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(str(self))

    def __str__(self) -> str:
        return self.reason

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.reason!r})"


class CapExceededError(SumFlowError):
    """
    A search or an enumeration went over its cap.
    This never means "no solution".

    :param what: the capped quantity
    :type what: str
    :param cap: the configured cap
    :type cap: int
    :param decision: a decision that is already known, if any
    :type decision: Optional[bool]
    """

    def __init__(self, what: str, cap: int, decision: Optional[bool] = None):
        self.what = what
        self.cap = cap
        self.decision = decision
        super().__init__(str(self))

    def __str__(self) -> str:
        return f"{self.what} exceeds the cap {self.cap}"

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}"
            f"({self.what!r}, {self.cap!r}, decision={self.decision!r})"
        )


class VerificationError(SumFlowError):
    """
    A constructed flow failed its exact re-verification.

    :param provenance: the construction that produced the flow
    :type provenance: str
    :param violation: the first violated constraint
    :type violation: str
    """

    def __init__(self, provenance: str, violation: str):
        self.provenance = provenance
        self.violation = violation
        super().__init__(str(self))

    def __str__(self) -> str:
        return f"{self.provenance}: {self.violation}"

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({self.provenance!r}, {self.violation!r})"
        )


class GraphSyntaxError(SumFlowError, SyntaxError):
    """
    Graph file or expression syntax error.

    :param text: the rejected text, or a description of it
    :type text: str
    :param line: 1-based line number, if known
    :type line: Optional[int]
    :param detail: extra explanation
    :type detail: str
    """

    def __init__(self, text: str, line: Optional[int] = None, detail: str = ""):
        self.fragment = text
        self.line = line
        self.detail = detail
        super().__init__(str(self))

    def __str__(self) -> str:
        where = f"line {self.line}: " if self.line is not None else ""
        message = f"{where}{self.fragment!r} is not valid"
        if self.detail:
            message += f" ({self.detail})"
        return message

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.fragment!r}, line={self.line!r})"


class Graph:
    """
    Immutable simple undirected graph on the vertices ``0..n-1``.
    Edge indices follow the order of ``edges`` and never change.

    >>> g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    >>> g.n, g.m
    (4, 4)
    >>> g.edges[3]
    (0, 3)
    >>> g.degrees()
    (2, 2, 2, 2)
    >>> g.edge_index(3, 2)
    2

    :param n: vertex count
    :type n: int
    :param edges: vertex pairs, each stored as ``(min, max)``
    :type edges: Iterable[Tuple[int, int]]

    :raises ~sumflow.core.PreconditionError: loops, parallel edges \
        or vertices out of range.
    """

    __slots__ = ("_n", "_edges", "_adjacency", "_index")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise PreconditionError(f"vertex count must be nonnegative, got {n}")

        normalized: List[Edge] = []
        index: Dict[Edge, int] = {}
        adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) leaves the range 0..{n - 1}")
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")

            pair = (u, v) if u < v else (v, u)
            if pair in index:
                raise PreconditionError(f"parallel edge {pair}")

            e = len(normalized)
            index[pair] = e
            normalized.append(pair)
            adjacency[pair[0]].append((pair[1], e))
            adjacency[pair[1]].append((pair[0], e))

        self._n = n
        self._edges: Tuple[Edge, ...] = tuple(normalized)
        self._adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = tuple(
            tuple(nbrs) for nbrs in adjacency
        )
        self._index = index

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    def adjacency(self, v: int) -> Tuple[Tuple[int, int], ...]:
        """
        ``(neighbor, edge index)`` pairs of ``v`` in increasing edge index.
        """
        return self._adjacency[v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(w for w, _ in self._adjacency[v])

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> DegreeSequence:
        return tuple(len(nbrs) for nbrs in self._adjacency)

    def edge_index(self, u: int, v: int) -> Optional[int]:
        return self._index.get((u, v) if u < v else (v, u))

    def other(self, e: int, v: int) -> int:
        u, w = self._edges[e]
        assert v in (u, w), f"vertex {v} is not an endpoint of edge {e}"
        return w if v == u else u

    def edge_subgraph(self, edge_ids: Iterable[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """
        Spanning subgraph on the same vertex set.

        :returns: the subgraph and, per subgraph edge, its index in ``self``.
        """
        kept = tuple(sorted(set(edge_ids)))
        return Graph(self._n, (self._edges[e] for e in kept)), kept

    def remove_vertices(
        self, removed: Iterable[int]
    ) -> Tuple["Graph", Tuple[int, ...], Tuple[int, ...]]:
        """
        Induced subgraph on the remaining vertices, relabelled in order.

        :returns: the subgraph, the kept vertices and the kept edges, \
            both as indices of ``self``.
        """
        gone = set(removed)
        vertices = tuple(v for v in range(self._n) if v not in gone)
        relabel = {v: i for i, v in enumerate(vertices)}
        kept_edges = tuple(
            e for e, (u, v) in enumerate(self._edges) if u in relabel and v in relabel
        )
        sub = Graph(
            len(vertices),
            (
                (relabel[self._edges[e][0]], relabel[self._edges[e][1]])
                for e in kept_edges
            ),
        )
        return sub, vertices, kept_edges

    def to_networkx(self) -> "nx.Graph":
        """
        A :class:`networkx.Graph` with the same vertices, edges in index order
        and the edge index stored under the ``"index"`` attribute.
        """
        # Third Party Library
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        for e, (u, v) in enumerate(self._edges):
            nx_graph.add_edge(u, v, index=e)
        return nx_graph

    @classmethod
    def from_networkx(cls, nx_graph: "nx.Graph") -> "Graph":
        """
        Relabel the nodes of ``nx_graph`` to ``0..n-1`` in sorted order.
        """
        nodes = sorted(nx_graph.nodes())
        relabel = {node: i for i, node in enumerate(nodes)}
        pairs = sorted(
            tuple(sorted((relabel[u], relabel[v]))) for u, v in nx_graph.edges()
        )
        return cls(len(nodes), pairs)  # type: ignore[arg-type]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self._n}, {list(self._edges)!r})"


@dataclass(frozen=True)
class Bipartition:
    """
    Two-colouring of a connected bipartite graph, vertex 0 on side 1.
    """

    side: Tuple[int, ...]

    @property
    def size1(self) -> int:
        return sum(1 for s in self.side if s == 1)

    @property
    def size2(self) -> int:
        return len(self.side) - self.size1

    @property
    def balanced(self) -> bool:
        return self.size1 == self.size2

    def part(self, label: int) -> Tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side) if s == label)

    def sign(self, v: int) -> int:
        """
        ``+1`` on side 1, ``-1`` on side 2.
        """
        return 1 if self.side[v] == 1 else -1


@dataclass(frozen=True)
class GraphFile:
    """
    A parsed graph file: the graph plus the optional vertex names.
    """

    graph: Graph
    names: Dict[int, str]

    def name(self, v: int) -> str:
        return self.names.get(v, str(v))


def as_fraction_vector(
    values: Sequence[object], length: int, what: str
) -> Tuple[Fraction, ...]:
    """
    Convert ``values`` into a tuple of :class:`~fractions.Fraction`.

    >>> as_fraction_vector([1, "1/2"], 2, "gamma")
    (Fraction(1, 1), Fraction(1, 2))

    :raises ~sumflow.core.PreconditionError: length mismatch.
    """
    if len(values) != length:
        raise PreconditionError(f"{what} has length {len(values)}, expected {length}")
    return tuple(Fraction(value) for value in values)  # type: ignore[arg-type]


__all__ = (
    "Bipartition",
    "CapExceededError",
    "ConjectureError",
    "DegreeSequence",
    "Edge",
    "FlowAssignment",
    "GammaVector",
    "Graph",
    "GraphFile",
    "GraphStructureError",
    "GraphSyntaxError",
    "InfeasibleError",
    "PreconditionError",
    "SumFlowError",
    "VerificationError",
    "as_fraction_vector",
)
