"""
==============================================
:mod:`factors` -- Matchings and graph factors
==============================================

Maximum and perfect matchings, {1,2}-factors through the bipartite double
cover, f-factors through Tutte's gadget, and the factorizations of regular
graphs used by the special flow constructions.
"""
# Standard Library
import itertools
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

# Third Party Library
import networkx as nx

from typing_extensions import Final, Literal

# Local Folder
from .core import (
    Bipartition,
    CapExceededError,
    FlowAssignment,
    Graph,
    GraphStructureError,
    PreconditionError,
    VerificationError,
)
from .graph import bipartite_double_cover, components, euler_circuits, regular_degree

logger = logging.getLogger(__name__)

REGULAR_FACTOR_CAP: Final = 14

FactorKind = Literal["perfect_matching", "one_two_factor"]
TopNodes = Union[Bipartition, Iterable[int], None]


@dataclass(frozen=True)
class Matching:
    """
    Edge indices of pairwise disjoint edges.
    """

    edges: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self, g: Graph) -> Set[int]:
        return {v for e in self.edges for v in g.edges[e]}

    def is_perfect(self, g: Graph) -> bool:
        return 2 * self.size == g.n


@dataclass(frozen=True)
class Factor:
    """
    A spanning subgraph given by its edge indices, with its degree vector.
    """

    edges: FrozenSet[int]
    degrees: Tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, edge_ids: Iterable[int]) -> "Factor":
        chosen = frozenset(edge_ids)
        degrees = [0] * g.n
        for e in chosen:
            u, v = g.edges[e]
            degrees[u] += 1
            degrees[v] += 1
        return cls(chosen, tuple(degrees))

    def components(self, g: Graph) -> List[List[int]]:
        sub, _ = g.edge_subgraph(self.edges)
        return components(sub)

    def has_regular_components(self, g: Graph) -> bool:
        return all(
            len({self.degrees[v] for v in component}) == 1
            for component in self.components(g)
        )


@dataclass(frozen=True)
class FactorDecomposition:
    factors: Tuple[Factor, ...]

    def __len__(self) -> int:
        return len(self.factors)

    def partitions(self, g: Graph) -> bool:
        seen: Set[int] = set()
        for factor in self.factors:
            if seen & factor.edges:
                return False
            seen |= factor.edges
        return seen == set(range(g.m))


def _pairs_to_edges(g: Graph, pairs: Iterable[Tuple[int, int]]) -> FrozenSet[int]:
    edges = set()
    for u, v in pairs:
        e = g.edge_index(u, v)
        assert e is not None, f"({u}, {v}) is not an edge"
        edges.add(e)
    return frozenset(edges)


def _is_matching(g: Graph, edges: Iterable[int]) -> bool:
    seen: Set[int] = set()
    for e in edges:
        u, v = g.edges[e]
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def _top_nodes(g: Graph, top: TopNodes) -> Set[int]:
    if isinstance(top, Bipartition):
        return set(top.part(1))
    if top is not None:
        return set(top)
    try:
        colour = nx.bipartite.color(g.to_networkx())
    except nx.NetworkXError:
        raise GraphStructureError("graph is not bipartite") from None
    return {v for v, c in colour.items() if c == 0}


def bipartite_max_matching(g: Graph, top: TopNodes = None) -> Matching:
    """
    Maximum matching of a bipartite graph by Hopcroft-Karp.
    ``top`` is one colour class, given directly or as a :class:`Bipartition`;
    without it the graph is two-coloured component by component.

    >>> bipartite_max_matching(Graph(4, [(0, 1), (1, 2), (2, 3)])).edges
    frozenset({0, 2})

    :raises ~sumflow.core.GraphStructureError: ``g`` is not bipartite.
    """
    top_nodes = _top_nodes(g, top)
    mate = nx.bipartite.hopcroft_karp_matching(g.to_networkx(), top_nodes=top_nodes)
    return Matching(_pairs_to_edges(g, ((u, mate[u]) for u in top_nodes if u in mate)))


def max_matching(g: Graph) -> Matching:
    """
    Maximum-cardinality matching by Edmonds' blossom algorithm.

    >>> max_matching(Graph(4, [(0, 1), (0, 2), (0, 3)])).size
    1
    >>> max_matching(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])).size
    2

    :raises ~sumflow.core.VerificationError: the result is not a matching, \
        is smaller than a greedy matching or disagrees with Hopcroft-Karp.
    """
    nx_graph = g.to_networkx()
    matching = Matching(
        _pairs_to_edges(g, nx.max_weight_matching(nx_graph, maxcardinality=True))
    )
    if not _is_matching(g, matching.edges):
        raise VerificationError("blossom matching", "two edges share a vertex")

    greedy = len(nx.maximal_matching(nx_graph))
    if matching.size < greedy:
        raise VerificationError(
            "blossom matching", f"size {matching.size} below greedy {greedy}"
        )
    if nx.is_bipartite(nx_graph):
        cross_check = bipartite_max_matching(g).size
        if cross_check != matching.size:
            raise VerificationError(
                "blossom matching",
                f"size {matching.size}, Hopcroft-Karp found {cross_check}",
            )
    logger.debug("maximum matching of size %d on %d vertices", matching.size, g.n)
    return matching


def perfect_matching(g: Graph) -> Optional[Matching]:
    """
    >>> perfect_matching(Graph(3, [(0, 1), (1, 2), (0, 2)])) is None
    True
    >>> sorted(perfect_matching(Graph(4, [(0, 1), (1, 2), (2, 3)])).edges)
    [0, 2]
    """
    if g.n % 2:
        return None
    matching = max_matching(g)
    return matching if matching.is_perfect(g) else None


def _cover_factor(g: Graph, cover_edges: Iterable[int]) -> Factor:
    """
    Symmetrize a perfect matching of the double cover: a base edge whose two
    lifts are both matched is a ``K₂`` component, one lift puts it on a cycle.
    """
    chosen = {e // 2 for e in cover_edges}
    factor = Factor.of(g, chosen)
    if not all(d in (1, 2) for d in factor.degrees):
        raise VerificationError("{1,2}-factor", f"degrees {factor.degrees}")
    return factor


def one_two_factor(g: Graph) -> Optional[Factor]:
    """
    A spanning subgraph whose components are ``K₂``'s and cycles.

    >>> sorted(one_two_factor(Graph(3, [(0, 1), (1, 2), (0, 2)])).edges)
    [0, 1, 2]
    >>> one_two_factor(Graph(4, [(0, 1), (0, 2), (0, 3)])) is None
    True
    """
    cover = bipartite_double_cover(g)
    matching = bipartite_max_matching(cover.graph, cover.top())
    if matching.size < g.n:
        return None
    return _cover_factor(g, matching.edges)


def factor_flow(g: Graph, factor: Factor) -> FlowAssignment:
    """
    The 1-[0,1]-flow of a {1,2}-factor: ``1`` on its ``K₂`` components,
    ``1/2`` on its cycles and ``0`` off the factor.

    >>> path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    >>> factor_flow(path, Factor.of(path, [0, 2]))
    (Fraction(1, 1), Fraction(0, 1), Fraction(1, 1))
    """
    values = []
    for e, (u, _) in enumerate(g.edges):
        if e not in factor.edges:
            values.append(Fraction(0))
        elif factor.degrees[u] == 1:
            values.append(Fraction(1))
        else:
            values.append(Fraction(1, 2))
    return tuple(values)


def _forced_matching(g: Graph, e: int) -> Optional[Matching]:
    u, v = g.edges[e]
    sub, _, kept = g.remove_vertices((u, v))
    rest = perfect_matching(sub)
    if rest is None:
        return None
    return Matching(frozenset(kept[f] for f in rest.edges) | {e})


def _forced_one_two_factor(g: Graph, e: int) -> Optional[Factor]:
    # matching the lift x_u y_v forces e into the symmetrized factor
    cover = bipartite_double_cover(g)
    forced, _ = cover.lift(e)
    x, y = cover.graph.edges[forced]
    sub, vertices, kept = cover.graph.remove_vertices((x, y))
    top = [i for i, w in enumerate(vertices) if w < g.n]
    rest = bipartite_max_matching(sub, top)
    if 2 * rest.size < sub.n:
        return None
    return _cover_factor(g, [kept[f] for f in rest.edges] + [forced])


def factor_containing(
    g: Graph, e: int, kind: FactorKind
) -> Union[Matching, Factor, None]:
    """
    A perfect matching or {1,2}-factor that uses edge ``e``, if one exists.

    >>> path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    >>> factor_containing(path, 1, "perfect_matching") is None
    True
    >>> sorted(factor_containing(path, 0, "perfect_matching").edges)
    [0, 2]

    :raises ~sumflow.core.PreconditionError: unknown ``kind`` or edge.
    """
    if not 0 <= e < g.m:
        raise PreconditionError(f"edge {e} leaves the range 0..{g.m - 1}")
    if kind == "perfect_matching":
        return _forced_matching(g, e)
    if kind == "one_two_factor":
        return _forced_one_two_factor(g, e)
    raise PreconditionError(f"unknown factor kind {kind!r}")


def edge_in_some_factor(g: Graph, e: int, kind: FactorKind) -> bool:
    """
    >>> c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    >>> edge_in_some_factor(c5, 2, "one_two_factor")
    True
    """
    return factor_containing(g, e, kind) is not None


def f_factor(g: Graph, f: Sequence[int]) -> Optional[Factor]:
    """
    A spanning subgraph with degree ``f(v)`` at every ``v``, found as a
    perfect matching of Tutte's gadget. Every vertex ``v`` becomes one
    external node per incident edge and ``deg(v) − f(v)`` internal nodes
    joined to all of its external nodes; the external nodes of an edge are
    joined to each other. An edge is in the factor iff its two external nodes
    are matched together.

    >>> c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    >>> sorted(f_factor(c4, [2, 2, 2, 2]).edges)
    [0, 1, 2, 3]
    >>> f_factor(c4, [1, 1, 1, 1]).degrees
    (1, 1, 1, 1)
    >>> f_factor(c4, [1, 1, 1, 0]) is None
    True

    :raises ~sumflow.core.PreconditionError: a demand outside ``0..deg(v)`` \
        or the wrong number of demands.
    """
    if len(f) != g.n:
        raise PreconditionError(f"demand has length {len(f)}, expected {g.n}")
    for v, demand in enumerate(f):
        if not 0 <= demand <= g.degree(v):
            raise PreconditionError(
                f"demand {demand} at vertex {v} leaves 0..{g.degree(v)}"
            )
    if sum(f) % 2:
        return None

    external: Dict[Tuple[int, int], int] = {}
    for v in range(g.n):
        for _, e in g.adjacency(v):
            external[v, e] = len(external)
    size = len(external)
    pairs = [(external[u, e], external[v, e]) for e, (u, v) in enumerate(g.edges)]
    for v in range(g.n):
        for _ in range(g.degree(v) - f[v]):
            pairs.extend((external[v, e], size) for _, e in g.adjacency(v))
            size += 1
    gadget = Graph(size, pairs)

    matching = perfect_matching(gadget)
    logger.debug("f-factor gadget with %d nodes, %d edges", gadget.n, gadget.m)
    if matching is None:
        return None

    factor = Factor.of(g, (e for e in range(g.m) if e in matching.edges))
    if factor.degrees != tuple(f):
        raise VerificationError("f-factor gadget", f"degrees {factor.degrees}")
    return factor


def _colour_class(g: Graph) -> Set[int]:
    try:
        return _top_nodes(g, None)
    except GraphStructureError:
        raise GraphStructureError("a 1-factorization needs a bipartite graph") from None


def _euler_split(g: Graph, edge_ids: Iterable[int]) -> Tuple[Set[int], Set[int]]:
    """
    Alternate the edges of each Euler circuit; on even circuits this halves
    every degree.
    """
    halves: Tuple[Set[int], Set[int]] = (set(), set())
    for circuit in euler_circuits(g, edge_ids):
        assert len(circuit) % 2 == 0, "odd circuit in a bipartite graph"
        for i, e in enumerate(circuit):
            halves[i % 2].add(e)
    return halves


def _one_factorize(
    g: Graph, edge_ids: FrozenSet[int], k: int, top: Set[int]
) -> List[FrozenSet[int]]:
    if k == 0:
        return []
    if k == 1:
        return [edge_ids]
    if k % 2 == 0:
        first, second = _euler_split(g, edge_ids)
        return _one_factorize(g, frozenset(first), k // 2, top) + _one_factorize(
            g, frozenset(second), k // 2, top
        )

    sub, back = g.edge_subgraph(edge_ids)
    matching = bipartite_max_matching(sub, top)
    if not matching.is_perfect(sub):
        raise VerificationError(
            "1-factorization", f"a {k}-regular bipartite graph lacks a perfect matching"
        )
    chosen = frozenset(back[e] for e in matching.edges)
    return [chosen] + _one_factorize(g, edge_ids - chosen, k - 1, top)


def one_factorization_bipartite(g: Graph) -> FactorDecomposition:
    """
    Split a ``k``-regular bipartite graph into ``k`` perfect matchings.

    >>> c6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    >>> sorted(sorted(f.edges) for f in one_factorization_bipartite(c6).factors)
    [[0, 2, 4], [1, 3, 5]]

    :raises ~sumflow.core.GraphStructureError: ``g`` is not bipartite.
    :raises ~sumflow.core.PreconditionError: ``g`` is not regular.
    """
    k = regular_degree(g)
    if k is None:
        raise PreconditionError("a 1-factorization needs a regular graph")
    top = _colour_class(g)
    parts = _one_factorize(g, frozenset(range(g.m)), k, top)
    decomposition = FactorDecomposition(tuple(Factor.of(g, part) for part in parts))
    if not decomposition.partitions(g) or any(
        set(factor.degrees) != {1} for factor in decomposition.factors
    ):
        raise VerificationError("1-factorization", "factors are not perfect matchings")
    return decomposition


def _orient(g: Graph, circuit: Sequence[int]) -> List[Tuple[int, int]]:
    first, second = g.edges[circuit[0]], g.edges[circuit[1]]
    (start,) = set(first) - set(second)
    arcs = []
    current = start
    for e in circuit:
        head = g.other(e, current)
        arcs.append((current, head))
        current = head
    assert current == start, "circuit does not close"
    return arcs


def two_factorization(g: Graph) -> FactorDecomposition:
    """
    Split a ``2k``-regular graph into ``k`` 2-factors: orient the edges
    along Euler circuits, 1-factorize the out/in bipartite graph and fold
    each perfect matching back into a 2-factor.

    >>> k5 = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    >>> [f.degrees for f in two_factorization(k5).factors]
    [(2, 2, 2, 2, 2), (2, 2, 2, 2, 2)]

    :raises ~sumflow.core.PreconditionError: an odd degree or a graph \
        that is not regular.
    """
    odd = [v for v, d in enumerate(g.degrees()) if d % 2]
    if odd:
        raise PreconditionError(f"vertex {odd[0]} has odd degree")
    r = regular_degree(g)
    if r is None:
        raise PreconditionError("a 2-factorization needs a regular graph")
    if r == 0:
        return FactorDecomposition(())

    head_of: Dict[int, Tuple[int, int]] = {}
    for circuit in euler_circuits(g, range(g.m)):
        for e, arc in zip(circuit, _orient(g, circuit)):
            head_of[e] = arc
    arcs = [head_of[e] for e in range(g.m)]
    split = Graph(2 * g.n, ((tail, g.n + head) for tail, head in arcs))
    matchings = one_factorization_bipartite(split)
    decomposition = FactorDecomposition(
        tuple(Factor.of(g, factor.edges) for factor in matchings.factors)
    )
    if any(set(factor.degrees) != {2} for factor in decomposition.factors):
        raise VerificationError("2-factorization", "a factor is not 2-regular")
    return decomposition


def _demand_patterns(n: int, k: int) -> Iterable[Tuple[int, ...]]:
    yield (k,) * n
    yield (k - 1,) * n
    for pattern in itertools.product((k, k - 1), repeat=n):
        if len(set(pattern)) == 2:
            yield pattern


def _pattern_factor(g: Graph, pattern: Tuple[int, ...]) -> Optional[Factor]:
    """
    An f-factor for ``pattern`` in which no edge joins vertices of
    different demand, so every component is regular.
    """
    uniform = [e for e, (u, v) in enumerate(g.edges) if pattern[u] == pattern[v]]
    sub, back = g.edge_subgraph(uniform)
    if any(pattern[v] > sub.degree(v) for v in range(g.n)):
        return None
    factor = f_factor(sub, pattern)
    if factor is None:
        return None
    return Factor.of(g, (back[e] for e in factor.edges))


def regular_component_factor(
    g: Graph, k: int, cap: int = REGULAR_FACTOR_CAP
) -> Optional[Factor]:
    """
    A spanning subgraph of an ``r``-regular graph, ``r`` odd, each of whose
    components is ``(k−1)``-regular or ``k``-regular.
    The uniform demand patterns are tried first at any size; the mixed
    patterns are searched in a fixed order only up to ``cap`` vertices.

    >>> k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    >>> regular_component_factor(k4, 2).degrees
    (2, 2, 2, 2)

    :raises ~sumflow.core.PreconditionError: ``r`` is even or below 3, or \
        ``k`` is outside ``1..2r/3``.
    :raises ~sumflow.core.CapExceededError: the uniform patterns fail and \
        ``g`` has more than ``cap`` vertices.
    """
    r = regular_degree(g)
    if r is None or r < 3 or r % 2 == 0:
        raise PreconditionError("a regular graph of odd degree at least 3 is needed")
    if k < 1 or 3 * k > 2 * r:
        raise PreconditionError(f"k must lie in 1..{2 * r // 3}, got {k}")

    tried = 0
    for pattern in _demand_patterns(g.n, k):
        if tried == 2 and g.n > cap:
            raise CapExceededError("regular factor search vertex count", cap)
        tried += 1
        if sum(pattern) % 2:
            continue
        factor = _pattern_factor(g, pattern)
        if factor is None:
            continue
        if not factor.has_regular_components(g):
            raise VerificationError("regular factor search", "a component is irregular")
        logger.debug("regular component factor after %d demand patterns", tried)
        return factor
    logger.debug("no regular component factor among %d demand patterns", tried)
    return None


__all__ = (
    "REGULAR_FACTOR_CAP",
    "Factor",
    "FactorDecomposition",
    "FactorKind",
    "Matching",
    "bipartite_max_matching",
    "edge_in_some_factor",
    "f_factor",
    "factor_containing",
    "factor_flow",
    "max_matching",
    "one_factorization_bipartite",
    "one_two_factor",
    "perfect_matching",
    "regular_component_factor",
    "two_factorization",
)
