"""
===============================================
:mod:`solver` -- Exact solutions of A(G)ω = γ
===============================================

The structured solvers peel leaves off a spanning tree (bipartite graphs)
or off a spanning tree plus one edge closing an odd cycle (non-bipartite
graphs), then close the odd cycle in closed form. Dense elimination is
kept only as an independent check.
"""
# Standard Library
import heapq
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

# Local Folder
from .core import (
    Bipartition,
    FlowAssignment,
    GammaVector,
    Graph,
    GraphStructureError,
    PreconditionError,
    as_fraction_vector,
)
from .graph import bipartition, require_connected, spanning_tree
from .linalg import Matrix, bareiss_determinant, integerize, rank, solve
from .linalg import nullspace as matrix_nullspace

logger = logging.getLogger(__name__)

GammaLike = Union[int, str, Fraction, Sequence[object]]


def as_gamma(g: Graph, gamma: GammaLike) -> GammaVector:
    """
    Accept a constant or a per-vertex sequence.

    >>> as_gamma(Graph(2, [(0, 1)]), 1)
    (Fraction(1, 1), Fraction(1, 1))
    """
    if isinstance(gamma, (int, str, Fraction)):
        return (Fraction(gamma),) * g.n
    return as_fraction_vector(gamma, g.n, "gamma")


def as_flow(g: Graph, flow: Sequence[object]) -> FlowAssignment:
    return as_fraction_vector(flow, g.m, "flow")


@dataclass(frozen=True)
class IncidenceMatrix:
    """
    Vertex-edge incidence matrix, one ``(u, v)`` pair per column.
    """

    n: int
    columns: Tuple[Tuple[int, int], ...]

    def dense(self) -> Matrix:
        rows = [[Fraction(0)] * len(self.columns) for _ in range(self.n)]
        for e, (u, v) in enumerate(self.columns):
            rows[u][e] = Fraction(1)
            rows[v][e] = Fraction(1)
        return rows

    def rank(self) -> int:
        return rank(self.dense())

    def apply(self, flow: Sequence[Fraction]) -> GammaVector:
        sums = [Fraction(0)] * self.n
        for (u, v), value in zip(self.columns, flow):
            sums[u] += value
            sums[v] += value
        return tuple(sums)

    def transpose_apply(self, z: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        return tuple(z[u] + z[v] for u, v in self.columns)


def incidence_matrix(g: Graph) -> IncidenceMatrix:
    return IncidenceMatrix(g.n, g.edges)


def vertex_values(g: Graph, flow: Sequence[object]) -> GammaVector:
    """
    Per-vertex sums of incident edge values.

    >>> vertex_values(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), [1, 0, 1, 0])
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))

    :raises ~sumflow.core.PreconditionError: ``flow`` has the wrong length.
    """
    return incidence_matrix(g).apply(as_flow(g, flow))


@dataclass(frozen=True)
class GammaFlowDecision:
    """
    Existence of a solution of ``A(G)ω = γ``.
    For an infeasible bipartite instance ``obstruction`` is the vector
    ``y = (1 on side 1, -1 on side 2)`` with ``yᵀA = 0`` and ``yᵀγ ≠ 0``.
    """

    feasible: bool
    bipartition: Optional[Bipartition]
    imbalance: Fraction
    obstruction: Optional[Tuple[int, ...]] = None


def gamma_flow_exists(g: Graph, gamma: GammaLike) -> GammaFlowDecision:
    """
    >>> gamma_flow_exists(Graph(3, [(0, 1), (1, 2)]), 1).imbalance
    Fraction(1, 1)

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    require_connected(g)
    target = as_gamma(g, gamma)
    if g.n == 1:
        return GammaFlowDecision(target[0] == 0, Bipartition((1,)), target[0])

    parts = bipartition(g)
    if parts is None:
        return GammaFlowDecision(True, None, Fraction(0))

    signs = tuple(parts.sign(v) for v in range(g.n))
    imbalance = sum((s * x for s, x in zip(signs, target)), Fraction(0))
    if imbalance == 0:
        return GammaFlowDecision(True, parts, imbalance)
    return GammaFlowDecision(False, parts, imbalance, signs)


def _odd_edge(g: Graph, tree: Set[int]) -> int:
    depth = [-1] * g.n
    depth[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w, e in g.adjacency(v):
            if e in tree and depth[w] < 0:
                depth[w] = depth[v] + 1
                stack.append(w)
    for e, (u, v) in enumerate(g.edges):
        if e not in tree and depth[u] % 2 == depth[v] % 2:
            return e
    raise GraphStructureError("graph is bipartite")


def _peel(
    g: Graph, support: Set[int], gamma: GammaVector
) -> Optional[Dict[int, Fraction]]:
    """
    Solve on a spanning support with at most one (odd) cycle.
    Leaves are peeled lowest index first; the cycle that survives
    is solved in closed form.
    """
    values: Dict[int, Fraction] = {}
    residual = list(gamma)
    incident: List[Set[int]] = [set() for _ in range(g.n)]
    for e in support:
        u, v = g.edges[e]
        incident[u].add(e)
        incident[v].add(e)

    leaves = [v for v in range(g.n) if len(incident[v]) == 1]
    heapq.heapify(leaves)
    while leaves:
        v = heapq.heappop(leaves)
        if len(incident[v]) != 1:
            continue
        (e,) = incident[v]
        w = g.other(e, v)
        values[e] = residual[v]
        residual[w] -= residual[v]
        residual[v] = Fraction(0)
        incident[v].clear()
        incident[w].discard(e)
        if len(incident[w]) == 1:
            heapq.heappush(leaves, w)

    remaining = [v for v in range(g.n) if incident[v]]
    if not remaining:
        # a tree: everything collapsed onto one vertex
        return values if all(r == 0 for r in residual) else None

    cycle = [min(remaining)]
    cycle_edges: List[int] = []
    previous_edge = -1
    while True:
        v = cycle[-1]
        e = min(x for x in incident[v] if x != previous_edge)
        cycle_edges.append(e)
        w = g.other(e, v)
        if w == cycle[0]:
            break
        cycle.append(w)
        previous_edge = e

    length = len(cycle)
    assert length % 2 == 1, "the surviving cycle must be odd"
    first = residual[cycle[0]]
    for i in range(1, length):
        first += residual[cycle[i]] * (1 if i % 2 == 1 else -1)
    x = first / 2
    values[cycle_edges[0]] = x
    for i in range(1, length):
        x = residual[cycle[i]] - x
        values[cycle_edges[i]] = x
    return values


def _extend(g: Graph, values: Dict[int, Fraction]) -> FlowAssignment:
    return tuple(values.get(e, Fraction(0)) for e in range(g.m))


def solve_gamma_flow(g: Graph, gamma: GammaLike) -> Optional[FlowAssignment]:
    """
    A structured solution of ``A(G)ω = γ`` or ``None``.

    >>> solve_gamma_flow(Graph(4, [(0, 1), (1, 2), (2, 3)]), 1)
    (Fraction(1, 1), Fraction(0, 1), Fraction(1, 1))

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    target = as_gamma(g, gamma)
    decision = gamma_flow_exists(g, target)
    if not decision.feasible:
        return None
    if g.n == 1:
        return ()

    tree = set(spanning_tree(g))
    if decision.bipartition is None:
        tree.add(_odd_edge(g, tree))
    values = _peel(g, tree, target)
    assert values is not None
    return _extend(g, values)


def _require_integral(gamma: GammaVector) -> None:
    if any(x.denominator != 1 for x in gamma):
        raise PreconditionError("gamma must be integral")


def solve_integer_bipartite(g: Graph, gamma: GammaLike) -> FlowAssignment:
    """
    Integer solution supported on a spanning tree.

    >>> solve_integer_bipartite(Graph(2, [(0, 1)]), 5)
    (Fraction(5, 1),)

    :raises ~sumflow.core.GraphStructureError: non-bipartite input.
    :raises ~sumflow.core.PreconditionError: non-integral or unbalanced gamma.
    """
    target = as_gamma(g, gamma)
    _require_integral(target)
    decision = gamma_flow_exists(g, target)
    if g.n > 1 and decision.bipartition is None:
        raise GraphStructureError("graph is not bipartite")
    if not decision.feasible:
        raise PreconditionError(f"gamma is unbalanced by {decision.imbalance}")
    if g.n == 1:
        return ()

    values = _peel(g, set(spanning_tree(g)), target)
    assert values is not None
    return _extend(g, values)


def solve_halfinteger(g: Graph, gamma: GammaLike) -> FlowAssignment:
    """
    Solution with ``2ω`` integral, supported on a spanning tree plus one edge.

    >>> solve_halfinteger(Graph(3, [(0, 1), (1, 2), (0, 2)]), 1)
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))

    :raises ~sumflow.core.GraphStructureError: bipartite input.
    :raises ~sumflow.core.PreconditionError: non-integral gamma.
    """
    target = as_gamma(g, gamma)
    _require_integral(target)
    require_connected(g)
    if bipartition(g) is not None:
        raise GraphStructureError("graph is bipartite")

    tree = set(spanning_tree(g))
    tree.add(_odd_edge(g, tree))
    values = _peel(g, tree, target)
    assert values is not None
    return _extend(g, values)


def odd_cycle_incidence_det(length: int) -> int:
    """
    Determinant of the incidence matrix of the cycle of odd ``length``.

    >>> [odd_cycle_incidence_det(length) for length in (3, 5, 7)]
    [2, 2, 2]

    :raises ~sumflow.core.PreconditionError: ``length`` is even or below 3.
    """
    if length < 3 or length % 2 == 0:
        raise PreconditionError(
            f"cycle length must be odd and at least 3, got {length}"
        )
    rows = [[0] * length for _ in range(length)]
    for e in range(length):
        rows[e][e] = 1
        rows[(e + 1) % length][e] = 1
    return bareiss_determinant(rows)


@dataclass(frozen=True)
class NullspaceBasis:
    """
    Integer basis of the 0-sum flows ``{ω : A(G)ω = 0}``.
    """

    vectors: Tuple[Tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def vanishing(self, e: int) -> bool:
        """
        Every 0-sum flow is zero on ``e``.
        """
        return all(vector[e] == 0 for vector in self.vectors)


def nullspace(g: Graph) -> NullspaceBasis:
    """
    >>> nullspace(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])).vectors
    ((-1, 1, -1, 1),)
    >>> nullspace(Graph(3, [(0, 1), (1, 2), (0, 2)])).dimension
    0
    """
    if g.m == 0:
        return NullspaceBasis(())
    basis = matrix_nullspace(incidence_matrix(g).dense(), g.m)
    return NullspaceBasis(tuple(tuple(integerize(vector)) for vector in basis))


def dense_solve(g: Graph, gamma: GammaLike) -> Optional[FlowAssignment]:
    """
    Generic elimination, used to cross-check the structured solvers.
    """
    target = as_gamma(g, gamma)
    if g.m == 0:
        return () if all(x == 0 for x in target) else None
    solution = solve(incidence_matrix(g).dense(), target)
    return None if solution is None else tuple(solution)


__all__ = (
    "GammaFlowDecision",
    "IncidenceMatrix",
    "NullspaceBasis",
    "as_flow",
    "as_gamma",
    "dense_solve",
    "gamma_flow_exists",
    "incidence_matrix",
    "nullspace",
    "odd_cycle_incidence_det",
    "solve_gamma_flow",
    "solve_halfinteger",
    "solve_integer_bipartite",
    "vertex_values",
)
