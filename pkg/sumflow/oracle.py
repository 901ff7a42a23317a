"""
===============================================
:mod:`oracle` -- Brute-force ground truth
===============================================

Exhaustive procedures that share nothing with the constructive modules
beyond :class:`~sumflow.core.Graph` and exact elimination. Caps are hard
errors: exceeding one raises :class:`~sumflow.core.CapExceededError` and is
never reported as "no solution".
"""
# Standard Library
import itertools
import logging
import math
import time

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

# Third Party Library
import networkx as nx

from typing_extensions import Final, Literal

# Local Folder
from .core import (
    CapExceededError,
    FlowAssignment,
    Graph,
    InfeasibleError,
    PreconditionError,
)
from .factors import Factor, Matching
from .labels import IntervalSpec, LabelSet, flow_violation
from .linalg import in_row_space, rank, solve
from .solver import GammaLike, as_gamma, dense_solve, incidence_matrix

logger = logging.getLogger(__name__)

ENUMERATION_BUDGET: Final = 10**8
FACTOR_ENUMERATION_MAX_EDGES: Final = 20
PROBE_MAX_EDGES: Final = 30
BASIS_MAX_EDGES: Final = 10

FeasibilityMethod = Literal["transport", "basis"]


@dataclass(frozen=True)
class EnumerationReport:
    """
    Outcome of :func:`enumerate_finite_flows`. ``solutions`` are ordered
    lexicographically by label index, edge by edge; with ``keep`` set only
    the first ``keep`` of them are stored while ``count`` stays exact.
    """

    description: str
    count: int
    solutions: Tuple[FlowAssignment, ...]
    nodes: int
    seconds: float

    @property
    def truncated(self) -> bool:
        return len(self.solutions) < self.count


class _FlowSearch:
    """
    Backtracking over edge values with partial vertex sums. A vertex is
    checked exactly when its last edge is assigned; before that its
    remaining edges must still be able to close the gap.
    """

    def __init__(
        self,
        g: Graph,
        labels: Tuple[Fraction, ...],
        target: Tuple[Fraction, ...],
        budget: int,
    ):
        self.g = g
        self.labels = labels
        self.target = target
        self.budget = budget
        self.order = sorted(
            range(g.m), key=lambda e: (-min(g.degree(v) for v in g.edges[e]), e)
        )
        self.sums = [Fraction(0)] * g.n
        self.open = list(g.degrees())
        self.choice = [0] * g.m
        self.found: List[Tuple[int, ...]] = []
        self.nodes = 0

    def feasible(self, v: int) -> bool:
        gap = self.target[v] - self.sums[v]
        left = self.open[v]
        if left == 0:
            return gap == 0
        return left * self.labels[0] <= gap <= left * self.labels[-1]

    def run(self, depth: int = 0) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise CapExceededError("enumeration node count", self.budget)
        if depth == len(self.order):
            self.found.append(tuple(self.choice))
            return

        e = self.order[depth]
        u, v = self.g.edges[e]
        self.open[u] -= 1
        self.open[v] -= 1
        for i, value in enumerate(self.labels):
            self.sums[u] += value
            self.sums[v] += value
            if self.feasible(u) and self.feasible(v):
                self.choice[e] = i
                self.run(depth + 1)
            self.sums[u] -= value
            self.sums[v] -= value
        self.open[u] += 1
        self.open[v] += 1


def enumerate_finite_flows(
    g: Graph,
    label_set: LabelSet,
    target: GammaLike = 1,
    keep: Optional[int] = None,
    budget: int = ENUMERATION_BUDGET,
) -> EnumerationReport:
    """
    Every ``ω ∈ L^E`` whose vertex sums equal ``target``.

    >>> c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    >>> enumerate_finite_flows(c4, LabelSet.finite([0, 1])).count
    2
    >>> c3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
    >>> enumerate_finite_flows(c3, LabelSet.finite([-1, 0, 1])).count
    0

    :param keep: how many solutions to store, all of them when ``None``
    :type keep: Optional[int]
    :param budget: how many search nodes to visit at most
    :type budget: int

    :raises ~sumflow.core.PreconditionError: ``label_set`` is not finite.
    :raises ~sumflow.core.CapExceededError: the search visits more than \
        ``budget`` nodes.
    """
    if label_set.kind != "finite":
        raise PreconditionError(f"{label_set} is not a finite label set")
    gamma = as_gamma(g, target)
    started = time.perf_counter()
    search = _FlowSearch(g, label_set.values, gamma, budget)
    if all(search.feasible(v) for v in range(g.n)):
        search.run()
    seconds = time.perf_counter() - started

    found = sorted(search.found)
    stored = found if keep is None else found[:keep]
    solutions = tuple(tuple(label_set.values[i] for i in row) for row in stored)
    for flow in solutions:
        assert flow_violation(g, flow, gamma, label_set) is None
    logger.debug(
        "enumerated %d flows over %s in %d nodes", len(found), label_set, search.nodes
    )
    return EnumerationReport(
        f"{label_set} flows with sums {[str(x) for x in gamma]} on {g!r}",
        len(found),
        solutions,
        search.nodes,
        seconds,
    )


def forced_edge_values(g: Graph, gamma: GammaLike) -> Tuple[Optional[Fraction], ...]:
    """
    Per edge, the value every γ-flow takes there, or ``None`` when it varies.
    An edge is forced iff its indicator lies in the row space of ``A(G)``.

    >>> forced_edge_values(Graph(4, [(0, 1), (1, 2), (2, 3)]), 1)
    (Fraction(1, 1), Fraction(0, 1), Fraction(1, 1))
    >>> forced_edge_values(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), 1)
    (None, None, None, None)

    :raises ~sumflow.core.InfeasibleError: no γ-flow exists.
    """
    particular = dense_solve(g, gamma)
    if particular is None:
        raise InfeasibleError("no flow with these vertex sums exists")
    rows = incidence_matrix(g).dense()
    values: List[Optional[Fraction]] = []
    for e in range(g.m):
        indicator = [int(f == e) for f in range(g.m)]
        values.append(particular[e] if in_row_space(rows, indicator) else None)
    return tuple(values)


def _enumerate_subgraphs(
    g: Graph,
    max_degree: int,
    accept: Callable[[Tuple[int, ...], List[int]], bool],
    cap: Optional[int],
    max_edges: int,
) -> List[List[int]]:
    if g.m > max_edges:
        raise CapExceededError("factor enumeration edge count", max_edges)

    degree = [0] * g.n
    # edges still undecided at each vertex
    left = list(g.degrees())
    chosen: List[int] = []
    found: List[List[int]] = []

    def visit(e: int) -> None:
        if e == g.m:
            if accept(tuple(degree), chosen):
                if cap is not None and len(found) >= cap:
                    raise CapExceededError("factor count", cap)
                found.append(list(chosen))
            return
        u, v = g.edges[e]
        left[u] -= 1
        left[v] -= 1
        if degree[u] < max_degree and degree[v] < max_degree:
            degree[u] += 1
            degree[v] += 1
            chosen.append(e)
            visit(e + 1)
            chosen.pop()
            degree[u] -= 1
            degree[v] -= 1
        if (degree[u] or left[u]) and (degree[v] or left[v]):
            visit(e + 1)
        left[u] += 1
        left[v] += 1

    visit(0)
    return found


def enumerate_one_two_factors(
    g: Graph,
    cap: Optional[int] = None,
    max_edges: int = FACTOR_ENUMERATION_MAX_EDGES,
) -> List[Factor]:
    """
    All spanning subgraphs whose components are ``K₂``'s and cycles.

    >>> c6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    >>> len(enumerate_one_two_factors(c6))
    3
    >>> enumerate_one_two_factors(Graph(4, [(0, 1), (0, 2), (0, 3)]))
    []

    :raises ~sumflow.core.CapExceededError: more than ``max_edges`` edges \
        or more than ``cap`` factors.
    """

    def accept(degrees: Tuple[int, ...], chosen: List[int]) -> bool:
        if not all(d in (1, 2) for d in degrees):
            return False
        # a degree-1 vertex must sit in a K2, not at the end of a path
        return all(
            (degrees[u] == 1) == (degrees[v] == 1)
            for u, v in (g.edges[e] for e in chosen)
        )

    found = _enumerate_subgraphs(g, 2, accept, cap, max_edges)
    return [Factor.of(g, edges) for edges in found]


def enumerate_perfect_matchings(
    g: Graph,
    cap: Optional[int] = None,
    max_edges: int = FACTOR_ENUMERATION_MAX_EDGES,
) -> List[Matching]:
    """
    >>> c6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    >>> [sorted(m.edges) for m in enumerate_perfect_matchings(c6)]
    [[0, 2, 4], [1, 3, 5]]

    :raises ~sumflow.core.CapExceededError: more than ``max_edges`` edges \
        or more than ``cap`` matchings.
    """

    def accept(degrees: Tuple[int, ...], chosen: List[int]) -> bool:
        return all(d == 1 for d in degrees)

    found = _enumerate_subgraphs(g, 1, accept, cap, max_edges)
    return [Matching(frozenset(edges)) for edges in found]


def _bound_choices(interval: IntervalSpec) -> Tuple[Fraction, ...]:
    bounds = {b for b in (interval.a, interval.b) if b is not None}
    return tuple(sorted(bounds))


def _basis_feasible(
    g: Graph, target: Tuple[Fraction, ...], interval: IntervalSpec
) -> bool:
    matrix = incidence_matrix(g).dense()
    width = rank(matrix)
    choices = _bound_choices(interval)
    for basis in itertools.combinations(range(g.m), width):
        columns = [[row[e] for e in basis] for row in matrix]
        if rank(columns) < width:
            continue
        rest = [e for e in range(g.m) if e not in basis]
        for values in itertools.product(choices, repeat=len(rest)):
            rhs = list(target)
            for e, value in zip(rest, values):
                for v in g.edges[e]:
                    rhs[v] -= value
            solution = solve(columns, rhs)
            if solution is not None and all(interval.contains(x) for x in solution):
                return True
    return False


def _transport_feasible(
    g: Graph, target: Tuple[Fraction, ...], interval: IntervalSpec
) -> bool:
    low, high = interval.a, interval.b
    if low is None:
        assert high is not None
        # ω ↦ −ω turns (−∞, b] into [−b, ∞)
        target = tuple(-x for x in target)
        low, high = -high, None

    supply = [target[v] - low * g.degree(v) for v in range(g.n)]
    if any(s < 0 for s in supply):
        return False
    width = None if high is None else high - low
    scale = 1
    for x in supply + ([] if width is None else [width]):
        scale = scale * x.denominator // math.gcd(scale, x.denominator)

    network = nx.DiGraph()
    for v in range(g.n):
        network.add_edge("source", ("top", v), capacity=int(supply[v] * scale))
        network.add_edge(("bottom", v), "sink", capacity=int(supply[v] * scale))
    for u, v in g.edges:
        for x, y in ((u, v), (v, u)):
            if width is None:
                network.add_edge(("top", x), ("bottom", y))
            else:
                network.add_edge(("top", x), ("bottom", y), capacity=int(width * scale))
    value = nx.maximum_flow_value(network, "source", "sink")
    logger.debug("double cover flow %s of %s", value, sum(supply) * scale)
    return bool(value == sum(supply) * scale)


def polytope_feasibility_probe(
    g: Graph,
    gamma: GammaLike,
    interval: IntervalSpec,
    max_edges: Optional[int] = None,
    method: FeasibilityMethod = "transport",
) -> bool:
    """
    Decide whether ``{ω : A(G)ω = γ, ω ∈ interval}`` is empty without the
    simplex.

    ``"basis"`` enumerates basic solutions: every nonbasic edge sits at a
    finite bound, the basic ones are solved for and checked.
    ``"transport"`` lifts the problem to the bipartite double cover, where
    shifting each edge by the lower bound leaves a transportation problem
    with supplies ``γ(v) − a·deg(v)`` and capacities ``b − a``; a maximum
    flow saturating every supply exists exactly when the polytope is
    nonempty, since lifts of flows are cover flows and averaging the two
    lifts of each edge maps a cover flow back. Over the whole line only
    solvability of ``A(G)ω = γ`` matters.

    >>> k2 = Graph(2, [(0, 1)])
    >>> polytope_feasibility_probe(k2, 1, IntervalSpec.of(0, 1))
    True
    >>> polytope_feasibility_probe(k2, 1, IntervalSpec.of(2, 3), method="basis")
    False

    :param max_edges: edge cap, by default :data:`PROBE_MAX_EDGES` for
        ``"transport"`` and :data:`BASIS_MAX_EDGES` for ``"basis"``
    :raises ~sumflow.core.PreconditionError: ``interval`` is not closed or \
        ``method`` is unknown.
    :raises ~sumflow.core.CapExceededError: more than ``max_edges`` edges.
    """
    if not interval.closed:
        raise PreconditionError(f"{interval} is not closed")
    if method not in ("transport", "basis"):
        raise PreconditionError(f"unknown feasibility method {method!r}")
    if max_edges is None:
        max_edges = PROBE_MAX_EDGES if method == "transport" else BASIS_MAX_EDGES
    if g.m > max_edges:
        raise CapExceededError(f"{method} feasibility edge count", max_edges)

    target = as_gamma(g, gamma)
    if g.m == 0:
        return all(x == 0 for x in target)
    if interval.a is None and interval.b is None:
        return dense_solve(g, target) is not None
    if method == "basis":
        return _basis_feasible(g, target, interval)
    return _transport_feasible(g, target, interval)


__all__ = (
    "BASIS_MAX_EDGES",
    "ENUMERATION_BUDGET",
    "EnumerationReport",
    "FACTOR_ENUMERATION_MAX_EDGES",
    "FeasibilityMethod",
    "PROBE_MAX_EDGES",
    "enumerate_finite_flows",
    "enumerate_one_two_factors",
    "enumerate_perfect_matchings",
    "forced_edge_values",
    "polytope_feasibility_probe",
)
