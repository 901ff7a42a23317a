"""
=================================================
:mod:`unicyclic` -- 1-sum flows on unicyclic graphs
=================================================

The construction is inductive on the leaves. A leaf hanging from a
degree-2 vertex is cut off together with that vertex. Otherwise two leaves
``u, v`` are removed and an odd ``u``-``v`` walk is laid over the flow of
the rest: ``1`` on the two end edges, then alternately ``−1`` and ``+1``.
"""
# Standard Library
import logging

from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import DefaultDict, Dict, List, Optional, Set, Tuple

# Third Party Library
from typing_extensions import Literal

# Local Folder
from .core import (
    Bipartition,
    FlowAssignment,
    Graph,
    GraphStructureError,
    PreconditionError,
    VerificationError,
)
from .graph import bipartition, is_unicyclic
from .labels import flow_violation
from .solver import as_gamma
from .trees import leaf_count

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
Variant = Literal["leaf", "center"]


@dataclass(frozen=True)
class UnicyclicFlow:
    """
    ``case`` is 1 for a cycle, 2 for one leaf, 3 for a non-bipartite graph
    with at least two leaves and 4 for a balanced bipartite one.
    """

    flow: FlowAssignment
    case: int
    leaves: int
    window: Tuple[Fraction, Fraction]


def unicyclic_window(case: int, p: int) -> Tuple[Fraction, Fraction]:
    """
    >>> unicyclic_window(3, 3)
    (Fraction(-2, 1), Fraction(3, 1))
    >>> unicyclic_window(4, 5)
    (Fraction(-1, 1), Fraction(2, 1))
    """
    if case == 1:
        return HALF, HALF
    if case == 2:
        return Fraction(0), Fraction(1)
    if case == 3:
        return Fraction(1 - p), Fraction(p)
    return Fraction(1 - p // 2), Fraction(p // 2)


class _Induction:
    """
    Mutable state of the leaf induction on the subgraph induced by ``alive``.
    """

    def __init__(self, g: Graph, parts: Optional[Bipartition]):
        self.g = g
        self.parts = parts
        self.alive: Set[int] = set(range(g.n))
        self.assigned: Dict[int, Fraction] = {}
        self.delta: DefaultDict[int, Fraction] = defaultdict(Fraction)

    def live(self, v: int) -> List[Tuple[int, int]]:
        return [(w, e) for w, e in self.g.adjacency(v) if w in self.alive]

    def degree(self, v: int) -> int:
        return len(self.live(v))

    def cycle(self, start: Optional[int] = None) -> Tuple[List[int], List[int]]:
        """
        The cycle of the alive subgraph: vertices in order and
        ``edges[i]`` joining ``vertices[i]`` to the next one.
        """
        degree = {v: self.degree(v) for v in self.alive}
        queue = deque(v for v, d in degree.items() if d == 1)
        stripped: Set[int] = set()
        while queue:
            v = queue.popleft()
            stripped.add(v)
            for w, _ in self.live(v):
                if w not in stripped:
                    degree[w] -= 1
                    if degree[w] == 1:
                        queue.append(w)
        on_cycle = self.alive - stripped
        if start is None:
            start = min(on_cycle)
        assert start in on_cycle

        vertices = [start]
        edges: List[int] = []
        while True:
            v = vertices[-1]
            w, e = min(
                (w, e)
                for w, e in self.live(v)
                if w in on_cycle and (not edges or e != edges[-1])
            )
            edges.append(e)
            if w == start:
                return vertices, edges
            vertices.append(w)

    def path(self, source: int, targets: Set[int]) -> Tuple[int, List[int]]:
        """
        Shortest path from ``source`` to the nearest vertex of ``targets``.
        """
        parent: Dict[int, Tuple[int, int]] = {}
        seen = {source}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            if v in targets:
                end = v
                edges = []
                while v != source:
                    v, e = parent[v]
                    edges.append(e)
                return end, edges[::-1]
            for w, e in sorted(self.live(v)):
                if w not in seen:
                    seen.add(w)
                    parent[w] = (v, e)
                    queue.append(w)
        raise GraphStructureError("the alive subgraph is disconnected")

    def odd_walk(self, u: int, v: int) -> List[int]:
        _, direct = self.path(u, {v})
        if len(direct) % 2 == 1:
            return direct

        vertices, edges = self.cycle()
        on_cycle = set(vertices)
        cu, to_cu = self.path(u, on_cycle)
        cv, to_cv = self.path(v, on_cycle)
        back = to_cv[::-1]
        size = len(vertices)
        iu = vertices.index(cu)
        if cu == cv:
            loop = [edges[(iu + i) % size] for i in range(size)]
            return to_cu + loop + back

        iv = vertices.index(cv)
        forward = [edges[i % size] for i in range(iu, iu + (iv - iu) % size)]
        backward = [edges[(iu - 1 - i) % size] for i in range(size - len(forward))]
        for arc in (forward, backward):
            walk = to_cu + arc + back
            if len(walk) % 2 == 1:
                return walk
        raise AssertionError("an odd cycle gives arcs of both parities")

    def cut_pendant(self) -> bool:
        """
        Remove a leaf whose neighbour has degree 2, if there is one.
        """
        for u in sorted(v for v in self.alive if self.degree(v) == 1):
            ((w, e_uw),) = self.live(u)
            if self.degree(w) != 2:
                continue
            ((_, e_wx),) = [(x, e) for x, e in self.live(w) if x != u]
            self.assigned[e_uw] = Fraction(1)
            self.assigned[e_wx] = Fraction(0)
            self.alive -= {u, w}
            return True
        return False

    def remove_pair(self, leaves: List[int]) -> None:
        u = leaves[0]
        if self.parts is None:
            v = leaves[1]
            walk = self.odd_walk(u, v)
        else:
            v = next(x for x in leaves if self.parts.side[x] != self.parts.side[u])
            _, walk = self.path(u, {v})
            assert len(walk) % 2 == 1

        self.assigned[walk[0]] = Fraction(1)
        self.assigned[walk[-1]] = Fraction(1)
        for i, e in enumerate(walk[1:-1], start=2):
            self.delta[e] += 1 if i % 2 else -1
        self.alive -= {u, v}
        logger.debug("leaf pair (%d, %d) removed by a walk of %d", u, v, len(walk))

    def base(self, leaves: List[int]) -> bool:
        if not leaves:
            for v in self.alive:
                for w, e in self.live(v):
                    self.assigned[e] = HALF
            return True

        # one leaf: a path hanging from the cycle
        current, previous, value = leaves[0], -1, Fraction(1)
        while True:
            w, e = next((w, e) for w, e in self.live(current) if e != previous)
            self.assigned[e] = value
            current, previous = w, e
            if self.degree(current) >= 3:
                break
            value = 1 - value

        vertices, edges = self.cycle(current)
        if value == 0:
            for e in edges:
                self.assigned[e] = HALF
            return True
        if len(edges) % 2 == 0:
            return False
        for i, e in enumerate(edges):
            self.assigned[e] = Fraction(i % 2)
        return True

    def run(self) -> Optional[FlowAssignment]:
        while True:
            leaves = sorted(v for v in self.alive if self.degree(v) == 1)
            if len(leaves) <= 1:
                if not self.base(leaves):
                    return None
                break
            if not self.cut_pendant():
                self.remove_pair(leaves)
        return tuple(self.assigned[e] + self.delta[e] for e in range(self.g.m))


def _recentre(
    g: Graph, flow: FlowAssignment, window: Tuple[Fraction, Fraction]
) -> FlowAssignment:
    """
    Shift along the alternating 0-sum vector of the even cycle so that every
    value lands in ``window``, moving as little as possible.
    """
    low, high = window
    _, edges = _Induction(g, None).cycle()
    s_low: Optional[Fraction] = None
    s_high: Optional[Fraction] = None
    for i, e in enumerate(edges):
        if i % 2 == 0:
            lower, upper = low - flow[e], high - flow[e]
        else:
            lower, upper = flow[e] - high, flow[e] - low
        s_low = lower if s_low is None else max(s_low, lower)
        s_high = upper if s_high is None else min(s_high, upper)
    assert s_low is not None and s_high is not None
    if s_low > s_high:
        return flow

    shift = min(max(Fraction(0), s_low), s_high)
    if shift == 0:
        return flow
    values = list(flow)
    for i, e in enumerate(edges):
        values[e] += shift if i % 2 == 0 else -shift
    return tuple(values)


def unicyclic_flow(g: Graph) -> Optional[UnicyclicFlow]:
    """
    A 1-sum flow of a connected unicyclic graph within its case window,
    ``None`` for an unbalanced bipartite graph.

    >>> result = unicyclic_flow(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    >>> result.case, set(result.flow)
    (1, {Fraction(1, 2)})
    >>> unicyclic_flow(Graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])) is None
    True

    :raises ~sumflow.core.GraphStructureError: ``g`` is not connected \
        unicyclic.
    :raises ~sumflow.core.VerificationError: the flow leaves its window.
    """
    if not is_unicyclic(g):
        raise GraphStructureError("graph is not connected unicyclic")
    parts = bipartition(g)
    if parts is not None and not parts.balanced:
        return None

    p = leaf_count(g)
    if p == 0:
        case = 1
    elif p == 1:
        case = 2
    else:
        case = 3 if parts is None else 4
    window = unicyclic_window(case, p)

    flow = _Induction(g, parts).run()
    if flow is None:
        return None
    if parts is not None:
        flow = _recentre(g, flow, window)

    provenance = f"unicyclic case {case}"
    violation = flow_violation(g, flow, as_gamma(g, 1))
    if violation is not None:
        raise VerificationError(provenance, violation)
    if not all(window[0] <= x <= window[1] for x in flow):
        raise VerificationError(provenance, f"a value leaves {window}")
    return UnicyclicFlow(flow, case, p, window)


def unicyclic_extremal(p: int, case: int, variant: Variant = "leaf") -> Graph:
    """
    Graphs on which the unicyclic windows are attained.

    Case 3: a triangle whose vertex is joined to a leaf (``"leaf"``) or to
    the centre (``"center"``) of a star, so that ``p`` leaves remain.
    Case 4: the path ``u a b c d v`` with the chord ``a d``, and a star with
    ``p/2`` leaves hung at each of ``u`` and ``v``.

    >>> unicyclic_extremal(3, 3).n
    8
    >>> unicyclic_extremal(2, 4).n
    10

    :raises ~sumflow.core.PreconditionError: bad ``p``, ``case`` or ``variant``.
    """
    if case == 3:
        if p < 2:
            raise PreconditionError(f"case 3 needs p >= 2, got {p}")
        edges = [(0, 1), (1, 2), (0, 2)]
        if variant == "leaf":
            # 3 is the former leaf, 4 the star centre
            edges += [(0, 3), (3, 4)]
            edges += [(4, 5 + i) for i in range(p)]
            return Graph(p + 5, edges)
        if variant == "center":
            edges += [(0, 3)]
            edges += [(3, 4 + i) for i in range(p)]
            return Graph(p + 4, edges)
        raise PreconditionError(f"unknown variant {variant!r}")

    if case == 4:
        if p < 2 or p % 2:
            raise PreconditionError(f"case 4 needs an even p >= 2, got {p}")
        # u=0 a=1 b=2 c=3 d=4 v=5, star centres 6 and 7
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (6, 0), (7, 5)]
        half = p // 2
        edges += [(6, 8 + i) for i in range(half)]
        edges += [(7, 8 + half + i) for i in range(half)]
        return Graph(p + 8, edges)

    raise PreconditionError(f"extremal graphs exist for cases 3 and 4, got {case}")


__all__ = (
    "UnicyclicFlow",
    "Variant",
    "unicyclic_extremal",
    "unicyclic_flow",
    "unicyclic_window",
)
