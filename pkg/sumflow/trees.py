"""
==========================================
:mod:`trees` -- Flows on trees by pruning
==========================================

A tree is peeled leaf level by leaf level, ``T₁ ⊃ T₂ ⊃ ⋯ ⊃ T_k``, until a
star or ``K₂`` is left. The γ-flow of a tree, when it exists, is unique and
follows the levels: each leaf edge takes the residual target of its leaf.
"""
# Standard Library
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

# Third Party Library
from typing_extensions import Literal

# Local Folder
from .core import (
    FlowAssignment,
    Graph,
    GraphStructureError,
    PreconditionError,
    VerificationError,
)
from .graph import bipartition, is_tree
from .solver import GammaLike, as_gamma

logger = logging.getLogger(__name__)

Residual = Literal["K1", "K2", "star"]
ExtremalKind = Literal["tmin", "tmax", "topt", "s1", "s2"]
EXTREMAL_KINDS: Tuple[ExtremalKind, ...] = ("tmin", "tmax", "topt", "s1", "s2")


@dataclass(frozen=True)
class PruningLevel:
    """
    One level ``P_i``: its leaves, each with the edge that joins it to
    ``T_i``, and the edge set ``E(P_i)``. The last level also carries the
    star centre (``None`` for ``K₂``).
    """

    pendant: Tuple[Tuple[int, int], ...]
    edges: Tuple[int, ...]
    center: Optional[int] = None

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(v for v, _ in self.pendant)

    @property
    def size(self) -> int:
        return len(self.pendant)


@dataclass(frozen=True)
class PruningTrace:
    levels: Tuple[PruningLevel, ...]
    residual: Residual

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(level.size for level in self.levels)

    @property
    def depth(self) -> int:
        return len(self.levels)


def leaf_count(t: Graph) -> int:
    return sum(1 for d in t.degrees() if d == 1)


def balanced_tree_sides(t: Graph) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    The two colour classes of a balanced tree, vertex 0 first.

    >>> balanced_tree_sides(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    ((0, 2), (1, 3))

    :raises ~sumflow.core.GraphStructureError: ``t`` is not a tree.
    :raises ~sumflow.core.PreconditionError: ``t`` is not balanced.
    """
    if not is_tree(t):
        raise GraphStructureError("graph is not a tree")
    parts = bipartition(t)
    assert parts is not None
    if not parts.balanced:
        raise PreconditionError("tree is not balanced")
    return parts.part(1), parts.part(2)


def prune(t: Graph) -> PruningTrace:
    """
    >>> prune(Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])).sizes
    (2, 2, 2)
    >>> trace = prune(Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)]))
    >>> trace.sizes, trace.residual, trace.levels[0].center
    ((4,), 'star', 0)

    :raises ~sumflow.core.GraphStructureError: ``t`` is not a tree.
    """
    if not is_tree(t):
        raise GraphStructureError("graph is not a tree")
    if t.n == 1:
        return PruningTrace((), "K1")

    alive: Set[int] = set(range(t.n))
    degree = list(t.degrees())
    levels: List[PruningLevel] = []
    while True:
        leaves = sorted(v for v in alive if degree[v] == 1)
        internal = sorted(v for v in alive if degree[v] > 1)
        pendant = tuple(
            (v, next(e for w, e in t.adjacency(v) if w in alive)) for v in leaves
        )
        if len(internal) <= 1:
            edges = tuple(
                e for e, (u, v) in enumerate(t.edges) if u in alive and v in alive
            )
            center = internal[0] if internal else None
            levels.append(PruningLevel(pendant, edges, center))
            residual: Residual = "star" if internal else "K2"
            break

        levels.append(PruningLevel(pendant, tuple(sorted(e for _, e in pendant))))
        for v, e in pendant:
            alive.discard(v)
            degree[t.other(e, v)] -= 1

    logger.debug("pruned %d vertices into levels %s", t.n, [lv.size for lv in levels])
    return PruningTrace(tuple(levels), residual)


def tree_unique_flow(t: Graph, gamma: GammaLike = 1) -> Optional[FlowAssignment]:
    """
    The unique γ-flow of a tree, ``None`` when the star condition fails.

    >>> tree_unique_flow(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    (Fraction(1, 1), Fraction(0, 1), Fraction(1, 1))
    >>> tree_unique_flow(Graph(3, [(0, 1), (1, 2)])) is None
    True

    :raises ~sumflow.core.GraphStructureError: ``t`` is not a tree.
    """
    trace = prune(t)
    residual = list(as_gamma(t, gamma))
    if trace.residual == "K1":
        return () if residual[0] == 0 else None

    values: Dict[int, Fraction] = {}
    for level in trace.levels[:-1]:
        for v, e in level.pendant:
            values[e] = residual[v]
            residual[t.other(e, v)] -= residual[v]

    last = trace.levels[-1]
    if last.center is None:
        (u, e), (v, _) = last.pendant
        if residual[u] != residual[v]:
            return None
        values[e] = residual[u]
    else:
        total = sum((residual[v] for v in last.vertices), Fraction(0))
        if residual[last.center] != total:
            return None
        for v, e in last.pendant:
            values[e] = residual[v]

    return tuple(values[e] for e in range(t.m))


@dataclass(frozen=True)
class LevelDiagnostics:
    """
    ``total`` is ``ω(E(P_i))``; ``sign_ok`` says odd levels are ``≥ 1`` and
    even levels ``≤ 0``; ``partial_sum_ok`` is
    ``(−1)^i (ω(E(P_i)) − Σ_{j<i} (−1)^j p_{i−j}) ≥ 0``.
    """

    index: int
    size: int
    total: Fraction
    sign_ok: bool
    partial_sum_bound: Optional[int]
    partial_sum_ok: bool


@dataclass(frozen=True)
class TreeRangeReport:
    p1: int
    predicted_interval: Tuple[Fraction, Fraction]
    achieved_values: Tuple[Fraction, ...]
    flow: FlowAssignment
    levels: Tuple[LevelDiagnostics, ...]
    leaf_in_each_part: bool
    window: Optional[Tuple[Fraction, Fraction]]

    @property
    def within_window(self) -> Optional[bool]:
        if self.window is None:
            return None
        low, high = self.window
        return all(low <= x <= high for x in self.achieved_values)


def predicted_interval(p1: int) -> Tuple[Fraction, Fraction]:
    """
    >>> predicted_interval(7)
    (Fraction(-2, 1), Fraction(3, 1))
    """
    if p1 <= 3:
        return Fraction(0), Fraction(1)
    return Fraction(1 - p1 // 2), Fraction(p1 // 2)


def tree_range_report(t: Graph) -> TreeRangeReport:
    """
    Range diagnostics for the 1-sum flow of a balanced tree.

    >>> report = tree_range_report(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    >>> report.achieved_values
    (Fraction(0, 1), Fraction(1, 1))

    :raises ~sumflow.core.GraphStructureError: ``t`` is not a tree.
    :raises ~sumflow.core.PreconditionError: ``t`` is not balanced.
    """
    trace = prune(t)
    flow = tree_unique_flow(t, 1)
    if flow is None:
        raise PreconditionError("tree is not balanced")

    sizes = trace.sizes
    diagnostics = []
    for i, level in enumerate(trace.levels, start=1):
        level_values = [flow[e] for e in level.edges]
        total = sum(level_values, Fraction(0))
        if i % 2:
            sign_ok = all(x >= 1 for x in level_values)
        else:
            sign_ok = all(x <= 0 for x in level_values)
        if i == 1:
            if any(x != 1 for x in level_values):
                raise VerificationError("tree pruning", "a first-level edge is not 1")
            bound, partial_ok = None, True
        else:
            bound = sum((-1) ** j * sizes[i - 1 - j] for j in range(i))
            partial_ok = (-1) ** i * (total - bound) >= 0
        diagnostics.append(
            LevelDiagnostics(i, level.size, total, sign_ok, bound, partial_ok)
        )

    p1 = leaf_count(t)
    interval = predicted_interval(p1)
    achieved = tuple(sorted(set(flow)))
    if not all(interval[0] <= x <= interval[1] for x in achieved):
        raise VerificationError(
            "tree range", f"values {[str(x) for x in achieved]} leave {interval}"
        )

    leaves = {v for v, d in enumerate(t.degrees()) if d == 1}
    leaf_in_each_part = all(leaves & set(side) for side in balanced_tree_sides(t))
    window = None
    if t.n >= 6:
        window = (Fraction(2 - t.n // 2), Fraction(t.n // 2 - 2))
    return TreeRangeReport(
        p1,
        interval,
        achieved,
        flow,
        tuple(diagnostics),
        leaf_in_each_part,
        window,
    )


def _pl4_with_leaves(counts: Tuple[int, int, int, int]) -> Graph:
    edges = [(0, 1), (1, 2), (2, 3)]
    n = 4
    for v, count in enumerate(counts):
        for _ in range(count):
            edges.append((v, n))
            n += 1
    return Graph(n, edges)


def make_extremal_tree(kind: str, n: int) -> Graph:
    """
    The balanced trees that attain the extreme 1-sum flow values.

    ``tmin``: ``K₂`` with ``(n−2)/2`` leaves at each end.
    ``tmax``: the path ``v₁v₂v₃v₄`` with ``(n−4)/2`` leaves at ``v₁`` and at
    ``v₄``.
    ``topt``: the same path with ``(n−4)/2`` leaves at ``v₁``, ``(n−6)/2`` at
    ``v₄`` and one at ``v₂``.
    ``s1``: the path with ``(n−4)/2`` leaves at ``v₁``, ``(n−6)/2`` at ``v₂``
    and one at ``v₄``; ``n−4`` leaves, values ``{(6−n)/2, 0, 1}``.
    ``s2``: ``tmax`` with one leaf each moved from ``v₁``, ``v₄`` to ``v₂``,
    ``v₃``.

    All but ``tmin`` have ``n−4`` leaves.

    >>> make_extremal_tree("tmin", 6).degrees()
    (3, 3, 1, 1, 1, 1)
    >>> make_extremal_tree("s1", 8).degrees()
    (3, 3, 2, 2, 1, 1, 1, 1)

    :raises ~sumflow.core.PreconditionError: unknown kind, odd ``n`` or \
        ``n`` too small.
    """
    if kind not in EXTREMAL_KINDS:
        raise PreconditionError(f"unknown extremal tree {kind!r}")
    floor = 6 if kind in ("tmin", "tmax") else 8
    if n % 2 or n < floor:
        raise PreconditionError(f"{kind} needs an even n >= {floor}, got {n}")

    q = (n - 4) // 2
    if kind == "tmax":
        return _pl4_with_leaves((q, 0, 0, q))
    if kind == "topt":
        return _pl4_with_leaves((q, 1, 0, q - 1))
    if kind == "s2":
        return _pl4_with_leaves((q - 1, 1, 1, q - 1))
    if kind == "s1":
        return _pl4_with_leaves((q, q - 1, 0, 1))

    half = (n - 2) // 2
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(half)]
    edges += [(1, 2 + half + i) for i in range(half)]
    return Graph(n, edges)


__all__ = (
    "EXTREMAL_KINDS",
    "ExtremalKind",
    "LevelDiagnostics",
    "PruningLevel",
    "PruningTrace",
    "Residual",
    "TreeRangeReport",
    "balanced_tree_sides",
    "leaf_count",
    "make_extremal_tree",
    "predicted_interval",
    "prune",
    "tree_range_report",
    "tree_unique_flow",
)
