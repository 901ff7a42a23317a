"""
================================================
:mod:`special` -- Named flow constructions
================================================

Every function here returns a :class:`~sumflow.labels.FlowResult`, which is
verified exactly before it is returned, or ``None`` when the requested flow
does not exist. A construction that fails its own verification raises
:class:`~sumflow.core.VerificationError`; it never degrades into ``None``.
"""
# Standard Library
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

# Third Party Library
from typing_extensions import Final

# Local Folder
from .core import (
    CapExceededError,
    ConjectureError,
    FlowAssignment,
    Graph,
    GraphStructureError,
    PreconditionError,
    VerificationError,
)
from .factors import (
    REGULAR_FACTOR_CAP,
    Factor,
    FactorKind,
    f_factor,
    factor_containing,
    factor_flow,
    one_factorization_bipartite,
    one_two_factor,
    perfect_matching,
    regular_component_factor,
    two_factorization,
)
from .graph import (
    INDEPENDENCE_CAP,
    bipartite_double_cover,
    bipartition,
    bridges,
    components,
    euler_circuit,
    independence_number,
    is_tree,
    regular_degree,
    require_connected,
    spanning_tree,
)
from .labels import FlowResult, IntervalSpec, LabelSet
from .linalg import integerize
from .linalg import nullspace as matrix_nullspace
from .lp import Feasible, ValueRange, edge_value_range, interval_flow
from .solver import (
    GammaLike,
    as_gamma,
    incidence_matrix,
    nullspace,
    solve_halfinteger,
    solve_integer_bipartite,
)
from .trees import leaf_count, predicted_interval, tree_unique_flow

logger = logging.getLogger(__name__)

POSITIVE_WITNESS_CAP: Final = 20

HALF = Fraction(1, 2)
ZERO_HALF_ONE: Final = LabelSet.finite([0, HALF, 1])
SIGNED_UNIT: Final = LabelSet.finite([-1, 0, 1])
THREE_FLOW: Final = LabelSet.k_flow(3)
POSITIVE_UNIT: Final = LabelSet.of_interval(IntervalSpec.of(0, 1, open_low=True))

Window = Tuple[Fraction, Fraction]


def _factor_kind(g: Graph) -> FactorKind:
    return "perfect_matching" if bipartition(g) is not None else "one_two_factor"


def _spread(m: int, back: Sequence[int], values: Iterable[Fraction]) -> List[Fraction]:
    """
    Extend values on a spanning subgraph by zero.
    """
    result = [Fraction(0)] * m
    for e, value in zip(back, values):
        result[e] = value
    return result


def one_zero_one_flow(g: Graph) -> Optional[FlowResult]:
    """
    A 1-sum flow with values in ``{0, 1/2, 1}``: a perfect matching of a
    bipartite graph, otherwise a {1,2}-factor with ``1/2`` on its cycles.

    >>> c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    >>> one_zero_one_flow(c5).distinct_values()
    (Fraction(1, 2),)
    >>> one_zero_one_flow(Graph(4, [(0, 1), (0, 2), (0, 3)])) is None
    True

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    require_connected(g)
    if bipartition(g) is not None:
        matching = perfect_matching(g)
        if matching is None:
            return None
        flow = [Fraction(int(e in matching.edges)) for e in range(g.m)]
        return FlowResult.build(g, flow, ZERO_HALF_ONE, "perfect matching")

    factor = one_two_factor(g)
    if factor is None:
        return None
    return FlowResult.build(g, factor_flow(g, factor), ZERO_HALF_ONE, "{1,2}-factor")


def positive_flow_decision(g: Graph) -> bool:
    """
    Whether ``g`` has a 1-sum flow with values in ``(0, 1]``: every edge
    must lie in a perfect matching (bipartite ``g``) or a {1,2}-factor.

    >>> positive_flow_decision(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    False

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    require_connected(g)
    if g.m == 0:
        return False
    kind = _factor_kind(g)
    return all(factor_containing(g, e, kind) is not None for e in range(g.m))


def one_positive_flow(
    g: Graph, cap: int = POSITIVE_WITNESS_CAP
) -> Optional[FlowResult]:
    """
    The average of one witness factor flow per uncovered edge.

    >>> c6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    >>> one_positive_flow(c6).distinct_values()
    (Fraction(1, 2),)

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    :raises ~sumflow.core.CapExceededError: the flow exists but ``g`` has \
        more than ``cap`` edges; the error carries the decision.
    """
    if not positive_flow_decision(g):
        return None
    if g.m > cap:
        raise CapExceededError("positive flow witness edge count", cap, decision=True)

    kind = _factor_kind(g)
    witnesses: List[Factor] = []
    covered: Set[int] = set()
    for e in range(g.m):
        if e in covered:
            continue
        found = factor_containing(g, e, kind)
        assert found is not None
        factor = found if isinstance(found, Factor) else Factor.of(g, found.edges)
        witnesses.append(factor)
        covered |= factor.edges

    flows = [factor_flow(g, factor) for factor in witnesses]
    average = [sum(column, Fraction(0)) / len(flows) for column in zip(*flows)]
    return FlowResult.build(
        g, average, POSITIVE_UNIT, f"average of {len(flows)} factor flows"
    )


def _signed_unit_values(g: Graph) -> List[Fraction]:
    """
    Give the ``i``-th 1-factor of the double cover ``(−1)^i / 2`` and fold
    back by adding the values of the two lifts of every edge.
    """
    cover = bipartite_double_cover(g)
    decomposition = one_factorization_bipartite(cover.graph)
    half = [Fraction(0)] * cover.graph.m
    for i, factor in enumerate(decomposition.factors):
        for c in factor.edges:
            half[c] = HALF if i % 2 == 0 else -HALF
    values = []
    for e in range(g.m):
        first, second = cover.lift(e)
        values.append(half[first] + half[second])
    return values


def pm1_flow_odd_regular(g: Graph) -> FlowResult:
    """
    A 1-sum ``{−1, 0, 1}``-flow of a connected ``k``-regular graph, ``k`` odd.

    >>> pm1_flow_odd_regular(Graph(2, [(0, 1)])).flow
    (Fraction(1, 1),)

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    :raises ~sumflow.core.PreconditionError: ``g`` is not regular of odd degree.
    """
    require_connected(g)
    k = regular_degree(g)
    if k is None or k % 2 == 0:
        raise PreconditionError("graph must be regular of odd degree")
    return FlowResult.build(
        g, _signed_unit_values(g), SIGNED_UNIT, "double cover 1-factorization"
    )


def pm1_flow_mod4_regular(g: Graph) -> FlowResult:
    """
    A 1-sum ``{−1, 0, 1}``-flow of a connected ``k``-regular graph of even
    order with ``k ≡ 2 (mod 4)``. Alternating along an Euler circuit splits
    ``g`` into two ``k/2``-regular halves; the first takes the odd-degree
    construction and the second is zero.

    >>> c6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    >>> [str(x) for x in sorted(pm1_flow_mod4_regular(c6).flow)]
    ['0', '0', '0', '1', '1', '1']

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    :raises ~sumflow.core.PreconditionError: ``k ≢ 2 (mod 4)`` or odd order.
    """
    require_connected(g)
    k = regular_degree(g)
    if k is None or k % 4 != 2:
        raise PreconditionError("graph must be k-regular with k = 2 (mod 4)")
    if g.n % 2:
        raise PreconditionError(f"graph must have even order, got {g.n}")

    half, back = g.edge_subgraph(euler_circuit(g)[0::2])
    if regular_degree(half) != k // 2:
        raise VerificationError("Euler split", f"degrees {half.degrees()}")
    values = _spread(g.m, back, _signed_unit_values(half))
    return FlowResult.build(g, values, SIGNED_UNIT, "Euler split")


def _two_factors_of(g: Graph, edge_ids: Iterable[int]) -> List[FrozenSet[int]]:
    """
    2-factorization of the non-isolated part of a spanning subgraph whose
    nonzero degrees are equal and even.
    """
    sub, back = g.edge_subgraph(edge_ids)
    isolated = [v for v in range(sub.n) if sub.degree(v) == 0]
    core, _, kept = sub.remove_vertices(isolated)
    if core.m == 0:
        return []
    decomposition = two_factorization(core)
    return [
        frozenset(back[kept[e]] for e in factor.edges)
        for factor in decomposition.factors
    ]


def one_sum_3flow(g: Graph, cap: int = REGULAR_FACTOR_CAP) -> FlowResult:
    """
    A 1-sum ``{±1, ±2}``-flow of an ``r``-regular graph, ``r = 2t + 1 ≥ 5``,
    from a ``[t, t+1]``-factor with regular components: ``H`` collects its
    ``t``-regular components and ``K`` its ``(t+1)``-regular ones.

    Odd ``t``: ``1`` off the factor, ``−1`` on ``H``; on ``K`` one 2-factor
    gets ``−2``, another ``1`` and the rest ``−1``.
    Even ``t``: ``−1`` off the factor, ``1`` on ``K``; on ``H`` one 2-factor
    gets ``2`` and the rest ``1``. For ``r = 5`` this is the
    ``[2,3]``-factor rule.

    :raises ~sumflow.core.PreconditionError: ``g`` is not regular of odd \
        degree at least 5.
    :raises ~sumflow.core.CapExceededError: the factor search hit ``cap``.
    """
    r = regular_degree(g)
    if r is None or r < 5 or r % 2 == 0:
        raise PreconditionError("graph must be regular of odd degree at least 5")
    t = (r - 1) // 2
    factor = regular_component_factor(g, t + 1, cap)
    if factor is None:
        raise VerificationError("one-sum 3-flow", f"no [{t},{t + 1}]-factor found")

    in_h = {e for e in factor.edges if factor.degrees[g.edges[e][0]] == t}
    in_k = set(factor.edges) - in_h
    if t % 2:
        outside, on_h, on_k = 1, -1, -1
        twos, overrides = _two_factors_of(g, in_k), (-2, 1)
    else:
        outside, on_h, on_k = -1, 1, 1
        twos, overrides = _two_factors_of(g, in_h), (2,)

    values = []
    for e in range(g.m):
        if e in in_h:
            values.append(Fraction(on_h))
        elif e in in_k:
            values.append(Fraction(on_k))
        else:
            values.append(Fraction(outside))
    for two_factor, value in zip(twos, overrides):
        for e in two_factor:
            values[e] = Fraction(value)

    if r == 5:
        provenance = "[2,3]-factor"
    else:
        provenance = f"[{t},{t + 1}]-factor with t {'odd' if t % 2 else 'even'}"
    return FlowResult.build(g, values, THREE_FLOW, provenance)


def _uniform_factor(g: Graph, degree: int) -> Factor:
    factor = f_factor(g, [degree] * g.n)
    if factor is None:
        raise VerificationError("zero-sum 3-flow", f"no {degree}-factor found")
    return factor


def zero_sum_3flow(g: Graph) -> FlowResult:
    """
    A 0-sum ``{±1, ±2}``-flow of a 2-edge-connected ``r``-regular graph,
    ``r`` odd and not 5. With ``F`` a regular factor valued ``2`` and the
    rest of the edges split into 2-factors:

    * ``r = 3t``: ``F`` is a ``t``-factor, the rest gets ``−1``;
    * ``r = 3t + 1``: ``F`` is a ``(t+1)``-factor, one 2-factor gets ``−2``
      and the rest ``−1``;
    * ``r = 3t + 2``: ``F`` is a ``(t+2)``-factor, two 2-factors get ``−2``
      and the rest ``−1``.

    >>> k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    >>> sorted(zero_sum_3flow(k4).flow).count(2)
    2

    :raises ~sumflow.core.GraphStructureError: ``g`` is not 2-edge-connected.
    :raises ~sumflow.core.ConjectureError: ``r = 5``.
    :raises ~sumflow.core.PreconditionError: ``g`` is not regular of odd \
        degree at least 3.
    """
    require_connected(g)
    r = regular_degree(g)
    if r is None or r < 3 or r % 2 == 0:
        raise PreconditionError("graph must be regular of odd degree at least 3")
    if r == 5:
        raise ConjectureError("the 5-regular case of the zero-sum 3-flow is open")
    if bridges(g):
        raise GraphStructureError("graph must be 2-edge-connected")

    t, case = divmod(r, 3)
    factor = _uniform_factor(g, t + case)
    values = [Fraction(2 if e in factor.edges else -1) for e in range(g.m)]
    rest = [e for e in range(g.m) if e not in factor.edges]
    twos = _two_factors_of(g, rest) if case else []
    for two_factor in twos[:case]:
        for e in two_factor:
            values[e] = Fraction(-2)
    return FlowResult.build(
        g, values, THREE_FLOW, f"{t + case}-factor of a {r}-regular graph", 0
    )


def kfactor_scaled_flow(g: Graph, k: int) -> Optional[FlowResult]:
    """
    ``1/k`` on a ``k``-factor and ``0`` elsewhere.

    >>> c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    >>> kfactor_scaled_flow(c5, 2).distinct_values()
    (Fraction(1, 2),)
    >>> kfactor_scaled_flow(Graph(4, [(0, 1), (0, 2), (0, 3)]), 1) is None
    True

    :raises ~sumflow.core.PreconditionError: ``k < 1``.
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    if any(d < k for d in g.degrees()):
        return None
    factor = f_factor(g, [k] * g.n)
    if factor is None:
        return None
    share = Fraction(1, k)
    values = [share if e in factor.edges else Fraction(0) for e in range(g.m)]
    return FlowResult.build(g, values, LabelSet.finite([0, share]), f"{k}-factor")


def averaged_tree_flow(
    g: Graph, trees: Sequence[Iterable[int]]
) -> Optional[FlowResult]:
    """
    The average of the 1-sum flows of edge-disjoint spanning trees, each
    extended by zero. ``None`` when some tree has no 1-sum flow.

    >>> k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    >>> result = averaged_tree_flow(k4, [[0, 3, 5], [1, 2, 4]])
    >>> result.label_set.interval.b
    Fraction(1, 2)

    :raises ~sumflow.core.PreconditionError: no trees, trees sharing an \
        edge, or an edge set that is not a spanning tree.
    """
    edge_sets = [frozenset(tree) for tree in trees]
    if not edge_sets:
        raise PreconditionError("at least one spanning tree is needed")
    seen: Set[int] = set()
    for edges in edge_sets:
        if any(not 0 <= e < g.m for e in edges):
            raise PreconditionError(f"edge set {sorted(edges)} leaves 0..{g.m - 1}")
        if seen & edges:
            raise PreconditionError("trees are not edge-disjoint")
        seen |= edges

    k = len(edge_sets)
    values = [Fraction(0)] * g.m
    low, high = Fraction(0), Fraction(0)
    for edges in edge_sets:
        sub, back = g.edge_subgraph(edges)
        if not is_tree(sub):
            raise PreconditionError(f"edges {sorted(edges)} are not a spanning tree")
        tree_flow = tree_unique_flow(sub, 1)
        if tree_flow is None:
            return None
        tree_low, tree_high = predicted_interval(leaf_count(sub))
        low, high = min(low, tree_low / k), max(high, tree_high / k)
        for e, value in zip(back, tree_flow):
            values[e] = value / k

    label_set = LabelSet.of_interval(IntervalSpec(low, high))
    return FlowResult.build(
        g, values, label_set, f"average of {k} spanning tree flows"
    )


def independence_window(g: Graph, cap: int = INDEPENDENCE_CAP) -> Optional[Window]:
    """
    The range promised through the independence number ``α``: ``{1/k}`` for
    ``k``-regular graphs, ``[1−α, α]`` for non-bipartite graphs and
    ``[1−⌊α/2⌋, ⌊α/2⌋]`` for balanced bipartite ones.

    >>> independence_window(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 2)]))
    (Fraction(-1, 1), Fraction(2, 1))

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    :raises ~sumflow.core.CapExceededError: more than ``cap`` vertices.
    """
    require_connected(g)
    k = regular_degree(g)
    if k:
        return Fraction(1, k), Fraction(1, k)
    parts = bipartition(g)
    if parts is None:
        alpha = independence_number(g, cap)
        return Fraction(1 - alpha), Fraction(alpha)
    if not parts.balanced:
        return None
    half = independence_number(g, cap) // 2
    return Fraction(1 - half), Fraction(half)


@dataclass(frozen=True)
class RangeReport:
    """
    ``window`` is the size-based range, given for balanced bipartite graphs
    with ``n ≥ 8`` and non-bipartite graphs with ``n ≥ 6``; ``alpha_window``
    is :func:`independence_window`, ``None`` beyond its cap.
    """

    result: FlowResult
    window: Optional[Window]
    within_window: Optional[bool]
    alpha_window: Optional[Window]


def general_range_flow(g: Graph, cap: int = INDEPENDENCE_CAP) -> Optional[RangeReport]:
    """
    A 1-sum flow of a connected graph with its range report: the tree flow
    of a spanning tree for balanced bipartite graphs, a half-integral flow on
    a spanning tree plus an odd edge otherwise. ``None`` for unbalanced
    bipartite graphs.

    >>> c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    >>> general_range_flow(c5).result.distinct_values()
    (Fraction(1, 2),)
    >>> general_range_flow(Graph(3, [(0, 1), (1, 2)])) is None
    True

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    require_connected(g)
    parts = bipartition(g)
    window: Optional[Window] = None
    if parts is not None:
        if not parts.balanced:
            return None
        sub, back = g.edge_subgraph(spanning_tree(g))
        tree_flow = tree_unique_flow(sub, 1)
        assert tree_flow is not None
        values = _spread(g.m, back, tree_flow)
        provenance = "spanning tree flow"
        if g.n >= 8:
            window = Fraction(2 - g.n // 2), Fraction(g.n // 2 - 2)
    else:
        values = list(solve_halfinteger(g, 1))
        provenance = "half-integral spanning tree and odd edge"
        if g.n >= 6:
            window = Fraction(5 - g.n), Fraction(g.n - 5)

    label_set = LabelSet.of_interval(IntervalSpec(min(values), max(values)))
    result = FlowResult.build(g, values, label_set, provenance)
    within = None
    if window is not None:
        within = all(window[0] <= x <= window[1] for x in values)
    try:
        alpha_window = independence_window(g, cap)
    except CapExceededError:
        alpha_window = None
    return RangeReport(result, window, within, alpha_window)


def blocking_bridges(g: Graph) -> FrozenSet[int]:
    """
    Bridges of a connected bipartite graph whose removal leaves balanced
    components; every 1-sum flow is zero on them.

    >>> sorted(blocking_bridges(Graph(4, [(0, 1), (1, 2), (2, 3)])))
    [1]

    :raises ~sumflow.core.GraphStructureError: disconnected or non-bipartite \
        input.
    """
    parts = bipartition(g)
    if parts is None:
        raise GraphStructureError("graph is not bipartite")
    blocking = set()
    for e in bridges(g):
        rest, _ = g.edge_subgraph(f for f in range(g.m) if f != e)
        u, _ = g.edges[e]
        side = next(c for c in components(rest) if u in c)
        if sum(parts.sign(v) for v in side) == 0:
            blocking.add(e)
    return frozenset(blocking)


def generic_combination(
    vectors: Sequence[Sequence[int]], width: int, required: Iterable[int]
) -> Tuple[int, ...]:
    """
    ``Σ M^i β_i`` over integer vectors ``β_i``, nonzero on every ``required``
    coordinate. Starting from ``M = 1 + 2·max|β|``, where every coordinate is
    a base-``M`` expansion with small digits, ``M`` grows until that holds.

    >>> generic_combination([(1, 0, -1), (0, 1, 1)], 3, [0, 1, 2])
    (1, 3, 2)

    :raises ~sumflow.core.PreconditionError: a required coordinate is zero \
        in every vector.
    """
    needed = list(required)
    for e in needed:
        if all(vector[e] == 0 for vector in vectors):
            raise PreconditionError(f"coordinate {e} vanishes in every vector")
    if not vectors:
        return (0,) * width

    base = 1 + 2 * max(abs(x) for vector in vectors for x in vector)
    while True:
        alpha = tuple(
            sum(base ** i * vector[e] for i, vector in enumerate(vectors))
            for e in range(width)
        )
        if all(alpha[e] != 0 for e in needed):
            return alpha
        logger.debug("combination base %d leaves a zero, escalating", base)
        base += 1


def nowhere_zero_one_sum(g: Graph, integral: bool = False) -> Optional[FlowResult]:
    """
    A 1-sum flow without zeros on a connected balanced bipartite graph.
    It exists iff no bridge splits ``g`` into balanced components. The flow
    is ``ω + aα``: ``ω`` an integral 1-sum flow, ``α`` a generic 0-sum flow
    and ``a`` the least positive integer (``integral``) or half-integer that
    avoids every zero.

    >>> c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    >>> nowhere_zero_one_sum(c4).distinct_values()
    (Fraction(1, 2),)
    >>> sorted(nowhere_zero_one_sum(c4, integral=True).distinct_values())
    [Fraction(-1, 1), Fraction(2, 1)]
    >>> nowhere_zero_one_sum(Graph(4, [(0, 1), (1, 2), (2, 3)])) is None
    True

    :raises ~sumflow.core.GraphStructureError: disconnected or non-bipartite \
        input.
    :raises ~sumflow.core.PreconditionError: unbalanced input.
    """
    require_connected(g)
    parts = bipartition(g)
    if parts is None:
        raise GraphStructureError("graph is not bipartite")
    if not parts.balanced:
        raise PreconditionError("graph is not balanced")
    if blocking_bridges(g):
        return None

    base = solve_integer_bipartite(g, 1)
    basis = nullspace(g)
    free = [e for e in range(g.m) if not basis.vanishing(e)]
    alpha = generic_combination(basis.vectors, g.m, free)
    bad = {-base[e] / alpha[e] for e in free}
    step = Fraction(1) if integral else HALF
    a = step
    while a in bad:
        a += step
    logger.debug("nowhere-zero scalar %s avoids %d bad values", a, len(bad))

    values = [x + a * y for x, y in zip(base, alpha)]
    label_set = LabelSet.nonzero_ints() if integral else LabelSet.nonzero_reals()
    return FlowResult.build(g, values, label_set, "nullspace perturbation")


def _witness_point(
    flow: FlowAssignment, ray: Optional[FlowAssignment]
) -> FlowAssignment:
    if ray is None:
        return flow
    return tuple(x + y for x, y in zip(flow, ray))


def _relative_interior(
    g: Graph, gamma: GammaLike, closure: IntervalSpec
) -> Optional[Tuple[FlowAssignment, Tuple[ValueRange, ...]]]:
    """
    A point of the relative interior of the closed flow polytope: the
    average of the extreme flows of every coordinate, stepping along the
    recession ray on unbounded sides.
    """
    if not interval_flow(g, gamma, closure).feasible:
        return None
    ranges = tuple(edge_value_range(g, gamma, e, closure) for e in range(g.m))
    points = []
    for value_range in ranges:
        points.append(_witness_point(value_range.low_flow, value_range.low_ray))
        points.append(_witness_point(value_range.high_flow, value_range.high_ray))
    if not points:
        return (), ranges
    point = tuple(sum(column, Fraction(0)) / len(points) for column in zip(*points))
    return point, ranges


def _affine_direction(g: Graph, pinned: Sequence[int]) -> Tuple[int, ...]:
    """
    A 0-sum flow vanishing on ``pinned`` and nonzero on every other edge.
    """
    rows = [list(row) for row in incidence_matrix(g).dense()]
    for e in pinned:
        rows.append([Fraction(int(f == e)) for f in range(g.m)])
    vectors = [integerize(vector) for vector in matrix_nullspace(rows, g.m)]
    free = [e for e in range(g.m) if e not in set(pinned)]
    return generic_combination(vectors, g.m, free)


def _slack(interval: IntervalSpec, x: Fraction) -> Optional[Fraction]:
    gaps = []
    if interval.a is not None:
        gaps.append(x - interval.a)
    if interval.b is not None:
        gaps.append(interval.b - x)
    return min(gaps) if gaps else None


def punctured_interval_flow(
    g: Graph, gamma: GammaLike, interval: IntervalSpec
) -> Optional[FlowResult]:
    """
    A γ-flow with values in ``interval``, which may be open at either end
    and may exclude ``0``. Coordinates that are constant on the closed
    polytope decide feasibility; the others are strictly inside at a
    relative interior point, which is then moved along a generic direction
    of the affine hull until no value is ``0``.

    >>> c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    >>> nonzero = IntervalSpec.of(-1, 2, punctured=True)
    >>> 0 in punctured_interval_flow(c4, 1, nonzero).flow
    False
    >>> path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    >>> punctured_interval_flow(path, 1, nonzero) is None
    True

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    label_set = LabelSet.of_interval(interval)
    if interval.is_empty():
        return None
    if interval.closed:
        decision = interval_flow(g, gamma, interval)
        if not isinstance(decision, Feasible):
            return None
        return FlowResult.build(
            g, decision.flow, label_set, "interval linear program", gamma
        )

    closure = interval.closure()
    found = _relative_interior(g, gamma, closure)
    if found is None:
        return None
    point, ranges = found
    pinned = [e for e, value_range in enumerate(ranges) if value_range.forced]
    if not all(interval.contains(point[e]) for e in pinned):
        return None
    free = [e for e in range(g.m) if not ranges[e].forced]
    if not interval.punctured or not free:
        return FlowResult.build(g, point, label_set, "relative interior", gamma)

    alpha = _affine_direction(g, pinned)
    epsilon = Fraction(1)
    for e in free:
        slack = _slack(closure, point[e])
        if slack is not None:
            epsilon = min(epsilon, slack / (2 * abs(alpha[e])))
    while any(point[e] + epsilon * alpha[e] == 0 for e in free):
        epsilon /= 2
    logger.debug("perturbing the relative interior point by %s", epsilon)
    values = [x + epsilon * y for x, y in zip(point, alpha)]
    return FlowResult.build(
        g, values, label_set, "relative interior perturbation", gamma
    )


def open_interval_flow(
    g: Graph, gamma: GammaLike, interval: IntervalSpec
) -> Optional[FlowResult]:
    """
    A γ-flow with values in an interval that may be open at either end.

    >>> k2 = Graph(2, [(0, 1)])
    >>> open_interval_flow(k2, 1, IntervalSpec.of(0, 1, open_high=True)) is None
    True
    >>> c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    >>> open_interval_flow(c4, 1, IntervalSpec.of(0, 1, open_low=True)).flow
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))

    :raises ~sumflow.core.PreconditionError: ``interval`` excludes ``0``.
    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    if interval.punctured:
        raise PreconditionError(
            f"{interval} excludes 0; use punctured_interval_flow"
        )
    return punctured_interval_flow(g, gamma, interval)


def nowhere_zero_gamma_flow(g: Graph, gamma: GammaLike) -> Optional[FlowResult]:
    """
    A γ-flow with no zero value.

    >>> nowhere_zero_gamma_flow(Graph(3, [(0, 1), (1, 2), (0, 2)]), 2).flow
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    return punctured_interval_flow(
        g, as_gamma(g, gamma), IntervalSpec(None, None, punctured=True)
    )


__all__ = (
    "POSITIVE_UNIT",
    "POSITIVE_WITNESS_CAP",
    "RangeReport",
    "SIGNED_UNIT",
    "THREE_FLOW",
    "Window",
    "ZERO_HALF_ONE",
    "averaged_tree_flow",
    "blocking_bridges",
    "general_range_flow",
    "generic_combination",
    "independence_window",
    "kfactor_scaled_flow",
    "nowhere_zero_gamma_flow",
    "nowhere_zero_one_sum",
    "one_positive_flow",
    "one_sum_3flow",
    "one_zero_one_flow",
    "open_interval_flow",
    "pm1_flow_mod4_regular",
    "pm1_flow_odd_regular",
    "positive_flow_decision",
    "punctured_interval_flow",
    "zero_sum_3flow",
)
