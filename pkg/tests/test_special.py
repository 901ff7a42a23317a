# Standard Library
import random
import reprlib

from fractions import Fraction

# Third Party Library
import pytest

# First Party Library
from sumflow.core import (
    CapExceededError,
    ConjectureError,
    Graph,
    GraphStructureError,
    PreconditionError,
)
from sumflow.generators import (
    circulant,
    complete,
    complete_bipartite,
    cycle,
    odd_cycle_cactus,
    path,
    petersen,
)
from sumflow.graph import bipartition
from sumflow.labels import IntervalSpec
from sumflow.oracle import enumerate_finite_flows, forced_edge_values
from sumflow.special import (
    SIGNED_UNIT,
    THREE_FLOW,
    ZERO_HALF_ONE,
    averaged_tree_flow,
    blocking_bridges,
    general_range_flow,
    generic_combination,
    independence_window,
    kfactor_scaled_flow,
    nowhere_zero_gamma_flow,
    nowhere_zero_one_sum,
    one_positive_flow,
    one_sum_3flow,
    one_zero_one_flow,
    open_interval_flow,
    pm1_flow_mod4_regular,
    pm1_flow_odd_regular,
    positive_flow_decision,
    punctured_interval_flow,
    zero_sum_3flow,
)

# Local Folder
from .utils import (
    C3,
    C4,
    C5,
    C6,
    K4,
    P4,
    STAR3,
    assert_flow,
    connected_atlas,
    random_bipartite,
)

HALF = Fraction(1, 2)
DISCONNECTED = Graph(4, [(0, 1), (2, 3)])
POSITIVE = IntervalSpec.of(0, 1, open_low=True)

SMALL = list(connected_atlas(2, 5))


def is_balanced(g):
    parts = bipartition(g)
    return parts is not None and parts.balanced


BALANCED = [g for g in connected_atlas(2, 6) if is_balanced(g)]


def bridged_cubic():
    """
    Cubic on 16 vertices; the three edges at vertex 0 are bridges.
    """
    edges = []
    for i in range(3):
        x, a, b, c, d = range(1 + 5 * i, 6 + 5 * i)
        edges += [(0, x), (x, a), (x, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
    return Graph(16, edges)


@pytest.mark.parametrize("g", SMALL, ids=reprlib.repr)
def test_zero_half_one_flow_agrees_with_enumeration(g):
    result = one_zero_one_flow(g)
    count = enumerate_finite_flows(g, ZERO_HALF_ONE).count
    assert (result is None) == (count == 0)
    if result is not None:
        assert_flow(g, result.flow, 1, ZERO_HALF_ONE)


def test_zero_half_one_flow_provenance():
    assert one_zero_one_flow(C4).provenance == "perfect matching"
    assert one_zero_one_flow(C4).distinct_values() == (0, 1)
    assert one_zero_one_flow(C5).provenance == "{1,2}-factor"
    assert one_zero_one_flow(STAR3) is None
    with pytest.raises(GraphStructureError):
        one_zero_one_flow(DISCONNECTED)


def random_odd_cactus(rng):
    while True:
        lengths = [rng.choice([3, 5, 7]) for _ in range(rng.randint(1, 5))]
        anchors, n = [], lengths[0]
        bridged = {i for i in range(1, len(lengths)) if rng.random() < 0.3}
        for i, k in enumerate(lengths[1:], start=1):
            anchors.append(rng.randrange(n))
            n += k if i in bridged else k - 1
        if n <= 14:
            return odd_cycle_cactus(lengths, anchors, bridged)


@pytest.mark.parametrize("seed", range(10))
def test_odd_cycle_cacti_have_zero_half_one_flows(seed):
    rng = random.Random(seed)
    for _ in range(10):
        g = random_odd_cactus(rng)
        assert min(g.degrees()) >= 2
        result = one_zero_one_flow(g)
        assert result is not None
        assert_flow(g, result.flow, label_set=ZERO_HALF_ONE)


@pytest.mark.parametrize("g", SMALL, ids=reprlib.repr)
def test_positive_flow_decision_agrees_with_the_open_interval(g):
    found = open_interval_flow(g, 1, POSITIVE)
    assert positive_flow_decision(g) is (found is not None)


@pytest.mark.parametrize(
    "g,positive",
    [(P4, False), (C4, True), (K4, True), (petersen(), True), (STAR3, False)],
    ids=reprlib.repr,
)
def test_positive_flow_decision(g, positive):
    assert positive_flow_decision(g) is positive


@pytest.mark.parametrize("g", [C6, K4, petersen(), complete(5)], ids=reprlib.repr)
def test_one_positive_flow(g):
    result = one_positive_flow(g)
    assert all(0 < x <= 1 for x in result.flow)
    assert result.provenance.startswith("average of")
    assert_flow(g, result.flow)


def test_one_positive_flow_cap_keeps_the_decision():
    assert one_positive_flow(P4) is None
    with pytest.raises(CapExceededError) as exc_info:
        one_positive_flow(K4, cap=3)

    assert exc_info.value.decision is True


@pytest.mark.parametrize(
    "g",
    [
        Graph(2, [(0, 1)]),
        K4,
        petersen(),
        complete(6),
        complete_bipartite(3, 3),
        circulant(8, [1, 2, 4]),
    ],
    ids=reprlib.repr,
)
def test_pm1_flow_odd_regular(g):
    result = pm1_flow_odd_regular(g)
    assert result.label_set == SIGNED_UNIT
    assert set(result.flow) <= {-1, 0, 1}
    assert_flow(g, result.flow)


def test_pm1_flow_odd_regular_preconditions():
    with pytest.raises(PreconditionError):
        pm1_flow_odd_regular(C4)
    with pytest.raises(PreconditionError):
        pm1_flow_odd_regular(P4)
    with pytest.raises(GraphStructureError):
        pm1_flow_odd_regular(DISCONNECTED)


@pytest.mark.parametrize(
    "g", [C4, C6, cycle(10), circulant(8, [1, 2, 3])], ids=reprlib.repr
)
def test_pm1_flow_mod4_regular(g):
    result = pm1_flow_mod4_regular(g)
    assert set(result.flow) <= {-1, 0, 1}
    assert result.provenance == "Euler split"
    assert_flow(g, result.flow)


@pytest.mark.parametrize("g", [C5, complete(5), K4, P4], ids=reprlib.repr)
def test_pm1_flow_mod4_regular_preconditions(g):
    with pytest.raises(PreconditionError):
        pm1_flow_mod4_regular(g)


@pytest.mark.parametrize(
    "g,provenance",
    [
        (complete(6), "[2,3]-factor"),
        (complete(8), "[3,4]-factor with t odd"),
        (circulant(10, [1, 2, 3, 5]), "[3,4]-factor with t odd"),
    ],
    ids=reprlib.repr,
)
def test_one_sum_3flow(g, provenance):
    result = one_sum_3flow(g)
    assert result.provenance == provenance
    assert result.label_set == THREE_FLOW
    assert set(result.flow) <= {-2, -1, 1, 2}
    assert_flow(g, result.flow)


def test_one_sum_3flow_values_on_k6():
    # a 3-factor gets 1 and the complementary 2-factor gets -1
    result = one_sum_3flow(complete(6))
    assert sorted(result.flow).count(1) == 9
    assert sorted(result.flow).count(-1) == 6


@pytest.mark.parametrize("g", [K4, C4, P4], ids=reprlib.repr)
def test_one_sum_3flow_preconditions(g):
    with pytest.raises(PreconditionError):
        one_sum_3flow(g)


@pytest.mark.parametrize(
    "g", [K4, petersen(), complete_bipartite(3, 3), complete(8)], ids=reprlib.repr
)
def test_zero_sum_3flow(g):
    result = zero_sum_3flow(g)
    assert result.target == (0,) * g.n
    assert set(result.flow) <= {-2, -1, 1, 2}
    assert_flow(g, result.flow, 0)


def test_zero_sum_3flow_preconditions():
    with pytest.raises(ConjectureError):
        zero_sum_3flow(complete(6))
    with pytest.raises(PreconditionError):
        zero_sum_3flow(C4)
    with pytest.raises(GraphStructureError):
        zero_sum_3flow(bridged_cubic())


@pytest.mark.parametrize(
    "g,k,values",
    [
        (C5, 2, {HALF}),
        (K4, 3, {Fraction(1, 3)}),
        (K4, 1, {0, 1}),
        (petersen(), 2, {0, HALF}),
        (complete(5), 4, {Fraction(1, 4)}),
    ],
    ids=reprlib.repr,
)
def test_kfactor_scaled_flow(g, k, values):
    result = kfactor_scaled_flow(g, k)
    assert set(result.flow) == values
    assert result.provenance == f"{k}-factor"
    assert_flow(g, result.flow)


def test_kfactor_scaled_flow_missing_factor():
    assert kfactor_scaled_flow(STAR3, 1) is None
    assert kfactor_scaled_flow(C5, 1) is None
    assert kfactor_scaled_flow(P4, 2) is None
    with pytest.raises(PreconditionError):
        kfactor_scaled_flow(C4, 0)


def test_averaged_tree_flow():
    result = averaged_tree_flow(K4, [[0, 3, 5], [1, 2, 4]])
    assert result.flow == (HALF, HALF, 0, 0, HALF, HALF)
    assert result.label_set.interval == IntervalSpec.of(0, HALF)
    assert result.provenance == "average of 2 spanning tree flows"

    # a star at vertex 0 is unbalanced
    assert averaged_tree_flow(K4, [[0, 1, 2]]) is None


@pytest.mark.parametrize(
    "trees",
    [[], [[0, 3, 5], [0, 1, 2]], [[0, 1, 3]], [[0, 3, 6]]],
    ids=reprlib.repr,
)
def test_averaged_tree_flow_rejects(trees):
    with pytest.raises(PreconditionError):
        averaged_tree_flow(K4, trees)


@pytest.mark.parametrize(
    "g,window",
    [
        (Graph(4, [(0, 1), (1, 2), (2, 3), (0, 2)]), (-1, 2)),
        (K4, (Fraction(1, 3), Fraction(1, 3))),
        (C6, (HALF, HALF)),
        (P4, (0, 1)),
        (path(8), (-1, 2)),
        (path(3), None),
    ],
    ids=reprlib.repr,
)
def test_independence_window(g, window):
    assert independence_window(g) == window


def test_independence_window_cap():
    with pytest.raises(CapExceededError):
        independence_window(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 2)]), cap=3)
    with pytest.raises(GraphStructureError):
        independence_window(DISCONNECTED)


def test_general_range_flow_on_a_path():
    report = general_range_flow(path(8))
    assert report.result.flow == (1, 0, 1, 0, 1, 0, 1)
    assert report.result.provenance == "spanning tree flow"
    assert report.window == (-2, 2)
    assert report.within_window is True
    assert report.alpha_window == (-1, 2)


def test_general_range_flow_without_windows():
    report = general_range_flow(C5)
    assert report.result.distinct_values() == (HALF,)
    assert report.window is None
    assert report.within_window is None
    assert general_range_flow(path(3)) is None


@pytest.mark.parametrize("g", list(connected_atlas(2, 7)), ids=reprlib.repr)
def test_general_range_flow(g):
    report = general_range_flow(g)
    parts = bipartition(g)
    if parts is not None and not parts.balanced:
        assert report is None
        return

    assert_flow(g, report.result.flow)
    if parts is None:
        assert all((2 * x).denominator == 1 for x in report.result.flow)
        assert report.window == ((5 - g.n, g.n - 5) if g.n >= 6 else None)
    else:
        assert all(x.denominator == 1 for x in report.result.flow)


@pytest.mark.parametrize(
    "g,blocking",
    [(P4, {1}), (C4, set()), (Graph(2, [(0, 1)]), set()), (path(6), {1, 3})],
    ids=reprlib.repr,
)
def test_blocking_bridges(g, blocking):
    assert blocking_bridges(g) == blocking


def test_blocking_bridges_needs_a_bipartite_graph():
    with pytest.raises(GraphStructureError):
        blocking_bridges(C3)


def test_generic_combination():
    assert generic_combination([(1, 0, -1), (0, 1, 1)], 3, [0, 1, 2]) == (1, 3, 2)
    assert generic_combination([(3, 1), (-1, 0)], 2, [0, 1]) == (-4, 1)
    assert generic_combination([], 2, []) == (0, 0)
    with pytest.raises(PreconditionError):
        generic_combination([(1, 0)], 2, [1])


@pytest.mark.parametrize("g", BALANCED, ids=reprlib.repr)
def test_nowhere_zero_one_sum(g):
    result = nowhere_zero_one_sum(g)
    if blocking_bridges(g):
        assert result is None
        return

    assert 0 not in result.flow
    assert_flow(g, result.flow)
    integral = nowhere_zero_one_sum(g, integral=True)
    assert 0 not in integral.flow
    assert all(x.denominator == 1 for x in integral.flow)


@pytest.mark.parametrize("seed", range(25))
def test_nowhere_zero_one_sum_agrees_with_forced_zeros(seed):
    rng = random.Random(seed)
    count = 0
    while count < 20:
        side = rng.randint(1, 5)
        g = random_bipartite(side, side, rng.randint(0, 6), rng)
        if g.m > 13:
            continue
        count += 1
        exists = 0 not in forced_edge_values(g, 1)
        for integral in (False, True):
            result = nowhere_zero_one_sum(g, integral=integral)
            assert (result is not None) is exists
            if result is not None:
                assert 0 not in result.flow
                assert_flow(g, result.flow)
                if integral:
                    assert all(x.denominator == 1 for x in result.flow)


def test_nowhere_zero_one_sum_on_c4():
    assert nowhere_zero_one_sum(C4).distinct_values() == (HALF,)
    assert nowhere_zero_one_sum(C4, integral=True).distinct_values() == (-1, 2)
    assert nowhere_zero_one_sum(P4) is None


def test_nowhere_zero_one_sum_preconditions():
    with pytest.raises(GraphStructureError):
        nowhere_zero_one_sum(C3)
    with pytest.raises(PreconditionError):
        nowhere_zero_one_sum(path(3))


@pytest.mark.parametrize("g", [g for g in BALANCED if g.n <= 5], ids=reprlib.repr)
def test_nowhere_zero_gamma_flow_agrees_with_the_bridge_test(g):
    found = nowhere_zero_gamma_flow(g, 1)
    assert (found is None) == bool(blocking_bridges(g))
    if found is not None:
        assert 0 not in found.flow
        assert_flow(g, found.flow)


def test_nowhere_zero_gamma_flow():
    assert nowhere_zero_gamma_flow(C3, 2).flow == (1, 1, 1)
    assert nowhere_zero_gamma_flow(P4, 1) is None
    found = nowhere_zero_gamma_flow(K4, [1, 2, 0, 1])
    assert 0 not in found.flow
    assert_flow(K4, found.flow, [1, 2, 0, 1])


@pytest.mark.parametrize(
    "g,interval,feasible",
    [
        (C4, IntervalSpec.of(-1, 2, punctured=True), True),
        (P4, IntervalSpec.of(-1, 2, punctured=True), False),
        (C3, IntervalSpec.of(0, HALF, open_low=True), True),
        (C3, IntervalSpec.of(0, HALF, open_high=True), False),
        (K4, IntervalSpec.of(0, 1, open_low=True, open_high=True), True),
        (C4, IntervalSpec.of(0, 1), True),
        (C4, IntervalSpec.of(1, 1, open_low=True), False),
    ],
    ids=reprlib.repr,
)
def test_punctured_interval_flow(g, interval, feasible):
    result = punctured_interval_flow(g, 1, interval)
    assert (result is not None) is feasible
    if feasible:
        assert all(interval.contains(x) for x in result.flow)
        assert_flow(g, result.flow)


def test_open_interval_flow():
    assert open_interval_flow(C4, 1, POSITIVE).flow == (HALF,) * 4
    assert open_interval_flow(Graph(2, [(0, 1)]), 1, POSITIVE).flow == (1,)
    with pytest.raises(PreconditionError):
        open_interval_flow(C4, 1, IntervalSpec.of(-1, 1, punctured=True))
