# Standard Library
import reprlib

# Third Party Library
import pytest

# First Party Library
from sumflow.core import PreconditionError
from sumflow.generators import (
    FAMILIES,
    circulant,
    complete_bipartite,
    cycle,
    example2,
    generate,
    odd_cycle_cactus,
    path,
    petersen,
    star,
)
from sumflow.graph import bipartition, is_connected, regular_degree
from sumflow.labels import IntervalSpec
from sumflow.lp import edge_value_range, interval_flow, linear_functional_range


def test_small_families():
    assert cycle(4).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert path(5).m == 4
    assert star(3).degrees() == (3, 1, 1, 1)
    g = complete_bipartite(2, 3)
    assert (g.n, g.m) == (5, 6)
    parts = bipartition(g)
    assert sorted((parts.size1, parts.size2)) == [2, 3]


def test_petersen():
    g = petersen()
    assert (g.n, g.m) == (10, 15)
    assert regular_degree(g) == 3
    assert bipartition(g) is None


@pytest.mark.parametrize(
    "n,offsets,degree",
    [(8, [1, 2, 4], 5), (8, [1, 2], 4), (7, [1, 2, 3], 6), (6, [3], 1)],
    ids=reprlib.repr,
)
def test_circulant_degrees(n, offsets, degree):
    assert regular_degree(circulant(n, offsets)) == degree


@pytest.mark.parametrize(
    "n,offsets",
    [(2, [1]), (8, []), (8, [0]), (8, [5])],
    ids=reprlib.repr,
)
def test_circulant_rejects(n, offsets):
    with pytest.raises(PreconditionError):
        circulant(n, offsets)


@pytest.mark.parametrize("s,t", [(1, 1), (2, 1), (1, 2), (2, 3)], ids=reprlib.repr)
def test_example2_is_balanced(s, t):
    g = example2(s, t)
    big = s * (1 + t) + 1
    assert g.n == 2 * (s + big)
    assert g.m == 2 * s * big + s
    assert is_connected(g)
    assert bipartition(g).balanced


@pytest.mark.parametrize("s,t", [(1, 1), (2, 1), (1, 2), (2, 2)], ids=reprlib.repr)
def test_example2_has_no_flow_bounded_by_minus_t(s, t):
    g = example2(s, t)
    assert not interval_flow(g, 1, IntervalSpec.of(-t, None)).feasible


@pytest.mark.parametrize("t", [1, 2])
def test_example2_joining_edges_sum_is_forced(t):
    s = 2
    g = example2(s, t)
    joining = [0] * (g.m - s) + [1] * s
    r = linear_functional_range(g, 1, joining, IntervalSpec.real_line())
    assert r.forced
    assert r.low == -s * t - 1
    for e in range(g.m - s, g.m):
        assert not edge_value_range(g, 1, e, IntervalSpec.real_line()).forced


@pytest.mark.parametrize("t", [1, 2, 3])
def test_example2_bound_is_tight_for_one_joining_edge(t):
    g = example2(1, t)
    decision = interval_flow(g, 1, IntervalSpec.of(-t - 1, None))
    assert decision.feasible
    assert decision.flow[-1] == -t - 1


def test_odd_cycle_cactus():
    g = odd_cycle_cactus([3, 3])
    assert g.degrees() == (2, 2, 4, 2, 2)

    g = odd_cycle_cactus([3, 5], bridged=[1])
    assert (g.n, g.m) == (8, 9)

    g = odd_cycle_cactus([3, 3, 5], anchors=[0, 0])
    assert (g.n, g.m) == (9, 11)
    assert g.degree(0) == 6


@pytest.mark.parametrize(
    "lengths,anchors",
    [([], None), ([4], None), ([3, 3], []), ([3, 3], [3])],
    ids=reprlib.repr,
)
def test_odd_cycle_cactus_rejects(lengths, anchors):
    with pytest.raises(PreconditionError):
        odd_cycle_cactus(lengths, anchors)


@pytest.mark.parametrize(
    "name,params,size",
    [
        ("cycle", ["5"], (5, 5)),
        ("path", ["3"], (3, 2)),
        ("complete", ["4"], (4, 6)),
        ("complete-bipartite", ["2", "2"], (4, 4)),
        ("circulant", ["8", "1", "2"], (8, 16)),
        ("tmin", ["8"], (8, 7)),
        ("topt", ["10"], (10, 9)),
        ("example2", ["2", "1"], (14, 22)),
        ("unicyclic-extremal", ["3", "3"], (8, 8)),
        ("unicyclic-extremal", ["3", "3", "center"], (7, 7)),
        ("unicyclic-extremal", ["2", "4"], (10, 10)),
        ("petersen", [], (10, 15)),
        ("cactus", ["3", "5"], (7, 8)),
    ],
    ids=reprlib.repr,
)
def test_generate(name, params, size):
    g = generate(name, params)
    assert (g.n, g.m) == size
    assert g == generate(name, params)


def test_every_family_is_documented():
    for name, family in FAMILIES.items():
        assert family.name == name
        assert family.arity is None or family.arity == len(family.usage.split())


@pytest.mark.parametrize(
    "name,params,message",
    [
        ("wheel", ["5"], "unknown family 'wheel'"),
        ("cycle", [], "cycle takes n"),
        ("cycle", ["2"], "cycle needs n >= 3, got 2"),
        ("cycle", ["x"], "cycle takes integer parameters: ['x']"),
        ("petersen", ["1"], "petersen takes no parameters"),
        ("circulant", ["8"], "circulant takes n and at least one offset"),
        ("unicyclic-extremal", ["3"], "unicyclic-extremal takes p case [leaf|center]"),
        ("unicyclic-extremal", ["3", "3", "tail"], "unknown variant 'tail'"),
        ("cactus", [], "cactus takes at least one cycle length"),
        ("example2", ["0", "1"], "example2 needs s, t >= 1, got 0, 1"),
    ],
    ids=reprlib.repr,
)
def test_generate_rejects(name, params, message):
    with pytest.raises(PreconditionError) as exc_info:
        generate(name, params)

    assert exc_info.value.reason == message
