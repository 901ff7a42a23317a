# Standard Library
import itertools
import random
import reprlib

from fractions import Fraction

# Third Party Library
import pytest

# First Party Library
from sumflow.core import CapExceededError, Graph, GraphStructureError, PreconditionError
from sumflow.factors import (
    Factor,
    bipartite_max_matching,
    edge_in_some_factor,
    f_factor,
    factor_containing,
    factor_flow,
    max_matching,
    one_factorization_bipartite,
    one_two_factor,
    perfect_matching,
    regular_component_factor,
    two_factorization,
)
from sumflow.generators import circulant, complete, complete_bipartite, cycle, petersen
from sumflow.oracle import enumerate_one_two_factors, enumerate_perfect_matchings

# Local Folder
from .utils import (
    C4,
    C5,
    K4,
    P4,
    STAR3,
    assert_flow,
    connected_atlas,
    random_connected,
)

ATLAS = list(connected_atlas(2, 6))


@pytest.mark.parametrize(
    "g,size",
    [(K4, 2), (STAR3, 1), (C5, 2), (petersen(), 5), (complete_bipartite(2, 5), 2)],
    ids=reprlib.repr,
)
def test_max_matching_size(g, size):
    matching = max_matching(g)
    assert matching.size == size
    assert len(matching.covered(g)) == 2 * size


def largest_matching_by_search(g):
    for k in range(g.n // 2, 0, -1):
        for chosen in itertools.combinations(g.edges, k):
            ends = [v for edge in chosen for v in edge]
            if len(set(ends)) == 2 * k:
                return k
    return 0


@pytest.mark.parametrize("seed", range(20))
def test_max_matching_agrees_with_search(seed):
    rng = random.Random(seed)
    for _ in range(5):
        g = random_connected(rng.randint(2, 8), rng.randint(0, 10), rng)
        matching = max_matching(g)
        assert matching.size == largest_matching_by_search(g)
        assert len(matching.covered(g)) == 2 * matching.size


def test_bipartite_max_matching_with_given_sides():
    g = complete_bipartite(3, 4)
    assert bipartite_max_matching(g, [0, 1, 2]).size == 3
    with pytest.raises(GraphStructureError):
        bipartite_max_matching(K4)


@pytest.mark.parametrize("g", ATLAS, ids=reprlib.repr)
def test_perfect_matching_agrees_with_enumeration(g):
    found = perfect_matching(g)
    assert (found is None) == (not enumerate_perfect_matchings(g))
    if found is not None:
        assert found.is_perfect(g)


@pytest.mark.parametrize("g", ATLAS, ids=reprlib.repr)
def test_one_two_factor_agrees_with_enumeration(g):
    factors = enumerate_one_two_factors(g)
    found = one_two_factor(g)
    assert (found is None) == (not factors)
    if found is not None:
        assert set(found.degrees) <= {1, 2}
        assert_flow(g, factor_flow(g, found))


@pytest.mark.parametrize("g", ATLAS, ids=reprlib.repr)
def test_edges_in_some_factor(g):
    matchings = enumerate_perfect_matchings(g)
    factors = enumerate_one_two_factors(g)
    for e in range(g.m):
        in_matching = any(e in m.edges for m in matchings)
        in_factor = any(e in f.edges for f in factors)
        assert edge_in_some_factor(g, e, "perfect_matching") is in_matching
        assert edge_in_some_factor(g, e, "one_two_factor") is in_factor


def test_factor_containing():
    found = factor_containing(C5, 0, "one_two_factor")
    assert found.edges == frozenset(range(5))
    assert factor_containing(C5, 0, "perfect_matching") is None
    with pytest.raises(PreconditionError):
        factor_containing(C5, 5, "perfect_matching")
    with pytest.raises(PreconditionError):
        factor_containing(C5, 0, "two_factor")


def test_factor_flow_values():
    factor = Factor.of(K4, [0, 5])
    assert factor_flow(K4, factor) == (1, 0, 0, 0, 0, 1)
    assert factor.has_regular_components(K4)

    hamiltonian = Factor.of(C4, range(4))
    assert set(factor_flow(C4, hamiltonian)) == {Fraction(1, 2)}


@pytest.mark.parametrize(
    "g,f,found",
    [
        (K4, [1, 1, 1, 1], True),
        (K4, [3, 3, 3, 3], True),
        (K4, [2, 1, 1, 0], True),
        (petersen(), [2] * 10, True),
        (STAR3, [1, 1, 1, 1], False),
        (P4, [1, 1, 1, 0], False),
        (C5, [1] * 5, False),
    ],
    ids=reprlib.repr,
)
def test_f_factor(g, f, found):
    factor = f_factor(g, f)
    assert (factor is not None) is found
    if found:
        assert factor.degrees == tuple(f)


@pytest.mark.parametrize(
    "f", [[1, 1, 1], [4, 1, 1, 1], [-1, 1, 1, 1]], ids=reprlib.repr
)
def test_f_factor_rejects_demands(f):
    with pytest.raises(PreconditionError):
        f_factor(K4, f)


@pytest.mark.parametrize(
    "g,k",
    [(complete_bipartite(3, 3), 3), (cycle(8), 2), (complete_bipartite(4, 4), 4)],
    ids=reprlib.repr,
)
def test_one_factorization_bipartite(g, k):
    decomposition = one_factorization_bipartite(g)
    assert len(decomposition) == k
    assert decomposition.partitions(g)
    for factor in decomposition.factors:
        assert set(factor.degrees) == {1}


def test_one_factorization_needs_regular_bipartite():
    with pytest.raises(GraphStructureError):
        one_factorization_bipartite(K4)
    with pytest.raises(PreconditionError):
        one_factorization_bipartite(P4)


@pytest.mark.parametrize(
    "g,k",
    [(complete(5), 2), (circulant(8, [1, 2]), 2), (complete(7), 3), (C5, 1)],
    ids=reprlib.repr,
)
def test_two_factorization(g, k):
    decomposition = two_factorization(g)
    assert len(decomposition) == k
    assert decomposition.partitions(g)
    for factor in decomposition.factors:
        assert set(factor.degrees) == {2}


def test_two_factorization_rejects_odd_degrees():
    with pytest.raises(PreconditionError):
        two_factorization(K4)
    with pytest.raises(PreconditionError):
        two_factorization(P4)


@pytest.mark.parametrize(
    "g,k",
    [(K4, 1), (K4, 2), (petersen(), 1), (petersen(), 2), (circulant(8, [1, 2, 4]), 3)],
    ids=reprlib.repr,
)
def test_regular_component_factor(g, k):
    factor = regular_component_factor(g, k)
    assert factor is not None
    assert set(factor.degrees) <= {k - 1, k}
    assert factor.has_regular_components(g)


def test_regular_component_factor_preconditions():
    with pytest.raises(PreconditionError):
        regular_component_factor(K4, 3)
    with pytest.raises(PreconditionError):
        regular_component_factor(C4, 1)
    with pytest.raises(PreconditionError):
        regular_component_factor(P4, 1)


def test_regular_component_factor_cap():
    # cubic, with a centre whose removal leaves three odd components
    edges = []
    for i in range(3):
        x, a, b, c, d = range(1 + 5 * i, 6 + 5 * i)
        edges += [(0, x), (x, a), (x, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
    g = Graph(16, edges)
    assert perfect_matching(g) is None
    with pytest.raises(CapExceededError):
        regular_component_factor(g, 2)
