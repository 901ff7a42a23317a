# Standard Library
import random
import reprlib

from fractions import Fraction

# Third Party Library
import pytest

# First Party Library
from sumflow.core import Graph, GraphStructureError, PreconditionError
from sumflow.generators import complete, cycle, petersen
from sumflow.graph import bipartition
from sumflow.linalg import (
    bareiss_determinant,
    in_row_space,
    integerize,
    nullspace as matrix_nullspace,
    rank,
    rref,
    solve,
)
from sumflow.solver import (
    dense_solve,
    gamma_flow_exists,
    incidence_matrix,
    nullspace,
    odd_cycle_incidence_det,
    solve_gamma_flow,
    solve_halfinteger,
    solve_integer_bipartite,
    vertex_values,
)

# Local Folder
from .utils import (
    C3,
    C4,
    C5,
    K4,
    P4,
    STAR3,
    assert_flow,
    connected_atlas,
    random_bipartite,
    random_connected,
)

ATLAS = list(connected_atlas(1, 6))


def test_rref_and_rank():
    reduced, pivots = rref([[0, 2, 4], [1, 1, 1], [1, 3, 5]])
    assert pivots == [0, 1]
    assert reduced[0] == [1, 0, -1]
    assert reduced[1] == [0, 1, 2]
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([]) == 0


def test_solve_inconsistent_system():
    assert solve([[1, 1], [1, 1]], [1, 2]) is None
    assert solve([[1, 1], [1, 1]], [2, 2]) == [2, 0]


def test_matrix_nullspace_is_annihilated():
    rows = incidence_matrix(C4).dense()
    basis = matrix_nullspace(rows, 4)
    assert len(basis) == 1
    for row in rows:
        assert sum(a * x for a, x in zip(row, basis[0])) == 0


def test_in_row_space():
    rows = incidence_matrix(P4).dense()
    assert in_row_space(rows, [1, 0, 0])
    assert not in_row_space(incidence_matrix(C4).dense(), [1, 0, 0, 0])


@pytest.mark.parametrize(
    "rows,det",
    [
        ([[2]], 2),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2], [2, 4]], 0),
        ([[2, 0, 1], [1, 3, 2], [1, 1, 2]], 6),
    ],
    ids=reprlib.repr,
)
def test_bareiss_determinant(rows, det):
    assert bareiss_determinant(rows) == det


def test_integerize():
    assert integerize([Fraction(2, 3), Fraction(-4, 3)]) == [1, -2]
    assert integerize([Fraction(0), Fraction(0)]) == [0, 0]


@pytest.mark.parametrize("length", range(3, 16, 2))
def test_odd_cycle_incidence_determinant_is_two(length):
    assert odd_cycle_incidence_det(length) == 2
    assert abs(bareiss_determinant(incidence_matrix(cycle(length)).dense())) == 2


@pytest.mark.parametrize("length", [2, 4, 6])
def test_odd_cycle_incidence_determinant_rejects_even_length(length):
    with pytest.raises(PreconditionError):
        odd_cycle_incidence_det(length)


@pytest.mark.parametrize("g", ATLAS, ids=reprlib.repr)
def test_incidence_rank(g):
    expected = g.n - 1 if bipartition(g) is not None else g.n
    assert incidence_matrix(g).rank() == expected
    assert nullspace(g).dimension == g.m - expected


@pytest.mark.parametrize("g", ATLAS, ids=reprlib.repr)
def test_structured_solver_agrees_with_elimination(g):
    flow = solve_gamma_flow(g, 1)
    assert (flow is None) == (dense_solve(g, 1) is None)
    assert (flow is None) == (not gamma_flow_exists(g, 1).feasible)
    if flow is not None:
        assert_flow(g, flow)


@pytest.mark.parametrize("seed", range(20))
def test_integral_gamma_gives_half_integral_flows(seed):
    rng = random.Random(seed)
    count = 0
    while count < 10:
        g = random_connected(rng.randint(3, 9), rng.randint(1, 8), rng)
        if bipartition(g) is not None:
            continue
        count += 1
        gamma = [rng.randint(-5, 5) for _ in range(g.n)]
        flow = solve_gamma_flow(g, gamma)
        assert flow is not None
        assert_flow(g, flow, gamma)
        assert all((2 * x).denominator == 1 for x in flow)


@pytest.mark.parametrize("seed", range(20))
def test_bipartite_flows_exist_exactly_when_balanced(seed):
    rng = random.Random(seed)
    for _ in range(10):
        a, b = rng.randint(1, 5), rng.randint(1, 5)
        g = random_bipartite(a, b, rng.randint(0, 6), rng)
        parts = bipartition(g)
        gamma = [rng.randint(-2, 2) for _ in range(g.n)]
        if rng.random() < 0.5:
            # move the imbalance onto vertex 0
            gamma[0] -= sum(parts.sign(v) * x for v, x in enumerate(gamma))
        balanced = sum(parts.sign(v) * x for v, x in enumerate(gamma)) == 0

        flow = solve_gamma_flow(g, gamma)
        assert (flow is not None) is balanced
        assert gamma_flow_exists(g, gamma).feasible is balanced
        if flow is not None:
            assert_flow(g, flow, gamma)
            assert all(x.denominator == 1 for x in flow)


def test_gamma_flow_exists_reports_the_imbalance():
    decision = gamma_flow_exists(STAR3, 1)
    assert not decision.feasible
    assert decision.imbalance == -2
    assert decision.obstruction == (1, -1, -1, -1)

    assert gamma_flow_exists(C5, 1).feasible
    assert gamma_flow_exists(Graph(1), 0).feasible
    assert not gamma_flow_exists(Graph(1), 1).feasible


def test_gamma_flow_exists_needs_a_connected_graph():
    with pytest.raises(GraphStructureError):
        gamma_flow_exists(Graph(4, [(0, 1), (2, 3)]), 1)


@pytest.mark.parametrize(
    "g,gamma,flow",
    [
        (C3, 1, (Fraction(1, 2),) * 3),
        (C5, [2, 0, 0, 0, 0], (1, -1, 1, -1, 1)),
        (P4, [1, 2, 2, 1], (1, 1, 1)),
    ],
    ids=reprlib.repr,
)
def test_unique_solutions(g, gamma, flow):
    assert solve_gamma_flow(g, gamma) == tuple(Fraction(x) for x in flow)


def test_solve_integer_bipartite():
    flow = solve_integer_bipartite(C4, [3, 1, 0, 2])
    assert_flow(C4, flow, [3, 1, 0, 2])
    with pytest.raises(PreconditionError):
        solve_integer_bipartite(C4, [1, 0, 0, 0])
    with pytest.raises(PreconditionError):
        solve_integer_bipartite(C4, Fraction(1, 2))
    with pytest.raises(GraphStructureError):
        solve_integer_bipartite(C3, 1)


@pytest.mark.parametrize("g", [C3, C5, K4, petersen(), complete(6)], ids=reprlib.repr)
def test_solve_halfinteger(g):
    flow = solve_halfinteger(g, 1)
    assert_flow(g, flow)
    assert all((2 * x).denominator == 1 for x in flow)


def test_solve_halfinteger_rejects_bipartite_graphs():
    with pytest.raises(GraphStructureError):
        solve_halfinteger(cycle(6), 1)


def test_nullspace_vectors_are_zero_sum_flows():
    basis = nullspace(K4)
    assert basis.dimension == 2
    for vector in basis.vectors:
        assert vertex_values(K4, vector) == (0, 0, 0, 0)
    assert not nullspace(P4).vectors
    assert all(nullspace(P4).vanishing(e) for e in range(3))
