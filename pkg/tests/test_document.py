# Standard Library
import json
import reprlib

from fractions import Fraction

# Third Party Library
import pytest

# First Party Library
from sumflow.core import Graph, GraphFile, GraphSyntaxError, PreconditionError
from sumflow.document import (
    ImbalanceObstruction,
    ResultDocument,
    verify_document,
)
from sumflow.labels import IntervalSpec, LabelSet
from sumflow.lp import FarkasCertificate, NonnegativeObstruction

K2 = GraphFile(Graph(2, [(0, 1)]), {0: "a", 1: "b"})
P3 = GraphFile(Graph(3, [(0, 1), (1, 2)]), {})
ONES2 = (Fraction(1),) * 2
ONES3 = (Fraction(1),) * 3


def feasible_k2(value):
    return ResultDocument(
        ("exists", "k2.txt"),
        "feasible",
        gamma=ONES2,
        label_set=LabelSet.finite([1]),
        flow=(Fraction(value),),
        edges=((0, 1),),
        names=K2.names,
        provenance="test",
    )


def farkas_k2(z, w, label_set=LabelSet.of_interval(IntervalSpec.of(2, 3))):
    return ResultDocument(
        ("exists",),
        "infeasible",
        gamma=ONES2,
        label_set=label_set,
        certificate=FarkasCertificate(
            tuple(Fraction(x) for x in z), tuple(Fraction(x) for x in w)
        ),
    )


def test_document_json_layout():
    data = feasible_k2(1).to_json()
    assert data == {
        "schema_version": "1",
        "command": ["exists", "k2.txt"],
        "decision": "feasible",
        "gamma": ["1", "1"],
        "label_set": "list 1",
        "flow": [{"u": 0, "v": 1, "value": "1", "names": ["a", "b"]}],
        "provenance": "test",
    }


@pytest.mark.parametrize(
    "doc",
    [
        feasible_k2(1),
        farkas_k2([-1, 0], [0]),
        ResultDocument(
            ("exists",),
            "infeasible",
            gamma=ONES3,
            certificate=ImbalanceObstruction((1, -1, 1)),
            report={"method": "imbalance"},
        ),
        ResultDocument(
            ("exists",),
            "infeasible",
            gamma=ONES3,
            certificate=NonnegativeObstruction(
                (Fraction(-1, 2), Fraction(0), Fraction(3))
            ),
        ),
        ResultDocument(
            ("oracle",),
            "feasible",
            gamma=ONES2,
            report={"count": 1, "solutions": [["1"]]},
        ),
        ResultDocument.failure(("exists",), PreconditionError("bad input")),
    ],
    ids=reprlib.repr,
)
def test_document_is_read_back(doc):
    assert ResultDocument.loads(doc.dumps()) == doc


def test_failure_document():
    doc = ResultDocument.failure(("tree-range", "g.txt"), PreconditionError("no"))
    assert doc.to_json() == {
        "schema_version": "1",
        "command": ["tree-range", "g.txt"],
        "decision": None,
        "error": {"type": "PreconditionError", "message": "no"},
    }
    assert verify_document(K2, doc) == "document records an error: no"


@pytest.mark.parametrize(
    "text",
    [
        "{",
        "[]",
        json.dumps({"schema_version": "2", "command": [], "decision": None}),
        json.dumps({"schema_version": "1", "command": [], "decision": "maybe"}),
        json.dumps(
            {"schema_version": "1", "decision": "feasible", "flow": [{"u": 0}]}
        ),
        json.dumps(
            {"schema_version": "1", "decision": "feasible", "gamma": ["1", 1]}
        ),
        json.dumps(
            {
                "schema_version": "1",
                "decision": "infeasible",
                "certificate": {"kind": "magic"},
            }
        ),
    ],
    ids=reprlib.repr,
)
def test_malformed_documents(text):
    with pytest.raises(GraphSyntaxError):
        ResultDocument.loads(text)


def test_verify_flow_document():
    assert verify_document(K2, feasible_k2(1)) is None
    assert (
        verify_document(K2, feasible_k2(2))
        == "edge 0 (0, 1) has value 2 outside list 1"
    )


def test_verify_rejects_mismatched_edges():
    doc = ResultDocument(
        ("exists",),
        "feasible",
        gamma=ONES3,
        flow=(Fraction(1), Fraction(0)),
        edges=((1, 2), (0, 1)),
    )
    assert verify_document(P3, doc) == "flow entry 0 is (1, 2), the graph has (0, 1)"


def test_verify_rejects_inconsistent_decisions():
    no_flow = ResultDocument(("exists",), "feasible", gamma=ONES2)
    assert verify_document(K2, no_flow) == "feasible decision without a flow"

    flow_on_infeasible = ResultDocument(
        ("exists",), "infeasible", gamma=ONES2, flow=(Fraction(1),), edges=((0, 1),)
    )
    assert verify_document(K2, flow_on_infeasible) == "infeasible decision with a flow"


def test_verify_farkas_certificate():
    assert verify_document(K2, farkas_k2([-1, 0], [0])) is None
    assert (
        verify_document(K2, farkas_k2([1, 0], [0]))
        == "Farkas certificate inequalities fail"
    )
    open_interval = LabelSet.of_interval(IntervalSpec.of(2, 3, open_low=True))
    assert (
        verify_document(K2, farkas_k2([-1, 0], [0], open_interval))
        == "Farkas certificate for the non-closed interval 2,3 open-low"
    )
    assert (
        verify_document(K2, farkas_k2([-1], [0]))
        == "certificate has shape (1, 1), expected (2, 1)"
    )


def test_verify_imbalance_certificate():
    def doc(y):
        return ResultDocument(
            ("exists",), "infeasible", gamma=ONES3, certificate=ImbalanceObstruction(y)
        )

    assert verify_document(P3, doc((1, -1, 1))) is None
    assert (
        verify_document(P3, doc((1, -1, -1)))
        == "imbalance vector does not alternate on edge (1, 2)"
    )
    assert (
        verify_document(P3, doc((1, 0, 1)))
        == "imbalance vector must have one entry ±1 per vertex"
    )


def test_verify_nonnegative_obstruction():
    # both end sums force zero on every edge
    gamma = (Fraction(0), Fraction(1), Fraction(0))
    z = (Fraction(1), Fraction(-1), Fraction(1))
    doc = ResultDocument(
        ("exists",),
        "infeasible",
        gamma=gamma,
        certificate=NonnegativeObstruction(z),
    )
    assert verify_document(P3, doc) is None


def test_certificate_requires_an_infeasible_decision():
    doc = ResultDocument(
        ("exists",),
        "feasible",
        gamma=ONES2,
        flow=(Fraction(1),),
        edges=((0, 1),),
        certificate=ImbalanceObstruction((1, -1)),
    )
    assert verify_document(K2, doc) == "certificate on a decision other than infeasible"


def test_verify_oracle_solutions():
    def doc(*solutions):
        return ResultDocument(
            ("oracle",),
            "feasible",
            gamma=ONES2,
            report={"count": len(solutions), "solutions": [list(s) for s in solutions]},
        )

    assert verify_document(K2, doc(["1"])) is None
    assert (
        verify_document(K2, doc(["1"], ["2"]))
        == "solution 1: vertex 0 sums to 2, expected 1"
    )
