"""
=================================================
:mod:`document` -- Machine-readable command output
=================================================

Every command prints one :class:`ResultDocument` as JSON. Rationals are
written as ``"p"`` or ``"p/q"`` strings and read back through
:func:`~sumflow.parser.parse_rational`, so a document never loses precision.
"""
# Standard Library
import json
import logging

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

# Third Party Library
from typing_extensions import Final, Literal

# Local Folder
from .core import (
    Edge,
    FlowAssignment,
    GammaVector,
    GraphFile,
    GraphSyntaxError,
    PreconditionError,
    SumFlowError,
)
from .labels import LabelSet, flow_violation
from .lp import (
    FarkasCertificate,
    NonnegativeObstruction,
    verify_farkas,
    verify_nonnegative_obstruction,
)
from .parser import parse_label_set, parse_rational

logger = logging.getLogger(__name__)

SCHEMA_VERSION: Final = "1"

Decision = Literal["feasible", "infeasible"]


@dataclass(frozen=True)
class ImbalanceObstruction:
    """
    ``y = ±1`` on the two sides of a bipartite graph: ``yᵀA(G) = 0`` while
    ``yᵀγ ≠ 0``, so no real γ-flow exists.
    """

    y: Tuple[int, ...]


Certificate = Union[FarkasCertificate, NonnegativeObstruction, ImbalanceObstruction]


def rationals(values: Iterable[Fraction]) -> List[str]:
    """
    >>> rationals([Fraction(1), Fraction(-1, 2)])
    ['1', '-1/2']
    """
    return [str(Fraction(x)) for x in values]


def _read_rationals(values: Any, what: str) -> Tuple[Fraction, ...]:
    if not isinstance(values, list) or not all(isinstance(x, str) for x in values):
        raise GraphSyntaxError(what, None, "expected a list of rational strings")
    return tuple(parse_rational(x) for x in values)


def _certificate_json(certificate: Certificate) -> Dict[str, Any]:
    if isinstance(certificate, FarkasCertificate):
        return {
            "kind": "farkas",
            "z": rationals(certificate.z),
            "w": rationals(certificate.w),
        }
    if isinstance(certificate, NonnegativeObstruction):
        return {"kind": "nonnegative", "z": rationals(certificate.z)}
    return {"kind": "imbalance", "y": list(certificate.y)}


def _read_certificate(data: Any) -> Certificate:
    if not isinstance(data, dict):
        raise GraphSyntaxError("certificate", None, "expected an object")
    kind = data.get("kind")
    if kind == "farkas":
        return FarkasCertificate(
            _read_rationals(data.get("z"), "certificate z"),
            _read_rationals(data.get("w"), "certificate w"),
        )
    if kind == "nonnegative":
        return NonnegativeObstruction(_read_rationals(data.get("z"), "certificate z"))
    if kind == "imbalance":
        y = data.get("y")
        if not isinstance(y, list) or not all(isinstance(x, int) for x in y):
            raise GraphSyntaxError("certificate y", None, "expected integers")
        return ImbalanceObstruction(tuple(y))
    raise GraphSyntaxError(f"certificate kind {kind!r}")


@dataclass(frozen=True)
class ResultDocument:
    """
    What a command found. ``edges`` and ``names`` describe the flow entries;
    ``report`` holds command specific fields that are already JSON-ready.

    >>> doc = ResultDocument(
    ...     ("exists",),
    ...     "feasible",
    ...     gamma=(Fraction(1),) * 2,
    ...     flow=(Fraction(1),),
    ...     edges=((0, 1),),
    ... )
    >>> doc.to_json()["flow"]
    [{'u': 0, 'v': 1, 'value': '1'}]
    >>> ResultDocument.loads(doc.dumps()) == doc
    True
    """

    command: Tuple[str, ...]
    decision: Optional[Decision] = None
    gamma: Optional[GammaVector] = None
    label_set: Optional[LabelSet] = None
    flow: Optional[FlowAssignment] = None
    edges: Tuple[Edge, ...] = ()
    names: Mapping[int, str] = field(default_factory=dict)
    certificate: Optional[Certificate] = None
    report: Mapping[str, Any] = field(default_factory=dict)
    provenance: Optional[str] = None
    error: Optional[Mapping[str, str]] = None

    @classmethod
    def failure(cls, command: Sequence[str], exc: Exception) -> "ResultDocument":
        return cls(
            tuple(command),
            error={"type": exc.__class__.__name__, "message": str(exc)},
        )

    def _flow_json(self) -> Optional[List[Dict[str, Any]]]:
        if self.flow is None:
            return None
        entries = []
        for (u, v), value in zip(self.edges, self.flow):
            entry: Dict[str, Any] = {"u": u, "v": v, "value": str(value)}
            if self.names:
                entry["names"] = [self.names.get(u, str(u)), self.names.get(v, str(v))]
            entries.append(entry)
        return entries

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "command": list(self.command),
            "decision": self.decision,
        }
        if self.gamma is not None:
            data["gamma"] = rationals(self.gamma)
        if self.label_set is not None:
            data["label_set"] = str(self.label_set)
        if self.flow is not None:
            data["flow"] = self._flow_json()
        if self.certificate is not None:
            data["certificate"] = _certificate_json(self.certificate)
        if self.report:
            data["report"] = dict(self.report)
        if self.provenance is not None:
            data["provenance"] = self.provenance
        if self.error is not None:
            data["error"] = dict(self.error)
        return data

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, data: Any) -> "ResultDocument":
        """
        :raises ~sumflow.core.GraphSyntaxError: not a version 1 document.
        """
        if not isinstance(data, dict):
            raise GraphSyntaxError("result document", None, "expected an object")
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise GraphSyntaxError(
                "result document", None, f"unsupported schema version {version!r}"
            )
        decision = data.get("decision")
        if decision not in (None, "feasible", "infeasible"):
            raise GraphSyntaxError(f"decision {decision!r}")

        flow: Optional[FlowAssignment] = None
        edges: Tuple[Edge, ...] = ()
        names: Dict[int, str] = {}
        if data.get("flow") is not None:
            entries = data["flow"]
            if not isinstance(entries, list):
                raise GraphSyntaxError("flow", None, "expected a list")
            try:
                edges = tuple((int(x["u"]), int(x["v"])) for x in entries)
                flow = _read_rationals([x["value"] for x in entries], "flow values")
                for (u, v), x in zip(edges, entries):
                    if "names" in x:
                        names[u], names[v] = x["names"]
            except (KeyError, TypeError, ValueError) as exc:
                raise GraphSyntaxError("flow", None, f"malformed entry: {exc}")

        gamma: Optional[GammaVector] = None
        label_set: Optional[LabelSet] = None
        certificate: Optional[Certificate] = None
        if data.get("gamma") is not None:
            gamma = _read_rationals(data["gamma"], "gamma")
        if data.get("label_set") is not None:
            label_set = parse_label_set(str(data["label_set"]))
        if data.get("certificate") is not None:
            certificate = _read_certificate(data["certificate"])
        return cls(
            tuple(str(x) for x in data.get("command", ())),
            decision,
            gamma,
            label_set,
            flow,
            edges,
            names,
            certificate,
            dict(data.get("report") or {}),
            data.get("provenance"),
            data.get("error"),
        )

    @classmethod
    def loads(cls, text: str) -> "ResultDocument":
        """
        :raises ~sumflow.core.GraphSyntaxError: malformed JSON or document.
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphSyntaxError("result document", exc.lineno, exc.msg)
        return cls.from_json(data)


def certificate_violation(
    graph_file: GraphFile,
    gamma: Optional[GammaVector],
    label_set: Optional[LabelSet],
    certificate: Certificate,
) -> Optional[str]:
    """
    The first condition ``certificate`` fails, ``None`` when it proves
    that no γ-flow with values in ``label_set`` exists.
    """
    g = graph_file.graph
    if gamma is None:
        return "certificate without gamma"
    if isinstance(certificate, ImbalanceObstruction):
        y = certificate.y
        if len(y) != g.n or any(x not in (-1, 1) for x in y):
            return "imbalance vector must have one entry ±1 per vertex"
        for u, v in g.edges:
            if y[u] + y[v] != 0:
                return f"imbalance vector does not alternate on edge ({u}, {v})"
        if sum(x * c for x, c in zip(y, gamma)) == 0:
            return "gamma is balanced under the imbalance vector"
        return None

    try:
        if isinstance(certificate, NonnegativeObstruction):
            if verify_nonnegative_obstruction(g, gamma, certificate):
                return None
            return "nonnegative obstruction inequalities fail"
        if label_set is None or label_set.interval is None:
            return "Farkas certificate without an interval"
        if not label_set.interval.closed:
            return f"Farkas certificate for the non-closed {label_set}"
        if verify_farkas(g, gamma, label_set.interval, certificate):
            return None
        return "Farkas certificate inequalities fail"
    except PreconditionError as exc:
        return str(exc)


def verify_document(graph_file: GraphFile, doc: ResultDocument) -> Optional[str]:
    """
    Re-check a document against its graph exactly: the flow's vertex sums
    and values, the certificate inequalities and every oracle solution.
    ``None`` when everything holds, otherwise the first violated constraint.

    >>> from sumflow.core import Graph
    >>> k2 = GraphFile(Graph(2, [(0, 1)]), {})
    >>> doc = ResultDocument(
    ...     ("exists",), "feasible", (Fraction(1),) * 2, None, (Fraction(2),), ((0, 1),)
    ... )
    >>> verify_document(k2, doc)
    'vertex 0 sums to 2, expected 1'
    """
    g = graph_file.graph
    if doc.error is not None:
        return f"document records an error: {doc.error.get('message')}"

    solutions = doc.report.get("solutions")
    if doc.decision == "feasible" and doc.flow is None and not solutions:
        return "feasible decision without a flow"
    if doc.decision == "infeasible" and doc.flow is not None:
        return "infeasible decision with a flow"

    if doc.flow is not None:
        if len(doc.edges) != g.m:
            return f"flow has {len(doc.edges)} entries, the graph has {g.m} edges"
        for e, (edge, expected) in enumerate(zip(doc.edges, g.edges)):
            if edge != expected:
                return f"flow entry {e} is {edge}, the graph has {expected}"
        if doc.gamma is None:
            return "flow without gamma"
        violation = flow_violation(g, doc.flow, doc.gamma, doc.label_set)
        if violation is not None:
            return violation

    if doc.certificate is not None:
        if doc.decision != "infeasible":
            return "certificate on a decision other than infeasible"
        violation = certificate_violation(
            graph_file, doc.gamma, doc.label_set, doc.certificate
        )
        if violation is not None:
            return violation

    if solutions:
        if doc.gamma is None:
            return "solutions without gamma"
        for i, solution in enumerate(solutions):
            try:
                values = _read_rationals(solution, f"solution {i}")
            except SumFlowError as exc:
                return str(exc)
            violation = flow_violation(g, values, doc.gamma, doc.label_set)
            if violation is not None:
                return f"solution {i}: {violation}"
    logger.debug("document for %s verified", " ".join(doc.command))
    return None


__all__ = (
    "Certificate",
    "Decision",
    "ImbalanceObstruction",
    "ResultDocument",
    "SCHEMA_VERSION",
    "certificate_violation",
    "rationals",
    "verify_document",
)
