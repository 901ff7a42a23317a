# Standard Library
import argparse
import dataclasses
import logging
import sys

from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence

# Third Party Library
from typing_extensions import Final

# Local Folder
from .core import (
    CapExceededError,
    Graph,
    GraphFile,
    GraphStructureError,
    PreconditionError,
    SumFlowError,
    VerificationError,
    as_fraction_vector,
)
from .document import (
    ImbalanceObstruction,
    ResultDocument,
    rationals,
    verify_document,
)
from .factors import REGULAR_FACTOR_CAP
from .generators import FAMILIES, generate
from .graph import INDEPENDENCE_CAP, bipartition, is_tree, regular_degree
from .labels import FlowResult, IntervalSpec, LabelSet
from .lp import Feasible, interval_flow
from .oracle import ENUMERATION_BUDGET, enumerate_finite_flows
from .parser import (
    format_graph_file,
    parse_gamma,
    parse_graph_file,
    parse_label_set,
    parse_rational,
)
from .solver import gamma_flow_exists, solve_gamma_flow
from .special import (
    POSITIVE_WITNESS_CAP,
    ZERO_HALF_ONE,
    blocking_bridges,
    general_range_flow,
    kfactor_scaled_flow,
    nowhere_zero_one_sum,
    one_positive_flow,
    one_sum_3flow,
    one_zero_one_flow,
    pm1_flow_mod4_regular,
    pm1_flow_odd_regular,
    punctured_interval_flow,
    zero_sum_3flow,
)
from .trees import tree_range_report, tree_unique_flow
from .unicyclic import unicyclic_flow

logger = logging.getLogger(__name__)

EXIT_FEASIBLE: Final = 0
EXIT_INFEASIBLE: Final = 1
EXIT_USAGE: Final = 2
EXIT_CAP_EXCEEDED: Final = 3

METHODS: Final = (
    "pm1-regular",
    "3flow",
    "zero3flow",
    "zeroone",
    "positive",
    "nowherezero",
    "kfactor",
    "unicyclic",
    "general",
)


class UsageError(PreconditionError):
    """
    Bad command line.
    """


class ArgumentParser(argparse.ArgumentParser):
    """
    Raise :class:`UsageError` instead of printing usage and exiting, so the
    error still reaches standard output as a document.
    """

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def read_graph_file(path: str) -> GraphFile:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph_file(text)


def read_gamma(spec: str, graph_file: GraphFile) -> List[Fraction]:
    """
    ``const:<q>`` or the path of a file with one rational per vertex.
    """
    n = graph_file.graph.n
    if spec.startswith("const:"):
        return [parse_rational(spec[len("const:") :])] * n
    values = parse_gamma(Path(spec).read_text())
    return list(as_fraction_vector(values, n, "gamma"))


def _document(
    argv: Sequence[str], graph_file: GraphFile, **fields: Any
) -> ResultDocument:
    return ResultDocument(
        tuple(argv),
        edges=graph_file.graph.edges,
        names=graph_file.names,
        **fields,
    )


def _from_result(
    argv: Sequence[str],
    graph_file: GraphFile,
    result: Optional[FlowResult],
    report: Optional[Dict[str, Any]] = None,
) -> ResultDocument:
    if result is None:
        return ResultDocument(tuple(argv), "infeasible", report=report or {})
    return _document(
        argv,
        graph_file,
        decision="feasible",
        gamma=result.target,
        label_set=result.label_set,
        flow=result.flow,
        provenance=result.provenance,
        report=report or {},
    )


def _window(window: Optional[Sequence[Fraction]]) -> Optional[List[str]]:
    return None if window is None else rationals(window)


def _exists(args: argparse.Namespace, argv: Sequence[str]) -> ResultDocument:
    graph_file = read_graph_file(args.graph)
    g = graph_file.graph
    gamma = read_gamma(args.gamma, graph_file)
    label_set = parse_label_set(" ".join(args.set))
    unit = all(x == 1 for x in gamma)
    base: Dict[str, Any] = {"gamma": tuple(gamma), "label_set": label_set}

    if label_set.kind == "finite":
        if unit and label_set == ZERO_HALF_ONE:
            return _from_result(argv, graph_file, one_zero_one_flow(g))
        enumeration = enumerate_finite_flows(
            g, label_set, gamma, keep=1, budget=args.budget
        )
        report: Dict[str, Any] = {
            "count": enumeration.count,
            "nodes": enumeration.nodes,
        }
        if not enumeration.count:
            return ResultDocument(tuple(argv), "infeasible", report=report, **base)
        return _document(
            argv,
            graph_file,
            decision="feasible",
            flow=enumeration.solutions[0],
            provenance="finite label enumeration",
            report=report,
            **base,
        )

    existence = gamma_flow_exists(g, gamma)
    if not existence.feasible and existence.obstruction is not None:
        return ResultDocument(
            tuple(argv),
            "infeasible",
            certificate=ImbalanceObstruction(existence.obstruction),
            provenance="bipartite imbalance",
            report={"imbalance": str(existence.imbalance)},
            **base,
        )

    parts = bipartition(g)
    balanced = parts is not None and parts.balanced
    if label_set.kind == "nonzero-ints" or (
        unit and balanced and label_set == LabelSet.nonzero_reals()
    ):
        if not unit:
            raise PreconditionError("nonzero-ints is decided for gamma const:1 only")
        result = nowhere_zero_one_sum(g, integral=label_set.kind == "nonzero-ints")
        if result is None:
            report = {"blocking_bridges": sorted(blocking_bridges(g))}
            return ResultDocument(tuple(argv), "infeasible", report=report, **base)
        return _from_result(argv, graph_file, result)

    interval = label_set.interval
    assert interval is not None
    if not interval.closed:
        result = punctured_interval_flow(g, gamma, interval)
        if result is None:
            return ResultDocument(tuple(argv), "infeasible", **base)
        return _from_result(argv, graph_file, result)

    if existence.feasible and interval == IntervalSpec.real_line():
        flow = solve_gamma_flow(g, gamma)
        assert flow is not None
        return _document(
            argv,
            graph_file,
            decision="feasible",
            flow=flow,
            provenance="exact elimination",
            **base,
        )

    decision = interval_flow(g, gamma, interval)
    if isinstance(decision, Feasible):
        return _document(
            argv,
            graph_file,
            decision="feasible",
            flow=decision.flow,
            provenance="interval linear program",
            **base,
        )
    return ResultDocument(
        tuple(argv),
        "infeasible",
        certificate=decision.certificate,
        provenance="interval linear program",
        **base,
    )


def _tree_range(args: argparse.Namespace, argv: Sequence[str]) -> ResultDocument:
    graph_file = read_graph_file(args.graph)
    g = graph_file.graph
    if not is_tree(g):
        raise GraphStructureError("graph is not a tree")
    unit = (Fraction(1),) * g.n
    if tree_unique_flow(g, 1) is None:
        existence = gamma_flow_exists(g, 1)
        assert existence.obstruction is not None
        return ResultDocument(
            tuple(argv),
            "infeasible",
            gamma=unit,
            certificate=ImbalanceObstruction(existence.obstruction),
            provenance="bipartite imbalance",
            report={"imbalance": str(existence.imbalance)},
        )

    report = tree_range_report(g)
    levels = [
        {
            "index": level.index,
            "size": level.size,
            "total": str(level.total),
            "sign_ok": level.sign_ok,
            "partial_sum_bound": level.partial_sum_bound,
            "partial_sum_ok": level.partial_sum_ok,
        }
        for level in report.levels
    ]
    return _document(
        argv,
        graph_file,
        decision="feasible",
        gamma=unit,
        label_set=LabelSet.of_interval(IntervalSpec(*report.predicted_interval)),
        flow=report.flow,
        provenance="tree pruning",
        report={
            "p1": report.p1,
            "predicted_interval": rationals(report.predicted_interval),
            "achieved_values": rationals(report.achieved_values),
            "window": _window(report.window),
            "within_window": report.within_window,
            "leaf_in_each_part": report.leaf_in_each_part,
            "levels": levels,
        },
    )


def _pm1_regular(g: Graph) -> FlowResult:
    k = regular_degree(g)
    if k is not None and k % 2 == 1:
        return pm1_flow_odd_regular(g)
    if k is not None and k % 4 == 2:
        return pm1_flow_mod4_regular(g)
    raise PreconditionError(f"pm1-regular needs odd or 2 mod 4 regularity, got {k}")


def _construct(args: argparse.Namespace, argv: Sequence[str]) -> ResultDocument:
    graph_file = read_graph_file(args.graph)
    g = graph_file.graph
    method, *params = args.method
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}, choose from {', '.join(METHODS)}")
    if (method == "kfactor") != bool(params) or len(params) > 1:
        raise UsageError("kfactor takes one parameter k, the other methods none")

    cap = args.cap
    simple: Dict[str, Callable[[], Optional[FlowResult]]] = {
        "pm1-regular": lambda: _pm1_regular(g),
        "3flow": lambda: one_sum_3flow(g, cap or REGULAR_FACTOR_CAP),
        "zero3flow": lambda: zero_sum_3flow(g),
        "zeroone": lambda: one_zero_one_flow(g),
        "positive": lambda: one_positive_flow(g, cap or POSITIVE_WITNESS_CAP),
        "nowherezero": lambda: nowhere_zero_one_sum(g, integral=args.integral),
    }
    if method in simple:
        return _from_result(argv, graph_file, simple[method]())

    if method == "kfactor":
        try:
            k = int(params[0])
        except ValueError:
            raise UsageError(f"k must be an integer, got {params[0]!r}")
        return _from_result(argv, graph_file, kfactor_scaled_flow(g, k))

    if method == "unicyclic":
        found = unicyclic_flow(g)
        if found is None:
            return _from_result(argv, graph_file, None)
        label_set = LabelSet.of_interval(IntervalSpec(*found.window))
        provenance = f"unicyclic case {found.case}"
        result = FlowResult.build(g, found.flow, label_set, provenance)
        report: Dict[str, Any] = {
            "case": found.case,
            "leaves": found.leaves,
            "window": rationals(found.window),
        }
        return _from_result(argv, graph_file, result, report)

    range_report = general_range_flow(g, cap or INDEPENDENCE_CAP)
    if range_report is None:
        return _from_result(argv, graph_file, None)
    general_report: Dict[str, Any] = {
        "window": _window(range_report.window),
        "within_window": range_report.within_window,
        "alpha_window": _window(range_report.alpha_window),
    }
    return _from_result(argv, graph_file, range_report.result, general_report)


def _oracle(args: argparse.Namespace, argv: Sequence[str]) -> ResultDocument:
    graph_file = read_graph_file(args.graph)
    label_set = parse_label_set(f"list {args.list}")
    c = parse_rational(args.c)
    keep = 1 if args.count_only else None
    enumeration = enumerate_finite_flows(
        graph_file.graph, label_set, c, keep=keep, budget=args.budget
    )
    report: Dict[str, Any] = {
        "count": enumeration.count,
        "nodes": enumeration.nodes,
        "seconds": round(enumeration.seconds, 6),
    }
    if not args.count_only:
        report["solutions"] = [rationals(flow) for flow in enumeration.solutions]
    base: Dict[str, Any] = {
        "gamma": (c,) * graph_file.graph.n,
        "label_set": label_set,
        "provenance": "exhaustive enumeration",
        "report": report,
    }
    if not enumeration.count:
        return ResultDocument(tuple(argv), "infeasible", **base)
    return _document(
        argv, graph_file, decision="feasible", flow=enumeration.solutions[0], **base
    )


def _verify(args: argparse.Namespace, argv: Sequence[str]) -> ResultDocument:
    graph_file = read_graph_file(args.graph)
    document = ResultDocument.loads(Path(args.document).read_text())
    violation = verify_document(graph_file, document)
    if violation is not None:
        raise VerificationError(" ".join(document.command) or "document", violation)
    report = {
        "verified": True,
        "decision": document.decision,
        "document_command": list(document.command),
    }
    return ResultDocument(tuple(argv), report=report)


def _exit_code(document: ResultDocument) -> int:
    if document.decision == "infeasible":
        return EXIT_INFEASIBLE
    return EXIT_FEASIBLE


def _emit(document: ResultDocument) -> None:
    sys.stdout.write(document.dumps())
    sys.stdout.write("\n")


COMMANDS: Final = {
    "exists": _exists,
    "tree-range": _tree_range,
    "construct": _construct,
    "oracle": _oracle,
    "verify": _verify,
}


def cli(args: argparse.Namespace, argv: Sequence[str] = ()) -> int:
    """
    Run one command and print its result; returns the exit status.
    """
    argv = list(argv) or [args.command]
    try:
        if args.command == "gen":
            sys.stdout.write(format_graph_file(generate(args.family, args.params)))
            return EXIT_FEASIBLE
        document = COMMANDS[args.command](args, argv)
    except CapExceededError as exc:
        document = ResultDocument.failure(argv, exc)
        report = {"what": exc.what, "cap": exc.cap, "decision": exc.decision}
        _emit(dataclasses.replace(document, report=report))
        return EXIT_CAP_EXCEEDED
    except VerificationError as exc:
        _emit(ResultDocument.failure(argv, exc))
        return EXIT_INFEASIBLE
    except (SumFlowError, OSError) as exc:
        _emit(ResultDocument.failure(argv, exc))
        return EXIT_USAGE

    logger.info("%s: %s", args.command, document.decision or "done")
    _emit(document)
    return _exit_code(document)


def create_args_parser() -> argparse.ArgumentParser:
    args_parser = ArgumentParser(
        prog="sumflow",
        description="Decide, construct and certify c-sum and gamma-valued flows",
    )
    args_parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log to standard error, repeat for debug output",
    )
    commands = args_parser.add_subparsers(dest="command", required=True)

    exists = commands.add_parser("exists", help="Decide whether a flow exists")
    exists.add_argument("graph", help="Graph file, - for standard input")
    exists.add_argument(
        "--gamma",
        default="const:1",
        help="Vertex sums: const:<q> or a file of one rational per vertex",
    )
    exists.add_argument(
        "--set",
        nargs="+",
        required=True,
        help="interval A,B [open-low] [open-high] [open] [nonzero], "
        "list V1,V2,..., nonzero-reals or nonzero-ints",
    )
    exists.add_argument(
        "--budget",
        type=int,
        default=ENUMERATION_BUDGET,
        help="Search node budget for finite label sets",
    )

    tree_range = commands.add_parser(
        "tree-range", help="Range of the 1-sum flow of a balanced tree"
    )
    tree_range.add_argument("graph", help="Graph file, - for standard input")

    construct = commands.add_parser("construct", help="Build a named flow")
    construct.add_argument("graph", help="Graph file, - for standard input")
    construct.add_argument(
        "--method",
        nargs="+",
        required=True,
        metavar="METHOD",
        help=f"One of {', '.join(METHODS)}; kfactor takes k",
    )
    construct.add_argument(
        "--integral",
        action="store_true",
        help="Integer values for nowherezero",
    )
    construct.add_argument(
        "--cap",
        type=int,
        help="Cap of the capped search behind 3flow, positive or general",
    )

    oracle = commands.add_parser("oracle", help="Enumerate finite label flows")
    oracle.add_argument("graph", help="Graph file, - for standard input")
    oracle.add_argument("--list", required=True, help="Labels V1,V2,...")
    oracle.add_argument("--c", default="1", help="Constant vertex sum")
    oracle.add_argument(
        "--count-only", action="store_true", help="Do not list the solutions"
    )
    oracle.add_argument(
        "--budget",
        type=int,
        default=ENUMERATION_BUDGET,
        help="Search node budget",
    )

    verify = commands.add_parser("verify", help="Re-check a result document")
    verify.add_argument("graph", help="Graph file, - for standard input")
    verify.add_argument("document", help="Result document (JSON)")

    gen = commands.add_parser("gen", help="Write a named graph as a graph file")
    gen.add_argument("family", help=f"One of {', '.join(FAMILIES)}")
    gen.add_argument("params", nargs="*", help="Family parameters")
    return args_parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> None:
    argv = list(sys.argv[1:] if argv is None else argv)
    args_parser = create_args_parser()
    try:
        args = args_parser.parse_args(argv)
    except UsageError as exc:
        _emit(ResultDocument.failure(argv, exc))
        sys.exit(EXIT_USAGE)

    configure_logging(args.verbose)
    sys.exit(cli(args, argv))


if __name__ == "__main__":
    main()
