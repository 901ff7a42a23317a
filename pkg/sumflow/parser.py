"""
=====================================================
:mod:`parser` -- Read graph files and set expressions
=====================================================
"""
# Standard Library
from fractions import Fraction
from typing import Any, List, Mapping, Optional

# Third Party Library
from lark import Lark, UnexpectedInput
from lark.exceptions import VisitError

# Local Folder
from .core import Graph, GraphFile, GraphSyntaxError, SumFlowError
from .labels import LabelSet
from .transformer import GraphFileTransformer

transformer = GraphFileTransformer(visit_tokens=True)
parser = Lark.open_from_package(
    __name__,
    "grammar.lark",
    parser="lalr",
    maybe_placeholders=True,
    start=["graph_file", "label_set", "rational", "gamma_values"],
)


def _parse(text: str, start: str) -> Any:
    try:
        tree = parser.parse(text, start=start)
    except UnexpectedInput as exc:
        lines = text.splitlines()
        if start == "graph_file" and 0 < exc.line <= len(lines):
            raise GraphSyntaxError(
                lines[exc.line - 1].strip(), exc.line, f"column {exc.column}"
            ) from exc
        if start == "graph_file":
            raise GraphSyntaxError("graph file", None, "unexpected end") from exc
        raise GraphSyntaxError(text.strip()) from exc

    try:
        return transformer.transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, SumFlowError):
            raise exc.orig_exc

        raise


def parse_graph_file(text: str) -> GraphFile:
    """
    Parse a graph file: a header ``n m``, then ``m`` lines ``u v`` with
    ``0 ≤ u < v < n``, then optionally a line ``names`` followed by
    ``index name`` lines. ``#`` starts a comment.

    >>> parse_graph_file("3 2\\n0 1\\n1 2\\n").graph
    Graph(3, [(0, 1), (1, 2)])
    >>> parse_graph_file("2 1\\n# K2\\n0 1\\nnames\\n0 left\\n").name(0)
    'left'
    >>> parse_graph_file("2 1\\n1 1\\n")
    Traceback (most recent call last):
        ...
    sumflow.core.GraphSyntaxError: line 2: '1 1' is not valid (loop)

    :param text: graph file contents
    :type text: str

    :returns: The graph and its vertex names.
    :rtype: :class:`sumflow.core.GraphFile`
    :raises ~sumflow.core.GraphSyntaxError: \
        malformed line, loop, duplicate edge or wrong edge count.
    """
    return _parse(text + "\n", "graph_file")  # type: ignore[no-any-return]


def format_graph_file(graph: Graph, names: Optional[Mapping[int, str]] = None) -> str:
    """
    The inverse of :func:`parse_graph_file`.

    >>> print(format_graph_file(Graph(3, [(0, 1), (1, 2)])), end="")
    3 2
    0 1
    1 2
    """
    lines = [f"{graph.n} {graph.m}"]
    lines += [f"{u} {v}" for u, v in graph.edges]
    if names:
        lines.append("names")
        lines += [f"{v} {names[v]}" for v in sorted(names)]
    return "\n".join(lines) + "\n"


def parse_label_set(text: str) -> LabelSet:
    """
    >>> str(parse_label_set("interval -1, inf"))
    'interval -1,inf'
    >>> parse_label_set("list 1/2, 0, 1").values
    (Fraction(0, 1), Fraction(1, 2), Fraction(1, 1))
    >>> parse_label_set("interval 0,1 open-low").contains(0)
    False

    :raises ~sumflow.core.GraphSyntaxError: \
        not one of ``interval a,b [flags]``, ``list v1,v2,...``, \
        ``nonzero-reals`` or ``nonzero-ints``.
    """
    return _parse(text, "label_set")  # type: ignore[no-any-return]


def parse_rational(text: str) -> Fraction:
    """
    >>> parse_rational("-3/6")
    Fraction(-1, 2)

    :raises ~sumflow.core.GraphSyntaxError: not ``p`` or ``p/q``.
    """
    return _parse(text, "rational")  # type: ignore[no-any-return]


def parse_gamma(text: str) -> List[Fraction]:
    """
    Whitespace separated rationals, possibly over several lines.

    >>> parse_gamma("1 1/2\\n-1")
    [Fraction(1, 1), Fraction(1, 2), Fraction(-1, 1)]
    """
    return _parse(text + "\n", "gamma_values")  # type: ignore[no-any-return]


__all__ = (
    "format_graph_file",
    "parse_gamma",
    "parse_graph_file",
    "parse_label_set",
    "parse_rational",
)
