# Standard Library
from fractions import Fraction
from typing import Any, Dict, List, Optional, Set, Tuple, Union

# Third Party Library
from lark import Token, Transformer, v_args
from typing_extensions import Literal

# Local Folder
from .core import Edge, Graph, GraphFile, GraphSyntaxError
from .labels import IntervalSpec, LabelSet

T_FLAG = Literal["open-low", "open-high", "open", "nonzero"]
T_BOUND = Union[Fraction, "Infinity"]


class Infinity:
    """
    ``inf`` as written in a bound, with its sign.
    """

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self) -> str:
        return "inf" if self.sign > 0 else "-inf"


class EdgeLine:
    __slots__ = ("u", "v", "line")

    def __init__(self, u: Token, v: Token):
        self.u = int(u)
        self.v = int(v)
        self.line: Optional[int] = u.line

    @property
    def text(self) -> str:
        return f"{self.u} {self.v}"


class NameLine:
    __slots__ = ("v", "name", "line")

    def __init__(self, v: Token, name: Token):
        self.v = int(v)
        self.name = str(name)
        self.line: Optional[int] = v.line


@v_args(inline=True)
class GraphFileTransformer(Transformer[Token, Any]):
    """
    Turn the trees of ``grammar.lark`` into graph files, label sets and
    rationals. Every check a line can fail is raised with its line number.
    """

    def RATIONAL(self, token: Token) -> Fraction:
        try:
            return Fraction(str(token))
        except ZeroDivisionError:
            raise GraphSyntaxError(str(token), token.line, "zero denominator")

    def INF(self, token: Token) -> Infinity:
        return Infinity(-1 if token.startswith("-") else 1)

    def rational(self, value: Fraction) -> Fraction:
        return value

    def bound(self, value: T_BOUND) -> T_BOUND:
        return value

    def open_low(self) -> T_FLAG:
        return "open-low"

    def open_high(self) -> T_FLAG:
        return "open-high"

    def open(self) -> T_FLAG:
        return "open"

    def nonzero(self) -> T_FLAG:
        return "nonzero"

    def interval(self, low: T_BOUND, high: T_BOUND, *flags: T_FLAG) -> LabelSet:
        if isinstance(low, Infinity) and low.sign > 0:
            raise GraphSyntaxError("inf", None, "a lower bound cannot be +inf")
        if isinstance(high, Infinity) and high.sign < 0:
            raise GraphSyntaxError("-inf", None, "an upper bound cannot be -inf")
        a = None if isinstance(low, Infinity) else low
        b = None if isinstance(high, Infinity) else high
        if a is not None and b is not None and a > b:
            raise GraphSyntaxError(f"{a},{b}", None, "lower bound above upper bound")
        return LabelSet.of_interval(
            IntervalSpec.of(
                a,
                b,
                open_low="open-low" in flags or "open" in flags,
                open_high="open-high" in flags or "open" in flags,
                punctured="nonzero" in flags,
            )
        )

    def finite(self, *values: Fraction) -> LabelSet:
        return LabelSet.finite(values)

    def nonzero_reals(self) -> LabelSet:
        return LabelSet.nonzero_reals()

    def nonzero_ints(self) -> LabelSet:
        return LabelSet.nonzero_ints()

    def gamma_values(self, *values: Fraction) -> List[Fraction]:
        return list(values)

    def header(self, n: Token, m: Token) -> Tuple[int, int, Optional[int]]:
        return int(n), int(m), n.line

    def edge(self, u: Token, v: Token) -> EdgeLine:
        return EdgeLine(u, v)

    def name_entry(self, v: Token, name: Token) -> NameLine:
        return NameLine(v, name)

    def names_section(self, *entries: NameLine) -> List[NameLine]:
        return list(entries)

    def graph_file(
        self,
        header: Tuple[int, int, Optional[int]],
        *rest: Union[EdgeLine, List[NameLine]],
    ) -> GraphFile:
        n, m, header_line = header
        edge_lines = [item for item in rest if isinstance(item, EdgeLine)]
        name_lines = [e for item in rest if isinstance(item, list) for e in item]
        out_of_range = f"vertex out of 0..{n - 1}"

        edges: List[Edge] = []
        seen: Set[Edge] = set()
        for line in edge_lines:
            if line.u == line.v:
                raise GraphSyntaxError(line.text, line.line, "loop")
            if line.u > line.v:
                raise GraphSyntaxError(line.text, line.line, "expected u < v")
            if line.v >= n:
                raise GraphSyntaxError(line.text, line.line, out_of_range)
            if (line.u, line.v) in seen:
                raise GraphSyntaxError(line.text, line.line, "duplicate edge")
            seen.add((line.u, line.v))
            edges.append((line.u, line.v))
        if len(edges) != m:
            found = f"header announces {m} edges, found {len(edges)}"
            raise GraphSyntaxError(f"{n} {m}", header_line, found)

        names: Dict[int, str] = {}
        for entry in name_lines:
            text = f"{entry.v} {entry.name}"
            if entry.v >= n:
                raise GraphSyntaxError(text, entry.line, out_of_range)
            if entry.v in names:
                raise GraphSyntaxError(text, entry.line, "vertex named twice")
            names[entry.v] = entry.name
        return GraphFile(Graph(n, edges), names)


__all__ = ("GraphFileTransformer", "Infinity")
