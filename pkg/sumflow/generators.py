"""
===========================================
:mod:`generators` -- Named graph families
===========================================

Deterministic constructors for every family the command line can emit.
Vertices are relabelled to ``0..n-1`` and edges come out sorted, so the same
parameters always give the same :class:`~sumflow.core.Graph`.
"""
# Standard Library
import logging

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

# Third Party Library
import networkx as nx

# Local Folder
from .core import Graph, PreconditionError
from .trees import EXTREMAL_KINDS, make_extremal_tree
from .unicyclic import unicyclic_extremal

logger = logging.getLogger(__name__)


def _at_least(name: str, value: int, low: int) -> None:
    if value < low:
        raise PreconditionError(f"{name} needs n >= {low}, got {value}")


def cycle(n: int) -> Graph:
    """
    >>> cycle(4)
    Graph(4, [(0, 1), (0, 3), (1, 2), (2, 3)])
    """
    _at_least("cycle", n, 3)
    return Graph.from_networkx(nx.cycle_graph(n))


def path(n: int) -> Graph:
    _at_least("path", n, 1)
    return Graph.from_networkx(nx.path_graph(n))


def star(leaves: int) -> Graph:
    """
    ``K_{1,leaves}`` with the centre at 0.

    >>> star(3).degrees()
    (3, 1, 1, 1)
    """
    _at_least("star", leaves, 1)
    return Graph.from_networkx(nx.star_graph(leaves))


def complete(n: int) -> Graph:
    _at_least("complete", n, 1)
    return Graph.from_networkx(nx.complete_graph(n))


def complete_bipartite(a: int, b: int) -> Graph:
    """
    ``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``.
    """
    if a < 1 or b < 1:
        raise PreconditionError(f"complete-bipartite needs a, b >= 1, got {a}, {b}")
    return Graph.from_networkx(nx.complete_bipartite_graph(a, b))


def circulant(n: int, offsets: Sequence[int]) -> Graph:
    """
    >>> circulant(8, [1, 2, 4]).degrees()
    (5, 5, 5, 5, 5, 5, 5, 5)
    """
    _at_least("circulant", n, 3)
    if not offsets or any(not 0 < d <= n // 2 for d in offsets):
        raise PreconditionError(f"circulant offsets must lie in 1..{n // 2}")
    return Graph.from_networkx(nx.circulant_graph(n, list(offsets)))


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def example2(s: int, t: int) -> Graph:
    """
    Two disjoint copies of ``K_{s, s(1+t)+1}``; one vertex of the first
    small side is joined to the whole small side of the second copy. The
    result is balanced bipartite but has no 1-sum flow bounded below by
    ``-t``: the ``s`` joining edges must sum to ``-st-1``.

    >>> g = example2(1, 1)
    >>> g.n, g.m
    (8, 7)
    >>> g.edges[-1]
    (0, 4)
    """
    if s < 1 or t < 1:
        raise PreconditionError(f"example2 needs s, t >= 1, got {s}, {t}")
    big = s * (1 + t) + 1
    half = s + big
    edges: List[Tuple[int, int]] = []
    for offset in (0, half):
        edges += [(offset + x, offset + s + y) for x in range(s) for y in range(big)]
    edges += [(0, half + x) for x in range(s)]
    return Graph(2 * half, edges)


def odd_cycle_cactus(
    lengths: Sequence[int],
    anchors: Optional[Sequence[int]] = None,
    bridged: Iterable[int] = (),
) -> Graph:
    """
    A cactus whose blocks are the given odd cycles plus optional bridges.
    Cycle ``i > 0`` is glued at vertex ``anchors[i - 1]`` of the graph
    built so far, or hung from it by a new edge when ``i`` is in
    ``bridged``. Without anchors each cycle hangs from the last vertex.

    >>> odd_cycle_cactus([3, 3]).degrees()
    (2, 2, 4, 2, 2)
    >>> odd_cycle_cactus([3, 5], bridged=[1]).m
    9
    """
    if not lengths or any(k < 3 or k % 2 == 0 for k in lengths):
        raise PreconditionError(f"cycle lengths must be odd and >= 3: {lengths}")
    if anchors is not None and len(anchors) != len(lengths) - 1:
        raise PreconditionError("need one anchor per cycle after the first")
    hanging = set(bridged)

    n = 0
    edges: List[Tuple[int, int]] = []
    for i, k in enumerate(lengths):
        if i == 0:
            ring = list(range(k))
            n = k
        else:
            anchor = n - 1 if anchors is None else anchors[i - 1]
            if not 0 <= anchor < n:
                raise PreconditionError(f"anchor {anchor} is not a vertex yet")
            if i in hanging:
                ring = list(range(n, n + k))
                edges.append((anchor, n))
                n += k
            else:
                ring = [anchor] + list(range(n, n + k - 1))
                n += k - 1
        pairs = [(ring[j], ring[(j + 1) % k]) for j in range(k)]
        edges += [(min(u, v), max(u, v)) for u, v in pairs]
    return Graph(n, sorted(edges))


@dataclass(frozen=True)
class Family:
    """
    A named family for the command line: ``usage`` lists its parameters,
    ``arity`` is their number (``None`` for a variadic tail).
    """

    name: str
    usage: str
    arity: Optional[int]
    build: Callable[[Sequence[str]], Graph]


def _ints(family: str, params: Sequence[str]) -> List[int]:
    try:
        return [int(p) for p in params]
    except ValueError:
        raise PreconditionError(f"{family} takes integer parameters: {params}")


def _extremal(kind: str) -> Callable[[Sequence[str]], Graph]:
    return lambda params: make_extremal_tree(kind, *_ints(kind, params))


def _unicyclic(params: Sequence[str]) -> Graph:
    p, case = _ints("unicyclic-extremal", params[:2])
    if len(params) == 3:
        variant = params[2]
        if variant not in ("leaf", "center"):
            raise PreconditionError(f"unknown variant {variant!r}")
        return unicyclic_extremal(p, case, variant)  # type: ignore[arg-type]
    return unicyclic_extremal(p, case)


def _circulant(params: Sequence[str]) -> Graph:
    n, *offsets = _ints("circulant", params)
    return circulant(n, offsets)


FAMILIES: Dict[str, Family] = {
    family.name: family
    for family in [
        Family("cycle", "n", 1, lambda p: cycle(*_ints("cycle", p))),
        Family("path", "n", 1, lambda p: path(*_ints("path", p))),
        Family("star", "leaves", 1, lambda p: star(*_ints("star", p))),
        Family("complete", "n", 1, lambda p: complete(*_ints("complete", p))),
        Family(
            "complete-bipartite",
            "a b",
            2,
            lambda p: complete_bipartite(*_ints("complete-bipartite", p)),
        ),
        Family("circulant", "n offset...", None, _circulant),
        *(Family(kind, "n", 1, _extremal(kind)) for kind in EXTREMAL_KINDS),
        Family("example2", "s t", 2, lambda p: example2(*_ints("example2", p))),
        Family("unicyclic-extremal", "p case [leaf|center]", None, _unicyclic),
        Family("petersen", "", 0, lambda p: petersen()),
        Family(
            "cactus",
            "length...",
            None,
            lambda p: odd_cycle_cactus(_ints("cactus", p)),
        ),
    ]
}


def generate(name: str, params: Sequence[str]) -> Graph:
    """
    Build family ``name`` from its textual parameters.

    >>> generate("cycle", ["5"]).m
    5
    >>> generate("example2", ["2", "1"]).n
    14

    :raises ~sumflow.core.PreconditionError: unknown family, wrong number \
        of parameters or parameters out of range.
    """
    family = FAMILIES.get(name)
    if family is None:
        raise PreconditionError(f"unknown family {name!r}")
    if family.arity is not None and len(params) != family.arity:
        raise PreconditionError(f"{name} takes {family.usage or 'no parameters'}")
    if name == "circulant" and len(params) < 2:
        raise PreconditionError("circulant takes n and at least one offset")
    if name == "unicyclic-extremal" and len(params) not in (2, 3):
        raise PreconditionError(f"{name} takes {family.usage}")
    if name == "cactus" and not params:
        raise PreconditionError("cactus takes at least one cycle length")
    g = family.build(params)
    logger.debug("generated %s %s: n=%d m=%d", name, " ".join(params), g.n, g.m)
    return g


__all__ = (
    "FAMILIES",
    "Family",
    "circulant",
    "complete",
    "complete_bipartite",
    "cycle",
    "example2",
    "generate",
    "odd_cycle_cactus",
    "path",
    "petersen",
    "star",
)
