"""
==================================================
:mod:`lp` -- Interval flows by exact linear programs
==================================================

A γ-[a,b]-flow is a point of ``{ω : A(G)ω = γ, a ≤ ω ≤ b}``.
Each edge value is written through nonnegative variables
(``ω = a + x`` with ``x ≤ b − a``, ``ω = b − x``, or ``ω = x⁺ − x⁻``)
and the standard form program goes to :mod:`sumflow.simplex`.
Infeasible programs yield a :class:`FarkasCertificate` ``(z, w)``:
``w ≥ 0``, ``Aᵀz ≤ w`` and

    ``zᵀγ > Σ_{b finite} b·w_e + Σ_{a finite} a·((Aᵀz)_e − w_e)``

with ``w_e = 0`` on edges where ``b = +∞`` and ``w_e = (Aᵀz)_e`` where
``a = −∞``. For finite ``a, b`` this reads
``(γ − a·d(G))ᵀz > (b − a)·1ᵀw``.
"""
# Standard Library
import logging

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

# Local Folder
from .core import (
    FlowAssignment,
    GammaVector,
    Graph,
    InfeasibleError,
    PreconditionError,
)
from .graph import require_connected
from .labels import IntervalSpec, LabelSet, flow_violation
from .simplex import LPResult, solve_standard_form
from .solver import GammaLike, as_flow, as_gamma, incidence_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FarkasCertificate:
    """
    Infeasibility witness: ``z`` per vertex, ``w`` per edge.
    """

    z: Tuple[Fraction, ...]
    w: Tuple[Fraction, ...]


@dataclass(frozen=True)
class NonnegativeObstruction:
    """
    ``z`` with ``A(G)ᵀz ≥ 0`` and ``γᵀz < 0``.
    """

    z: Tuple[Fraction, ...]


@dataclass(frozen=True)
class Feasible:
    flow: FlowAssignment

    @property
    def feasible(self) -> bool:
        return True


@dataclass(frozen=True)
class Infeasible:
    certificate: Union[FarkasCertificate, NonnegativeObstruction]

    @property
    def feasible(self) -> bool:
        return False


FlowDecision = Union[Feasible, Infeasible]


@dataclass(frozen=True)
class ValueRange:
    """
    Exact minimum and maximum of a linear functional over the flow polytope;
    ``None`` marks an unbounded side. Each side carries an attaining flow,
    or for an unbounded side a feasible flow and a direction along which the
    functional is unbounded.
    """

    low: Optional[Fraction]
    high: Optional[Fraction]
    low_flow: FlowAssignment
    high_flow: FlowAssignment
    low_ray: Optional[FlowAssignment] = None
    high_ray: Optional[FlowAssignment] = None

    @property
    def forced(self) -> bool:
        return self.low is not None and self.low == self.high


@dataclass
class _FlowProgram:
    """
    Standard form of ``A(G)ω = γ`` over a closed interval.
    Vertex rows come first, then one box row per doubly bounded edge.
    """

    g: Graph
    gamma: GammaVector
    interval: IntervalSpec
    terms: List[List[Tuple[int, int]]] = field(default_factory=list)
    offsets: List[Fraction] = field(default_factory=list)
    box_rows: Dict[int, int] = field(default_factory=dict)
    matrix: List[List[Fraction]] = field(default_factory=list)
    rhs: List[Fraction] = field(default_factory=list)
    width: int = 0

    def __post_init__(self) -> None:
        a, b = self.interval.a, self.interval.b
        boxed: List[Tuple[int, int]] = []
        for e in range(self.g.m):
            if a is not None:
                self.offsets.append(a)
                self.terms.append([(self.width, 1)])
                self.width += 1
                if b is not None:
                    boxed.append((e, self.width))
                    self.width += 1
            elif b is not None:
                self.offsets.append(b)
                self.terms.append([(self.width, -1)])
                self.width += 1
            else:
                self.offsets.append(Fraction(0))
                self.terms.append([(self.width, 1), (self.width + 1, -1)])
                self.width += 2

        for v in range(self.g.n):
            row = [Fraction(0)] * self.width
            shift = Fraction(0)
            for _, e in self.g.adjacency(v):
                for column, sign in self.terms[e]:
                    row[column] = Fraction(sign)
                shift += self.offsets[e]
            self.matrix.append(row)
            self.rhs.append(self.gamma[v] - shift)

        assert a is not None or not boxed
        for e, slack in boxed:
            row = [Fraction(0)] * self.width
            row[self.terms[e][0][0]] = Fraction(1)
            row[slack] = Fraction(1)
            self.box_rows[e] = len(self.matrix)
            self.matrix.append(row)
            self.rhs.append(b - a)  # type: ignore[operator]

    def flow(self, x: Sequence[Fraction]) -> FlowAssignment:
        return tuple(
            offset + sum((sign * x[column] for column, sign in terms), Fraction(0))
            for offset, terms in zip(self.offsets, self.terms)
        )

    def direction(self, ray: Sequence[Fraction]) -> FlowAssignment:
        return tuple(
            sum((sign * ray[column] for column, sign in terms), Fraction(0))
            for terms in self.terms
        )

    def cost(self, coefficients: Sequence[Fraction]) -> List[Fraction]:
        cost = [Fraction(0)] * self.width
        for c, terms in zip(coefficients, self.terms):
            for column, sign in terms:
                cost[column] = sign * c
        return cost

    def solve(self, coefficients: Optional[Sequence[Fraction]] = None) -> LPResult:
        cost = None if coefficients is None else self.cost(coefficients)
        return solve_standard_form(self.matrix, self.rhs, cost, width=self.width)

    def certificate(self, farkas: Sequence[Fraction]) -> FarkasCertificate:
        z = tuple(farkas[: self.g.n])
        t = incidence_matrix(self.g).transpose_apply(z)
        w = []
        for e in range(self.g.m):
            if e in self.box_rows:
                w.append(-farkas[self.box_rows[e]])
            elif self.interval.a is None:
                w.append(t[e])
            else:
                w.append(Fraction(0))
        return FarkasCertificate(z, tuple(w))


def _require_closed(interval: IntervalSpec) -> None:
    if not interval.closed:
        raise PreconditionError(
            f"{interval} is not closed; use the open or punctured interval routines"
        )


def interval_flow(g: Graph, gamma: GammaLike, interval: IntervalSpec) -> FlowDecision:
    """
    Decide whether ``g`` has a γ-flow with values in the closed ``interval``.

    >>> c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    >>> interval_flow(c4, 1, IntervalSpec.of(0, 1)).feasible
    True
    >>> decision = interval_flow(Graph(2, [(0, 1)]), 1, IntervalSpec.of(2, 3))
    >>> decision.feasible
    False

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    :raises ~sumflow.core.PreconditionError: ``interval`` is not closed.
    """
    require_connected(g)
    _require_closed(interval)
    target = as_gamma(g, gamma)
    program = _FlowProgram(g, target, interval)
    result = program.solve()
    logger.debug(
        "interval flow over %s on %r: %s after %d pivots",
        interval,
        g,
        result.status,
        result.pivots,
    )
    if result.status == "infeasible":
        assert result.farkas is not None
        certificate = program.certificate(result.farkas)
        assert verify_farkas(g, target, interval, certificate)
        return Infeasible(certificate)

    assert result.x is not None
    flow = program.flow(result.x)
    assert verify_flow(g, target, flow, interval)
    return Feasible(flow)


def nonnegative_flow(g: Graph, gamma: GammaLike) -> FlowDecision:
    """
    Decide whether ``A(G)ω = γ`` has a solution ``ω ≥ 0``.
    ``γ = 0`` is answered with the zero flow.

    >>> nonnegative_flow(Graph(2, [(0, 1)]), 1).flow
    (Fraction(1, 1),)
    >>> path = Graph(3, [(0, 1), (1, 2)])
    >>> nonnegative_flow(path, [0, 1, 0]).feasible
    False

    :raises ~sumflow.core.GraphStructureError: disconnected input.
    """
    target = as_gamma(g, gamma)
    if all(x == 0 for x in target):
        return Feasible((Fraction(0),) * g.m)

    decision = interval_flow(g, target, IntervalSpec(Fraction(0), None))
    if isinstance(decision, Feasible):
        return decision
    assert isinstance(decision.certificate, FarkasCertificate)
    return Infeasible(NonnegativeObstruction(tuple(-x for x in decision.certificate.z)))


def verify_nonnegative_obstruction(
    g: Graph, gamma: GammaLike, obstruction: NonnegativeObstruction
) -> bool:
    target = as_gamma(g, gamma)
    if len(obstruction.z) != g.n:
        raise PreconditionError(f"z has length {len(obstruction.z)}, expected {g.n}")
    t = incidence_matrix(g).transpose_apply(obstruction.z)
    value = sum((x * y for x, y in zip(target, obstruction.z)), Fraction(0))
    return all(x >= 0 for x in t) and value < 0


def verify_flow(
    g: Graph, gamma: GammaLike, flow: Sequence[object], interval: IntervalSpec
) -> bool:
    """
    Exact check of ``A(G)ω = γ`` and of every value against ``interval``.

    :raises ~sumflow.core.PreconditionError: ``flow`` or ``gamma`` has the \
        wrong length.
    """
    values = as_flow(g, flow)
    target = as_gamma(g, gamma)
    return flow_violation(g, values, target, LabelSet.of_interval(interval)) is None


def verify_farkas(
    g: Graph, gamma: GammaLike, interval: IntervalSpec, cert: FarkasCertificate
) -> bool:
    """
    Check every certificate condition exactly.

    >>> k2 = Graph(2, [(0, 1)])
    >>> zero = FarkasCertificate((Fraction(0),) * 2, (Fraction(0),))
    >>> verify_farkas(k2, 1, IntervalSpec.of(2, 3), zero)
    False

    :raises ~sumflow.core.PreconditionError: dimension mismatch.
    """
    target = as_gamma(g, gamma)
    if len(cert.z) != g.n or len(cert.w) != g.m:
        raise PreconditionError(
            f"certificate has shape ({len(cert.z)}, {len(cert.w)}), "
            f"expected ({g.n}, {g.m})"
        )

    a, b = interval.a, interval.b
    t = incidence_matrix(g).transpose_apply(cert.z)
    bound = Fraction(0)
    for t_e, w_e in zip(t, cert.w):
        if w_e < 0 or t_e > w_e:
            return False
        if b is None and w_e != 0:
            return False
        if a is None and t_e != w_e:
            return False
        if b is not None:
            bound += b * w_e
        if a is not None:
            bound += a * (t_e - w_e)
    value = sum((x * y for x, y in zip(target, cert.z)), Fraction(0))
    return value > bound


def linear_functional_range(
    g: Graph,
    gamma: GammaLike,
    coefficients: Sequence[object],
    interval: IntervalSpec,
) -> ValueRange:
    """
    Exact range of ``Σ c_e ω(e)`` over all γ-flows with values in ``interval``.

    >>> k2 = Graph(2, [(0, 1)])
    >>> r = linear_functional_range(k2, 1, [2], IntervalSpec.real_line())
    >>> r.low, r.high
    (Fraction(2, 1), Fraction(2, 1))

    :raises ~sumflow.core.InfeasibleError: no such flow exists.
    :raises ~sumflow.core.PreconditionError: ``interval`` is not closed.
    """
    require_connected(g)
    _require_closed(interval)
    target = as_gamma(g, gamma)
    c = as_fraction_coefficients(g, coefficients)
    program = _FlowProgram(g, target, interval)

    sides = []
    for sign in (1, -1):
        result = program.solve([sign * x for x in c])
        if result.status == "infeasible":
            raise InfeasibleError(f"no {interval} flow exists")
        assert result.x is not None
        flow = program.flow(result.x)
        if result.status == "unbounded":
            assert result.ray is not None
            sides.append((None, flow, program.direction(result.ray)))
        else:
            value = sum((x * y for x, y in zip(c, flow)), Fraction(0))
            sides.append((value, flow, None))

    (low, low_flow, low_ray), (high, high_flow, high_ray) = sides
    return ValueRange(low, high, low_flow, high_flow, low_ray, high_ray)


def as_fraction_coefficients(
    g: Graph, coefficients: Sequence[object]
) -> Tuple[Fraction, ...]:
    if len(coefficients) != g.m:
        raise PreconditionError(
            f"coefficients have length {len(coefficients)}, expected {g.m}"
        )
    return tuple(Fraction(x) for x in coefficients)  # type: ignore[arg-type]


def edge_value_range(
    g: Graph, gamma: GammaLike, e: int, interval: IntervalSpec
) -> ValueRange:
    """
    Exact range of ``ω(e)``.

    >>> c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    >>> r = edge_value_range(c4, 1, 0, IntervalSpec.of(0, 1))
    >>> r.low, r.high
    (Fraction(0, 1), Fraction(1, 1))

    :raises ~sumflow.core.InfeasibleError: no such flow exists.
    """
    if not 0 <= e < g.m:
        raise PreconditionError(f"edge {e} out of range")
    indicator = [int(i == e) for i in range(g.m)]
    return linear_functional_range(g, gamma, indicator, interval)


__all__ = (
    "FarkasCertificate",
    "Feasible",
    "FlowDecision",
    "Infeasible",
    "NonnegativeObstruction",
    "ValueRange",
    "edge_value_range",
    "interval_flow",
    "linear_functional_range",
    "nonnegative_flow",
    "verify_farkas",
    "verify_flow",
    "verify_nonnegative_obstruction",
)
