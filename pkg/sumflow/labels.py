"""
===============================================
:mod:`labels` -- Admissible value sets and flows
===============================================

:class:`IntervalSpec` covers closed, half-open, open and unbounded intervals,
optionally with ``0`` removed. :class:`LabelSet` adds finite value lists and
the nonzero integers. :class:`FlowResult` is what every construction returns;
it is verified exactly before it is handed out.
"""
# Standard Library
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

# Third Party Library
from typing_extensions import Literal

# Local Folder
from .core import (
    FlowAssignment,
    GammaVector,
    Graph,
    PreconditionError,
    VerificationError,
)
from .solver import GammaLike, as_gamma, incidence_matrix

logger = logging.getLogger(__name__)

BoundLike = Union[None, int, str, Fraction]
LabelKind = Literal["finite", "interval", "nonzero-ints"]


def _bound(value: BoundLike) -> Optional[Fraction]:
    return None if value is None else Fraction(value)


@dataclass(frozen=True)
class IntervalSpec:
    """
    The interval between ``a`` and ``b``; ``None`` stands for ``-∞`` as ``a``
    and ``+∞`` as ``b``. Open flags on infinite sides are dropped.

    >>> IntervalSpec.of(0, 1).contains(Fraction(1, 2))
    True
    >>> str(IntervalSpec.of(-1, None))
    'interval -1,inf'
    >>> IntervalSpec.of(0, 1, open_low=True).contains(0)
    False

    :raises ~sumflow.core.PreconditionError: ``a > b``.
    """

    a: Optional[Fraction]
    b: Optional[Fraction]
    open_low: bool = False
    open_high: bool = False
    punctured: bool = False

    def __post_init__(self) -> None:
        if self.a is not None and self.b is not None and self.a > self.b:
            raise PreconditionError(f"empty interval: {self.a} > {self.b}")
        if self.a is None:
            object.__setattr__(self, "open_low", False)
        if self.b is None:
            object.__setattr__(self, "open_high", False)

    @classmethod
    def of(
        cls,
        a: BoundLike,
        b: BoundLike,
        *,
        open_low: bool = False,
        open_high: bool = False,
        punctured: bool = False,
    ) -> "IntervalSpec":
        return cls(_bound(a), _bound(b), open_low, open_high, punctured)

    @classmethod
    def real_line(cls) -> "IntervalSpec":
        return cls(None, None)

    @property
    def closed(self) -> bool:
        return not (self.open_low or self.open_high or self.punctured)

    @property
    def bounded(self) -> bool:
        return self.a is not None and self.b is not None

    def closure(self) -> "IntervalSpec":
        return IntervalSpec(self.a, self.b)

    def contains(self, value: object) -> bool:
        x = Fraction(value)  # type: ignore[arg-type]
        if self.punctured and x == 0:
            return False
        if self.a is not None and (x < self.a or (self.open_low and x == self.a)):
            return False
        if self.b is not None and (x > self.b or (self.open_high and x == self.b)):
            return False
        return True

    def is_empty(self) -> bool:
        if self.a is None or self.b is None or self.a != self.b:
            return False
        return self.open_low or self.open_high or (self.punctured and self.a == 0)

    def __str__(self) -> str:
        low = "-inf" if self.a is None else str(self.a)
        high = "inf" if self.b is None else str(self.b)
        words = [f"interval {low},{high}"]
        if self.open_low:
            words.append("open-low")
        if self.open_high:
            words.append("open-high")
        if self.punctured:
            words.append("nonzero")
        return " ".join(words)


@dataclass(frozen=True)
class LabelSet:
    """
    Admissible edge values.

    >>> LabelSet.finite([1, 0, 1]).values
    (Fraction(0, 1), Fraction(1, 1))
    >>> str(LabelSet.k_flow(3))
    'list -2,-1,1,2'
    >>> LabelSet.nonzero_reals().contains(0)
    False
    """

    kind: LabelKind
    values: Tuple[Fraction, ...] = ()
    interval: Optional[IntervalSpec] = None

    @classmethod
    def finite(cls, values: Iterable[object]) -> "LabelSet":
        items = sorted({Fraction(v) for v in values})  # type: ignore[arg-type]
        if not items:
            raise PreconditionError("a finite label set needs at least one value")
        return cls("finite", tuple(items))

    @classmethod
    def of_interval(cls, interval: IntervalSpec) -> "LabelSet":
        return cls("interval", interval=interval)

    @classmethod
    def nonzero_reals(cls) -> "LabelSet":
        return cls.of_interval(IntervalSpec(None, None, punctured=True))

    @classmethod
    def nonzero_ints(cls) -> "LabelSet":
        return cls("nonzero-ints")

    @classmethod
    def k_flow(cls, k: int) -> "LabelSet":
        """
        ``{±1, …, ±(k−1)}``.
        """
        if k < 2:
            raise PreconditionError(f"k must be at least 2, got {k}")
        return cls.finite(s * i for i in range(1, k) for s in (-1, 1))

    def contains(self, value: object) -> bool:
        x = Fraction(value)  # type: ignore[arg-type]
        if self.kind == "finite":
            return x in self.values
        if self.kind == "nonzero-ints":
            return x != 0 and x.denominator == 1
        assert self.interval is not None
        return self.interval.contains(x)

    def __str__(self) -> str:
        if self.kind == "finite":
            return "list " + ",".join(str(v) for v in self.values)
        if self.kind == "nonzero-ints":
            return "nonzero-ints"
        assert self.interval is not None
        if self.interval == IntervalSpec(None, None, punctured=True):
            return "nonzero-reals"
        return str(self.interval)


def flow_violation(
    g: Graph,
    flow: Sequence[Fraction],
    target: GammaVector,
    label_set: Optional[LabelSet] = None,
) -> Optional[str]:
    """
    The first violated constraint, ``None`` when ``flow`` is a
    ``target``-flow with values in ``label_set``.

    >>> k2 = Graph(2, [(0, 1)])
    >>> flow_violation(k2, (Fraction(1),), (Fraction(1), Fraction(1)))
    >>> flow_violation(k2, (Fraction(2),), (Fraction(1), Fraction(1)))
    'vertex 0 sums to 2, expected 1'
    """
    if len(flow) != g.m:
        return f"flow has length {len(flow)}, expected {g.m}"
    if len(target) != g.n:
        return f"gamma has length {len(target)}, expected {g.n}"
    if label_set is not None:
        for e, value in enumerate(flow):
            if not label_set.contains(value):
                return f"edge {e} {g.edges[e]} has value {value} outside {label_set}"
    sums = incidence_matrix(g).apply(flow)
    for v, (got, expected) in enumerate(zip(sums, target)):
        if got != expected:
            return f"vertex {v} sums to {got}, expected {expected}"
    return None


@dataclass(frozen=True)
class FlowResult:
    """
    A verified ``target``-flow with values in ``label_set``.
    ``provenance`` names the construction that produced it.
    """

    flow: FlowAssignment
    label_set: LabelSet
    provenance: str
    target: GammaVector

    @classmethod
    def build(
        cls,
        g: Graph,
        flow: Sequence[object],
        label_set: LabelSet,
        provenance: str,
        target: GammaLike = 1,
    ) -> "FlowResult":
        """
        :raises ~sumflow.core.VerificationError: the flow does not verify.
        """
        values = tuple(Fraction(x) for x in flow)  # type: ignore[arg-type]
        gamma = as_gamma(g, target)
        violation = flow_violation(g, values, gamma, label_set)
        if violation is not None:
            raise VerificationError(provenance, violation)
        logger.debug("%s: verified flow on %d edges", provenance, g.m)
        return cls(values, label_set, provenance, gamma)

    def distinct_values(self) -> Tuple[Fraction, ...]:
        return tuple(sorted(set(self.flow)))


__all__ = (
    "BoundLike",
    "FlowResult",
    "IntervalSpec",
    "LabelKind",
    "LabelSet",
    "flow_violation",
)
