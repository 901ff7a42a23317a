"""
===============================================
:mod:`simplex` -- Exact two-phase simplex method
===============================================

Solves ``min cᵀx`` subject to ``Mx = r`` and ``x ≥ 0`` over
:class:`~fractions.Fraction` with Bland's rule.
An infeasible program comes back with a Farkas vector ``f``
(``fᵀM ≤ 0`` and ``fᵀr > 0``), an unbounded one with a recession ray.
"""
# Standard Library
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Set, Tuple

# Third Party Library
from typing_extensions import Literal

logger = logging.getLogger(__name__)

Status = Literal["optimal", "infeasible", "unbounded"]


@dataclass(frozen=True)
class LPResult:
    """
    Outcome of :func:`solve_standard_form`.

    ``x`` is a feasible point for ``"optimal"`` and ``"unbounded"``;
    ``ray`` satisfies ``Mray = 0``, ``ray ≥ 0`` and ``cᵀray < 0``.
    """

    status: Status
    x: Optional[Tuple[Fraction, ...]] = None
    value: Optional[Fraction] = None
    farkas: Optional[Tuple[Fraction, ...]] = None
    ray: Optional[Tuple[Fraction, ...]] = None
    pivots: int = 0


class SimplexTableau:
    """
    Dense tableau kept in canonical form with respect to ``basis``.
    Rows with a negative right-hand side are negated first, then every row
    gets either an existing unit column or a fresh artificial column.
    Columns from ``width`` on are artificial.
    """

    def __init__(
        self,
        matrix: Sequence[Sequence[Fraction]],
        rhs: Sequence[Fraction],
        width: int,
    ):
        self.width = width
        self.signs = [1 if r >= 0 else -1 for r in rhs]
        self.rows = [
            [s * Fraction(x) for x in row] for s, row in zip(self.signs, matrix)
        ]
        self.b = [s * Fraction(r) for s, r in zip(self.signs, rhs)]
        self.columns = width
        self.basis: List[int] = []
        used: Set[int] = set()
        for i in range(len(self.rows)):
            j = self._unit_column(i, used)
            if j is None:
                j = self.columns
                self.columns += 1
                for k, row in enumerate(self.rows):
                    row.append(Fraction(int(k == i)))
            used.add(j)
            self.basis.append(j)

        self.initial_basis = tuple(self.basis)
        self.cost = [Fraction(0)] * self.columns
        self.reduced = [Fraction(0)] * self.columns
        self.pivots = 0

    def _unit_column(self, i: int, used: Set[int]) -> Optional[int]:
        for j in range(self.width):
            if j in used or self.rows[i][j] != 1:
                continue
            if all(self.rows[k][j] == 0 for k in range(len(self.rows)) if k != i):
                return j
        return None

    @property
    def artificial_count(self) -> int:
        return self.columns - self.width

    def price(self, cost: Sequence[Fraction]) -> None:
        """
        Install ``cost`` (padded with zeros) and recompute reduced costs.
        """
        self.cost = list(cost) + [Fraction(0)] * (self.columns - len(cost))
        basic_cost = [self.cost[j] for j in self.basis]
        self.reduced = [
            self.cost[j]
            - sum((c * row[j] for c, row in zip(basic_cost, self.rows)), Fraction(0))
            for j in range(self.columns)
        ]

    def objective(self) -> Fraction:
        return sum((self.cost[j] * x for j, x in zip(self.basis, self.b)), Fraction(0))

    def pivot(self, r: int, j: int) -> None:
        lead = self.rows[r][j]
        self.rows[r] = [x / lead for x in self.rows[r]]
        self.b[r] /= lead
        pivot_row = self.rows[r]
        for k, row in enumerate(self.rows):
            factor = row[j]
            if k != r and factor != 0:
                self.rows[k] = [x - factor * y for x, y in zip(row, pivot_row)]
                self.b[k] -= factor * self.b[r]
        factor = self.reduced[j]
        if factor != 0:
            self.reduced = [x - factor * y for x, y in zip(self.reduced, pivot_row)]
        self.basis[r] = j
        self.pivots += 1

    def run(self, allowed: Callable[[int], bool]) -> Optional[int]:
        """
        Pivot until optimal.

        :returns: ``None`` at an optimum, otherwise the entering column \
            along which the objective is unbounded.
        """
        while True:
            entering = next(
                (
                    j
                    for j in range(self.columns)
                    if self.reduced[j] < 0 and allowed(j)
                ),
                None,
            )
            if entering is None:
                return None

            candidates = [
                (self.b[i] / row[entering], self.basis[i], i)
                for i, row in enumerate(self.rows)
                if row[entering] > 0
            ]
            if not candidates:
                return entering
            _, _, leaving = min(candidates)
            self.pivot(leaving, entering)

    def duals(self) -> Tuple[Fraction, ...]:
        """
        ``c_Bᵀ B⁻¹`` for the (row-negated) program, read off the initial
        basis columns, which started out as the identity.
        """
        return tuple(self.cost[j] - self.reduced[j] for j in self.initial_basis)

    def drive_out_artificials(self) -> None:
        """
        Replace artificial basic columns at level zero; rows where that is
        impossible are linear combinations of the others and get dropped.
        """
        i = 0
        while i < len(self.rows):
            if self.basis[i] < self.width:
                i += 1
                continue
            assert self.b[i] == 0, "artificial column left at a positive level"
            j = next((j for j in range(self.width) if self.rows[i][j] != 0), None)
            if j is None:
                logger.debug("dropping redundant row %d", i)
                del self.rows[i]
                del self.b[i]
                del self.basis[i]
                continue
            self.pivot(i, j)
            i += 1

    def solution(self) -> Tuple[Fraction, ...]:
        x = [Fraction(0)] * self.width
        for j, value in zip(self.basis, self.b):
            if j < self.width:
                x[j] = value
        return tuple(x)

    def ray(self, entering: int) -> Tuple[Fraction, ...]:
        direction = [Fraction(0)] * self.width
        direction[entering] = Fraction(1)
        for j, row in zip(self.basis, self.rows):
            if j < self.width:
                direction[j] = -row[entering]
        return tuple(direction)


def solve_standard_form(
    matrix: Sequence[Sequence[object]],
    rhs: Sequence[object],
    cost: Optional[Sequence[object]] = None,
    *,
    width: Optional[int] = None,
) -> LPResult:
    """
    Minimize ``cost · x`` subject to ``matrix @ x = rhs`` and ``x ≥ 0``.
    Without ``cost`` only feasibility is decided.

    >>> result = solve_standard_form([[1, 1]], [2], [1, 2])
    >>> result.status, result.x, result.value
    ('optimal', (Fraction(2, 1), Fraction(0, 1)), Fraction(2, 1))
    >>> solve_standard_form([[1, 1]], [-1]).farkas
    (Fraction(-1, 1),)
    >>> solve_standard_form([[1, -1]], [1], [-1, 0]).ray
    (Fraction(1, 1), Fraction(1, 1))

    :param width: column count, needed only when ``matrix`` has no rows
    :type width: Optional[int]
    """
    if width is None:
        if matrix:
            width = len(matrix[0])
        elif cost is not None:
            width = len(cost)
        else:
            width = 0
    rows = [[Fraction(x) for x in row] for row in matrix]  # type: ignore[arg-type]
    b = [Fraction(r) for r in rhs]  # type: ignore[arg-type]
    tableau = SimplexTableau(rows, b, width)

    if tableau.artificial_count:
        tableau.price([Fraction(0)] * width + [Fraction(1)] * tableau.artificial_count)
        tableau.run(lambda j: True)
        infeasibility = tableau.objective()
        logger.debug(
            "phase 1: %d rows, %d columns, residual %s after %d pivots",
            len(rows),
            width,
            infeasibility,
            tableau.pivots,
        )
        if infeasibility > 0:
            farkas = tuple(s * y for s, y in zip(tableau.signs, tableau.duals()))
            return LPResult("infeasible", farkas=farkas, pivots=tableau.pivots)
        tableau.drive_out_artificials()

    costs: List[Fraction] = []
    if cost is not None:
        costs = [Fraction(c) for c in cost]  # type: ignore[arg-type]
    tableau.price(costs + [Fraction(0)] * (width - len(costs)))
    entering = tableau.run(lambda j: j < width)
    x = tableau.solution()
    logger.debug("phase 2 finished after %d pivots", tableau.pivots)
    if entering is not None:
        return LPResult(
            "unbounded", x=x, ray=tableau.ray(entering), pivots=tableau.pivots
        )

    value = sum((c * v for c, v in zip(costs, x)), Fraction(0))
    return LPResult("optimal", x=x, value=value, pivots=tableau.pivots)


__all__ = ("LPResult", "SimplexTableau", "Status", "solve_standard_form")
