"""
Exact linear feasibility and optimization.

A :class:`LinearSystem` is a conjunction of equalities, non-strict and strict
inequalities over Q^n. Feasibility of systems with strict rows is decided by
maximizing a gap variable ``s`` (each strict row ``a.x < b`` becomes
``a.x + s <= b``, with ``0 <= s <= 1``): the strict system is feasible iff the
optimum gap is positive. The optimizer is a dense two-phase tableau simplex
over ``Fraction`` with Bland's rule, so it terminates and never rounds.
"""

from __future__ import annotations

import enum
import logging
import typing
from dataclasses import dataclass
from fractions import Fraction

from ..core.errors import DimensionMismatchError
from .linalg import Number, Vector, dot, vector, zero_vector

logger = logging.getLogger(__name__)


class Relation(str, enum.Enum):
    EQ = "=="
    LE = "<="
    LT = "<"


@dataclass(frozen=True)
class Constraint:
    """``functional . x  <relation>  bound``."""

    functional: Vector
    relation: Relation
    bound: Fraction

    def holds_at(self, point: typing.Sequence[Number]) -> bool:
        value = dot(self.functional, point)
        if self.relation is Relation.EQ:
            return value == self.bound
        if self.relation is Relation.LE:
            return value <= self.bound
        return value < self.bound


def eq(functional: typing.Iterable[Number], bound: Number) -> Constraint:
    return Constraint(vector(functional), Relation.EQ, Fraction(bound))


def le(functional: typing.Iterable[Number], bound: Number) -> Constraint:
    return Constraint(vector(functional), Relation.LE, Fraction(bound))


def lt(functional: typing.Iterable[Number], bound: Number) -> Constraint:
    return Constraint(vector(functional), Relation.LT, Fraction(bound))


def ge(functional: typing.Iterable[Number], bound: Number) -> Constraint:
    return Constraint(tuple(-Fraction(x) for x in functional), Relation.LE, -Fraction(bound))


def gt(functional: typing.Iterable[Number], bound: Number) -> Constraint:
    return Constraint(tuple(-Fraction(x) for x in functional), Relation.LT, -Fraction(bound))


@dataclass(frozen=True)
class LinearSystem:
    dimension: int
    constraints: typing.Tuple[Constraint, ...] = ()

    def __post_init__(self) -> None:
        for c in self.constraints:
            if len(c.functional) != self.dimension:
                raise DimensionMismatchError(
                    "Constraint does not match the ambient dimension", body=(len(c.functional), self.dimension)
                )

    @classmethod
    def of(cls, dimension: int, constraints: typing.Iterable[Constraint]) -> "LinearSystem":
        return cls(dimension=dimension, constraints=tuple(constraints))

    def extended(self, *constraints: Constraint) -> "LinearSystem":
        return LinearSystem(self.dimension, self.constraints + tuple(constraints))

    @property
    def has_strict(self) -> bool:
        return any(c.relation is Relation.LT for c in self.constraints)

    def satisfied_by(self, point: typing.Sequence[Number]) -> bool:
        return all(c.holds_at(point) for c in self.constraints)

    def closure(self) -> "LinearSystem":
        """Replace every strict row by its non-strict counterpart."""
        return LinearSystem(
            self.dimension,
            tuple(
                Constraint(c.functional, Relation.LE, c.bound) if c.relation is Relation.LT else c
                for c in self.constraints
            ),
        )

    def homogeneous(self) -> "LinearSystem":
        """The recession system: every bound set to zero, strict rows relaxed."""
        return LinearSystem(
            self.dimension,
            tuple(
                Constraint(c.functional, Relation.EQ if c.relation is Relation.EQ else Relation.LE, Fraction(0))
                for c in self.constraints
            ),
        )


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: typing.Optional[Vector] = None

    def __bool__(self) -> bool:
        return self.feasible


class LPStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    value: typing.Optional[Fraction] = None
    point: typing.Optional[Vector] = None


class _Tableau:
    """Equality-form tableau ``A y = b, y >= 0`` with ``b >= 0``."""

    def __init__(self, rows: typing.List[typing.List[Fraction]], rhs: typing.List[Fraction], basis: typing.List[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def pivot(self, r: int, c: int) -> None:
        inv = 1 / self.rows[r][c]
        self.rows[r] = [x * inv for x in self.rows[r]]
        self.rhs[r] *= inv
        for i in range(len(self.rows)):
            if i != r and self.rows[i][c] != 0:
                f = self.rows[i][c]
                self.rows[i] = [x - f * y for x, y in zip(self.rows[i], self.rows[r])]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def optimize(self, cost: typing.Sequence[Fraction], allowed: typing.Optional[typing.Set[int]] = None) -> LPStatus:
        """Maximize ``cost . y`` from the current basic feasible solution (Bland's rule)."""
        columns = range(self.width) if allowed is None else sorted(allowed)
        while True:
            entering = None
            for j in columns:
                if j in self.basis:
                    continue
                column = (cost[self.basis[i]] * self.rows[i][j] for i in range(len(self.rows)))
                reduced = sum(column, Fraction(0)) - cost[j]
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return LPStatus.OPTIMAL
            leaving = None
            best: typing.Optional[typing.Tuple[Fraction, int]] = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    key = (self.rhs[i] / row[entering], self.basis[i])
                    if best is None or key < best:
                        best, leaving = key, i
            if leaving is None:
                return LPStatus.UNBOUNDED
            self.pivot(leaving, entering)

    def value(self, cost: typing.Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * self.rhs[i] for i, b in enumerate(self.basis)), Fraction(0))

    def solution(self, width: int) -> typing.List[Fraction]:
        y = [Fraction(0)] * width
        for i, b in enumerate(self.basis):
            if b < width:
                y[b] = self.rhs[i]
        return y


def _solve_standard_form(
    rows: typing.List[typing.List[Fraction]], rhs: typing.List[Fraction], cost: typing.List[Fraction]
) -> typing.Tuple[LPStatus, typing.Optional[typing.List[Fraction]]]:
    """Two-phase simplex for ``max cost.y  s.t.  rows y = rhs, y >= 0``."""
    width = len(cost)
    rows = [list(r) for r in rows]
    rhs = list(rhs)
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    if not rows:
        if any(c > 0 for c in cost):
            return LPStatus.UNBOUNDED, None
        return LPStatus.OPTIMAL, [Fraction(0)] * width

    m = len(rows)
    tableau = _Tableau(
        rows=[r + [Fraction(1 if k == i else 0) for k in range(m)] for i, r in enumerate(rows)],
        rhs=rhs,
        basis=[width + i for i in range(m)],
    )
    phase_one_cost = [Fraction(0)] * width + [Fraction(-1)] * m
    tableau.optimize(phase_one_cost)
    if tableau.value(phase_one_cost) < 0:
        return LPStatus.INFEASIBLE, None

    # drive artificial columns out of the basis, dropping redundant rows
    i = 0
    while i < len(tableau.rows):
        if tableau.basis[i] >= width:
            c = next((j for j in range(width) if tableau.rows[i][j] != 0), None)
            if c is None:
                del tableau.rows[i]
                del tableau.rhs[i]
                del tableau.basis[i]
                continue
            tableau.pivot(i, c)
        i += 1
    tableau.rows = [r[:width] for r in tableau.rows]
    if not tableau.rows:
        if any(c > 0 for c in cost):
            return LPStatus.UNBOUNDED, None
        return LPStatus.OPTIMAL, [Fraction(0)] * width
    status = tableau.optimize(cost)
    if status is LPStatus.UNBOUNDED:
        return status, None
    return LPStatus.OPTIMAL, tableau.solution(width)


def maximize(system: LinearSystem, objective: typing.Sequence[Number], *, gap: bool = False) -> LPResult:
    """Maximize ``objective . x`` over the closure of ``system``.

    With ``gap=True`` an extra variable ``s`` in ``[0, 1]`` is appended and
    subtracted from the slack of every strict row; the objective then has
    ``dimension + 1`` entries, the last one weighting ``s``.
    """
    n = system.dimension
    extra = 1 if gap else 0
    if len(objective) != n + extra:
        raise DimensionMismatchError("Objective length mismatch", body=(len(objective), n + extra))
    inequality_rows = [c for c in system.constraints if c.relation is not Relation.EQ]
    slack_count = len(inequality_rows) + extra
    width = 2 * n + extra + slack_count

    rows: typing.List[typing.List[Fraction]] = []
    rhs: typing.List[Fraction] = []
    slack = 0
    for c in system.constraints:
        row = [Fraction(0)] * width
        for j, a in enumerate(c.functional):
            row[j] = a
            row[n + j] = -a
        if gap and c.relation is Relation.LT:
            row[2 * n] = Fraction(1)
        if c.relation is not Relation.EQ:
            row[2 * n + extra + slack] = Fraction(1)
            slack += 1
        rows.append(row)
        rhs.append(c.bound)
    if gap:
        row = [Fraction(0)] * width
        row[2 * n] = Fraction(1)
        row[2 * n + extra + slack] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))

    cost = [Fraction(0)] * width
    for j in range(n):
        cost[j] = Fraction(objective[j])
        cost[n + j] = -Fraction(objective[j])
    if gap:
        cost[2 * n] = Fraction(objective[n])

    status, y = _solve_standard_form(rows, rhs, cost)
    if status is not LPStatus.OPTIMAL or y is None:
        return LPResult(status=status)
    point = tuple(y[j] - y[n + j] for j in range(n)) + ((y[2 * n],) if gap else ())
    value = sum((Fraction(o) * p for o, p in zip(objective, point)), Fraction(0))
    return LPResult(status=LPStatus.OPTIMAL, value=value, point=point)


def feasible(system: LinearSystem) -> FeasibilityResult:
    """Decide feasibility exactly, returning a rational witness on success.

    The empty system is feasible with the origin as witness. For systems with
    strict rows the witness satisfies every strict row strictly.
    """
    n = system.dimension
    if not system.constraints:
        return FeasibilityResult(True, zero_vector(n))
    if not system.has_strict:
        result = maximize(system, [0] * n)
        if result.status is LPStatus.INFEASIBLE or result.point is None:
            return FeasibilityResult(False)
        return FeasibilityResult(True, result.point)
    result = maximize(system, [0] * n + [1], gap=True)
    if result.status is not LPStatus.OPTIMAL or result.point is None or result.point[n] <= 0:
        return FeasibilityResult(False)
    witness = result.point[:n]
    if not system.satisfied_by(witness):
        # the optimum vertex satisfies every strict row with gap s > 0
        logger.warning("Simplex witness failed verification; system=%s", system)
        return FeasibilityResult(False)
    return FeasibilityResult(True, witness)
