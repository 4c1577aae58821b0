"""
Linear algebra over the rationals.

Vectors are tuples of ``Fraction``; matrices are immutable row tuples. The
elimination itself (determinants, reduced row echelon forms, ranks and
inverses) runs on sympy's ``DomainMatrix`` over ``QQ``; values cross back to
``Fraction`` at the boundary of every routine.
"""

from __future__ import annotations

import enum
import typing
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..core.errors import DimensionMismatchError, SingularMatrixError

Vector = typing.Tuple[Fraction, ...]
Number = typing.Union[Fraction, int]


def vector(values: typing.Iterable[Number]) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return tuple(Fraction(0) for _ in range(n))


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def _check_same_length(a: typing.Sequence[typing.Any], b: typing.Sequence[typing.Any]) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError("Vector lengths differ", body=(len(a), len(b)))


def dot(a: typing.Sequence[Number], b: typing.Sequence[Number]) -> Fraction:
    _check_same_length(a, b)
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def add(a: Vector, b: Vector) -> Vector:
    _check_same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vector, b: Vector) -> Vector:
    _check_same_length(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(c: Number, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def is_zero(a: typing.Sequence[Number]) -> bool:
    return all(x == 0 for x in a)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix stored by rows."""

    rows: typing.Tuple[Vector, ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: typing.Iterable[typing.Iterable[Number]], ncols: typing.Optional[int] = None) -> "Matrix":
        materialized = tuple(vector(r) for r in rows)
        if ncols is None:
            if not materialized:
                raise DimensionMismatchError("Cannot infer the column count of an empty matrix")
            ncols = len(materialized[0])
        for r in materialized:
            if len(r) != ncols:
                raise DimensionMismatchError("Ragged matrix rows", body=[len(x) for x in materialized])
        return cls(rows=materialized, ncols=ncols)

    @classmethod
    def from_columns(cls, columns: typing.Sequence[typing.Sequence[Number]], nrows: int) -> "Matrix":
        if not columns:
            return cls(rows=tuple(() for _ in range(nrows)), ncols=0)
        return cls.from_rows(zip(*columns), ncols=len(columns))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(rows=tuple(unit_vector(n, i) for i in range(n)), ncols=n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def apply(self, v: typing.Sequence[Number]) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatchError("Matrix-vector shape mismatch", body=(self.nrows, self.ncols, len(v)))
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError("Matrix product shape mismatch", body=(self.ncols, other.nrows))
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix(rows=tuple(tuple(dot(r, c) for c in cols) for r in self.rows), ncols=other.ncols)


def _to_domain(rows: typing.Sequence[typing.Sequence[Number]], ncols: int) -> DomainMatrix:
    elements = []
    for r in rows:
        values = [Fraction(x) for x in r]
        elements.append([QQ(x.numerator, x.denominator) for x in values])
    return DomainMatrix(elements, (len(elements), ncols), QQ)


def _to_fraction(x: typing.Any) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _from_domain(m: DomainMatrix) -> typing.List[typing.List[Fraction]]:
    return [[_to_fraction(x) for x in r] for r in m.to_list()]


def det(m: Matrix) -> Fraction:
    """Exact determinant.

    Raises:
        DimensionMismatchError: if ``m`` is not square.
    """
    if not m.is_square:
        raise DimensionMismatchError("Determinant of a non-square matrix", body=(m.nrows, m.ncols))
    if m.nrows == 0:
        return Fraction(1)
    return _to_fraction(_to_domain(m.rows, m.ncols).det())


def det_of(vectors: typing.Sequence[typing.Sequence[Number]]) -> Fraction:
    """Determinant of the matrix whose rows are ``vectors``."""
    return det(Matrix.from_rows(vectors, ncols=len(vectors)))


def row_reduce(
    rows: typing.Sequence[typing.Sequence[Number]], ncols: int
) -> typing.Tuple[typing.List[typing.List[Fraction]], typing.List[int]]:
    """Reduced row echelon form.

    Returns:
        The reduced rows (zero rows last) and the list of pivot columns.
    """
    if not rows or ncols == 0:
        return [[Fraction(x) for x in r] for r in rows], []
    reduced, pivots = _to_domain(rows, ncols).rref()
    return _from_domain(reduced), list(pivots)


def rank(m: Matrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return int(_to_domain(m.rows, m.ncols).rank())


def rank_of(vectors: typing.Sequence[typing.Sequence[Number]]) -> int:
    if not vectors:
        return 0
    return rank(Matrix.from_rows(vectors))


def _kernel_from_rref(
    reduced: typing.Sequence[typing.Sequence[Fraction]], pivots: typing.Sequence[int], ncols: int
) -> typing.List[Vector]:
    basis: typing.List[Vector] = []
    for f in (j for j in range(ncols) if j not in pivots):
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row_index, p in enumerate(pivots):
            x[p] = -reduced[row_index][f]
        basis.append(tuple(x))
    return basis


def kernel(m: Matrix) -> typing.List[Vector]:
    """Basis of ``{x : m x = 0}``, one vector per free column, free entry 1."""
    if m.nrows == 0:
        return [unit_vector(m.ncols, j) for j in range(m.ncols)]
    reduced, pivots = row_reduce(m.rows, m.ncols)
    return _kernel_from_rref(reduced, pivots, m.ncols)


def orthogonal_complement(vectors: typing.Sequence[Vector], n: int) -> typing.List[Vector]:
    """Basis of the vectors orthogonal (standard inner product) to all of ``vectors``."""
    return kernel(Matrix.from_rows(vectors, ncols=n)) if vectors else [unit_vector(n, i) for i in range(n)]


def span_basis(vectors: typing.Sequence[Vector], n: int) -> typing.List[Vector]:
    """Row-reduced basis of the span of ``vectors``."""
    if not vectors:
        return []
    reduced, pivots = row_reduce(vectors, n)
    return [tuple(reduced[i]) for i in range(len(pivots))]


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise DimensionMismatchError("Inverse of a non-square matrix", body=(m.nrows, m.ncols))
    if m.nrows == 0:
        return m
    try:
        inv = _to_domain(m.rows, m.ncols).inv()
    except DMNonInvertibleMatrixError as e:
        raise SingularMatrixError("Matrix is singular") from e
    return Matrix.from_rows(_from_domain(inv), ncols=m.ncols)


class SolveStatus(str, enum.Enum):
    UNIQUE = "unique"
    UNDERDETERMINED = "underdetermined"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`solve`.

    ``particular`` and ``kernel`` parametrize the solution set when it is
    nonempty; ``certificate`` is a row combination ``y`` with ``y A = 0`` and
    ``y b != 0`` when it is empty.
    """

    status: SolveStatus
    particular: typing.Optional[Vector] = None
    kernel: typing.Tuple[Vector, ...] = ()
    certificate: typing.Optional[Vector] = None

    @property
    def consistent(self) -> bool:
        return self.status is not SolveStatus.INCONSISTENT


def solve(a: Matrix, b: typing.Sequence[Number]) -> LinearSolution:
    """Solve ``a x = b`` exactly.

    Raises:
        DimensionMismatchError: if ``b`` does not have one entry per row of ``a``.
    """
    if len(b) != a.nrows:
        raise DimensionMismatchError("Right-hand side length differs from row count", body=(a.nrows, len(b)))
    n, m = a.ncols, a.nrows
    rhs = vector(b)
    if m == 0:
        free = kernel(a)
        status = SolveStatus.UNIQUE if not free else SolveStatus.UNDERDETERMINED
        return LinearSolution(status=status, particular=zero_vector(n), kernel=tuple(free))
    reduced, pivots = row_reduce([list(r) + [rhs[i]] for i, r in enumerate(a.rows)], n + 1)
    if n in pivots:
        left_kernel = kernel(Matrix.from_rows([a.column(j) for j in range(n)], ncols=m))
        certificate = next(y for y in left_kernel if dot(y, rhs) != 0)
        return LinearSolution(status=SolveStatus.INCONSISTENT, certificate=certificate)
    x = [Fraction(0)] * n
    for row_index, p in enumerate(pivots):
        x[p] = reduced[row_index][n]
    null_space = _kernel_from_rref(reduced, pivots, n)
    status = SolveStatus.UNIQUE if not null_space else SolveStatus.UNDERDETERMINED
    return LinearSolution(status=status, particular=tuple(x), kernel=tuple(null_space))


def solve_unique(a: Matrix, b: typing.Sequence[Number]) -> Vector:
    """Solve a square nonsingular system, raising if the solution is not unique."""
    result = solve(a, b)
    if result.status is not SolveStatus.UNIQUE or result.particular is None:
        raise SingularMatrixError("System has no unique solution", body=result.status.value)
    return result.particular


def coordinates(basis: typing.Sequence[Vector], v: typing.Sequence[Number]) -> Vector:
    """Coordinates of ``v`` in a basis of R^n given as vectors (the columns of the change of basis)."""
    n = len(v)
    return solve_unique(Matrix.from_columns(basis, nrows=n), v)


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)
