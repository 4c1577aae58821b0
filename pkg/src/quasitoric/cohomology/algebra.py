"""
The Macaulay algebra ``Diff / Ann(Vol)`` of a homogeneous polynomial.

In degree ``d`` the evaluation map sends each operator monomial ``d^k`` with
``|k| = d`` to ``d^k Vol``; its kernel is ``Ann_d`` and its rank is
``dim A_d``. The monomials at the pivot columns of the reduced evaluation
matrix serve as the basis of ``A_d``. The top class is fixed by
``eps(D) = D Vol`` for operators of degree ``n``.
"""

from __future__ import annotations

import logging
import typing
from dataclasses import dataclass
from fractions import Fraction

from ..complexes.types import ValidationReport
from ..core.errors import DimensionMismatchError, NonHomogeneousError, ValidationFailedError
from ..exact.linalg import Matrix, SolveStatus, Vector, kernel, rank, row_reduce, solve
from ..exact.polynomial import Exponent, MultiPoly, monomial_label, monomials_of_degree
from .operators import apply, operator_monomial, operator_variables

logger = logging.getLogger(__name__)


def _evaluation_matrix(vol: MultiPoly, degree: int) -> typing.Tuple[typing.List[Exponent], Matrix]:
    """Columns: the coefficients of ``d^k Vol`` over the monomials of degree ``n - degree``."""
    m, n = vol.nvars, vol.degree
    sources = monomials_of_degree(m, degree)
    targets = monomials_of_degree(m, n - degree) if degree <= n else []
    images = [vol.partial(k) for k in sources]
    rows = [[image.coefficient(t) for image in images] for t in targets]
    return sources, Matrix.from_rows(rows, ncols=len(sources))


def _normalized(v: Vector) -> Vector:
    lead = next(x for x in v if x != 0)
    return tuple(x / lead for x in v)


@dataclass(frozen=True)
class Annihilator:
    degree: int
    dimension: int
    quotient_dimension: int
    basis: typing.Tuple[MultiPoly, ...]


def annihilator_dimension(vol: MultiPoly, degree: int) -> Annihilator:
    """``Ann_d`` with an exact basis (each element scaled to lead with coefficient 1) and ``dim A_d``."""
    if degree < 0:
        raise DimensionMismatchError("Degree must be nonnegative", body=degree)
    sources, matrix = _evaluation_matrix(vol, degree)
    names = operator_variables(vol.nvars)
    null = [_normalized(v) for v in kernel(matrix)]
    basis = tuple(MultiPoly(names, dict(zip(sources, v))) for v in null)
    return Annihilator(
        degree=degree, dimension=len(basis), quotient_dimension=len(sources) - len(basis), basis=basis
    )


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    monomials: typing.Tuple[Exponent, ...]
    basis: typing.Tuple[Exponent, ...]
    evaluation: Matrix

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class GradedAlgebra:
    """``A = Diff / Ann(Vol)``, graded in degrees ``0..n``; classes are coordinate vectors in each piece's basis."""

    vol: MultiPoly
    pieces: typing.Tuple[GradedPiece, ...]

    @property
    def top_degree(self) -> int:
        return len(self.pieces) - 1

    @property
    def generators(self) -> int:
        return self.vol.nvars

    @property
    def dims(self) -> typing.Tuple[int, ...]:
        return tuple(p.dimension for p in self.pieces)

    def piece(self, degree: int) -> GradedPiece:
        if degree < 0 or degree > self.top_degree:
            raise DimensionMismatchError("Degree outside 0..n", body=degree)
        return self.pieces[degree]

    def basis_operators(self, degree: int) -> typing.List[MultiPoly]:
        return [operator_monomial(k) for k in self.piece(degree).basis]

    def basis_labels(self, degree: int) -> typing.List[str]:
        names = operator_variables(self.generators)
        return [monomial_label(k, names) for k in self.piece(degree).basis]

    def _degree_of(self, op: MultiPoly) -> int:
        if op.nvars != self.generators:
            raise DimensionMismatchError("Operator has the wrong variable count", body=(op.nvars, self.generators))
        if not op.is_homogeneous():
            raise NonHomogeneousError("Classes are defined for homogeneous operators", body=str(op))
        return max(op.degree, 0)

    def class_of(self, op: MultiPoly) -> typing.Tuple[int, Vector]:
        """Degree and coordinates of the class of a homogeneous operator (zero beyond degree ``n``)."""
        degree = self._degree_of(op)
        if degree > self.top_degree:
            return degree, ()
        piece = self.pieces[degree]
        if piece.dimension == 0:
            return degree, ()
        image = apply(op, self.vol)
        targets = monomials_of_degree(self.generators, self.top_degree - degree)
        columns = [piece.evaluation.column(piece.monomials.index(k)) for k in piece.basis]
        result = solve(Matrix.from_columns(columns, nrows=len(targets)), [image.coefficient(t) for t in targets])
        assert result.status is SolveStatus.UNIQUE and result.particular is not None
        return degree, result.particular

    def reduce(self, op: MultiPoly) -> MultiPoly:
        """The canonical representative of the class of ``op``: a combination of basis monomials."""
        degree, coordinates = self.class_of(op)
        names = operator_variables(self.generators)
        if not coordinates:
            return MultiPoly.zero(names)
        return MultiPoly(names, dict(zip(self.piece(degree).basis, coordinates)))

    def multiply(self, a: MultiPoly, b: MultiPoly) -> MultiPoly:
        return self.reduce(self.reduce(a) * self.reduce(b))

    def is_zero_class(self, op: MultiPoly) -> bool:
        return self.reduce(op).is_zero()

    def epsilon(self, op: MultiPoly) -> Fraction:
        """``eps(D) = D Vol`` for an operator of degree ``n``."""
        if self._degree_of(op) != self.top_degree and not op.is_zero():
            raise DimensionMismatchError("The top functional needs an operator of degree n", body=op.degree)
        return apply(op, self.vol).coefficient((0,) * self.generators)

    def pairing_matrix(self, degree: int) -> Matrix:
        """``[eps(b_i c_j)]`` over the bases of ``A_degree`` and ``A_(n - degree)``."""
        left = self.basis_operators(degree)
        right = self.basis_operators(self.top_degree - degree)
        return Matrix.from_rows([[self.epsilon(b * c) for c in right] for b in left], ncols=len(right))


def macaulay_algebra(vol: MultiPoly) -> GradedAlgebra:
    """
    Raises:
        ValidationFailedError: if ``vol`` is zero.
        NonHomogeneousError: if ``vol`` is not homogeneous.
    """
    if vol.is_zero():
        raise ValidationFailedError("The Macaulay algebra of the zero polynomial is trivial")
    if not vol.is_homogeneous():
        raise NonHomogeneousError("Volume polynomial must be homogeneous", body=str(vol))
    pieces = []
    for degree in range(vol.degree + 1):
        sources, matrix = _evaluation_matrix(vol, degree)
        _, pivots = row_reduce(matrix.rows, matrix.ncols)
        basis = tuple(sources[j] for j in pivots)
        pieces.append(GradedPiece(degree=degree, monomials=tuple(sources), basis=basis, evaluation=matrix))
    algebra = GradedAlgebra(vol=vol, pieces=tuple(pieces))
    logger.debug("Macaulay algebra of degree %d: dims %s", algebra.top_degree, algebra.dims)
    return algebra


def betti(algebra: GradedAlgebra) -> typing.Tuple[int, ...]:
    """``(b_0, b_2, ..., b_2n)``; odd Betti numbers vanish."""
    return algebra.dims


def poincare_check(algebra: GradedAlgebra) -> ValidationReport:
    """Symmetry of the dimensions, nondegeneracy of every pairing, and nonvanishing of the generators."""
    problems = []
    n = algebra.top_degree
    dims = algebra.dims
    if dims[0] != 1 or dims[n] != 1:
        problems.append(f"extreme degrees have dimensions {dims[0]} and {dims[n]}, expected 1")
    for d in range(n + 1):
        if dims[d] != dims[n - d]:
            problems.append(f"dim A_{d} = {dims[d]} differs from dim A_{n - d} = {dims[n - d]}")
            continue
        pairing = algebra.pairing_matrix(d)
        if rank(pairing) != dims[d]:
            problems.append(f"pairing A_{d} x A_{n - d} is degenerate (rank {rank(pairing)} < {dims[d]})")
    if n > 0:
        for i in range(algebra.generators):
            generator = operator_monomial(tuple(1 if j == i else 0 for j in range(algebra.generators)))
            if algebra.is_zero_class(generator):
                problems.append(f"generator d{i + 1} has zero class")
    return ValidationReport(subject="Poincare duality", problems=problems)
