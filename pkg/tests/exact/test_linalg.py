import random
from fractions import Fraction

import pytest

from quasitoric.core.errors import DimensionMismatchError, SingularMatrixError
from quasitoric.exact.linalg import (
    Matrix,
    SolveStatus,
    coordinates,
    det,
    det_of,
    inverse,
    kernel,
    orthogonal_complement,
    rank_of,
    row_reduce,
    solve,
    solve_unique,
    span_basis,
)
from quasitoric.exact.sampling import random_vector


def test_det_matches_cofactor_expansion() -> None:
    m = Matrix.from_rows([[2, 0, 1], [1, 3, 2], [1, 1, 1]])
    # 2*(3-2) - 0 + 1*(1-3)
    assert det(m) == 0
    assert det_of([[1, 2], [3, 4]]) == -2
    assert det_of([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)


def test_det_swaps_rows_for_zero_pivot() -> None:
    assert det_of([[0, 1], [1, 0]]) == -1
    assert det_of([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def test_det_of_empty_matrix_is_one() -> None:
    assert det(Matrix.from_rows([], ncols=0)) == 1


def test_det_rejects_non_square() -> None:
    with pytest.raises(DimensionMismatchError):
        det(Matrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_solve_unique() -> None:
    result = solve(Matrix.from_rows([[1, 1], [1, -1]]), [3, 1])
    assert result.status is SolveStatus.UNIQUE
    assert result.particular == (2, 1)
    assert result.kernel == ()


def test_solve_underdetermined_returns_kernel() -> None:
    a = Matrix.from_rows([[1, 1, 0]])
    result = solve(a, [2])
    assert result.status is SolveStatus.UNDERDETERMINED
    assert result.particular is not None
    assert a.apply(result.particular) == (2,)
    assert len(result.kernel) == 2
    for v in result.kernel:
        assert a.apply(v) == (0,)


def test_solve_inconsistent_has_certificate() -> None:
    a = Matrix.from_rows([[1, 1], [2, 2]])
    b = [1, 3]
    result = solve(a, b)
    assert result.status is SolveStatus.INCONSISTENT
    assert not result.consistent
    y = result.certificate
    assert y is not None
    assert all(sum(y[i] * a.rows[i][j] for i in range(2)) == 0 for j in range(2))
    assert sum(y[i] * b[i] for i in range(2)) != 0


def test_solve_unique_raises_on_singular() -> None:
    with pytest.raises(SingularMatrixError):
        solve_unique(Matrix.from_rows([[1, 2], [2, 4]]), [1, 2])


def test_inverse() -> None:
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert inverse(m) == Matrix.from_rows([[1, -1], [-1, 2]])
    assert m @ inverse(m) == Matrix.identity(2)
    with pytest.raises(SingularMatrixError):
        inverse(Matrix.from_rows([[1, 1], [1, 1]]))


def test_kernel_and_rank() -> None:
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
    basis = kernel(m)
    assert len(basis) == 2
    assert all(m.apply(v) == (0, 0) for v in basis)
    assert rank_of([[1, 2, 3], [2, 4, 6]]) == 1
    assert rank_of([]) == 0


def test_orthogonal_complement_and_span() -> None:
    assert orthogonal_complement([], 2) == [(1, 0), (0, 1)]
    complement = orthogonal_complement([(Fraction(1), Fraction(1))], 2)
    assert complement == [(-1, 1)]
    assert span_basis([(Fraction(2), Fraction(2)), (Fraction(1), Fraction(1))], 2) == [(1, 1)]


def test_coordinates_in_a_basis() -> None:
    basis = [(Fraction(1), Fraction(1)), (Fraction(1), Fraction(-1))]
    assert coordinates(basis, [3, 1]) == (2, 1)


def test_row_reduce_is_reduced_echelon_form() -> None:
    reduced, pivots = row_reduce([[2, 4, 2], [1, 3, 0], [3, 7, 2]], 3)
    assert pivots == [0, 1]
    assert reduced == [[1, 0, 3], [0, 1, -1], [0, 0, 0]]
    assert all(isinstance(x, Fraction) for row in reduced for x in row)


def test_det_and_inverse_return_fractions() -> None:
    assert isinstance(det_of([[1, 2], [3, 4]]), Fraction)
    assert all(isinstance(x, Fraction) for row in inverse(Matrix.from_rows([[2, 1], [1, 1]])).rows for x in row)
    assert inverse(Matrix.from_rows([[Fraction(1, 2), 0], [0, 4]])) == Matrix.from_rows([[2, 0], [0, Fraction(1, 4)]])


@pytest.mark.parametrize("seed", range(10))
def test_det_vanishes_with_a_repeated_row(seed: int) -> None:
    rng = random.Random(seed)
    rows = [list(random_vector(rng, 3)) for _ in range(2)]
    assert det_of([rows[0], rows[1], rows[0]]) == 0
    assert det_of([rows[1], rows[1], rows[0]]) == 0


@pytest.mark.parametrize("seed", range(20))
def test_det_is_multiplicative(seed: int) -> None:
    rng = random.Random(seed)
    a = Matrix.from_rows([random_vector(rng, 2) for _ in range(2)])
    b = Matrix.from_rows([random_vector(rng, 2) for _ in range(2)])
    assert det(a @ b) == det(a) * det(b)


def test_solve_inconsistent_certificate_on_a_wide_system() -> None:
    a = Matrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 2]])
    b = [1, 1, 3]
    result = solve(a, b)
    assert result.status is SolveStatus.INCONSISTENT
    y = result.certificate
    assert y is not None
    assert all(sum(y[i] * a.rows[i][j] for i in range(3)) == 0 for j in range(3))
    assert sum(y[i] * b[i] for i in range(3)) != 0
