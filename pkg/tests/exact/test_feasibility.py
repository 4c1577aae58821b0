import random
from fractions import Fraction

import pytest

from quasitoric.exact.feasibility import LinearSystem, LPStatus, eq, feasible, ge, gt, le, lt, maximize
from quasitoric.exact.sampling import random_rational, random_vector


def test_empty_system_is_feasible_at_origin() -> None:
    result = feasible(LinearSystem.of(3, []))
    assert result.feasible
    assert result.witness == (0, 0, 0)


def test_maximize_box() -> None:
    system = LinearSystem.of(2, [le([1, 0], 2), le([0, 1], 3), ge([1, 0], 0), ge([0, 1], 0)])
    result = maximize(system, [1, 1])
    assert result.status is LPStatus.OPTIMAL
    assert result.value == 5
    assert result.point == (2, 3)


def test_maximize_unbounded_and_infeasible() -> None:
    assert maximize(LinearSystem.of(1, [ge([1], 0)]), [1]).status is LPStatus.UNBOUNDED
    assert maximize(LinearSystem.of(1, [ge([1], 1), le([1], 0)]), [1]).status is LPStatus.INFEASIBLE


def test_maximize_handles_negative_bounds() -> None:
    system = LinearSystem.of(1, [le([1], -2), ge([1], -5)])
    result = maximize(system, [-1])
    assert result.value == 5
    assert result.point == (-5,)


def test_strict_rows_need_interior() -> None:
    # 0 < x < 1 is feasible; 0 < x < 0 is not, although its closure is
    open_interval = LinearSystem.of(1, [gt([1], 0), lt([1], 1)])
    result = feasible(open_interval)
    assert result.feasible
    assert result.witness is not None
    assert 0 < result.witness[0] < 1

    degenerate = LinearSystem.of(1, [gt([1], 0), lt([1], 0)])
    assert not feasible(degenerate).feasible
    assert feasible(degenerate.closure()).feasible


def test_open_triangle_witness_is_interior() -> None:
    system = LinearSystem.of(2, [gt([1, 0], 0), gt([0, 1], 0), lt([1, 1], 1)])
    result = feasible(system)
    assert result.feasible
    assert result.witness is not None
    assert system.satisfied_by(result.witness)


def test_equalities_with_strict_rows() -> None:
    system = LinearSystem.of(2, [eq([1, -1], 0), gt([1, 0], Fraction(1, 2)), lt([0, 1], 1)])
    result = feasible(system)
    assert result.feasible
    assert result.witness is not None
    x, y = result.witness
    assert x == y
    assert Fraction(1, 2) < x < 1


def test_homogeneous_system_drops_bounds() -> None:
    system = LinearSystem.of(2, [gt([1, 0], 3), eq([0, 1], 2)])
    cone = system.homogeneous()
    assert all(c.bound == 0 for c in cone.constraints)
    assert not cone.has_strict


@pytest.mark.parametrize("seed", range(15))
def test_adding_constraints_never_restores_feasibility(seed: int) -> None:
    rng = random.Random(seed)
    kinds = [le, lt, ge, gt, eq]
    constraints = [rng.choice(kinds)(random_vector(rng, 2), random_rational(rng)) for _ in range(6)]
    verdicts = [feasible(LinearSystem.of(2, constraints[:k])).feasible for k in range(len(constraints) + 1)]
    assert verdicts[0]
    for before, after in zip(verdicts, verdicts[1:]):
        assert before or not after
    final = feasible(LinearSystem.of(2, constraints))
    if final.feasible:
        assert final.witness is not None
        assert all(c.holds_at(final.witness) for c in constraints)
