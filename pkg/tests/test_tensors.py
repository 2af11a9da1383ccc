"""Frames, vectors, multilinear forms, operators and exact linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rsthl.errors import (DegenerateMetric, InconsistentSystem,
                          ScalarDomainError, UnderdeterminedSystem)
from rsthl.scalars import MU, ONE, ZERO, rf
from rsthl.tensors import (Covector, Frame, LinearOperator, MultilinearForm,
                           Vector, determinant, inertia, matrix_inverse,
                           pick_regular_sample, solve_affine, solve_unique)

F3 = Frame(("e1", "e2", "e3"))


def test_frame_validation():
    with pytest.raises(ValueError):
        Frame(())
    with pytest.raises(ValueError):
        Frame(("a", "a"))
    assert F3.dimension == 3
    assert F3.index("e2") == 1
    with pytest.raises(KeyError):
        F3.index("e9")
    assert F3.basis_vector(0).components == (ONE, ZERO, ZERO)


def test_vector_arithmetic():
    v = Vector.from_map(F3, {"e1": 2, "e3": MU})
    w = Vector.from_map(F3, {"e1": -2})
    assert (v + w).components == (ZERO, ZERO, MU)
    assert (v - v).is_zero()
    assert (-v).components == (rf(-2), ZERO, -MU)
    assert v.scale(MU).components == (2 * MU, ZERO, MU * MU)
    assert Vector.zero(F3).is_zero()


def test_covector_applies_to_vectors():
    eta = Covector.from_map(F3, {"e2": 1, "e3": MU})
    v = Vector.from_map(F3, {"e2": 3, "e3": 1})
    assert eta(v) == 3 + MU
    assert not eta.is_zero()
    assert eta.scale(2)(v) == 6 + 2 * MU


def test_form_entry_value_and_symmetry():
    g = MultilinearForm.from_function(
        F3, 2, lambda i, j: MU if i == j == 0 else (ONE if i == j else ZERO))
    assert g.entry(0, 0) == MU
    assert g.is_symmetric()
    v = Vector.from_map(F3, {"e1": 1, "e2": 2})
    w = Vector.from_map(F3, {"e1": 1, "e2": -1})
    # bilinearity over the field: g(v, w) = mu*1 + 2*(-1)
    assert g.value(v, w) == MU - 2
    skew = MultilinearForm.from_function(
        F3, 2, lambda i, j: rf(1) if (i, j) == (0, 1) else ZERO)
    assert not skew.is_symmetric()


def test_form_algebra_and_pull_slots():
    g = MultilinearForm.from_function(
        F3, 2, lambda i, j: ONE if i == j else ZERO)
    # op maps e1 -> e2, e2 -> -e1, e3 -> 0
    op = LinearOperator.from_columns(F3, (
        Vector.from_map(F3, {"e2": 1}),
        Vector.from_map(F3, {"e1": -1}),
        Vector.zero(F3)))
    pulled = g.pull_slots(op, (1,))
    assert pulled.entry(0, 1) == rf(-1)
    assert pulled.entry(1, 0) == ONE
    assert pulled.entry(2, 2) == ZERO
    both = g.pull_all(op)
    assert both.entry(0, 0) == ONE
    assert both.entry(2, 2) == ZERO
    assert (g - g).is_zero()
    assert (g + g).entry(1, 1) == rf(2)
    assert g.scale(MU).entry(2, 2) == MU


def test_operator_matrix_convention():
    # matrix[i][j] is the e_i coefficient of op(e_j)
    op = LinearOperator.from_columns(F3, (
        Vector.from_map(F3, {"e2": 1}),
        Vector.from_map(F3, {"e1": -1}),
        Vector.zero(F3)))
    assert op.matrix[1][0] == ONE
    assert op.matrix[0][1] == rf(-1)
    assert op.column(0).components == (ZERO, ONE, ZERO)
    v = Vector.from_map(F3, {"e1": 1, "e2": 1})
    assert op.apply(v).components == (rf(-1), ONE, ZERO)
    sq = op.compose(op)
    assert sq.apply(Vector.from_map(F3, {"e1": 1})).components == (rf(-1), ZERO, ZERO)
    assert op.trace() == ZERO
    assert op.rank() == 2
    assert LinearOperator.identity(F3).rank() == 3
    assert LinearOperator.zero(F3).is_zero()
    eta = Covector.from_map(F3, {"e3": 1})
    out = LinearOperator.outer(Vector.from_map(F3, {"e1": 1}), eta)
    assert out.apply(Vector.from_map(F3, {"e3": 2})).components == (rf(2), ZERO, ZERO)
    assert (op - op).is_zero()
    assert (op + (-op)).is_zero()


def test_determinant_exact():
    rows = [[MU, ONE], [ONE, MU]]
    assert determinant(rows) == MU * MU - 1
    assert determinant([[ZERO, ONE], [ZERO, MU]]) == ZERO
    rows3 = [[rf(2), ZERO, ZERO], [ZERO, MU, ZERO], [ZERO, ZERO, rf(-1)]]
    assert determinant(rows3) == -2 * MU


def test_solve_unique():
    a = [[ONE, ONE], [ONE, -ONE]]
    x, y = solve_unique(a, [MU, ONE])
    assert x == (MU + 1) / 2
    assert y == (MU - 1) / 2
    with pytest.raises(InconsistentSystem):
        solve_unique([[ONE, ONE], [ONE, ONE]], [ZERO, ONE])
    with pytest.raises(UnderdeterminedSystem):
        solve_unique([[ONE, ONE], [2 * ONE, 2 * ONE]], [ONE, rf(2)])


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_solve_affine_parametrizes_solutions(s, t):
    a = [[ONE, ONE, ZERO], [ZERO, ZERO, ONE]]
    b = [rf(1), rf(2)]
    particular, kernel = solve_affine(a, b)
    assert len(kernel) == 1
    x = [p + rf(s) * k for p, k in zip(particular, kernel[0])]
    for row, rhs in zip(a, b):
        assert sum((c * v for c, v in zip(row, x)), ZERO) == rhs
    with pytest.raises(InconsistentSystem):
        solve_affine([[ONE], [ONE]], [ONE, rf(t)] if t != 1 else [ONE, ZERO])


def test_matrix_inverse():
    inv = matrix_inverse([[MU, ONE], [ZERO, ONE]])
    assert inv[0][0] == ONE / MU
    assert inv[0][1] == -(ONE / MU)
    assert inv[1][0] == ZERO
    assert inv[1][1] == ONE
    with pytest.raises(DegenerateMetric):
        matrix_inverse([[ONE, ONE], [ONE, ONE]])


def test_inertia_signature():
    assert inertia([[1, 0], [0, -1]]) == (1, 1, 0)
    diag = [[Fraction(d) if i == j else Fraction(0) for j in range(5)]
            for i, d in enumerate((1, 1, -1, -1, 1))]
    assert inertia(diag) == (3, 2, 0)
    assert inertia([[0, 0], [0, 0]]) == (0, 0, 2)
    # hyperbolic plane: zero diagonal, nonzero pairing
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)


def test_pick_regular_sample():
    assert pick_regular_sample([MU - 1, MU - 2]) == Fraction(3)
    assert pick_regular_sample([ONE / (MU - 1)]) == Fraction(2)
    assert pick_regular_sample([MU], start=5) == Fraction(5)
    with pytest.raises(ScalarDomainError):
        (ONE / (MU - 1)).eval_at(1)
