"""Lie algebras, invariant metrics, the Koszul connection and curvature."""

import pytest

from rsthl.builtin import (EXPECTED_FACTOR_TABLE, FACTOR_LABELS,
                           factor_algebra, factor_signature_entry)
from rsthl.errors import DegenerateMetric
from rsthl.liegeom import (Connection, CurvatureTensor, InvariantMetric,
                           LieAlgebra, curvature, direct_sum,
                           first_bianchi_violation, levi_civita,
                           lowered_symmetry_violation, validate_lie_algebra)
from rsthl.scalars import MU, ONE, ZERO, rf
from rsthl.tensors import Frame, MultilinearForm, Vector

F3 = Frame(("e1", "e2", "e3"))


def heisenberg():
    return LieAlgebra.from_table(F3, {("e1", "e2"): {"e3": 1}})


def test_from_table_antisymmetrizes():
    alg = heisenberg()
    e3 = F3.basis_vector(2)
    assert alg.bracket_basis(0, 1) == e3
    assert alg.bracket_basis(1, 0) == -e3
    assert alg.bracket_basis(0, 0).is_zero()
    # either key order is accepted
    alg2 = LieAlgebra.from_table(F3, {("e2", "e1"): {"e3": -1}})
    assert alg2.brackets == alg.brackets
    with pytest.raises(ValueError):
        LieAlgebra.from_table(F3, {("e1", "e1"): {"e3": 1}})


def test_bracket_bilinearity():
    alg = heisenberg()
    v = Vector.from_map(F3, {"e1": MU})
    w = Vector.from_map(F3, {"e2": 2})
    assert alg.bracket(v, w) == Vector.from_map(F3, {"e3": 2 * MU})
    assert alg.bracket(w, v) == Vector.from_map(F3, {"e3": -2 * MU})


def test_validate_accepts_heisenberg_and_abelian():
    assert validate_lie_algebra(heisenberg()).status == "pass"
    assert validate_lie_algebra(LieAlgebra.abelian(F3)).status == "pass"


def test_validate_names_jacobi_violation():
    # [e1,e2] = e3 and [e1,e3] = e1 break Jacobi:
    # [[e3,e1],e2] = -e3 while the other two cyclic terms vanish.
    bad = LieAlgebra.from_table(
        F3, {("e1", "e2"): {"e3": 1}, ("e1", "e3"): {"e1": 1}})
    entry = validate_lie_algebra(bad)
    assert entry.status == "fail"
    assert entry.detail == "Jacobi fails at (e1, e2, e3)"


def test_validate_names_antisymmetry_violation():
    zero = Vector.zero(F3)
    e3 = F3.basis_vector(2)
    rows = ((zero, e3, zero), (zero, zero, zero), (zero, zero, zero))
    entry = validate_lie_algebra(LieAlgebra(F3, rows))
    assert entry.status == "fail"
    assert entry.detail == "antisymmetry fails at (e1, e2)"


def test_invariant_metric_validation():
    with pytest.raises(ValueError):
        InvariantMetric(MultilinearForm.from_function(
            F3, 2, lambda i, j: ONE if (i, j) == (0, 1) else ZERO))
    with pytest.raises(DegenerateMetric) as err:
        InvariantMetric.diagonal(F3, (1, 1, 0))
    assert "e1" in str(err.value)
    g = InvariantMetric.diagonal(F3, (1, -1, MU))
    assert g.entry(1, 1) == rf(-1)
    assert g.inverse_entry(2, 2) == ONE / MU
    assert g.determinant() == -MU
    eta = g.lower(Vector.from_map(F3, {"e3": 1}))
    assert eta.components == (ZERO, ZERO, MU)


def test_abelian_connection_is_zero():
    g = InvariantMetric.diagonal(F3, (1, 1, -1))
    conn = levi_civita(LieAlgebra.abelian(F3), g)
    assert all(conn.gamma[i][j].is_zero() for i in range(3) for j in range(3))


def test_heisenberg_connection_and_curvature():
    alg = heisenberg()
    g = InvariantMetric.diagonal(F3, (1, 1, 1))
    conn = levi_civita(alg, g)
    assert conn.torsion_violation(alg) is None
    assert conn.metric_violation(g) is None
    half = rf("1/2")
    assert conn.nabla_basis(0, 1) == Vector.from_map(F3, {"e3": half})
    assert conn.nabla_basis(0, 2) == Vector.from_map(F3, {"e2": -half})
    assert conn.nabla_basis(2, 1) == Vector.from_map(F3, {"e1": half})
    # classical curvature of the Heisenberg group
    curv = curvature(conn, alg)
    assert curv.basis_value(0, 1, 1) == Vector.from_map(F3, {"e1": "-3/4"})
    ric = curv.ricci()
    assert ric.entry(0, 0) == rf("-1/2")
    assert ric.entry(1, 1) == rf("-1/2")
    assert ric.entry(2, 2) == rf("1/2")
    assert ric.entry(0, 1) == ZERO
    assert first_bianchi_violation(curv) is None
    assert lowered_symmetry_violation(curv.lower(g)) is None


def test_nabla_is_bilinear_over_constants():
    alg = heisenberg()
    conn = levi_civita(alg, InvariantMetric.diagonal(F3, (1, 1, 1)))
    v = Vector.from_map(F3, {"e1": 2})
    w = Vector.from_map(F3, {"e2": MU})
    assert conn.nabla(v, w) == conn.nabla_basis(0, 1).scale(2 * MU)


def test_violation_reporting():
    alg = heisenberg()
    zero_conn = Connection(F3, tuple(
        tuple(Vector.zero(F3) for _ in range(3)) for _ in range(3)))
    assert zero_conn.torsion_violation(alg) == (0, 1)
    bad = Connection(F3, tuple(
        tuple(F3.basis_vector(1) if (i, j) == (0, 0) else Vector.zero(F3)
              for j in range(3)) for i in range(3)))
    g = InvariantMetric.diagonal(F3, (1, 1, 1))
    assert bad.metric_violation(g) == (0, 0, 1)


def test_curvature_apply_matches_basis_values():
    alg = heisenberg()
    conn = levi_civita(alg, InvariantMetric.diagonal(F3, (1, 1, 1)))
    curv = curvature(conn, alg)
    x = Vector.from_map(F3, {"e1": 2})
    y = Vector.from_map(F3, {"e2": 1})
    assert curv.apply(x, y, y) == curv.basis_value(0, 1, 1).scale(2)


def test_factor_connection_matches_frozen_table():
    alg = factor_algebra()
    frame = alg.frame
    assert frame.labels == FACTOR_LABELS
    conn = levi_civita(alg, InvariantMetric.diagonal(frame, (1, 1, -1, -1)))
    seen = {}
    for i in range(4):
        for j in range(4):
            v = conn.nabla_basis(i, j)
            if not v.is_zero():
                seen[(frame.labels[i], frame.labels[j])] = {
                    frame.labels[k]: c for k, c in enumerate(v.components)
                    if not c.is_zero()}
    expected = {key: {k: rf(c) for k, c in val.items()}
                for key, val in EXPECTED_FACTOR_TABLE.items()}
    assert seen == expected


def test_factor_connection_rejects_alternating_signs():
    alg = factor_algebra()
    conn = levi_civita(alg, InvariantMetric.diagonal(alg.frame, (1, -1, 1, -1)))
    # nabla_{X2} X1 = 2 X4 fails under the alternating signature
    assert conn.nabla_basis(1, 0) != Vector.from_map(alg.frame, {"X4": 2})


def test_factor_signature_adjudication_entry():
    entry = factor_signature_entry()
    assert entry.status == "pass"
    assert entry.anchor == "example-4.7"
    assert "signs (1, 1, -1, -1): table=True, anti-compatibility=True" in entry.detail
    assert "signs (1, -1, 1, -1): table=False, anti-compatibility=False" in entry.detail


def test_direct_sum_builds_the_ambient_algebra(model):
    center = LieAlgebra.abelian(Frame(("E",)))
    assert direct_sum(factor_algebra(), center) == model.algebra


def test_ambient_connection_kills_the_central_direction(lm, ambient_conn):
    dim = lm.frame.dimension
    e_idx = lm.frame.index("E")
    for i in range(dim):
        assert ambient_conn.nabla_basis(e_idx, i).is_zero()
        assert ambient_conn.nabla_basis(i, e_idx).is_zero()
    assert ambient_conn.torsion_violation(lm.algebra) is None
    assert ambient_conn.metric_violation(lm.metric) is None


def test_ambient_curvature_invariants(lm, ambient_conn, ambient_r4):
    curv = curvature(ambient_conn, lm.algebra)
    assert first_bianchi_violation(curv) is None
    assert lowered_symmetry_violation(ambient_r4) is None
