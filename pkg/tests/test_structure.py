"""Structure axioms, the associated metric, the fundamental tensor and the
constant sectional invariants."""

import pytest

from rsthl.errors import NoTotallyRealSection
from rsthl.liegeom import InvariantMetric, LieAlgebra, curvature, levi_civita
from rsthl.scalars import ONE, ZERO, rf
from rsthl.structure import (ACBMStructure, associated_compat_entry,
                             associated_metric, constant_curvature_residual,
                             fit_curvature_pair, fundamental_tensor, is_f0,
                             pi_tensors, signature_at_sample, validate_acbm)
from rsthl.tensors import Covector, Frame, LinearOperator, Vector

AXIOM_NAMES = ("phi-squared", "eta-of-xi", "eta-after-phi", "phi-of-xi",
               "phi-rank", "b-metric", "eta-is-metric-dual", "xi-unit",
               "metric-signature")


def test_validate_acbm_all_axioms_pass(lm):
    entries = validate_acbm(lm.structure)
    assert tuple(e.name for e in entries) == AXIOM_NAMES
    assert all(e.status == "pass" for e in entries)
    assert all(e.anchor == "sec-2-structure" for e in entries)
    by_name = {e.name: e for e in entries}
    assert by_name["phi-rank"].detail == "rank phi = 4, expected 4"
    assert by_name["metric-signature"].detail == "signature (3,2), expected (3,2)"


def test_structure_needs_odd_dimension():
    frame = Frame(("a", "b"))
    with pytest.raises(ValueError, match="odd dimension"):
        ACBMStructure(frame, LinearOperator.zero(frame), Vector.zero(frame),
                      Covector(frame, (ZERO, ZERO)),
                      InvariantMetric.diagonal(frame, (1, 1)))


def test_n_counts_structure_planes(lm):
    assert lm.structure.n == 2


def test_perturbed_phi_fails_phi_squared(lm):
    s = lm.structure
    frame = s.frame
    cols = list(s.phi.column(j) for j in range(frame.dimension))
    cols[0] = cols[0] + frame.basis_vector(0)
    bad = ACBMStructure(frame, LinearOperator.from_columns(frame, cols),
                        s.xi_bar, s.eta_bar, s.metric)
    by_name = {e.name: e for e in validate_acbm(bad)}
    assert by_name["phi-squared"].status == "fail"
    assert by_name["eta-of-xi"].status == "pass"


def test_wrong_signature_is_reported(lm):
    s = lm.structure
    flat = InvariantMetric.diagonal(s.frame, (1, 1, 1, 1, 1))
    bad = ACBMStructure(s.frame, s.phi, s.xi_bar, s.eta_bar, flat)
    by_name = {e.name: e for e in validate_acbm(bad)}
    assert by_name["metric-signature"].status == "fail"
    assert by_name["metric-signature"].detail == "signature (5,0), expected (3,2)"
    assert by_name["b-metric"].status == "fail"


def test_signature_at_sample(lm):
    assert signature_at_sample(lm.metric) == (3, 2, 0)


def test_associated_metric_values(lm):
    s = lm.structure
    gt = associated_metric(s)
    frame = s.frame
    x1, x2, x3, x4, e = (frame.index(l) for l in ("X1", "X2", "X3", "X4", "E"))
    assert gt.entry(x1, x3) == rf(-1)
    assert gt.entry(x3, x1) == rf(-1)
    assert gt.entry(x2, x4) == rf(-1)
    assert gt.entry(e, e) == ONE
    for i in (x1, x2, x3, x4):
        assert gt.entry(i, i) == ZERO
        assert gt.entry(i, e) == ZERO
    assert gt.entry(x1, x2) == ZERO
    # the twin pairing is nondegenerate with split signature plus the unit
    assert signature_at_sample(gt) == (3, 2, 0)


def test_associated_compat_entry(lm):
    entry = associated_compat_entry(lm.structure)
    assert entry.status == "pass"
    assert entry.name == "associated-metric-twist"


def test_fundamental_tensor_vanishes(lm, ambient_conn):
    assert fundamental_tensor(lm.structure, ambient_conn).is_zero()
    assert is_f0(lm.structure, ambient_conn)


def test_twin_connection_coincides(lm, ambient_conn):
    gt = associated_metric(lm.structure)
    twin_conn = levi_civita(lm.algebra, gt)
    dim = lm.frame.dimension
    for i in range(dim):
        for j in range(dim):
            assert (twin_conn.gamma[i][j] - ambient_conn.gamma[i][j]).is_zero()


def test_non_parallel_phi_is_not_f0(lm, ambient_conn):
    s = lm.structure
    frame = s.frame
    cols = list(s.phi.column(j) for j in range(frame.dimension))
    cols[frame.index("X2")] = cols[frame.index("X2")].scale(2)
    bad = ACBMStructure(frame, LinearOperator.from_columns(frame, cols),
                        s.xi_bar, s.eta_bar, s.metric)
    f = fundamental_tensor(bad, ambient_conn)
    assert not is_f0(bad, ambient_conn)
    x1, x2 = frame.index("X1"), frame.index("X2")
    assert f.entry(x2, x2, x1) == rf(2)


def test_pi_tensor_values(lm):
    p1, p2, p3 = pi_tensors(lm.structure)
    frame = lm.frame
    x1, x2, x3 = frame.index("X1"), frame.index("X2"), frame.index("X3")
    # pi_1(X1, X2, X2, X1) = g(X2,X2) g(X1,X1)
    assert p1.entry(x1, x2, x2, x1) == ONE
    assert p2.entry(x1, x2, x2, x1) == ZERO
    # pi_3(X1, X2, X2, X3) = -g(X2,X2) g(X1, phi X3) = -1 * -1
    assert p3.entry(x1, x2, x2, x3) == ONE
    assert p3.entry(x1, x2, x2, x1) == ZERO


def test_fit_curvature_pair_and_closed_form(lm, ambient_r4, pair):
    assert pair.nu == rf(4)
    assert pair.nu_tilde == ZERO
    assert constant_curvature_residual(lm.structure, ambient_r4, pair).is_zero()


def test_closed_form_rejects_wrong_curvature(lm, ambient_r4, pair):
    res = constant_curvature_residual(lm.structure, ambient_r4.scale(2), pair)
    assert not res.is_zero()


def test_no_totally_real_section():
    frame = Frame(("e1", "e2", "e3"))
    phi = LinearOperator.from_columns(frame, (
        Vector.from_map(frame, {"e2": 1}),
        Vector.from_map(frame, {"e1": -1}),
        Vector.zero(frame)))
    s = ACBMStructure(frame, phi, Vector.from_map(frame, {"e3": 1}),
                      Covector.from_map(frame, {"e3": 1}),
                      InvariantMetric.diagonal(frame, (1, -1, 1)))
    alg = LieAlgebra.abelian(frame)
    r4 = curvature(levi_civita(alg, s.metric), alg).lower(s.metric)
    with pytest.raises(NoTotallyRealSection):
        fit_curvature_pair(s, r4)
