"""Almost contact B-metric structures on an odd-dimensional frame.

The data is a tensor field phi, a vector xi_bar, a one-form eta_bar, and a
metric g_bar satisfying

    phi^2 = -Id + eta_bar (x) xi_bar,      eta_bar(xi_bar) = 1,
    g_bar(phi X, phi Y) = -g_bar(X, Y) + eta_bar(X) eta_bar(Y),

with g_bar of signature (n+1, n) on dimension 2n+1.  The structure is of the
zero class when the fundamental tensor F(X,Y,Z) = g_bar((nabla_X phi)Y, Z)
vanishes; then the Levi-Civita connections of g_bar and of the associated
metric g_bar(X, phi Y) + eta_bar(X) eta_bar(Y) coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import report
from .errors import NoTotallyRealSection
from .liegeom import Connection, InvariantMetric, LieAlgebra
from .scalars import ONE, ZERO, RationalFunction
from .tensors import (
    Covector,
    Frame,
    LinearOperator,
    MultilinearForm,
    Vector,
    determinant,
    inertia,
    pick_regular_sample,
)


@dataclass(frozen=True)
class ACBMStructure:
    frame: Frame
    phi: LinearOperator
    xi_bar: Vector
    eta_bar: Covector
    metric: InvariantMetric

    def __post_init__(self):
        if self.frame.dimension % 2 == 0:
            raise ValueError("an almost contact structure needs odd dimension")

    @property
    def n(self) -> int:
        return (self.frame.dimension - 1) // 2


@dataclass(frozen=True)
class LieModel:
    """A Lie algebra with an invariant metric and a compatible structure."""

    algebra: LieAlgebra
    structure: ACBMStructure

    def __post_init__(self):
        if self.algebra.frame != self.structure.frame:
            raise ValueError("algebra and structure frames differ")

    @property
    def frame(self) -> Frame:
        return self.algebra.frame

    @property
    def metric(self) -> InvariantMetric:
        return self.structure.metric


@dataclass(frozen=True)
class CurvaturePair:
    """The two sectional curvatures of a totally real section orthogonal to
    xi_bar: nu along the section, nu_tilde for its phi-twisted companion."""

    nu: RationalFunction
    nu_tilde: RationalFunction


def signature_at_sample(metric: InvariantMetric) -> tuple[int, int, int]:
    """Inertia of the Gram matrix at a rational mu avoiding every denominator
    root and every determinant root, found by exact search over integers."""
    avoid = [determinant(metric.form.rows())]
    sample = pick_regular_sample(avoid)
    rows = [
        [e.eval_at(sample) for e in row]
        for row in metric.form.rows()
    ]
    return inertia(rows)


def validate_acbm(s: ACBMStructure) -> list[report.CheckEntry]:
    """All defining axioms, each as one report entry."""
    out = []
    frame = s.frame
    dim = frame.dimension
    basis = [frame.basis_vector(i) for i in range(dim)]
    n = s.n

    phi_sq = s.phi.compose(s.phi)
    reconstruction = phi_sq + LinearOperator.identity(frame) - LinearOperator.outer(
        s.xi_bar, s.eta_bar
    )
    out.append(
        report.residual_entry(
            "phi-squared",
            "sec-2-structure",
            reconstruction.is_zero(),
            "phi^2 = -Id + eta_bar (x) xi_bar",
        )
    )
    out.append(
        report.residual_entry(
            "eta-of-xi",
            "sec-2-structure",
            (s.eta_bar(s.xi_bar) - ONE).is_zero(),
            "eta_bar(xi_bar) = 1",
        )
    )
    eta_phi = all(s.eta_bar(s.phi.column(j)).is_zero() for j in range(dim))
    out.append(
        report.residual_entry(
            "eta-after-phi", "sec-2-structure", eta_phi, "eta_bar after phi vanishes"
        )
    )
    out.append(
        report.residual_entry(
            "phi-of-xi",
            "sec-2-structure",
            s.phi.apply(s.xi_bar).is_zero(),
            "phi(xi_bar) = 0",
        )
    )
    out.append(
        report.residual_entry(
            "phi-rank",
            "sec-2-structure",
            s.phi.rank() == 2 * n,
            f"rank phi = {s.phi.rank()}, expected {2 * n}",
        )
    )

    bmetric_ok = True
    for i in range(dim):
        for j in range(dim):
            res = (
                s.metric.value(s.phi.column(i), s.phi.column(j))
                + s.metric.entry(i, j)
                - s.eta_bar.components[i] * s.eta_bar.components[j]
            )
            if not res.is_zero():
                bmetric_ok = False
                break
        if not bmetric_ok:
            break
    out.append(
        report.residual_entry(
            "b-metric",
            "sec-2-structure",
            bmetric_ok,
            "g(phi X, phi Y) = -g(X, Y) + eta_bar(X) eta_bar(Y)",
        )
    )

    eta_dual = all(
        (s.eta_bar.components[i] - s.metric.value(basis[i], s.xi_bar)).is_zero()
        for i in range(dim)
    )
    out.append(
        report.residual_entry(
            "eta-is-metric-dual",
            "sec-2-structure",
            eta_dual,
            "eta_bar(X) = g(X, xi_bar)",
        )
    )
    out.append(
        report.residual_entry(
            "xi-unit",
            "sec-2-structure",
            (s.metric.value(s.xi_bar, s.xi_bar) - ONE).is_zero(),
            "g(xi_bar, xi_bar) = 1",
        )
    )

    pos, neg, zero = signature_at_sample(s.metric)
    out.append(
        report.residual_entry(
            "metric-signature",
            "sec-2-structure",
            (pos, neg, zero) == (n + 1, n, 0),
            f"signature ({pos},{neg}), expected ({n + 1},{n})",
        )
    )
    return out


def associated_metric(s: ACBMStructure) -> InvariantMetric:
    """g_tilde(X, Y) = g_bar(X, phi Y) + eta_bar(X) eta_bar(Y)."""
    frame = s.frame
    basis = [frame.basis_vector(i) for i in range(frame.dimension)]

    def entry(i, j):
        return (
            s.metric.value(basis[i], s.phi.column(j))
            + s.eta_bar.components[i] * s.eta_bar.components[j]
        )

    return InvariantMetric(MultilinearForm.from_function(frame, 2, entry))


def associated_compat_entry(s: ACBMStructure) -> report.CheckEntry:
    """g_tilde(X, phi Y) + eta_bar(X) eta_bar(Y) = -g_bar(X,Y) + 2 eta_bar eta_bar."""
    g_tilde = associated_metric(s)
    frame = s.frame
    dim = frame.dimension
    basis = [frame.basis_vector(i) for i in range(dim)]
    ok = True
    for i in range(dim):
        for j in range(dim):
            ee = s.eta_bar.components[i] * s.eta_bar.components[j]
            lhs = g_tilde.value(basis[i], s.phi.column(j)) + ee
            rhs = -s.metric.entry(i, j) + ee + ee
            if not (lhs - rhs).is_zero():
                ok = False
    return report.residual_entry(
        "associated-metric-twist",
        "sec-2-structure",
        ok,
        "twisting the associated metric recovers -g_bar + 2 eta_bar^2",
    )


def fundamental_tensor(s: ACBMStructure, conn: Connection) -> MultilinearForm:
    """F(X,Y,Z) = g_bar((nabla_X phi) Y, Z) on the frame."""
    frame = s.frame
    dim = frame.dimension
    basis = [frame.basis_vector(i) for i in range(dim)]
    nabla_phi = [
        [
            conn.nabla(basis[i], s.phi.column(j)) - s.phi.apply(conn.gamma[i][j])
            for j in range(dim)
        ]
        for i in range(dim)
    ]
    return MultilinearForm.from_function(
        frame, 3, lambda i, j, k: s.metric.value(nabla_phi[i][j], basis[k])
    )


def is_f0(s: ACBMStructure, conn: Connection) -> bool:
    return fundamental_tensor(s, conn).is_zero()


def pi_tensors(s: ACBMStructure) -> tuple[MultilinearForm, MultilinearForm, MultilinearForm]:
    """The three basic curvature-type tensors built from g_bar and phi."""
    frame = s.frame
    g = s.metric

    def pi1(i, j, k, l):
        return g.entry(j, k) * g.entry(i, l) - g.entry(i, k) * g.entry(j, l)

    p1 = MultilinearForm.from_function(frame, 4, pi1)
    p2 = p1.pull_slots(s.phi, (2, 3))

    basis = [frame.basis_vector(i) for i in range(frame.dimension)]
    gphi = [
        [g.value(basis[i], s.phi.column(j)) for j in range(frame.dimension)]
        for i in range(frame.dimension)
    ]

    def pi3(i, j, k, l):
        return (
            -g.entry(j, k) * gphi[i][l]
            + g.entry(i, k) * gphi[j][l]
            - gphi[j][k] * g.entry(i, l)
            + gphi[i][k] * g.entry(j, l)
        )

    p3 = MultilinearForm.from_function(frame, 4, pi3)
    return p1, p2, p3


def constant_curvature_residual(
    s: ACBMStructure, r4: MultilinearForm, pair: CurvaturePair
) -> MultilinearForm:
    """Residual of the two-curvature closed form for the lowered curvature:

        R = nu [pi_1 after phi - pi_2] + nu_tilde [pi_3 after phi].
    """
    p1, p2, p3 = pi_tensors(s)
    model = (p1.pull_all(s.phi) - p2).scale(pair.nu) + p3.pull_all(s.phi).scale(
        pair.nu_tilde
    )
    return r4 - model


def fit_curvature_pair(s: ACBMStructure, r4: MultilinearForm) -> CurvaturePair:
    """Extract (nu, nu_tilde) from the first totally real frame section
    orthogonal to xi_bar, scanning index pairs lexicographically."""
    frame = s.frame
    dim = frame.dimension
    basis = [frame.basis_vector(i) for i in range(dim)]
    g = s.metric
    for i in range(dim):
        for j in range(i + 1, dim):
            x, y = basis[i], basis[j]
            if not g.value(x, s.xi_bar).is_zero():
                continue
            if not g.value(y, s.xi_bar).is_zero():
                continue
            denom = g.value(x, x) * g.value(y, y) - g.value(x, y) ** 2
            if denom.is_zero():
                continue
            px, py = s.phi.apply(x), s.phi.apply(y)
            if not all(
                g.value(u, v).is_zero() for u in (px, py) for v in (x, y)
            ):
                continue
            nu = r4.value(x, y, y, x) / denom
            nu_tilde = r4.value(x, y, y, px) / denom
            return CurvaturePair(nu=nu, nu_tilde=nu_tilde)
    raise NoTotallyRealSection(
        "no frame pair spans a nondegenerate totally real section orthogonal to xi_bar"
    )
