"""Check-suite orchestration over a model file.

Three stages run in order: the ambient stage certifies the structure and
extracts the sectional invariants, the submanifold stage rebuilds both
induced geometries and evaluates every catalogued identity, and the final
stage aggregates the five equivalent assertions.  Geometry exceptions
never escape a stage; they become failing entries, and the steps whose
inputs are gone report one skipped entry each.
"""

from __future__ import annotations

from typing import Callable

from . import associated as twin
from . import lightlike
from . import report
from .builtin import factor_signature_entry
from .errors import (
    GeometryError,
    NoTotallyRealSection,
    NotEinstein,
    NotEtaEinstein,
)
from .liegeom import (
    InvariantMetric,
    curvature,
    first_bianchi_violation,
    levi_civita,
    lowered_symmetry_violation,
    validate_lie_algebra,
)
from .model import ModelFile
from .structure import (
    ACBMStructure,
    LieModel,
    associated_compat_entry,
    associated_metric,
    constant_curvature_residual,
    fit_curvature_pair,
    fundamental_tensor,
    validate_acbm,
)

SUITES = ("ambient", "submanifold", "theorem46", "all")

_BLOCKED = "blocked by an earlier failure"
_NO_PAIR = "the ambient sectional invariants are unavailable"
_NO_GAMMA = "the screen distribution is not totally umbilical"
_NO_SUB = "the model declares no submanifold"

_THEOREM_NAMES = (
    "assertion-ricci-semisymmetric",
    "assertion-twin-ricci-semisymmetric",
    "assertion-eta-einstein",
    "assertion-einstein",
    "assertion-scalar-identity",
    "assertion-equivalence",
)


class _Stage:
    """Ordered steps with blocking: a step that blows up fails and all
    later steps of the stage degrade to one skipped entry each."""

    def __init__(self, blocked: bool = False):
        self.entries: list[report.CheckEntry] = []
        self.blocked = blocked

    def run(self, name: str, anchor: str,
            fn: Callable[[], list[report.CheckEntry]],
            block_on_fail: bool = False) -> None:
        if self.blocked:
            self.entries.append(report.skipped(name, anchor, _BLOCKED))
            return
        try:
            new = fn()
        except GeometryError as exc:
            self.entries.append(report.failed(name, anchor, str(exc)))
            self.blocked = True
            return
        self.entries.extend(new)
        if block_on_fail and any(e.status == report.FAIL for e in new):
            self.blocked = True


def _ambient_stage(model: ModelFile, ctx: dict) -> _Stage:
    st = _Stage()
    alg = model.algebra
    labels = model.frame.labels
    dim = model.frame.dimension

    st.run("lie-algebra", "plumbing",
           lambda: [validate_lie_algebra(alg)], block_on_fail=True)

    def metric_step():
        ctx["metric"] = InvariantMetric(model.metric_form)
        return [report.passed(
            "invariant-metric", "plumbing",
            "the metric table is symmetric and nondegenerate")]
    st.run("invariant-metric", "plumbing", metric_step)

    def koszul_step():
        conn = levi_civita(alg, ctx["metric"])
        ctx["conn"] = conn
        tv = conn.torsion_violation(alg)
        mv = conn.metric_violation(ctx["metric"])
        return [
            report.residual_entry(
                "ambient-torsion-free", "plumbing", tv is None,
                "the Koszul connection is torsion free" if tv is None
                else f"torsion at ({labels[tv[0]]}, {labels[tv[1]]})"),
            report.residual_entry(
                "ambient-metric-compatible", "plumbing", mv is None,
                "the Koszul connection preserves the metric" if mv is None
                else "deviation at "
                     f"({labels[mv[0]]}, {labels[mv[1]]}, {labels[mv[2]]})"),
        ]
    st.run("koszul", "plumbing", koszul_step, block_on_fail=True)

    def structure_step():
        try:
            s = ACBMStructure(model.frame, model.phi, model.xi_bar,
                              model.eta_bar, ctx["metric"])
        except ValueError as exc:
            return [report.failed("structure-axioms", "sec-2-structure", str(exc))]
        ctx["structure"] = s
        ctx["lie_model"] = LieModel(alg, s)
        return validate_acbm(s)
    st.run("structure-axioms", "sec-2-structure", structure_step,
           block_on_fail=True)

    def assoc_metric_step():
        ctx["g_tilde"] = associated_metric(ctx["structure"])
        return [associated_compat_entry(ctx["structure"])]
    st.run("associated-metric", "sec-2-structure", assoc_metric_step,
           block_on_fail=True)

    def f0_step():
        ok = fundamental_tensor(ctx["structure"], ctx["conn"]).is_zero()
        return [report.residual_entry(
            "fundamental-tensor-vanishes", "sec-2-f0", ok,
            "the covariant derivative of the structure operator vanishes")]
    st.run("fundamental-tensor", "sec-2-f0", f0_step, block_on_fail=True)

    def lc_step():
        other = levi_civita(alg, ctx["g_tilde"])
        same = all((other.gamma[i][j] - ctx["conn"].gamma[i][j]).is_zero()
                   for i in range(dim) for j in range(dim))
        return [report.residual_entry(
            "connections-coincide", "sec-2-f0", same,
            "both ambient metrics share one torsion free metric connection")]
    st.run("lc-coincide", "sec-2-f0", lc_step)

    def curvature_step():
        curv = curvature(ctx["conn"], alg)
        ctx["curv"] = curv
        r4 = curv.lower(ctx["metric"])
        ctx["r4"] = r4
        bv = first_bianchi_violation(curv)
        sv = lowered_symmetry_violation(r4)
        return [
            report.residual_entry(
                "first-bianchi", "plumbing", bv is None,
                "the cyclic curvature sum vanishes" if bv is None
                else "violation at "
                     f"({labels[bv[0]]}, {labels[bv[1]]}, {labels[bv[2]]})"),
            report.residual_entry(
                "curvature-symmetries", "plumbing", sv is None,
                sv or "slot antisymmetries and the pair symmetry hold"),
        ]
    st.run("curvature", "plumbing", curvature_step, block_on_fail=True)

    def twist_step():
        r4 = ctx["r4"]
        twisted = r4.pull_slots(model.phi, (3,))
        lowered = ctx["curv"].lower(ctx["g_tilde"])
        ok = ((lowered - twisted).is_zero()
              and (twisted - r4.pull_slots(model.phi, (2,))).is_zero())
        return [report.residual_entry(
            "twisted-lowering", "sec-4-twist", ok,
            "lowering the curvature with the twin metric twists either of "
            "the last two slots")]
    st.run("twisted-lowering", "sec-4-twist", twist_step)

    def fit_step():
        try:
            pair = fit_curvature_pair(ctx["structure"], ctx["r4"])
        except NoTotallyRealSection as exc:
            return [report.failed("sectional-fit", "thm-4.1", str(exc))]
        ctx["pair"] = pair
        return [report.passed(
            "sectional-fit", "thm-4.1",
            f"nu = {pair.nu}, nu_tilde = {pair.nu_tilde}")]
    st.run("sectional-fit", "thm-4.1", fit_step)

    def form_step():
        if "pair" not in ctx:
            return [report.skipped("constant-curvature-form", "thm-4.1", _NO_PAIR)]
        res = constant_curvature_residual(ctx["structure"], ctx["r4"], ctx["pair"])
        ok = res.is_zero()
        if not ok:
            # the invariants fit one section only, so the closed forms
            # downstream would be meaningless
            ctx.pop("pair")
        return [report.residual_entry(
            "constant-curvature-form", "thm-4.1", ok,
            "the lowered curvature is the two-invariant combination of the "
            "basic curvature tensors")]
    st.run("constant-curvature-form", "thm-4.1", form_step)

    st.run("signature-audit", "example-4.7",
           lambda: [factor_signature_entry()])
    return st


def _submanifold_stage(model: ModelFile, ctx: dict, blocked: bool) -> _Stage:
    sub = model.submanifold
    if sub is None:
        st = _Stage(blocked=blocked)
        st.entries.append(report.skipped("submanifold-frame", "plumbing", _NO_SUB))
        return st
    st = _Stage(blocked=blocked)

    def needs(names_anchors, *, pair=False, gamma=False):
        """Skip entries when a prerequisite is absent, else None."""
        if pair and "pair" not in ctx:
            return [report.skipped(n, a, _NO_PAIR) for n, a in names_anchors]
        if gamma and ctx.get("gamma") is None:
            return [report.skipped(n, a, _NO_GAMMA) for n, a in names_anchors]
        return None

    def frame_step():
        ctx["f"] = lightlike.build_frame(
            ctx["lie_model"], sub.screen_labels, sub.screen, sub.rad,
            sub.l_vec, sub.n_vec)
        return lightlike.validate_frame(ctx["f"])
    st.run("submanifold-frame", "sec-2-splitting", frame_step,
           block_on_fail=True)

    def certify_step():
        mu, entries = lightlike.certify_ascreen_rsthl(ctx["f"])
        ctx["mu"] = mu
        return entries
    st.run("ascreen-certification", "sec-2-ascreen", certify_step,
           block_on_fail=True)

    def gw_step():
        ctx["obj"] = lightlike.gauss_weingarten(ctx["f"], ctx["conn"])
        return lightlike.induced_invariant_entries(ctx["f"], ctx["obj"])
    st.run("gauss-weingarten", "sec-2-induced", gw_step)

    st.run("structure-transfer", "eq-2.7",
           lambda: lightlike.ascreen_f0_entries(ctx["f"], ctx["obj"], ctx["mu"]))

    def umbilicity_step():
        rep = lightlike.umbilicity(ctx["f"], ctx["obj"])
        ctx["rep"] = rep
        ctx["gamma"] = rep.gamma_screen
        return [report.passed("umbilicity", "def-3.1", rep.describe())]
    st.run("umbilicity", "def-3.1", umbilicity_step)

    st.run("screen-umbilicity", "eq-17",
           lambda: lightlike.screen_umbilical_entries(
               ctx["f"], ctx["obj"], ctx["rep"], ctx["mu"]))

    def induced_curvature_step():
        ctx["curv_ind"] = lightlike.induced_curvature(ctx["f"], ctx["obj"])
        ctx["ric"] = ctx["curv_ind"].ricci()
        return [lightlike.ricci_symmetric_entry(ctx["ric"])]
    st.run("induced-curvature", "sec-3-ricci", induced_curvature_step)

    st.run("gauss-relation", "sec-4-gauss",
           lambda: [lightlike.gauss_relation_entry(
               ctx["f"], ctx["obj"], ctx["curv"], ctx["curv_ind"])])

    def eq15_step():
        sk = needs([("curvature-from-shape-terms", "eq-15")], pair=True)
        return sk or [lightlike.curvature_form_15_entry(
            ctx["f"], ctx["obj"], ctx["curv_ind"], ctx["pair"])]
    st.run("curvature-from-shape-terms", "eq-15", eq15_step)

    def eq16_step():
        sk = needs([("b-derivative-balance", "eq-16")], pair=True)
        return sk or [lightlike.codazzi_16_entry(
            ctx["f"], ctx["obj"], ctx["pair"], ctx["mu"])]
    st.run("b-derivative-balance", "eq-16", eq16_step)

    def nu_tilde_step():
        sk = needs([("twisted-sectional-vanishes", "thm-4.4")],
                   pair=True, gamma=True)
        return sk or [lightlike.nu_tilde_vanishes_entry(ctx["pair"])]
    st.run("twisted-sectional-vanishes", "thm-4.4", nu_tilde_step)

    def eq18_step():
        sk = needs([("umbilic-factor-identity", "eq-18")], pair=True, gamma=True)
        return sk or [lightlike.gamma_identity_18_entry(
            ctx["obj"], ctx["f"], ctx["pair"], ctx["gamma"], ctx["mu"])]
    st.run("umbilic-factor-identity", "eq-18", eq18_step)

    def eq19_step():
        sk = needs([("umbilic-curvature-form", "eq-19")], pair=True, gamma=True)
        return sk or [lightlike.curvature_form_19_entry(
            ctx["f"], ctx["curv_ind"], ctx["pair"], ctx["gamma"], ctx["mu"])]
    st.run("umbilic-curvature-form", "eq-19", eq19_step)

    def eq20_step():
        sk = needs([("umbilic-ricci-form", "eq-20")], pair=True, gamma=True)
        return sk or [lightlike.ricci_form_20_entry(
            ctx["f"], ctx["ric"], ctx["pair"], ctx["gamma"], ctx["mu"],
            ctx["lie_model"].structure.n)]
    st.run("umbilic-ricci-form", "eq-20", eq20_step)

    def eta_step():
        try:
            k, c = lightlike.eta_einstein_solve(ctx["f"], ctx["ric"])
        except NotEtaEinstein as exc:
            return [report.failed("eta-einstein-solve", "sec-4-einstein", str(exc))]
        return [report.passed(
            "eta-einstein-solve", "sec-4-einstein",
            f"Ric = ({k}) g + ({c}) eta x eta")]
    st.run("eta-einstein-solve", "sec-4-einstein", eta_step)

    def eq23_step():
        sk = needs([("ricci-action-closed-form", "eq-23")], pair=True, gamma=True)
        return sk or [lightlike.semisym_23_entry(
            ctx["f"], ctx["curv_ind"], ctx["ric"], ctx["pair"], ctx["gamma"],
            ctx["mu"], ctx["lie_model"].structure.n)]
    st.run("ricci-action-closed-form", "eq-23", eq23_step)

    st.run("umbilical-flatness", "cor-4.3",
           lambda: [twin.umbilical_flatness_entry(
               ctx["f"], ctx["rep"], ctx["curv_ind"], ctx["curv"])])

    def twin_step():
        assoc, entries = twin.build_associated(
            ctx["f"], ctx["obj"], ctx["mu"], ctx["conn"])
        ctx["assoc"] = assoc
        ctx["tcurv"] = twin.tilde_curvature(ctx["f"], assoc)
        ctx["tric"] = ctx["tcurv"].ricci()
        return entries
    st.run("twin-geometry", "thm-1.1", twin_step)

    st.run("twin-curvature-transfer", "eq-13",
           lambda: [twin.tilde_relation_13_entry(
               ctx["f"], ctx["obj"], ctx["mu"], ctx["curv_ind"], ctx["tcurv"])])

    st.run("twin-ricci-transfer", "eq-14",
           lambda: [twin.tilde_ricci_14_entry(
               ctx["f"], ctx["obj"], ctx["mu"], ctx["ric"], ctx["tric"])])

    def eq21_step():
        sk = needs([("twin-umbilic-curvature-form", "eq-21")],
                   pair=True, gamma=True)
        return sk or [twin.tilde_form_21_entry(
            ctx["f"], ctx["tcurv"], ctx["pair"], ctx["gamma"], ctx["mu"])]
    st.run("twin-umbilic-curvature-form", "eq-21", eq21_step)

    def eq22_step():
        sk = needs([("twin-umbilic-ricci-form", "eq-22"),
                    ("twin-ricci-last-term", "eq-22")], pair=True, gamma=True)
        return sk or twin.tilde_ricci_22_entries(
            ctx["f"], ctx["tric"], ctx["pair"], ctx["gamma"], ctx["mu"],
            ctx["lie_model"].structure.n)
    st.run("twin-umbilic-ricci-form", "eq-22", eq22_step)

    def einstein_step():
        try:
            lam = twin.einstein_solve(ctx["f"], ctx["assoc"], ctx["tric"])
        except NotEinstein as exc:
            return [report.failed("einstein-solve", "sec-4-einstein", str(exc))]
        return [report.passed(
            "einstein-solve", "sec-4-einstein", f"Ric~ = ({lam}) g~")]
    st.run("einstein-solve", "sec-4-einstein", einstein_step)

    def eq24_step():
        sk = needs([("twin-ricci-action-closed-form", "eq-24")],
                   pair=True, gamma=True)
        return sk or [twin.semisym_24_entry(
            ctx["f"], ctx["tcurv"], ctx["tric"], ctx["pair"], ctx["gamma"],
            ctx["mu"], ctx["lie_model"].structure.n)]
    st.run("twin-ricci-action-closed-form", "eq-24", eq24_step)

    st.run("geodesic-correspondence", "prop-3.3",
           lambda: twin.geodesic_correspondence_entries(
               ctx["obj"], ctx["assoc"], ctx["rep"]))

    st.run("umbilical-curvature-transfer", "cor-3.5",
           lambda: [twin.curvature_transfer_entry(
               ctx["rep"], ctx["assoc"], ctx["curv_ind"], ctx["tcurv"],
               ctx["ric"], ctx["tric"])])
    return st


def _theorem_stage(model: ModelFile, ctx: dict, blocked: bool) -> _Stage:
    st = _Stage()

    def step():
        if model.submanifold is None:
            return [report.skipped(n, "thm-4.6", _NO_SUB)
                    for n in _THEOREM_NAMES]
        if blocked or "tric" not in ctx:
            return [report.skipped(n, "thm-4.6", _BLOCKED)
                    for n in _THEOREM_NAMES]
        if "pair" not in ctx:
            return [report.skipped(n, "thm-4.6", _NO_PAIR)
                    for n in _THEOREM_NAMES]
        if ctx.get("gamma") is None:
            return [report.skipped(
                n, "thm-4.6", _NO_GAMMA + ", the theorem hypothesis fails")
                for n in _THEOREM_NAMES]
        if ctx["pair"].nu.is_zero():
            return [report.skipped(
                n, "thm-4.6",
                "the sectional invariant nu vanishes, the theorem hypothesis fails")
                for n in _THEOREM_NAMES]
        agg = twin.theorem_aggregate(
            ctx["f"], ctx["curv_ind"], ctx["ric"], ctx["tcurv"], ctx["tric"],
            ctx["assoc"], ctx["pair"], ctx["gamma"], ctx["mu"])
        return twin.theorem_entries(agg)
    st.run("theorem-aggregate", "thm-4.6", step)
    return st


def run_suite(model: ModelFile, suite: str = "all") -> report.CheckReport:
    """Run the selected stages and collect one ordered report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose one of {SUITES}")
    ctx: dict = {}
    st_a = _ambient_stage(model, ctx)
    st_b = _submanifold_stage(model, ctx, st_a.blocked)
    st_c = _theorem_stage(model, ctx, st_b.blocked)
    rep = report.CheckReport()
    if suite in ("ambient", "submanifold", "all"):
        rep.extend(st_a.entries)
    if suite in ("submanifold", "all"):
        rep.extend(st_b.entries)
    if suite in ("theorem46", "all"):
        rep.extend(st_c.entries)
    return rep
