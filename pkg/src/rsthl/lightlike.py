"""Half lightlike submanifold calculus for invariant models.

Builds the adapted frame of a codimension-two submanifold whose induced
metric has a one-dimensional radical, certifies the radical screen
transversal and ascreen conditions, reconstructs the induced connection
together with the second fundamental forms and shape operators, and
evaluates the closed-form curvature identities from the catalog in
``docs/identities.md`` as exact residuals.

All tangent-space objects live on a dedicated frame whose last label is
``"xi"`` (the radical direction); the preceding labels name the screen
basis.  Ambient objects stay on the frame of the underlying model.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    DecompositionInconsistent,
    InconsistentSystem,
    InvalidFrame,
    MuZero,
    NoSuchN,
    NotAscreen,
    NotEtaEinstein,
    NotRSTHL,
    RadicalRankNotOne,
    ScreenDegenerate,
    UnderdeterminedSystem,
)
from .liegeom import Connection, CurvatureTensor, LieAlgebra, curvature
from .report import CheckEntry, residual_entry, skipped
from .scalars import ONE, RationalFunction, ZERO, rf
from .structure import CurvaturePair, LieModel
from .tensors import (
    Covector,
    Frame,
    LinearOperator,
    MultilinearForm,
    Vector,
    determinant,
    matrix_inverse,
    solve_affine,
    solve_unique,
)


RADICAL_LABEL = "xi"


def solve_transversal(model: LieModel, screen: tuple[Vector, ...], rad: Vector,
                      l_vec: Vector) -> Vector:
    """Solve for the null transversal N dual to the radical direction.

    N is pinned down by g(N, S) = 0, g(N, L) = 0, g(N, rad) = 1 and
    g(N, N) = 0.  The linear conditions leave a line N0 + t*rad; the
    quadratic one is then linear in t because rad is null.
    """
    g = model.metric
    dim = model.frame.dimension
    basis = [model.frame.basis_vector(i) for i in range(dim)]
    rows = []
    rhs = []
    for w in screen:
        rows.append([g.value(basis[i], w) for i in range(dim)])
        rhs.append(ZERO)
    rows.append([g.value(basis[i], l_vec) for i in range(dim)])
    rhs.append(ZERO)
    rows.append([g.value(basis[i], rad) for i in range(dim)])
    rhs.append(ONE)
    try:
        particular, kernel = solve_affine(rows, rhs)
    except (InconsistentSystem, UnderdeterminedSystem) as exc:
        raise NoSuchN(str(exc)) from exc
    if len(kernel) != 1:
        raise NoSuchN(
            "the orthogonality conditions leave a transversal freedom of "
            f"dimension {len(kernel)}, expected 1")
    direction = Vector(model.frame, kernel[0])
    pivot = next((i for i, c in enumerate(rad.components) if not c.is_zero()), None)
    if pivot is None:
        raise NoSuchN("the radical vector vanishes")
    ratio = direction.components[pivot] / rad.components[pivot]
    if not (direction - rad.scale(ratio)).is_zero():
        raise NoSuchN("the transversal freedom is not along the radical direction")
    n0 = Vector(model.frame, particular)
    t = g.value(n0, n0) * rf("-1/2")
    return n0 + rad.scale(t)


class SubmanifoldFrame:
    """Adapted frame (screen basis, radical, transversals) with cached splittings."""

    def __init__(self, model: LieModel, screen_labels: tuple[str, ...],
                 screen: tuple[Vector, ...], rad: Vector, l_vec: Vector,
                 n_vec: Optional[Vector] = None):
        if len(screen_labels) != len(screen):
            raise InvalidFrame("screen labels and screen vectors differ in number")
        if RADICAL_LABEL in screen_labels:
            raise InvalidFrame(f"screen label {RADICAL_LABEL!r} is reserved")
        if len(set(screen_labels)) != len(screen_labels):
            raise InvalidFrame("screen labels must be distinct")
        self.model = model
        self.screen_labels = tuple(screen_labels)
        self.screen = tuple(screen)
        self.rad = rad
        self.l_vec = l_vec
        g = model.metric
        dim = model.frame.dimension
        m = len(screen) + 1
        if dim != m + 2:
            raise InvalidFrame(
                f"a half lightlike submanifold of a {dim}-dimensional ambient "
                f"space needs {dim - 3} screen vectors, got {len(screen)}")
        self.tangent_frame = Frame(self.screen_labels + (RADICAL_LABEL,))
        self.tangent_vectors = self.screen + (rad,)

        columns = [list(v.components) for v in self.tangent_vectors]
        rank_rows = [[columns[j][i] for j in range(m)] for i in range(dim)]
        if _column_rank(rank_rows, m) != m:
            raise InvalidFrame("the tangent vectors are linearly dependent")

        for idx, w in enumerate(self.tangent_vectors):
            if not g.value(rad, w).is_zero():
                label = self.tangent_frame.labels[idx]
                raise RadicalRankNotOne(
                    f"the radical vector is not isotropic against {label}")

        screen_gram = [[g.value(x, y) for y in self.screen] for x in self.screen]
        if screen_gram and determinant(screen_gram).is_zero():
            raise ScreenDegenerate("the metric degenerates on the screen distribution")

        eps = g.value(l_vec, l_vec)
        if not (eps - 1).is_zero() and not (eps + 1).is_zero():
            raise InvalidFrame("the screen transversal vector is not unit")
        self.epsilon = eps
        for idx, w in enumerate(self.tangent_vectors):
            if not g.value(l_vec, w).is_zero():
                label = self.tangent_frame.labels[idx]
                raise InvalidFrame(
                    f"the screen transversal is not orthogonal to {label}")

        if n_vec is None:
            n_vec = solve_transversal(model, self.screen, rad, l_vec)
        else:
            _verify_transversal(model, self.tangent_vectors, self.tangent_frame,
                                rad, l_vec, n_vec)
        self.n_vec = n_vec

        full = [list(v.components)
                for v in self.tangent_vectors + (n_vec, l_vec)]
        full_rows = [[full[j][i] for j in range(dim)] for i in range(dim)]
        try:
            self._full_inverse = matrix_inverse(full_rows)
        except Exception as exc:
            raise InvalidFrame(
                "the tangent basis and the transversals do not span the "
                "ambient space") from exc

        self.induced_form = MultilinearForm.from_function(
            self.tangent_frame, 2,
            lambda a, b: g.value(self.tangent_vectors[a], self.tangent_vectors[b]))
        self.eta = Covector(self.tangent_frame, tuple(
            g.value(v, n_vec) for v in self.tangent_vectors))
        amb_eta = model.structure.eta_bar
        self.eta_bar = Covector(self.tangent_frame, tuple(
            amb_eta(v) for v in self.tangent_vectors))
        self.tangent_algebra = self._close_brackets()
        self._phi_p: Optional[LinearOperator] = None

    @property
    def dim(self) -> int:
        return self.tangent_frame.dimension

    @property
    def radical_index(self) -> int:
        return self.dim - 1

    def radical_tangent(self) -> Vector:
        return self.tangent_frame.basis_vector(self.radical_index)

    def embed(self, v: Vector) -> Vector:
        out = Vector.zero(self.model.frame)
        for a, c in enumerate(v.components):
            if not c.is_zero():
                out = out + self.tangent_vectors[a].scale(c)
        return out

    def decompose_full(self, v: Vector) -> tuple[Vector, RationalFunction, RationalFunction]:
        """Split an ambient vector over the basis (tangent..., N, L)."""
        coeffs = [sum((self._full_inverse[r][i] * v.components[i]
                       for i in range(len(v.components))), ZERO)
                  for r in range(len(v.components))]
        tangent = Vector(self.tangent_frame, tuple(coeffs[:self.dim]))
        return tangent, coeffs[self.dim], coeffs[self.dim + 1]

    def to_tangent(self, v: Vector, context: str) -> Vector:
        tangent, n_c, l_c = self.decompose_full(v)
        if not n_c.is_zero() or not l_c.is_zero():
            raise DecompositionInconsistent(
                f"{context} has transversal components N: {n_c}, L: {l_c}")
        return tangent

    def projector(self) -> LinearOperator:
        """Projection on the screen distribution along the radical."""
        xi_t = self.radical_tangent()
        cols = []
        for a in range(self.dim):
            basis = self.tangent_frame.basis_vector(a)
            cols.append(basis - xi_t.scale(self.eta.components[a]))
        return LinearOperator.from_columns(self.tangent_frame, cols)

    def phi_p(self) -> LinearOperator:
        """The tangent operator X -> phi(PX); requires a phi-invariant screen."""
        if self._phi_p is None:
            phi = self.model.structure.phi
            cols = []
            for a in range(self.dim):
                if a == self.radical_index:
                    cols.append(Vector.zero(self.tangent_frame))
                    continue
                image = phi.apply(self.tangent_vectors[a])
                try:
                    cols.append(self.to_tangent(image, "the structure image of a screen vector"))
                except DecompositionInconsistent as exc:
                    raise NotRSTHL(str(exc)) from exc
            self._phi_p = LinearOperator.from_columns(self.tangent_frame, cols)
        return self._phi_p

    def phi_pairing(self) -> MultilinearForm:
        """Table of g(T_a, phi T_b) over the tangent basis."""
        g = self.model.metric
        phi = self.model.structure.phi
        return MultilinearForm.from_function(
            self.tangent_frame, 2,
            lambda a, b: g.value(self.tangent_vectors[a],
                                 phi.apply(self.tangent_vectors[b])))

    def phi_phi_pairing(self) -> MultilinearForm:
        """Table of g(phi T_a, phi T_b) over the tangent basis."""
        g = self.model.metric
        phi = self.model.structure.phi
        return MultilinearForm.from_function(
            self.tangent_frame, 2,
            lambda a, b: g.value(phi.apply(self.tangent_vectors[a]),
                                 phi.apply(self.tangent_vectors[b])))

    def _close_brackets(self) -> LieAlgebra:
        alg = self.model.algebra
        table = []
        for a in range(self.dim):
            row = []
            for b in range(self.dim):
                amb = alg.bracket(self.tangent_vectors[a], self.tangent_vectors[b])
                try:
                    row.append(self.to_tangent(amb, "a bracket of tangent vectors"))
                except DecompositionInconsistent as exc:
                    la = self.tangent_frame.labels[a]
                    lb = self.tangent_frame.labels[b]
                    raise InvalidFrame(
                        f"the bracket [{la}, {lb}] leaves the tangent space: {exc}"
                    ) from exc
            table.append(tuple(row))
        return LieAlgebra(self.tangent_frame, tuple(table))


def _column_rank(rows: list[list[RationalFunction]], width: int) -> int:
    work = [row[:width] for row in rows]
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(work))
                      if not work[r][col].is_zero()), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = ONE / work[rank][col]
        work[rank] = [c * inv for c in work[rank]]
        for r in range(len(work)):
            if r != rank and not work[r][col].is_zero():
                factor = work[r][col]
                work[r] = [c - factor * p for c, p in zip(work[r], work[rank])]
        rank += 1
    return rank


def _verify_transversal(model: LieModel, tangent_vectors, tangent_frame,
                        rad: Vector, l_vec: Vector, n_vec: Vector) -> None:
    g = model.metric
    if not (g.value(n_vec, rad) - 1).is_zero():
        raise InvalidFrame("the given transversal N does not pair to 1 with the radical")
    if not g.value(n_vec, n_vec).is_zero():
        raise InvalidFrame("the given transversal N is not null")
    if not g.value(n_vec, l_vec).is_zero():
        raise InvalidFrame("the given transversal N is not orthogonal to L")
    for idx, w in enumerate(tangent_vectors[:-1]):
        if not g.value(n_vec, w).is_zero():
            raise InvalidFrame(
                f"the given transversal N is not orthogonal to {tangent_frame.labels[idx]}")


def build_frame(model: LieModel, screen_labels, screen, rad, l_vec,
                n_vec: Optional[Vector] = None) -> SubmanifoldFrame:
    return SubmanifoldFrame(model, tuple(screen_labels), tuple(screen),
                            rad, l_vec, n_vec)


def validate_frame(f: SubmanifoldFrame) -> list[CheckEntry]:
    """Report-friendly restatement of the constraints enforced at build time."""
    g = f.model.metric
    entries = []
    rad_ok = all(g.value(f.rad, w).is_zero() for w in f.tangent_vectors)
    entries.append(residual_entry(
        "radical-isotropy", "sec-2-splitting", rad_ok,
        "the radical direction is orthogonal to the whole tangent space"))
    gram = [[g.value(x, y) for y in f.screen] for x in f.screen]
    entries.append(residual_entry(
        "screen-nondegeneracy", "sec-2-splitting",
        not determinant(gram).is_zero() if gram else True,
        "the induced metric restricts without kernel to the screen"))
    entries.append(residual_entry(
        "transversal-normalization", "sec-2-splitting",
        (f.epsilon - 1).is_zero() or (f.epsilon + 1).is_zero(),
        f"g(L, L) = {f.epsilon}"))
    dual_ok = ((g.value(f.n_vec, f.rad) - 1).is_zero()
               and g.value(f.n_vec, f.n_vec).is_zero()
               and g.value(f.n_vec, f.l_vec).is_zero()
               and all(g.value(f.n_vec, w).is_zero() for w in f.screen))
    entries.append(residual_entry(
        "transversal-duality", "sec-2-splitting", dual_ok,
        "N is null, pairs to 1 with the radical and annihilates screen and L"))
    entries.append(residual_entry(
        "tangent-closure", "plumbing", True,
        "brackets of tangent vectors stay tangent"))
    return entries


def certify_ascreen_rsthl(f: SubmanifoldFrame) -> tuple[RationalFunction, list[CheckEntry]]:
    """Certify the defining conditions and return the invariant mu.

    Raises NotRSTHL, NotAscreen or MuZero when the frame cannot carry the
    structure at all; milder defects are reported as failing entries.
    """
    s = f.model.structure
    g = f.model.metric
    phi_xi = s.phi.apply(f.rad)
    if phi_xi.is_zero():
        raise NotRSTHL("the structure operator kills the radical direction")
    pivot = next((i for i, c in enumerate(f.l_vec.components) if not c.is_zero()), None)
    if pivot is None:
        raise NotRSTHL("the screen transversal vector vanishes")
    mu = phi_xi.components[pivot] / f.l_vec.components[pivot]
    if not (phi_xi - f.l_vec.scale(mu)).is_zero():
        raise NotRSTHL("the image of the radical is not the screen transversal line")
    if mu.is_zero():
        raise MuZero("the proportionality factor mu vanishes")

    tangent, n_c, l_c = f.decompose_full(s.xi_bar)
    screen_part = any(not tangent.components[a].is_zero()
                      for a in range(f.dim - 1))
    if screen_part or not l_c.is_zero():
        raise NotAscreen(
            "the distinguished vector field leaves the plane spanned by the "
            "radical and its null transversal")

    entries = []
    anchor = "sec-2-ascreen"
    entries.append(residual_entry(
        "radical-phi-image", anchor, True, f"phi(xi) = ({mu}) L"))
    half_inv = ONE / (mu + mu)
    reeb = f.rad.scale(half_inv) + f.n_vec.scale(mu)
    entries.append(residual_entry(
        "reeb-split", anchor, (s.xi_bar - reeb).is_zero(),
        "the distinguished field splits as (1/2mu) xi + mu N"))
    entries.append(residual_entry(
        "eta-of-radical", anchor, (s.eta_bar(f.rad) - mu).is_zero(),
        "eta(xi) = mu"))
    entries.append(residual_entry(
        "transversal-unit", anchor, (f.epsilon - 1).is_zero(),
        "g(L, L) = 1"))
    entries.append(residual_entry(
        "eta-of-transversal", anchor, s.eta_bar(f.l_vec).is_zero(),
        "eta(L) = 0"))
    entries.append(residual_entry(
        "eta-of-null-transversal", anchor,
        (s.eta_bar(f.n_vec) - half_inv).is_zero(),
        "eta(N) = 1/(2 mu)"))
    entries.append(residual_entry(
        "phi-of-null-transversal", anchor,
        (s.phi.apply(f.n_vec) + f.l_vec.scale(half_inv)).is_zero(),
        "phi(N) = -(1/2mu) L"))
    entries.append(residual_entry(
        "phi-of-transversal", anchor,
        (s.phi.apply(f.l_vec) + f.rad.scale(half_inv) - f.n_vec.scale(mu)).is_zero(),
        "phi(L) = -(1/2mu) xi + mu N"))
    invariant = True
    for a in range(f.dim - 1):
        image = s.phi.apply(f.tangent_vectors[a])
        t_part, i_n, i_l = f.decompose_full(image)
        if (not i_n.is_zero() or not i_l.is_zero()
                or not t_part.components[f.radical_index].is_zero()):
            invariant = False
            break
    entries.append(residual_entry(
        "screen-phi-invariance", anchor, invariant,
        "the structure operator preserves the screen distribution"))
    eta_match = all((f.eta_bar.components[a] - mu * f.eta.components[a]).is_zero()
                    for a in range(f.dim))
    entries.append(residual_entry(
        "eta-proportionality", anchor, eta_match,
        "the restricted dual form equals mu times the transversal dual"))
    return mu, entries


@dataclass(frozen=True)
class InducedObjects:
    """Induced connection, fundamental forms and shape operators."""

    conn: Connection
    screen_gamma: tuple[tuple[Vector, ...], ...]
    b_form: MultilinearForm
    c_form: MultilinearForm
    d_form: MultilinearForm
    shape_rad: LinearOperator
    shape_n: LinearOperator
    shape_l: LinearOperator
    tau: Covector
    rho: Covector
    phi_form: Covector


def gauss_weingarten(f: SubmanifoldFrame, ambient_conn: Connection) -> InducedObjects:
    """Split the ambient derivatives over (tangent, N, L)."""
    m = f.dim
    xi_t = f.radical_tangent()
    gamma = []
    b_entries = []
    d_entries = []
    for a in range(m):
        row_g = []
        for b in range(m):
            v = ambient_conn.nabla(f.tangent_vectors[a], f.tangent_vectors[b])
            tangent, n_c, l_c = f.decompose_full(v)
            row_g.append(tangent)
            b_entries.append(n_c)
            d_entries.append(l_c)
        gamma.append(tuple(row_g))
    conn = Connection(f.tangent_frame, tuple(gamma))
    b_form = MultilinearForm(f.tangent_frame, 2, tuple(b_entries))
    d_form = MultilinearForm(f.tangent_frame, 2, tuple(d_entries))

    tau_c = []
    rho_c = []
    shape_n_cols = []
    for a in range(m):
        v = ambient_conn.nabla(f.tangent_vectors[a], f.n_vec)
        tangent, n_c, l_c = f.decompose_full(v)
        shape_n_cols.append(-tangent)
        tau_c.append(n_c)
        rho_c.append(l_c)
    tau = Covector(f.tangent_frame, tuple(tau_c))
    rho = Covector(f.tangent_frame, tuple(rho_c))
    shape_n = LinearOperator.from_columns(f.tangent_frame, shape_n_cols)

    phi_c = []
    shape_l_cols = []
    for a in range(m):
        v = ambient_conn.nabla(f.tangent_vectors[a], f.l_vec)
        tangent, n_c, l_c = f.decompose_full(v)
        if not l_c.is_zero():
            raise DecompositionInconsistent(
                "the derivative of L has an L component, the ambient "
                "connection is not metric")
        shape_l_cols.append(-tangent)
        phi_c.append(n_c)
    phi_form = Covector(f.tangent_frame, tuple(phi_c))
    shape_l = LinearOperator.from_columns(f.tangent_frame, shape_l_cols)

    c_entries = []
    screen_gamma = []
    for a in range(m):
        row_s = []
        for b in range(m):
            c_val = gamma[a][b].components[m - 1] if b != m - 1 else ZERO
            c_entries.append(c_val)
            if b != m - 1:
                row_s.append(gamma[a][b] - xi_t.scale(gamma[a][b].components[m - 1]))
        screen_gamma.append(tuple(row_s))
    c_form = MultilinearForm(f.tangent_frame, 2, tuple(c_entries))

    shape_rad_cols = []
    for a in range(m):
        col = -gamma[a][m - 1] - xi_t.scale(tau_c[a])
        shape_rad_cols.append(col)
    shape_rad = LinearOperator.from_columns(f.tangent_frame, shape_rad_cols)

    return InducedObjects(conn=conn, screen_gamma=tuple(screen_gamma),
                          b_form=b_form, c_form=c_form, d_form=d_form,
                          shape_rad=shape_rad, shape_n=shape_n, shape_l=shape_l,
                          tau=tau, rho=rho, phi_form=phi_form)


def induced_invariant_entries(f: SubmanifoldFrame, obj: InducedObjects) -> list[CheckEntry]:
    """Structural identities every half lightlike splitting must satisfy."""
    anchor = "sec-2-induced"
    g = f.induced_form
    m = f.dim
    xi_idx = f.radical_index
    entries = []

    entries.append(residual_entry(
        "induced-torsion-free", anchor,
        obj.conn.torsion_violation(f.tangent_algebra) is None,
        "the induced connection has the tangent brackets as torsion defect zero"))
    entries.append(residual_entry(
        "b-symmetric", anchor, obj.b_form.is_symmetric(),
        "the N-valued fundamental form is symmetric"))
    entries.append(residual_entry(
        "d-symmetric", anchor, obj.d_form.is_symmetric(),
        "the L-valued fundamental form is symmetric"))
    entries.append(residual_entry(
        "b-kills-radical", anchor,
        all(obj.b_form.entry(a, xi_idx).is_zero() for a in range(m)),
        "B(X, xi) = 0"))
    entries.append(residual_entry(
        "d-radical-slot", anchor,
        all((obj.d_form.entry(a, xi_idx) + obj.phi_form.components[a]).is_zero()
            for a in range(m)),
        "D(X, xi) = -phi(X)"))
    entries.append(residual_entry(
        "radical-shape-kills-radical", anchor,
        obj.shape_rad.column(xi_idx).is_zero(),
        "the radical shape operator annihilates xi"))
    ok = True
    for a in range(m):
        for b in range(m):
            lhs = g.value(obj.shape_rad.column(a), f.tangent_frame.basis_vector(b))
            rhs = g.value(f.tangent_frame.basis_vector(a), obj.shape_rad.column(b))
            if not (lhs - rhs).is_zero():
                ok = False
    entries.append(residual_entry(
        "radical-shape-self-adjoint", anchor, ok,
        "the radical shape operator is self-adjoint for the induced metric"))
    ok = all((obj.b_form.entry(a, b)
              - g.value(obj.shape_rad.column(a), f.tangent_frame.basis_vector(b))).is_zero()
             for a in range(m) for b in range(m))
    entries.append(residual_entry(
        "b-from-radical-shape", anchor, ok, "B(X, Y) = g(A*_xi X, Y)"))
    entries.append(residual_entry(
        "radical-shape-screen-valued", anchor,
        all(obj.shape_rad.matrix[xi_idx][a].is_zero() for a in range(m)),
        "the radical shape operator takes values in the screen"))
    entries.append(residual_entry(
        "n-shape-screen-valued", anchor,
        all(obj.shape_n.matrix[xi_idx][a].is_zero() for a in range(m)),
        "the null transversal shape operator takes values in the screen"))
    proj = f.projector()
    ok = all((obj.c_form.entry(a, b)
              - g.value(obj.shape_n.column(a), proj.column(b))).is_zero()
             for a in range(m) for b in range(m))
    entries.append(residual_entry(
        "c-from-n-shape", anchor, ok, "C(X, PY) = g(A_N X, PY)"))
    eps = f.epsilon
    ok = True
    for a in range(m):
        for b in range(m):
            d_proj = sum((proj.matrix[k][b] * obj.d_form.entry(a, k)
                          for k in range(m)), ZERO)
            if not (eps * d_proj - g.value(obj.shape_l.column(a), proj.column(b))).is_zero():
                ok = False
    entries.append(residual_entry(
        "d-from-l-shape", anchor, ok, "eps D(X, PY) = g(A_L X, PY)"))
    ok = True
    for a in range(m):
        for b in range(m):
            lhs = eps * obj.d_form.entry(a, b)
            rhs = (g.value(obj.shape_l.column(a), proj.column(b))
                   - obj.phi_form.components[a] * f.eta.components[b])
            if not (lhs - rhs).is_zero():
                ok = False
    entries.append(residual_entry(
        "d-split", anchor, ok, "eps D(X, Y) = g(A_L X, PY) - phi(X) eta(Y)"))
    amb_g = f.model.metric
    ok = all((amb_g.value(f.embed(obj.shape_l.column(a)), f.n_vec)
              - eps * obj.rho.components[a]).is_zero() for a in range(m))
    entries.append(residual_entry(
        "l-shape-duality", anchor, ok, "g(A_L X, N) = eps rho(X)"))
    ok = True
    for a in range(m):
        for b in range(m):
            for c in range(m):
                dg = -(g.value(obj.conn.gamma[a][b], f.tangent_frame.basis_vector(c))
                       + g.value(f.tangent_frame.basis_vector(b), obj.conn.gamma[a][c]))
                rhs = (obj.b_form.entry(a, b) * f.eta.components[c]
                       + obj.b_form.entry(a, c) * f.eta.components[b])
                if not (dg - rhs).is_zero():
                    ok = False
    entries.append(residual_entry(
        "metric-deviation", anchor, ok,
        "(nabla_X g)(Y, Z) = B(X, Y) eta(Z) + B(X, Z) eta(Y)"))
    ok = all(obj.tau(f.tangent_algebra.bracket_basis(a, b)).is_zero()
             for a in range(m) for b in range(m))
    entries.append(residual_entry(
        "tau-closed", anchor, ok,
        "d tau = 0, hence the induced Ricci tensor is symmetric"))
    return entries


def ascreen_f0_entries(f: SubmanifoldFrame, obj: InducedObjects,
                       mu: RationalFunction) -> list[CheckEntry]:
    """Identities special to the certified class, with mu as the only input."""
    m = f.dim
    g = f.induced_form
    phi_p = f.phi_p()
    entries = []
    inv_two_mu2 = ONE / (mu * mu * 2)
    inv_mu = ONE / mu

    res = obj.shape_n + obj.shape_rad.scale(inv_two_mu2)
    entries.append(residual_entry(
        "n-shape-from-radical-shape", "eq-2.7", res.is_zero(),
        "A_N = -(1/2mu^2) A*_xi"))
    res = obj.shape_l - phi_p.compose(obj.shape_rad).scale(inv_mu)
    entries.append(residual_entry(
        "l-shape-from-radical-shape", "eq-2.7", res.is_zero(),
        "A_L = (1/mu) phi A*_xi"))
    b_phi = obj.b_form.pull_slots(phi_p, (1,))
    res2 = obj.d_form - b_phi.scale(inv_mu)
    entries.append(residual_entry(
        "d-from-b", "eq-2.8", res2.is_zero(),
        "D(X, Y) = (1/mu) B(X, phi PY)"))
    res2 = obj.c_form + obj.b_form.scale(inv_two_mu2)
    entries.append(residual_entry(
        "c-from-b", "eq-2.8", res2.is_zero(),
        "C(X, PY) = -(1/2mu^2) B(X, Y)"))
    entries.append(residual_entry(
        "tau-vanishes", "eq-2.9", obj.tau.is_zero(),
        "tau = -d(log mu) and mu is constant for invariant data"))
    entries.append(residual_entry(
        "phi-form-vanishes", "eq-2.9", obj.phi_form.is_zero(), "phi = 0"))
    entries.append(residual_entry(
        "rho-vanishes", "eq-2.9", obj.rho.is_zero(), "rho = 0"))

    ok = True
    for a in range(m):
        for s in range(m - 1):
            image = phi_p.column(s)
            first = Vector.zero(f.tangent_frame)
            for s2 in range(m - 1):
                coeff = image.components[s2]
                if not coeff.is_zero():
                    first = first + obj.screen_gamma[a][s2].scale(coeff)
            res_v = first - phi_p.apply(obj.screen_gamma[a][s])
            if not res_v.is_zero():
                ok = False
    entries.append(residual_entry(
        "screen-phi-parallel", "eq-2.10", ok,
        "the screen connection makes the restricted structure operator parallel"))

    for name, op in (("radical-shape-phi-commute", obj.shape_rad),
                     ("n-shape-phi-commute", obj.shape_n),
                     ("l-shape-phi-commute", obj.shape_l)):
        ok = all((op.apply(phi_p.column(s)) - phi_p.apply(op.column(s))).is_zero()
                 for s in range(m - 1))
        entries.append(residual_entry(
            name, "sec-2-commuting", ok,
            "the shape operator commutes with the structure operator on the screen"))

    res2 = obj.b_form.pull_all(phi_p) + obj.b_form
    entries.append(residual_entry(
        "b-phi-antisymmetry", "sec-2-commuting", res2.is_zero(),
        "B(phi X, phi Y) = -B(X, Y) on the screen"))
    return entries


@dataclass(frozen=True)
class UmbilicityReport:
    """Proportionality factors of the fundamental forms against the metric."""

    beta: Optional[RationalFunction]
    delta: Optional[RationalFunction]
    gamma_screen: Optional[RationalFunction]
    mean_curvature: Optional[Vector]
    totally_geodesic: bool
    totally_umbilical: bool
    proper_totally_umbilical: bool
    screen_totally_geodesic: bool
    screen_umbilical: bool
    proper_screen_umbilical: bool

    def describe(self) -> str:
        flags = []
        if self.totally_geodesic:
            flags.append("totally geodesic")
        elif self.totally_umbilical:
            kind = "proper totally umbilical" if self.proper_totally_umbilical \
                else "totally umbilical"
            flags.append(f"{kind} (beta = {self.beta}, delta = {self.delta})")
        else:
            flags.append("not totally umbilical")
        if self.screen_totally_geodesic:
            flags.append("screen totally geodesic")
        elif self.screen_umbilical:
            flags.append(f"screen totally umbilical (gamma = {self.gamma_screen})")
        else:
            flags.append("screen not umbilical")
        return "; ".join(flags)


def proportionality_factor(table: MultilinearForm, metric: MultilinearForm
                           ) -> Optional[RationalFunction]:
    """The exact factor making table = factor * metric, or None."""
    factor = None
    dim = table.frame.dimension
    for a in range(dim):
        for b in range(dim):
            if not metric.entry(a, b).is_zero():
                factor = table.entry(a, b) / metric.entry(a, b)
                break
        if factor is not None:
            break
    if factor is None:
        return None
    if (table - metric.scale(factor)).is_zero():
        return factor
    return None


def umbilicity(f: SubmanifoldFrame, obj: InducedObjects) -> UmbilicityReport:
    g = f.induced_form
    beta = proportionality_factor(obj.b_form, g)
    delta = proportionality_factor(obj.d_form, g)
    gamma_screen = proportionality_factor(obj.c_form, g)
    mean = None
    if beta is not None and delta is not None:
        mean = f.n_vec.scale(beta) + f.l_vec.scale(delta)
    tg = obj.b_form.is_zero() and obj.d_form.is_zero()
    tu = beta is not None and delta is not None
    stg = obj.c_form.is_zero()
    return UmbilicityReport(
        beta=beta, delta=delta, gamma_screen=gamma_screen, mean_curvature=mean,
        totally_geodesic=tg, totally_umbilical=tu,
        proper_totally_umbilical=tu and not tg,
        screen_totally_geodesic=stg,
        screen_umbilical=gamma_screen is not None,
        proper_screen_umbilical=gamma_screen is not None and not stg)


def screen_umbilical_entries(f: SubmanifoldFrame, obj: InducedObjects,
                             rep: UmbilicityReport,
                             mu: RationalFunction) -> list[CheckEntry]:
    if rep.gamma_screen is None:
        reason = "the screen distribution is not totally umbilical"
        return [skipped("n-shape-umbilic", "eq-17", reason),
                skipped("b-umbilic-multiple", "eq-17", reason)]
    gam = rep.gamma_screen
    entries = []
    res = obj.shape_n - f.projector().scale(gam)
    entries.append(residual_entry(
        "n-shape-umbilic", "eq-17", res.is_zero(), "A_N X = gamma PX"))
    res2 = obj.b_form + f.induced_form.scale(mu * mu * gam * 2)
    entries.append(residual_entry(
        "b-umbilic-multiple", "eq-17", res2.is_zero(),
        "B(X, Y) = -2 mu^2 gamma g(X, Y)"))
    return entries


def induced_curvature(f: SubmanifoldFrame, obj: InducedObjects) -> CurvatureTensor:
    return curvature(obj.conn, f.tangent_algebra)


def covariant_derivative(conn: Connection, form: MultilinearForm) -> MultilinearForm:
    """Derivative table (direction, slot 1, slot 2) of a bilinear form.

    For invariant data the scalar derivative term drops out and only the
    connection terms survive.
    """
    if form.arity != 2:
        raise ValueError("only bilinear forms are differentiated here")
    dim = form.frame.dimension

    def entry(a: int, b: int, c: int) -> RationalFunction:
        left = sum((conn.gamma[a][b].components[k] * form.entry(k, c)
                    for k in range(dim)), ZERO)
        right = sum((conn.gamma[a][c].components[k] * form.entry(b, k)
                     for k in range(dim)), ZERO)
        return -(left + right)

    return MultilinearForm.from_function(form.frame, 3, entry)


def gauss_relation_entry(f: SubmanifoldFrame, obj: InducedObjects,
                         ambient_curv: CurvatureTensor,
                         induced_curv: CurvatureTensor) -> CheckEntry:
    """Master consistency check reassembling the ambient curvature."""
    m = f.dim
    cd_b = covariant_derivative(obj.conn, obj.b_form)
    cd_d = covariant_derivative(obj.conn, obj.d_form)
    ok = True
    for a in range(m):
        for b in range(m):
            for c in range(m):
                lhs = ambient_curv.apply(f.tangent_vectors[a],
                                         f.tangent_vectors[b],
                                         f.tangent_vectors[c])
                tangent = f.embed(induced_curv.entries[a][b][c])
                tangent = tangent + f.embed(obj.shape_n.column(b)).scale(
                    obj.b_form.entry(a, c))
                tangent = tangent - f.embed(obj.shape_n.column(a)).scale(
                    obj.b_form.entry(b, c))
                tangent = tangent + f.embed(obj.shape_l.column(b)).scale(
                    obj.d_form.entry(a, c))
                tangent = tangent - f.embed(obj.shape_l.column(a)).scale(
                    obj.d_form.entry(b, c))
                n_coeff = (cd_b.entry(a, b, c) - cd_b.entry(b, a, c)
                           + obj.tau.components[a] * obj.b_form.entry(b, c)
                           - obj.tau.components[b] * obj.b_form.entry(a, c)
                           + obj.phi_form.components[a] * obj.d_form.entry(b, c)
                           - obj.phi_form.components[b] * obj.d_form.entry(a, c))
                l_coeff = (cd_d.entry(a, b, c) - cd_d.entry(b, a, c)
                           + obj.rho.components[a] * obj.b_form.entry(b, c)
                           - obj.rho.components[b] * obj.b_form.entry(a, c))
                rhs = tangent + f.n_vec.scale(n_coeff) + f.l_vec.scale(l_coeff)
                if not (lhs - rhs).is_zero():
                    ok = False
    return residual_entry(
        "gauss-relation", "sec-4-gauss", ok,
        "the ambient curvature splits into induced curvature, shape terms "
        "and derivative terms of the fundamental forms")


def curvature_form_15_entry(f: SubmanifoldFrame, obj: InducedObjects,
                            curv: CurvatureTensor,
                            pair: CurvaturePair) -> CheckEntry:
    m = f.dim
    g = f.induced_form
    phi_p = f.phi_p()
    proj = f.projector()
    gp = f.phi_pairing()
    gpp = f.phi_phi_pairing()
    xi_t = f.radical_tangent()
    nu, nut = pair.nu, pair.nu_tilde
    b_phi = obj.b_form.pull_slots(phi_p, (1,))
    phi_an = phi_p.compose(obj.shape_n)
    half = rf("1/2")
    ok = True
    for a in range(m):
        for b in range(m):
            for c in range(m):
                rhs = obj.shape_n.column(b).scale(-obj.b_form.entry(a, c))
                rhs = rhs + phi_an.column(b).scale(b_phi.entry(a, c) * 2)
                rhs = rhs + obj.shape_n.column(a).scale(obj.b_form.entry(b, c))
                rhs = rhs - phi_an.column(a).scale(b_phi.entry(b, c) * 2)
                rhs = rhs - proj.column(a).scale(
                    nu * gpp.entry(b, c) + nut * gp.entry(b, c))
                rhs = rhs + proj.column(b).scale(
                    nu * gpp.entry(a, c) + nut * gp.entry(a, c))
                rhs = rhs - phi_p.column(a).scale(
                    nu * gp.entry(b, c) - nut * gpp.entry(b, c))
                rhs = rhs + phi_p.column(b).scale(
                    nu * gp.entry(a, c) - nut * gpp.entry(a, c))
                coeff = (nu * (g.entry(b, c) * f.eta.components[a]
                               - g.entry(a, c) * f.eta.components[b])
                         - nut * (gp.entry(b, c) * f.eta.components[a]
                                  - gp.entry(a, c) * f.eta.components[b]))
                rhs = rhs + xi_t.scale(half * coeff)
                if not (curv.entries[a][b][c] - rhs).is_zero():
                    ok = False
    return residual_entry(
        "curvature-from-shape-terms", "eq-15", ok,
        "the induced curvature is rebuilt from shape operators and the "
        "two sectional invariants")


def codazzi_16_entry(f: SubmanifoldFrame, obj: InducedObjects,
                     pair: CurvaturePair, mu: RationalFunction) -> CheckEntry:
    m = f.dim
    g = f.induced_form
    gp = f.phi_pairing()
    cd_b = covariant_derivative(obj.conn, obj.b_form)
    nu, nut = pair.nu, pair.nu_tilde
    mu2 = mu * mu
    ok = True
    for a in range(m):
        for b in range(m):
            for c in range(m):
                lhs = (cd_b.entry(a, b, c) - cd_b.entry(b, a, c)
                       + obj.tau.components[a] * obj.b_form.entry(b, c)
                       - obj.tau.components[b] * obj.b_form.entry(a, c))
                rhs = mu2 * (nu * (g.entry(a, c) * f.eta.components[b]
                                   - g.entry(b, c) * f.eta.components[a])
                             - nut * (gp.entry(a, c) * f.eta.components[b]
                                      - gp.entry(b, c) * f.eta.components[a]))
                if not (lhs - rhs).is_zero():
                    ok = False
    return residual_entry(
        "b-derivative-balance", "eq-16", ok,
        "the skew derivative of B matches mu^2 times the sectional terms")


def nu_tilde_vanishes_entry(pair: CurvaturePair) -> CheckEntry:
    return residual_entry(
        "twisted-sectional-vanishes", "thm-4.4", pair.nu_tilde.is_zero(),
        "a screen umbilical submanifold forces the twisted sectional "
        "curvature to vanish")


def gamma_identity_18_entry(obj: InducedObjects, f: SubmanifoldFrame,
                            pair: CurvaturePair, gamma_screen: RationalFunction,
                            mu: RationalFunction) -> CheckEntry:
    tau_xi = obj.tau.components[f.radical_index]
    residual = (pair.nu + tau_xi * gamma_screen * 2
                - mu * mu * gamma_screen * gamma_screen * 4)
    return residual_entry(
        "umbilic-factor-identity", "eq-18", residual.is_zero(),
        "nu + 2 tau(xi) gamma - 4 mu^2 gamma^2 = 0, derivative terms vanish "
        "for invariant data")


def curvature_form_19_entry(f: SubmanifoldFrame, curv: CurvatureTensor,
                            pair: CurvaturePair, gamma_screen: RationalFunction,
                            mu: RationalFunction) -> CheckEntry:
    m = f.dim
    g = f.induced_form
    gp = f.phi_pairing()
    phi_p = f.phi_p()
    proj = f.projector()
    xi_t = f.radical_tangent()
    nu = pair.nu
    mg2 = mu * mu * gamma_screen * gamma_screen
    coeff_a = nu - mg2 * 2
    coeff_b = mg2 * 4 - nu
    half = rf("1/2")
    eb = f.eta_bar.components
    ok = True
    for a in range(m):
        for b in range(m):
            for c in range(m):
                rhs = proj.column(a).scale(
                    coeff_a * g.entry(b, c) - nu * eb[b] * eb[c])
                rhs = rhs - proj.column(b).scale(
                    coeff_a * g.entry(a, c) - nu * eb[a] * eb[c])
                rhs = rhs + phi_p.column(a).scale(coeff_b * gp.entry(b, c))
                rhs = rhs - phi_p.column(b).scale(coeff_b * gp.entry(a, c))
                rhs = rhs + xi_t.scale(
                    half * nu * (g.entry(b, c) * f.eta.components[a]
                                 - g.entry(a, c) * f.eta.components[b]))
                if not (curv.entries[a][b][c] - rhs).is_zero():
                    ok = False
    return residual_entry(
        "umbilic-curvature-form", "eq-19", ok,
        "the induced curvature collapses to the screen umbilical normal form")


def ricci_form_20_entry(f: SubmanifoldFrame, ric: MultilinearForm,
                        pair: CurvaturePair, gamma_screen: RationalFunction,
                        mu: RationalFunction, n: int) -> CheckEntry:
    g = f.induced_form
    nu = pair.nu
    mg2 = mu * mu * gamma_screen * gamma_screen
    k = nu * rf(f"{4 * n - 7}/2") - mg2 * (2 * (2 * n - 5))
    c = -(nu * (2 * (n - 1)))
    eb = f.eta_bar.components
    expected = MultilinearForm.from_function(
        f.tangent_frame, 2,
        lambda a, b: k * g.entry(a, b) + c * eb[a] * eb[b])
    return residual_entry(
        "umbilic-ricci-form", "eq-20", (ric - expected).is_zero(),
        "Ric = [((4n-7)/2) nu - 2(2n-5) mu^2 gamma^2] g - 2(n-1) nu eta x eta")


def ricci_symmetric_entry(ric: MultilinearForm) -> CheckEntry:
    return residual_entry(
        "induced-ricci-symmetric", "sec-3-ricci", ric.is_symmetric(),
        "closedness of tau makes the induced Ricci tensor symmetric")


def ricci_action(curv: CurvatureTensor, ric: MultilinearForm) -> MultilinearForm:
    """The derivation action of the curvature on the Ricci tensor."""
    frame = ric.frame
    dim = frame.dimension

    def entry(a: int, b: int, c: int, d: int) -> RationalFunction:
        first = sum((curv.entries[a][b][c].components[k] * ric.entry(k, d)
                     for k in range(dim)), ZERO)
        second = sum((curv.entries[a][b][d].components[k] * ric.entry(c, k)
                      for k in range(dim)), ZERO)
        return -(first + second)

    return MultilinearForm.from_function(frame, 4, entry)


def semisym_closed_23(f: SubmanifoldFrame, pair: CurvaturePair,
                      gamma_screen: RationalFunction, mu: RationalFunction,
                      n: int) -> MultilinearForm:
    g = f.induced_form
    nu = pair.nu
    mg2 = mu * mu * gamma_screen * gamma_screen
    factor = nu * (nu * rf("1/2") - mg2 * 2) * (2 * n - 5)
    eb = f.eta_bar.components

    def entry(a: int, b: int, c: int, d: int) -> RationalFunction:
        inner = (g.entry(a, d) * eb[b] * eb[c]
                 - g.entry(b, d) * eb[a] * eb[c]
                 + g.entry(a, c) * eb[b] * eb[d]
                 - g.entry(b, c) * eb[a] * eb[d])
        return factor * inner

    return MultilinearForm.from_function(f.tangent_frame, 4, entry)


def semisym_23_entry(f: SubmanifoldFrame, curv: CurvatureTensor,
                     ric: MultilinearForm, pair: CurvaturePair,
                     gamma_screen: RationalFunction, mu: RationalFunction,
                     n: int) -> CheckEntry:
    direct = ricci_action(curv, ric)
    closed = semisym_closed_23(f, pair, gamma_screen, mu, n)
    return residual_entry(
        "ricci-action-closed-form", "eq-23", (direct - closed).is_zero(),
        "the curvature action on Ric matches its closed form")


def eta_einstein_solve(f: SubmanifoldFrame, ric: MultilinearForm
                       ) -> tuple[RationalFunction, RationalFunction]:
    """Solve Ric = k g + c (eta x eta) exactly over the tangent frame."""
    g = f.induced_form
    eb = f.eta_bar.components
    rows = []
    rhs = []
    for a in range(f.dim):
        for b in range(f.dim):
            rows.append([g.entry(a, b), eb[a] * eb[b]])
            rhs.append(ric.entry(a, b))
    try:
        k, c = solve_unique(rows, rhs)
    except InconsistentSystem as exc:
        raise NotEtaEinstein(
            "the Ricci tensor is not a combination of the metric and the "
            "squared dual form") from exc
    except UnderdeterminedSystem as exc:
        raise NotEtaEinstein(
            "the metric and the squared dual form are linearly dependent "
            "on this frame") from exc
    return k, c
