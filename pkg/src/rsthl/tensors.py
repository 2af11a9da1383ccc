"""Frame-indexed multilinear algebra over the exact scalar field.

Tensors are stored as explicit component tables against a fixed labeled
frame (dimension at most five here), so every operation reduces to field
arithmetic on finitely many entries.  The linear solvers use fraction-free
(Bareiss-style) elimination: each update is a two-term cross-multiplication
divided by the previous pivot, which keeps intermediate entries small and
every division exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import (
    DegenerateMetric,
    InconsistentSystem,
    ScalarDomainError,
    UnderdeterminedSystem,
)
from .scalars import ONE, ZERO, RationalFunction, rf


@dataclass(frozen=True)
class Frame:
    """An ordered tuple of distinct basis labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("a frame needs at least one label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate frame labels: {self.labels}")

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no frame label {label!r}") from None

    def basis_vector(self, i: int) -> "Vector":
        comps = [ZERO] * self.dimension
        comps[i] = ONE
        return Vector(self, tuple(comps))


@dataclass(frozen=True)
class Vector:
    frame: Frame
    components: tuple[RationalFunction, ...]

    def __post_init__(self):
        if len(self.components) != self.frame.dimension:
            raise ValueError("component count does not match the frame")

    @classmethod
    def from_map(cls, frame: Frame, entries: dict) -> "Vector":
        comps = [ZERO] * frame.dimension
        for label, value in entries.items():
            comps[frame.index(label)] = rf(value)
        return cls(frame, tuple(comps))

    @classmethod
    def zero(cls, frame: Frame) -> "Vector":
        return cls(frame, (ZERO,) * frame.dimension)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def scale(self, s) -> "Vector":
        s = rf(s)
        return Vector(self.frame, tuple(s * c for c in self.components))

    def __add__(self, other: "Vector") -> "Vector":
        _same_frame(self, other)
        return Vector(
            self.frame,
            tuple(a + b for a, b in zip(self.components, other.components)),
        )

    def __sub__(self, other: "Vector") -> "Vector":
        _same_frame(self, other)
        return Vector(
            self.frame,
            tuple(a - b for a, b in zip(self.components, other.components)),
        )

    def __neg__(self) -> "Vector":
        return Vector(self.frame, tuple(-c for c in self.components))

    def __str__(self):
        parts = [
            f"{c}*{label}"
            for c, label in zip(self.components, self.frame.labels)
            if not c.is_zero()
        ]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Covector:
    frame: Frame
    components: tuple[RationalFunction, ...]

    def __post_init__(self):
        if len(self.components) != self.frame.dimension:
            raise ValueError("component count does not match the frame")

    @classmethod
    def from_map(cls, frame: Frame, entries: dict) -> "Covector":
        comps = [ZERO] * frame.dimension
        for label, value in entries.items():
            comps[frame.index(label)] = rf(value)
        return cls(frame, tuple(comps))

    def __call__(self, v: Vector) -> RationalFunction:
        _same_frame(self, v)
        out = ZERO
        for a, b in zip(self.components, v.components):
            out = out + a * b
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def scale(self, s) -> "Covector":
        s = rf(s)
        return Covector(self.frame, tuple(s * c for c in self.components))


@dataclass(frozen=True)
class MultilinearForm:
    """A covariant tensor of arity 2, 3, or 4 as a flat component table.

    Components are stored row-major: entry(i1, ..., ik) sits at the flat
    offset ((i1*d + i2)*d + ...) for frame dimension d.
    """

    frame: Frame
    arity: int
    entries: tuple[RationalFunction, ...]

    def __post_init__(self):
        if self.arity not in (2, 3, 4):
            raise ValueError("supported arities are 2, 3, 4")
        if len(self.entries) != self.frame.dimension ** self.arity:
            raise ValueError("entry count does not match frame and arity")

    @classmethod
    def from_function(
        cls, frame: Frame, arity: int, fn: Callable[..., RationalFunction]
    ) -> "MultilinearForm":
        dim = frame.dimension
        idx = [0] * arity
        flat = []
        total = dim ** arity
        for off in range(total):
            rem = off
            for s in range(arity - 1, -1, -1):
                idx[s] = rem % dim
                rem //= dim
            flat.append(fn(*idx))
        return cls(frame, arity, tuple(flat))

    @classmethod
    def zero(cls, frame: Frame, arity: int) -> "MultilinearForm":
        return cls(frame, arity, (ZERO,) * frame.dimension ** arity)

    def _offset(self, idx: Sequence[int]) -> int:
        off = 0
        for i in idx:
            off = off * self.frame.dimension + i
        return off

    def entry(self, *idx: int) -> RationalFunction:
        if len(idx) != self.arity:
            raise ValueError("index count does not match arity")
        return self.entries[self._offset(idx)]

    def value(self, *vectors: Vector) -> RationalFunction:
        if len(vectors) != self.arity:
            raise ValueError("argument count does not match arity")
        dim = self.frame.dimension
        table = self.entries
        for v in reversed(vectors):
            _same_frame(self, v)
            comps = v.components
            out = []
            for base in range(0, len(table), dim):
                acc = ZERO
                for i in range(dim):
                    t = table[base + i]
                    if not t.is_zero():
                        acc = acc + t * comps[i]
                out.append(acc)
            table = out
        return table[0]

    def __add__(self, other: "MultilinearForm") -> "MultilinearForm":
        self._compatible(other)
        return MultilinearForm(
            self.frame,
            self.arity,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "MultilinearForm") -> "MultilinearForm":
        self._compatible(other)
        return MultilinearForm(
            self.frame,
            self.arity,
            tuple(a - b for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "MultilinearForm":
        return MultilinearForm(self.frame, self.arity, tuple(-c for c in self.entries))

    def scale(self, s) -> "MultilinearForm":
        s = rf(s)
        return MultilinearForm(self.frame, self.arity, tuple(s * c for c in self.entries))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.entries)

    def is_symmetric(self) -> bool:
        if self.arity != 2:
            raise ValueError("symmetry test is for arity 2")
        dim = self.frame.dimension
        return all(
            self.entries[i * dim + j] == self.entries[j * dim + i]
            for i in range(dim)
            for j in range(i)
        )

    def pull_slots(self, op: "LinearOperator", slots: Iterable[int]) -> "MultilinearForm":
        """Substitute op into the given slots: T'(.., X_s, ..) = T(.., op X_s, ..)."""
        _same_frame(self, op)
        dim = self.frame.dimension
        table = list(self.entries)
        for slot in slots:
            stride = dim ** (self.arity - 1 - slot)
            block = stride * dim
            out = [ZERO] * len(table)
            for base in range(0, len(table), block):
                for rest in range(stride):
                    cells = [table[base + a * stride + rest] for a in range(dim)]
                    for i in range(dim):
                        acc = ZERO
                        for a in range(dim):
                            m = op.matrix[a][i]
                            if not m.is_zero() and not cells[a].is_zero():
                                acc = acc + cells[a] * m
                        out[base + i * stride + rest] = acc
            table = out
        return MultilinearForm(self.frame, self.arity, tuple(table))

    def pull_all(self, op: "LinearOperator") -> "MultilinearForm":
        return self.pull_slots(op, range(self.arity))

    def _compatible(self, other: "MultilinearForm"):
        _same_frame(self, other)
        if self.arity != other.arity:
            raise ValueError("arity mismatch")

    def rows(self) -> list[list[RationalFunction]]:
        if self.arity != 2:
            raise ValueError("rows() is for arity 2")
        dim = self.frame.dimension
        return [list(self.entries[i * dim : (i + 1) * dim]) for i in range(dim)]


@dataclass(frozen=True)
class LinearOperator:
    """A (1,1) tensor; matrix[i][j] is the e_i coefficient of op(e_j)."""

    frame: Frame
    matrix: tuple[tuple[RationalFunction, ...], ...]

    def __post_init__(self):
        dim = self.frame.dimension
        if len(self.matrix) != dim or any(len(r) != dim for r in self.matrix):
            raise ValueError("matrix shape does not match the frame")

    @classmethod
    def identity(cls, frame: Frame) -> "LinearOperator":
        dim = frame.dimension
        return cls(
            frame,
            tuple(
                tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim)
            ),
        )

    @classmethod
    def zero(cls, frame: Frame) -> "LinearOperator":
        dim = frame.dimension
        return cls(frame, ((ZERO,) * dim,) * dim)

    @classmethod
    def from_columns(cls, frame: Frame, columns: Sequence[Vector]) -> "LinearOperator":
        if len(columns) != frame.dimension:
            raise ValueError("need one column per frame label")
        dim = frame.dimension
        return cls(
            frame,
            tuple(tuple(columns[j].components[i] for j in range(dim)) for i in range(dim)),
        )

    @classmethod
    def outer(cls, v: Vector, w: Covector) -> "LinearOperator":
        _same_frame(v, w)
        dim = v.frame.dimension
        return cls(
            v.frame,
            tuple(
                tuple(v.components[i] * w.components[j] for j in range(dim))
                for i in range(dim)
            ),
        )

    def column(self, j: int) -> Vector:
        return Vector(self.frame, tuple(row[j] for row in self.matrix))

    def apply(self, v: Vector) -> Vector:
        _same_frame(self, v)
        dim = self.frame.dimension
        out = []
        for i in range(dim):
            acc = ZERO
            row = self.matrix[i]
            for j in range(dim):
                if not row[j].is_zero() and not v.components[j].is_zero():
                    acc = acc + row[j] * v.components[j]
            out.append(acc)
        return Vector(self.frame, tuple(out))

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """Matrix of self after other: (self.compose(other))(v) = self(other(v))."""
        _same_frame(self, other)
        dim = self.frame.dimension
        rows = []
        for i in range(dim):
            row = []
            for j in range(dim):
                acc = ZERO
                for k in range(dim):
                    a = self.matrix[i][k]
                    b = other.matrix[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            rows.append(tuple(row))
        return LinearOperator(self.frame, tuple(rows))

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        _same_frame(self, other)
        return LinearOperator(
            self.frame,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.matrix, other.matrix)
            ),
        )

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        _same_frame(self, other)
        return LinearOperator(
            self.frame,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.matrix, other.matrix)
            ),
        )

    def __neg__(self) -> "LinearOperator":
        return LinearOperator(self.frame, tuple(tuple(-c for c in r) for r in self.matrix))

    def scale(self, s) -> "LinearOperator":
        s = rf(s)
        return LinearOperator(
            self.frame, tuple(tuple(s * c for c in r) for r in self.matrix)
        )

    def is_zero(self) -> bool:
        return all(c.is_zero() for row in self.matrix for c in row)

    def trace(self) -> RationalFunction:
        out = ZERO
        for i in range(self.frame.dimension):
            out = out + self.matrix[i][i]
        return out

    def rank(self) -> int:
        _, pivots = _echelon([list(r) for r in self.matrix], self.frame.dimension)
        return len(pivots)


def _same_frame(a, b):
    if a.frame != b.frame:
        raise ValueError("objects live on different frames")


# --- exact linear algebra -------------------------------------------------


def _echelon(rows: list[list[RationalFunction]], pivot_cols_limit: int):
    """Fraction-free forward elimination; pivots only in the first
    pivot_cols_limit columns.  Returns (matrix, pivot column list)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    prev = ONE
    r = 0
    for c in range(min(pivot_cols_limit, ncols)):
        p = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            factor = rows[i][c]
            for j in range(ncols):
                rows[i][j] = (rows[i][j] * pivot - factor * rows[r][j]) / prev
        prev = pivot
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def determinant(rows: Sequence[Sequence[RationalFunction]]) -> RationalFunction:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    m = [list(r) for r in rows]
    sign = 1
    prev = ONE
    for k in range(n):
        p = next((i for i in range(k, n) if not m[i][k].is_zero()), None)
        if p is None:
            return ZERO
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k]
            for j in range(k, n):
                m[i][j] = (m[i][j] * pivot - factor * m[k][j]) / prev
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _back_substitute(ech, pivots, n_unknowns, rhs_col, free_values=None):
    x = [ZERO] * n_unknowns
    if free_values:
        for col, val in free_values.items():
            x[col] = val
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        acc = ech[r][rhs_col]
        for j in range(pc + 1, n_unknowns):
            if not ech[r][j].is_zero() and not x[j].is_zero():
                acc = acc - ech[r][j] * x[j]
        x[pc] = acc / ech[r][pc]
    return tuple(x)


def solve_unique(
    a_rows: Sequence[Sequence[RationalFunction]],
    b: Sequence[RationalFunction],
) -> tuple[RationalFunction, ...]:
    """Solve A x = b, demanding exactly one solution."""
    n = len(a_rows[0])
    aug = [list(row) + [bv] for row, bv in zip(a_rows, b)]
    ech, pivots = _echelon(aug, n)
    for r in range(len(pivots), len(ech)):
        if not ech[r][n].is_zero():
            raise InconsistentSystem("linear system has no solution")
    if len(pivots) < n:
        raise UnderdeterminedSystem("linear system has a free variable")
    return _back_substitute(ech, pivots, n, n)


def solve_affine(
    a_rows: Sequence[Sequence[RationalFunction]],
    b: Sequence[RationalFunction],
):
    """Solve A x = b; returns (particular solution, kernel basis)."""
    n = len(a_rows[0])
    aug = [list(row) + [bv] for row, bv in zip(a_rows, b)]
    ech, pivots = _echelon(aug, n)
    for r in range(len(pivots), len(ech)):
        if not ech[r][n].is_zero():
            raise InconsistentSystem("linear system has no solution")
    particular = _back_substitute(ech, pivots, n, n)
    kernel = []
    pivot_set = set(pivots)
    zero_rhs = [[*row[:n], ZERO] for row in ech]
    for free in range(n):
        if free in pivot_set:
            continue
        basis = _back_substitute(
            zero_rhs,
            pivots,
            n,
            n,
            free_values={free: ONE},
        )
        kernel.append(basis)
    return particular, kernel


def matrix_inverse(
    rows: Sequence[Sequence[RationalFunction]],
) -> list[list[RationalFunction]]:
    n = len(rows)
    aug = [
        list(row) + [ONE if i == j else ZERO for j in range(n)]
        for i, row in enumerate(rows)
    ]
    ech, pivots = _echelon(aug, n)
    if len(pivots) < n:
        raise DegenerateMetric("matrix is singular")
    cols = [_back_substitute(ech, pivots, n, n + j) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def gram_inverse(form: MultilinearForm) -> MultilinearForm:
    """Exact inverse of a symmetric arity-2 form; DegenerateMetric if singular."""
    if form.arity != 2:
        raise ValueError("gram_inverse needs an arity-2 form")
    if not form.is_symmetric():
        raise ValueError("gram_inverse needs a symmetric form")
    inv = matrix_inverse(form.rows())
    dim = form.frame.dimension
    flat = tuple(inv[i][j] for i in range(dim) for j in range(dim))
    return MultilinearForm(form.frame, 2, flat)


def inertia(rows: Sequence[Sequence[Fraction]]) -> tuple[int, int, int]:
    """Signature (positive, negative, zero) of an exact symmetric matrix,
    computed by congruence diagonalization; no eigenvalues involved."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    pos = neg = zero = 0
    t = 0
    while t < n:
        p = next((i for i in range(t, n) if a[i][i] != 0), None)
        if p is None:
            pair = next(
                (
                    (i, j)
                    for i in range(t, n)
                    for j in range(i + 1, n)
                    if a[i][j] != 0
                ),
                None,
            )
            if pair is None:
                zero += n - t
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            continue
        if p != t:
            a[t], a[p] = a[p], a[t]
            for k in range(n):
                a[k][t], a[k][p] = a[k][p], a[k][t]
        d = a[t][t]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(t + 1, n):
            f = a[i][t] / d
            if f:
                for k in range(n):
                    a[i][k] -= f * a[t][k]
                for k in range(n):
                    a[k][i] -= f * a[k][t]
        t += 1
    return pos, neg, zero


def pick_regular_sample(
    must_not_vanish: Iterable[RationalFunction], start: int = 1
) -> Fraction:
    """Smallest integer >= start at which every given scalar is defined and
    nonzero; used to specialize mu before signature counting."""
    scalars = [s for s in must_not_vanish]
    for k in range(start, start + 1000):
        x = Fraction(k)
        try:
            if all(s.eval_at(x) != 0 for s in scalars):
                return x
        except ScalarDomainError:
            continue
    raise RuntimeError("no regular sample found in range")
