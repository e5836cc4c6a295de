"""Exact dense linear algebra over a :class:`FieldSpec`.

Matrices are lists (or tuples) of row tuples holding raw field values.
Every subspace is stored by its reduced row echelon basis, so two
subspaces are equal exactly when their stored bases are equal.

Over GF(p) large eliminations run on ``int64`` numpy arrays, reducing
mod p after every row operation; entries stay below p**2 so nothing can
overflow as long as p < 2**31.  Over Q everything is ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch
from .exactfield import FieldSpec

# below this many entries the pure-Python elimination is faster
_NUMPY_MIN_ENTRIES = 256
_NUMPY_MAX_P = 2 ** 31


def _echelon_py_gf(rows, ncols, p):
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        prow = [v * inv % p for v in m[r]]
        m[r] = prow
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    m[i] = [(a - f * b) % p for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def _echelon_np_gf(rows, ncols, p):
    m = np.array(rows, dtype=np.int64).reshape(len(rows), ncols) % p
    nrows = m.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return [tuple(int(v) for v in row) for row in m[:r]], pivots


def _echelon_q(rows, ncols):
    """Incremental sparse elimination: each row is reduced against the
    current fully reduced basis and kept only if something survives."""
    basis = {}    # pivot column -> {column: value}, pivot entry 1
    for row in rows:
        v = {c: x for c, x in enumerate(row) if x}
        for pc in sorted(c for c in v if c in basis):
            f = v.get(pc)
            if f:
                for c, x in basis[pc].items():
                    y = v.get(c, 0) - f * x
                    if y:
                        v[c] = y
                    else:
                        v.pop(c, None)
        if not v:
            continue
        lead = min(v)
        inv = 1 / v[lead]
        v = {c: x * inv for c, x in v.items()}
        for other in basis.values():
            f = other.get(lead)
            if f:
                for c, x in v.items():
                    y = other.get(c, 0) - f * x
                    if y:
                        other[c] = y
                    else:
                        other.pop(c, None)
        basis[lead] = v
    pivots = sorted(basis)
    zero = Fraction(0)
    out = []
    for pc in pivots:
        r = [zero] * ncols
        for c, x in basis[pc].items():
            r[c] = Fraction(x)
        out.append(tuple(r))
    return out, pivots


def echelon(rows: Sequence[Sequence], ncols: int, field: FieldSpec):
    """Return ``(nonzero rref rows, pivot columns)``."""
    rows = [r for r in rows if any(r)]
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)}, expected {ncols}")
    if not rows:
        return [], []
    if field.kind == "Q":
        return _echelon_q(rows, ncols)
    if len(rows) * ncols >= _NUMPY_MIN_ENTRIES and field.p < _NUMPY_MAX_P:
        return _echelon_np_gf(rows, ncols, field.p)
    return _echelon_py_gf(rows, ncols, field.p)


def rref(rows: Sequence[Sequence], field: FieldSpec, ncols: int | None = None):
    """Reduced row echelon form, padded with zero rows, and the rank."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, piv = echelon(rows, ncols, field)
    zero_row = (field.zero,) * ncols
    return red + [zero_row] * (len(rows) - len(red)), len(piv)


def rank(rows, ncols: int, field: FieldSpec) -> int:
    return len(echelon(rows, ncols, field)[1])


def _null_basis(red, pivots, ncols, field):
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = field.neg(row[f])
        basis.append(v)
    return basis


def kernel(rows: Sequence[Sequence], ncols: int, field: FieldSpec) -> Subspace:
    """Right null space ``{v : M v = 0}`` of a matrix with ``ncols`` columns."""
    red, piv = echelon(rows, ncols, field)
    return Subspace.span(field, ncols, _null_basis(red, piv, ncols, field))


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int, field: FieldSpec):
    """One solution of ``M v = rhs`` as a tuple, or None if inconsistent."""
    if len(rows) != len(rhs):
        raise DimensionMismatch("right-hand side length differs from row count")
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    red, piv = echelon(aug, ncols + 1, field)
    if piv and piv[-1] == ncols:
        return None
    v = [field.zero] * ncols
    for row, pc in zip(red, piv):
        v[pc] = row[ncols]
    return tuple(v)


def transpose(rows: Sequence[Sequence], ncols: int | None = None):
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return [tuple(r[j] for r in rows) for j in range(ncols)]


def mat_vec(rows, v, field: FieldSpec):
    out = []
    for r in rows:
        s = field.zero
        for a, b in zip(r, v):
            if a and b:
                s += a * b
        out.append(s if field.kind == "Q" else s % field.p)
    return tuple(out)


def mat_mul(a, b, field: FieldSpec):
    bt = transpose(b)
    return [mat_vec(bt, row, field) for row in a]


def vec_add(u, v, field: FieldSpec):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(u, v, field: FieldSpec):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(c, v, field: FieldSpec):
    return tuple(field.mul(c, a) for a in v)


def dot(u, v, field: FieldSpec):
    s = field.zero
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s if field.kind == "Q" else s % field.p


class Subspace:
    """A subspace of ``field**ambient_dim`` held by its canonical rref basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors: Iterable) -> Subspace:
        red, piv = echelon(list(vectors), ambient_dim, field)
        return cls(field, ambient_dim, red, piv)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> Subspace:
        basis = []
        for i in range(ambient_dim):
            v = [field.zero] * ambient_dim
            v[i] = field.one
            basis.append(tuple(v))
        return cls(field, ambient_dim, basis, range(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def _check(self, other: Subspace):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(
                f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")
        if other.field != self.field:
            raise DimensionMismatch(f"fields {self.field} and {other.field}")

    def coordinates(self, v):
        """Coordinates of ``v`` in the stored basis, or None if ``v`` is outside."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        f = self.field
        coeffs = tuple(v[p] for p in self.pivots)
        resid = list(v)
        for c, row in zip(coeffs, self.basis):
            if c:
                for k, b in enumerate(row):
                    if b:
                        resid[k] = f.sub(resid[k], f.mul(c, b))
        return None if any(resid) else coeffs

    def contains(self, v) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v):
        return self.contains(v)

    def issubspace(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    __le__ = issubspace

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def annihilator(self) -> Subspace:
        """Functionals (as coordinate vectors) vanishing on this subspace."""
        return kernel(self.basis, self.ambient_dim, self.field)

    def intersect(self, other: Subspace) -> Subspace:
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient_dim)
        f = self.field
        constraints = other.annihilator().basis
        if not constraints:
            return self
        # a in ker(N S^T)  <=>  a^T S lies in other
        sys_rows = [tuple(dot(n, s, f) for s in self.basis) for n in constraints]
        coeffs = kernel(sys_rows, self.dim, f)
        vecs = []
        for a in coeffs.basis:
            v = [f.zero] * self.ambient_dim
            for c, s in zip(a, self.basis):
                if c:
                    for k, b in enumerate(s):
                        if b:
                            v[k] = f.add(v[k], f.mul(c, b))
            vecs.append(v)
        return Subspace.span(f, self.ambient_dim, vecs)

    __and__ = intersect

    def equals(self, other: Subspace) -> bool:
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"


def subspace_ops(op: str, s: Subspace, t):
    """Dispatcher over sum / intersect / contains / equals."""
    if op == "sum":
        return s + t
    if op == "intersect":
        return s & t
    if op == "contains":
        if isinstance(t, Subspace):
            return t.issubspace(s)
        return s.contains(t)
    if op == "equals":
        s._check(t)
        return s == t
    raise ValueError(f"unknown subspace operation {op!r}")


class SpanBuilder:
    """Accumulates vectors and keeps the span in echelon form.

    Vectors are buffered and folded into the basis ``chunk`` at a time,
    which keeps the large eliminations on the numpy path for GF(p).
    """

    def __init__(self, field: FieldSpec, ambient_dim: int, chunk: int = 2048):
        self.field = field
        self.ambient_dim = ambient_dim
        self.chunk = chunk
        self._basis: list = []
        self._pivots: list = []
        self._pending: list = []

    def add(self, v):
        self._pending.append(tuple(v))
        if len(self._pending) >= self.chunk:
            self.flush()

    def extend(self, vectors):
        for v in vectors:
            self.add(v)

    def flush(self):
        if self._pending:
            self._basis, self._pivots = echelon(
                self._basis + self._pending, self.ambient_dim, self.field)
            self._pending = []

    @property
    def dim(self) -> int:
        self.flush()
        return len(self._basis)

    def subspace(self) -> Subspace:
        self.flush()
        return Subspace(self.field, self.ambient_dim, self._basis, self._pivots)
