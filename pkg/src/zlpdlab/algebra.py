"""Finite-dimensional associative algebras given by structure constants.

An algebra of dimension n over a field F has basis b_0, ..., b_{n-1} and
products ``b_i b_j = sum_k c[i][j][k] b_k``.  Elements are coordinate
tuples of raw field values.  Associativity (and the unit axioms, when a
unit is supplied) are checked when the algebra is built.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Sequence

from .errors import (
    AssociativityError,
    BadName,
    BadParams,
    DimensionMismatch,
    MissingUnit,
    UnsupportedCharacteristic,
)
from .exactfield import QQ, FieldSpec, GF
from .linalg import Subspace, kernel, solve


class Verdict(enum.Enum):
    CertifiedYes = "CertifiedYes"
    CertifiedNo = "CertifiedNo"
    Unknown = "Unknown"

    def __str__(self):
        return self.value


def _finish(field: FieldSpec, acc) -> tuple:
    if field.kind == "Q":
        return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in acc)
    p = field.p
    return tuple(x % p for x in acc)


class Algebra:
    """Associative algebra over ``field`` with structure tensor ``c[i][j][k]``."""

    def __init__(self, field: FieldSpec, structure, unit=None, labels=None,
                 check: bool = True):
        n = len(structure)
        if n < 1:
            raise DimensionMismatch("an algebra needs dimension at least 1")
        self.field = field
        self.dim = n
        prod = []
        for i, row in enumerate(structure):
            if len(row) != n:
                raise DimensionMismatch(f"structure row {i} has length {len(row)}")
            prow = []
            for j, vec in enumerate(row):
                if len(vec) != n:
                    raise DimensionMismatch(f"structure entry ({i},{j}) has length {len(vec)}")
                prow.append(field.vector(vec))
            prod.append(tuple(prow))
        self._prod = tuple(prod)
        self._sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(v) if c) for v in row)
            for row in self._prod)
        self.unit = None if unit is None else field.vector(unit)
        if self.unit is not None and len(self.unit) != n:
            raise DimensionMismatch("unit has the wrong length")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise DimensionMismatch("labels have the wrong length")
        self.labels = labels
        if check:
            self.check_associativity()
            if self.unit is not None:
                self.check_unit()

    # -- basic element handling -------------------------------------------

    @property
    def structure(self):
        return self._prod

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis(self, i: int) -> tuple:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return tuple(v)

    def basis_vectors(self):
        return [self.basis(i) for i in range(self.dim)]

    def index(self, label: str) -> int:
        if self.labels is None or label not in self.labels:
            raise KeyError(label)
        return self.labels.index(label)

    def element(self, coeffs=None, **kw) -> tuple:
        """Build an element from ``{label: coefficient}`` or keyword labels."""
        coeffs = dict(coeffs or {}, **kw)
        v = list(self.zero())
        for lab, c in coeffs.items():
            i = lab if isinstance(lab, int) else self.index(lab)
            v[i] = self.field.add(v[i], self.field.coerce(c))
        return tuple(v)

    def __getitem__(self, label: str) -> tuple:
        return self.basis(self.index(label))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"b{i}"

    def format(self, v) -> str:
        terms = []
        for i, c in enumerate(v):
            if c:
                lab = self.label(i)
                terms.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(terms) if terms else "0"

    def _check_vec(self, v):
        if len(v) != self.dim:
            raise DimensionMismatch(f"element of length {len(v)} in an algebra of dim {self.dim}")

    # -- products ----------------------------------------------------------

    def multiply(self, a, b) -> tuple:
        self._check_vec(a)
        self._check_vec(b)
        acc = [0] * self.dim
        bnz = [(j, bj) for j, bj in enumerate(b) if bj]
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = self._sparse[i]
            for j, bj in bnz:
                t = ai * bj
                for k, c in row[j]:
                    acc[k] += t * c
        return _finish(self.field, acc)

    def basis_product(self, i: int, j: int) -> tuple:
        return self._prod[i][j]

    def commutator(self, a, b) -> tuple:
        f = self.field
        return tuple(f.sub(x, y) for x, y in zip(self.multiply(a, b), self.multiply(b, a)))

    def jordan_product(self, a, b) -> tuple:
        """The symmetrized product ``ab + ba``."""
        f = self.field
        return tuple(f.add(x, y) for x, y in zip(self.multiply(a, b), self.multiply(b, a)))

    def power(self, a, e: int) -> tuple:
        if e < 1:
            if self.unit is None:
                raise MissingUnit("zeroth power needs a unit")
            return self.unit
        r = a
        for _ in range(e - 1):
            r = self.multiply(r, a)
        return r

    def left_matrix(self, x):
        """Matrix of ``y -> x y``; column j is ``x b_j``."""
        cols = [self.multiply(x, self.basis(j)) for j in range(self.dim)]
        return [tuple(col[i] for col in cols) for i in range(self.dim)]

    def right_matrix(self, x):
        """Matrix of ``y -> y x``."""
        cols = [self.multiply(self.basis(j), x) for j in range(self.dim)]
        return [tuple(col[i] for col in cols) for i in range(self.dim)]

    # -- axioms ------------------------------------------------------------

    def check_associativity(self):
        n = self.dim
        for i, j, k in iproduct(range(n), repeat=3):
            left = self.multiply(self._prod[i][j], self.basis(k))
            right = self.multiply(self.basis(i), self._prod[j][k])
            if left != right:
                raise AssociativityError(
                    f"(b{i} b{j}) b{k} != b{i} (b{j} b{k}) for basis triple "
                    f"({self.label(i)}, {self.label(j)}, {self.label(k)})", (i, j, k))

    def check_unit(self):
        for i in range(self.dim):
            b = self.basis(i)
            if self.multiply(self.unit, b) != b or self.multiply(b, self.unit) != b:
                raise AssociativityError(
                    f"unit does not act as identity on {self.label(i)}", (i,))

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self._prod[i][j] == self._prod[j][i]
                   for i in range(n) for j in range(i + 1, n))

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.field == other.field and self._prod == other._prod
                and self.unit == other.unit)

    def __hash__(self):
        return hash((self.field, self._prod, self.unit))

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field})"

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def span(self, vectors) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)


# -- module-level operations ------------------------------------------------

def multiply(A: Algebra, a, b) -> tuple:
    return A.multiply(a, b)


def commutator(A: Algebra, a, b) -> tuple:
    return A.commutator(a, b)


def span_product(A: Algebra, S: Subspace, T: Subspace, mode: str = "assoc") -> Subspace:
    """Span of all products ``s t`` (``mode="assoc"``) or ``[s, t]`` (``"lie"``)."""
    for X in (S, T):
        if X.ambient_dim != A.dim:
            raise DimensionMismatch("subspace lives in the wrong ambient space")
    if mode == "assoc":
        op = A.multiply
    elif mode == "lie":
        op = A.commutator
    else:
        raise ValueError(f"unknown product mode {mode!r}")
    return A.span(op(s, t) for s in S.basis for t in T.basis)


def lie_span(A: Algebra) -> Subspace:
    """``[A, A]``, the span of all commutators."""
    n = A.dim
    return A.span(A.commutator(A.basis(i), A.basis(j))
                  for i in range(n) for j in range(i + 1, n))


def subalgebra_closure(A: Algebra, S: Subspace) -> Subspace:
    while True:
        nxt = S + span_product(A, S, S, "assoc")
        if nxt.dim == S.dim:
            return S
        S = nxt


def ideal_closure(A: Algebra, S: Subspace) -> Subspace:
    full = A.full()
    while True:
        nxt = S + span_product(A, full, S) + span_product(A, S, full)
        if nxt.dim == S.dim:
            return S
        S = nxt


def commutator_ideal(A: Algebra) -> Subspace:
    return ideal_closure(A, lie_span(A))


@dataclass(frozen=True)
class LieCore:
    commutators: Subspace   # [A, A]
    L: Subspace             # [[A, A], [A, A]]
    algL: Subspace          # subalgebra generated by L
    generates: bool         # algL == A


def lie_core(A: Algebra) -> LieCore:
    AA = lie_span(A)
    L = span_product(A, AA, AA, "lie")
    algL = subalgebra_closure(A, L)
    return LieCore(AA, L, algL, algL.is_full())


def _commutator_columns(A: Algebra):
    """``comm[j][i] = [b_j, b_i]``."""
    n = A.dim
    return [[A.commutator(A.basis(j), A.basis(i)) for i in range(n)] for j in range(n)]


def centralizer(A: Algebra, x) -> Subspace:
    """``{z : [z, x] = 0}``."""
    cols = [A.commutator(A.basis(j), x) for j in range(A.dim)]
    rows = [tuple(col[k] for col in cols) for k in range(A.dim)]
    return kernel(rows, A.dim, A.field)


def center(A: Algebra) -> Subspace:
    n = A.dim
    comm = _commutator_columns(A)
    rows = [tuple(comm[j][i][k] for j in range(n)) for i in range(n) for k in range(n)]
    return kernel(rows, n, A.field)


def left_traces(A: Algebra) -> tuple:
    """``tr(L_{b_k})`` for each basis element."""
    f = A.field
    out = []
    for k in range(A.dim):
        t = f.zero
        for j in range(A.dim):
            t = f.add(t, A.basis_product(k, j)[j])
        out.append(t)
    return tuple(out)


def trace_form_kernel(A: Algebra) -> Subspace:
    """``{x : tr(L_{xy}) = 0 for every y}``; always an ideal containing the radical."""
    f = A.field
    n = A.dim
    t = left_traces(A)
    # gram[i][j] = tr(L_{b_i b_j}), symmetric
    gram = [tuple(sum((f.mul(c, t[k]) for k, c in enumerate(A.basis_product(i, j))), f.zero)
                  for j in range(n)) for i in range(n)]
    if f.kind == "GF":
        gram = [tuple(v % f.p for v in row) for row in gram]
    return kernel(gram, n, f)


def is_nilpotent_subspace(A: Algebra, S: Subspace) -> bool:
    """Whether some power ``S^k`` of the subspace is zero."""
    P = S
    while P.dim:
        nxt = span_product(A, P, S)
        if nxt.dim == P.dim and nxt == P:
            return False
        P = nxt
    return True


def radical(A: Algebra) -> Subspace:
    """Jacobson radical via the trace form.

    The trace-form kernel is always an ideal containing the radical.  In
    characteristic 0 or p > n it equals the radical.  For smaller p the
    kernel is still returned when it is a nilpotent ideal, since it is then
    contained in (hence equal to) the radical; otherwise the criterion does
    not apply and :class:`UnsupportedCharacteristic` is raised.
    """
    if A.unit is None:
        raise MissingUnit("the trace-form radical criterion needs a unital algebra")
    K = trace_form_kernel(A)
    p = A.field.characteristic
    if p == 0 or p > A.dim:
        return K
    if is_nilpotent_subspace(A, K):
        return K
    raise UnsupportedCharacteristic(
        f"trace-form criterion needs char 0 or p > {A.dim}; got p = {p} and a "
        "non-nilpotent trace-form kernel")


def is_semiprime(A: Algebra) -> bool:
    return radical(A).dim == 0


def is_simple(A: Algebra) -> Verdict:
    if A.unit is None:
        raise MissingUnit("simplicity check needs a unital algebra")
    n = A.dim
    Z = center(A)
    candidates = [A.basis(i) for i in range(n)] + list(Z.basis)
    for v in candidates:
        I = ideal_closure(A, A.span([v]))
        if 0 < I.dim < n:
            return Verdict.CertifiedNo
    if radical(A).dim:
        return Verdict.CertifiedNo
    if Z.dim == 1:
        return Verdict.CertifiedYes
    return Verdict.Unknown


def is_ideal(A: Algebra, S: Subspace) -> bool:
    full = A.full()
    return span_product(A, full, S).issubspace(S) and span_product(A, S, full).issubspace(S)


# -- constructors -----------------------------------------------------------

def _zero_tensor(field, n):
    z = field.zero
    return [[[z] * n for _ in range(n)] for _ in range(n)]


def matrix_algebra(n: int, field: FieldSpec = QQ) -> Algebra:
    """Full matrix algebra on matrix units ``e_ij`` (index ``i*n + j``)."""
    if n < 1:
        raise BadParams("matrix size must be positive")
    d = n * n
    c = _zero_tensor(field, d)
    for i, j, l in iproduct(range(n), repeat=3):
        c[i * n + j][j * n + l][i * n + l] = field.one
    unit = [field.one if (k // n == k % n) else field.zero for k in range(d)]
    labels = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return Algebra(field, c, unit, labels)


def triangular_algebra(n: int, field: FieldSpec = QQ) -> Algebra:
    """Upper triangular matrices on units ``e_ij``, ``i <= j``."""
    if n < 1:
        raise BadParams("matrix size must be positive")
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {ij: k for k, ij in enumerate(idx)}
    d = len(idx)
    c = _zero_tensor(field, d)
    for (i, j) in idx:
        for (k, l) in idx:
            if j == k:
                c[pos[(i, j)]][pos[(k, l)]][pos[(i, l)]] = field.one
    unit = [field.one if i == j else field.zero for (i, j) in idx]
    labels = [f"e{i + 1}{j + 1}" for (i, j) in idx]
    return Algebra(field, c, unit, labels)


def abelian_algebra(n: int, field: FieldSpec = QQ) -> Algebra:
    """n-dimensional algebra with identically zero product (no unit)."""
    if n < 1:
        raise BadParams("dimension must be positive")
    return Algebra(field, _zero_tensor(field, n), None, [f"a{i + 1}" for i in range(n)])


def diagonal_algebra(n: int, field: FieldSpec = QQ) -> Algebra:
    """``F^n`` with componentwise product (orthogonal idempotents)."""
    if n < 1:
        raise BadParams("dimension must be positive")
    c = _zero_tensor(field, n)
    for i in range(n):
        c[i][i][i] = field.one
    return Algebra(field, c, [field.one] * n, [f"d{i + 1}" for i in range(n)])


GRASSMANN_LABELS = ("1", "x1", "x2", "x1x2", "y1", "y2", "y1y2")


def grassmann_example7(field: FieldSpec = QQ) -> Algebra:
    """Unital hull of two Grassmann algebras on two generators each.

    Basis ``1, x1, x2, x1x2, y1, y2, y1y2``; ``x1 x2 = -x2 x1 = x1x2``,
    ``y1 y2 = -y2 y1 = y1y2``, every other product of non-unit basis
    elements vanishes.
    """
    one, neg = field.one, field.neg(field.one)
    c = _zero_tensor(field, 7)
    for i in range(7):
        c[0][i][i] = one
        c[i][0][i] = one
    c[1][2][3], c[2][1][3] = one, neg
    c[4][5][6], c[5][4][6] = one, neg
    unit = [one] + [field.zero] * 6
    return Algebra(field, c, unit, GRASSMANN_LABELS)


def char2_truncated(N: int, field: FieldSpec | None = None) -> Algebra:
    """``GF(2)[X]/(X^N)`` on the monomial basis ``1, X, ..., X^(N-1)``."""
    if field is None:
        field = GF(2)
    if field.characteristic != 2:
        raise BadParams("char2_truncated lives over GF(2)")
    if N < 7:
        raise BadParams("char2_truncated needs N >= 7 (the witness uses X^5 and X^3 X^3)")
    c = _zero_tensor(field, N)
    for i in range(N):
        for j in range(N - i):
            c[i][j][i + j] = field.one
    unit = [field.one] + [field.zero] * (N - 1)
    labels = ["1", "X"] + [f"X{k}" for k in range(2, N)]
    return Algebra(field, c, unit, labels)


def direct_product(A: Algebra, B: Algebra) -> Algebra:
    if A.field != B.field:
        raise DimensionMismatch("factors live over different fields")
    f = A.field
    n, m = A.dim, B.dim
    d = n + m
    c = _zero_tensor(f, d)
    for i in range(n):
        for j in range(n):
            c[i][j][:n] = A.basis_product(i, j)
    for i in range(m):
        for j in range(m):
            c[n + i][n + j][n:] = B.basis_product(i, j)
    if A.unit is not None and B.unit is not None:
        unit = list(A.unit) + list(B.unit)
    else:
        unit = None
    labels = [f"({A.label(i)},0)" for i in range(n)] + [f"(0,{B.label(i)})" for i in range(m)]
    return Algebra(f, c, unit, labels)


def opposite(A: Algebra) -> Algebra:
    n = A.dim
    c = [[list(A.basis_product(j, i)) for j in range(n)] for i in range(n)]
    return Algebra(A.field, c, A.unit, A.labels)


def subalgebra(A: Algebra, vectors: Sequence, labels=None) -> Algebra:
    """The subalgebra spanned by ``vectors``, with those vectors as its basis.

    The vectors must be independent and their span closed under products.
    Also serves as a change of basis when the vectors span all of ``A``.
    """
    f = A.field
    vectors = [tuple(v) for v in vectors]
    k = len(vectors)
    if A.span(vectors).dim != k:
        raise BadParams("basis vectors are linearly dependent")
    cols = [tuple(v[r] for v in vectors) for r in range(A.dim)]

    def coords(w):
        sol = solve(cols, w, k, f)
        if sol is None:
            raise BadParams("span of the given vectors is not closed under multiplication")
        return sol

    c = [[coords(A.multiply(vi, vj)) for vj in vectors] for vi in vectors]
    unit = None
    if A.unit is not None:
        unit = solve(cols, A.unit, k, f)
    return Algebra(f, c, unit, labels)


BUILTIN_NAMES = ("matrix", "triangular", "abelian", "diagonal", "grassmann_example7",
                 "char2_truncated", "direct_product", "opposite")


def builtin(name: str, *params, field: FieldSpec | None = None) -> Algebra:
    """Construct one of the named example algebras."""
    def one_int():
        if len(params) != 1 or not isinstance(params[0], int) or isinstance(params[0], bool):
            raise BadParams(f"{name} takes one integer parameter")
        return params[0]

    if name == "char2_truncated":
        return char2_truncated(one_int(), field)
    f = field or QQ
    if name == "matrix":
        return matrix_algebra(one_int(), f)
    if name == "triangular":
        return triangular_algebra(one_int(), f)
    if name == "abelian":
        return abelian_algebra(one_int(), f)
    if name == "diagonal":
        return diagonal_algebra(one_int(), f)
    if name == "grassmann_example7":
        if params:
            raise BadParams("grassmann_example7 takes no parameters")
        return grassmann_example7(f)
    if name == "direct_product":
        if len(params) != 2 or not all(isinstance(p, Algebra) for p in params):
            raise BadParams("direct_product takes two algebras")
        return direct_product(*params)
    if name == "opposite":
        if len(params) != 1 or not isinstance(params[0], Algebra):
            raise BadParams("opposite takes one algebra")
        return opposite(params[0])
    raise BadName(f"unknown builtin algebra {name!r}")


_SHORT = {"matrix": "matrix", "triangular": "triangular", "abelian": "abelian",
          "diagonal": "diagonal", "char2_truncated": "char2_truncated"}


def parse_builtin(expr: str, field: FieldSpec | None = None) -> Algebra:
    """Parse names such as ``matrix2``, ``grassmann7``, ``matrix2*matrix2``
    or ``opposite(triangular2)``."""
    expr = expr.strip()
    depth = 0
    for pos, ch in enumerate(expr):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            return direct_product(parse_builtin(expr[:pos], field),
                                  parse_builtin(expr[pos + 1:], field))
    if expr.startswith("opposite(") and expr.endswith(")"):
        return opposite(parse_builtin(expr[len("opposite("):-1], field))
    if expr in ("grassmann7", "grassmann_example7"):
        return grassmann_example7(field or QQ)
    for prefix in sorted(_SHORT, key=len, reverse=True):
        if expr.startswith(prefix):
            rest = expr[len(prefix):].strip().lstrip("_")
            if not rest.isdigit():
                raise BadParams(f"{prefix} needs an integer size, got {rest!r}")
            return builtin(_SHORT[prefix], int(rest), field=field)
    raise BadName(f"unknown builtin algebra {expr!r}")
