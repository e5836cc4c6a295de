"""Bilinear forms on an algebra and the zero Lie product determined test.

A bilinear form ``Phi(x, y) = x^T m y`` is stored as its n x n matrix;
spaces of forms live in ``F^(n*n)`` with ``m[i][j]`` at index ``i*n + j``.
The target space of a bilinear map is always reduced to the scalar field:
a vector-valued map satisfies a linear identity iff every functional of
it does.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product as iproduct

from .algebra import Algebra, Verdict, center, lie_core
from .errors import BudgetExceeded, CharacteristicTwo, DimensionMismatch, NotCertifiedSimple
from .exactfield import FieldSpec
from .linalg import SpanBuilder, Subspace, kernel, solve
from .report import CheckReport


class BilinearForm:
    """Scalar-valued bilinear form given by its Gram matrix."""

    __slots__ = ("field", "n", "m")

    def __init__(self, field: FieldSpec, m):
        self.field = field
        self.m = tuple(field.vector(row) for row in m)
        self.n = len(self.m)
        if any(len(row) != self.n for row in self.m):
            raise DimensionMismatch("form matrix must be square")

    @classmethod
    def from_vector(cls, field: FieldSpec, n: int, vec) -> BilinearForm:
        return cls(field, [vec[i * n:(i + 1) * n] for i in range(n)])

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> BilinearForm:
        return cls(field, [[field.zero] * n for _ in range(n)])

    @classmethod
    def from_entries(cls, A: Algebra, entries: dict) -> BilinearForm:
        """Build from ``{(label_x, label_y): value}`` on basis pairs; the rest is 0."""
        f = A.field
        m = [[f.zero] * A.dim for _ in range(A.dim)]
        for (a, b), v in entries.items():
            i = a if isinstance(a, int) else A.index(a)
            j = b if isinstance(b, int) else A.index(b)
            m[i][j] = f.coerce(v)
        return cls(f, m)

    def vector(self) -> tuple:
        return tuple(v for row in self.m for v in row)

    def __call__(self, x, y):
        s = 0
        ynz = [(k, b) for k, b in enumerate(y) if b]
        for l, a in enumerate(x):
            if a:
                row = self.m[l]
                for k, b in ynz:
                    c = row[k]
                    if c:
                        s += a * b * c
        if self.field.kind == "Q":
            return Fraction(s)
        return s % self.field.p

    def transpose(self) -> BilinearForm:
        return BilinearForm(self.field, [[self.m[j][i] for j in range(self.n)]
                                         for i in range(self.n)])

    def is_skew(self) -> bool:
        f = self.field
        return all(f.add(self.m[i][j], self.m[j][i]) == 0
                   for i in range(self.n) for j in range(self.n))

    def __add__(self, other):
        f = self.field
        return BilinearForm(f, [[f.add(a, b) for a, b in zip(r, s)]
                                for r, s in zip(self.m, other.m)])

    def __eq__(self, other):
        return isinstance(other, BilinearForm) and self.m == other.m and self.field == other.field

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"BilinearForm({[[str(v) for v in row] for row in self.m]})"


def forms(space: Subspace, n: int) -> list[BilinearForm]:
    return [BilinearForm.from_vector(space.field, n, v) for v in space.basis]


def _add_pair(row, u, v, n, scale=1):
    """Accumulate the coefficients of ``Phi(u, v)`` into ``row``."""
    vnz = [(k, b) for k, b in enumerate(v) if b]
    for l, a in enumerate(u):
        if a:
            base = l * n
            for k, b in vnz:
                row[base + k] += scale * a * b


def _skew_rows(field: FieldSpec, n: int):
    rows = []
    for i in range(n):
        for j in range(i, n):
            r = [0] * (n * n)
            r[i * n + j] += 1
            r[j * n + i] += 1
            rows.append(field.vector(r))
    return rows


def skew_space(field: FieldSpec, n: int) -> Subspace:
    return kernel(_skew_rows(field, n), n * n, field)


def cube_vanishing_space(A: Algebra) -> Subspace:
    """Skew forms whose cubic form ``x -> Phi(x^2, x)`` is the zero polynomial.

    The coefficient of the monomial attached to a multiset ``{a, b, c}`` of
    basis indices is the sum of ``Phi(b_i b_j, b_k)`` over the distinct
    orderings ``(i, j, k)`` of that multiset.
    """
    n, f = A.dim, A.field
    rows = _skew_rows(f, n)
    for a in range(n):
        for b in range(a, n):
            for c in range(b, n):
                r = [0] * (n * n)
                for i, j, k in set(permutations((a, b, c))):
                    for l, cc in A._sparse[i][j]:
                        r[l * n + k] += cc
                rows.append(f.vector(r))
    return kernel(rows, n * n, f)


def linearized_condition_space(A: Algebra) -> Subspace:
    """Skew forms with ``Phi(yz+zy, x) = Phi(z, xy+yx) + Phi(y, zx+xz)`` on basis triples."""
    n, f = A.dim, A.field
    rows = _skew_rows(f, n)
    sym = [[A.jordan_product(A.basis(i), A.basis(j)) for j in range(n)] for i in range(n)]
    for x, y, z in iproduct(range(n), repeat=3):
        r = [0] * (n * n)
        _add_pair(r, sym[y][z], A.basis(x), n)
        _add_pair(r, A.basis(z), sym[x][y], n, -1)
        _add_pair(r, A.basis(y), sym[z][x], n, -1)
        rows.append(f.vector(r))
    return kernel(rows, n * n, f)


def commutator_matrix(A: Algebra):
    """n x n^2 matrix of the linear map ``x (x) y -> [x, y]``."""
    n = A.dim
    cols = [A.commutator(A.basis(i), A.basis(j)) for i in range(n) for j in range(n)]
    return [tuple(col[k] for col in cols) for k in range(n)]


def commutator_kernel(A: Algebra) -> Subspace:
    return kernel(commutator_matrix(A), A.dim * A.dim, A.field)


def coboundary_space(A: Algebra) -> Subspace:
    """Forms ``tau([x, y])``: the row space of the commutator matrix."""
    return Subspace.span(A.field, A.dim * A.dim, commutator_matrix(A))


# -- commuting pairs ---------------------------------------------------------

@dataclass(frozen=True)
class Exhaustive:
    budget: int = 10 ** 6


@dataclass(frozen=True)
class Randomized:
    seed: int = 0
    samples: int = 2000
    stall_limit: int = 25
    box: int = 3


EXACT = "Exact"
LOWER_BOUND = "LowerBound"


@dataclass(frozen=True)
class PairSpan:
    W: Subspace
    status: str
    samples: int


def default_strategy(A: Algebra, budget: int = 10 ** 6):
    q = A.field.order
    if q is not None and q ** A.dim <= budget:
        return Exhaustive(budget)
    return Randomized()


def _projective_points(field: FieldSpec, n: int):
    """One nonzero vector per line: first nonzero coordinate equal to 1."""
    q = field.p
    for lead in range(n):
        head = (0,) * lead + (1,)
        for tail in iproduct(range(q), repeat=n - lead - 1):
            yield head + tail


class _Centralizers:
    """Fast repeated centralizer computation from precomputed brackets."""

    def __init__(self, A: Algebra):
        self.A = A
        n = A.dim
        # comm[i][j][k] = [b_j, b_i]_k  ->  row k, column j for generator i
        self.comm = [[A.commutator(A.basis(j), A.basis(i)) for j in range(n)]
                     for i in range(n)]

    def __call__(self, x) -> Subspace:
        n, f = self.A.dim, self.A.field
        rows = [[0] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if xi:
                for j, vec in enumerate(self.comm[i]):
                    for k, v in enumerate(vec):
                        if v:
                            rows[k][j] += xi * v
        return kernel([f.vector(r) for r in rows], n, f)


def _tensor(x, y, field: FieldSpec):
    out = [a * b for a in x for b in y]
    return field.vector(out)


def commuting_pair_span(A: Algebra, strategy=None) -> PairSpan:
    """Span ``W`` of the tensors ``x (x) y`` over commuting pairs.

    Exhaustive enumeration gives ``W`` exactly; random sampling gives a
    lower bound.  ``W`` is always inside the commutator kernel, which is
    checked here.
    """
    if strategy is None:
        strategy = default_strategy(A)
    f, n = A.field, A.dim
    K = commutator_kernel(A)
    cent = _Centralizers(A)
    builder = SpanBuilder(f, n * n)
    count = 0
    if isinstance(strategy, Exhaustive):
        if f.order is None:
            raise BudgetExceeded("exhaustive enumeration needs a finite field")
        if f.order ** n > strategy.budget:
            raise BudgetExceeded(f"{f.order}^{n} elements exceed the budget {strategy.budget}")
        for x in _projective_points(f, n):
            count += 1
            builder.extend(_tensor(x, c, f) for c in cent(x).basis)
            if count % 512 == 0 and builder.dim == K.dim:
                break
        status = EXACT
    elif isinstance(strategy, Randomized):
        rng = random.Random(strategy.seed)
        stall = 0
        dim = 0
        while count < strategy.samples and stall < strategy.stall_limit and dim < K.dim:
            if f.kind == "Q":
                x = tuple(Fraction(rng.randint(-strategy.box, strategy.box)) for _ in range(n))
            else:
                x = tuple(rng.randrange(f.p) for _ in range(n))
            count += 1
            builder.extend(_tensor(x, c, f) for c in cent(x).basis)
            new = builder.dim
            stall = 0 if new > dim else stall + 1
            dim = new
        status = LOWER_BOUND
    else:
        raise TypeError(f"unknown strategy {strategy!r}")
    W = builder.subspace()
    if not W.issubspace(K):
        raise AssertionError("commuting-pair span escaped the commutator kernel")
    return PairSpan(W, status, count)


@dataclass(frozen=True)
class ZlpdResult:
    verdict: Verdict
    witness: BilinearForm | None
    dim_W: int
    dim_K: int
    status: str
    samples: int

    def to_dict(self):
        return {
            "verdict": self.verdict.value,
            "dim_W": self.dim_W,
            "dim_ker_c": self.dim_K,
            "status": self.status,
            "samples": self.samples,
            "witness": None if self.witness is None
            else [[str(v) for v in row] for row in self.witness.m],
        }


def is_zlpd(A: Algebra, strategy=None) -> ZlpdResult:
    span = commuting_pair_span(A, strategy)
    W = span.W
    K = commutator_kernel(A)
    if W == K:
        return ZlpdResult(Verdict.CertifiedYes, None, W.dim, K.dim, span.status, span.samples)
    if span.status == EXACT:
        coboundaries = coboundary_space(A)
        witness = next(v for v in W.annihilator().basis if not coboundaries.contains(v))
        return ZlpdResult(Verdict.CertifiedNo, BilinearForm.from_vector(A.field, A.dim, witness),
                          W.dim, K.dim, span.status, span.samples)
    return ZlpdResult(Verdict.Unknown, None, W.dim, K.dim, span.status, span.samples)


# -- the cyclic identity -----------------------------------------------------

@dataclass(frozen=True)
class Violation:
    x: tuple
    y: tuple
    u: tuple
    value: object


def cyclic_value(A: Algebra, phi: BilinearForm, x, y, u):
    """``Phi(xy, u) + Phi(ux, y) + Phi(yu, x)``."""
    f = A.field
    s = f.add(phi(A.multiply(x, y), u), phi(A.multiply(u, x), y))
    return f.add(s, phi(A.multiply(y, u), x))


def cyclic_defect(A: Algebra, phi: BilinearForm, U: Subspace | None = None):
    """First basis triple ``(x, y, u)`` with ``u`` from ``U`` where the cyclic
    sum is nonzero, or None when it vanishes identically."""
    if U is None:
        U = A.full()
    n = A.dim
    basis = A.basis_vectors()
    for i in range(n):
        for j in range(n):
            xy = A.basis_product(i, j)
            for u in U.basis:
                v = phi(xy, u)
                v = A.field.add(v, phi(A.multiply(u, basis[i]), basis[j]))
                v = A.field.add(v, phi(A.multiply(basis[j], u), basis[i]))
                if v:
                    return Violation(basis[i], basis[j], u, v)
    return None


def extract_tau(A: Algebra, phi: BilinearForm):
    """A functional ``tau`` with ``Phi(x, y) = tau([x, y])``, or None."""
    C = commutator_matrix(A)
    rows = [tuple(C[k][c] for k in range(A.dim)) for c in range(A.dim * A.dim)]
    return solve(rows, phi.vector(), A.dim, A.field)


def _require_odd_char(A: Algebra):
    if A.field.characteristic == 2:
        raise CharacteristicTwo("this statement needs a field of characteristic other than 2")


def verify_theorem_main(A: Algebra) -> CheckReport:
    """Every skew cube-vanishing form satisfies the cyclic identity on Alg(L)."""
    _require_odd_char(A)
    core = lie_core(A)
    space = cube_vanishing_space(A)
    failures = []
    full_defects = 0
    for phi in forms(space, A.dim):
        bad = cyclic_defect(A, phi, core.algL)
        if bad is not None:
            failures.append({"form": phi, "x": A.format(bad.x), "y": A.format(bad.y),
                             "u": A.format(bad.u), "value": bad.value})
        if core.generates:
            continue
        if cyclic_defect(A, phi, A.full()) is not None:
            full_defects += 1
    details = {
        "dim_A": A.dim,
        "dim_commutators": core.commutators.dim,
        "dim_L": core.L.dim,
        "dim_algL": core.algL.dim,
        "generates": core.generates,
        "dim_cube_vanishing": space.dim,
        "forms_failing_on_full_space": full_defects,
    }
    return CheckReport("theorem_main", not failures, details, failures)


def verify_corollary_simple(A: Algebra) -> CheckReport:
    """For a certified simple algebra the cyclic identity holds on all of A."""
    from .algebra import is_simple

    _require_odd_char(A)
    verdict = is_simple(A)
    if verdict is not Verdict.CertifiedYes:
        raise NotCertifiedSimple(f"simplicity verdict is {verdict}")
    core = lie_core(A)
    details = {"commutative": A.is_commutative(), "generates": core.generates}
    if not details["commutative"]:
        # either L = [A, A] or L lies in the center
        Z = center(A)
        details["L_equals_commutators"] = core.L == core.commutators
        details["L_in_center"] = core.L.issubspace(Z)
    space = cube_vanishing_space(A)
    details["dim_cube_vanishing"] = space.dim
    failures = []
    for phi in forms(space, A.dim):
        bad = cyclic_defect(A, phi)
        if bad is not None:
            failures.append({"form": phi, "x": A.format(bad.x), "y": A.format(bad.y),
                             "u": A.format(bad.u), "value": bad.value})
    return CheckReport("corollary_simple", not failures, details, failures)


def commuting_functionals(A: Algebra, W: Subspace) -> list[BilinearForm]:
    """Basis of the forms vanishing on ``W``."""
    return forms(W.annihilator(), A.dim)



def first_violation(A: Algebra, space: Subspace, U: Subspace | None = None):
    """Lexicographically first basis triple ``(x, y, u)`` at which some form
    of ``space`` has a nonzero cyclic sum, with one such form; None if the
    cyclic identity holds on the whole space.

    Independent of which basis ``space`` happens to carry.
    """
    if U is None:
        U = A.full()
    n, f = A.dim, A.field
    if not space.basis:
        return None
    basis = A.basis_vectors()
    for i in range(n):
        for j in range(n):
            for u in U.basis:
                r = [0] * (n * n)
                _add_pair(r, A.basis_product(i, j), u, n)
                _add_pair(r, A.multiply(u, basis[i]), basis[j], n)
                _add_pair(r, A.multiply(basis[j], u), basis[i], n)
                r = f.vector(r)
                for v in space.basis:
                    val = f.vector([sum(a * b for a, b in zip(r, v) if a and b)])[0]
                    if val:
                        return Violation(basis[i], basis[j], u, val), \
                            BilinearForm.from_vector(f, n, v)
    return None
