"""Bimodules, derivations and Jordan derivations into them.

A bimodule of dimension m over an n-dimensional algebra is given by the
matrices of ``f -> b_i . f`` (``left[i]``) and ``f -> f . b_i``
(``right[i]``).  A linear map ``delta: A -> M`` is an m x n matrix whose
column j is ``delta(b_j)``; spaces of such maps are flattened with the
module index major, entry ``(r, j)`` at position ``r*n + j``.
"""

from __future__ import annotations

from itertools import product as iproduct

from .algebra import Algebra, Verdict, is_simple, lie_core
from .bilinear import BilinearForm, is_zlpd
from .errors import BimoduleError, CharacteristicTwo, DimensionMismatch, NotCertifiedSimple
from .linalg import Subspace, kernel, mat_mul, mat_vec
from .report import CheckReport


def _lin_comb(mats, coeffs, field, m):
    out = [[0] * m for _ in range(m)]
    for M, c in zip(mats, coeffs):
        if c:
            for r in range(m):
                row, orow = M[r], out[r]
                for q in range(m):
                    if row[q]:
                        orow[q] += c * row[q]
    return [field.vector(r) for r in out]


class Bimodule:
    """Finite-dimensional A-bimodule given by left and right action matrices."""

    def __init__(self, A: Algebra, left, right, check: bool = True):
        self.algebra = A
        self.field = A.field
        if len(left) != A.dim or len(right) != A.dim:
            raise DimensionMismatch("need one action matrix per basis element")
        self.dim = len(left[0]) if left else 0
        f = self.field
        self.left = tuple(tuple(f.vector(r) for r in M) for M in left)
        self.right = tuple(tuple(f.vector(r) for r in M) for M in right)
        for M in self.left + self.right:
            if len(M) != self.dim or any(len(r) != self.dim for r in M):
                raise DimensionMismatch("action matrices must be m x m")
        if check:
            self.check()

    def check(self):
        A, f, m = self.algebra, self.field, self.dim
        n = A.dim
        for i, j in iproduct(range(n), repeat=2):
            c = A.basis_product(i, j)
            if mat_mul(self.left[i], self.left[j], f) != _lin_comb(self.left, c, f, m):
                raise BimoduleError(f"left action is not multiplicative at ({i}, {j})")
            if mat_mul(self.right[j], self.right[i], f) != _lin_comb(self.right, c, f, m):
                raise BimoduleError(f"right action is not multiplicative at ({i}, {j})")
            if mat_mul(self.left[i], self.right[j], f) != mat_mul(self.right[j], self.left[i], f):
                raise BimoduleError(f"left and right actions do not commute at ({i}, {j})")

    def left_action(self, x):
        return _lin_comb(self.left, x, self.field, self.dim)

    def right_action(self, x):
        return _lin_comb(self.right, x, self.field, self.dim)

    def act_left(self, x, v):
        """``x . v``"""
        return mat_vec(self.left_action(x), v, self.field)

    def act_right(self, v, x):
        """``v . x``"""
        return mat_vec(self.right_action(x), v, self.field)


def dual_bimodule(A: Algebra) -> Bimodule:
    """``A*`` with ``(x.f)(y) = f(yx)`` and ``(f.x)(y) = f(xy)``, in the dual basis."""
    n = A.dim
    c = A.structure
    left = [[[c[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
    right = [[[c[i][j][k] for k in range(n)] for j in range(n)] for i in range(n)]
    return Bimodule(A, left, right)


def regular_bimodule(A: Algebra) -> Bimodule:
    return Bimodule(A, [A.left_matrix(A.basis(i)) for i in range(A.dim)],
                    [A.right_matrix(A.basis(i)) for i in range(A.dim)])


def zero_bimodule(A: Algebra, m: int) -> Bimodule:
    """m-dimensional module on which A acts by zero."""
    z = [[A.field.zero] * m for _ in range(m)]
    return Bimodule(A, [z] * A.dim, [z] * A.dim)


# -- module maps -------------------------------------------------------------

def to_matrix(vec, m: int, n: int):
    return [tuple(vec[r * n:(r + 1) * n]) for r in range(m)]


def to_vector(D) -> tuple:
    return tuple(v for row in D for v in row)


def module_maps(space: Subspace, m: int, n: int):
    return [to_matrix(v, m, n) for v in space.basis]


def apply_map(D, x, field):
    return mat_vec(D, x, field)


def _row(M: Bimodule):
    return [0] * (M.dim * M.algebra.dim)


def _add_image(row, r, n, v, scale=1):
    """Coefficients of ``delta(v)_r``."""
    for j, a in enumerate(v):
        if a:
            row[r * n + j] += scale * a


def _add_action_of_image(row, r, n, action, j, scale=1):
    """Coefficients of ``(action . delta(b_j))_r``."""
    for q, a in enumerate(action[r]):
        if a:
            row[q * n + j] += scale * a


def jordan_derivation_space(A: Algebra, M: Bimodule) -> Subspace:
    """Maps with ``d(yz+zy) = d(y).z + y.d(z) + d(z).y + z.d(y)`` on basis pairs."""
    n, m, f = A.dim, M.dim, A.field
    rows = []
    for a in range(n):
        for b in range(a, n):
            s = A.jordan_product(A.basis(a), A.basis(b))
            for r in range(m):
                row = _row(M)
                _add_image(row, r, n, s)
                _add_action_of_image(row, r, n, M.right[b], a, -1)
                _add_action_of_image(row, r, n, M.left[a], b, -1)
                _add_action_of_image(row, r, n, M.right[a], b, -1)
                _add_action_of_image(row, r, n, M.left[b], a, -1)
                rows.append(f.vector(row))
    return kernel(rows, m * n, f)


def derivation_space(A: Algebra, M: Bimodule) -> Subspace:
    """Maps with ``d(yz) = d(y).z + y.d(z)`` on basis pairs."""
    n, m, f = A.dim, M.dim, A.field
    rows = []
    for a, b in iproduct(range(n), repeat=2):
        s = A.basis_product(a, b)
        for r in range(m):
            row = _row(M)
            _add_image(row, r, n, s)
            _add_action_of_image(row, r, n, M.right[b], a, -1)
            _add_action_of_image(row, r, n, M.left[a], b, -1)
            rows.append(f.vector(row))
    return kernel(rows, m * n, f)


def inner_derivation(A: Algebra, M: Bimodule, tau):
    """Matrix of ``x -> tau.x - x.tau``."""
    f = A.field
    cols = [tuple(f.sub(a, b) for a, b in zip(M.act_right(tau, A.basis(j)),
                                               M.act_left(A.basis(j), tau)))
            for j in range(A.dim)]
    return [tuple(col[r] for col in cols) for r in range(M.dim)]


def inner_derivations(A: Algebra, M: Bimodule) -> Subspace:
    f = A.field
    vecs = []
    for s in range(M.dim):
        tau = tuple(f.one if r == s else f.zero for r in range(M.dim))
        vecs.append(to_vector(inner_derivation(A, M, tau)))
    return Subspace.span(f, M.dim * A.dim, vecs)


def is_jordan_derivation(A: Algebra, M: Bimodule, D) -> bool:
    """Direct evaluation of the Jordan derivation identity on basis pairs."""
    f, n = A.field, A.dim
    imgs = [tuple(row[j] for row in D) for j in range(n)]
    for a in range(n):
        for b in range(a, n):
            ya, zb = A.basis(a), A.basis(b)
            lhs = apply_map(D, A.jordan_product(ya, zb), f)
            terms = (M.act_right(imgs[a], zb), M.act_left(ya, imgs[b]),
                     M.act_right(imgs[b], ya), M.act_left(zb, imgs[a]))
            rhs = tuple(f.vector([sum(t) for t in zip(*terms)]))
            if lhs != rhs:
                return False
    return True


def is_derivation(A: Algebra, M: Bimodule, D) -> bool:
    f, n = A.field, A.dim
    imgs = [tuple(row[j] for row in D) for j in range(n)]
    for a, b in iproduct(range(n), repeat=2):
        lhs = apply_map(D, A.basis_product(a, b), f)
        rhs = f.vector([x + y for x, y in zip(M.act_right(imgs[a], A.basis(b)),
                                              M.act_left(A.basis(a), imgs[b]))])
        if lhs != rhs:
            return False
    return True


def phi_to_delta(A: Algebra, phi: BilinearForm):
    """The map ``A -> A*``, ``delta(y)(x) = Phi(y, x)``; its matrix is ``m^T``."""
    n = A.dim
    return [tuple(phi.m[j][r] for j in range(n)) for r in range(n)]


def verify_jd2(A: Algebra, M: Bimodule) -> CheckReport:
    """Jordan derivations satisfy ``d(yu) = d(y).u + y.d(u)`` for u in Alg(L)."""
    if A.field.characteristic == 2:
        raise CharacteristicTwo("the Jordan derivation statement needs char != 2")
    f, n = A.field, A.dim
    core = lie_core(A)
    space = jordan_derivation_space(A, M)
    failures = []
    for D in module_maps(space, M.dim, n):
        imgs = [tuple(row[j] for row in D) for j in range(n)]
        for u in core.algL.basis:
            du = apply_map(D, u, f)
            ru = M.right_action(u)
            for y in range(n):
                yb = A.basis(y)
                lhs = apply_map(D, A.multiply(yb, u), f)
                rhs = f.vector([a + b for a, b in zip(mat_vec(ru, imgs[y], f),
                                                      M.act_left(yb, du))])
                if lhs != rhs:
                    failures.append({"delta": [list(r) for r in D], "y": A.format(yb),
                                     "u": A.format(u)})
                    break
    details = {"dim_jordan_derivations": space.dim, "dim_algL": core.algL.dim,
               "module_dim": M.dim}
    return CheckReport("jd2", not failures, details, failures)


def verify_corollary_derivations(A: Algebra, strategy=None) -> CheckReport:
    """If every derivation into ``A*`` is inner, ``A`` must come out zLpd."""
    if A.field.characteristic == 2:
        raise CharacteristicTwo("the corollary needs char != 2")
    verdict = is_simple(A)
    if verdict is not Verdict.CertifiedYes:
        raise NotCertifiedSimple(f"simplicity verdict is {verdict}")
    M = dual_bimodule(A)
    der = derivation_space(A, M)
    inner = inner_derivations(A, M)
    hypothesis = der == inner
    details = {"dim_derivations": der.dim, "dim_inner": inner.dim,
               "all_derivations_inner": hypothesis}
    failures = []
    if hypothesis:
        z = is_zlpd(A, strategy)
        details["zlpd"] = z.to_dict()
        if z.verdict is not Verdict.CertifiedYes:
            failures.append({"flagged": "derivations are inner but zLpd was not certified",
                             "verdict": z.verdict.value})
    return CheckReport("corollary_derivations", not failures, details, failures)
