"""Jordan homomorphisms and their splitting into hom + antihom parts.

Semiprime codomains are given explicitly as products of certified simple
blocks (:class:`BlockAlgebra`); a surjective Jordan map then splits block
by block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .algebra import (
    Algebra,
    Verdict,
    direct_product,
    is_ideal,
    is_semiprime,
    is_simple,
    lie_core,
    matrix_algebra,
    span_product,
    subalgebra_closure,
)
from .errors import (
    BlockUnclassifiable,
    CharacteristicTwo,
    DimensionMismatch,
    FieldMismatch,
    HypothesesNotMet,
    NotCertifiedSimple,
    NotJordan,
    ZlpdError,
)
from .exactfield import QQ, FieldSpec
from .linalg import Subspace, kernel, rank, transpose
from .report import CheckReport


class AlgebraMap:
    """Linear map between algebras; ``matrix`` is dim(target) x dim(source)."""

    def __init__(self, source: Algebra, target: Algebra, matrix):
        if source.field != target.field:
            raise FieldMismatch(f"{source.field} vs {target.field}")
        self.source = source
        self.target = target
        f = source.field
        self.matrix = tuple(f.vector(r) for r in matrix)
        if len(self.matrix) != target.dim or any(len(r) != source.dim for r in self.matrix):
            raise DimensionMismatch(
                f"map matrix must be {target.dim} x {source.dim}")
        self._cols = [tuple(((k, r[j]) for k, r in enumerate(self.matrix) if r[j]))
                      for j in range(source.dim)]

    @property
    def field(self) -> FieldSpec:
        return self.source.field

    def __call__(self, v) -> tuple:
        acc = [0] * self.target.dim
        for j, a in enumerate(v):
            if a:
                for k, c in self._cols[j]:
                    acc[k] += a * c
        return self.field.vector(acc)

    def image(self) -> Subspace:
        return Subspace.span(self.field, self.target.dim, transpose(self.matrix, self.source.dim))

    def kernel(self) -> Subspace:
        return kernel(self.matrix, self.source.dim, self.field)

    def rank(self) -> int:
        return rank(self.matrix, self.source.dim, self.field)

    def preimage(self, S: Subspace) -> Subspace:
        """``{a : J(a) in S}``."""
        constraints = S.annihilator().basis
        f = self.field
        rows = [tuple(sum((c * r[j] for c, r in zip(n, self.matrix)), f.zero)
                      for j in range(self.source.dim)) for n in constraints]
        rows = [f.vector(r) for r in rows]
        return kernel(rows, self.source.dim, f)

    def then(self, P, new_target: Algebra) -> AlgebraMap:
        """Compose with a linear map ``P`` out of the target."""
        f = self.field
        m = [tuple(f.vector([sum(p * r[j] for p, r in zip(prow, self.matrix))
                             for j in range(self.source.dim)])) for prow in P]
        return AlgebraMap(self.source, new_target, [tuple(r) for r in m])

    def __add__(self, other: AlgebraMap) -> AlgebraMap:
        f = self.field
        return AlgebraMap(self.source, self.target,
                          [[f.add(a, b) for a, b in zip(r, s)]
                           for r, s in zip(self.matrix, other.matrix)])

    def __eq__(self, other):
        return (isinstance(other, AlgebraMap) and self.matrix == other.matrix
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.matrix)


# -- standard maps -----------------------------------------------------------

def identity_map(A: Algebra) -> AlgebraMap:
    f = A.field
    return AlgebraMap(A, A, [[f.one if i == j else f.zero for j in range(A.dim)]
                             for i in range(A.dim)])


def _transpose_perm(n):
    return [j * n + i for i in range(n) for j in range(n)]


def _perm_matrix(perm, f):
    d = len(perm)
    m = [[f.zero] * d for _ in range(d)]
    for src, dst in enumerate(perm):
        m[dst][src] = f.one
    return m


def transpose_map(n: int, field: FieldSpec = QQ, A: Algebra | None = None) -> AlgebraMap:
    """``a -> a^T`` on the n x n matrices."""
    A = A or matrix_algebra(n, field)
    return AlgebraMap(A, A, _perm_matrix(_transpose_perm(n), A.field))


def swap_transpose_map(n: int, field: FieldSpec = QQ) -> AlgebraMap:
    """``(a, b) -> (a, b^T)`` on ``M_n x M_n``."""
    Mn = matrix_algebra(n, field)
    A = direct_product(Mn, Mn)
    d = n * n
    perm = list(range(d)) + [d + k for k in _transpose_perm(n)]
    return AlgebraMap(A, A, _perm_matrix(perm, A.field))


def block_projection_map(n: int, field: FieldSpec = QQ) -> AlgebraMap:
    """``(a, b) -> a`` from ``M_n x M_n`` onto ``M_n``."""
    Mn = matrix_algebra(n, field)
    A = direct_product(Mn, Mn)
    d = n * n
    f = A.field
    m = [[f.one if j == i else f.zero for j in range(2 * d)] for i in range(d)]
    return AlgebraMap(A, Mn, m)


# -- block codomains ---------------------------------------------------------

class BlockAlgebra:
    """An algebra given explicitly as a product of certified simple blocks."""

    def __init__(self, blocks):
        blocks = tuple(blocks)
        if not blocks:
            raise DimensionMismatch("need at least one block")
        self.blocks = blocks
        self.certificates = tuple(is_simple(B) for B in blocks)
        for i, v in enumerate(self.certificates):
            if v is not Verdict.CertifiedYes:
                raise NotCertifiedSimple(f"block {i} has simplicity verdict {v}")
        alg = blocks[0]
        for B in blocks[1:]:
            alg = direct_product(alg, B)
        self.algebra = alg
        offs = [0]
        for B in blocks:
            offs.append(offs[-1] + B.dim)
        self.offsets = tuple(offs)

    @property
    def field(self):
        return self.algebra.field

    def projection(self, i: int):
        f, lo, hi = self.field, self.offsets[i], self.offsets[i + 1]
        return [[f.one if k == lo + r else f.zero for k in range(self.algebra.dim)]
                for r in range(hi - lo)]

    def inclusion(self, i: int):
        return transpose(self.projection(i), self.algebra.dim)

    def block_subspace(self, i: int) -> Subspace:
        return self.sum_of_blocks([i])

    def sum_of_blocks(self, indices) -> Subspace:
        f, N = self.field, self.algebra.dim
        vecs = []
        for i in indices:
            for k in range(self.offsets[i], self.offsets[i + 1]):
                vecs.append(tuple(f.one if j == k else f.zero for j in range(N)))
        return Subspace.span(f, N, vecs)

    def projector(self, indices):
        """Matrix of the projection onto the given blocks along the others."""
        f, N = self.field, self.algebra.dim
        keep = {k for i in indices for k in range(self.offsets[i], self.offsets[i + 1])}
        return [[f.one if (r == c and r in keep) else f.zero for c in range(N)]
                for r in range(N)]


# -- classification ----------------------------------------------------------

LINEAR, JORDAN, HOM, ANTIHOM, SURJECTIVE = "Linear", "Jordan", "Hom", "Antihom", "Surjective"


class _Tables:
    """Products of basis images needed by the identity checks."""

    def __init__(self, J: AlgebraMap):
        A, B = J.source, J.target
        n = A.dim
        self.n = n
        self.S = [[A.basis_product(i, j) for j in range(n)] for i in range(n)]
        self.JB = [J(A.basis(i)) for i in range(n)]
        self.JS = [[J(self.S[i][j]) for j in range(n)] for i in range(n)]
        self.T = [[B.multiply(self.JB[i], self.JB[j]) for j in range(n)] for i in range(n)]


def _is_hom(J: AlgebraMap, t: _Tables) -> bool:
    return all(t.JS[i][j] == t.T[i][j] for i in range(t.n) for j in range(t.n))


def _is_antihom(J: AlgebraMap, t: _Tables) -> bool:
    return all(t.JS[i][j] == t.T[j][i] for i in range(t.n) for j in range(t.n))


def _is_jordan(J: AlgebraMap, t: _Tables) -> bool:
    f = J.field
    for i in range(t.n):
        for j in range(i, t.n):
            lhs = [f.add(a, b) for a, b in zip(t.JS[i][j], t.JS[j][i])]
            rhs = [f.add(a, b) for a, b in zip(t.T[i][j], t.T[j][i])]
            if lhs != rhs:
                return False
    return True


def classify_map(J: AlgebraMap) -> frozenset:
    t = _Tables(J)
    flags = {LINEAR}
    if _is_jordan(J, t):
        flags.add(JORDAN)
    if _is_hom(J, t):
        flags.add(HOM)
    if _is_antihom(J, t):
        flags.add(ANTIHOM)
    if J.rank() == J.target.dim:
        flags.add(SURJECTIVE)
    return frozenset(flags)


def _require_odd(J):
    if J.field.characteristic == 2:
        raise CharacteristicTwo("the Jordan identities here need char != 2")


def verify_ds(J: AlgebraMap) -> CheckReport:
    """``J(zyz) = J(z)J(y)J(z)`` on basis pairs and
    ``J(xyz + zyx) = J(x)J(y)J(z) + J(z)J(y)J(x)`` on basis triples."""
    _require_odd(J)
    t = _Tables(J)
    if not _is_jordan(J, t):
        raise NotJordan("map is not a Jordan homomorphism")
    A, B, f = J.source, J.target, J.field
    n = t.n
    failures = []
    for z, y in iproduct(range(n), repeat=2):
        lhs = J(A.multiply(t.S[z][y], A.basis(z)))
        rhs = B.multiply(t.T[z][y], t.JB[z])
        if lhs != rhs:
            failures.append({"identity": "d", "z": z, "y": y})
    for x, y, z in iproduct(range(n), repeat=3):
        src = f.vector([a + b for a, b in zip(A.multiply(t.S[x][y], A.basis(z)),
                                              A.multiply(t.S[z][y], A.basis(x)))])
        tgt = f.vector([a + b for a, b in zip(B.multiply(t.T[x][y], t.JB[z]),
                                              B.multiply(t.T[z][y], t.JB[x]))])
        if J(src) != tgt:
            failures.append({"identity": "s", "x": x, "y": y, "z": z})
    return CheckReport("ds", not failures, {"pairs": n * n, "triples": n ** 3}, failures)


def _target_semiprime(J: AlgebraMap, blocks: BlockAlgebra | None) -> bool:
    if blocks is not None:
        return blocks.algebra == J.target
    try:
        return is_semiprime(J.target)
    except ZlpdError:
        return False


def _sub(u, v, f):
    return tuple(f.sub(a, b) for a, b in zip(u, v))


def verify_pq(J: AlgebraMap, blocks: BlockAlgebra | None = None) -> CheckReport:
    """``(J(zw)-J(z)J(w))(J(xy)-J(y)J(x)) = 0`` and the companion identity
    ``(J(wz)-J(z)J(w))(J(yx)-J(y)J(x)) = 0`` on basis quadruples."""
    t = _Tables(J)
    if not _is_jordan(J, t):
        raise HypothesesNotMet("map is not a Jordan homomorphism")
    if J.rank() != J.target.dim:
        raise HypothesesNotMet("map is not surjective")
    if not _target_semiprime(J, blocks):
        raise HypothesesNotMet("target is not certified semiprime")
    B, f, n = J.target, J.field, t.n
    P = [[_sub(t.JS[z][w], t.T[z][w], f) for w in range(n)] for z in range(n)]
    Q = [[_sub(t.JS[x][y], t.T[y][x], f) for y in range(n)] for x in range(n)]
    P2 = [[_sub(t.JS[w][z], t.T[z][w], f) for w in range(n)] for z in range(n)]
    Q2 = [[_sub(t.JS[y][x], t.T[y][x], f) for y in range(n)] for x in range(n)]
    failures = []
    for name, left, right in (("p", P, Q), ("q", P2, Q2)):
        lefts = [(z, w, left[z][w]) for z in range(n) for w in range(n) if any(left[z][w])]
        rights = [(x, y, right[x][y]) for x in range(n) for y in range(n) if any(right[x][y])]
        for z, w, a in lefts:
            for x, y, b in rights:
                if any(B.multiply(a, b)):
                    failures.append({"identity": name, "x": x, "y": y, "z": z, "w": w})
    return CheckReport("pq", not failures, {"quadruples": n ** 4}, failures)


@dataclass(frozen=True)
class ReversalCheck:
    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def _quad_terms(J, t, x, y, z, w):
    A, B, f = J.source, J.target, J.field
    src = f.vector([a + b for a, b in zip(A.multiply(t.S[x][y], t.S[z][w]),
                                          A.multiply(t.S[w][z], t.S[y][x]))])
    lhs = J(src)
    xyzw = B.multiply(t.T[x][y], t.T[z][w])
    wzyx = B.multiply(t.T[w][z], t.T[y][x])
    return lhs, xyzw, wzyx


def is_reversal(J: AlgebraMap) -> ReversalCheck:
    """``J(xyzw + wzyx) = J(x)J(y)J(z)J(w) + J(w)J(z)J(y)J(x)`` on basis quadruples."""
    t = _Tables(J)
    f = J.field
    for q in iproduct(range(t.n), repeat=4):
        lhs, xyzw, wzyx = _quad_terms(J, t, *q)
        if lhs != tuple(f.add(a, b) for a, b in zip(xyzw, wzyx)):
            return ReversalCheck(False, q)
    return ReversalCheck(True)


def _generates(A: Algebra) -> bool:
    return lie_core(A).generates


def verify_eskor(J: AlgebraMap, blocks: BlockAlgebra | None = None) -> CheckReport:
    """Trace of the reversal argument on basis quadruples:
    ``J(xyzw + wzyx) = J(zw)J(xy) + J(wz)J(yx) + J(x)J(y)J(z)J(w) - J(z)J(w)J(x)J(y)``
    together with the reversal identity itself."""
    if J.field.characteristic == 2:
        raise HypothesesNotMet("characteristic 2")
    t = _Tables(J)
    if not _is_jordan(J, t):
        raise HypothesesNotMet("map is not a Jordan homomorphism")
    if J.rank() != J.target.dim:
        raise HypothesesNotMet("map is not surjective")
    if not _target_semiprime(J, blocks):
        raise HypothesesNotMet("target is not certified semiprime")
    if not _generates(J.source):
        raise HypothesesNotMet("source is not generated by [[A,A],[A,A]]")
    B, f = J.target, J.field
    failures = []
    for x, y, z, w in iproduct(range(t.n), repeat=4):
        lhs, xyzw, wzyx = _quad_terms(J, t, x, y, z, w)
        zwxy = B.multiply(t.T[z][w], t.T[x][y])
        a = B.multiply(t.JS[z][w], t.JS[x][y])
        b = B.multiply(t.JS[w][z], t.JS[y][x])
        eskor = f.vector([p + q + r - s for p, q, r, s in zip(a, b, xyzw, zwxy)])
        if lhs != eskor:
            failures.append({"identity": "eskor", "quad": (x, y, z, w)})
        if lhs != f.vector([p + q for p, q in zip(xyzw, wzyx)]):
            failures.append({"identity": "reversal", "quad": (x, y, z, w)})
    return CheckReport("eskor", not failures, {"quadruples": t.n ** 4}, failures)


# -- decomposition -----------------------------------------------------------

@dataclass
class Decomposition:
    U: Subspace
    V: Subspace
    H: AlgebraMap
    K: AlgebraMap
    U0: Subspace
    V0: Subspace
    kerJ: Subspace
    hom_blocks: tuple
    antihom_blocks: tuple
    checklist: dict = field(default_factory=dict)

    def to_dict(self):
        from .report import jsonable
        return {
            "U": jsonable(self.U), "V": jsonable(self.V),
            "U0": jsonable(self.U0), "V0": jsonable(self.V0), "kerJ": jsonable(self.kerJ),
            "H": [[str(v) for v in r] for r in self.H.matrix],
            "K": [[str(v) for v in r] for r in self.K.matrix],
            "hom_blocks": list(self.hom_blocks),
            "antihom_blocks": list(self.antihom_blocks),
            "checklist": dict(self.checklist),
        }


def _restricted_is(J: AlgebraMap, S: Subspace, anti: bool) -> bool:
    A, B = J.source, J.target
    imgs = [J(s) for s in S.basis]
    for a, ja in zip(S.basis, imgs):
        for b, jb in zip(S.basis, imgs):
            rhs = B.multiply(jb, ja) if anti else B.multiply(ja, jb)
            if J(A.multiply(a, b)) != rhs:
                return False
    return True


def decompose(J: AlgebraMap, B: BlockAlgebra, force: bool = False) -> Decomposition:
    """Split a surjective Jordan map into ``H + K`` with ``H`` a homomorphism
    onto the hom blocks ``U`` and ``K`` an antihomomorphism onto the rest ``V``."""
    if B.algebra != J.target:
        raise HypothesesNotMet("block algebra does not match the map's target")
    t = _Tables(J)
    if not _is_jordan(J, t):
        raise NotJordan("map is not a Jordan homomorphism")
    if J.rank() != J.target.dim:
        raise HypothesesNotMet("map is not surjective")
    if not force and not _generates(J.source):
        raise HypothesesNotMet("source is not generated by [[A,A],[A,A]]")
    hom_blocks, anti_blocks = [], []
    for i, blk in enumerate(B.blocks):
        Ji = J.then(B.projection(i), blk)
        ti = _Tables(Ji)
        if _is_hom(Ji, ti):
            hom_blocks.append(i)
        elif _is_antihom(Ji, ti):
            anti_blocks.append(i)
        else:
            raise BlockUnclassifiable(
                f"block {i}: projected map is neither a homomorphism nor an antihomomorphism", i)
    A, T = J.source, J.target
    U = B.sum_of_blocks(hom_blocks)
    V = B.sum_of_blocks(anti_blocks)
    H = J.then(B.projector(hom_blocks), T)
    K = J.then(B.projector(anti_blocks), T)
    U0, V0 = J.preimage(U), J.preimage(V)
    kerJ = J.kernel()
    tH, tK = _Tables(H), _Tables(K)
    full_T = T.full()
    alg_image = subalgebra_closure(T, J.image())
    checks = {
        "J_equals_H_plus_K": H + K == J,
        "H_is_hom": _is_hom(H, tH),
        "K_is_antihom": _is_antihom(K, tK),
        "UV_zero": span_product(T, U, V).dim == 0,
        "VU_zero": span_product(T, V, U).dim == 0,
        "AlgJA_is_B": alg_image == full_T,
        "U_V_ideals": is_ideal(T, U) and is_ideal(T, V),
        "U_direct_sum_V_is_B": (U + V) == full_T and (U & V).dim == 0,
        "U0_plus_V0_is_A": (U0 + V0) == A.full(),
        "U0_cap_V0_is_kerJ": (U0 & V0) == kerJ,
        "U0_V0_ideals": is_ideal(A, U0) and is_ideal(A, V0),
        "J_U0_onto_U": T.span(J(u) for u in U0.basis) == U,
        "J_U0_hom": _restricted_is(J, U0, anti=False),
        "J_V0_onto_V": T.span(J(v) for v in V0.basis) == V,
        "J_V0_antihom": _restricted_is(J, V0, anti=True),
    }
    failed = [k for k, ok in checks.items() if not ok]
    # the literal reading "J|V0 is a homomorphism" is reported, never asserted
    checks["J_V0_hom_literal"] = _restricted_is(J, V0, anti=False)
    if failed:
        raise AssertionError(f"decomposition postconditions failed: {failed}")
    return Decomposition(U, V, H, K, U0, V0, kerJ, tuple(hom_blocks), tuple(anti_blocks),
                         checks)


def verify_theorem_jordan(A: Algebra, B: BlockAlgebra, J: AlgebraMap) -> CheckReport:
    """Check the hypotheses, then reversal and the decomposition."""
    flags = classify_map(J)
    hyp = {
        "char_not_2": A.field.characteristic != 2,
        "source_matches": J.source == A,
        "target_matches": J.target == B.algebra,
        "generates": _generates(A),
        "jordan": JORDAN in flags,
        "surjective": SURJECTIVE in flags,
        "blocks_certified": all(v is Verdict.CertifiedYes for v in B.certificates),
    }
    details = {"hypotheses": hyp, "flags": sorted(flags)}
    failures = []
    if not all(hyp.values()):
        details["decomposition_asserted"] = False
        failures.append({"hypotheses_not_met": sorted(k for k, v in hyp.items() if not v)})
        return CheckReport("theorem_jordan", False, details, failures)
    rev = is_reversal(J)
    details["reversal"] = rev.holds
    if not rev:
        failures.append({"reversal_witness": rev.witness})
    try:
        dec = decompose(J, B)
    except (BlockUnclassifiable, AssertionError) as exc:
        failures.append({"decomposition": str(exc)})
    else:
        details["decomposition_asserted"] = True
        details["decomposition"] = {
            "dim_U": dec.U.dim, "dim_V": dec.V.dim, "dim_U0": dec.U0.dim,
            "dim_V0": dec.V0.dim, "dim_kerJ": dec.kerJ.dim, "checklist": dec.checklist,
        }
    return CheckReport("theorem_jordan", not failures, details, failures)
