"""Acceptance criteria AC1-AC9.

Each test carries ``@pytest.mark.acceptance(n)``; the terminal summary
prints one PASS/FAIL line per criterion.  Run alone with
``pytest tests/test_acceptance.py``.
"""

import random
import time

import pytest

from zlpdlab.algebra import (Verdict, abelian_algebra, char2_truncated, grassmann_example7,
                             lie_core, matrix_algebra, parse_builtin, triangular_algebra)
from zlpdlab.bilinear import (EXACT, BilinearForm, Exhaustive, Randomized, coboundary_space,
                              commutator_kernel, commuting_pair_span, cube_vanishing_space,
                              cyclic_defect, extract_tau, forms, is_zlpd,
                              linearized_condition_space)
from zlpdlab.cohom import h2_dimension, two_cocycle_space
from zlpdlab.derivmod import (derivation_space, dual_bimodule, inner_derivations,
                              is_jordan_derivation, jordan_derivation_space, phi_to_delta,
                              regular_bimodule, verify_jd2)
from zlpdlab.exactfield import GF, QQ
from zlpdlab.jordanhom import (BlockAlgebra, block_projection_map, decompose, identity_map,
                               is_reversal, swap_transpose_map, transpose_map, verify_ds,
                               verify_eskor, verify_pq, verify_theorem_jordan, AlgebraMap)
from zlpdlab.linalg import Subspace

from _support import rand_vector, random_algebra

F3, F5 = GF(3), GF(5)


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f}s, limit {self.limit}s"


def theorem_algebras():
    return [matrix_algebra(2, F5), matrix_algebra(2, F3), matrix_algebra(2, QQ),
            matrix_algebra(3, F5), triangular_algebra(2, QQ), grassmann_example7(F5),
            abelian_algebra(4, QQ)]


@pytest.mark.acceptance(1)
def test_ac1_grassmann_witness():
    with Timer(1.0):
        A = grassmann_example7(F5)
        assert A.dim == 7
        assert lie_core(A).L.dim == 0
        phi = BilinearForm.from_entries(A, {("x1x2", "y1"): 1, ("y1", "x1x2"): -1})
        assert cube_vanishing_space(A).contains(phi.vector())
        bad = cyclic_defect(A, phi)
        assert (bad.x, bad.y, bad.u) == (A["x1"], A["x2"], A["y1"])
        assert bad.value == 1


@pytest.mark.acceptance(2)
def test_ac2_theorem_main():
    with Timer(30.0):
        for A in theorem_algebras():
            algL = lie_core(A).algL
            for phi in forms(cube_vanishing_space(A), A.dim):
                assert cyclic_defect(A, phi, algL) is None


@pytest.mark.acceptance(3)
def test_ac3_char2_counterexample():
    with Timer(1.0):
        A = char2_truncated(7)
        phi = BilinearForm.from_entries(A, {("X5", "X"): 1, ("X", "X5"): 1})
        even = A.span([A["1"], A["X2"], A["X4"], A["X6"]])
        for v in even.basis:
            assert all(phi(v, A.basis(i)) == 0 == phi(A.basis(i), v) for i in range(7))
        assert phi(A["X3"], A["X3"]) == 0
        assert cube_vanishing_space(A).contains(phi.vector())
        bad = cyclic_defect(A, phi)
        assert (bad.x, bad.y, bad.u) == (A["X"], A["X2"], A["X3"]) and bad.value == 1


@pytest.mark.acceptance(4)
def test_ac4_zlpd_decisions():
    with Timer(60.0):
        r = is_zlpd(matrix_algebra(2, F3), Exhaustive())
        assert r.status == EXACT and r.dim_W == r.dim_K == 13
        assert r.verdict is Verdict.CertifiedYes
        for n in (1, 2, 3, 4):
            assert is_zlpd(abelian_algebra(n, QQ)).verdict is Verdict.CertifiedYes
            assert is_zlpd(abelian_algebra(n, F5)).verdict is Verdict.CertifiedYes
        r = is_zlpd(parse_builtin("matrix2*matrix2", F3),
                    Randomized(seed=0, samples=2000, stall_limit=25))
        assert r.verdict is Verdict.CertifiedYes


@pytest.mark.acceptance(5)
def test_ac5_corollary_pipelines():
    with Timer(10.0):
        for f in (F3, F5):
            A = matrix_algebra(2, f)
            M = dual_bimodule(A)
            assert derivation_space(A, M) == inner_derivations(A, M)
            assert h2_dimension(A) == 0
            assert is_zlpd(A).verdict is Verdict.CertifiedYes


@pytest.mark.acceptance(6)
def test_ac6_jordan_derivations_on_alg_l():
    with Timer(30.0):
        for A in theorem_algebras():
            for M in (regular_bimodule(A), dual_bimodule(A)):
                rep = verify_jd2(A, M)
                assert rep.passed, rep.failures


def _section3_maps():
    out = []
    for f in (F5, QQ):
        M = matrix_algebra(2, f)
        out += [identity_map(M), transpose_map(2, f), swap_transpose_map(2, f),
                block_projection_map(2, f)]
    return out


@pytest.mark.acceptance(7)
def test_ac7_identity_suite():
    with Timer(60.0):
        for J in _section3_maps():
            assert verify_ds(J).passed
            assert verify_pq(J).passed
            assert is_reversal(J).holds
            assert verify_eskor(J).passed


@pytest.mark.acceptance(8)
def test_ac8_decomposition():
    with Timer(5.0):
        J = swap_transpose_map(2, F5)
        B = BlockAlgebra([matrix_algebra(2, F5)] * 2)
        dec = decompose(J, B)
        assert dec.U.dim == dec.V.dim == 4
        bullets = ["AlgJA_is_B", "U_V_ideals", "UV_zero", "VU_zero", "U_direct_sum_V_is_B",
                   "U0_plus_V0_is_A", "U0_cap_V0_is_kerJ", "J_U0_onto_U", "J_U0_hom",
                   "J_V0_onto_V", "J_V0_antihom", "J_equals_H_plus_K", "H_is_hom",
                   "K_is_antihom", "U0_V0_ideals"]
        assert all(dec.checklist[b] for b in bullets)
        assert verify_theorem_jordan(J.source, B, J).passed

        G = grassmann_example7(F5)
        F = matrix_algebra(1, F5)
        aug = AlgebraMap(G, F, [[1, 0, 0, 0, 0, 0, 0]])
        rep = verify_theorem_jordan(G, BlockAlgebra([F]), aug)
        assert rep.details["hypotheses"]["generates"] is False
        assert rep.details["decomposition_asserted"] is False
        assert "decomposition" not in rep.details


# -- AC9: property suites, 100 pinned-seed instances each ---------------------

N_INSTANCES = 100
PROPERTY_FIELDS = (QQ, F3, F5, GF(7))


def _instances(tag):
    for k in range(N_INSTANCES):
        rng = random.Random(f"{tag}-{k}")
        yield rng, random_algebra(rng, PROPERTY_FIELDS[k % len(PROPERTY_FIELDS)])


def _ac9_dimension_law():
    for k in range(N_INSTANCES):
        rng = random.Random(f"dim-{k}")
        f = PROPERTY_FIELDS[k % len(PROPERTY_FIELDS)]
        n = rng.randint(1, 8)
        s = Subspace.span(f, n, [rand_vector(rng, f, n) for _ in range(rng.randint(0, n))])
        t = Subspace.span(f, n, [rand_vector(rng, f, n) for _ in range(rng.randint(0, n))])
        assert (s + t).dim + (s & t).dim == s.dim + t.dim


def _ac9_containment_chains():
    for k, (rng, A) in enumerate(_instances("chain")):
        M = regular_bimodule(A) if k % 2 else dual_bimodule(A)
        assert inner_derivations(A, M) <= derivation_space(A, M) <= jordan_derivation_space(A, M)
        assert coboundary_space(A) <= two_cocycle_space(A)
        W = commuting_pair_span(A, Randomized(seed=k, samples=60, stall_limit=5)).W
        assert W <= commutator_kernel(A)


def _ac9_cube_vs_linearized():
    fields = (QQ, GF(2), F3, F5, GF(7))
    for k in range(N_INSTANCES):
        rng = random.Random(f"cube-{k}")
        f = fields[k % len(fields)]
        A = random_algebra(rng, f)
        cube, lin = cube_vanishing_space(A), linearized_condition_space(A)
        assert cube <= lin
        if f.characteristic not in (2, 3):
            assert cube == lin


def _ac9_three_implies_two():
    for k, (rng, A) in enumerate(_instances("tau")):
        tau = rand_vector(rng, A.field, A.dim)
        m = [[sum(t * c for t, c in zip(tau, A.commutator(A.basis(i), A.basis(j))))
              for j in range(A.dim)] for i in range(A.dim)]
        phi = BilinearForm(A.field, m)
        assert extract_tau(A, phi) is not None
        assert cyclic_defect(A, phi) is None


def _ac9_phi_to_delta():
    for k, (rng, A) in enumerate(_instances("delta")):
        space = cube_vanishing_space(A)
        if not space.basis:
            continue
        coeffs = [A.field.coerce(rng.randint(-3, 3)) for _ in space.basis]
        v = A.field.vector([sum(c * b[i] for c, b in zip(coeffs, space.basis))
                            for i in range(A.dim ** 2)])
        phi = BilinearForm.from_vector(A.field, A.dim, v)
        assert is_jordan_derivation(A, dual_bimodule(A), phi_to_delta(A, phi))


AC9_SUITES = {
    "dimension_law": _ac9_dimension_law,
    "containment_chains": _ac9_containment_chains,
    "cube_vs_linearized": _ac9_cube_vs_linearized,
    "three_implies_two": _ac9_three_implies_two,
    "phi_to_delta": _ac9_phi_to_delta,
}


@pytest.mark.acceptance(9)
def test_ac9_property_suites():
    with Timer(120.0):
        for name, suite in AC9_SUITES.items():
            try:
                suite()
            except AssertionError as exc:
                raise AssertionError(f"property suite {name} failed: {exc}") from exc


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
