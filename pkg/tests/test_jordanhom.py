import random

import pytest

from zlpdlab.algebra import (diagonal_algebra, direct_product,
                             grassmann_example7, matrix_algebra, triangular_algebra)
from zlpdlab.errors import (BlockUnclassifiable, CharacteristicTwo, FieldMismatch,
                            HypothesesNotMet, NotCertifiedSimple, NotJordan)
from zlpdlab.exactfield import GF, QQ
from zlpdlab.jordanhom import (ANTIHOM, HOM, JORDAN, LINEAR, SURJECTIVE, AlgebraMap,
                               BlockAlgebra, block_projection_map, classify_map, decompose,
                               identity_map, is_reversal, swap_transpose_map, transpose_map,
                               verify_ds, verify_eskor, verify_pq, verify_theorem_jordan)

from _support import rand_vector

F5 = GF(5)


def m2_blocks(f, k=2):
    return BlockAlgebra([matrix_algebra(2, f)] * k)


def random_map(rng, A, B):
    return AlgebraMap(A, B, [rand_vector(rng, A.field, A.dim) for _ in range(B.dim)])


def test_classify_examples():
    assert classify_map(transpose_map(2, F5)) == {LINEAR, JORDAN, ANTIHOM, SURJECTIVE}
    assert classify_map(identity_map(matrix_algebra(2, QQ))) == {LINEAR, JORDAN, HOM, SURJECTIVE}
    D = diagonal_algebra(2, QQ)
    assert classify_map(identity_map(D)) == {LINEAR, JORDAN, HOM, ANTIHOM, SURJECTIVE}
    assert classify_map(swap_transpose_map(2, F5)) == {LINEAR, JORDAN, SURJECTIVE}
    assert SURJECTIVE not in classify_map(
        AlgebraMap(matrix_algebra(2, QQ), matrix_algebra(2, QQ), [[0] * 4] * 4))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        AlgebraMap(matrix_algebra(2, QQ), matrix_algebra(2, F5), [[0] * 4] * 4)


def _evaluate(J, rng, trials=20):
    """Check the defining identities on random elements, independently of basis tables."""
    A, B, f = J.source, J.target, J.field
    hom = anti = jordan = True
    for _ in range(trials):
        y, z = rand_vector(rng, f, A.dim), rand_vector(rng, f, A.dim)
        jy, jz = J(y), J(z)
        hom &= J(A.multiply(y, z)) == B.multiply(jy, jz)
        anti &= J(A.multiply(y, z)) == B.multiply(jz, jy)
        jordan &= J(A.jordan_product(y, z)) == B.jordan_product(jy, jz)
    return hom, anti, jordan


@pytest.mark.parametrize("J", [transpose_map(2, F5), swap_transpose_map(2, QQ),
                               block_projection_map(2, F5), identity_map(triangular_algebra(3))],
                         ids=["transpose", "swap", "projection", "identity"])
def test_classification_matches_random_evaluation(J):
    flags = classify_map(J)
    hom, anti, jordan = _evaluate(J, random.Random(0))
    assert hom == (HOM in flags) and anti == (ANTIHOM in flags) and jordan == (JORDAN in flags)


def test_hom_and_antihom_imply_jordan():
    rng = random.Random(5)
    A = diagonal_algebra(2, F5)
    found = 0
    for _ in range(300):
        J = random_map(rng, A, A)
        flags = classify_map(J)
        if HOM in flags or ANTIHOM in flags:
            found += 1
            assert JORDAN in flags
    assert found > 0


@pytest.mark.parametrize("J", [transpose_map(2, F5), swap_transpose_map(2, F5),
                               identity_map(matrix_algebra(2, QQ)),
                               block_projection_map(2, QQ)],
                         ids=["transpose", "swap", "identity", "projection"])
def test_identity_suite(J):
    assert verify_ds(J).passed
    assert verify_pq(J).passed
    assert is_reversal(J)
    assert verify_eskor(J).passed


def test_ds_rejects_non_jordan_and_char2():
    rng = random.Random(1)
    M = matrix_algebra(2, F5)
    with pytest.raises(NotJordan):
        verify_ds(random_map(rng, M, M))
    with pytest.raises(CharacteristicTwo):
        verify_ds(transpose_map(2, GF(2)))


def test_pq_hypotheses():
    T = triangular_algebra(2, QQ)
    with pytest.raises(HypothesesNotMet):
        verify_pq(identity_map(T))
    M = matrix_algebra(2, QQ)
    with pytest.raises(HypothesesNotMet):
        verify_pq(AlgebraMap(M, M, [[0] * 4] * 4))


def test_non_jordan_map_is_not_reversal():
    rng = random.Random(2)
    M = matrix_algebra(2, F5)
    J = random_map(rng, M, M)
    res = is_reversal(J)
    assert not res and res.witness is not None
    x, y, z, w = (M.basis(i) for i in res.witness)
    lhs = J(M.multiply(M.multiply(M.multiply(x, y), z), w))
    lhs = tuple((a + b) % 5 for a, b in zip(lhs, J(M.multiply(M.multiply(M.multiply(w, z), y), x))))
    chain = lambda a, b, c, d: M.multiply(M.multiply(M.multiply(J(a), J(b)), J(c)), J(d))
    rhs = tuple((a + b) % 5 for a, b in zip(chain(x, y, z, w), chain(w, z, y, x)))
    assert lhs != rhs


def test_eskor_requires_generation():
    G = grassmann_example7(F5)
    F = matrix_algebra(1, F5)
    aug = AlgebraMap(G, F, [[1, 0, 0, 0, 0, 0, 0]])
    assert HOM in classify_map(aug)
    with pytest.raises(HypothesesNotMet):
        verify_eskor(aug, BlockAlgebra([F]))


def test_block_algebra_requires_simple_blocks():
    with pytest.raises(NotCertifiedSimple):
        BlockAlgebra([triangular_algebra(2, QQ)])
    B = m2_blocks(F5)
    assert B.algebra.dim == 8 and B.offsets == (0, 4, 8)
    assert (B.block_subspace(0) + B.block_subspace(1)).is_full()


def test_decompose_swap_transpose():
    J = swap_transpose_map(2, F5)
    B = m2_blocks(F5)
    dec = decompose(J, B)
    assert dec.U == B.block_subspace(0) and dec.V == B.block_subspace(1)
    assert dec.U0 == B.block_subspace(0) and dec.V0 == B.block_subspace(1)
    assert dec.kerJ.dim == 0
    assert all(v for k, v in dec.checklist.items() if k != "J_V0_hom_literal")
    assert dec.checklist["J_V0_hom_literal"] is False
    assert HOM in classify_map(dec.H) and ANTIHOM in classify_map(dec.K)


def test_decompose_transpose():
    J = transpose_map(2, QQ)
    dec = decompose(J, BlockAlgebra([matrix_algebra(2, QQ)]))
    assert dec.U.dim == 0 and dec.V.dim == 4
    assert all(v == 0 for r in dec.H.matrix for v in r)
    assert dec.K == J


def test_decompose_projection():
    J = block_projection_map(2, F5)
    dec = decompose(J, BlockAlgebra([matrix_algebra(2, F5)]))
    assert dec.U.is_full() and dec.V.dim == 0
    assert dec.U0.is_full() and dec.V0 == dec.kerJ and dec.kerJ.dim == 4
    assert dec.checklist["U0_plus_V0_is_A"]


def test_decompose_commutative_block_ties_to_hom():
    A = diagonal_algebra(2, QQ)
    B = BlockAlgebra([diagonal_algebra(1, QQ)] * 2)
    # F x F is commutative; Lie core is 0 so generation must be forced
    with pytest.raises(HypothesesNotMet):
        decompose(identity_map(A), B)
    dec = decompose(identity_map(A), B, force=True)
    assert dec.hom_blocks == (0, 1) and dec.antihom_blocks == ()


def test_decompose_errors():
    rng = random.Random(3)
    M = matrix_algebra(2, F5)
    with pytest.raises(NotJordan):
        decompose(random_map(rng, M, M), BlockAlgebra([M]))
    with pytest.raises(HypothesesNotMet):
        decompose(identity_map(M), m2_blocks(F5))


def test_block_unclassifiable():
    # over a simple block a surjective Jordan map is a hom or an antihom
    # unless the characteristic is 2; there (a, b) -> a + b on F x F is
    # Jordan without being multiplicative
    F2 = GF(2)
    A = diagonal_algebra(2, F2)
    B = BlockAlgebra([diagonal_algebra(1, F2)])
    J = AlgebraMap(A, B.algebra, [[1, 1]])
    assert classify_map(J) == {LINEAR, JORDAN, SURJECTIVE}
    with pytest.raises(BlockUnclassifiable) as exc:
        decompose(J, B, force=True)
    assert exc.value.index == 0


def test_theorem_jordan_reports():
    J = swap_transpose_map(2, F5)
    rep = verify_theorem_jordan(J.source, m2_blocks(F5), J)
    assert rep.passed and rep.details["decomposition"]["dim_U"] == 4
    M = matrix_algebra(2, QQ)
    rep = verify_theorem_jordan(M, BlockAlgebra([M]), identity_map(M))
    assert rep.passed and rep.details["decomposition"]["dim_V"] == 0
    G = grassmann_example7(F5)
    aug = AlgebraMap(G, matrix_algebra(1, F5), [[1, 0, 0, 0, 0, 0, 0]])
    rep = verify_theorem_jordan(G, BlockAlgebra([matrix_algebra(1, F5)]), aug)
    assert not rep.passed
    assert rep.details["hypotheses"]["generates"] is False
    assert rep.details["decomposition_asserted"] is False


def test_conjugated_surjective_jordan_maps_are_reversal():
    # x -> g x g^-1 composed with the swap-transpose map stays a surjective
    # Jordan map on a generating source
    M = matrix_algebra(2, F5)
    g = M.element(e11=1, e12=2, e22=1)
    g_inv = M.element(e11=1, e12=-2, e22=1)
    A = direct_product(M, M)
    conj = [tuple(M.multiply(M.multiply(g, M.basis(j)), g_inv)) for j in range(4)]
    C = [[conj[j][i] for j in range(4)] for i in range(4)]
    block = [list(r) + [0] * 4 for r in C] + [[0] * 4 + list(r) for r in C]
    Jc = AlgebraMap(A, A, block)
    assert classify_map(Jc) >= {HOM, SURJECTIVE}
    S = swap_transpose_map(2, F5)
    composed = AlgebraMap(A, A, [[sum(a * b for a, b in zip(row, col)) % 5
                                  for col in zip(*S.matrix)] for row in Jc.matrix])
    assert classify_map(composed) == {LINEAR, JORDAN, SURJECTIVE}
    assert is_reversal(composed)
    assert verify_theorem_jordan(A, m2_blocks(F5), composed).passed
