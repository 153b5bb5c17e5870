import random

import pytest

from graphmub.fields import PolyZp
from graphmub.linalg import MatZp, congruence, rank_mod_p
from oracles import char_poly_cofactor, det_cofactor, rank_brute

# Worked three-qutrit fixtures (p = 3, n = 3, f = x^3 + x^2 + 2x + 1)
C3 = MatZp(3, [[0, 1, 0], [0, 0, 1], [2, 1, 2]])
Q3 = MatZp(3, [[1, 0, 2], [0, 0, 1], [2, 1, 1]])
Q3_SQ = MatZp(3, [[2, 2, 1], [2, 1, 1], [1, 1, 0]])
P3 = MatZp(3, [[0, 0, 1], [0, 1, 2], [1, 2, 2]])
P3_INV = MatZp(3, [[2, 1, 1], [1, 1, 0], [1, 0, 0]])
B0_3 = MatZp(3, [[0, 0, 1], [0, 1, 2], [1, 2, 2]])

# Three-qubit tridiagonal fixtures (p = 2, d = (1, 0, 0))
Q2 = MatZp(2, [[1, 1, 0], [1, 0, 1], [0, 1, 0]])


def random_mat(rng, p, n):
    return MatZp(p, [[rng.randrange(p) for _ in range(n)] for _ in range(n)])


def random_invertible(rng, p, n):
    while True:
        m = random_mat(rng, p, n)
        if m.det() != 0:
            return m


def test_product_fixture_three_qutrits():
    assert Q3 @ Q3 == Q3_SQ


def test_additive_identity():
    rng = random.Random(3)
    for p in (2, 3, 5):
        z = MatZp.zeros(p, 3)
        for _ in range(10):
            a = random_mat(rng, p, 3)
            assert a + z == a


def test_difference_fixture_three_qubits():
    assert Q2 - MatZp.identity(2, 3) == MatZp(2, [[0, 1, 0], [1, 1, 1], [0, 1, 1]])


def test_det_trivial():
    for p in (2, 3, 7):
        for n in (1, 2, 4):
            assert MatZp.identity(p, n).det() == 1
            assert MatZp.zeros(p, n).det() == 0


def test_det_fixture_char2():
    assert MatZp(2, [[0, 1, 0], [1, 1, 1], [0, 1, 1]]).det() == 1


def test_det_matches_cofactor_oracle():
    rng = random.Random(17)
    for _ in range(120):
        p = rng.choice((2, 3, 5, 7))
        n = rng.randrange(1, 5)
        m = random_mat(rng, p, n)
        assert m.det() == det_cofactor(m.to_lists(), p)


def test_rank_trivial():
    assert MatZp.zeros(5, 3).rank() == 0
    assert rank_mod_p([[1, 0]], 2) == 1


def test_rank_matches_brute():
    rng = random.Random(19)
    for _ in range(60):
        p = rng.choice((2, 3, 5))
        nr = rng.randrange(1, 4)
        nc = rng.randrange(1, 4)
        block = [[rng.randrange(p) for _ in range(nc)] for _ in range(nr)]
        assert rank_mod_p(block, p) == rank_brute(block, p)


def test_det_nonzero_iff_full_rank():
    rng = random.Random(23)
    for _ in range(200):
        p = rng.choice((2, 3, 5, 7))
        n = rng.randrange(1, 6)
        m = random_mat(rng, p, n)
        assert (m.det() != 0) == (m.rank() == n)


def test_inverse_fixture():
    assert P3.inverse() == P3_INV


def test_inverse_roundtrip():
    rng = random.Random(29)
    for _ in range(60):
        p = rng.choice((2, 3, 5, 7))
        n = rng.randrange(1, 6)
        m = random_invertible(rng, p, n)
        assert m @ m.inverse() == MatZp.identity(p, n)


def test_inverse_singular_raises():
    with pytest.raises(ZeroDivisionError):
        MatZp.zeros(3, 2).inverse()


def test_companion_fixtures():
    f = PolyZp(3, [1, 2, 1, 1])  # x^3 + x^2 + 2x + 1
    assert MatZp.companion(f) == C3
    assert MatZp.companion(PolyZp(5, [3, 1])) == MatZp(5, [[2]])  # x + 3 -> (-3)
    assert MatZp.companion(PolyZp(2, [1, 1, 0, 1])) == MatZp(
        2, [[0, 1, 0], [0, 0, 1], [1, 1, 0]]
    )


def test_companion_rejects_nonmonic():
    with pytest.raises(ValueError):
        MatZp.companion(PolyZp(3, [1, 2]))


def test_char_poly_fixtures():
    assert Q2.char_poly() == PolyZp(2, [1, 0, 1, 1])  # x^3 + x^2 + 1
    assert MatZp(3, [[1, 1], [1, 0]]).char_poly() == PolyZp(3, [2, 2, 1])


def test_char_poly_of_companion_is_the_polynomial():
    rng = random.Random(31)
    for _ in range(200):
        p = rng.choice((2, 3, 5, 7))
        n = rng.randrange(1, 9)
        f = PolyZp(p, [rng.randrange(p) for _ in range(n)] + [1])
        assert MatZp.companion(f).char_poly() == f


def test_char_poly_matches_cofactor_oracle():
    rng = random.Random(37)
    for _ in range(80):
        p = rng.choice((2, 3, 5, 7))
        n = rng.randrange(1, 6)
        m = random_mat(rng, p, n)
        assert m.char_poly() == char_poly_cofactor(m)


def test_char_poly_invariant_under_similarity():
    rng = random.Random(41)
    for _ in range(50):
        p = rng.choice((2, 3, 5))
        n = rng.randrange(1, 6)
        m = random_mat(rng, p, n)
        t = random_invertible(rng, p, n)
        assert (t @ m @ t.inverse()).char_poly() == m.char_poly()


def test_congruence_identity():
    rng = random.Random(43)
    for _ in range(10):
        b = random_mat(rng, 5, 4)
        assert congruence(MatZp.identity(5, 4), b) == b


def test_congruence_fixture_three_qutrits():
    assert congruence(P3, B0_3.scale(2)) == MatZp.identity(3, 3)


def test_congruence_empty_diagonal_block():
    # [[1,1],[1,-1]] applied to [[0,d],[d,0]] gives [[2d,0],[0,-2d]]
    for p in (3, 5, 7):
        omega = MatZp(p, [[1, 1], [1, -1]])
        for d in range(1, p):
            block = MatZp(p, [[0, d], [d, 0]])
            assert congruence(omega, block) == MatZp.diagonal(p, [2 * d, -2 * d])


def test_congruence_preserves_symmetry_and_nonsingularity():
    rng = random.Random(47)
    for _ in range(60):
        p = rng.choice((2, 3, 5, 7))
        n = rng.randrange(1, 6)
        b = random_mat(rng, p, n)
        b = b + b.transpose()  # symmetric
        t = random_invertible(rng, p, n)
        out = congruence(t, b)
        assert out.is_symmetric
        assert (out.det() != 0) == (b.det() != 0)


def test_matrix_power():
    assert Q3**2 == Q3_SQ
    assert Q3**0 == MatZp.identity(3, 3)
    assert Q3**-1 == Q3.inverse()


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        MatZp.identity(2, 2) @ MatZp.identity(2, 3)
    with pytest.raises(ValueError):
        MatZp.identity(2, 2) + MatZp.identity(3, 2)
