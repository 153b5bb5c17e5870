import json
import random

import pytest

from graphmub.fields import PolyZp
from graphmub.linalg import MatZp
from graphmub.mubs import (
    MubSet,
    adjacency_set,
    canonical_json,
    coeffs_to_index,
    from_document,
    fundamental_graphs,
    index_to_coeffs,
    mub_set,
    power_set,
    shift_set,
    to_document,
    verify_mu_condition,
)
from graphmub.symrep import symmetric_representation, symmetrize_companion, tridiagonal_rep

F27 = PolyZp(3, [1, 2, 1, 1])

Q23 = MatZp(2, [[1, 1, 0], [1, 0, 1], [0, 1, 0]])
Q23_SQ = MatZp(2, [[0, 1, 1], [1, 0, 0], [1, 0, 1]])


def qubit_triple_family():
    return mub_set(2, 3, method="tridiag", d=(1, 0, 0))


def qubit_triple_expected_set():
    eye = MatZp.identity(2, 3)
    zero = MatZp.zeros(2, 3)
    return {
        zero, eye, Q23, Q23_SQ,
        eye + Q23, eye + Q23_SQ, Q23 + Q23_SQ, eye + Q23 + Q23_SQ,
    }


def random_symmetric(rng, p, n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randrange(p)
    return MatZp(p, rows)


def test_index_conventions():
    assert index_to_coeffs(0, 3, 3) == (0, 0, 0)
    assert index_to_coeffs(1, 3, 3) == (1, 0, 0)
    assert index_to_coeffs(3, 3, 3) == (0, 1, 0)
    for idx in range(27):
        assert coeffs_to_index(index_to_coeffs(idx, 3, 3), 3) == idx


def test_family_basics():
    fam = qubit_triple_family()
    assert len(fam.matrices) == 8
    assert fam.matrices[0] == MatZp.zeros(2, 3)
    assert fam.matrices[1] == MatZp.identity(2, 3)
    assert all(m.is_symmetric for m in fam.matrices)
    assert fam.num_bases == 9


def test_three_qubit_family_matches_expected_set():
    assert set(qubit_triple_family().matrices) == qubit_triple_expected_set()


def test_single_vertex_family():
    fam = mub_set(3, 1)
    assert set(fam.matrices) == {MatZp(3, [[0]]), MatZp(3, [[1]]), MatZp(3, [[2]])}


def test_random_witness_family_size_and_symmetry():
    rng = random.Random(211)
    for p, n in ((2, 4), (3, 2), (5, 2), (7, 1)):
        rep = symmetric_representation(p, n)
        fam = adjacency_set(rep)
        assert len(set(fam.matrices)) == p**n
        assert all(m.is_symmetric for m in fam.matrices)


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (3, 3), (2, 6)])
def test_closure_under_subtraction(p, n):
    fam = mub_set(p, n)
    members = set(fam.matrices)
    for a in fam.matrices:
        for b in fam.matrices:
            assert a - b in members


def test_fundamental_graphs_fixtures():
    rep = tridiagonal_rep(2, (1, 0, 0))
    fg = fundamental_graphs(rep)
    assert fg == [MatZp.identity(2, 3), Q23, Q23_SQ]

    rep27 = symmetrize_companion(F27)
    fg27 = fundamental_graphs(rep27)
    assert fg27[0] == MatZp.identity(3, 3)
    assert fg27[1] == rep27.q
    assert fg27[2] == MatZp(3, [[2, 2, 1], [2, 1, 1], [1, 1, 0]])

    rep1 = symmetric_representation(5, 1)
    assert fundamental_graphs(rep1) == [MatZp(5, [[1]])]


def test_every_member_is_combination_of_fundamental_graphs():
    fam = qubit_triple_family()
    fg = fundamental_graphs(fam.witness)
    for idx, m in enumerate(fam.matrices):
        coeffs = fam.coeff_vector(idx)
        acc = MatZp.zeros(2, 3)
        for a, g in zip(coeffs, fg):
            if a:
                acc = acc + g.scale(a)
        assert acc == m


@pytest.mark.parametrize("p,n,kwargs", [
    (2, 3, {"d": (1, 0, 0)}),
    (3, 2, {}),
    (3, 3, {"method": "companion", "poly": F27}),
    (2, 6, {}),
    (3, 5, {"d": (2, 1, 2, 0, 1)}),  # five-qutrit primitive seed
])
def test_power_enumeration_matches_combinations(p, n, kwargs):
    rep = symmetric_representation(p, n, primitive=True, **kwargs) \
        if "poly" not in kwargs else symmetrize_companion(kwargs["poly"])
    fam_powers = power_set(rep)
    fam_lin = adjacency_set(rep)
    assert fam_powers.matrices == fam_lin.matrices
    assert len(fam_powers.matrices) == p**n


def test_power_enumeration_rejects_nonprimitive():
    # d = (1, 2) over Z_3 has characteristic polynomial x^2 + 1: irreducible,
    # order of x is 4 != 8, so not primitive
    rep = tridiagonal_rep(3, (1, 2))
    assert rep.f == PolyZp(3, [1, 0, 1])
    with pytest.raises(ValueError):
        power_set(rep)


def test_verify_condition_passes_closure_and_pairwise():
    fam = qubit_triple_family()
    assert verify_mu_condition(fam).mode == "closure"
    assert verify_mu_condition(fam).ok
    full = verify_mu_condition(fam, pairwise=True)
    assert full.mode == "pairwise" and full.ok


@pytest.mark.parametrize("p,n", [(3, 3), (5, 2), (7, 2), (7, 3)])
def test_verify_condition_exhaustive_pairwise(p, n):
    assert verify_mu_condition(mub_set(p, n), pairwise=True).ok


def test_verify_condition_reports_first_failing_pair():
    bad = MubSet(
        p=2, n=2,
        matrices=(MatZp.zeros(2, 2), MatZp(2, [[1, 0], [0, 0]])),
        field_rep=False,
    )
    report = verify_mu_condition(bad)
    assert not report.ok
    assert report.failing_pair == (0, 1)


def test_verify_condition_closure_mode_failure():
    bad = MubSet(
        p=2, n=2,
        matrices=(MatZp.zeros(2, 2), MatZp(2, [[1, 0], [0, 0]])),
        field_rep=True,
    )
    report = verify_mu_condition(bad)
    assert not report.ok and report.mode == "closure"
    assert report.failing_pair == (1, 0)


def test_shift_preserves_condition():
    rng = random.Random(223)
    for p, n in ((2, 3), (3, 2), (5, 2)):
        fam = mub_set(p, n)
        for _ in range(20):
            m = random_symmetric(rng, p, n)
            shifted = shift_set(fam, m)
            assert not shifted.field_rep
            assert verify_mu_condition(shifted).ok


def test_shift_fixture_and_inverse():
    fam = qubit_triple_family()
    m = MatZp(2, [[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    shifted = shift_set(fam, m)
    assert shifted.matrices[0] == m
    assert shifted.shifts == (m,)
    zero_shift = shift_set(fam, MatZp.zeros(2, 3))
    assert zero_shift.matrices == fam.matrices
    # adding m then (p-1) m restores every matrix
    restored = shift_set(shifted, m)  # p = 2: m + m = 0
    assert restored.matrices == fam.matrices


def test_shift_rejects_nonsymmetric():
    fam = qubit_triple_family()
    with pytest.raises(ValueError):
        shift_set(fam, MatZp(2, [[0, 1, 0], [0, 0, 0], [0, 0, 0]]))


def test_family_sizes_examples():
    assert mub_set(2, 3).num_bases == 9
    assert mub_set(3, 3).num_bases == 28
    assert mub_set(2, 1).num_bases == 3


# -- interchange format ------------------------------------------------------


def test_document_roundtrip_identity():
    fam = qubit_triple_family()
    doc = to_document(fam)
    text = canonical_json(doc)
    back = from_document(json.loads(text))
    assert back.matrices == fam.matrices
    assert back.p == fam.p and back.n == fam.n
    assert back.field_rep
    assert canonical_json(to_document(back)) == text


def test_document_roundtrip_shifted():
    fam = qubit_triple_family()
    m = MatZp(2, [[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    shifted = shift_set(fam, m)
    back = from_document(json.loads(canonical_json(to_document(shifted))))
    assert back.matrices == shifted.matrices
    assert not back.field_rep
    assert back.shifts == (m,)


def test_document_validation():
    with pytest.raises(ValueError):
        from_document({"p": 4, "n": 1, "matrices": [[[0]]]})
    with pytest.raises(ValueError):
        from_document({"p": 2, "n": 2, "matrices": [[[0, 1], [0, 0]]]})
    with pytest.raises(ValueError):
        from_document({"p": 2, "n": 2, "matrices": []})
    with pytest.raises(ValueError):
        from_document({"p": 2, "n": 3, "matrices": [[[0, 0], [0, 0]]]})
