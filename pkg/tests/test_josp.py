from fractions import Fraction

import pytest

from jsplit.josp import (
    JIdx,
    SuperMatrix,
    build_josp_matrix,
    build_josp_table,
    josp_basis,
    josp_dim,
    josp_index_matrix,
    josp_params_from_labels,
    matrix_parity,
    osp,
    osp_matrix,
    skew_dim,
    skew_index_matrix,
    skew_basis,
    structure_iso_check,
    superinvolution_laws,
)
from jsplit.ratlinalg import RatMatrix, ZERO, ONE
from jsplit.superalgebra import check_super_jordan, check_supercommutative

F = Fraction
HALF = F(1, 2)

GRID = [(1, 1), (2, 1), (1, 2), (3, 1)]


def test_dimension_formula():
    for n, m in [(1, 0), (1, 1), (2, 1), (1, 2), (3, 1), (2, 2)]:
        A = build_josp_table(n, m)
        assert A.dim == josp_dim(n, m) == ((n + 2 * m) ** 2 + n - 2 * m) // 2
    assert build_josp_table(2, 1).dim == 8
    assert build_josp_table(1, 1).dim == 4


def test_basis_of_josp11(josp11):
    assert josp11.basis_labels == ("h11", "v11", "u11", "k11")
    assert josp11.parity == (0, 0, 1, 1)


def test_table_values_josp11(josp11):
    A = josp11
    h, v, u, k = (A.basis_element(t) for t in range(4))
    assert (u * k).coords == (v.scale(HALF) - h).coords
    assert (h * u).coords == u.scale(HALF).coords
    assert (u * v).coords == u.scale(HALF).coords
    assert (k * h).coords == k.scale(HALF).coords
    assert (u * u).is_zero()          # s~ has no diagonal, so u∘u collapses
    assert (h * v).is_zero()


def test_table_values_mixed_symplectic():
    A = build_josp_table(1, 2)
    ix = A.label_index
    elt = lambda s: A.basis_element(ix(s))
    u11, u12, k11, k12 = elt("u11"), elt("u12"), elt("k11"), elt("k12")
    s12, st12, v12 = elt("s12"), elt("st12"), elt("v12")
    # odd·odd lands in the even span with the alternating normalization
    assert (u11 * u12).coords == st12.scale(HALF).coords
    assert (u12 * u11).coords == st12.scale(-HALF).coords
    assert (u11 * k11).coords == (elt("v11").scale(HALF) - elt("h11")).coords
    assert (u12 * k11).coords == v12.scale(HALF).coords
    assert (u11 * s12).coords == k12.scale(HALF).coords
    assert (k11 * k12).coords == s12.scale(-HALF).coords


def test_unit_is_trace_part(josp21):
    A = josp21
    unit = [ZERO] * A.dim
    unit[A.label_index("h11")] = ONE
    unit[A.label_index("h22")] = ONE
    unit[A.label_index("v11")] = ONE
    assert A.unit == tuple(unit)


def test_degenerate_m0_is_symmetric_matrices():
    A = build_josp_table(1, 0)
    assert A.dim == 1
    e = A.basis_element(0)
    assert (e * e).coords == e.coords
    B = build_josp_table(3, 0)
    assert B.dim == 6
    assert check_supercommutative(B).holds
    assert check_super_jordan(B).holds


def test_rejects_bad_sizes():
    with pytest.raises(ValueError):
        build_josp_table(0, 1)
    with pytest.raises(ValueError):
        build_josp_matrix(0, 1)
    with pytest.raises(ValueError):
        build_josp_table(1, -1)


# -- matrix realization -------------------------------------------------------


def test_osp_fixes_identity():
    n, m = 2, 1
    size = n + 2 * m
    I = SuperMatrix(n, m, RatMatrix.identity(size))
    assert osp(I).mat.sub(I.mat).is_zero()


def test_osp_fixes_corner_unit():
    # E_{1,1} sits in the symmetric corner of the even block
    n = m = 1
    e11 = josp_index_matrix(JIdx("h", 1, 1), n, m)
    assert osp_matrix(e11, n, m).sub(e11).is_zero()


def test_osp_fixes_whole_basis():
    for n, m in GRID:
        for idx in josp_basis(n, m):
            X = josp_index_matrix(idx, n, m)
            assert osp_matrix(X, n, m).sub(X).is_zero(), idx


def test_osp_negates_skew_basis():
    for n, m in [(1, 1), (2, 1), (1, 2)]:
        for idx in skew_basis(n, m):
            X = skew_index_matrix(idx, n, m)
            assert osp_matrix(X, n, m).add(X).is_zero(), idx


def test_osp_shape_validation():
    with pytest.raises(ValueError):
        osp_matrix(RatMatrix.identity(4), 1, 1)


def test_h_plus_skew_decomposition():
    # every matrix unit splits as an osp-fixed plus an osp-negated half
    n, m = 1, 1
    size = n + 2 * m
    for r in range(size):
        for c in range(size):
            e = RatMatrix.zeros(size, size)
            entries = list(e.entries)
            entries[r * size + c] = ONE
            e = RatMatrix(size, size, tuple(entries))
            ie = osp_matrix(e, n, m)
            sym = e.add(ie).scale(HALF)
            skw = e.sub(ie).scale(HALF)
            assert sym.add(skw).sub(e).is_zero()
            assert osp_matrix(sym, n, m).sub(sym).is_zero()
            assert osp_matrix(skw, n, m).add(skw).is_zero()


def test_dim_counts_match_h_skew_split():
    for n, m in GRID:
        assert josp_dim(n, m) + skew_dim(n, m) == (n + 2 * m) ** 2


def test_matrix_and_table_agree():
    for n, m in GRID:
        table = build_josp_table(n, m)
        matrix = build_josp_matrix(n, m)
        assert structure_iso_check(table, matrix, list(range(table.dim)))


def test_iso_check_is_reflexive(josp11):
    assert structure_iso_check(josp11, josp11, [0, 1, 2, 3])


def test_iso_check_rejects_mismatch(josp11, josp21):
    with pytest.raises(ValueError):
        structure_iso_check(josp11, josp21, list(range(4)))
    with pytest.raises(ValueError, match="parity"):
        structure_iso_check(josp11, josp11, [2, 1, 0, 3])


def test_iso_check_detects_wrong_map(josp11):
    # swapping u and k is parity-preserving but not an isomorphism map here
    assert not structure_iso_check(josp11, josp11, [0, 1, 3, 2])


def test_superinvolution_laws_pass():
    for n, m in [(1, 1), (2, 1), (1, 2)]:
        report = superinvolution_laws(n, m)
        assert report.holds, (n, m)


def test_superinvolution_laws_fail_with_identity_u():
    # with the symplectic form replaced by the identity the map is still a
    # signed antihomomorphism (conjugating one never breaks that), but it
    # stops squaring to the identity on the odd blocks
    n = m = 1
    bad_u = RatMatrix.identity(2)
    report = superinvolution_laws(n, m, u_override=bad_u)
    assert not report.holds
    bad_involution = [
        v for v in report.violations
        if v[0][0] == "involution"
        and matrix_parity(n, m, v[0][1], v[0][2]) == 1
    ]
    assert bad_involution


def test_matrix_parity_blocks():
    assert matrix_parity(1, 1, 0, 0) == 0
    assert matrix_parity(1, 1, 0, 1) == 1
    assert matrix_parity(1, 1, 2, 1) == 0
    assert matrix_parity(1, 1, 2, 0) == 1


def test_params_recovered_from_labels(josp21):
    assert josp_params_from_labels(josp21) == (2, 1)
    # also from labels alone, without the attached attribute
    from jsplit.superalgebra import Superalgebra

    clone = Superalgebra(josp21.name, josp21.parity, josp21.basis_labels,
                         {(i, j): list(josp21.product_row(i, j))
                          for i in range(josp21.dim)
                          for j in range(josp21.dim)
                          if josp21.product_row(i, j)},
                         unit=josp21.unit)
    assert josp_params_from_labels(clone) == (2, 1)
