from itertools import combinations, permutations
from math import gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from kirbycalc.intmat import (
    AbelianGroup, IntegerMatrix, D22_DISPLAY_VARIANT, bfs_decompose_opq, cokernel, d_pq,
    evaluate_word, format_matrix, ipq, is_in_opq, parse_matrix, slide_generators, slide_matrix,
    smith_normal_form, wall_generators,
)


def matrices(max_rows=5, max_cols=5, bound=10):
    return st.integers(1, max_rows).flatmap(lambda m: st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                           min_size=m, max_size=m).map(lambda rows: IntegerMatrix(rows, m, n))))


def perm_sign(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign *= -1 if length % 2 == 0 else 1
    return sign


def leibniz_det(A):
    n = A.rows
    return sum(perm_sign(p) * prod(A[i, p[i]] for i in range(n)) for p in permutations(range(n)))


def invariant_factors_by_minors(A):
    # d_k = gcd of k x k minors; factors are d_k / d_{k-1}
    out, prev = [], 1
    for k in range(1, min(A.shape) + 1):
        g = 0
        for rs in combinations(range(A.rows), k):
            for cs in combinations(range(A.cols), k):
                g = gcd(g, leibniz_det(A.submatrix(rs, cs)))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


# basic algebra

def test_identity_product():
    assert IntegerMatrix.identity(2) @ IntegerMatrix.identity(2) == IntegerMatrix.identity(2)


def test_slide_pair_cancels():
    assert slide_matrix(2, 1, 2, 1) @ slide_matrix(2, 1, 2, -1) == IntegerMatrix.identity(2)


def test_shape_mismatch_raises():
    with pytest.raises(ValueError):
        IntegerMatrix.identity(2) @ IntegerMatrix.identity(3)


def test_entries_length_checked():
    with pytest.raises(ValueError):
        IntegerMatrix([[1, 2], [3]])


def test_transpose_of_empty_rows():
    assert IntegerMatrix.zeros(0, 3).T.shape == (3, 0)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 4, 6))
def test_det_matches_leibniz(A):
    if A.is_square():
        assert A.det() == leibniz_det(A)


def test_inverse_of_unimodular():
    D = d_pq((2, 2))
    assert D.inverse() @ D == IntegerMatrix.identity(4)
    with pytest.raises(ValueError):
        IntegerMatrix.diag([2, 1]).inverse()


# Smith normal form

def test_snf_diag_2_3():
    assert smith_normal_form(IntegerMatrix.diag([2, 3])).S == IntegerMatrix.diag([1, 6])


def test_snf_zero():
    assert smith_normal_form(IntegerMatrix.zeros(2, 2)).S == IntegerMatrix.zeros(2, 2)


def test_snf_ipq():
    assert smith_normal_form(ipq((2, 2))).S == IntegerMatrix.identity(4)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_laws(A):
    U, S, V = smith_normal_form(A)
    assert U @ A @ V == S
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    assert S.is_diagonal()
    d = [x for x in S.diagonal() if x]
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert list(S.diagonal()[:len(d)]) == d


@settings(max_examples=80, deadline=None)
@given(matrices(4, 4, 8))
def test_snf_matches_determinantal_divisors(A):
    d = [x for x in smith_normal_form(A).S.diagonal() if x]
    assert d == invariant_factors_by_minors(A)


def test_snf_large_entries_stay_small():
    # a case that used to blow up the transform entries
    A = IntegerMatrix([[-7, -1, 8, -7, -9, -2], [10, -2, -4, -6, -2, 10],
                       [2, -6, 8, -8, 3, -10], [5, -10, -6, 6, -7, 8],
                       [6, -5, -5, 3, -10, 7], [-3, 4, 0, -1, -8, -5]])
    U, S, V = smith_normal_form(A)
    assert U @ A @ V == S
    assert max(map(abs, U.entries + V.entries)) < 10 ** 12


# cokernels

@pytest.mark.parametrize("A, group", [
    (IntegerMatrix.diag([1, -1]), AbelianGroup(0)),
    (IntegerMatrix([[2]]), AbelianGroup(0, (2,))),
    (IntegerMatrix([[0]]), AbelianGroup(1)),
    (IntegerMatrix([[2, 4], [6, 8]]), AbelianGroup(0, (2, 4))),
    (IntegerMatrix.zeros(3, 0), AbelianGroup(3)),
])
def test_cokernel(A, group):
    assert cokernel(A) == group


def test_cokernel_order_is_abs_det():
    A = IntegerMatrix([[3, 1, 0], [1, 4, 2], [0, 2, 5]])
    G = cokernel(A)
    assert G.free_rank == 0 and prod(G.torsion) == abs(A.det())


def test_group_str():
    assert str(AbelianGroup(2, (2, 6))) == "Z^2 + Z/2 + Z/6"
    assert str(AbelianGroup(0)) == "0"


# O(p,q;Z)

@pytest.mark.parametrize("sig, diag", [((2, 1), [1, 1, -1]), ((0, 0), []),
                                       ((2, 2), [1, 1, -1, -1])])
def test_ipq(sig, diag):
    assert ipq(sig) == IntegerMatrix.diag(diag)


def test_is_in_opq_examples():
    assert is_in_opq(IntegerMatrix.identity(4), (2, 2))
    assert not is_in_opq(slide_matrix(4, 1, 2, 1), (2, 2))
    assert is_in_opq(d_pq((2, 2)), (2, 2))
    with pytest.raises(ValueError):
        is_in_opq(IntegerMatrix.identity(3), (2, 2))


def test_dpq_22_block():
    assert d_pq((2, 2)).tolist() == [[1, 1, -1, 0], [-1, 1, 0, 1], [-1, 0, 1, 1], [0, 1, -1, 1]]


def test_dpq_33_row_three_is_identity_row():
    assert d_pq((3, 3)).row(2) == (0, 0, 1, 0, 0, 0)


def test_display_variant_is_not_orthogonal():
    assert not is_in_opq(D22_DISPLAY_VARIANT, (2, 2))


def test_wall_generator_counts():
    assert [name for name, _ in wall_generators((2, 2))] == \
        ["P1,2", "P3,4", "Q1", "Q2", "Q3", "Q4", "D"]
    assert len(wall_generators((3, 2))) == 10
    with pytest.raises(ValueError):
        wall_generators((1, 3))


@pytest.mark.parametrize("p", [2, 3, 4])
@pytest.mark.parametrize("q", [2, 3, 4])
def test_wall_generators_preserve_form(p, q):
    for _, T in wall_generators((p, q)):
        assert is_in_opq(T, (p, q))


# BFS decomposition

def test_bfs_identity_is_empty_word():
    assert bfs_decompose_opq(IntegerMatrix.identity(4), (2, 2), slide_generators(4), 3) == []


def test_bfs_q1_over_wall_set():
    gens = wall_generators((2, 2))
    gens.append(("D^-1", d_pq((2, 2)).inverse()))
    Q1 = dict(gens)["Q1"]
    assert bfs_decompose_opq(Q1, (2, 2), gens, 3) == ["Q1"]


def test_bfs_requires_inverse_closed_generators():
    with pytest.raises(ValueError):
        bfs_decompose_opq(d_pq((2, 2)), (2, 2), wall_generators((2, 2)), 2)


def test_bfs_shortest_slide_word_for_d22_has_length_6():
    gens = slide_generators(4)
    word = bfs_decompose_opq(d_pq((2, 2)), (2, 2), gens, 8)
    assert len(word) == 6
    assert evaluate_word(word, gens, 4) == d_pq((2, 2))


@pytest.mark.slow
def test_bfs_exact_length_8():
    gens = slide_generators(4)
    word = bfs_decompose_opq(d_pq((2, 2)), (2, 2), gens, 8, exact_length=True)
    assert len(word) == 8
    assert evaluate_word(word, gens, 4) == d_pq((2, 2))
    # freely reduced: no generator next to its own inverse
    inv = {f"W{n[1:-1]}{'-' if n[-1] == '+' else '+'}": n for n, _ in gens}
    assert all(inv.get(a) != b for a, b in zip(word, word[1:]))


def test_bfs_rejects_non_member():
    with pytest.raises(ValueError):
        bfs_decompose_opq(slide_matrix(4, 1, 2, 1), (2, 2), slide_generators(4), 2)


# text format

def test_matrix_roundtrip_with_comments():
    A = IntegerMatrix([[1, -2], [0, 7]])
    assert parse_matrix("# comment\n" + format_matrix(A)) == A


def test_matrix_parse_errors():
    with pytest.raises(ValueError):
        parse_matrix("2 2\n1 2 3")
    with pytest.raises(ValueError):
        parse_matrix("1 1\nx")
