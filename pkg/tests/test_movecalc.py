import pytest
from hypothesis import given, settings, strategies as st

from kirbycalc.intmat import IntegerMatrix, SignatureType, d_pq, ipq
from kirbycalc.movecalc import (
    MoveSequence, Reorder, Reorient, Slide, admissible_type, evolve_lk, expand_d_move,
    format_sequence, is_band_slide_realizable, normalize_admissible, parse_sequence, phi, reverse,
)


@st.composite
def sequences(draw, max_n=6, max_len=20):
    n = draw(st.integers(2, max_n))
    idx = st.integers(1, n)
    moves = []
    for _ in range(draw(st.integers(0, max_len))):
        kind = draw(st.sampled_from("PQW"))
        if kind == "Q":
            moves.append(Reorient(draw(idx)))
            continue
        i = draw(idx)
        j = draw(idx.filter(lambda x: x != i))
        moves.append(Reorder(i, j) if kind == "P" else Slide(i, j, draw(st.sampled_from((1, -1)))))
    return MoveSequence(n, moves)


@st.composite
def symmetric(draw, n, bound=5):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = draw(st.integers(-bound, bound))
    return IntegerMatrix(rows, n, n)


def test_phi_empty_is_identity():
    assert phi(MoveSequence(3)) == IntegerMatrix.identity(3)


def test_phi_reorder():
    assert phi(MoveSequence(2, [Reorder(1, 2)])).tolist() == [[0, 1], [1, 0]]


def test_phi_double_slide():
    assert phi(MoveSequence(2, [Slide(1, 2), Slide(1, 2)])).tolist() == [[1, 2], [0, 1]]


def test_phi_first_move_is_rightmost_factor():
    a, b = Slide(1, 2), Reorient(1)
    assert phi(MoveSequence(2, [a, b])) == b.matrix(2) @ a.matrix(2)


def test_reverse_of_single_slide():
    assert reverse(MoveSequence(2, [Slide(1, 2, 1)])).moves == (Slide(1, 2, -1),)
    assert reverse(MoveSequence(2)).moves == ()


@settings(max_examples=200, deadline=None)
@given(sequences())
def test_reverse_law(seq):
    assert phi(reverse(seq)) @ phi(seq) == IntegerMatrix.identity(seq.n)


def test_evolve_lk_slide_convention():
    seq = MoveSequence(2, [Slide(1, 2, 1)])
    assert evolve_lk(IntegerMatrix.diag([1, -1]), seq).tolist() == [[0, -1], [-1, -1]]


def test_evolve_lk_band_slide_is_identity():
    lk = IntegerMatrix([[2, 1, 0], [1, -1, 3], [0, 3, 0]])
    assert evolve_lk(lk, MoveSequence(3, [Slide(2, 3, 1), Slide(2, 3, -1)])) == lk


def test_evolve_lk_d22_preserves_ipq():
    assert evolve_lk(ipq((2, 2)), expand_d_move(4, (1, 2, 3, 4))) == ipq((2, 2))


def test_evolve_lk_rejects_bad_input():
    with pytest.raises(ValueError):
        evolve_lk(IntegerMatrix([[0, 1], [0, 0]]), MoveSequence(2))
    with pytest.raises(ValueError):
        evolve_lk(IntegerMatrix.identity(3), MoveSequence(2))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_move_by_move_congruence(data):
    seq = data.draw(sequences())
    lk = data.draw(symmetric(seq.n))
    step = lk
    for m in seq:
        x = m.matrix(seq.n)
        step = x @ step @ x.T
    assert evolve_lk(lk, seq) == step


def test_band_slide_realizable_examples():
    assert is_band_slide_realizable(MoveSequence(2, [Slide(1, 2, 1), Slide(1, 2, -1)]))
    assert not is_band_slide_realizable(MoveSequence(2, [Slide(1, 2, 1)]))
    assert is_band_slide_realizable(MoveSequence(2, [Reorder(1, 2), Reorder(1, 2)]))


def test_admissible_type():
    assert admissible_type(IntegerMatrix.diag([1, 1, -1])) == SignatureType(2, 1)
    assert admissible_type(IntegerMatrix.diag([-1, 1])) is None
    assert admissible_type(IntegerMatrix([[1, 1], [1, -1]])) is None


def test_normalize_admissible():
    seq, sig = normalize_admissible(IntegerMatrix.diag([-1, 1]))
    assert seq.moves == (Reorder(1, 2),) and sig == (1, 1)
    seq, sig = normalize_admissible(IntegerMatrix.diag([1, 1]))
    assert seq.moves == () and sig == (2, 0)
    assert normalize_admissible(IntegerMatrix.diag([1, 2])) is None


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from((1, -1)), min_size=1, max_size=7))
def test_normalize_reaches_ipq(diag):
    seq, sig = normalize_admissible(IntegerMatrix.diag(diag))
    assert evolve_lk(IntegerMatrix.diag(diag), seq) == ipq(sig)


def test_expand_d_move():
    assert phi(expand_d_move(4, (1, 2, 3, 4))) == d_pq((2, 2))
    assert phi(expand_d_move(4, (1, 2, 3, 4), -1)) == d_pq((2, 2)).inverse()
    T = phi(expand_d_move(6, (1, 2, 4, 5)))
    for k in (2, 5):
        assert T.row(k) == tuple(int(c == k) for c in range(6))
        assert T.col(k) == tuple(int(c == k) for c in range(6))


def test_expand_d_move_errors():
    with pytest.raises(ValueError):
        expand_d_move(4, (1, 1, 2, 3))
    with pytest.raises(ValueError):
        expand_d_move(4, (1, 2, 3, 5))


def test_move_validation():
    with pytest.raises(ValueError):
        Slide(1, 1)
    with pytest.raises(ValueError):
        Slide(1, 2, 2)
    with pytest.raises(ValueError):
        MoveSequence(2, [Slide(1, 3)])


def test_sequence_text_roundtrip():
    seq = MoveSequence(4, [Reorder(1, 2), Reorient(3), Slide(4, 1, -1)])
    assert parse_sequence(format_sequence(seq)) == seq


def test_sequence_macros():
    bs = parse_sequence("n 2\nBS 1 2  # band-slide\n")
    assert bs.moves == (Slide(1, 2, 1), Slide(1, 2, -1))
    d = parse_sequence("n 4\nD+ 1 2 3 4\n")
    assert phi(d) == d_pq((2, 2))
    assert phi(parse_sequence("n 4\nD- 1 2 3 4\n")) @ phi(d) == IntegerMatrix.identity(4)


@pytest.mark.parametrize("text", ["P 1 2", "n 2\nX 1", "n 2\nW+ 1", "n 2\nW+ 1 a", "n 2\nn 3"])
def test_sequence_parse_errors(text):
    with pytest.raises(ValueError):
        parse_sequence(text)
