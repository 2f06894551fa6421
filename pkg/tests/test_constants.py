import pytest

from kirbycalc import constants
from kirbycalc.homlink import format_curves
from kirbycalc.intmat import IntegerMatrix

H = IntegerMatrix([[0, 1], [1, 0]])


@pytest.mark.parametrize("name", sorted(constants.DERIVATIONS))
def test_stored_constant_matches_derivation(name):
    assert format_curves(constants.derive(name)) == constants.stored_text(name)


def test_ihx_block():
    cs = constants.ihx_block()
    assert cs.g == 4 and cs.m == 6
    assert cs.internal_lk == H.block_sum(H).block_sum(H)
    assert all(not any(c) for c in cs.classes)


def test_ihx_adm_block():
    cs = constants.ihx_adm_block()
    assert cs.g == 4 and cs.m == 9
    assert cs.internal_lk == IntegerMatrix.diag([-1, 1, -1] * 3)
    assert all(not any(c) for c in cs.classes)


def test_lantern_sides():
    K, Kp = constants.lantern_k(), constants.lantern_k_prime()
    assert (K.m, Kp.m) == (4, 3)
    assert K.classes == ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))
    assert Kp.classes == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
    assert K.internal_lk == IntegerMatrix.identity(4)
    assert Kp.internal_lk == IntegerMatrix.identity(3)


def test_clasper_adm_certificate():
    result, target = constants.clasper_adm_certificate()
    assert result == target == IntegerMatrix.diag([-1, 1, -1])
    assert constants.clasper_adm_holds()
    seq = constants.clasper_adm_sequence()
    assert seq.n == 3 and len(seq) == 4


def test_block_consistency():
    assert constants.block_consistency() == {"ihx": True, "ihx_adm": True}


def test_provenance_all_match():
    assert all(ok for _, ok in constants.provenance())
