import pytest
from hypothesis import given, settings, strategies as st

from kirbycalc import constants
from kirbycalc.braidclasp import (
    WITT_HALL_CONVENTION, BraidWord, FreeWord, artin_action, braid_is_trivial, commutator,
    conjugate, format_braid, format_free_word, free_reduce, free_word_to_braid,
    ihx_braid_product, parse_braid, parse_free_word, pure_braid_generator,
    select_witt_hall_convention, verify_ihx_braid_identity, verify_witt_hall, witt_hall_factors,
    witt_hall_word,
)

X, Y, Z = (FreeWord.gen(3, k) for k in (1, 2, 3))


def shipped(name):
    return parse_braid(constants.data_text("braids", name))


def free_words(n, max_len=20):
    letters = st.sampled_from([k for k in range(-n, n + 1) if k])
    return st.lists(letters, max_size=max_len).map(lambda ls: FreeWord(n, ls))


def braids(s, max_len=30):
    letters = st.sampled_from([k for k in range(1 - s, s) if k])
    return st.lists(letters, max_size=max_len).map(lambda ls: BraidWord(s, ls))


# free words

def test_free_reduce_examples():
    assert free_reduce(FreeWord(2, [1, -1])).letters == ()
    w = FreeWord(2, [1, 2, -1])
    assert free_reduce(w) == w
    assert commutator(X, X).is_identity()


@settings(max_examples=200, deadline=None)
@given(free_words(3))
def test_free_reduce_idempotent_and_shortening(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert len(r) <= len(w)
    assert r.is_reduced()


@settings(max_examples=100, deadline=None)
@given(free_words(3), free_words(3), free_words(3))
def test_free_product_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_commutator_examples():
    assert len(commutator(X, Y)) == 4
    assert commutator(X, Y).inverse().reduced() == commutator(Y, X)
    for conv in ("left", "right"):
        assert conjugate(X, X, conv) == X


def test_conjugation_conventions():
    assert conjugate(X, Y, "left").letters == (-2, 1, 2)
    assert conjugate(X, Y, "right").letters == (2, 1, -2)
    with pytest.raises(ValueError):
        conjugate(X, Y, "middle")


def test_exponent_sums():
    assert FreeWord(3, [1, 2, -1, 3, 3]).exponent_sums() == (0, 1, 2)


def test_word_validation():
    with pytest.raises(ValueError):
        FreeWord(2, [3])
    with pytest.raises(ValueError):
        FreeWord(2, [0])
    with pytest.raises(ValueError):
        X * FreeWord.gen(2, 1)


# Witt-Hall

def test_exactly_one_convention():
    assert select_witt_hall_convention() == [WITT_HALL_CONVENTION]
    assert verify_witt_hall()
    assert not verify_witt_hall("right")


@pytest.mark.parametrize("omit", [0, 1, 2])
def test_witt_hall_with_a_factor_omitted(omit):
    assert not witt_hall_word(X, Y, Z, omit=omit).is_identity()


def test_witt_hall_trivial_inputs():
    one = FreeWord(3)
    assert witt_hall_word(one, one, one).is_identity()


def test_witt_hall_holds_for_any_substitution():
    # an identity in the free group survives substituting words for x, y, z
    a, b, c = FreeWord(2, [1, 2]), FreeWord(2, [-2, 1, 1]), FreeWord(2, [2, 2, -1])
    assert witt_hall_word(a, b, c).is_identity()


# Artin action

def test_sigma1_action():
    act = artin_action(BraidWord(2, [1]))
    assert [w.letters for w in act.images] == [(1, 2, -1), (1,)]


def test_sigma_inverse_pair():
    assert artin_action(BraidWord(2, [1, -1])).is_identity()
    assert artin_action(BraidWord(2, [-1, 1])).is_identity()


def test_braid_relation():
    assert artin_action(BraidWord(3, [1, 2, 1])) == artin_action(BraidWord(3, [2, 1, 2]))


def test_far_commutation():
    assert artin_action(BraidWord(5, [1, 3])) == artin_action(BraidWord(5, [3, 1]))
    assert artin_action(BraidWord(5, [2, 4])) == artin_action(BraidWord(5, [4, 2]))


def test_triviality_examples():
    assert braid_is_trivial(BraidWord(3))
    assert not braid_is_trivial(BraidWord(3, [1]))
    assert braid_is_trivial(BraidWord(3, [1, 2, 1, -2, -1, -2]))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 5).flatmap(lambda s: st.tuples(braids(s), braids(s))))
def test_action_is_homomorphism(pair):
    a, b = pair
    assert artin_action(a.then(b)) == artin_action(a).compose(artin_action(b))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 5).flatmap(braids))
def test_braid_times_inverse_trivial(b):
    assert braid_is_trivial(b.then(b.inverse()))


def test_stacking_convention():
    # sigma_1 on top of sigma_1^-1 is the word [1, -1]
    assert BraidWord(2, [1]).then(BraidWord(2, [-1])).letters == (1, -1)


def test_braid_validation():
    with pytest.raises(ValueError):
        BraidWord(3, [3])
    with pytest.raises(ValueError):
        BraidWord(3, [1]).then(BraidWord(4, [1]))


# pure braids

def test_pure_braid_generator_words():
    assert pure_braid_generator(1, 2, 2).letters == (1, 1)
    assert pure_braid_generator(1, 3, 3).letters == (2, 1, 1, -2)
    with pytest.raises(ValueError):
        pure_braid_generator(2, 2, 3)


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_pure_braid_generators_pure_and_nontrivial(s):
    for i in range(1, s):
        for j in range(i + 1, s + 1):
            A = pure_braid_generator(i, j, s)
            assert A.is_pure()
            assert not braid_is_trivial(A)


def test_permutation_of_sigma():
    assert BraidWord(3, [1]).permutation() == (1, 0, 2)


# IHX braid identity

def test_ihx_identity_with_empty_beta():
    assert verify_ihx_braid_identity(BraidWord(4), shipped("alpha.braid"))


def test_ihx_identity_on_shipped_braids():
    assert verify_ihx_braid_identity(shipped("beta1.braid"), shipped("alpha.braid"))


def test_ihx_identity_fails_for_sigma1_squared():
    assert not verify_ihx_braid_identity(BraidWord(4, [1, 1]), shipped("alpha.braid"))


def test_ihx_needs_four_strands():
    with pytest.raises(ValueError):
        ihx_braid_product(BraidWord(3), BraidWord(3))


def test_alpha_permutes_x_y_z():
    alpha = shipped("alpha.braid")
    x, y, z = (shipped(f"{n}.braid") for n in "xyz")
    for u, v in ((x, y), (y, z), (z, x)):
        assert artin_action(u.conjugated_by(alpha)) == artin_action(v)


def test_shipped_generators_are_pure_braid_generators():
    for name, i in zip("xyz", (1, 2, 3)):
        assert shipped(f"{name}.braid") == pure_braid_generator(i, 4, 4)


def test_shipped_beta1_is_first_witt_hall_factor():
    f1 = parse_free_word(constants.data_text("braids", "beta1.free"))
    assert f1 == witt_hall_factors(X, Y, Z)[0]
    gens = [shipped(f"{n}.braid") for n in "xyz"]
    assert free_word_to_braid(f1, gens) == shipped("beta1.braid")


# text formats

def test_braid_roundtrip():
    b = BraidWord(4, [1, -3, 2])
    assert parse_braid(format_braid(b)) == b
    w = FreeWord(3, [1, -2, 3])
    assert parse_free_word(format_free_word(w)) == w


@pytest.mark.parametrize("text", ["1 2", "braid 4\n1", "braid s=3\n3", "free n=2\nbraid"])
def test_braid_parse_errors(text):
    with pytest.raises(ValueError):
        parse_braid(text)
