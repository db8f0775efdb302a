import pytest
from hypothesis import given, strategies as st

from braidforge.braid_core import BraidWord, concat, full_twist, half_twist, permutation_of
from braidforge.garside import (
    NotPositiveError,
    OracleBoundError,
    SimpleElement,
    extract_full_twists,
    left_divide_letter,
    normal_form,
    oracle_divisible_by_delta,
    oracle_full_twists,
    positive_class,
    positive_equal,
)

from conftest import braid_words

SIGMA1_SQ_TWIST = BraidWord(3, (1, 1, 1, 2, 1, 2, 1, 2))


def small_positive_words():
    return braid_words(min_strands=2, max_strands=4, max_len=10)


class TestSimpleElement:
    def test_sets_for_generator(self):
        s1 = SimpleElement.generator(3, 1)
        assert s1.starting_set() == {1} and s1.finishing_set() == {1}

    def test_delta(self):
        d = SimpleElement.delta(4)
        assert d.starting_set() == d.finishing_set() == {1, 2, 3}
        assert d.length() == 6
        assert d.word() == (1, 2, 1, 3, 2, 1)
        assert positive_equal(BraidWord(4, d.word()), half_twist(4))

    def test_word_is_reduced_and_spells_element(self):
        x = SimpleElement(4, (3, 1, 4, 2))
        w = BraidWord(4, x.word())
        assert len(w) == x.length()
        assert permutation_of(w).images == x.perm


class TestNormalForm:
    def test_full_twist_is_delta_squared(self):
        nf = normal_form(full_twist(3))
        assert nf.delta_power == 2 and nf.factors == ()

    def test_sigma1_squared(self):
        # the class of s1 s1 is a singleton, so no Delta and two factors
        assert positive_class(BraidWord(3, (1, 1))) == {(1, 1)}
        nf = normal_form(BraidWord(3, (1, 1)))
        assert nf.delta_power == 0
        assert [f.word() for f in nf.factors] == [(1,), (1,)]

    def test_axis_identity(self):
        # s1^2 s2 s1^2 s2 equals Delta_3^2 (same length 6); s1^4 s2 s1^2 s2 equals s1^2 Delta_3^2
        assert positive_equal(BraidWord(3, (1, 1, 2, 1, 1, 2)), full_twist(3))
        assert tuple(full_twist(3).letters) in positive_class(BraidWord(3, (1, 1, 2, 1, 1, 2)))
        w = BraidWord(3, (1, 1, 1, 1, 2, 1, 1, 2))
        assert normal_form(w) == normal_form(concat(BraidWord(3, (1, 1)), full_twist(3)))
        assert not positive_equal(BraidWord(3, (1, 1, 2, 1, 1, 2)), concat(BraidWord(3, (1, 1)), full_twist(3)))

    def test_rejects_negative(self):
        with pytest.raises(NotPositiveError):
            normal_form(BraidWord(3, (1, -2)))

    @given(braid_words(max_len=20))
    def test_left_weighted_and_idempotent(self, w):
        nf = normal_form(w)
        assert nf.is_left_weighted()
        assert normal_form(nf.word()) == nf

    @given(small_positive_words())
    def test_agrees_with_class_enumeration(self, w):
        cls = positive_class(w)
        for other in list(cls)[:5]:
            assert normal_form(BraidWord(w.strands, other)) == normal_form(w)


class TestPositiveEqual:
    def test_examples(self):
        assert positive_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
        assert not positive_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))
        assert (2, 1) not in positive_class(BraidWord(3, (1, 2)))
        w = BraidWord(4, (1, 3, 2))
        assert positive_equal(w, concat(w, BraidWord(4)))

    @given(st.data())
    def test_equal_implies_same_perm_and_length(self, data):
        u = data.draw(small_positive_words())
        rep = data.draw(st.sampled_from(sorted(positive_class(u))))
        v = BraidWord(u.strands, rep)
        assert positive_equal(u, v)
        assert permutation_of(u) == permutation_of(v) and len(u) == len(v)

    @given(braid_words(max_len=15))
    def test_full_twist_central(self, w):
        d2 = full_twist(w.strands)
        assert positive_equal(concat(w, d2), concat(d2, w))


class TestFullTwists:
    def test_examples(self):
        k, rem = extract_full_twists(full_twist(4, 3))
        assert k == 3 and rem.delta_power == 0 and rem.factors == ()
        k, rem = extract_full_twists(SIGMA1_SQ_TWIST)
        assert k == 1 and rem.word() == BraidWord(3, (1, 1))
        assert extract_full_twists(BraidWord(4, (1, 2, 3, 1, 2, 3, 1, 1)))[0] == 0

    def test_oracle_examples(self):
        assert oracle_divisible_by_delta(full_twist(3), 2)
        assert not oracle_divisible_by_delta(BraidWord(3, (1, 1)), 1)
        assert oracle_divisible_by_delta(SIGMA1_SQ_TWIST, 2)
        assert not oracle_divisible_by_delta(SIGMA1_SQ_TWIST, 3)

    def test_oracle_bounds(self, monkeypatch):
        with pytest.raises(OracleBoundError):
            positive_class(BraidWord(3, (1,) * 15))
        with pytest.raises(OracleBoundError):
            positive_class(BraidWord(5, (1,)))
        monkeypatch.setenv("BRAIDFORGE_ORACLE_MAXLEN", "4")
        with pytest.raises(OracleBoundError):
            positive_class(BraidWord(3, (1,) * 5))

    def test_rejects_one_strand(self):
        with pytest.raises(ValueError):
            extract_full_twists(BraidWord(1))

    @given(small_positive_words(), st.data())
    def test_matches_oracle(self, w, data):
        if data.draw(st.booleans()) and len(w) + w.strands * (w.strands - 1) <= 14:
            cut = data.draw(st.integers(0, len(w)))
            w = BraidWord(w.strands, w.letters[:cut] + full_twist(w.strands).letters + w.letters[cut:])
        assert extract_full_twists(w)[0] == oracle_full_twists(w)

    @given(braid_words(max_len=10), st.integers(0, 3))
    def test_appended_twists_detected(self, w, k):
        assert extract_full_twists(concat(w, full_twist(w.strands, k)))[0] >= k


def test_left_divide_letter():
    nf = normal_form(BraidWord(3, (1, 2, 1)))
    q = left_divide_letter(nf, 2)
    assert q is not None and q.word() == BraidWord(3, (1, 2))
    assert left_divide_letter(normal_form(BraidWord(3, (1, 1))), 2) is None
