import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive
from qshift.errors import IndexOutOfRange, MalformedToken
from qshift.words import (
    AmenabilityFailure,
    Letter,
    amenability_failure,
    count_profile,
    format_word,
    is_amenable,
    is_amenable_via_restriction,
    is_k_amenable,
    k_amenability_failure,
    m_count,
    parse_letter,
    parse_word,
    restrict,
    word_codes,
)

CHECKTWO_WORD = "2 2' 3 2' 2 1 1 2' 1' 1 1"

letters = st.builds(Letter, st.integers(1, 4), st.booleans())
words = st.lists(letters, max_size=12).map(tuple)


def as_pairs(w):
    return [(x.value, x.marked) for x in w]


def test_letter_order():
    seq = [parse_letter(t) for t in ["1'", "1", "2'", "2", "3'"]]
    assert seq == sorted(seq)
    assert [x.code for x in seq] == [1, 2, 3, 4, 5]
    assert all(Letter.from_code(x.code) == x for x in seq)


def test_parse_and_format():
    w = parse_word(CHECKTWO_WORD)
    assert len(w) == 11
    assert format_word(w) == CHECKTWO_WORD
    assert parse_word("") == ()
    assert word_codes(parse_word("1' 1 2")) == [1, 2, 4]
    for bad in ["0", "x", "1''", "'1"]:
        with pytest.raises(MalformedToken):
            parse_letter(bad)


def test_m_count_examples():
    w = parse_word("1 1' 1")
    assert [m_count(w, 1, j) for j in (0, 1, 3, 5)] == [0, 1, 2, 3]
    assert m_count(parse_word(CHECKTWO_WORD), 3, 11) == 1
    assert m_count(parse_word(CHECKTWO_WORD), 5, 0) == 0
    with pytest.raises(IndexOutOfRange):
        m_count(w, 1, 7)
    with pytest.raises(IndexOutOfRange):
        m_count(w, 1, -1)


@given(words, st.integers(1, 5))
def test_count_profile_matches_naive_and_is_monotone(w, i):
    prof = count_profile(w, i)
    assert prof == [naive.m(as_pairs(w), i, j) for j in range(2 * len(w) + 1)]
    assert prof[0] == 0
    assert all(0 <= b - a <= 1 for a, b in zip(prof, prof[1:]))
    assert prof[-1] == sum(1 for x in w if x.value == i)


def test_restrict():
    w = parse_word(CHECKTWO_WORD)
    assert format_word(restrict(w, 3)) == "2 2' 3 2' 2 2'"
    assert format_word(restrict(w, 2)) == "2 2' 2' 2 1 1 2' 1' 1 1"
    assert restrict((), 4) == ()
    with pytest.raises(ValueError):
        restrict(w, 1)


def test_k_amenability_examples():
    assert is_k_amenable(parse_word("1 1'"), 2)
    assert not is_k_amenable(parse_word("1' 1"), 2)
    assert k_amenability_failure(parse_word("1' 1"), 2) == AmenabilityFailure(2, 4, None)
    assert str(AmenabilityFailure(2, 4, None)) == "k=2, clause 4"
    assert str(AmenabilityFailure(3, 1, 0)) == "k=3, clause 1, j=0"
    assert all(is_k_amenable((), k) for k in range(2, 6))


def test_amenability_examples():
    assert is_amenable(parse_word("1 1'"))
    assert not is_amenable(parse_word("1' 1"))
    assert is_amenable(())
    assert is_amenable_via_restriction(())
    w = parse_word(CHECKTWO_WORD)
    assert is_amenable(w) == is_amenable_via_restriction(w)
    # a lone 2 has nothing to be matched against
    assert amenability_failure(parse_word("2")) == AmenabilityFailure(2, 1, 0)


@given(words, st.integers(2, 5))
def test_k_amenable_matches_naive(w, k):
    assert is_k_amenable(w, k) == naive.is_k_amenable(as_pairs(w), k)


@given(words)
def test_failure_is_reported_iff_not_amenable(w):
    fail = amenability_failure(w)
    assert (fail is None) == is_amenable(w)
    if fail is not None:
        assert not is_k_amenable(w, fail.k)
        assert all(is_k_amenable(w, k) for k in range(2, fail.k))


@given(words)
def test_restriction_equivalence_random(w):
    assert is_amenable(w) == is_amenable_via_restriction(w)


def test_restriction_equivalence_short_words():
    alpha = [Letter.from_code(c) for c in range(1, 7)]
    for n in range(6):
        for w in itertools.product(alpha, repeat=n):
            assert is_amenable(w) == is_amenable_via_restriction(w)
            assert is_amenable(w) == naive.is_amenable(as_pairs(w))


@given(words)
def test_amenable_content_is_decreasing(w):
    if not is_amenable(w):
        return
    top = max((x.value for x in w), default=0)
    counts = [sum(1 for x in w if x.value == i) for i in range(1, top + 1)]
    assert all(a >= b for a, b in zip(counts, counts[1:]))


@given(words, st.integers(2, 5))
def test_k_amenable_strict_count(w, k):
    if not is_k_amenable(w, k):
        return
    n = len(w)
    prev = m_count(w, k - 1, 2 * n)
    if prev > 0:
        assert m_count(w, k, 2 * n) < prev
