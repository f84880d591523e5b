"""Insertion correspondences: round trips, recording laws, frozen pairs."""

from fractions import Fraction
from itertools import permutations as iter_permutations, product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shufflelab.combinat import (
    conjugate,
    descent_mask,
    inverse_permutation,
    mask_positions,
    reverse_permutation,
    tableau_descent_mask,
    tableau_shape,
)
from shufflelab.rsk import (
    RSKPair,
    VARIANTS,
    rsk,
    rsk_inverse,
    rsk_shape,
    riffle_word_to_permutation,
    signed_word_to_permutation,
    validate_pair,
    word_to_permutation,
    zeroed_word_layout,
    zeroed_word_to_distribution,
)


def perms(n):
    return iter_permutations(range(1, n + 1))


def signed_alphabet(k):
    return [s * i for i in range(1, k + 1) for s in (1, -1)]


# ---------------------------------------------------------------------------
# standard variant


def test_identity_word():
    pair = rsk((1, 2, 3, 4))
    assert pair.insertion == ((1, 2, 3, 4),)
    assert pair.recording == ((1, 2, 3, 4),)


def test_reverse_word_gives_column():
    pair = rsk((4, 3, 2, 1))
    assert pair.insertion == ((1,), (2,), (3,), (4,))
    assert tableau_shape(pair.recording) == (1, 1, 1, 1)


def test_standard_round_trip_and_distinct():
    for n in range(1, 5):
        seen = set()
        for w in perms(n):
            pair = rsk(w)
            validate_pair(pair, "standard")
            assert rsk_inverse(pair) == w
            seen.add(pair)
        assert len(seen) == factorial(n)


def test_recording_tracks_descents():
    # Des(w) = Des(Q) and Des(w^-1) = Des(P) under row insertion
    for w in perms(5):
        pair = rsk(w)
        assert tableau_descent_mask(pair.recording) == descent_mask(w)
        assert tableau_descent_mask(pair.insertion) == descent_mask(
            inverse_permutation(w)
        )


def test_reversal_transposes_insertion():
    # reversing the word transposes P; shapes conjugate
    for n in range(1, 7):
        for w in perms(n):
            direct = rsk(w)
            rev = rsk(reverse_permutation(w))
            assert tableau_shape(rev.insertion) == conjugate(
                tableau_shape(direct.insertion)
            )
            transpose = tuple(
                tuple(
                    direct.insertion[r][c]
                    for r in range(len(direct.insertion))
                    if c < len(direct.insertion[r])
                )
                for c in range(direct.insertion[0] and len(direct.insertion[0]))
            )
            assert rev.insertion == transpose


def test_longest_increasing_run_is_first_row():
    w = (1, 9, 5, 2, 6, 7, 3, 10, 4, 8)
    shape = rsk_shape(w)
    best = 0
    n = len(w)
    for mask in range(1 << n):
        sub = [w[i] for i in range(n) if mask >> i & 1]
        if sub == sorted(sub):
            best = max(best, len(sub))
    assert shape[0] == best


# ---------------------------------------------------------------------------
# signed variants


def test_signed_flip_frozen_pair():
    word = (1, -1, 2, -2, 1, 1, -1, 1, 2, 2, -1, 2, -2)
    pair = rsk(word, "signed-flip")
    assert pair.insertion == ((1, 1, 1, 1, -1, 2, 2, -2), (-1, 2, 2), (-1, -2))
    assert pair.recording == ((1, 2, 3, 4, 9, 10, 12, 13), (5, 6, 7), (8, 11))


def test_signed_standard_frozen_pair():
    word = (1, -1, 2, -2, 1, 1, -2)
    pair = rsk(word, "signed-standard")
    assert pair.insertion == ((-2, 1, 1), (-2, 2), (-1,), (1,))
    assert pair.recording == ((1, 3, 6), (2, 5), (4,), (7,))


@pytest.mark.parametrize("variant", ["signed-flip", "signed-standard"])
def test_signed_round_trips(variant):
    for n in (2, 3, 4):
        seen = set()
        for word in product(signed_alphabet(2), repeat=n):
            pair = rsk(word, variant)
            validate_pair(pair, variant)
            assert rsk_inverse(pair, variant) == word
            seen.add(pair)
        assert len(seen) == 4**n


def test_signed_flip_letter_multiplicity_rules():
    # positives at most once per column, negatives at most once per row
    for word in product(signed_alphabet(2), repeat=5):
        p = rsk(word, "signed-flip").insertion
        for row in p:
            negatives = [a for a in row if a < 0]
            assert len(negatives) == len(set(negatives))
        width = len(p[0]) if p else 0
        for c in range(width):
            col = [row[c] for row in p if c < len(row)]
            positives = [a for a in col if a > 0]
            assert len(positives) == len(set(positives))


def test_validate_pair_rejects():
    good = rsk((2, 1, 3))
    with pytest.raises(ValueError):
        # shape mismatch
        validate_pair(RSKPair(good.insertion, ((1, 2, 3),)), "standard")
    with pytest.raises(ValueError):
        # recording not standard
        validate_pair(RSKPair(good.insertion, ((2, 3), (1,))), "standard")
    with pytest.raises(ValueError):
        # insertion row decreases
        validate_pair(RSKPair(((2, 1, 3),), ((1, 2, 3),)), "standard")
    with pytest.raises(ValueError):
        # insertion column repeats under the standard (strict) rule
        validate_pair(RSKPair(((1, 2), (1,)), ((1, 2), (3,))), "standard")
    with pytest.raises(ValueError):
        # negative letter twice in one row
        validate_pair(RSKPair(((-1, -1),), ((1, 2),)), "signed-flip")
    with pytest.raises(ValueError):
        rsk((1, 2), "mystery")


@given(st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=8))
def test_standard_words_round_trip(word):
    word = tuple(word)
    pair = rsk(word)
    validate_pair(pair, "standard")
    assert rsk_inverse(pair) == word


@given(
    st.lists(
        st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=1, max_size=7
    )
)
def test_signed_words_round_trip(word):
    word = tuple(word)
    for variant in ("signed-flip", "signed-standard"):
        pair = rsk(word, variant)
        validate_pair(pair, variant)
        assert rsk_inverse(pair, variant) == word


# ---------------------------------------------------------------------------
# word-to-permutation schemes


def test_riffle_word_frozen():
    word = (1, 3, 2, 1, 2, 2, 1, 3, 1, 2)
    assert riffle_word_to_permutation(word) == (1, 9, 5, 2, 6, 7, 3, 10, 4, 8)
    with pytest.raises(ValueError):
        riffle_word_to_permutation((1, 0, 2))


def test_signed_word_frozen():
    word = (1, -1, 2, -2, 1, 1, -1, 1, 2, 2, -1, 2, -2)
    assert signed_word_to_permutation(word) == (
        1, 7, 8, 13, 2, 3, 6, 4, 9, 10, 5, 11, 12,
    )
    with pytest.raises(ValueError):
        signed_word_to_permutation((1, 0))


def test_zeroed_word_frozen():
    word = (-2, 0, 1, 0, 0, 2, -1, -2, -1, 1)
    dist = zeroed_word_to_distribution(word)
    assert len(dist) == 6
    assert all(weight == Fraction(1, 6) for weight in dist.values())
    assert (2, 5, 8, 6, 7, 10, 4, 1, 3, 9) in dist


def test_zeroed_word_layout_blocks():
    base, zero_positions, zero_values = zeroed_word_layout((-1, 0, 2, 0, -1))
    assert zero_positions == [1, 3]
    assert zero_values == [3, 4]
    assert base == [2, 0, 5, 0, 1]


def test_zero_free_word_is_point_mass():
    dist = zeroed_word_to_distribution((-1, 2, -1, 1))
    assert dist == {(2, 4, 1, 3): Fraction(1)}


def test_word_to_permutation_dispatch():
    assert word_to_permutation((1, 2, 1), "riffle") == (1, 3, 2)
    assert word_to_permutation((1, -1), "signed") == (1, 2)
    assert word_to_permutation((0, 0), "abg") == {
        (1, 2): Fraction(1, 2),
        (2, 1): Fraction(1, 2),
    }
    with pytest.raises(ValueError):
        word_to_permutation((1,), "nope")


def test_riffle_recording_equality():
    # inserting the word and inserting the resulting deck order record the
    # same tableau, and the insertion shapes agree
    for k in (2, 3):
        for n in (3, 4, 5):
            for word in product(range(1, k + 1), repeat=n):
                w = riffle_word_to_permutation(word)
                word_pair = rsk(word)
                perm_pair = rsk(w)
                assert word_pair.recording == perm_pair.recording


def test_signed_recording_equality():
    for n in (3, 4):
        for word in product(signed_alphabet(2), repeat=n):
            w = signed_word_to_permutation(word)
            assert rsk(word, "signed-flip").recording == rsk(w).recording


def test_zero_free_recording_equality():
    alphabet = [-2, -1, 1, 2]
    for n in (3, 4):
        for word in product(alphabet, repeat=n):
            dist = zeroed_word_to_distribution(word)
            (w,) = dist
            assert rsk(word, "signed-standard").recording == rsk(w).recording


def test_zero_block_recording_varies():
    # with zeros present only the distributional law survives: different
    # arrangements of the zero block can record differently
    dist = zeroed_word_to_distribution((0, 0))
    recordings = {rsk(w).recording for w in dist}
    assert recordings == {((1, 2),), ((1,), (2,))}
