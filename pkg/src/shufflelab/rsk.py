"""Row insertion correspondences between words and tableau pairs.

Three variants share one bumping engine.  A variant supplies the total
order on letters (a key function) and, per letter, which bumping rule
applies:

* ``standard``: positive integer letters in the usual order; every letter
  bumps the first entry strictly greater than itself.  On permutations
  this is ordinary RSK.
* ``signed-flip``: letters are nonzero integers ordered
  1 < -1 < 2 < -2 < ...; a positive letter bumps the first entry strictly
  greater (so it never displaces its own copies) while a negative letter
  bumps the first entry greater or equal (so it always displaces its own
  copy when present).  Insertion tableaux have weakly increasing rows and
  columns with each positive letter at most once per column and each
  negative letter at most once per row.
* ``signed-standard``: the same two bumping rules, but letters compared
  as plain integers (... < -1 < 1 < ...).

The inverse runs the bumps backwards: an entry returning to the row above
lands on the rightmost entry that could have bumped it, which is unique
on any tableau the forward map can produce.

Word-to-permutation schemes turn an n-letter word into the deck order
after the shuffle the word encodes: positions holding a given symbol
receive a block of consecutive values, increasing for positive symbols,
decreasing for negative ones, and in a uniformly random order for the
symbol 0 (so the zero scheme returns an exact distribution).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as iter_permutations
from math import factorial
from typing import Callable, NamedTuple


class RSKPair(NamedTuple):
    insertion: tuple  # P
    recording: tuple  # Q


class Variant(NamedTuple):
    key: Callable
    bump_ge: Callable  # letter -> True when it bumps the first entry >= itself
    allows: Callable


def _signed_flip_key(letter: int):
    return (abs(letter), 0 if letter > 0 else 1)


VARIANTS = {
    "standard": Variant(
        key=lambda letter: letter,
        bump_ge=lambda letter: False,
        allows=lambda letter: isinstance(letter, int) and letter > 0,
    ),
    "signed-flip": Variant(
        key=_signed_flip_key,
        bump_ge=lambda letter: letter < 0,
        allows=lambda letter: isinstance(letter, int) and letter != 0,
    ),
    "signed-standard": Variant(
        key=lambda letter: letter,
        bump_ge=lambda letter: letter < 0,
        allows=lambda letter: isinstance(letter, int) and letter != 0,
    ),
}


def _variant(name: str) -> Variant:
    try:
        return VARIANTS[name]
    except KeyError:
        raise ValueError(f"unknown variant {name!r}; pick from {sorted(VARIANTS)}")


def insert_letter(rows: list, letter, variant: Variant) -> tuple[int, int]:
    """Bump the letter down the rows; returns the (row, col) of the new cell."""
    value = letter
    r = 0
    while True:
        if r == len(rows):
            rows.append([value])
            return r, 0
        row = rows[r]
        kv = variant.key(value)
        target = None
        if variant.bump_ge(value):
            for idx, entry in enumerate(row):
                if variant.key(entry) >= kv:
                    target = idx
                    break
        else:
            for idx, entry in enumerate(row):
                if variant.key(entry) > kv:
                    target = idx
                    break
        if target is None:
            row.append(value)
            return r, len(row) - 1
        row[target], value = value, row[target]
        r += 1


def rsk(word, variant: str = "standard") -> RSKPair:
    """Insert the word left to right; the recording tableau is standard."""
    var = _variant(variant)
    word = tuple(word)
    for letter in word:
        if not var.allows(letter):
            raise ValueError(f"letter {letter!r} not allowed by variant {variant!r}")
    rows: list[list] = []
    qrows: list[list[int]] = []
    for step, letter in enumerate(word, start=1):
        r, _ = insert_letter(rows, letter, var)
        if r == len(qrows):
            qrows.append([])
        qrows[r].append(step)
    return RSKPair(
        insertion=tuple(tuple(row) for row in rows),
        recording=tuple(tuple(row) for row in qrows),
    )


def _weakly_increasing(row, key) -> bool:
    return all(key(row[i]) <= key(row[i + 1]) for i in range(len(row) - 1))


def validate_pair(pair: RSKPair, variant: str) -> None:
    """Raise ValueError unless (P, Q) can arise from the variant."""
    from .combinat import is_standard_tableau, tableau_shape

    var = _variant(variant)
    p, q = pair
    if tableau_shape(p) != tableau_shape(q):
        raise ValueError("tableau shapes differ")
    if not is_standard_tableau(q):
        raise ValueError("recording tableau is not standard")
    for row in p:
        for letter in row:
            if not var.allows(letter):
                raise ValueError(f"letter {letter!r} not allowed by {variant!r}")
        if not _weakly_increasing(row, var.key):
            raise ValueError("insertion tableau rows must weakly increase")
    for r in range(len(p) - 1):
        for c in range(len(p[r + 1])):
            if variant == "standard":
                if var.key(p[r][c]) >= var.key(p[r + 1][c]):
                    raise ValueError("insertion tableau columns must increase")
            else:
                if var.key(p[r][c]) > var.key(p[r + 1][c]):
                    raise ValueError("insertion tableau columns must weakly increase")
    if variant in ("signed-flip", "signed-standard"):
        for row in p:
            negatives = [x for x in row if x < 0]
            if len(negatives) != len(set(negatives)):
                raise ValueError("a negative letter repeats within a row")
        for c in range(len(p[0]) if p else 0):
            column = [row[c] for row in p if c < len(row)]
            positives = [x for x in column if x > 0]
            if len(positives) != len(set(positives)):
                raise ValueError("a positive letter repeats within a column")


def rsk_inverse(pair: RSKPair, variant: str = "standard") -> tuple:
    """Recover the word from a valid (insertion, recording) pair."""
    var = _variant(variant)
    validate_pair(pair, variant)
    rows = [list(row) for row in pair.insertion]
    qrows = [list(row) for row in pair.recording]
    n = sum(len(row) for row in qrows)
    letters = []
    for step in range(n, 0, -1):
        source = None
        for r, qrow in enumerate(qrows):
            if qrow and qrow[-1] == step:
                source = r
                break
        if source is None:
            raise ValueError(f"recording tableau has no removable cell {step}")
        qrows[source].pop()
        value = rows[source].pop()
        for r in range(source - 1, -1, -1):
            row = rows[r]
            kv = var.key(value)
            target = None
            for idx in range(len(row) - 1, -1, -1):
                entry = row[idx]
                ke = var.key(entry)
                if ke < kv or (variant != "standard" and entry < 0 and ke == kv):
                    target = idx
                    break
            if target is None:
                raise ValueError("reverse bump found no entry; invalid pair")
            row[target], value = value, row[target]
        letters.append(value)
    while rows and not rows[-1]:
        rows.pop()
    if any(rows):
        raise ValueError("insertion tableau not exhausted; invalid pair")
    return tuple(reversed(letters))


def rsk_shape(word, variant: str = "standard") -> tuple:
    return tuple(len(row) for row in rsk(word, variant).insertion)


# ---------------------------------------------------------------------------
# word-to-permutation schemes


def _positions_of(word, symbol) -> list[int]:
    return [i for i, a in enumerate(word) if a == symbol]


def riffle_word_to_permutation(word) -> tuple:
    """Word over positive symbols -> deck order after the encoded riffle.

    Positions holding the smallest symbol receive values 1, 2, ... left to
    right, then the next symbol receives the next block, and so on.
    """
    if any(not isinstance(a, int) or a < 1 for a in word):
        raise ValueError("riffle words use positive integer symbols")
    out = [0] * len(word)
    next_value = 1
    for symbol in sorted(set(word)):
        for pos in _positions_of(word, symbol):
            out[pos] = next_value
            next_value += 1
    return tuple(out)


def signed_word_to_permutation(word) -> tuple:
    """Signed word -> deck order, processing symbols as 1 < -1 < 2 < -2 < ...

    A positive symbol's block is placed increasing left to right; a
    negative symbol's block decreasing (its pile was turned upside down).
    """
    if any(not isinstance(a, int) or a == 0 for a in word):
        raise ValueError("signed words use nonzero integer symbols")
    out = [0] * len(word)
    next_value = 1
    for symbol in sorted(set(word), key=_signed_flip_key):
        positions = _positions_of(word, symbol)
        block = range(next_value, next_value + len(positions))
        next_value += len(positions)
        values = list(block) if symbol > 0 else list(reversed(block))
        for pos, value in zip(positions, values):
            out[pos] = value
    return tuple(out)


def zeroed_word_layout(word) -> tuple[list, list, list]:
    """Partial deck order for a word over integers with zero allowed.

    Symbols are processed in plain integer order.  Negative blocks are
    placed decreasing, positive blocks increasing.  Returns the partially
    filled deck plus the positions and the value block reserved for the
    zero symbol, which the caller arranges.
    """
    if any(not isinstance(a, int) for a in word):
        raise ValueError("words must consist of integers")
    base = [0] * len(word)
    zero_positions: list[int] = []
    zero_values: list[int] = []
    next_value = 1
    for symbol in sorted(set(word)):
        positions = _positions_of(word, symbol)
        block = list(range(next_value, next_value + len(positions)))
        next_value += len(positions)
        if symbol < 0:
            for pos, value in zip(positions, reversed(block)):
                base[pos] = value
        elif symbol > 0:
            for pos, value in zip(positions, block):
                base[pos] = value
        else:
            zero_positions = positions
            zero_values = block
    return base, zero_positions, zero_values


def zeroed_word_to_distribution(word) -> dict:
    """Word over integers (zero allowed) -> exact distribution of deck orders.

    The zero block is perfectly mixed: all r! orders of its r values, each
    with weight 1/r!.
    """
    base, zero_positions, zero_values = zeroed_word_layout(word)
    if not zero_positions:
        return {tuple(base): Fraction(1)}
    weight = Fraction(1, factorial(len(zero_values)))
    out = {}
    for arrangement in iter_permutations(zero_values):
        perm = list(base)
        for pos, value in zip(zero_positions, arrangement):
            perm[pos] = value
        out[tuple(perm)] = weight
    return out


def word_to_permutation(word, scheme: str):
    """Dispatch on the scheme; the "abg" scheme returns a distribution."""
    if scheme == "riffle":
        return riffle_word_to_permutation(word)
    if scheme == "signed":
        return signed_word_to_permutation(word)
    if scheme == "abg":
        return zeroed_word_to_distribution(word)
    raise ValueError(f"unknown scheme {scheme!r}; pick riffle, signed, or abg")
