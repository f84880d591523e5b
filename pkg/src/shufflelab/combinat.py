"""Partitions, permutations, and Young tableaux.

Conventions used throughout the package:

* A partition is a weakly decreasing tuple of positive ints, e.g. (3, 1).
  The empty partition is ().
* A permutation is a tuple in one-line notation with 1-based values:
  w[i] is the card at position i+1 of the deck.
* Descent sets are bitmasks over positions 1..n-1: bit i-1 is set when
  position i is a descent.  Use mask_positions / positions_mask to convert.
* A tableau is a tuple of row tuples.

>>> conjugate((3, 1))
(2, 1, 1)
>>> centralizer_size((3, 1))
3
>>> tableau_count((2, 2))
2
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


# ---------------------------------------------------------------------------
# partitions


def is_partition(lam) -> bool:
    return all(isinstance(p, int) and p > 0 for p in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def check_partition(lam) -> tuple:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam!r}")
    return lam


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """All partitions of n, in reverse-lexicographic order.

    >>> partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []

    def rec(rem, max_part, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rem, max_part), 0, -1):
            prefix.append(part)
            rec(rem - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    if n == 0:
        return ((),)
    return tuple(out)


def conjugate(lam) -> tuple:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def multiplicities(lam) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return out


def centralizer_size(lam) -> int:
    """prod_i i^{m_i} * m_i! over part multiplicities m_i."""
    z = 1
    for part, mult in multiplicities(lam).items():
        z *= part**mult * math.factorial(mult)
    return z


def class_sign(lam) -> int:
    """(-1)^(n - number of parts): the sign of permutations of this cycle type."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


@dataclass(frozen=True)
class PartitionStats:
    partition: tuple
    conjugate: tuple
    length: int
    centralizer: int
    sign: int
    multiplicities: tuple


def partition_stats(lam) -> PartitionStats:
    lam = check_partition(lam)
    return PartitionStats(
        partition=lam,
        conjugate=conjugate(lam),
        length=len(lam),
        centralizer=centralizer_size(lam),
        sign=class_sign(lam),
        multiplicities=tuple(sorted(multiplicities(lam).items())),
    )


def multinomial(n: int, parts) -> int:
    parts = tuple(parts)
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


# ---------------------------------------------------------------------------
# permutations


def is_permutation(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def check_permutation(w) -> tuple:
    w = tuple(w)
    if not is_permutation(w):
        raise ValueError(f"not a permutation in one-line form: {w!r}")
    return w


def identity_permutation(n: int) -> tuple:
    return tuple(range(1, n + 1))


def inverse_permutation(w) -> tuple:
    out = [0] * len(w)
    for pos, card in enumerate(w, start=1):
        out[card - 1] = pos
    return tuple(out)


def reverse_permutation(w) -> tuple:
    """Deal the same deck from the bottom: reverse the one-line word."""
    return tuple(reversed(w))


def compose(a, b) -> tuple:
    """The permutation a after b: (a . b)(i) = a[b[i]]."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def descent_mask(w) -> int:
    """Bitmask of positions i with w(i) > w(i+1).

    >>> mask_positions(descent_mask((1, 9, 5, 2, 6, 7, 3, 10, 4, 8)))
    (2, 3, 6, 8)
    """
    mask = 0
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            mask |= 1 << i
    return mask


def full_mask(n: int) -> int:
    return (1 << (n - 1)) - 1 if n > 1 else 0


def mask_positions(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def positions_mask(positions) -> int:
    mask = 0
    for i in positions:
        if i < 1:
            raise ValueError("descent positions are 1-based")
        mask |= 1 << (i - 1)
    return mask


def cycle_type(w) -> tuple:
    """Cycle type as a partition.

    >>> cycle_type((2, 3, 1, 4))
    (3, 1)
    """
    n = len(w)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        pos = start
        while not seen[pos]:
            seen[pos] = True
            pos = w[pos] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def fixed_points(w) -> int:
    return sum(1 for i, c in enumerate(w, start=1) if c == i)


@dataclass(frozen=True)
class PermutationStats:
    permutation: tuple
    inverse: tuple
    descent_mask: int
    inverse_descent_mask: int
    cycle_type: tuple
    fixed_points: int


def permutation_stats(w) -> PermutationStats:
    w = check_permutation(w)
    return PermutationStats(
        permutation=w,
        inverse=inverse_permutation(w),
        descent_mask=descent_mask(w),
        inverse_descent_mask=descent_mask(inverse_permutation(w)),
        cycle_type=cycle_type(w),
        fixed_points=fixed_points(w),
    )


# ---------------------------------------------------------------------------
# standard Young tableaux


def tableau_shape(t) -> tuple:
    return tuple(len(row) for row in t)


@lru_cache(maxsize=None)
def standard_tableaux(shape) -> tuple:
    """All standard tableaux of the given shape, as tuples of row tuples."""
    shape = check_partition(shape)
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    for r in range(len(shape)):
        if r + 1 < len(shape) and shape[r] == shape[r + 1]:
            continue
        smaller = shape[:r] + (shape[r] - 1,) + shape[r + 1 :]
        smaller = tuple(p for p in smaller if p)
        for t in standard_tableaux(smaller):
            rows = [list(row) for row in t]
            while len(rows) <= r:
                rows.append([])
            rows[r].append(n)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def tableau_count(shape) -> int:
    """Number of standard tableaux, by the hook length formula.

    >>> tableau_count((5, 4, 1))
    288
    """
    shape = check_partition(shape)
    n = sum(shape)
    conj = conjugate(shape)
    hooks = 1
    for i, row_len in enumerate(shape):
        for j in range(row_len):
            hooks *= (row_len - j) + (conj[j] - i) - 1
    return math.factorial(n) // hooks


def is_standard_tableau(t) -> bool:
    shape = tableau_shape(t)
    if not is_partition(shape):
        return False
    n = sum(shape)
    if sorted(v for row in t for v in row) != list(range(1, n + 1)):
        return False
    for row in t:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
    for r in range(len(t) - 1):
        if any(t[r][c] >= t[r + 1][c] for c in range(len(t[r + 1]))):
            return False
    return True


def tableau_descent_mask(t) -> int:
    """Descents of a standard tableau: i such that i+1 sits in a lower row."""
    row_of = {}
    for r, row in enumerate(t):
        for v in row:
            row_of[v] = r
    mask = 0
    for i in range(1, len(row_of)):
        if row_of[i + 1] > row_of[i]:
            mask |= 1 << (i - 1)
    return mask


@lru_cache(maxsize=None)
def _descent_class_table(shape) -> dict:
    table: dict[int, int] = {}
    for t in standard_tableaux(shape):
        mask = tableau_descent_mask(t)
        table[mask] = table.get(mask, 0) + 1
    return table


def descent_class_count(shape, mask: int) -> int:
    """Number of standard tableaux of the shape with the given descent mask."""
    return _descent_class_table(check_partition(shape)).get(mask, 0)


# ---------------------------------------------------------------------------
# semistandard tableaux and Kostka numbers


def semistandard_tableaux(shape, max_entry: int):
    """Yield all fillings with weakly increasing rows and strict columns."""
    shape = check_partition(shape)
    if not shape:
        yield ()
        return
    if len(shape) > max_entry:
        return

    def fill_rows(r, above, acc):
        if r == len(shape):
            yield tuple(acc)
            return
        width = shape[r]

        def cells(j, prev, row):
            if j == width:
                yield tuple(row)
                return
            lo = prev
            if above is not None and j < len(above):
                lo = max(lo, above[j] + 1)
            for v in range(lo, max_entry + 1):
                row.append(v)
                yield from cells(j + 1, v, row)
                row.pop()

        for row in cells(0, 1, []):
            acc.append(row)
            yield from fill_rows(r + 1, row, acc)
            acc.pop()

    yield from fill_rows(0, None, [])


def tableau_content(t, max_entry: int) -> tuple:
    counts = [0] * max_entry
    for row in t:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)


def kostka(shape, content) -> int:
    """Number of semistandard tableaux of the shape with the given content.

    The content is a composition: content[i] copies of the letter i+1.

    >>> kostka((2, 1), (1, 1, 1))
    2
    """
    shape = check_partition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError("content entries must be >= 0")
    if sum(shape) != sum(content):
        return 0
    m = len(content)
    return sum(
        1 for t in semistandard_tableaux(shape, m) if tableau_content(t, m) == content
    )


@lru_cache(maxsize=None)
def skew_row_count(shape, strip: int) -> int:
    """Standard fillings of the shape with its first strip cells of row 1 removed.

    Counts chains in Young's lattice from the single row (strip) up to the
    shape, one box at a time.
    """
    shape = check_partition(shape)
    if strip < 0:
        raise ValueError("strip must be >= 0")
    if not shape:
        return 1 if strip == 0 else 0
    if shape[0] < strip:
        return 0
    if sum(shape) == strip:
        # only the single row (strip) itself qualifies
        return 1 if len(shape) == 1 else 0
    total = 0
    for r in range(len(shape)):
        if r + 1 < len(shape) and shape[r] == shape[r + 1]:
            continue
        smaller = shape[:r] + (shape[r] - 1,) + shape[r + 1 :]
        smaller = tuple(p for p in smaller if p)
        total += skew_row_count(smaller, strip)
    return total


# ---------------------------------------------------------------------------
# irreducible characters of the symmetric group


@lru_cache(maxsize=None)
def character(lam, mu) -> int:
    """Character value chi^lam on the class mu, by border strip removal.

    >>> character((2, 1), (1, 1, 1))
    2
    >>> character((2, 1), (3,))
    -1
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes differ")
    if not lam:
        return 1
    strip = mu[0]
    rest = mu[1:]
    length = len(lam)
    betas = [lam[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(betas)
    total = 0
    for b in betas:
        if b >= strip and (b - strip) not in beta_set:
            height = sum(1 for c in betas if b - strip < c < b)
            new_betas = sorted((beta_set - {b}) | {b - strip}, reverse=True)
            new_lam = tuple(
                v - (length - 1 - i) for i, v in enumerate(new_betas)
            )
            new_lam = tuple(p for p in new_lam if p)
            total += (-1) ** height * character(new_lam, rest)
    return total


# ---------------------------------------------------------------------------
# unimodal permutations


def unimodal_permutations(n: int) -> tuple:
    """All unimodal permutations of n with their maximum positions.

    A permutation is unimodal when it increases up to the value n and
    decreases afterwards.  Choosing the set of values placed before n
    gives each of the 2^(n-1) such permutations exactly once.

    Returns tuples (permutation, position of the maximum).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    values = tuple(range(1, n))
    for r in range(n):
        for chosen in combinations(values, r):
            rest = sorted(set(values) - set(chosen), reverse=True)
            perm = chosen + (n,) + tuple(rest)
            out.append((perm, r + 1))
    return tuple(out)


def is_unimodal(w) -> bool:
    top = w.index(len(w))
    rising = all(w[i] < w[i + 1] for i in range(top))
    falling = all(w[i] > w[i + 1] for i in range(top, len(w) - 1))
    return rising and falling


# ---------------------------------------------------------------------------
# elementary number theory


def divisors(n: int) -> tuple:
    """Positive divisors in increasing order.

    >>> divisors(12)
    (1, 2, 3, 4, 6, 12)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    """
    >>> [moebius(n) for n in range(1, 11)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out
