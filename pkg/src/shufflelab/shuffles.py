"""Shuffle models as exact measures on permutations.

Five models, each specified by how the deck is cut and recombined:

* ``riffle``: cut into piles with the given probabilities, riffle
  everything back together.
* ``typec``: cut into 2k piles where pair i carries weight y_i split
  evenly between an upright pile and one turned upside down.
* ``abg``: three kinds of piles at once: upright piles (``alpha``),
  flipped piles (``beta``), and one pile that is perfectly mixed before
  the riffle (``gamma``).
* ``mu``: fixed pile sizes, every interleaving equally likely.
* ``top``: the top card reinserted uniformly at random.

A spec with ``iterations=k`` means k independent passes of the same
shuffle; ``reverse=True`` turns the deck upside down after every pass.

Permutations are deck words: entry p is the card now at position p,
counting from the top, for a deck that started as 1..n.  Doing shuffle A
and then shuffle B composes the words with A outermost, so the combined
word is word_A o word_B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iter_permutations
from itertools import product
from math import comb, factorial, prod
from random import Random

from .combinat import (
    check_permutation,
    compose,
    cycle_type,
    descent_mask,
    fixed_points,
    inverse_permutation,
    multinomial,
    reverse_permutation,
    tableau_shape,
)
from .poly import as_fraction, fraction_str
from .rsk import (
    riffle_word_to_permutation,
    rsk,
    signed_word_to_permutation,
    zeroed_word_layout,
    zeroed_word_to_distribution,
)

ENUMERATION_BUDGET = 10_000_000

KINDS = ("riffle", "typec", "abg", "mu", "top")


class ConfigurationError(ValueError):
    """Malformed parameters, or a request past the exact-enumeration budget."""


@dataclass(frozen=True)
class ShuffleSpec:
    """Frozen description of a shuffle; build one with the helpers below."""

    kind: str
    q: tuple = ()
    y: tuple = ()
    alpha: tuple = ()
    beta: tuple = ()
    gamma: Fraction = Fraction(0)
    mu: tuple = ()
    iterations: int = 1
    reverse: bool = False

    def unreversed(self) -> "ShuffleSpec":
        from dataclasses import replace

        return replace(self, reverse=False)


def _prob_tuple(values, what: str) -> tuple:
    out = tuple(as_fraction(v) for v in values)
    if any(p < 0 for p in out):
        raise ConfigurationError(f"{what} must be nonnegative")
    return out


def _check_iterations(iterations) -> None:
    if not isinstance(iterations, int) or iterations < 1:
        raise ConfigurationError("iterations must be a positive integer")


def riffle_shuffle(q, iterations: int = 1, reverse: bool = False) -> ShuffleSpec:
    """Cut into len(q) piles with the given probabilities and riffle."""
    q = _prob_tuple(q, "pile probabilities")
    if not q or sum(q) != 1:
        raise ConfigurationError("pile probabilities must sum to 1")
    _check_iterations(iterations)
    return ShuffleSpec(kind="riffle", q=q, iterations=iterations, reverse=reverse)


def uniform_riffle(piles: int, iterations: int = 1, reverse: bool = False) -> ShuffleSpec:
    if not isinstance(piles, int) or piles < 1:
        raise ConfigurationError("pile count must be a positive integer")
    return riffle_shuffle([Fraction(1, piles)] * piles, iterations, reverse)


def typec_shuffle(y, iterations: int = 1, reverse: bool = False) -> ShuffleSpec:
    """2*len(y) piles; pair i carries weight y_i, split upright/flipped."""
    y = _prob_tuple(y, "pair weights")
    if not y or sum(y) != 1:
        raise ConfigurationError("pair weights must sum to 1")
    _check_iterations(iterations)
    return ShuffleSpec(kind="typec", y=y, iterations=iterations, reverse=reverse)


def abg_shuffle(alpha=(), beta=(), gamma=0, iterations: int = 1, reverse: bool = False) -> ShuffleSpec:
    """Upright piles, flipped piles, and one perfectly mixed pile."""
    alpha = _prob_tuple(alpha, "upright pile probabilities")
    beta = _prob_tuple(beta, "flipped pile probabilities")
    gamma = as_fraction(gamma)
    if gamma < 0:
        raise ConfigurationError("mixed pile probability must be nonnegative")
    if sum(alpha) + sum(beta) + gamma != 1:
        raise ConfigurationError("pile probabilities must sum to 1")
    _check_iterations(iterations)
    return ShuffleSpec(
        kind="abg", alpha=alpha, beta=beta, gamma=gamma,
        iterations=iterations, reverse=reverse,
    )


def mu_shuffle(mu, iterations: int = 1, reverse: bool = False) -> ShuffleSpec:
    """Cut into piles of the given sizes; interleave uniformly."""
    mu = tuple(mu)
    if not mu or any(not isinstance(m, int) or m < 1 for m in mu):
        raise ConfigurationError("pile sizes must be positive integers")
    _check_iterations(iterations)
    return ShuffleSpec(kind="mu", mu=mu, iterations=iterations, reverse=reverse)


def top_to_random(iterations: int = 1, reverse: bool = False) -> ShuffleSpec:
    _check_iterations(iterations)
    return ShuffleSpec(kind="top", iterations=iterations, reverse=reverse)


class PermDistribution:
    """Finitely supported exact distribution on deck words of size n."""

    def __init__(self, n: int, weights: dict, validate: bool = True):
        self.n = n
        clean: dict = {}
        total = Fraction(0)
        for perm, weight in weights.items():
            w = as_fraction(weight)
            if w == 0:
                continue
            perm = tuple(perm)
            if validate:
                if len(perm) != n:
                    raise ValueError("permutation length differs from deck size")
                check_permutation(perm)
                if w < 0:
                    raise ValueError("negative probability")
            clean[perm] = w
            total += w
        if validate and total != 1:
            raise ValueError(f"weights sum to {total}, expected 1")
        self.weights = clean

    def __eq__(self, other):
        return (
            isinstance(other, PermDistribution)
            and self.n == other.n
            and self.weights == other.weights
        )

    __hash__ = None

    def __repr__(self):
        return f"PermDistribution(n={self.n}, support={len(self.weights)})"

    def probability(self, perm) -> Fraction:
        return self.weights.get(tuple(perm), Fraction(0))

    def support(self) -> list:
        return sorted(self.weights)

    def map_words(self, transform) -> "PermDistribution":
        out: dict = {}
        for perm, w in self.weights.items():
            image = tuple(transform(perm))
            out[image] = out.get(image, Fraction(0)) + w
        return PermDistribution(self.n, out, validate=False)

    def reverse(self) -> "PermDistribution":
        """Law after turning the deck upside down."""
        return self.map_words(reverse_permutation)

    def invert(self) -> "PermDistribution":
        return self.map_words(inverse_permutation)

    def marginal(self, statistic) -> dict:
        out: dict = {}
        for perm, w in self.weights.items():
            key = statistic(perm)
            out[key] = out.get(key, Fraction(0)) + w
        return out

    def cycle_type_marginal(self) -> dict:
        return self.marginal(cycle_type)

    def shape_marginal(self) -> dict:
        return self.marginal(lambda w: tableau_shape(rsk(w).insertion))

    def recording_marginal(self) -> dict:
        return self.marginal(lambda w: rsk(w).recording)

    def inverse_descent_marginal(self) -> dict:
        return self.marginal(lambda w: descent_mask(inverse_permutation(w)))

    def expected_fixed_points(self) -> Fraction:
        return sum(
            (w * fixed_points(perm) for perm, w in self.weights.items()),
            Fraction(0),
        )

    def min_probability(self) -> Fraction:
        """Smallest probability over all n! permutations, zero if any is missing."""
        if len(self.weights) < factorial(self.n):
            return Fraction(0)
        return min(self.weights.values())


def uniform_distribution(n: int) -> PermDistribution:
    w = Fraction(1, factorial(n))
    words = {perm: w for perm in iter_permutations(range(1, n + 1))}
    return PermDistribution(n, words, validate=False)


def convolve(later: PermDistribution, earlier: PermDistribution) -> PermDistribution:
    """Law of doing `earlier` first, then `later`.

    Words compose with the earlier one outermost: the combined word is
    word_earlier o word_later.
    """
    if later.n != earlier.n:
        raise ValueError("deck sizes differ")
    out: dict = {}
    for w_early, p_early in earlier.weights.items():
        for w_late, p_late in later.weights.items():
            word = compose(w_early, w_late)
            out[word] = out.get(word, Fraction(0)) + p_early * p_late
    return PermDistribution(later.n, out, validate=False)


def iterate(dist: PermDistribution, passes: int) -> PermDistribution:
    """passes-fold self-convolution."""
    if not isinstance(passes, int) or passes < 1:
        raise ConfigurationError("passes must be a positive integer")
    out = dist
    for _ in range(passes - 1):
        out = convolve(dist, out)
    return out


def multiset_words(multiplicities):
    """All distinct words with multiplicities[i] copies of symbol i+1."""
    counts = list(multiplicities)
    n = sum(counts)
    word: list = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for s, left in enumerate(counts):
            if left:
                counts[s] -= 1
                word.append(s + 1)
                yield from rec()
                word.pop()
                counts[s] += 1

    yield from rec()


def _riffle_step(q, n: int) -> dict:
    k = len(q)
    if k ** n > ENUMERATION_BUDGET:
        raise ConfigurationError("too many words to enumerate exactly")
    weights: dict = {}
    for word in product(range(1, k + 1), repeat=n):
        w = prod(q[a - 1] for a in word)
        if w == 0:
            continue
        perm = riffle_word_to_permutation(word)
        weights[perm] = weights.get(perm, Fraction(0)) + w
    return weights


def _typec_step(y, n: int) -> dict:
    letters = [s * i for i in range(1, len(y) + 1) for s in (1, -1)]
    if len(letters) ** n > ENUMERATION_BUDGET:
        raise ConfigurationError("too many words to enumerate exactly")
    weights: dict = {}
    for word in product(letters, repeat=n):
        w = prod(y[abs(a) - 1] / 2 for a in word)
        if w == 0:
            continue
        perm = signed_word_to_permutation(word)
        weights[perm] = weights.get(perm, Fraction(0)) + w
    return weights


def _abg_symbols(spec: ShuffleSpec) -> tuple[list, dict]:
    probs: dict = {}
    for i, a in enumerate(spec.alpha, start=1):
        probs[i] = a
    for i, b in enumerate(spec.beta, start=1):
        probs[-i] = b
    probs[0] = spec.gamma
    symbols = [s for s in sorted(probs) if probs[s] > 0]
    return symbols, probs


def _abg_step(spec: ShuffleSpec, n: int) -> dict:
    symbols, probs = _abg_symbols(spec)
    nonzero = len([s for s in symbols if s != 0])
    if 0 in symbols:
        work = sum(
            comb(n, r) * nonzero ** (n - r) * factorial(r) for r in range(n + 1)
        )
    else:
        work = nonzero ** n
    if work > ENUMERATION_BUDGET:
        raise ConfigurationError("too many words to enumerate exactly")
    weights: dict = {}
    for word in product(symbols, repeat=n):
        w = prod(probs[a] for a in word)
        for perm, part in zeroed_word_to_distribution(word).items():
            weights[perm] = weights.get(perm, Fraction(0)) + w * part
    return weights


def _mu_step(mu, n: int) -> dict:
    if sum(mu) != n:
        raise ConfigurationError("deck size must equal the sum of pile sizes")
    total = multinomial(n, mu)
    if total > ENUMERATION_BUDGET:
        raise ConfigurationError("too many interleavings to enumerate exactly")
    w = Fraction(1, total)
    weights: dict = {}
    for word in multiset_words(mu):
        perm = riffle_word_to_permutation(word)
        weights[perm] = weights.get(perm, Fraction(0)) + w
    return weights


def _top_step(n: int) -> dict:
    if n < 1:
        raise ConfigurationError("top-to-random needs at least one card")
    if factorial(n) > ENUMERATION_BUDGET:
        raise ConfigurationError("iterated support too large to track exactly")
    w = Fraction(1, n)
    weights: dict = {}
    for p in range(n):
        deck = list(range(2, n + 1))
        deck.insert(p, 1)
        weights[tuple(deck)] = w
    return weights


def _single_step(spec: ShuffleSpec, n: int) -> dict:
    if spec.kind == "riffle":
        return _riffle_step(spec.q, n)
    if spec.kind == "typec":
        return _typec_step(spec.y, n)
    if spec.kind == "abg":
        return _abg_step(spec, n)
    if spec.kind == "mu":
        return _mu_step(spec.mu, n)
    if spec.kind == "top":
        return _top_step(n)
    raise ConfigurationError(f"unknown shuffle kind {spec.kind!r}")


@lru_cache(maxsize=None)
def exact_distribution(spec: ShuffleSpec, n: int) -> PermDistribution:
    """Exact law of the spec on a deck of n cards.

    Results are cached and shared between callers; treat them as read-only.
    """
    if not isinstance(n, int) or n < 0:
        raise ConfigurationError("deck size must be a nonnegative integer")
    base = PermDistribution(n, _single_step(spec, n))
    if spec.reverse:
        base = base.reverse()
    return iterate(base, spec.iterations)


def separation_distance(dist: PermDistribution) -> Fraction:
    """1 - n! * min P(w); stays 1 while any permutation is unreachable."""
    return 1 - factorial(dist.n) * dist.min_probability()


def separation_bound(spec: ShuffleSpec, n: int) -> Fraction:
    """Closed upper bound for the separation distance after all passes:
    C(n,2) times (sum of squared pile probabilities)^iterations.  The mixed
    pile does not enter.  Covers the riffle and abg models."""
    if spec.kind == "riffle":
        s = sum(p * p for p in spec.q)
    elif spec.kind == "abg":
        s = sum(p * p for p in spec.alpha) + sum(p * p for p in spec.beta)
    else:
        raise ConfigurationError("bound covers riffle and abg shuffles")
    return comb(n, 2) * s ** spec.iterations


# ---------------------------------------------------------------------------
# samplers


def _sample_word_step(spec: ShuffleSpec, n: int, rng: Random) -> tuple:
    if spec.kind == "riffle":
        k = len(spec.q)
        word = rng.choices(range(1, k + 1), weights=[float(p) for p in spec.q], k=n)
        return riffle_word_to_permutation(word)
    if spec.kind == "typec":
        letters = [s * i for i in range(1, len(spec.y) + 1) for s in (1, -1)]
        ws = [float(spec.y[abs(a) - 1] / 2) for a in letters]
        return signed_word_to_permutation(rng.choices(letters, weights=ws, k=n))
    if spec.kind == "abg":
        symbols, probs = _abg_symbols(spec)
        word = rng.choices(symbols, weights=[float(probs[s]) for s in symbols], k=n)
        base, zero_positions, zero_values = zeroed_word_layout(word)
        rng.shuffle(zero_values)
        for pos, value in zip(zero_positions, zero_values):
            base[pos] = value
        return tuple(base)
    if spec.kind == "mu":
        if sum(spec.mu) != n:
            raise ConfigurationError("deck size must equal the sum of pile sizes")
        word = [s + 1 for s, m in enumerate(spec.mu) for _ in range(m)]
        rng.shuffle(word)
        return riffle_word_to_permutation(word)
    if spec.kind == "top":
        deck = list(range(2, n + 1))
        deck.insert(rng.randrange(n), 1)
        return tuple(deck)
    raise ConfigurationError(f"unknown shuffle kind {spec.kind!r}")


def sample_permutation(spec: ShuffleSpec, n: int, rng: Random) -> tuple:
    """One deck word drawn from the spec (all passes applied)."""
    total = None
    for _ in range(spec.iterations):
        step = _sample_word_step(spec, n, rng)
        if spec.reverse:
            step = reverse_permutation(step)
        total = step if total is None else compose(total, step)
    return total


def sample_permutations(spec: ShuffleSpec, n: int, count: int, seed: int = 0,
                        workers: int = 1) -> list:
    """Deterministic batch of draws.

    The batch is split into `workers` chunks, each with its own generator
    seeded from (seed, chunk index), so partial batches can be reproduced
    without replaying the whole stream.
    """
    if not isinstance(workers, int) or workers < 1:
        raise ConfigurationError("workers must be a positive integer")
    if not isinstance(count, int) or count < 0:
        raise ConfigurationError("count must be a nonnegative integer")
    out = []
    chunk, extra = divmod(count, workers)
    for w in range(workers):
        size = chunk + (1 if w < extra else 0)
        rng = Random(seed * 1000003 + w)
        for _ in range(size):
            out.append(sample_permutation(spec, n, rng))
    return out


def empirical_distribution(samples) -> dict:
    """Relative frequencies of a batch, as exact fractions."""
    total = len(samples)
    counts: dict = {}
    for perm in samples:
        counts[perm] = counts.get(perm, 0) + 1
    return {perm: Fraction(c, total) for perm, c in counts.items()}


def physical_abg_sample(spec: ShuffleSpec, n: int, rng: Random) -> tuple:
    """Simulate one pass of the abg model the way it happens on a table.

    Cut the deck into piles with multinomially distributed sizes, turn the
    flipped piles upside down, perfectly mix the side pile, then riffle
    everything together, dropping from each pile with probability
    proportional to its current size.  Used to cross-check the word-based
    sampler; handles a single unreversed pass.
    """
    if spec.kind != "abg":
        raise ConfigurationError("physical sampler covers the abg model")
    if spec.iterations != 1 or spec.reverse:
        raise ConfigurationError("physical sampler covers one unreversed pass")
    symbols, probs = _abg_symbols(spec)
    labels = rng.choices(symbols, weights=[float(probs[s]) for s in symbols], k=n)
    counts = {s: labels.count(s) for s in symbols}
    piles = []
    card = 1
    for s in symbols:
        pile = list(range(card, card + counts[s]))
        card += counts[s]
        if s < 0:
            pile.reverse()
        elif s == 0:
            rng.shuffle(pile)
        if pile:
            piles.append(pile)
    out = []
    remaining = n
    pointers = [0] * len(piles)
    while remaining:
        r = rng.randrange(remaining)
        for i, pile in enumerate(piles):
            left = len(pile) - pointers[i]
            if r < left:
                out.append(pile[pointers[i]])
                pointers[i] += 1
                remaining -= 1
                break
            r -= left
    return tuple(out)


# ---------------------------------------------------------------------------
# iterated abg shuffles in a single sweep

# Each position draws one pile symbol per pass.  Ranking the tuples orders
# the deck: compare first symbols; on a tie below a flipped pile the rest
# of the comparison runs backwards, and a tie at the mixed pile leaves the
# relative order perfectly random.  The key transform below folds the
# flips into sign changes so plain tuple comparison does the ranking.


def _tuple_key(symbols: tuple) -> tuple:
    key = []
    flip = 1
    for c in symbols:
        key.append(flip * c)
        if c == 0:
            return tuple(key), 0
        if c < 0:
            flip = -flip
    return tuple(key), flip


def _tuple_groups(tuples) -> list:
    """Positions grouped by ranking key: (ascending positions, orientation)."""
    order = sorted(range(len(tuples)), key=lambda p: _tuple_key(tuples[p])[0])
    groups = []
    idx = 0
    while idx < len(order):
        key, orientation = _tuple_key(tuples[order[idx]])
        j = idx
        while j < len(order) and _tuple_key(tuples[order[j]])[0] == key:
            j += 1
        groups.append((order[idx:j], orientation))
        idx = j
    return groups


def sample_iterated_abg(spec: ShuffleSpec, n: int, rng: Random) -> tuple:
    """One deck word for `iterations` abg passes drawn in a single sweep."""
    if spec.kind != "abg":
        raise ConfigurationError("single-sweep sampler covers the abg model")
    if spec.reverse:
        raise ConfigurationError("single-sweep sampler covers unreversed passes")
    symbols, probs = _abg_symbols(spec)
    weights = [float(probs[s]) for s in symbols]
    tuples = [
        tuple(rng.choices(symbols, weights=weights, k=spec.iterations))
        for _ in range(n)
    ]
    out = [0] * n
    value = 1
    for positions, orientation in _tuple_groups(tuples):
        block = list(range(value, value + len(positions)))
        value += len(positions)
        if orientation == 0:
            rng.shuffle(block)
        elif orientation < 0:
            block.reverse()
        for pos, v in zip(positions, block):
            out[pos] = v
    return tuple(out)


def iterated_tuple_distribution(spec: ShuffleSpec, n: int) -> PermDistribution:
    """Exact law of the spec computed from the single-sweep tuple ranking.

    Independent of the convolution route, so the two can be checked
    against each other.
    """
    if spec.kind != "abg":
        raise ConfigurationError("single-sweep law covers the abg model")
    if spec.reverse:
        raise ConfigurationError("single-sweep law covers unreversed passes")
    symbols, probs = _abg_symbols(spec)
    k = spec.iterations
    if len(symbols) ** (n * k) > ENUMERATION_BUDGET:
        raise ConfigurationError("too many tuple assignments to enumerate")
    weights: dict = {}

    def add(perm, w):
        weights[perm] = weights.get(perm, Fraction(0)) + w

    for assignment in product(symbols, repeat=n * k):
        w = prod(probs[s] for s in assignment)
        tuples = [assignment[p * k:(p + 1) * k] for p in range(n)]
        base = [0] * n
        mixed = []
        value = 1
        for positions, orientation in _tuple_groups(tuples):
            block = list(range(value, value + len(positions)))
            value += len(positions)
            if orientation == 0:
                mixed.append((positions, block))
                continue
            if orientation < 0:
                block.reverse()
            for pos, v in zip(positions, block):
                base[pos] = v
        if not mixed:
            add(tuple(base), w)
            continue
        share = w / prod(factorial(len(block)) for _, block in mixed)
        for arrangements in product(*(iter_permutations(b) for _, b in mixed)):
            perm = list(base)
            for (positions, _), arrangement in zip(mixed, arrangements):
                for pos, v in zip(positions, arrangement):
                    perm[pos] = v
            add(tuple(perm), share)
    return PermDistribution(n, weights)


# ---------------------------------------------------------------------------
# serialization


def spec_to_dict(spec: ShuffleSpec) -> dict:
    return {
        "kind": spec.kind,
        "q": [fraction_str(p) for p in spec.q],
        "y": [fraction_str(p) for p in spec.y],
        "alpha": [fraction_str(p) for p in spec.alpha],
        "beta": [fraction_str(p) for p in spec.beta],
        "gamma": fraction_str(spec.gamma),
        "mu": list(spec.mu),
        "iterations": spec.iterations,
        "reverse": spec.reverse,
    }


def spec_from_dict(payload: dict) -> ShuffleSpec:
    return ShuffleSpec(
        kind=payload["kind"],
        q=tuple(as_fraction(p) for p in payload.get("q", ())),
        y=tuple(as_fraction(p) for p in payload.get("y", ())),
        alpha=tuple(as_fraction(p) for p in payload.get("alpha", ())),
        beta=tuple(as_fraction(p) for p in payload.get("beta", ())),
        gamma=as_fraction(payload.get("gamma", 0)),
        mu=tuple(int(m) for m in payload.get("mu", ())),
        iterations=int(payload.get("iterations", 1)),
        reverse=bool(payload.get("reverse", False)),
    )


def distribution_to_payload(dist: PermDistribution, spec: ShuffleSpec = None) -> dict:
    payload = {
        "n": dist.n,
        "weights": {
            " ".join(map(str, perm)): fraction_str(w)
            for perm, w in sorted(dist.weights.items())
        },
    }
    if spec is not None:
        payload["spec"] = spec_to_dict(spec)
    return payload


def distribution_from_payload(payload: dict) -> PermDistribution:
    weights = {
        tuple(int(v) for v in key.split()): as_fraction(value)
        for key, value in payload["weights"].items()
    }
    return PermDistribution(int(payload["n"]), weights)
