"""Cycle index series and other closed forms for the shuffle models.

The cycle index lives in one deck-size variable u with polynomial
coefficients in cycle markers x1, x2, ...: the u^n coefficient records,
for every cycle type of n, the probability that the shuffle's pattern
has that cycle type.  The independent-letter models admit one product
formula per cycle length and multiplicity; everything here sums the
logarithms of those factors and exponentiates once.

Also here: expected fixed cards, the shape law of the insertion
correspondence for every model, occupancy probabilities, the top-card
mixture form of those, generating-series identities over all deck sizes
at once, and the ranked generating function of unimodal patterns.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .combinat import (
    check_partition,
    conjugate,
    divisors,
    kostka,
    moebius,
    multinomial,
    multiplicities,
    skew_row_count,
    tableau_count,
)
from .poly import RationalPoly, as_fraction, fraction_str
from .series import TruncatedSeries
from .shuffles import ConfigurationError, ShuffleSpec
from .symfunc import (
    ParamVector,
    extended_power_sum,
    extended_schur,
    power_sum,
    schur,
    stembridge_s,
)


def _x(i: int) -> RationalPoly:
    return RationalPoly.var(f"x{i}")


def necklace_count(i: int, value: int) -> int:
    """(1/i) * sum over d|i of moebius(d) * value^(i/d); always an integer."""
    total = sum(moebius(d) * value ** (i // d) for d in divisors(i))
    count, rem = divmod(total, i)
    assert rem == 0, (i, value)
    return count


def _letter_power(spec: ShuffleSpec):
    """Per-model power sum feeding the cycle index product."""
    if spec.kind == "riffle":
        if spec.reverse:
            if spec.iterations != 1:
                raise ConfigurationError("closed form covers one reversed pass")
            return lambda m: (-1) ** (m + 1) * power_sum(m, spec.q)
        t = spec.iterations
        return lambda m: power_sum(m, spec.q) ** t
    if spec.kind == "abg":
        if spec.iterations != 1:
            raise ConfigurationError("closed form covers single passes")
        params = ParamVector.of(spec.alpha, spec.beta, spec.gamma)
        if spec.reverse:
            params = params.swapped()
        return lambda m: extended_power_sum(m, params)
    raise ConfigurationError(f"no cycle index closed form for {spec.kind!r}")


def cycle_index(spec: ShuffleSpec, order: int) -> TruncatedSeries:
    """Generating series over deck sizes, truncated past u^order."""
    if not isinstance(order, int) or order < 0:
        raise ConfigurationError("order must be a nonnegative integer")
    log = TruncatedSeries.zero(order)
    if spec.kind == "typec":
        if spec.iterations != 1:
            raise ConfigurationError("closed form covers single passes")
        # Reversal leaves every factor unchanged: the would-be sign is
        # (-1)^(ij + i/d) with j and d both odd, which is +1 for every i.
        for i in range(1, order + 1):
            for j in range(1, order // i + 1, 2):
                acc = Fraction(0)
                for d in divisors(i):
                    if d % 2:
                        acc += moebius(d) * (2 * power_sum(j * d, spec.y)) ** (i // d)
                if acc == 0:
                    continue
                c = acc / (Fraction(2) ** (i * j) * i * j)
                log = log + TruncatedSeries.term(order, i * j, _x(i) ** j * c)
    elif spec.kind in ("riffle", "abg"):
        letter = _letter_power(spec)
        cache: dict = {}
        for i in range(1, order + 1):
            for j in range(1, order // i + 1):
                acc = Fraction(0)
                for d in divisors(i):
                    m = j * d
                    if m not in cache:
                        cache[m] = letter(m)
                    acc += moebius(d) * cache[m] ** (i // d)
                if acc == 0:
                    continue
                log = log + TruncatedSeries.term(order, i * j, _x(i) ** j * (acc / (i * j)))
    else:
        raise ConfigurationError(f"no cycle index closed form for {spec.kind!r}")
    return log.exp()


def cycle_type_probability(spec: ShuffleSpec, lam) -> Fraction:
    """Probability that the pattern of one deck of sum(lam) cards has
    cycle type lam, read off the cycle index."""
    lam = check_partition(lam)
    n = sum(lam)
    series = cycle_index(spec, n)
    mono = {f"x{part}": mult for part, mult in multiplicities(lam).items()}
    return series.extract(n, mono)


def expected_fixed_points(spec: ShuffleSpec, n: int) -> Fraction:
    """Mean number of cards returned to their starting position."""
    if not isinstance(n, int) or n < 0:
        raise ConfigurationError("deck size must be a nonnegative integer")
    if spec.kind == "riffle":
        if spec.reverse:
            if spec.iterations != 1:
                raise ConfigurationError("closed form covers one reversed pass")
            return sum(
                ((-1) ** (j - 1) * power_sum(j, spec.q) for j in range(1, n + 1)),
                Fraction(0),
            )
        t = spec.iterations
        return sum(
            (power_sum(j, spec.q) ** t for j in range(1, n + 1)), Fraction(0)
        )
    if spec.kind == "abg":
        if spec.iterations != 1:
            raise ConfigurationError("closed form covers single passes")
        params = ParamVector.of(spec.alpha, spec.beta, spec.gamma)
        if spec.reverse:
            params = params.swapped()
        return sum(
            (extended_power_sum(j, params) for j in range(1, n + 1)), Fraction(0)
        )
    if spec.kind == "typec":
        poly = cycle_index(spec, n).coefficient(n)
        if not isinstance(poly, RationalPoly):
            return Fraction(0)
        total = Fraction(0)
        for mono, c in poly.terms.items():
            e1 = dict(mono).get("x1", 0)
            if e1:
                total += c * e1
        return total
    raise ConfigurationError(f"no fixed-point closed form for {spec.kind!r}")


# ---------------------------------------------------------------------------
# occupancy and the top-card shuffle


def occupancy_probability(occupied: int, drops: int, cells: int) -> Fraction:
    """P(exactly `occupied` distinct cells are hit by `drops` uniform drops).

    Inclusion-exclusion on which cells of the chosen set stay empty.
    """
    if cells < 1:
        raise ConfigurationError("need at least one cell")
    if drops < 0 or occupied < 0:
        raise ConfigurationError("counts must be nonnegative")
    if occupied > cells:
        return Fraction(0)
    total = Fraction(0)
    for i in range(occupied + 1):
        total += (-1) ** i * comb(occupied, i) * Fraction(occupied - i, cells) ** drops
    return comb(cells, occupied) * total


def rsk_shape_probability(spec: ShuffleSpec, lam, n: int = None) -> Fraction:
    """Probability that the insertion shape of the shuffled deck equals lam.

    Turning the deck over transposes the shape, so a reversed spec reads
    the conjugate shape off the unreversed model.
    """
    lam = check_partition(lam)
    if n is None:
        n = sum(lam)
    if sum(lam) != n:
        raise ConfigurationError("shape size must match the deck size")
    if spec.reverse:
        # Fails for iterated reversed passes: the flips land between the
        # passes, not just after the final one.
        if spec.iterations != 1:
            raise ConfigurationError("shape law covers single reversed passes")
        return rsk_shape_probability(spec.unreversed(), conjugate(lam), n)
    if spec.kind != "top" and spec.iterations != 1:
        raise ConfigurationError("shape law covers single passes")
    f = tableau_count(lam)
    if spec.kind == "riffle":
        return f * schur(lam, spec.q)
    if spec.kind == "typec":
        return f * stembridge_s(lam, spec.y) / Fraction(2) ** n
    if spec.kind == "abg":
        return f * extended_schur(lam, ParamVector.of(spec.alpha, spec.beta, spec.gamma))
    if spec.kind == "mu":
        if sum(spec.mu) != n:
            raise ConfigurationError("deck size must equal the sum of pile sizes")
        return Fraction(f * kostka(lam, spec.mu), multinomial(n, spec.mu))
    if spec.kind == "top":
        total = Fraction(0)
        for a in range(1, n + 1):
            p = occupancy_probability(a, spec.iterations, n)
            if p == 0:
                continue
            total += p * factorial(n - a) * skew_row_count(lam, n - a)
        return Fraction(f, factorial(n)) * total
    raise ConfigurationError(f"no shape law for {spec.kind!r}")


# ---------------------------------------------------------------------------
# identities over all deck sizes at once


def deck_size_mixture_check(spec: ShuffleSpec, order: int) -> bool:
    """Check that (1-u) times the cycle index series equals the model's
    finite product over cycle lengths, to the given truncation order.

    Covers two families: one reversed pass of the uniform riffle, and one
    unreversed pass of the abg model with equal upright piles, no flipped
    piles, and the rest of the mass on the mixed pile.  The exponents in
    both products are counts of primitive necklaces, checked integral as
    they are formed.
    """
    one = TruncatedSeries.one(order)
    lhs = (one - TruncatedSeries.term(order, 1, Fraction(1))) * cycle_index(spec, order)
    if spec.kind == "riffle":
        k = len(spec.q)
        if not spec.reverse or spec.iterations != 1 or any(p != Fraction(1, k) for p in spec.q):
            raise ConfigurationError("mixture form covers one reversed uniform pass")
        rhs = one
        for i in range(1, order + 1):
            ki = Fraction(1, k**i)
            if i % 2:
                m = necklace_count(i, k)
                num = one + TruncatedSeries.term(order, i, _x(i) * ki)
                den = one + TruncatedSeries.term(order, i, ki)
            else:
                m = necklace_count(i, -k)
                num = one - TruncatedSeries.term(order, i, ki)
                den = one - TruncatedSeries.term(order, i, _x(i) * ki)
            rhs = rhs * (num * den.inverse()) ** m
        return lhs == rhs
    if spec.kind == "abg":
        if spec.beta or spec.reverse or spec.iterations != 1:
            raise ConfigurationError(
                "mixture form covers one unreversed pass with upright piles only"
            )
        piles = len(spec.alpha)
        if piles and any(v != spec.alpha[0] for v in spec.alpha):
            raise ConfigurationError("mixture form needs equal upright piles")
        gamma = spec.gamma
        logpart = TruncatedSeries.zero(order)
        for i in range(1, order + 1):
            c = (1 - (1 - gamma) ** i) * Fraction(1, i)
            logpart = logpart + TruncatedSeries.term(order, i, (_x(i) - 1) * c)
        rhs = logpart.exp()
        for i in range(1, order + 1) if piles else ():
            e = necklace_count(i, piles)
            ci = spec.alpha[0] ** i
            num = one - TruncatedSeries.term(order, i, ci)
            den = one - TruncatedSeries.term(order, i, _x(i) * ci)
            rhs = rhs * (num * den.inverse()) ** e
        return lhs == rhs
    raise ConfigurationError("mixture forms cover riffle and abg shuffles")


def unimodal_gf(order: int) -> TruncatedSeries:
    """Deck-size series for patterns that rise then fall.

    The u^n coefficient equals (1+t) times the sum, over unimodal
    patterns w of n, of t^(position of the maximum - 1) times the cycle
    markers of w.
    """
    if not isinstance(order, int) or order < 0:
        raise ConfigurationError("order must be a nonnegative integer")
    t = RationalPoly.var("t")
    log = TruncatedSeries.zero(order)
    for i in range(1, order + 1):
        for j in range(1, order // i + 1):
            acc = RationalPoly.const(0)
            for d in divisors(i):
                m = j * d
                acc = acc + moebius(d) * (t**m - (-1) ** m) ** (i // d)
            if not acc:
                continue
            log = log + TruncatedSeries.term(order, i * j, _x(i) ** j * acc * Fraction(1, i * j))
    return log.exp()


# ---------------------------------------------------------------------------
# serialization


def series_to_payload(series: TruncatedSeries) -> dict:
    """JSON-ready form: cycle markers keyed by cycle length, 't' kept as-is."""
    terms = []
    for n in range(series.order + 1):
        c = series.coefficient(n)
        if isinstance(c, RationalPoly):
            for mono, coeff in sorted(c.terms.items()):
                keyed = {}
                for var, exp in mono:
                    keyed[var[1:] if var.startswith("x") else var] = exp
                terms.append({"n": n, "monomial": keyed, "coeff": fraction_str(coeff)})
        else:
            c = as_fraction(c)
            if c != 0:
                terms.append({"n": n, "monomial": {}, "coeff": fraction_str(c)})
    return {"order": series.order, "terms": terms}


def series_from_payload(payload: dict) -> TruncatedSeries:
    series = TruncatedSeries.zero(int(payload["order"]))
    for item in payload["terms"]:
        poly = RationalPoly.const(as_fraction(item["coeff"]))
        for key, exp in item.get("monomial", {}).items():
            name = key if key == "t" else f"x{int(key)}"
            poly = poly * RationalPoly.var(name, int(exp))
        series = series + TruncatedSeries.term(series.order, int(item["n"]), poly)
    return series
