"""Cycle index series, fixed point counts, shape laws, deck size mixtures.

Every generating function claim is pinned against brute enumeration of
the matching shuffle at small deck sizes.
"""

import json
from fractions import Fraction
from itertools import product

import pytest

from shufflelab.combinat import (
    cycle_type,
    multiplicities,
    partitions,
    unimodal_permutations,
)
from shufflelab.cycleindex import (
    cycle_index,
    cycle_type_probability,
    deck_size_mixture_check,
    expected_fixed_points,
    necklace_count,
    occupancy_probability,
    rsk_shape_probability,
    series_from_payload,
    series_to_payload,
    unimodal_gf,
)
from shufflelab.poly import RationalPoly
from shufflelab.series import TruncatedSeries, geometric_series
from shufflelab.shuffles import (
    ConfigurationError,
    abg_shuffle,
    exact_distribution,
    mu_shuffle,
    riffle_shuffle,
    top_to_random,
    typec_shuffle,
    uniform_riffle,
)

F = Fraction
x1 = RationalPoly.var("x1")
x2 = RationalPoly.var("x2")
x3 = RationalPoly.var("x3")
t = RationalPoly.var("t")

HALF_RIFFLE = riffle_shuffle((F(1, 2), F(1, 2)))
BIASED_RIFFLE = riffle_shuffle((F(1, 3), F(2, 3)))
ASYM_ABG = abg_shuffle(
    alpha=(F(1, 2), F(1, 6)), beta=(F(1, 4),), gamma=F(1, 12)
)

ORACLE_CASES = [
    (BIASED_RIFFLE, 4),
    (riffle_shuffle((F(1, 3), F(2, 3)), reverse=True), 4),
    (riffle_shuffle((F(1, 2), F(1, 2)), iterations=2), 3),
    (typec_shuffle((F(1, 3), F(2, 3))), 3),
    (typec_shuffle((F(1, 3), F(2, 3)), reverse=True), 3),
    (ASYM_ABG, 3),
    (abg_shuffle(alpha=(F(1, 2), F(1, 6)), beta=(F(1, 4),), gamma=F(1, 12), reverse=True), 3),
]


def ci_marginal(spec, n):
    out = {}
    for lam in partitions(n):
        p = cycle_type_probability(spec, lam)
        if p:
            out[lam] = p
    return out


def shape_law(spec, n):
    out = {}
    for lam in partitions(n):
        p = rsk_shape_probability(spec, lam, n)
        if p:
            out[lam] = p
    return out


# ---------------------------------------------------------------------------
# cycle index series


def test_riffle_u2_frozen():
    ci = cycle_index(HALF_RIFFLE, 2)
    assert ci.coefficient(2) == x1**2 * F(3, 4) + x2 * F(1, 4)
    rev = cycle_index(riffle_shuffle((F(1, 2), F(1, 2)), reverse=True), 2)
    assert rev.coefficient(2) == x1**2 * F(1, 4) + x2 * F(3, 4)


def test_typec_u3_frozen():
    ci = cycle_index(typec_shuffle((F(1),)), 3)
    assert ci.coefficient(3) == x1**3 * F(1, 4) + x1 * x2 * F(1, 2) + x3 * F(1, 4)


def test_cycle_type_probability_direct():
    assert cycle_type_probability(HALF_RIFFLE, (1, 1)) == F(3, 4)
    assert cycle_type_probability(HALF_RIFFLE, (2,)) == F(1, 4)


@pytest.mark.parametrize("case", range(len(ORACLE_CASES)))
def test_cycle_index_matches_enumeration(case):
    spec, n = ORACLE_CASES[case]
    exact = exact_distribution(spec, n).cycle_type_marginal()
    assert ci_marginal(spec, n) == exact


def test_two_passes_equal_four_piles_in_series():
    assert cycle_index(
        riffle_shuffle((F(1, 2), F(1, 2)), iterations=2), 4
    ) == cycle_index(uniform_riffle(4), 4)


def test_cycle_index_rejects_deckbound_kinds():
    with pytest.raises(ConfigurationError):
        cycle_index(mu_shuffle((1, 2)), 3)
    with pytest.raises(ConfigurationError):
        cycle_index(top_to_random(), 3)
    with pytest.raises(ConfigurationError):
        cycle_index(riffle_shuffle((F(1, 2), F(1, 2)), iterations=2, reverse=True), 3)


def test_riffle_specialization_product_form():
    # uniform k-pile cycle index is a product of geometric factors with
    # necklace-count exponents
    for k in (2, 3):
        order = 6
        ci = cycle_index(uniform_riffle(k), order)
        prod_series = TruncatedSeries.one(order)
        for i in range(1, order + 1):
            xi = RationalPoly.var(f"x{i}")
            factor = geometric_series(order, i, xi * F(1, k**i))
            prod_series = prod_series * factor ** necklace_count(i, k)
        assert ci == prod_series


def test_typec_specialization_product_form():
    # uniform 2k-pile signed cycle index: prod_m ((1+x_m u^m/(2k)^m) /
    # (1-x_m u^m/(2k)^m))^{e_m} with e_m = (1/2m) sum_{d|m, d odd} mu(d)(2k)^{m/d}
    from shufflelab.combinat import divisors, moebius

    for k in (1, 2):
        order = 6
        ci = cycle_index(typec_shuffle((F(1, k),) * k), order)
        prod_series = TruncatedSeries.one(order)
        for m in range(1, order + 1):
            xm = RationalPoly.var(f"x{m}")
            total = sum(
                moebius(d) * (2 * k) ** (m // d) for d in divisors(m) if d % 2
            )
            e_m, rem = divmod(total, 2 * m)
            assert rem == 0
            numer = TruncatedSeries.term(order, m, xm * F(1, (2 * k) ** m)) + 1
            denom = geometric_series(order, m, xm * F(1, (2 * k) ** m))
            prod_series = prod_series * (numer * denom) ** e_m
        assert ci == prod_series


def test_total_probability_specialization():
    # setting every marker to 1 collapses each u^n coefficient to 1
    for spec in (BIASED_RIFFLE, typec_shuffle((F(1, 3), F(2, 3))), ASYM_ABG):
        ci = cycle_index(spec, 6)
        ones = {f"x{i}": F(1) for i in range(1, 7)}
        assert ci.substitute(ones) == geometric_series(6, 1, F(1))


def test_fixed_point_generating_function():
    # killing x2, x3, ... leaves the fixed-point marker generating function
    spec = riffle_shuffle((F(1, 2), F(1, 2)), reverse=True)
    order = 6
    ci = cycle_index(spec, order)
    kill = {f"x{i}": F(1) for i in range(2, order + 1)}
    gf = ci.substitute(kill)
    k = 2
    u_half = TruncatedSeries.term(order, 1, x1 * F(1, k))
    expected = (
        (u_half + 1) ** k
        * geometric_series(order, 1, F(1))
        * TruncatedSeries(order, [F(1), F(1, k)]).inverse() ** k
    )
    assert gf == expected


# ---------------------------------------------------------------------------
# expected fixed points


def test_expected_fixed_points_frozen():
    assert expected_fixed_points(HALF_RIFFLE, 3) == F(7, 4)
    assert expected_fixed_points(
        riffle_shuffle((F(1, 2), F(1, 2)), reverse=True), 3
    ) == F(3, 4)


@pytest.mark.parametrize("case", range(len(ORACLE_CASES)))
def test_expected_fixed_points_match_enumeration(case):
    spec, n = ORACLE_CASES[case]
    exact = exact_distribution(spec, n).expected_fixed_points()
    assert expected_fixed_points(spec, n) == exact


def test_fixed_point_partial_sums():
    for k in (2, 3, 4):
        spec = riffle_shuffle((F(1, k),) * k)
        rev = riffle_shuffle((F(1, k),) * k, reverse=True)
        for n in range(1, 11):
            fwd_sum = sum(F(1, k**j) for j in range(n))
            alt_sum = sum((-F(1, k)) ** j for j in range(n))
            assert expected_fixed_points(spec, n) == fwd_sum
            assert expected_fixed_points(rev, n) == alt_sum


# ---------------------------------------------------------------------------
# occupancy


def test_occupancy_edge_values():
    assert occupancy_probability(1, 1, 3) == 1
    assert occupancy_probability(0, 0, 3) == 1
    assert occupancy_probability(2, 1, 3) == 0
    assert sum(occupancy_probability(a, 3, 4) for a in range(5)) == 1


@pytest.mark.parametrize("n,k", [(4, 3), (3, 2), (5, 2)])
def test_occupancy_brute_force(n, k):
    counts: dict = {}
    for assign in product(range(n), repeat=k):
        a = len(set(assign))
        counts[a] = counts.get(a, 0) + 1
    for a in range(n + 1):
        assert occupancy_probability(a, k, n) == F(counts.get(a, 0), n**k)


# ---------------------------------------------------------------------------
# shape laws


SHAPE_CASES = [
    (BIASED_RIFFLE, 4),
    (riffle_shuffle((F(1, 3), F(2, 3)), reverse=True), 4),
    (typec_shuffle((F(1, 3), F(2, 3))), 3),
    (typec_shuffle((F(1, 3), F(2, 3)), reverse=True), 3),
    (ASYM_ABG, 3),
    (abg_shuffle(alpha=(F(1, 2), F(1, 6)), beta=(F(1, 4),), gamma=F(1, 12), reverse=True), 3),
    (mu_shuffle((1, 2)), 3),
    (top_to_random(), 3),
    (top_to_random(iterations=3), 4),
    (top_to_random(reverse=True), 3),
]


@pytest.mark.parametrize("case", range(len(SHAPE_CASES)))
def test_shape_law_matches_enumeration(case):
    spec, n = SHAPE_CASES[case]
    exact = exact_distribution(spec, n).shape_marginal()
    assert shape_law(spec, n) == exact


def test_shape_law_frozen_values():
    assert rsk_shape_probability(mu_shuffle((1, 2)), (2, 1)) == F(2, 3)
    assert rsk_shape_probability(typec_shuffle((F(1),)), (3,)) == F(1, 4)


def test_shape_law_reversed_iterated_raises():
    with pytest.raises(ConfigurationError):
        rsk_shape_probability(top_to_random(iterations=2, reverse=True), (2, 2), 4)


# ---------------------------------------------------------------------------
# deck size mixtures


def test_necklace_counts():
    assert necklace_count(1, 2) == 2
    assert necklace_count(2, 2) == 1
    assert necklace_count(3, 2) == 2
    assert necklace_count(4, 2) == 3
    assert necklace_count(2, -2) == 3


def test_mixture_identity_riffle():
    assert deck_size_mixture_check(uniform_riffle(2, reverse=True), 5)
    assert deck_size_mixture_check(uniform_riffle(3, reverse=True), 4)


def test_mixture_identity_abg():
    assert deck_size_mixture_check(
        abg_shuffle(alpha=(F(1, 4), F(1, 4)), gamma=F(1, 2)), 4
    )
    assert deck_size_mixture_check(abg_shuffle(gamma=F(1)), 5)


def test_mixture_rejects_unsupported_specs():
    for bad in (
        uniform_riffle(2),
        typec_shuffle((F(1),)),
        abg_shuffle(alpha=(F(1, 2), F(1, 4)), gamma=F(1, 4)),
        abg_shuffle(alpha=(F(1, 2),), beta=(F(1, 4),), gamma=F(1, 4)),
    ):
        with pytest.raises(ConfigurationError):
            deck_size_mixture_check(bad, 3)


# ---------------------------------------------------------------------------
# unimodal generating function


def test_unimodal_gf_small_orders():
    gf = unimodal_gf(4)
    assert gf.coefficient(1) == (1 + t) * x1
    assert gf.coefficient(3) == (1 + t) * (
        t**2 * x1**3 + t * x1 * x2 + t * x3 + x1 * x2
    )


def test_unimodal_gf_matches_enumeration():
    order = 6
    gf = unimodal_gf(order)
    for n in range(1, order + 1):
        expected = RationalPoly.const(0)
        for perm, maxpos in unimodal_permutations(n):
            mono = RationalPoly.const(1)
            for part, mult in multiplicities(cycle_type(perm)).items():
                mono = mono * RationalPoly.var(f"x{part}", mult)
            expected = expected + t ** (maxpos - 1) * mono
        assert gf.coefficient(n) == (1 + t) * expected


# ---------------------------------------------------------------------------
# payloads


def test_series_payload_round_trip():
    for s in (
        cycle_index(typec_shuffle((F(1, 3), F(2, 3))), 3),
        cycle_index(ASYM_ABG, 4),
        unimodal_gf(3),
    ):
        payload = series_to_payload(s)
        rebuilt = series_from_payload(json.loads(json.dumps(payload)))
        assert rebuilt == s
