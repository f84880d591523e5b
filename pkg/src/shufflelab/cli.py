"""Command line front end.

Four subcommands: ``verify`` runs the identity suites and reports one
PASS/FAIL line per check, ``table`` emits closed-form vs enumerated
value tables, ``dist`` serializes an exact shuffle distribution, and
``series`` serializes a cycle index series.  Output is deterministic
byte for byte given the same arguments and seed.

Exit codes: 0 all good, 1 at least one check failed, 2 bad
configuration (unparsable parameters, guard exceeded, unnormalized
probability vectors).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import replace
from fractions import Fraction
from itertools import product
from math import comb
from pathlib import Path

from .combinat import (
    centralizer_size,
    character,
    compose,
    conjugate,
    cycle_type,
    descent_class_count,
    descent_mask,
    divisors,
    full_mask,
    identity_permutation,
    inverse_permutation,
    moebius,
    multiplicities,
    partitions,
    reverse_permutation,
    unimodal_permutations,
)
from .cycleindex import (
    cycle_index,
    cycle_type_probability,
    deck_size_mixture_check,
    expected_fixed_points,
    necklace_count,
    rsk_shape_probability,
    series_to_payload,
    unimodal_gf,
)
from .poly import RationalPoly, as_fraction, fraction_str
from .rsk import rsk, rsk_inverse, rsk_shape, word_to_permutation
from .series import TruncatedSeries, geometric_series
from .shuffles import (
    ConfigurationError,
    ShuffleSpec,
    abg_shuffle,
    convolve,
    distribution_to_payload,
    exact_distribution,
    iterate,
    mu_shuffle,
    riffle_shuffle,
    sample_permutations,
    separation_bound,
    separation_distance,
    top_to_random,
    typec_shuffle,
    uniform_riffle,
)
from .symfunc import (
    CAUCHY_KINDS,
    ParamVector,
    cauchy_check,
    extended_h_list,
    extended_power_sum,
    extended_schur,
    power_sum_partition,
    schur,
    schur_jacobi_trudi,
    stembridge_s,
)

MAX_ORDER = 12
MAX_UNIMODAL_ORDER = 10

SUITES = ("identities", "rsk", "shuffles", "cycle-index")


def _rationals(text: str) -> tuple:
    try:
        return tuple(as_fraction(part) for part in text.split(",") if part != "")
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigurationError(f"cannot parse rational list {text!r}: {exc}")


def _ints(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError as exc:
        raise ConfigurationError(f"cannot parse integer list {text!r}: {exc}")


def build_spec(args) -> ShuffleSpec:
    """Assemble a ShuffleSpec from the model flags.

    --k doubles as the pile count for uniform riffles (when --q is
    absent) and as the pass count for top-to-random.
    """
    model = args.model
    reverse = args.reversed
    if model == "riffle":
        if args.q:
            return riffle_shuffle(_rationals(args.q), reverse=reverse)
        return uniform_riffle(args.k or 2, reverse=reverse)
    if model == "typec":
        y = _rationals(args.y) if args.y else (Fraction(1, 2), Fraction(1, 2))
        return typec_shuffle(y, reverse=reverse)
    if model == "abg":
        alpha = _rationals(args.alpha) if args.alpha else ()
        beta = _rationals(args.beta) if args.beta else ()
        gamma = as_fraction(args.gamma) if args.gamma else Fraction(0)
        return abg_shuffle(alpha=alpha, beta=beta, gamma=gamma, reverse=reverse)
    if model == "mu":
        if not args.mu:
            raise ConfigurationError("--mu is required for the mu model")
        return mu_shuffle(_ints(args.mu), reverse=reverse)
    if model == "top":
        return top_to_random(iterations=args.k or 1, reverse=reverse)
    raise ConfigurationError(f"unknown model {model!r}")


def _resolve_out(path: str):
    if path is None:
        return None
    p = Path(path)
    if not p.is_absolute():
        base = os.environ.get("SHUFFLELAB_OUTDIR")
        if base:
            p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _write_text(args, text: str) -> None:
    out = _resolve_out(args.out)
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        print(f"wrote {out}")


def _emit_rows(args, kind: str, fieldnames: list, rows: list) -> None:
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        _write_text(args, buf.getvalue())
    else:
        payload = {"kind": kind, "rows": rows}
        _write_text(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _lam_str(lam) -> str:
    return "+".join(str(part) for part in lam) if lam else "-"


# ---------------------------------------------------------------------------
# verify


def _check_identities(args):
    degree = args.order or 4
    if degree > 10:
        raise ConfigurationError("identity degree capped at 10")
    params = ParamVector.of((Fraction(1, 3),), (Fraction(1, 4),), Fraction(5, 12))
    for kind in CAUCHY_KINDS:
        p = params if kind == "extended" else None
        yield f"cauchy-{kind} deg{degree}", lambda k=kind, pp=p: cauchy_check(k, degree, params=pp), ""

    xs = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))

    def jacobi_trudi():
        return all(
            schur(lam, xs) == schur_jacobi_trudi(lam, xs)
            for n in range(1, 5)
            for lam in partitions(n)
        )

    yield "schur-jacobi-trudi n<=4", jacobi_trudi, ""

    def schur_powersum():
        for n in range(1, 5):
            for lam in partitions(n):
                total = sum(
                    (
                        Fraction(character(lam, mu), centralizer_size(mu))
                        * power_sum_partition(mu, xs)
                        for mu in partitions(n)
                    ),
                    Fraction(0),
                )
                if total != schur(lam, xs):
                    return False
        return True

    yield "schur-powersum n<=4", schur_powersum, ""

    def positivity():
        return all(
            extended_schur(lam, params) >= 0
            for n in range(1, 6)
            for lam in partitions(n)
        )

    yield "extended-schur-positivity n<=5", positivity, ""

    def ptilde_log():
        order = 8
        hs = extended_h_list(params, order)
        series = TruncatedSeries(order, [as_fraction(h) for h in hs])
        logs = series.log()
        return all(
            extended_power_sum(r, params) == r * logs.coefficient(r)
            for r in range(1, order + 1)
        )

    yield "ptilde-log-consistency r<=8", ptilde_log, ""

    def stembridge_frozen():
        y = (Fraction(1),)
        return stembridge_s((2,), y) == 2 and stembridge_s((1, 1), y) == 2

    yield "stembridge-frozen y=(1)", stembridge_frozen, ""


def _check_rsk(args):
    from itertools import permutations as iter_permutations

    def standard_roundtrip():
        pairs = set()
        for w in iter_permutations(range(1, 5)):
            pair = rsk(w)
            if rsk_inverse(pair) != w:
                return False
            pairs.add(pair)
        return len(pairs) == 24

    yield "standard-roundtrip S4", standard_roundtrip, ""

    def signed_roundtrip(variant):
        letters = (1, -1, 2, -2)
        return all(
            rsk_inverse(rsk(word, variant), variant) == word
            for word in product(letters, repeat=3)
        )

    yield "signed-flip-roundtrip k=2 n=3", lambda: signed_roundtrip("signed-flip"), ""
    yield "signed-standard-roundtrip k=2 n=3", lambda: signed_roundtrip("signed-standard"), ""

    def typec_example():
        pair = rsk((1, -1, 2, -2, 1, 1, -1, 1, 2, 2, -1, 2, -2), "signed-flip")
        return pair.insertion == ((1, 1, 1, 1, -1, 2, 2, -2), (-1, 2, 2), (-1, -2)) and (
            pair.recording == ((1, 2, 3, 4, 9, 10, 12, 13), (5, 6, 7), (8, 11))
        )

    yield "signed-flip-example n=13", typec_example, ""

    def brkv_example():
        pair = rsk((1, -1, 2, -2, 1, 1, -2), "signed-standard")
        return pair.insertion == ((-2, 1, 1), (-2, 2), (-1,), (1,)) and (
            pair.recording == ((1, 3, 6), (2, 5), (4,), (7,))
        )

    yield "signed-standard-example n=7", brkv_example, ""

    def riffle_map():
        if word_to_permutation((1, 3, 2, 1, 2, 2, 1, 3, 1, 2), "riffle") != (
            1, 9, 5, 2, 6, 7, 3, 10, 4, 8,
        ):
            return False
        for word in product((1, 2, 3), repeat=4):
            perm = word_to_permutation(word, "riffle")
            if rsk(word).recording != rsk(perm).recording:
                return False
        return True

    yield "riffle-word-map", riffle_map, ""

    def signed_map():
        frozen = word_to_permutation(
            (1, -1, 2, -2, 1, 1, -1, 1, 2, 2, -1, 2, -2), "signed"
        )
        if frozen != (1, 7, 8, 13, 2, 3, 6, 4, 9, 10, 5, 11, 12):
            return False
        for word in product((1, -1, 2, -2), repeat=4):
            perm = word_to_permutation(word, "signed")
            if rsk(word, "signed-flip").recording != rsk(perm).recording:
                return False
        return True

    yield "signed-word-map", signed_map, ""

    def abg_map():
        dist = word_to_permutation((-2, 0, 1, 0, 0, 2, -1, -2, -1, 1), "abg")
        if len(dist) != 6 or any(w != Fraction(1, 6) for w in dist.values()):
            return False
        if (2, 5, 8, 6, 7, 10, 4, 1, 3, 9) not in dist:
            return False
        for word in product((-2, -1, 1), repeat=4):
            (perm,) = word_to_permutation(word, "abg")
            if rsk(word, "signed-standard").recording != rsk(perm).recording:
                return False
        return True

    yield "abg-word-map", abg_map, ""

    def reverse_transpose():
        for n in range(1, 6):
            for w in iter_permutations(range(1, n + 1)):
                if rsk_shape(tuple(reversed(w))) != conjugate(rsk_shape(w)):
                    return False
        return True

    yield "reverse-transpose n<=5", reverse_transpose, ""


def _check_shuffles(args):
    half = Fraction(1, 2)

    def riffle_frozen():
        dist = exact_distribution(riffle_shuffle((half, half)), 2)
        return dist.probability((1, 2)) == Fraction(3, 4) and dist.probability(
            (2, 1)
        ) == Fraction(1, 4)

    yield "riffle-n2-frozen", riffle_frozen, ""

    def mu_uniform():
        dist = exact_distribution(mu_shuffle((1, 2)), 3)
        third = Fraction(1, 3)
        return all(
            dist.probability(w) == third for w in ((1, 2, 3), (2, 1, 3), (2, 3, 1))
        )

    yield "mu-(1,2)-uniform", mu_uniform, ""

    def gsr_product():
        for n in range(2, 5):
            two = exact_distribution(uniform_riffle(2, iterations=2), n)
            four = exact_distribution(uniform_riffle(4), n)
            if two != four:
                return False
        return True

    yield "riffle-product n<=4", gsr_product, ""

    def abg_iteration():
        for n in range(2, 5):
            for k in (2, 3):
                lhs = exact_distribution(abg_shuffle(alpha=(half,), gamma=half, iterations=k), n)
                rhs = exact_distribution(
                    abg_shuffle(alpha=(half**k,), gamma=1 - half**k), n
                )
                if lhs != rhs:
                    return False
        return True

    yield "abg-iteration n<=4", abg_iteration, ""

    def reversal_conjugacy():
        alpha = (Fraction(1, 2), Fraction(1, 6))
        beta = (Fraction(1, 4),)
        gamma = Fraction(1, 12)
        for n in range(2, 5):
            rev = exact_distribution(
                abg_shuffle(alpha=alpha, beta=beta, gamma=gamma, reverse=True), n
            )
            swapped = exact_distribution(
                abg_shuffle(alpha=beta, beta=alpha, gamma=gamma), n
            )
            w0 = reverse_permutation(identity_permutation(n))
            if rev != swapped.map_words(lambda w: compose(compose(w0, w), w0)):
                return False
        return True

    yield "abg-reversal-conjugacy n<=4", reversal_conjugacy, ""

    def typec_abg_marginals():
        for piles in (1, 2):
            y = tuple(Fraction(1, piles) for _ in range(piles))
            hh = tuple(Fraction(1, 2 * piles) for _ in range(piles))
            for n in range(2, 5):
                tc = exact_distribution(typec_shuffle(y), n)
                ab = exact_distribution(abg_shuffle(alpha=hh, beta=hh), n)
                if tc.cycle_type_marginal() != ab.cycle_type_marginal():
                    return False
                if tc.shape_marginal() != ab.shape_marginal():
                    return False
        return True

    yield "typec-abg-marginals n<=4", typec_abg_marginals, ""

    def inverse_descent_classes():
        q = (Fraction(1, 3), Fraction(2, 3))
        for n in range(2, 6):
            dist = exact_distribution(riffle_shuffle(q), n)
            by_mask = {}
            for w in dist.support():
                mask = descent_mask(inverse_permutation(w))
                by_mask.setdefault(mask, set()).add(dist.probability(w))
            if any(len(vals) != 1 for vals in by_mask.values()):
                return False
        return True

    yield "inverse-descent-classes n<=5", inverse_descent_classes, ""

    def separation():
        spec1 = riffle_shuffle((half, half))
        d1 = exact_distribution(spec1, 2)
        if separation_distance(d1) != half or separation_bound(spec1, 2) != half:
            return False
        base = exact_distribution(abg_shuffle(alpha=(half,), gamma=half), 4)
        for k in range(1, 7):
            spec = abg_shuffle(alpha=(half,), gamma=half, iterations=k)
            if separation_distance(iterate(base, k)) > separation_bound(spec, 4):
                return False
        return True

    yield "separation-bound abg n=4 k<=6", separation, ""

    def sampler_determinism():
        spec = riffle_shuffle((half, half))
        a = sample_permutations(spec, 3, 200, seed=args.seed)
        b = sample_permutations(spec, 3, 200, seed=args.seed)
        return a == b

    yield "sampler-determinism", sampler_determinism, ""

    def serialization():
        from .shuffles import distribution_from_payload, spec_from_dict, spec_to_dict

        for spec, n in (
            (riffle_shuffle((half, half)), 3),
            (abg_shuffle(alpha=(half,), gamma=half, reverse=True), 3),
            (typec_shuffle((Fraction(1, 3), Fraction(2, 3))), 3),
        ):
            if spec_from_dict(spec_to_dict(spec)) != spec:
                return False
            dist = exact_distribution(spec, n)
            payload = json.loads(json.dumps(distribution_to_payload(dist, spec)))
            if distribution_from_payload(payload) != dist:
                return False
        return True

    yield "serialization-roundtrip", serialization, ""


def _check_cycle_index(args):
    nmax = args.n or 4
    order = args.order or 6
    if order > MAX_ORDER:
        raise ConfigurationError(f"series order capped at {MAX_ORDER}")
    half = Fraction(1, 2)

    oracle_specs = [
        ("riffle-k2", uniform_riffle(2)),
        ("riffle-k3", uniform_riffle(3)),
        ("riffle-rev-k2", uniform_riffle(2, reverse=True)),
        ("typec-k1", typec_shuffle((Fraction(1),))),
        ("typec-k2", typec_shuffle((half, half))),
        ("abg", abg_shuffle(alpha=(half,), gamma=half)),
    ]

    def oracle(spec):
        def run():
            for n in range(1, nmax + 1):
                marginal = exact_distribution(spec, n).cycle_type_marginal()
                for lam in partitions(n):
                    if cycle_type_probability(spec, lam) != marginal.get(lam, Fraction(0)):
                        return False
            return True

        return run

    for name, spec in oracle_specs:
        yield f"oracle-{name} n<={nmax}", oracle(spec), ""

    def fixed_points():
        for k in (2, 3, 4):
            fwd = riffle_shuffle(tuple(Fraction(1, k) for _ in range(k)))
            rev = uniform_riffle(k, reverse=True)
            for n in range(1, 11):
                closed = sum(
                    (Fraction(1, k) ** j for j in range(n)), Fraction(0)
                )
                alternating = sum(
                    ((-Fraction(1, k)) ** j for j in range(n)), Fraction(0)
                )
                if expected_fixed_points(fwd, n) != closed:
                    return False
                if expected_fixed_points(rev, n) != alternating:
                    return False
            for n in range(1, min(nmax, 6) + 1):
                for spec in (fwd, rev):
                    exact = exact_distribution(spec, n).expected_fixed_points()
                    if expected_fixed_points(spec, n) != exact:
                        return False
        return True

    yield "fixed-points k=2,3,4", fixed_points, ""

    def typec_reversal():
        y = (half, half)
        return cycle_index(typec_shuffle(y), order) == cycle_index(
            typec_shuffle(y, reverse=True), order
        )

    yield f"typec-reversal-invariance order{order}", typec_reversal, ""

    def riffle_specialization():
        k = 2
        lhs = cycle_index(uniform_riffle(k), order)
        rhs = TruncatedSeries.one(order)
        for i in range(1, order + 1):
            factor = TruncatedSeries.one(order) - TruncatedSeries.term(
                order, i, RationalPoly.var(f"x{i}") * Fraction(1, k**i)
            )
            rhs = rhs * factor.inverse() ** necklace_count(i, k)
        return lhs == rhs

    yield f"riffle-specialization order{order}", riffle_specialization, ""

    def brau_specialization():
        k = 2
        y = tuple(Fraction(1, k) for _ in range(k))
        lhs = cycle_index(typec_shuffle(y), order)
        rhs = TruncatedSeries.one(order)
        for m in range(1, order + 1):
            total = sum(
                moebius(d) * (2 * k) ** (m // d) for d in divisors(m) if d % 2
            )
            exponent, rem = divmod(total, 2 * m)
            if rem:
                return False
            mark = RationalPoly.var(f"x{m}") * Fraction(1, (2 * k) ** m)
            num = TruncatedSeries.one(order) + TruncatedSeries.term(order, m, mark)
            den = TruncatedSeries.one(order) - TruncatedSeries.term(order, m, mark)
            rhs = rhs * (num * den.inverse()) ** exponent
        return lhs == rhs

    yield f"typec-specialization order{order}", brau_specialization, ""

    def fixed_point_gf():
        k = 2
        lhs = cycle_index(uniform_riffle(k, reverse=True), order).substitute(
            {f"x{i}": 1 for i in range(2, order + 1)}
        )
        one = TruncatedSeries.one(order)
        x1u = TruncatedSeries.term(order, 1, RationalPoly.var("x1") * Fraction(1, k))
        num = (one + x1u) ** k
        den = (one + TruncatedSeries.term(order, 1, Fraction(1, k))) ** k * (
            one - TruncatedSeries.term(order, 1, Fraction(1))
        )
        return lhs == num * den.inverse()

    yield f"fixed-point-gf order{order}", fixed_point_gf, ""

    def total_probability():
        ones = {f"x{i}": 1 for i in range(1, order + 1)}
        target = geometric_series(order, 1, Fraction(1))
        specs = (
            uniform_riffle(2),
            uniform_riffle(2, reverse=True),
            typec_shuffle((half, half)),
            abg_shuffle(alpha=(half,), gamma=half),
        )
        return all(cycle_index(s, order).substitute(ones) == target for s in specs)

    yield f"total-probability order{order}", total_probability, ""

    def mixtures():
        return deck_size_mixture_check(
            uniform_riffle(2, reverse=True), order
        ) and deck_size_mixture_check(abg_shuffle(alpha=(half,), gamma=half), order)

    yield f"deck-size-mixtures order{order}", mixtures, ""

    def unimodal():
        gf = unimodal_gf(min(order, MAX_UNIMODAL_ORDER))
        t = RationalPoly.var("t")
        for n in range(1, min(order, 6) + 1):
            perms = unimodal_permutations(n)
            if len(perms) != 2 ** (n - 1):
                return False
            for i in range(1, n + 1):
                at_i = sum(1 for _, pos in perms if pos == i)
                if at_i != comb(n - 1, i - 1):
                    return False
            total = RationalPoly.const(0)
            for perm, pos in perms:
                mono = RationalPoly.const(1)
                for part, mult in multiplicities(cycle_type(perm)).items():
                    mono = mono * RationalPoly.var(f"x{part}", mult)
                total = total + t ** (pos - 1) * mono
            if gf.coefficient(n) != (1 + t) * total:
                return False
        return True

    yield "unimodal-gf n<=6", unimodal, ""

    def shape_laws():
        specs = (
            riffle_shuffle((Fraction(1, 3), Fraction(2, 3))),
            typec_shuffle((Fraction(1, 3), Fraction(2, 3))),
            abg_shuffle(alpha=(half, Fraction(1, 4)), gamma=Fraction(1, 4)),
            mu_shuffle((1, 3)),
        )
        for spec in specs:
            for n in range(2, 5):
                if spec.kind == "mu" and sum(spec.mu) != n:
                    continue
                marginal = exact_distribution(spec, n).shape_marginal()
                for lam in partitions(n):
                    got = rsk_shape_probability(spec, lam, n)
                    if got != marginal.get(lam, Fraction(0)):
                        return False
        for k in range(1, 5):
            spec = top_to_random(iterations=k)
            marginal = exact_distribution(spec, 4).shape_marginal()
            for lam in partitions(4):
                if rsk_shape_probability(spec, lam, 4) != marginal.get(lam, Fraction(0)):
                    return False
        return True

    yield "shape-laws n<=4", shape_laws, ""

    def descent_schur():
        q = (Fraction(1, 3), Fraction(2, 3))
        for n in range(2, 5):
            dist = exact_distribution(riffle_shuffle(q), n)
            class_prob = {}
            for w in dist.support():
                mask = descent_mask(inverse_permutation(w))
                class_prob[mask] = dist.probability(w)
            for lam in partitions(n):
                total = sum(
                    (
                        class_prob.get(mask, Fraction(0))
                        * descent_class_count(lam, mask)
                        for mask in range(full_mask(n) + 1)
                    ),
                    Fraction(0),
                )
                if total != schur(lam, q):
                    return False
        return True

    yield "descent-class-schur n<=4", descent_schur, ""


def run_verify(args) -> int:
    generators = {
        "identities": _check_identities,
        "rsk": _check_rsk,
        "shuffles": _check_shuffles,
        "cycle-index": _check_cycle_index,
    }
    suites = SUITES if args.suite == "all" else (args.suite,)
    failures = 0
    for suite in suites:
        print(f"[{suite}]")
        for name, check, detail in generators[suite](args):
            try:
                ok = check()
            except ConfigurationError:
                raise
            except Exception as exc:  # a crash is a failure, not a config error
                ok = False
                detail = f"{type(exc).__name__}: {exc}"
            if ok:
                print(f"{name}: PASS")
            else:
                failures += 1
                print(f"{name}: FAIL" + (f" ({detail})" if detail else ""))
    total = "all checks passed" if failures == 0 else f"{failures} check(s) failed"
    print(total)
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# table


def run_table(args) -> int:
    kind = args.kind
    if kind == "fixed-points":
        spec = build_spec(args)
        nmax = args.n or 8
        rows = []
        for n in range(1, nmax + 1):
            closed = expected_fixed_points(spec, n)
            row = {"n": n, "closed_form": fraction_str(closed)}
            if n <= 6:
                enumerated = exact_distribution(spec, n).expected_fixed_points()
                row["enumerated"] = fraction_str(enumerated)
                row["match"] = closed == enumerated
            else:
                row["enumerated"] = ""
                row["match"] = ""
            rows.append(row)
        _emit_rows(args, kind, ["n", "closed_form", "enumerated", "match"], rows)
        return 0
    if kind == "cycle-type":
        spec = build_spec(args)
        n = args.n or 4
        marginal = exact_distribution(spec, n).cycle_type_marginal()
        rows = []
        for lam in partitions(n):
            closed = cycle_type_probability(spec, lam)
            enumerated = marginal.get(lam, Fraction(0))
            rows.append(
                {
                    "cycle_type": _lam_str(lam),
                    "closed_form": fraction_str(closed),
                    "enumerated": fraction_str(enumerated),
                    "match": closed == enumerated,
                }
            )
        _emit_rows(args, kind, ["cycle_type", "closed_form", "enumerated", "match"], rows)
        return 0
    if kind == "shape":
        n = args.n or 4
        rows = []
        if args.model == "top":
            passes = range(1, (args.k or 6) + 1)
        else:
            passes = (None,)
        for k in passes:
            spec = (
                top_to_random(iterations=k, reverse=args.reversed)
                if k is not None
                else build_spec(args)
            )
            marginal = exact_distribution(spec, n).shape_marginal()
            for lam in partitions(n):
                closed = rsk_shape_probability(spec, lam, n)
                enumerated = marginal.get(lam, Fraction(0))
                row = {
                    "shape": _lam_str(lam),
                    "closed_form": fraction_str(closed),
                    "enumerated": fraction_str(enumerated),
                    "match": closed == enumerated,
                }
                if k is not None:
                    row["k"] = k
                rows.append(row)
        fields = ["shape", "closed_form", "enumerated", "match"]
        if args.model == "top":
            fields = ["k"] + fields
        _emit_rows(args, kind, fields, rows)
        return 0
    if kind == "separation":
        n = args.n or 4
        kmax = args.k or 8
        spec = build_spec(args)
        if spec.kind not in ("riffle", "abg"):
            raise ConfigurationError("separation tables cover riffle and abg models")
        base = exact_distribution(spec, n)
        rows = []
        current = base
        for k in range(1, kmax + 1):
            if k > 1:
                current = convolve(base, current)
            sep = separation_distance(current)
            bound = separation_bound(replace(spec, iterations=k), n)
            rows.append(
                {
                    "k": k,
                    "separation": fraction_str(sep),
                    "bound": fraction_str(bound),
                    "bound_holds": sep <= bound,
                }
            )
        _emit_rows(args, kind, ["k", "separation", "bound", "bound_holds"], rows)
        return 0
    if kind == "unimodal":
        nmax = args.n or 6
        if nmax > MAX_UNIMODAL_ORDER:
            raise ConfigurationError(f"unimodal table capped at n={MAX_UNIMODAL_ORDER}")
        gf = unimodal_gf(nmax)
        t = RationalPoly.var("t")
        rows = []
        for n in range(1, nmax + 1):
            perms = unimodal_permutations(n)
            per_max_ok = all(
                sum(1 for _, pos in perms if pos == i) == comb(n - 1, i - 1)
                for i in range(1, n + 1)
            )
            total = RationalPoly.const(0)
            for perm, pos in perms:
                mono = RationalPoly.const(1)
                for part, mult in multiplicities(cycle_type(perm)).items():
                    mono = mono * RationalPoly.var(f"x{part}", mult)
                total = total + t ** (pos - 1) * mono
            rows.append(
                {
                    "n": n,
                    "count": len(perms),
                    "count_formula": 2 ** (n - 1),
                    "count_match": len(perms) == 2 ** (n - 1),
                    "per_max_match": per_max_ok,
                    "gf_match": gf.coefficient(n) == (1 + t) * total,
                }
            )
        _emit_rows(
            args,
            kind,
            ["n", "count", "count_formula", "count_match", "per_max_match", "gf_match"],
            rows,
        )
        return 0
    raise ConfigurationError(f"unknown table kind {kind!r}")


# ---------------------------------------------------------------------------
# dist and series


def run_dist(args) -> int:
    spec = build_spec(args)
    n = args.n or 4
    dist = exact_distribution(spec, n)
    payload = distribution_to_payload(dist, spec)
    if args.samples:
        samples = sample_permutations(spec, n, args.samples, seed=args.seed)
        counts = {}
        for w in samples:
            counts[w] = counts.get(w, 0) + 1
        payload["empirical"] = {
            " ".join(str(v) for v in w): format(c / args.samples, ".12g")
            for w, c in sorted(counts.items())
        }
        payload["samples"] = args.samples
        payload["seed"] = args.seed
    _write_text(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return 0


def run_series(args) -> int:
    order = args.order or 6
    if args.model == "unimodal":
        if order > MAX_UNIMODAL_ORDER:
            raise ConfigurationError(
                f"unimodal series capped at order {MAX_UNIMODAL_ORDER}"
            )
        series = unimodal_gf(order)
        payload = series_to_payload(series)
        payload["model"] = "unimodal"
    else:
        if order > MAX_ORDER:
            raise ConfigurationError(f"series order capped at {MAX_ORDER}")
        spec = build_spec(args)
        series = cycle_index(spec, order)
        payload = series_to_payload(series)
        from .shuffles import spec_to_dict

        payload["spec"] = spec_to_dict(spec)
    _write_text(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_model_flags(parser) -> None:
    parser.add_argument(
        "--model",
        default="riffle",
        choices=("riffle", "typec", "abg", "mu", "top", "unimodal"),
    )
    parser.add_argument("--q", help="comma separated pile probabilities")
    parser.add_argument("--y", help="comma separated stack probabilities")
    parser.add_argument("--alpha", help="upright pile probabilities")
    parser.add_argument("--beta", help="flipped pile probabilities")
    parser.add_argument("--gamma", help="mixed pile probability")
    parser.add_argument("--mu", help="comma separated pile sizes")
    parser.add_argument("--reversed", action="store_true", help="deal from the bottom")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shufflelab",
        description="exact shuffle distributions, tableau correspondences, "
        "and cycle index series",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run an identity suite")
    p_verify.add_argument("--suite", default="all", choices=SUITES + ("all",))
    p_verify.add_argument("--n", type=int, help="max deck size for oracles")
    p_verify.add_argument("--order", type=int, help="series truncation order")
    p_verify.add_argument("--seed", type=int, default=0)

    p_table = sub.add_parser("table", help="closed form vs enumeration tables")
    p_table.add_argument(
        "--kind",
        required=True,
        choices=("fixed-points", "cycle-type", "shape", "separation", "unimodal"),
    )
    _add_model_flags(p_table)
    p_table.add_argument("--n", type=int)
    p_table.add_argument("--k", type=int, help="piles (riffle) or passes (top)")
    p_table.add_argument("--format", default="json", choices=("json", "csv"))
    p_table.add_argument("--out")

    p_dist = sub.add_parser("dist", help="serialize an exact distribution")
    _add_model_flags(p_dist)
    p_dist.add_argument("--n", type=int)
    p_dist.add_argument("--k", type=int)
    p_dist.add_argument("--samples", type=int, help="add empirical frequencies")
    p_dist.add_argument("--seed", type=int, default=0)
    p_dist.add_argument("--format", default="json", choices=("json",))
    p_dist.add_argument("--out")

    p_series = sub.add_parser("series", help="serialize a cycle index series")
    _add_model_flags(p_series)
    p_series.add_argument("--order", type=int)
    p_series.add_argument("--k", type=int)
    p_series.add_argument("--format", default="json", choices=("json",))
    p_series.add_argument("--out")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify(args)
        if args.command == "table":
            return run_table(args)
        if args.command == "dist":
            return run_dist(args)
        if args.command == "series":
            return run_series(args)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
