"""Evaluations of symmetric functions and their signed/extended relatives.

Every evaluator takes a list of "values" that may be Fractions or
RationalPoly variables, so the same code produces numbers at rational
points and polynomials at formal points.

The families:

* power sums p_r, Schur s_lam (tableau sum, cross-checkable via the
  h-determinant), complete homogeneous h_r, elementary e_r;
* the signed family S_lam = det(q_{lam_i - i + j}) where
  sum q_n t^n = prod_i (1 + y_i t)/(1 - y_i t);
* the extended family built from parameters (alpha, beta, gamma):
  sum ht_n z^n = e^{gamma z} prod_j (1 + beta_j z) / prod_i (1 - alpha_i z),
  st_lam = det(ht_{lam_i - i + j}), and extended power sums
  pt_1 = gamma + sum alpha_i + sum beta_j,
  pt_n = sum alpha_i^n + (-1)^{n+1} sum beta_j^n for n >= 2.

cauchy_check expands both sides of the product identities

  classic          sum_lam s_lam(x) s_lam(y)      = sum_lam p_lam(x)p_lam(y)/z_lam
  dual             sum_lam s_lam'(x) s_lam(y)     = sum_lam eps_lam p_lam(x)p_lam(y)/z_lam
  stembridge       sum_lam s_lam(x) S_lam(y)      = sum over odd-part lam of 2^len p p / z
  dual-stembridge  sum_lam s_lam'(x) S_lam(y)     = same with eps_lam
  extended         sum_lam s_lam(x) st_lam        = sum_lam p_lam(x) pt_lam / z_lam

degree by degree as exact polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import (
    centralizer_size,
    check_partition,
    class_sign,
    conjugate,
    partitions,
    semistandard_tableaux,
)
from .poly import RationalPoly, as_fraction
from .series import TruncatedSeries, geometric_series


# ---------------------------------------------------------------------------
# classical bases


def power_sum(r: int, xs):
    """p_r = sum_i x_i^r for r >= 1."""
    if r < 1:
        raise ValueError("power sums need r >= 1")
    total = Fraction(0)
    for x in xs:
        total = total + x**r
    return total


def power_sum_partition(lam, xs):
    value = Fraction(1)
    for part in check_partition(lam):
        value = value * power_sum(part, xs)
    return value


def complete_homogeneous_list(xs, k_max: int) -> list:
    """[h_0, ..., h_k] via prod_i 1/(1 - x_i t)."""
    series = TruncatedSeries.one(k_max)
    for x in xs:
        series = series * geometric_series(k_max, 1, x)
    return list(series.coeffs)


def elementary_list(xs, k_max: int) -> list:
    """[e_0, ..., e_k] via prod_i (1 + x_i t)."""
    series = TruncatedSeries.one(k_max)
    for x in xs:
        series = series * TruncatedSeries(k_max, [Fraction(1), x])
    return list(series.coeffs)


def schur(lam, xs):
    """Schur evaluation as a sum over semistandard tableaux."""
    lam = check_partition(lam)
    xs = list(xs)
    total = Fraction(0)
    for t in semistandard_tableaux(lam, len(xs)):
        term = Fraction(1)
        for row in t:
            for v in row:
                term = term * xs[v - 1]
        total = total + term
    return total


def det(rows):
    """Determinant by cofactor expansion; works over any commutative ring."""
    size = len(rows)
    if size == 0:
        return Fraction(1)
    memo: dict = {}

    def minor(depth, cols):
        if not cols:
            return Fraction(1)
        cached = memo.get(cols)
        if cached is not None:
            return cached
        total = Fraction(0)
        sign = 1
        for idx, c in enumerate(cols):
            entry = rows[depth][c]
            if not (entry == 0):
                sub = minor(depth + 1, cols[:idx] + cols[idx + 1 :])
                total = total + sign * entry * sub
            sign = -sign
        memo[cols] = total
        return total

    return minor(0, tuple(range(size)))


def schur_jacobi_trudi(lam, xs):
    """Schur evaluation as det(h_{lam_i - i + j}); used as a cross-check."""
    lam = check_partition(lam)
    if not lam:
        return Fraction(1)
    length = len(lam)
    hs = complete_homogeneous_list(xs, lam[0] + length)
    rows = []
    for i in range(length):
        row = []
        for j in range(length):
            idx = lam[i] - (i + 1) + (j + 1)
            row.append(hs[idx] if 0 <= idx < len(hs) else Fraction(0))
        rows.append(row)
    return det(rows)


# ---------------------------------------------------------------------------
# signed family


def signed_q_list(ys, k_max: int) -> list:
    """[q_0, ..., q_k] from prod_i (1 + y_i t)/(1 - y_i t)."""
    series = TruncatedSeries.one(k_max)
    for y in ys:
        series = series * TruncatedSeries(k_max, [Fraction(1), y])
        series = series * geometric_series(k_max, 1, y)
    return list(series.coeffs)


def stembridge_s(lam, ys):
    """S_lam = det(q_{lam_i - i + j}) for the signed generating function."""
    lam = check_partition(lam)
    if not lam:
        return Fraction(1)
    length = len(lam)
    qs = signed_q_list(ys, lam[0] + length)
    rows = []
    for i in range(length):
        row = []
        for j in range(length):
            idx = lam[i] - (i + 1) + (j + 1)
            row.append(qs[idx] if 0 <= idx < len(qs) else Fraction(0))
        rows.append(row)
    return det(rows)


# ---------------------------------------------------------------------------
# extended family


@dataclass(frozen=True)
class ParamVector:
    """Parameters (alpha, beta, gamma) of the extended family.

    For shuffle use the entries are nonnegative rationals with
    gamma + sum(alpha) + sum(beta) == 1; the evaluators themselves accept
    arbitrary rationals.
    """

    alpha: tuple
    beta: tuple
    gamma: Fraction

    @classmethod
    def of(cls, alpha=(), beta=(), gamma=0) -> "ParamVector":
        return cls(
            alpha=tuple(as_fraction(a) for a in alpha),
            beta=tuple(as_fraction(b) for b in beta),
            gamma=as_fraction(gamma),
        )

    @property
    def total(self) -> Fraction:
        return self.gamma + sum(self.alpha, Fraction(0)) + sum(self.beta, Fraction(0))

    def is_normalized(self) -> bool:
        return (
            self.total == 1
            and self.gamma >= 0
            and all(a >= 0 for a in self.alpha)
            and all(b >= 0 for b in self.beta)
        )

    def swapped(self) -> "ParamVector":
        """Exchange the alpha and beta roles (the reversed-deal parameters)."""
        return ParamVector(alpha=self.beta, beta=self.alpha, gamma=self.gamma)


def extended_h_list(params: ParamVector, k_max: int) -> list:
    """[ht_0, ..., ht_k] from e^{gamma z} prod(1 + b z) / prod(1 - a z)."""
    series = TruncatedSeries.term(k_max, 1, params.gamma).exp()
    for b in params.beta:
        series = series * TruncatedSeries(k_max, [Fraction(1), b])
    for a in params.alpha:
        series = series * geometric_series(k_max, 1, a)
    return list(series.coeffs)


def extended_schur(lam, params: ParamVector):
    """st_lam = det(ht_{lam_i - i + j})."""
    lam = check_partition(lam)
    if not lam:
        return Fraction(1)
    length = len(lam)
    hts = extended_h_list(params, lam[0] + length)
    rows = []
    for i in range(length):
        row = []
        for j in range(length):
            idx = lam[i] - (i + 1) + (j + 1)
            row.append(hts[idx] if 0 <= idx < len(hts) else Fraction(0))
        rows.append(row)
    return det(rows)


def extended_power_sum(r: int, params: ParamVector):
    """pt_r, the coefficients of z^r/r in log of the ht generating function."""
    if r < 1:
        raise ValueError("extended power sums need r >= 1")
    alpha_part = sum((a**r for a in params.alpha), Fraction(0))
    beta_part = sum((b**r for b in params.beta), Fraction(0))
    if r == 1:
        return params.gamma + alpha_part + beta_part
    return alpha_part + (-1) ** (r + 1) * beta_part


def extended_power_sum_partition(lam, params: ParamVector):
    value = Fraction(1)
    for part in check_partition(lam):
        value = value * extended_power_sum(part, params)
    return value


# ---------------------------------------------------------------------------
# product identities

CAUCHY_KINDS = ("classic", "dual", "stembridge", "dual-stembridge", "extended")


def _formal_vars(prefix: str, count: int) -> list:
    return [RationalPoly.var(f"{prefix}{i + 1}") for i in range(count)]


def cauchy_check(kind: str, degree: int, nx: int = 2, ny: int = 2, params=None) -> bool:
    """Expand both sides of a product identity to total degree <= degree.

    The four two-alphabet identities pair degree-n terms of total degree 2n,
    so the check runs over partition sizes n <= degree // 2.  The extended
    identity carries formal degree only in x and runs over n <= degree.
    """
    if kind not in CAUCHY_KINDS:
        raise ValueError(f"unknown identity kind {kind!r}; pick from {CAUCHY_KINDS}")
    xs = _formal_vars("a", nx)
    if kind == "extended":
        if params is None:
            raise ValueError("the extended identity needs a ParamVector")
        for n in range(0, degree + 1):
            left = Fraction(0)
            right = Fraction(0)
            for lam in partitions(n):
                left = left + schur(lam, xs) * extended_schur(lam, params)
                right = right + power_sum_partition(lam, xs) * Fraction(
                    1, centralizer_size(lam)
                ) * extended_power_sum_partition(lam, params)
            if not (left - right == 0):
                return False
        return True

    ys = _formal_vars("b", ny)
    for n in range(0, degree // 2 + 1):
        left = Fraction(0)
        right = Fraction(0)
        for lam in partitions(n):
            if kind == "classic":
                left = left + schur(lam, xs) * schur(lam, ys)
            elif kind == "dual":
                left = left + schur(conjugate(lam), xs) * schur(lam, ys)
            elif kind == "stembridge":
                left = left + schur(lam, xs) * stembridge_s(lam, ys)
            else:
                left = left + schur(conjugate(lam), xs) * stembridge_s(lam, ys)

            p_term = power_sum_partition(lam, xs) * power_sum_partition(lam, ys)
            if kind == "classic":
                right = right + p_term * Fraction(1, centralizer_size(lam))
            elif kind == "dual":
                right = right + p_term * Fraction(class_sign(lam), centralizer_size(lam))
            else:
                if any(part % 2 == 0 for part in lam):
                    continue
                weight = Fraction(2 ** len(lam), centralizer_size(lam))
                if kind == "dual-stembridge":
                    weight = weight * class_sign(lam)
                right = right + p_term * weight
        if not (left - right == 0):
            return False
    return True
