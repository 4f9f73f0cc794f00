"""Distribution statistics of genus over word and knot-class ensembles.

All central quantities (mean, variance, median/mode sets, the gaps against
the linear asymptotes) are computed in exact rational arithmetic with
``fractions.Fraction``; floats appear only at the outermost reporting layer
and in the normal-CDF comparisons, which are float-valued by nature.

Medians and modes are reported as sets: every value satisfying the
defining inequalities (for the median, both tail probabilities >= 1/2; for
the mode, maximal count) is included, so statements about "the" median
become membership assertions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, erfc, sqrt
from typing import Literal

from . import counts as ct
from .words import DEFAULT_ENUM_CAP

__all__ = [
    "Ensemble",
    "QsClass",
    "GenusDistribution",
    "distribution",
    "mean",
    "variance",
    "median_set",
    "mode_set",
    "qs_classify",
    "TotalsBundle",
    "totals_closed",
    "totals_recursive",
    "knot_mean",
    "knot_variance",
    "mean_gap",
    "var_gap",
    "binom_tv_distance",
    "tp_binomial_ratios_monotone",
    "half_scale_gap",
    "normal_cdf",
    "ks_to_normal",
    "stats_document",
]


class Ensemble(Enum):
    ALL_WORDS = "all_words"
    PALINDROMIC_WORDS = "palindromic_words"
    KNOT_CLASSES = "knot_classes"


class QsClass(Enum):
    LEFT_DOMINATED = "LeftDominated"
    RIGHT_DOMINATED = "RightDominated"
    BOTH = "Both"
    NEITHER = "Neither"


@dataclass(frozen=True)
class GenusDistribution:
    """Counts by genus for one ensemble at one crossing number.

    ``counts`` holds the nonzero cells only; the full support range is
    ``1..floor((c - 1) / 2)`` and is reconstructed (zero-padded) where a
    positional view is needed.
    """

    c: int
    ensemble: Ensemble
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _ensemble_total(c: int, ensemble: Ensemble) -> int:
    if ensemble is Ensemble.ALL_WORDS:
        return ct.t_total(c)
    if ensemble is Ensemble.PALINDROMIC_WORDS:
        return ct.tp_total(c)
    return ct.knots_total(c)


def distribution(
    c: int,
    ensemble: Ensemble,
    source: Literal["formula", "oracle"] = "formula",
    *,
    cap: int = DEFAULT_ENUM_CAP,
    threads: int = 1,
) -> GenusDistribution:
    """Genus distribution from the closed-form counts or, for ``oracle``,
    from exhaustive enumeration with the reduction engine."""
    if source == "oracle":
        from . import oracle

        dist = oracle.empirical_distribution(c, ensemble, cap=cap, threads=threads)
    elif source == "formula":
        if ensemble is Ensemble.ALL_WORDS:
            cell = ct.t_of
        elif ensemble is Ensemble.PALINDROMIC_WORDS:
            cell = ct.tp_of
        else:
            cell = ct.tbar_of
        cells = {
            g: cell(c, g)
            for g in range(1, ct.genus_upper_bound(c) + 1)
            if cell(c, g) != 0
        }
        dist = GenusDistribution(c, ensemble, cells)
    else:
        raise ValueError(f"unknown source {source!r}")
    if dist.total != _ensemble_total(c, ensemble):
        raise ArithmeticError(
            f"{ensemble.value} counts at c={c} sum to {dist.total}, "
            f"expected {_ensemble_total(c, ensemble)}"
        )
    return dist


def mean(dist: GenusDistribution) -> Fraction:
    return Fraction(sum(g * n for g, n in dist.counts.items()), dist.total)


def variance(dist: GenusDistribution) -> Fraction:
    second = Fraction(sum(g * g * n for g, n in dist.counts.items()), dist.total)
    return second - mean(dist) ** 2


def median_set(dist: GenusDistribution) -> set[int]:
    """All m with P(X <= m) >= 1/2 and P(X >= m) >= 1/2."""
    total = dist.total
    medians = set()
    below = 0
    for g in range(1, ct.genus_upper_bound(dist.c) + 1):
        here = dist.counts.get(g, 0)
        # 2 * P(X <= g) >= 1  and  2 * P(X >= g) >= 1, kept in integers
        if 2 * (below + here) >= total and 2 * (total - below) >= total:
            medians.add(g)
        below += here
    return medians


def mode_set(dist: GenusDistribution) -> set[int]:
    top = max(dist.counts.values())
    return {g for g, n in dist.counts.items() if n == top}


def qs_classify(dist: GenusDistribution) -> QsClass:
    """Quasi-symmetry class of the zero-padded count sequence.

    With ``a_1..a_n`` over the full genus range, the sequence is
    left-dominated when ``a_{n-j+1} <= a_j <= a_{n-j}`` and right-dominated
    when ``a_j <= a_{n-j+1} <= a_{j+1}``, in both cases for
    ``1 <= j <= floor(n / 2)``.
    """
    n = ct.genus_upper_bound(dist.c)
    a = [0] + [dist.counts.get(g, 0) for g in range(1, n + 1)]  # 1-based
    half = range(1, n // 2 + 1)
    left = all(a[n - j + 1] <= a[j] <= a[n - j] for j in half)
    right = all(a[j] <= a[n - j + 1] <= a[j + 1] for j in half)
    if left and right:
        return QsClass.BOTH
    if left:
        return QsClass.LEFT_DOMINATED
    if right:
        return QsClass.RIGHT_DOMINATED
    return QsClass.NEITHER


@dataclass(frozen=True)
class TotalsBundle:
    """Ensemble sums of genus and squared genus.

    ``g_sum``/``g2_sum`` run over all words, ``gp_sum``/``gp2_sum`` over the
    palindromic-type subset.
    """

    g_sum: int
    gp_sum: int
    g2_sum: int
    gp2_sum: int


def _exact_shift(a: int, k: int) -> int:
    # a * 2**k for possibly negative k, insisting on exactness.
    if k >= 0:
        return a << k
    q, r = divmod(a, 1 << -k)
    assert r == 0
    return q


def _div_exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"{num} not divisible by {den}"
    return q


def totals_closed(c: int) -> TotalsBundle:
    """Closed forms for the four genus totals.

    Two cells need care: the odd-c palindromic sum takes the sign
    (-1)^((c+1)/2) (the variant with (c-1)/2 fails the recurrence already at
    c = 3), and the squared-genus closed form only holds for c >= 4, so
    c = 3 is served with the recurrence value 1.
    """
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    sign_c = (-1) ** c
    g_sum = _div_exact((9 * c + 3) * 2 ** (c - 3) - 24 * sign_c, 54)
    if c % 2 == 0:
        gp_sum = _div_exact((3 * c + 2) * 2 ** ((c - 4) // 2) + 4 * (-1) ** (c // 2), 18)
        gp2_sum = _div_exact(
            (9 * c * c + 30 * c - 64) * 2 ** ((c - 4) // 2) - 16 * (-1) ** ((c - 2) // 2), 216
        )
    else:
        gp_sum = _div_exact((3 * c + 5) * 2 ** ((c - 3) // 2) + 4 * (-1) ** ((c + 1) // 2), 18)
        gp2_sum = _div_exact(
            (9 * c * c + 48 * c - 25) * 2 ** ((c - 3) // 2) - 16 * (-1) ** ((c - 1) // 2), 216
        )
    if c == 3:
        g2_sum = 1
    else:
        g2_sum = _div_exact(_exact_shift(9 * c * c + 15 * c - 16, c - 6) - 20 * sign_c, 27)
    return TotalsBundle(g_sum, gp_sum, g2_sum, gp2_sum)


_TOTALS_SEEDS = {
    # c: (g_sum, gp_sum, g2_sum, gp2_sum), verified by brute force in tests
    3: (1, 1, 1, 1),
    4: (1, 1, 1, 1),
    5: (4, 2, 6, 4),
    6: (8, 2, 14, 4),
}


def totals_recursive(c: int) -> TotalsBundle:
    """The same four totals via their recurrences, seeded at c = 3..6."""
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    g: dict[int, int] = {}
    gp: dict[int, int] = {}
    g2: dict[int, int] = {}
    gp2: dict[int, int] = {}
    for k in range(3, c + 1):
        if k <= 6:
            g[k], gp[k], g2[k], gp2[k] = _TOTALS_SEEDS[k]
            continue
        sign = (-1) ** ((k + 1) // 2)
        g[k] = g[k - 1] + 2 * g[k - 2] + ct.t_total(k - 2) + ct.t_total(k - 3)
        gp[k] = 2 * gp[k - 2] + ct.tp_total(k - 2) + sign
        g2[k] = g2[k - 1] + 2 * g2[k - 2] + g[k] + 2 * g[k - 3] - g[k - 1]
        gp2[k] = 2 * gp2[k - 2] + 2 * gp[k - 2] + ct.tp_total(k - 2) + sign
    return TotalsBundle(g[c], gp[c], g2[c], gp2[c])


def knot_mean(c: int) -> Fraction:
    """Exact mean genus over knot classes; usable far beyond enumeration."""
    totals = totals_closed(c)
    return Fraction(totals.g_sum + totals.gp_sum, 2 * ct.knots_total(c))


def knot_variance(c: int) -> Fraction:
    """Exact genus variance over knot classes."""
    totals = totals_closed(c)
    second = Fraction(totals.g2_sum + totals.gp2_sum, 2 * ct.knots_total(c))
    return second - knot_mean(c) ** 2


def mean_gap(c: int) -> float:
    """Signed gap between the knot mean and its asymptote c/4 + 1/12."""
    return float(knot_mean(c) - Fraction(c, 4) - Fraction(1, 12))


def var_gap(c: int) -> float:
    """Signed gap between the knot variance and its asymptote c/16 - 17/144."""
    return float(knot_variance(c) - Fraction(c, 16) + Fraction(17, 144))


def binom_tv_distance(n: int) -> float:
    """Total-variation distance between Binomial(n, 1/2) and the genus law
    of palindromic-type words at crossing number 2n + 3 (shifted by one)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    c = 2 * n + 3
    total = ct.tp_total(c)
    tv = Fraction(0)
    for k in range(n + 1):
        tv += abs(Fraction(comb(n, k), 2**n) - Fraction(ct.tp_of(c, k + 1), total))
    return float(tv)


def tp_binomial_ratios_monotone(n: int) -> bool:
    """Exact check that tp(2n+3, k+1) / C(n, k) is nondecreasing in k."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    c = 2 * n + 3
    for k in range(2, n + 1):
        lhs = ct.tp_of(c, k) * comb(n, k)
        rhs = ct.tp_of(c, k + 1) * comb(n, k - 1)
        if lhs > rhs:
            return False
    return True


def half_scale_gap(c: int, level: int) -> float:
    """CDF gap P(G_T(c) <= level/2) - P(G_Tp(2c) <= level), exact then float."""
    left = Fraction(
        sum(ct.t_of(c, g) for g in range(1, level // 2 + 1)), ct.t_total(c)
    )
    right = Fraction(
        sum(ct.tp_of(2 * c, g) for g in range(1, level + 1)), ct.tp_total(2 * c)
    )
    return float(left - right)


def normal_cdf(x: float, mu: float, sigma: float) -> float:
    """Gaussian CDF via the complementary error function."""
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    return 0.5 * erfc((mu - x) / (sigma * sqrt(2.0)))


def ks_to_normal(c: int) -> float:
    """Kolmogorov distance between the knot-class genus CDF and the normal
    law with mu = n/2, sigma = sqrt(n)/2, n = floor((c - 3) / 2)."""
    if c < 5:
        raise ValueError(f"need c >= 5, got {c}")
    n = (c - 3) // 2
    mu = n / 2.0
    sigma = sqrt(n) / 2.0
    total = ct.knots_total(c)
    worst = 0.0
    cumulative = 0
    for g in range(0, ct.genus_upper_bound(c) + 1):
        if g >= 1:
            cumulative += ct.tbar_of(c, g)
        gap = abs(float(Fraction(cumulative, total)) - normal_cdf(float(g), mu, sigma))
        worst = max(worst, gap)
    return worst


def _fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def stats_document(c: int) -> dict:
    """JSON-ready statistics document for the knot-class ensemble at ``c``."""
    dist = distribution(c, Ensemble.KNOT_CLASSES, "formula")
    return {
        "c": c,
        "counts": {str(g): dist.counts[g] for g in sorted(dist.counts)},
        "mean": _fraction_str(knot_mean(c)),
        "variance": _fraction_str(knot_variance(c)),
        "median_set": sorted(median_set(dist)),
        "mode_set": sorted(mode_set(dist)),
        "qs_class": qs_classify(dist).value,
        "mean_gap": mean_gap(c),
        "var_gap": var_gap(c),
        "ks_to_normal": ks_to_normal(c) if c >= 5 else None,
    }
