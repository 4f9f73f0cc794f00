"""Brute-force enumeration oracle and the cross-verification suite.

The oracle recomputes every distribution and total by direct enumeration
plus per-word genus computation, sharing no arithmetic with the closed
forms or recurrences.  ``verify_all`` then diffs the independent routes
against each other (and against the published class counts) and returns a
structured report; ``inject_fault`` deliberately corrupts one recursion
seed so the suite can prove it detects regressions.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from . import counts as ct
from . import stats as st
from .genus import genus_by_reduction, genus_by_seifert
from .report import CheckResult, VerificationReport, compare_all
from .words import (
    DEFAULT_ENUM_CAP,
    Word,
    canonical_class_reps,
    enumerate_T,
    shard_prefixes,
)

__all__ = [
    "TABLE2",
    "empirical_distribution",
    "empirical_totals",
    "verify_all",
    "FAULTS",
]

# Published knot-class counts tbar(c, g) for 3 <= c <= 20, g = 1.. (the
# golden data reproduced by the table command); cell (c, g) = TABLE2[c][g-1].
# Cell (17, 3) is sometimes printed as 904; the row must sum to the class
# total 5504 and exhaustive enumeration gives 902, so 902 it is.
TABLE2: dict[int, tuple[int, ...]] = {
    3: (1,),
    4: (1,),
    5: (1, 1),
    6: (1, 2),
    7: (2, 4, 1),
    8: (2, 7, 3),
    9: (2, 12, 9, 1),
    10: (2, 18, 21, 4),
    11: (3, 26, 45, 16, 1),
    12: (3, 36, 85, 47, 5),
    13: (3, 49, 151, 123, 25, 1),
    14: (3, 64, 251, 280, 89, 6),
    15: (4, 82, 400, 588, 276, 36, 1),
    16: (4, 103, 610, 1141, 736, 151, 7),
    17: (4, 128, 902, 2094, 1784, 542, 49, 1),
    18: (4, 156, 1294, 3648, 3960, 1658, 237, 8),
    19: (5, 188, 1814, 6104, 8230, 4558, 967, 64, 1),
    20: (5, 224, 2486, 9842, 16126, 11394, 3339, 351, 9),
}

# Deliberate faults for self-testing the suite: name -> t-recursion seed
# overrides.  "t5g1" plants the misprinted value t(5,1) = 1.
FAULTS: dict[str, dict[tuple[int, int], int]] = {"t5g1": {(5, 1): 1}}


def _shards_for(c: int, threads: int) -> list[tuple[int, ...]]:
    if threads <= 1 or c < 8:
        return [()]
    return shard_prefixes(c, 4 * threads)


def _map_shards(func, c: int, threads: int, cap: int):
    prefixes = _shards_for(c, threads)
    if len(prefixes) == 1:
        return [func(c, cap, prefixes[0])]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda p: func(c, cap, p), prefixes))


def _distribution_shard(ensemble: st.Ensemble):
    def work(c: int, cap: int, prefix: tuple[int, ...]) -> Counter:
        tally: Counter = Counter()
        if ensemble is st.Ensemble.KNOT_CLASSES:
            for w, _mult in canonical_class_reps(c, cap=cap, interior_prefix=prefix):
                tally[genus_by_reduction(w)] += 1
        else:
            palindromic_only = ensemble is st.Ensemble.PALINDROMIC_WORDS
            for w in enumerate_T(c, cap=cap, interior_prefix=prefix):
                if palindromic_only and w.eps != w.eps[::-1]:
                    continue
                tally[genus_by_reduction(w)] += 1
        return tally

    return work


def empirical_distribution(
    c: int,
    ensemble: st.Ensemble,
    *,
    cap: int = DEFAULT_ENUM_CAP,
    threads: int = 1,
) -> st.GenusDistribution:
    """Genus distribution by exhaustive enumeration (reduction engine)."""
    total: Counter = Counter()
    for part in _map_shards(_distribution_shard(ensemble), c, threads, cap):
        total.update(part)
    return st.GenusDistribution(c, ensemble, {g: total[g] for g in sorted(total)})


def _totals_shard(c: int, cap: int, prefix: tuple[int, ...]) -> tuple[int, int, int, int]:
    g_sum = gp_sum = g2_sum = gp2_sum = 0
    for w in enumerate_T(c, cap=cap, interior_prefix=prefix):
        g = genus_by_reduction(w)
        g_sum += g
        g2_sum += g * g
        if w.eps == w.eps[::-1]:
            gp_sum += g
            gp2_sum += g * g
    return g_sum, gp_sum, g2_sum, gp2_sum


def empirical_totals(
    c: int, *, cap: int = DEFAULT_ENUM_CAP, threads: int = 1
) -> st.TotalsBundle:
    """Genus and squared-genus sums by exhaustive enumeration."""
    parts = _map_shards(_totals_shard, c, threads, cap)
    sums = [sum(part[i] for part in parts) for i in range(4)]
    return st.TotalsBundle(*sums)


def _genus_range(c: int) -> range:
    return range(1, ct.genus_upper_bound(c) + 1)


def _tp_target(c: int) -> int:
    return (c + 3) // 4 if c % 4 in (1, 2) else (c + 1) // 4


def _formula_checks(c_formula_max: int, rec_t: dict) -> list[CheckResult]:
    lo, hi = 3, c_formula_max
    rec_tp = ct.tp_rec_table(hi)
    rec_tp_pascal = ct.tp_rec_table_pascal(hi)
    checks = [
        compare_all(
            "closed_vs_recursive_t",
            lo,
            hi,
            (
                (c, g, ct.t_of(c, g), rec_t.get((c, g), 0))
                for c in range(lo, hi + 1)
                for g in _genus_range(c)
            ),
        ),
        compare_all(
            "closed_vs_recursive_tp",
            lo,
            hi,
            (
                (c, g, ct.tp_of(c, g), rec_tp.get((c, g), 0))
                for c in range(lo, hi + 1)
                for g in _genus_range(c)
            ),
        ),
        compare_all(
            "closed_vs_recursive_tp_pascal",
            lo,
            hi,
            (
                (c, g, ct.tp_of(c, g), rec_tp_pascal.get((c, g), 0))
                for c in range(lo, hi + 1)
                for g in _genus_range(c)
            ),
        ),
        compare_all(
            "t_rec_row_sums",
            lo,
            hi,
            (
                (c, None, ct.t_total(c), sum(rec_t.get((c, g), 0) for g in _genus_range(c)))
                for c in range(lo, hi + 1)
            ),
        ),
        # Documents the misprint: the correct base value is t(5,1) = 2.
        compare_all(
            "t5g1_base_value",
            5,
            5,
            [(5, 1, 2, ct.t_of(5, 1)), (5, 1, 2, rec_t.get((5, 1), 0))],
        ),
        compare_all(
            "small_genus_columns",
            lo,
            hi,
            (
                inst
                for c in range(lo, hi + 1)
                for inst in (
                    (c, 1, ct.t_of(c, 1), ct.small_genus(c, "t_g1")),
                    (c, 1, ct.tp_of(c, 1), ct.small_genus(c, "tp_g1")),
                    (c, 2, ct.tp_of(c, 2), ct.small_genus(c, "tp_g2")),
                    (c, 3, ct.tp_of(c, 3), ct.small_genus(c, "tp_g3")),
                    (c, 1, ct.tbar_of(c, 1), ct.small_genus(c, "tbar_g1")),
                )
            ),
        ),
        compare_all(
            "knots_total_double_count",
            lo,
            hi,
            (
                (c, None, 2 * ct.knots_total(c), ct.t_total(c) + ct.tp_total(c))
                for c in range(lo, hi + 1)
            ),
        ),
        compare_all(
            "table2_cells",
            3,
            20,
            (
                (c, g, TABLE2[c][g - 1], ct.tbar_of(c, g))
                for c in range(3, 21)
                for g in _genus_range(c)
            ),
        ),
        compare_all(
            "trailing_diagonal_odd",
            5,
            19,
            ((c, (c - 1) // 2, 1, ct.tbar_of(c, (c - 1) // 2)) for c in range(5, 20, 2)),
        ),
        compare_all(
            "beyond_bound_zero",
            lo,
            hi,
            (
                inst
                for c in range(lo, hi + 1)
                for g in (ct.genus_upper_bound(c) + 1,)
                for inst in (
                    (c, g, 0, ct.t_of(c, g)),
                    (c, g, 0, ct.tp_of(c, g)),
                    (c, g, 0, ct.tbar_of(c, g)),
                )
            ),
        ),
    ]
    checks.extend(ct.identity_suite(min(c_formula_max, 40)).checks)
    return checks


def _totals_checks() -> list[CheckResult]:
    lo, hi = 4, 200
    closed = {c: st.totals_closed(c) for c in range(lo, hi + 1)}
    recursive = {c: st.totals_recursive(c) for c in range(lo, hi + 1)}
    fields = ("g_sum", "gp_sum", "g2_sum", "gp2_sum")
    return [
        compare_all(
            f"totals_recursive_vs_closed_{field}",
            lo,
            hi,
            (
                (c, None, getattr(recursive[c], field), getattr(closed[c], field))
                for c in range(lo, hi + 1)
            ),
        )
        for field in fields
    ]


def _stats_checks(c_formula_max: int) -> list[CheckResult]:
    checks = []
    knot_dists = {
        c: st.distribution(c, st.Ensemble.KNOT_CLASSES, "formula") for c in range(3, 65)
    }
    checks.append(
        compare_all(
            "knot_median_mode_floor",
            3,
            64,
            (
                (
                    c,
                    (c + 2) // 4,
                    True,
                    (c + 2) // 4 in st.median_set(knot_dists[c])
                    and (c + 2) // 4 in st.mode_set(knot_dists[c]),
                )
                for c in range(3, 65)
            ),
        )
    )
    checks.append(
        compare_all(
            "knot_qs_parity",
            3,
            50,
            (
                (
                    c,
                    None,
                    True,
                    st.qs_classify(knot_dists[c])
                    in (
                        (st.QsClass.LEFT_DOMINATED, st.QsClass.BOTH)
                        if c % 2
                        else (st.QsClass.RIGHT_DOMINATED, st.QsClass.BOTH)
                    ),
                )
                for c in range(3, 51)
            ),
        )
    )
    checks.append(
        compare_all(
            "word_median_mode_floor",
            5,
            50,
            (
                (
                    c,
                    (c + 2) // 4,
                    True,
                    (c + 2) // 4 in st.median_set(dist) and (c + 2) // 4 in st.mode_set(dist),
                )
                for c in range(5, 51)
                for dist in (st.distribution(c, st.Ensemble.ALL_WORDS, "formula"),)
            ),
        )
    )
    checks.append(
        compare_all(
            "palindromic_median_mode_floor",
            5,
            50,
            (
                (
                    c,
                    _tp_target(c),
                    True,
                    _tp_target(c) in st.median_set(dist) and _tp_target(c) in st.mode_set(dist),
                )
                for c in range(5, 51)
                for dist in (st.distribution(c, st.Ensemble.PALINDROMIC_WORDS, "formula"),)
            ),
        )
    )
    checks.append(
        compare_all(
            "knot_variance_totals_vs_distribution",
            3,
            min(c_formula_max, 60),
            (
                (
                    c,
                    None,
                    str(st.knot_variance(c)),
                    str(st.variance(knot_dists.get(c) or st.distribution(c, st.Ensemble.KNOT_CLASSES))),
                )
                for c in range(3, min(c_formula_max, 60) + 1)
            ),
        )
    )
    return checks


def _oracle_checks(
    c_enum_max: int, seifert_max: int, threads: int, cap: int
) -> list[CheckResult]:
    checks = []
    families = (
        ("oracle_t_distribution", st.Ensemble.ALL_WORDS, ct.t_of),
        ("oracle_tp_distribution", st.Ensemble.PALINDROMIC_WORDS, ct.tp_of),
        ("oracle_tbar_distribution", st.Ensemble.KNOT_CLASSES, ct.tbar_of),
    )

    def family_instances(ensemble, cell):
        for c in range(3, c_enum_max + 1):
            empirical = empirical_distribution(c, ensemble, cap=cap, threads=threads)
            for g in _genus_range(c):
                yield c, g, empirical.counts.get(g, 0), cell(c, g)

    for name, ensemble, cell in families:
        checks.append(compare_all(name, 3, c_enum_max, family_instances(ensemble, cell)))

    totals_hi = min(c_enum_max, 16)
    if totals_hi >= 3:
        checks.append(
            compare_all(
                "oracle_totals_vs_recursive",
                3,
                totals_hi,
                (
                    (
                        c,
                        None,
                        list(
                            empirical_totals(c, cap=cap, threads=threads).__dict__.values()
                        ),
                        list(st.totals_recursive(c).__dict__.values()),
                    )
                    for c in range(3, totals_hi + 1)
                ),
            )
        )

    def genus_range_instances():
        for c in range(3, c_enum_max + 1):
            bound = ct.genus_upper_bound(c)
            for w in enumerate_T(c, cap=cap):
                g = genus_by_reduction(w)
                yield c, g, True, 1 <= g <= bound

    checks.append(compare_all("genus_range", 3, c_enum_max, genus_range_instances()))

    reversal_hi = min(c_enum_max, 12)
    if reversal_hi >= 3:
        checks.append(
            compare_all(
                "reversal_genus_invariance",
                3,
                reversal_hi,
                (
                    (c, None, genus_by_reduction(w), genus_by_reduction(Word(w.eps[::-1])))
                    for c in range(3, reversal_hi + 1)
                    for w in enumerate_T(c, cap=cap)
                ),
            )
        )

    if seifert_max >= 3:
        checks.append(
            compare_all(
                "genus_engines_agree",
                3,
                seifert_max,
                (
                    (c, genus_by_reduction(w), genus_by_reduction(w), genus_by_seifert(w))
                    for c in range(3, seifert_max + 1)
                    for w in enumerate_T(c, cap=cap)
                ),
            )
        )
    return checks


def verify_all(
    c_enum_max: int = 16,
    c_formula_max: int = 60,
    *,
    seifert_max: int = 14,
    threads: int = 1,
    cap: int = DEFAULT_ENUM_CAP,
    inject_fault: str | None = None,
) -> VerificationReport:
    """Run the full cross-verification battery and return the report.

    ``c_enum_max`` bounds the enumeration-backed checks (values below 3
    disable them), ``c_formula_max`` the formula-vs-formula diffs.
    ``inject_fault`` names a deliberate seed corruption from ``FAULTS``.
    """
    if c_formula_max < 20:
        raise ValueError("c_formula_max below the published-table range (need >= 20)")
    overrides = None
    if inject_fault is not None:
        if inject_fault not in FAULTS:
            raise ValueError(f"unknown fault {inject_fault!r}; known: {sorted(FAULTS)}")
        overrides = FAULTS[inject_fault]
    rec_t = ct.t_rec_table(c_formula_max, overrides)

    checks = _formula_checks(c_formula_max, rec_t)
    checks.extend(_totals_checks())
    checks.extend(_stats_checks(c_formula_max))
    if c_enum_max >= 3:
        checks.extend(
            _oracle_checks(c_enum_max, min(seifert_max, c_enum_max), threads, cap)
        )
    return VerificationReport(checks)
