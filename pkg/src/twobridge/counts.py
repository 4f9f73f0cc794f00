"""Exact counts of words, palindromic-type words, and knot classes by genus.

Everything here is integer arithmetic on Python ints (arbitrary precision,
so the counts can never wrap); binomial coefficients come from
``math.comb``.  Each family of counts has two independent implementations,
a closed form and a bottom-up recurrence, so the verification suite can
diff them across large ranges.

Notation used throughout: ``t(c, g)`` counts words with ``c`` runs and
genus ``g``, ``tp`` the palindromic-type subset, ``tbar = (t + tp) / 2``
the knot classes.  All three vanish for ``g > floor((c - 1) / 2)``.
"""

from __future__ import annotations

import threading
from math import comb
from typing import Iterator, Mapping

from .report import CheckResult, VerificationReport, compare_all

__all__ = [
    "OddSumError",
    "t_total",
    "tp_total",
    "knots_total",
    "t_of",
    "tp_of",
    "tbar_of",
    "t_of_rec",
    "tp_of_rec",
    "tp_of_rec_pascal",
    "t_rec_table",
    "tp_rec_table",
    "small_genus",
    "genus_upper_bound",
    "identity_suite",
]


class OddSumError(ArithmeticError):
    """t + tp came out odd; the class count would not be an integer."""


def _check_cg(c: int, g: int) -> None:
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")


def genus_upper_bound(c: int) -> int:
    """Largest genus attained at crossing number ``c``."""
    return (c - 1) // 2


def t_total(c: int) -> int:
    """Number of words with ``c`` runs: (2^(c-2) - (-1)^c) / 3."""
    if c < 2:
        raise ValueError(f"crossing number must be >= 2, got {c}")
    value, rem = divmod(2 ** (c - 2) - (-1) ** c, 3)
    assert rem == 0
    return value


def tp_total(c: int) -> int:
    """Number of palindromic-type words: (2^k - (-1)^k) / 3, k = floor((c-1)/2)."""
    if c < 2:
        raise ValueError(f"crossing number must be >= 2, got {c}")
    k = (c - 1) // 2
    value, rem = divmod(2**k - (-1) ** k, 3)
    assert rem == 0
    return value


def knots_total(c: int) -> int:
    """Number of knot classes, by the four-case power formula in c mod 4."""
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    r = c % 4
    if r == 0:
        num = 2 ** (c - 3) + 2 ** ((c - 4) // 2)
    elif r == 1:
        num = 2 ** (c - 3) + 2 ** ((c - 3) // 2)
    elif r == 2:
        num = 2 ** (c - 3) + 2 ** ((c - 4) // 2) - 1
    else:
        num = 2 ** (c - 3) + 2 ** ((c - 3) // 2) + 1
    value, rem = divmod(num, 3)
    assert rem == 0
    return value


def _alternating_binomial_sum(upper: int, m: int) -> int:
    """sum_{n=0}^{upper} (-1)^n C(n + m, n); zero when the range is empty."""
    return sum((-1) ** n * comb(n + m, n) for n in range(upper + 1))


def t_of(c: int, g: int) -> int:
    """Closed form for t(c, g)."""
    _check_cg(c, g)
    return (-1) ** (c - 1) * _alternating_binomial_sum(c - 2 * g - 1, 2 * g - 1)


def _c_prime(c: int) -> int:
    # Half-length index used by the palindromic closed form.
    return (c + 1) // 2


def tp_of(c: int, g: int) -> int:
    """Closed form for tp(c, g)."""
    _check_cg(c, g)
    cp = _c_prime(c)
    return (-1) ** (cp - g - 1) * _alternating_binomial_sum(cp - g - 1, g - 1)


def tbar_of(c: int, g: int) -> int:
    """Knot-class count tbar(c, g) = (t + tp) / 2."""
    _check_cg(c, g)
    if g > genus_upper_bound(c):
        return 0
    total = t_of(c, g) + tp_of(c, g)
    if total % 2 != 0:
        raise OddSumError(f"t({c},{g}) + tp({c},{g}) = {total} is odd")
    return total // 2


# Base rows of the t recurrence.  The c=5 row is seeded with t(5,1) = 2:
# the closed form gives 1 - 2 + 3 = 2 and brute force agrees, so the value
# 1 sometimes quoted for this cell is a misprint.  See the named check
# "t5g1_base_value" in the verification suite.
_T_REC_BASE: Mapping[tuple[int, int], int] = {(3, 1): 1, (4, 1): 1, (5, 1): 2, (5, 2): 1}

# Base rows of the palindromic recurrence (c = 3..6).
_TP_REC_BASE: Mapping[tuple[int, int], int] = {(3, 1): 1, (4, 1): 1, (5, 2): 1, (6, 2): 1}


def t_rec_table(
    c_max: int, base_overrides: Mapping[tuple[int, int], int] | None = None
) -> dict[tuple[int, int], int]:
    """Bottom-up table of t(c, g) for 3 <= c <= c_max via the five-term
    recurrence t(c,g) = t(c-1,g) + t(c-2,g-1) + t(c-2,g) + t(c-3,g-1) - t(c-3,g).

    ``base_overrides`` perturbs the seed rows; the verification suite uses
    it to inject deliberate faults.
    """
    base = dict(_T_REC_BASE)
    if base_overrides:
        base.update(base_overrides)
    table: dict[tuple[int, int], int] = {}
    for c in range(3, c_max + 1):
        for g in range(1, genus_upper_bound(c) + 1):
            if c <= 5:
                value = base.get((c, g), 0)
            else:
                value = (
                    table.get((c - 1, g), 0)
                    + table.get((c - 2, g - 1), 0)
                    + table.get((c - 2, g), 0)
                    + table.get((c - 3, g - 1), 0)
                    - table.get((c - 3, g), 0)
                )
            table[c, g] = value
    return table


def tp_rec_table(
    c_max: int, base_overrides: Mapping[tuple[int, int], int] | None = None
) -> dict[tuple[int, int], int]:
    """Bottom-up table of tp(c, g) via tp(c,g) = tp(c-2,g-1) + tp(c-4,g) + tp(c-4,g-1)."""
    base = dict(_TP_REC_BASE)
    if base_overrides:
        base.update(base_overrides)
    table: dict[tuple[int, int], int] = {}
    for c in range(3, c_max + 1):
        for g in range(1, genus_upper_bound(c) + 1):
            if c <= 6:
                value = base.get((c, g), 0)
            else:
                value = (
                    table.get((c - 2, g - 1), 0)
                    + table.get((c - 4, g), 0)
                    + table.get((c - 4, g - 1), 0)
                )
            table[c, g] = value
    return table


def tp_rec_table_pascal(c_max: int) -> dict[tuple[int, int], int]:
    """Independent tp table: genus-one cells from the period-4 pattern,
    higher genus from the Pascal-shaped rule tp(c,g) = tp(c-2,g) + tp(c-2,g-1)."""
    table: dict[tuple[int, int], int] = {}
    for c in range(3, c_max + 1):
        for g in range(1, genus_upper_bound(c) + 1):
            if g == 1:
                value = 0 if c % 4 in (1, 2) else 1
            elif c <= 6:
                value = _TP_REC_BASE.get((c, g), 0)
            else:
                value = table.get((c - 2, g), 0) + table.get((c - 2, g - 1), 0)
            table[c, g] = value
    return table


class _TableCache:
    """Single-writer, grow-only cache around a bottom-up table builder."""

    def __init__(self, builder) -> None:
        self._builder = builder
        self._lock = threading.Lock()
        self._table: dict[tuple[int, int], int] = {}
        self._filled_to = 2

    def value(self, c: int, g: int) -> int:
        if c > self._filled_to:
            with self._lock:
                if c > self._filled_to:
                    self._table = self._builder(c)
                    self._filled_to = c
        return self._table.get((c, g), 0)


_T_REC_CACHE = _TableCache(t_rec_table)
_TP_REC_CACHE = _TableCache(tp_rec_table)
_TP_PASCAL_CACHE = _TableCache(tp_rec_table_pascal)


def t_of_rec(c: int, g: int) -> int:
    """Recurrence route for t(c, g)."""
    _check_cg(c, g)
    return _T_REC_CACHE.value(c, g)


def tp_of_rec(c: int, g: int) -> int:
    """Recurrence route for tp(c, g)."""
    _check_cg(c, g)
    return _TP_REC_CACHE.value(c, g)


def tp_of_rec_pascal(c: int, g: int) -> int:
    """Second recurrence route for tp(c, g), via the Pascal-shaped rule."""
    _check_cg(c, g)
    return _TP_PASCAL_CACHE.value(c, g)


_SMALL_GENUS_KINDS = ("t_g1", "tp_g1", "tp_g2", "tp_g3", "tbar_g1")


def small_genus(c: int, which: str) -> int:
    """Closed forms for the low-genus columns.

    ``which`` selects the column: ``t_g1``, ``tp_g1``, ``tp_g2``, ``tp_g3``
    or ``tbar_g1``.
    """
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    if which == "t_g1":
        return (c - 1) // 2
    if which == "tp_g1":
        return 0 if c % 4 in (1, 2) else 1
    if which == "tp_g2":
        return (c - 1) // 4
    if which == "tp_g3":
        k = (c - 1) // 2
        num = 2 * ((c - 5) // 2) * k - (-1) ** k + 1
        value, rem = divmod(num, 8)
        assert rem == 0
        return value
    if which == "tbar_g1":
        return (c + 1) // 4
    raise ValueError(f"unknown column {which!r}; expected one of {_SMALL_GENUS_KINDS}")


def _genus_range(c: int) -> Iterator[int]:
    return iter(range(1, genus_upper_bound(c) + 1))


def identity_suite(c_max: int) -> VerificationReport:
    """Cross-identity checks tying the three count families together."""
    checks: list[CheckResult] = []

    checks.append(
        compare_all(
            "tp_double_index_identity",  # tp(2c, 2g) = t(c, g)
            3,
            c_max,
            (
                (c, g, t_of(c, g), tp_of(2 * c, 2 * g))
                for c in range(3, c_max + 1)
                for g in _genus_range(c)
            ),
        )
    )
    checks.append(
        compare_all(
            "tbar_pascal_with_palindromic_correction",
            5,
            c_max,
            (
                (
                    c,
                    g,
                    tbar_of(c, g),
                    tbar_of(c - 2, g) + tbar_of(c - 2, g - 1) + tp_of(2 * c - 4, 2 * g - 1),
                )
                for c in range(5, c_max + 1)
                for g in _genus_range(c)
                if g >= 2
            ),
        )
    )
    checks.append(
        compare_all(
            "t_row_sum",
            3,
            c_max,
            (
                (c, None, t_total(c), sum(t_of(c, g) for g in _genus_range(c)))
                for c in range(3, c_max + 1)
            ),
        )
    )
    checks.append(
        compare_all(
            "tp_row_sum",
            3,
            c_max,
            (
                (c, None, tp_total(c), sum(tp_of(c, g) for g in _genus_range(c)))
                for c in range(3, c_max + 1)
            ),
        )
    )
    checks.append(
        compare_all(
            "tbar_row_sum",
            3,
            c_max,
            (
                (c, None, knots_total(c), sum(tbar_of(c, g) for g in _genus_range(c)))
                for c in range(3, c_max + 1)
            ),
        )
    )
    checks.append(
        compare_all(
            "class_double_count",  # 2 tbar = t + tp, elementwise
            3,
            c_max,
            (
                (c, g, t_of(c, g) + tp_of(c, g), 2 * tbar_of(c, g))
                for c in range(3, c_max + 1)
                for g in _genus_range(c)
            ),
        )
    )
    checks.append(
        compare_all(
            "palindromic_odd_step",  # tp(c, g) = tp(c+1, g) for odd c
            3,
            c_max,
            (
                (c, g, tp_of(c, g), tp_of(c + 1, g))
                for c in range(3, c_max + 1, 2)
                for g in _genus_range(c)
            ),
        )
    )
    return VerificationReport(checks)
