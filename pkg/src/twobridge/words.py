"""Run-length words encoding alternating 2-bridge knot diagrams.

A word is stored as its run-length sequence ``eps = (eps_1, ..., eps_c)``:
run ``i`` consists of ``eps_i`` copies of ``'+'`` when ``i`` is odd and
``'-'`` when ``i`` is even, so the sign pattern is fixed by position and
only the run lengths carry information.  A sequence is a valid word when

* it has at least three runs (``c >= 3``),
* every run length is 1 or 2,
* the first and last runs have length 1, and
* the total symbol length ``sum(eps)`` is congruent to 1 mod 3.

Reversing ``eps`` yields the word of the same knot traversed from the other
end; words equal to their reversal are called palindromic type.  Knot
classes are the orbits ``{w, reverse(w)}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "DEFAULT_ENUM_CAP",
    "WordError",
    "TooFewRuns",
    "RunOutOfRange",
    "EndRunNotSingle",
    "LengthModViolation",
    "EnumerationCapExceeded",
    "Word",
    "make_word",
    "reversal_partner",
    "is_palindromic_type",
    "to_symbols",
    "parse_symbols",
    "to_record",
    "enumerate_T",
    "enumerate_Tp",
    "canonical_class_reps",
    "shard_prefixes",
]

# Cap on candidate interiors 2**(c-2); the default admits c <= 28.
DEFAULT_ENUM_CAP = 2**26


class WordError(ValueError):
    """Run-length sequence that is not a valid word."""


class TooFewRuns(WordError):
    """Fewer than three runs."""


class RunOutOfRange(WordError):
    """A run length outside {1, 2}."""


class EndRunNotSingle(WordError):
    """First or last run length differs from 1."""


class LengthModViolation(WordError):
    """Total symbol length not congruent to 1 mod 3."""


class EnumerationCapExceeded(RuntimeError):
    """Requested enumeration exceeds the configured cap."""


def _validate(eps: tuple[int, ...]) -> None:
    if len(eps) < 3:
        raise TooFewRuns(f"need at least 3 runs, got {len(eps)}")
    for e in eps:
        if e not in (1, 2):
            raise RunOutOfRange(f"run length {e} not in {{1, 2}}")
    if eps[0] != 1 or eps[-1] != 1:
        raise EndRunNotSingle(f"end runs must have length 1, got {eps[0]} and {eps[-1]}")
    if sum(eps) % 3 != 1:
        raise LengthModViolation(f"symbol length {sum(eps)} != 1 mod 3")


@dataclass(frozen=True)
class Word:
    """Validated run-length word; construction rejects invalid sequences."""

    eps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "eps", tuple(self.eps))
        _validate(self.eps)

    @property
    def c(self) -> int:
        """Crossing number: the number of runs."""
        return len(self.eps)

    @property
    def ell(self) -> int:
        """Total symbol length."""
        return sum(self.eps)


def make_word(eps: Sequence[int]) -> Word:
    """Validate ``eps`` and return the word; never normalizes silently."""
    return Word(tuple(eps))


def reversal_partner(w: Word) -> Word:
    """The word with reversed run sequence (same knot, other traversal)."""
    return Word(w.eps[::-1])


def is_palindromic_type(w: Word) -> bool:
    """True when the word equals its reversal partner."""
    return w.eps == w.eps[::-1]


def to_symbols(w: Word) -> str:
    """Render the sign string, e.g. ``(1, 2, 1) -> '+--+'``."""
    return "".join(("+" if i % 2 == 0 else "-") * e for i, e in enumerate(w.eps))


def parse_symbols(text: str) -> Word:
    """Inverse of :func:`to_symbols`; accepts ``-`` or the typographic minus."""
    text = text.replace("−", "-")
    if not text:
        raise TooFewRuns("empty symbol string")
    bad = set(text) - {"+", "-"}
    if bad:
        raise WordError(f"unexpected symbols {sorted(bad)!r}")
    if text[0] != "+":
        raise WordError("word must start with '+'")
    eps = tuple(len(list(run)) for _, run in itertools.groupby(text))
    return Word(eps)


def to_record(w: Word, *, genus: int | None = None, multiplicity: int | None = None) -> dict:
    """JSON-ready record for one word, in stable key order."""
    record: dict = {
        "c": w.c,
        "eps": list(w.eps),
        "symbols": to_symbols(w),
        "palindromic": is_palindromic_type(w),
    }
    if genus is not None:
        record["genus"] = genus
    if multiplicity is not None:
        record["multiplicity"] = multiplicity
    return record


def _check_enum_args(c: int, cap: int, interior_prefix: tuple[int, ...]) -> None:
    if c < 3:
        raise TooFewRuns(f"crossing number must be >= 3, got {c}")
    if 2 ** (c - 2) > cap:
        raise EnumerationCapExceeded(
            f"enumeration at c={c} needs 2^{c - 2} candidates, cap is {cap}"
        )
    if len(interior_prefix) > c - 2:
        raise WordError("interior prefix longer than the interior")
    for e in interior_prefix:
        if e not in (1, 2):
            raise RunOutOfRange(f"prefix value {e} not in {{1, 2}}")


def _generate_words(c: int, interior_prefix: tuple[int, ...]) -> Iterator[Word]:
    head = 2 + sum(interior_prefix)
    free = c - 2 - len(interior_prefix)
    for tail in itertools.product((1, 2), repeat=free):
        if (head + sum(tail)) % 3 == 1:
            yield Word((1, *interior_prefix, *tail, 1))


def enumerate_T(
    c: int,
    *,
    cap: int = DEFAULT_ENUM_CAP,
    interior_prefix: tuple[int, ...] = (),
) -> Iterator[Word]:
    """Every word with ``c`` runs in ascending lexicographic eps order.

    ``interior_prefix`` restricts to words whose interior runs
    ``eps_2..eps_{c-1}`` start with the given values; enumerating all
    prefixes of a fixed length in order and concatenating reproduces the
    unsharded stream exactly.  Arguments are validated eagerly, before the
    first word is produced.
    """
    interior_prefix = tuple(interior_prefix)
    _check_enum_args(c, cap, interior_prefix)
    return _generate_words(c, interior_prefix)


def enumerate_Tp(
    c: int,
    *,
    cap: int = DEFAULT_ENUM_CAP,
    interior_prefix: tuple[int, ...] = (),
) -> Iterator[Word]:
    """The palindromic-type subset of :func:`enumerate_T`, same order."""
    words = enumerate_T(c, cap=cap, interior_prefix=interior_prefix)
    return (w for w in words if is_palindromic_type(w))


def _generate_reps(words: Iterator[Word]) -> Iterator[tuple[Word, int]]:
    for w in words:
        rev = w.eps[::-1]
        if w.eps < rev:
            yield w, 2
        elif w.eps == rev:
            yield w, 1


def canonical_class_reps(
    c: int,
    *,
    cap: int = DEFAULT_ENUM_CAP,
    interior_prefix: tuple[int, ...] = (),
) -> Iterator[tuple[Word, int]]:
    """One ``(representative, multiplicity)`` pair per knot class.

    The representative is the lexicographically smaller of ``{w, reverse(w)}``;
    palindromic words carry multiplicity 1, the rest multiplicity 2.  The
    stream is ordered by representative.
    """
    return _generate_reps(enumerate_T(c, cap=cap, interior_prefix=interior_prefix))


def shard_prefixes(c: int, shards: int) -> list[tuple[int, ...]]:
    """Fixed-length interior prefixes splitting ``enumerate_T(c)`` into
    at least ``shards`` lexicographically ordered pieces."""
    if c < 3:
        raise ValueError(f"crossing number must be >= 3, got {c}")
    if shards < 1:
        raise ValueError("shard count must be positive")
    k = min(c - 2, max(0, (shards - 1).bit_length()))
    return list(itertools.product((1, 2), repeat=k))


def interleave_shards(parts: Iterable[Iterable[Word]]) -> Iterator[Word]:
    """Concatenate shard streams back into the unsharded order."""
    for part in parts:
        yield from part
