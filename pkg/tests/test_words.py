"""Run-length word model: validation, involutions, enumeration, sharding."""

import pytest
from hypothesis import given, strategies as st

from twobridge.words import (
    DEFAULT_ENUM_CAP,
    EndRunNotSingle,
    EnumerationCapExceeded,
    LengthModViolation,
    RunOutOfRange,
    TooFewRuns,
    Word,
    WordError,
    canonical_class_reps,
    enumerate_T,
    enumerate_Tp,
    interleave_shards,
    is_palindromic_type,
    make_word,
    parse_symbols,
    reversal_partner,
    shard_prefixes,
    to_record,
    to_symbols,
)
from twobridge.counts import knots_total, t_total, tp_total


def interiors(c):
    # all (c-2)-bit choices of {1,2} between the forced end runs
    from itertools import product

    return product((1, 2), repeat=c - 2)


def words_strategy(max_c=12):
    def build(interior):
        eps = (1, *interior, 1)
        if sum(eps) % 3 != 1:
            return None
        return make_word(eps)

    return (
        st.integers(min_value=1, max_value=max_c - 2)
        .flatmap(lambda k: st.lists(st.sampled_from([1, 2]), min_size=k, max_size=k))
        .map(lambda mid: build(tuple(mid)))
        .filter(lambda w: w is not None)
    )


class TestValidation:
    def test_trefoil(self):
        w = make_word((1, 2, 1))
        assert w.c == 3
        assert w.ell == 4

    def test_too_few_runs(self):
        with pytest.raises(TooFewRuns):
            make_word((1, 1))

    def test_run_out_of_range(self):
        with pytest.raises(RunOutOfRange):
            make_word((1, 3, 1, 1))
        with pytest.raises(RunOutOfRange):
            make_word((1, 0, 1))

    def test_end_runs_must_be_single(self):
        with pytest.raises(EndRunNotSingle):
            make_word((2, 1, 1, 1, 2))
        with pytest.raises(EndRunNotSingle):
            make_word((1, 1, 2))

    def test_length_must_be_one_mod_three(self):
        with pytest.raises(LengthModViolation):
            make_word((1, 1, 1))

    def test_error_hierarchy(self):
        for exc in (TooFewRuns, RunOutOfRange, EndRunNotSingle, LengthModViolation):
            assert issubclass(exc, WordError)
            assert issubclass(exc, ValueError)

    def test_word_accepts_any_sequence_type(self):
        assert Word([1, 2, 1]).eps == (1, 2, 1)


class TestInvolutions:
    def test_reversal_partner(self):
        w = make_word((1, 1, 2, 2, 1))
        assert reversal_partner(w).eps == (1, 2, 2, 1, 1)

    def test_palindromic_type(self):
        assert is_palindromic_type(make_word((1, 2, 1)))
        assert is_palindromic_type(make_word((1, 2, 2, 2, 2, 1)))
        assert not is_palindromic_type(make_word((1, 1, 2, 2, 1)))

    @given(words_strategy())
    def test_reversal_is_an_involution(self, w):
        assert reversal_partner(reversal_partner(w)) == w

    @given(words_strategy())
    def test_palindromic_iff_fixed_by_reversal(self, w):
        assert is_palindromic_type(w) == (reversal_partner(w) == w)


class TestSymbols:
    def test_trefoil_symbols(self):
        assert to_symbols(make_word((1, 2, 1))) == "+--+"

    def test_signs_are_positional(self):
        # odd runs are plus runs, even runs minus runs, regardless of length
        assert to_symbols(make_word((1, 2, 1, 1, 2, 2, 1))) == "+--+-++--+"

    def test_parse_round_trip(self):
        w = parse_symbols("+--+-++--+")
        assert w.eps == (1, 2, 1, 1, 2, 2, 1)

    def test_parse_accepts_unicode_minus(self):
        assert parse_symbols("+−−+").eps == (1, 2, 1)

    def test_parse_rejects_garbage(self):
        with pytest.raises(WordError):
            parse_symbols("+-x+")

    def test_parse_rejects_wrong_leading_sign(self):
        with pytest.raises(WordError):
            parse_symbols("-++-")

    @given(words_strategy())
    def test_symbols_round_trip(self, w):
        assert parse_symbols(to_symbols(w)) == w

    def test_record_key_order(self):
        rec = to_record(make_word((1, 2, 1)), genus=1, multiplicity=1)
        assert list(rec) == ["c", "eps", "symbols", "palindromic", "genus", "multiplicity"]
        assert rec["eps"] == [1, 2, 1]
        assert rec["palindromic"] is True

    def test_record_omits_absent_fields(self):
        rec = to_record(make_word((1, 2, 1)))
        assert list(rec) == ["c", "eps", "symbols", "palindromic"]


class TestEnumeration:
    def test_known_small_sets(self):
        assert [w.eps for w in enumerate_T(3)] == [(1, 2, 1)]
        assert [w.eps for w in enumerate_T(5)] == [
            (1, 1, 2, 2, 1),
            (1, 2, 1, 2, 1),
            (1, 2, 2, 1, 1),
        ]

    def test_counts_match_closed_totals(self):
        for c in range(3, 15):
            assert sum(1 for _ in enumerate_T(c)) == t_total(c)
            assert sum(1 for _ in enumerate_Tp(c)) == tp_total(c)

    def test_lexicographic_order(self):
        for c in (6, 9, 10):
            seq = [w.eps for w in enumerate_T(c)]
            assert seq == sorted(seq)

    def test_palindromic_subset(self):
        for c in (7, 8, 11):
            pal = {w.eps for w in enumerate_Tp(c)}
            via_filter = {w.eps for w in enumerate_T(c) if is_palindromic_type(w)}
            assert pal == via_filter

    def test_class_reps_partition_T(self):
        for c in range(3, 13):
            reps = list(canonical_class_reps(c))
            assert len(reps) == knots_total(c)
            assert sum(m for _, m in reps) == t_total(c)
            # rep is the lexicographically smaller member of its orbit
            for w, m in reps:
                partner = reversal_partner(w)
                assert w.eps <= partner.eps
                assert m == (1 if partner == w else 2)

    def test_cap_raises_at_call_time(self):
        # the wrapper validates eagerly; no draw from the iterator is needed
        with pytest.raises(EnumerationCapExceeded):
            enumerate_T(10, cap=4)
        with pytest.raises(EnumerationCapExceeded):
            canonical_class_reps(10, cap=4)

    def test_cap_boundary(self):
        assert sum(1 for _ in enumerate_T(5, cap=8)) == t_total(5)
        with pytest.raises(EnumerationCapExceeded):
            enumerate_T(6, cap=8)

    def test_default_cap_value(self):
        assert DEFAULT_ENUM_CAP == 2**26

    def test_invalid_c(self):
        with pytest.raises(WordError):
            enumerate_T(2)


class TestSharding:
    def test_prefixes_cover_without_overlap(self):
        for c, shards in ((8, 4), (9, 7), (10, 16)):
            prefixes = shard_prefixes(c, shards)
            seen = []
            for p in prefixes:
                seen.extend(w.eps for w in enumerate_T(c, interior_prefix=p))
            assert sorted(seen) == [w.eps for w in enumerate_T(c)]

    def test_interleave_restores_global_order(self):
        c = 9
        prefixes = shard_prefixes(c, 4)
        shards = [list(enumerate_T(c, interior_prefix=p)) for p in prefixes]
        merged = list(interleave_shards(shards))
        assert merged == list(enumerate_T(c))

    def test_single_shard_is_identity(self):
        assert shard_prefixes(9, 1) == [()]

    def test_prefix_must_be_valid(self):
        with pytest.raises(WordError):
            list(enumerate_T(8, interior_prefix=(3,)))
