import random

import pytest

from kneading.symbolic import (
    FEIGENBAUM_RULE,
    THUE_MORSE_RULE,
    FixedPointStream,
    PeriodicStream,
    SubstitutionRule,
    complement,
    feigenbaum_limit,
    feigenbaum_stream,
    feigenbaum_word,
    fixed_point_prefix,
    minimal_period,
    renormalize_seq,
    shift,
    stream_from_json,
    stream_to_json,
    substitute,
)

# Frozen period words of the doubling cascade, levels 1..5.
CASCADE_WORDS = {
    1: "1",
    2: "10",
    3: "1011",
    4: "10111010",
    5: "1011101010111011",
}


def test_minimal_period():
    assert minimal_period("10101010") == "10"
    assert minimal_period("1011") == "1011"
    assert minimal_period("111") == "1"


def test_periodic_stream_canonical_form():
    # "1" then repeating "10" equals repeating "1" "01"... both reduce
    # to the same canonical pair.
    a = PeriodicStream("1", "01")
    b = PeriodicStream("", "10")
    assert a == b
    assert a.preperiod == ""
    assert a.period == "10"
    assert PeriodicStream("", "101101").period == "101"
    assert PeriodicStream("1", "1").preperiod == ""


def test_periodic_stream_access_is_one_based():
    s = PeriodicStream("0", "10")
    assert [s.at(k) for k in range(1, 6)] == [0, 1, 0, 1, 0]
    assert s.prefix(5) == "01010"
    with pytest.raises(IndexError):
        s.at(0)


def test_shift_periodic():
    s = PeriodicStream("01", "110")
    assert shift(s, 0) is s
    assert shift(s, 1) == PeriodicStream("1", "110")
    assert shift(s, 2) == PeriodicStream("", "110")
    assert shift(s, 4) == PeriodicStream("", "011")
    assert shift(shift(s, 3), 2) == shift(s, 5)


def test_shift_generated_prefix():
    limit = feigenbaum_limit()
    assert limit.prefix(8) == "10111010"
    assert shift(limit, 2).prefix(6) == "111010"


def test_substitute():
    assert substitute(FEIGENBAUM_RULE, "1") == "10"
    assert substitute(FEIGENBAUM_RULE, "10") == "1011"
    assert substitute(THUE_MORSE_RULE, "01") == "0110"
    with pytest.raises(ValueError):
        SubstitutionRule({"0": ""})
    with pytest.raises(ValueError):
        SubstitutionRule({"0": "01"})  # image uses a foreign symbol


def test_fixed_point_prefix_stability():
    p64 = fixed_point_prefix(FEIGENBAUM_RULE, "1", 64)
    p16 = fixed_point_prefix(FEIGENBAUM_RULE, "1", 16)
    assert p64.startswith(p16)
    assert p16 == "1011101010111011"
    tm = fixed_point_prefix(THUE_MORSE_RULE, "0", 16)
    assert tm == "0110100110010110"


def test_fixed_point_requires_growth_and_prefix_letter():
    with pytest.raises(ValueError):
        FixedPointStream(SubstitutionRule({"0": "0", "1": "1"}), "0").prefix(4)
    with pytest.raises(ValueError):
        FixedPointStream(THUE_MORSE_RULE, "x")
    with pytest.raises(ValueError):
        # image of '1' under 0->01, 1->00 does not start with '1'
        FixedPointStream(SubstitutionRule({"0": "01", "1": "00"}), "1")


@pytest.mark.parametrize("j,word", sorted(CASCADE_WORDS.items()))
@pytest.mark.parametrize("method", ["duplicate-flip", "index-doubling", "substitution"])
def test_feigenbaum_words_match_table(j, word, method):
    assert feigenbaum_word(j, method) == word


def test_feigenbaum_word_properties():
    for j in range(1, 15):
        w = feigenbaum_word(j)
        assert len(w) == 2 ** (j - 1)
        assert w.count("1") % 2 == 1
        assert feigenbaum_word(j + 1).startswith(w)


def test_feigenbaum_methods_agree_deep():
    for j in range(1, 15):
        a = feigenbaum_word(j, "duplicate-flip")
        b = feigenbaum_word(j, "index-doubling")
        c = feigenbaum_word(j, "substitution")
        assert a == b == c


def test_limit_structure():
    s = feigenbaum_limit()
    w = s.prefix(2 ** 12)
    # odd positions all 1, positions 2 mod 4 all 0 (1-based)
    assert all(w[k] == "1" for k in range(0, len(w), 2))
    assert all(w[k] == "0" for k in range(1, len(w), 4))
    assert w.startswith(feigenbaum_word(10))


def test_renormalize_seq_ladder():
    for j in range(1, 14):
        assert renormalize_seq(feigenbaum_stream(j + 1)) == feigenbaum_stream(j)
    # the limit stream is a fixed point of renormalization
    r = renormalize_seq(feigenbaum_limit())
    assert r.prefix(512) == feigenbaum_limit().prefix(512)


def test_renormalize_seq_examples():
    assert renormalize_seq(PeriodicStream("", "11")) == PeriodicStream("", "0")
    assert renormalize_seq(PeriodicStream("", "1011")) == PeriodicStream("", "10")


def test_renormalize_seq_respects_preperiod():
    s = PeriodicStream("0110", "101")
    direct = renormalize_seq(s)
    expected = complement(s.prefix(40)[1::2])
    assert direct.prefix(20) == expected


def test_renormalize_seq_random_cross_check():
    rng = random.Random(7)
    for _ in range(200):
        pre = "".join(rng.choice("01") for _ in range(rng.randrange(0, 5)))
        per = "".join(rng.choice("01") for _ in range(rng.randrange(1, 7)))
        s = PeriodicStream(pre, per)
        out = renormalize_seq(s)
        ref = complement(s.prefix(60)[1::2])
        assert out.prefix(30) == ref


def test_serialization_round_trip():
    s = PeriodicStream("01", "110")
    assert stream_from_json(stream_to_json(s)) == s
    g = feigenbaum_limit()
    g2 = stream_from_json(stream_to_json(g))
    assert g2.prefix(64) == g.prefix(64)
