import random

import pytest
from hypothesis import given, settings, strategies as st

from necklace_sandpile.necklace import (
    PERIODIC,
    Necklace,
    averaging,
    canonicalize,
    count_aperiodic,
    enumerate_necklaces,
    flip,
    format_digits,
    lyndon_words,
    necklace_index,
    parse_necklace,
)

from oracles import lyndon_naive


def nk(s, p=2):
    return parse_necklace(s, p)


def test_canonicalize_examples():
    assert str(canonicalize([1, 0, 0, 0], 2)) == "0001"
    assert canonicalize([0, 1, 0, 1], 2) is PERIODIC
    assert str(canonicalize([0, 1, 0, 1, 1], 2)) == "01011"
    with pytest.raises(ValueError):
        canonicalize([0, 2], 2)
    with pytest.raises(ValueError):
        canonicalize([], 2)


def test_necklace_rejects_non_lyndon():
    with pytest.raises(ValueError):
        Necklace(2, (1, 0))
    with pytest.raises(ValueError):
        Necklace(2, (0, 1, 0, 1))


def test_enumeration_examples():
    assert [str(v) for v in enumerate_necklaces(2, 5)] == ["00001", "00011", "00101", "00111", "01011", "01111"]
    assert len(enumerate_necklaces(2, 12)) == 335
    assert [str(v) for v in enumerate_necklaces(2, 1)] == ["0", "1"]


def test_count_examples():
    assert count_aperiodic(2, 15) == 2182
    assert count_aperiodic(2, 6) == 9
    assert count_aperiodic(3, 1) == 3
    with pytest.raises(ValueError):
        count_aperiodic(2, 0)


@pytest.mark.parametrize("p,n", [(2, n) for n in range(1, 15)] + [(3, n) for n in range(1, 9)] + [(5, n) for n in range(1, 6)])
def test_enumeration_invariants(p, n):
    words = enumerate_necklaces(p, n)
    digits = [v.digits for v in words]
    assert digits == sorted(set(digits))
    assert len(words) == count_aperiodic(p, n)
    for v in words[:: max(1, len(words) // 50)]:
        assert canonicalize(v.digits, p) == v


@pytest.mark.parametrize("p,n", [(2, 10), (3, 6), (5, 4), (7, 3)])
def test_duval_matches_exhaustive_and_naive(p, n):
    duval = [v.digits for v in enumerate_necklaces(p, n, method="duval")]
    exhaustive = [v.digits for v in enumerate_necklaces(p, n, method="exhaustive")]
    assert duval == exhaustive == lyndon_naive(p, n)


def test_duval_large():
    # 2^20 words: only the generator path is practical in a unit test
    assert sum(1 for _ in lyndon_words(2, 20)) == count_aperiodic(2, 20)


def test_averaging_examples():
    assert averaging(nk("0001")) == nk("0011")
    assert averaging(nk("0011")) is PERIODIC
    assert averaging(nk("00001")) == nk("00011")


def test_averaging_respects_rotation_class():
    for v in enumerate_necklaces(2, 8):
        image = averaging(v)
        for r in v.rotations():
            w = canonicalize([(r[i] + r[(i + 1) % 8]) % 2 for i in range(8)], 2)
            assert w == image


def test_flip():
    assert flip(nk("00001")) == nk("01111")
    assert flip(nk("0001")) == nk("0111")
    with pytest.raises(ValueError):
        flip(nk("012", 3))
    for n in range(1, 13):
        for v in enumerate_necklaces(2, n):
            assert flip(flip(v)) == v


def test_text_format():
    assert format_digits((0, 1, 12), 13) == "0,1,12"
    assert parse_necklace("0,1,12", 13).digits == (0, 1, 12)
    assert parse_necklace("10", 2) == nk("01")
    with pytest.raises(ValueError):
        parse_necklace("0101", 2)


def test_necklace_index_covers_rotations():
    words = enumerate_necklaces(3, 4)
    idx = necklace_index(words)
    assert len(idx) == 4 * len(words)
    assert all(idx[r] == i for i, v in enumerate(words) for r in v.rotations())


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=10))
def test_canonical_form_is_rotation_invariant(word):
    first = canonicalize(word, 3)
    for k in range(len(word)):
        assert canonicalize(word[k:] + word[:k], 3) == first


def test_necklaces_are_ordered_and_hashable(seed):
    rng = random.Random(seed)
    words = enumerate_necklaces(2, 9)
    sample = rng.sample(words, 20)
    assert sorted(sample) == sorted(sample, key=lambda v: v.digits)
    assert len(set(words)) == len(words)
