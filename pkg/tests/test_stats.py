"""Width-k statistics against hand-checked values and classical oracles."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from widthk.errors import InvalidInputError
from widthk.stats import (
    block_decompose,
    classical_stats,
    des,
    des_set,
    descent_record,
    exc,
    inv,
    inv_by_lcm,
    inv_set,
    inversion_record,
    maj,
    normalize_widths,
)

W = (4, 1, 3, 6, 5, 7, 2)

perms = st.integers(1, 7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)


def test_normalize_widths():
    assert normalize_widths(3, 7) == (3,)
    assert normalize_widths(9, 7) == (9,)  # single width may exceed n
    assert normalize_widths([3, 2, 2], 7) == (2, 3)
    with pytest.raises(InvalidInputError):
        normalize_widths(0, 7)
    with pytest.raises(InvalidInputError):
        normalize_widths([], 7)
    with pytest.raises(InvalidInputError):
        normalize_widths([2, 7], 7)  # width set must sit inside [1, n-1]
    with pytest.raises(InvalidInputError):
        normalize_widths([0, 2], 7)


class TestWorkedExample:
    # hand-checked on 4136572 with widths {2, 3}

    def test_descents(self):
        assert des_set(W, 2) == (1, 5)
        assert des_set(W, 3) == (4,)
        assert des_set(W, (2, 3)) == (1, 4, 5)
        assert des(W, (2, 3)) == 3

    def test_inversions(self):
        assert inv_set(W, 2) == ((1, 3), (1, 7), (3, 7), (5, 7))
        assert inv_set(W, 3) == ((1, 7), (4, 7))
        assert inv_set(W, (2, 3)) == ((1, 3), (1, 7), (3, 7), (4, 7), (5, 7))
        assert inv(W, 2) == 4
        assert inv(W, 3) == 2
        assert inv(W, 6) == 1
        assert inv(W, (2, 3)) == 5  # 4 + 2 - 1: the gap-6 pair counts once

    def test_excedances(self):
        assert exc(W, 2) == 2
        assert exc(W, 3) == 2
        assert exc(W, (2, 3)) == 4

    def test_major_index(self):
        assert maj(W, 2) == 4
        assert maj(W, 3) == 2
        assert maj(W, (2, 3)) == 6

    def test_records(self):
        rec = descent_record(W, (2, 3))
        assert rec.per_width == {2: (1, 5), 3: (4,)}
        assert rec.multiset == (1, 4, 5)
        assert rec.count == 3
        assert rec.to_json() == {
            "des": {"2": [1, 5], "3": [4]},
            "multiset": [1, 4, 5],
            "count": 3,
        }
        inv_rec = inversion_record(W, (2, 3))
        assert inv_rec.count == 5
        assert inv_rec.to_json()["inv"] == [[1, 3], [1, 7], [3, 7], [4, 7], [5, 7]]


def test_classical_quadruples():
    assert classical_stats(W) == (3, 8, 11, 3)
    assert classical_stats((3, 1, 4, 2)) == (2, 3, 4, 2)
    assert classical_stats((1, 2, 3)) == (0, 0, 0, 0)
    assert classical_stats((3, 2, 1)) == (2, 3, 3, 1)


def test_width_one_reduces_to_classical():
    for w in itertools.permutations(range(1, 6)):
        d, i, m, e = classical_stats(w)
        assert des(w, 1) == d
        assert inv(w, 1) == i
        assert maj(w, 1) == m
        assert exc(w, 1) == e


def test_width_at_least_n_is_trivial():
    assert des(W, 7) == 0
    assert des(W, 12) == 0
    assert inv(W, 7) == 0
    assert maj(W, 9) == 0
    assert exc(W, 7) == 0


def test_block_decompose():
    dec = block_decompose(W, 3)
    assert (dec.quotient, dec.remainder) == (2, 1)
    assert dec.blocks == ((4, 6, 2), (1, 5), (3, 7))
    assert dec.std_blocks == ((2, 3, 1), (1, 2), (1, 2))
    with pytest.raises(InvalidInputError):
        block_decompose(W, 0)
    with pytest.raises(InvalidInputError):
        block_decompose(W, 8)


def test_inclusion_exclusion_matches_direct_count_exhaustively():
    # every sigma in S_5, every nonempty width set
    for w in itertools.permutations(range(1, 6)):
        for size in (1, 2, 3, 4):
            for ks in itertools.combinations((1, 2, 3, 4), size):
                assert inv_by_lcm(w, ks) == inv(w, ks), (w, ks)


@given(perms, st.sets(st.integers(1, 6), min_size=1, max_size=3))
@settings(max_examples=300)
def test_inclusion_exclusion_property(w, ks):
    ks = {k for k in ks if k < len(w)}
    if not ks:
        return
    assert inv_by_lcm(w, ks) == inv(w, ks)


@given(perms, st.sets(st.integers(1, 6), min_size=1, max_size=3))
@settings(max_examples=300)
def test_union_bounds(w, ks):
    ks = {k for k in ks if k < len(w)}
    if not ks:
        return
    assert des(w, ks) == sum(des(w, k) for k in ks)
    assert inv(w, ks) <= sum(inv(w, k) for k in ks)
    assert len(inv_set(w, ks)) == inv(w, ks)
    assert maj(w, ks) == sum(maj(w, k) for k in ks)


@given(perms, st.integers(1, 6))
@settings(max_examples=300)
def test_single_width_internal_consistency(w, k):
    assert des(w, k) == len(des_set(w, k))
    assert inv(w, k) == len(inv_set(w, k))
    if k < len(w):
        assert maj(w, k) == sum(
            classical_stats(b)[2] for b in block_decompose(w, k).std_blocks
        )
        assert exc(w, k) == sum(
            classical_stats(b)[3] for b in block_decompose(w, k).std_blocks
        )
