from itertools import combinations
from math import comb

import pytest

from figures import FIG1, FIG2, FIG2_LEFT, FIG2_RIGHT
from ncpb.errors import PairSizeError
from ncpb.reiner import Paren, SubsetPair, decode, encode, match_parentheses, paren_sequence


def all_pairs(n):
    for k in range(n + 1):
        for L in combinations(range(1, n + 1), k):
            for R in combinations(range(1, n + 1), k):
                yield SubsetPair.of(n, L, R)


def test_figure_two():
    p = encode(SubsetPair.of(10, FIG2_LEFT, FIG2_RIGHT))
    assert p == FIG2
    assert str(p) == "{1,-7}{2,3}{4,-4}{5,6}{7,-1}{8,9,10}{-2,-3}{-5,-6}{-8,-9,-10}"


def test_figure_two_word():
    word = "".join(s.value for s in paren_sequence(SubsetPair.of(10, FIG2_LEFT, FIG2_RIGHT)))
    # L-only points open, R-only points close, the rest are dots
    assert word == ")().()((.)"


def test_matching():
    m = match_parentheses(")(()(")
    assert m.pairs == [(3, 4)]
    assert m.unpaired_right == [1]
    assert m.unpaired_left == [2, 5]
    assert match_parentheses("(.)").pairs == [(1, 3)]


def test_size_mismatch():
    with pytest.raises(PairSizeError):
        SubsetPair.of(3, [1], [1, 2])


def test_single_element_cases():
    assert str(encode(SubsetPair.of(1, [], []))) == "{1,-1}"
    assert str(encode(SubsetPair.of(1, [1], [1]))) == "{1}{-1}"
    assert str(encode(SubsetPair.of(2, [1], [2]))) == "{1,2}{-1,-2}"
    assert str(encode(SubsetPair.of(2, [2], [1]))) == "{1,-2}{2,-1}"


def test_decode_figure_one():
    pair = decode(FIG1)
    assert pair.left == {3, 6, 7, 8}
    assert pair.right == {1, 3, 4, 8}
    assert encode(pair) == FIG1


def test_k_is_number_of_block_pairs():
    for pair in all_pairs(4):
        assert encode(pair).num_pairs == pair.k


@pytest.mark.parametrize("n", range(0, 8))
def test_roundtrip(n):
    count = 0
    seen = set()
    for pair in all_pairs(n):
        p = encode(pair)
        assert decode(p) == pair
        seen.add(p)
        count += 1
    assert count == comb(2 * n, n) == len(seen)
