"""Bijection between pairs (L, R) of equal-size subsets of [n] and NC^B(n).

Points of L∖R become left parentheses (at i and -i), points of R∖L become
right parentheses, points of L∩R become singleton blocks.  Matched brackets on
each half give pure blocks, the leftover positive lefts and negative rights
pair up into mixed blocks, and whatever survives is the zero block.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, PairSizeError
from .partition import PointClass, TypeBPartition, canonicalize, validate


class Paren(enum.Enum):
    LEFT = "("
    RIGHT = ")"
    DOT = "."


@dataclass(frozen=True)
class SubsetPair:
    n: int
    left: frozenset[int]
    right: frozenset[int]

    @classmethod
    def of(cls, n: int, left: Iterable[int], right: Iterable[int]) -> "SubsetPair":
        left, right = frozenset(left), frozenset(right)
        for e in left | right:
            if isinstance(e, bool) or not isinstance(e, int) or not 1 <= e <= n:
                raise DomainError(f"subset element {e!r} outside 1..{n}")
        if len(left) != len(right):
            raise PairSizeError(f"|L|={len(left)} differs from |R|={len(right)}")
        return cls(n, left, right)

    @property
    def k(self) -> int:
        return len(self.left)


@dataclass
class Matching:
    pairs: list[tuple[int, int]]
    unpaired_right: list[int]
    unpaired_left: list[int]


def match_parentheses(seq: Sequence[Paren] | str) -> Matching:
    """Greene-Kleitman matching of a bracket word.

    Indices in the result are 1-based.  Dots are skipped; every matched pair
    encloses only matched brackets, and the unmatched rights all precede the
    unmatched lefts.
    """
    if isinstance(seq, str):
        seq = [Paren(ch) for ch in seq]
    stack: list[int] = []
    pairs, rights = [], []
    for idx, sym in enumerate(seq, start=1):
        if sym is Paren.LEFT:
            stack.append(idx)
        elif sym is Paren.RIGHT:
            if stack:
                pairs.append((stack.pop(), idx))
            else:
                rights.append(idx)
    return Matching(sorted(pairs), rights, stack)


def paren_sequence(pair: SubsetPair) -> list[Paren]:
    """Symbols at positions 1..n; the negative half repeats the same word."""
    word = []
    for i in range(1, pair.n + 1):
        in_l, in_r = i in pair.left, i in pair.right
        if in_l and not in_r:
            word.append(Paren.LEFT)
        elif in_r and not in_l:
            word.append(Paren.RIGHT)
        else:
            word.append(Paren.DOT)
    return word


def encode(pair: SubsetPair) -> TypeBPartition:
    if len(pair.left) != len(pair.right):
        raise PairSizeError(f"|L|={len(pair.left)} differs from |R|={len(pair.right)}")
    n = pair.n
    singles = pair.left & pair.right
    blocks: list[tuple[int, ...]] = []
    for s in sorted(singles):
        blocks += [(s,), (-s,)]

    word = paren_sequence(pair)
    alive = [i for i in range(1, n + 1) if i not in singles]
    # positive half: stack matching over surviving points, innermost first
    taken: set[int] = set()
    stack: list[int] = []
    rights: list[int] = []
    for i in alive:
        sym = word[i - 1]
        if sym is Paren.LEFT:
            stack.append(i)
        elif sym is Paren.RIGHT:
            if not stack:
                rights.append(i)
                continue
            l = stack.pop()
            block = tuple(j for j in alive if l <= j <= i and j not in taken)
            taken.update(block)
            blocks += [block, tuple(-j for j in block)]
    lefts = stack

    # survivors in linear order, as signed elements
    survivors = [i for i in alive if i not in taken] + [-i for i in alive if i not in taken]
    # rightmost positive left with leftmost negative right, working outwards
    for l, r in zip(reversed(lefts), rights):
        start, stop = survivors.index(l), survivors.index(-r)
        block = tuple(survivors[start:stop + 1])
        gone = set(block) | {-e for e in block}
        survivors = [e for e in survivors if e not in gone]
        blocks += [block, tuple(-e for e in block)]
    if survivors:
        blocks.append(tuple(survivors))
    return validate(blocks, n)


def decode(p: TypeBPartition) -> SubsetPair:
    cf = canonicalize(p)
    left, right = set(), set()
    for e, c in cf.classes.items():
        if c is PointClass.DEPARTURE:
            left.add(abs(e))
        elif c is PointClass.DESTINATION:
            right.add(abs(e))
        elif c is PointClass.SINGLETON:
            left.add(abs(e))
            right.add(abs(e))
    return SubsetPair.of(p.n, left, right)
