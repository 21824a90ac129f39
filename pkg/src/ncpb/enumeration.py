"""Streams over NC^B(n), its strata, and colored/labeled families.

The main enumerator walks subset pairs (L, R) ordered by k, then L, then R
(each lexicographic) and maps them through the Reiner bijection, so nothing is
generated and thrown away.  :func:`enumerate_bruteforce` is the independent
oracle: it filters every set partition of the 2n signed points.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import combinations, islice, product
from math import comb
from typing import Iterable, Iterator, Sequence

from sympy.utilities.iterables import multiset_partitions

from .errors import CostGuardError, DomainError, PartitionError, SpecError
from .partition import TypeBPartition, ground_set, is_noncrossing, validate
from .reiner import SubsetPair, encode

BRUTEFORCE_GUARD = 5


def guard_overridden() -> bool:
    return os.environ.get("NCPB_GUARD_OVERRIDE") == "1"


@dataclass(frozen=True)
class StratumSpec:
    k: int | None = None
    singleton_free: bool = False
    matchlike: bool = False

    def check(self, n: int) -> None:
        if self.k is not None and self.k < 0:
            raise SpecError(f"k={self.k} is negative")
        if self.matchlike and self.k is not None and 2 * self.k != n:
            raise SpecError(f"matchlike partitions of [{n}] cannot have k={self.k} pairs")


ALL = StratumSpec()


def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")


def subset_pairs(n: int, spec: StratumSpec = ALL) -> Iterator[SubsetPair]:
    ground = range(1, n + 1)
    if spec.matchlike:
        ks = [n // 2] if n % 2 == 0 else []
    elif spec.k is not None:
        ks = [spec.k] if spec.k <= n else []
    else:
        ks = range(n + 1)
    disjoint = spec.singleton_free or spec.matchlike
    for k in ks:
        for left in combinations(ground, k):
            rest = [i for i in ground if i not in left] if disjoint else ground
            for right in combinations(rest, k):
                yield SubsetPair(n, frozenset(left), frozenset(right))


def enumerate_ncb(n: int, spec: StratumSpec = ALL, start: int = 0,
                  stop: int | None = None) -> Iterator[TypeBPartition]:
    """Each partition of the stratum once, in (k, L, R) order.

    ``start``/``stop`` select an index range of the stream so that workers can
    split it deterministically.
    """
    _check_n(n)
    spec.check(n)

    def gen():
        for pair in subset_pairs(n, spec):
            p = encode(pair)
            if spec.matchlike and not p.is_matchlike():
                continue
            yield p

    return islice(gen(), start, stop)


def count_stratum(n: int, spec: StratumSpec = ALL) -> int:
    return sum(1 for _ in enumerate_ncb(n, spec))


def count_formula(n: int, spec: StratumSpec = ALL) -> int:
    """Closed-form size of a stratum, for cross-checking :func:`count_stratum`."""
    spec.check(n)
    if spec.matchlike:
        return comb(n, n // 2) if n % 2 == 0 else 0
    ks = [spec.k] if spec.k is not None else range(n + 1)
    if spec.singleton_free:
        return sum(comb(n, 2 * k) * comb(2 * k, k) for k in ks)
    return sum(comb(n, k) ** 2 for k in ks)


def _type_b_or_none(blocks, n):
    try:
        return validate(blocks, n)
    except PartitionError:
        return None


def enumerate_bruteforce(n: int, override: bool = False) -> Iterator[TypeBPartition]:
    _check_n(n)
    if n > BRUTEFORCE_GUARD and not (override or guard_overridden()):
        raise CostGuardError(f"brute force over Bell({2 * n}) set partitions refused for n={n}")
    if n == 0:
        yield validate([], 0)
        return
    for blocks in multiset_partitions(ground_set(n)):
        p = _type_b_or_none(blocks, n)
        if p is not None and is_noncrossing(p):
            yield p


def type_b_partitions(n: int) -> Iterator[TypeBPartition]:
    """Every type-B partition of [n], crossing or not (oracle use, small n)."""
    if n == 0:
        yield validate([], 0)
        return
    for blocks in multiset_partitions(ground_set(n)):
        p = _type_b_or_none(blocks, n)
        if p is not None:
            yield p


class Color(enum.Enum):
    BLACK = "black"
    WHITE = "white"


UNIT = ("w",)
THETA_LABELS = ("-x", "-1")
ETA_LABELS = ("-1", "2x", "-x^2")


@dataclass(frozen=True)
class ColoredPartition:
    """A noncrossing partition whose singleton pairs are colored.

    ``white`` lists (|i|, label) for the white singleton pairs; every other
    singleton pair is black.
    """

    base: TypeBPartition
    white: tuple[tuple[int, str], ...] = ()

    @classmethod
    def of(cls, base: TypeBPartition, white=None, alphabet: Sequence[str] | None = None):
        white = dict(white or {})
        singles = set(base.singletons())
        for i, label in white.items():
            if i not in singles:
                raise PartitionError(f"{i} is not a singleton of {base}")
            if alphabet is not None and label not in alphabet:
                raise PartitionError(f"label {label!r} not in {tuple(alphabet)}")
        return cls(base, tuple(sorted(white.items())))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def labels(self) -> dict[int, str]:
        return dict(self.white)

    @property
    def colors(self) -> dict[int, Color]:
        whites = self.labels
        return {i: Color.WHITE if i in whites else Color.BLACK for i in self.base.singletons()}

    def __str__(self):
        marks = ",".join(f"{i}:{lab}" for i, lab in self.white)
        return f"{self.base} white[{marks}]"


def colorings(base: TypeBPartition, alphabet: Sequence[str]) -> Iterator[ColoredPartition]:
    singles = base.singletons()
    for choice in product((None, *alphabet), repeat=len(singles)):
        white = tuple((i, lab) for i, lab in zip(singles, choice) if lab is not None)
        yield ColoredPartition(base, white)


def enumerate_colored(n: int, alphabet: Sequence[str] = UNIT,
                      bases: Iterable[TypeBPartition] | None = None) -> Iterator[ColoredPartition]:
    """Every colored partition of V_n with white labels drawn from ``alphabet``."""
    for base in enumerate_ncb(n) if bases is None else bases:
        yield from colorings(base, alphabet)
