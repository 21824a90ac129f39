"""Type-B partitions of the signed ground set {±1, ..., ±n}.

Elements are drawn on a line in the order 1 < 2 < ... < n < -1 < ... < -n.
Every block is stored sorted in that order and the blocks themselves are
sorted by their first element, so equal partitions compare equal.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import (
    DomainError,
    NotNoncrossingError,
    PartitionError,
    SymmetryError,
    ZeroBlockError,
)

Block = tuple[int, ...]


def position(e: int, n: int) -> int:
    """Linear position of ``e`` in 1..2n."""
    if isinstance(e, bool) or not isinstance(e, int):
        raise DomainError(f"element {e!r} is not an integer")
    if e == 0 or abs(e) > n:
        raise DomainError(f"element {e} outside the ground set for n={n}")
    return e if e > 0 else n - e


def element_at(pos: int, n: int) -> int:
    if not 1 <= pos <= 2 * n:
        raise DomainError(f"position {pos} outside 1..{2 * n}")
    return pos if pos <= n else n - pos


def ground_set(n: int) -> list[int]:
    """All 2n signed elements in linear order."""
    return list(range(1, n + 1)) + list(range(-1, -n - 1, -1))


def _key(n: int):
    return lambda e: e if e > 0 else n - e


def negate(block: Iterable[int]) -> frozenset[int]:
    return frozenset(-e for e in block)


class Arc(NamedTuple):
    left: int
    right: int


@dataclass(frozen=True)
class TypeBPartition:
    """A validated type-B partition; build instances with :func:`validate`."""

    n: int
    blocks: tuple[Block, ...]

    def __str__(self):
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) or "{}"

    @property
    def zero_block(self) -> Block | None:
        for b in self.blocks:
            if -b[0] in b:
                return b
        return None

    @property
    def nonzero_blocks(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if -b[0] not in b)

    @property
    def num_pairs(self) -> int:
        """Number of antipodal pairs of nonzero blocks."""
        return len(self.nonzero_blocks) // 2

    def block_of(self, e: int) -> Block:
        for b in self.blocks:
            if e in b:
                return b
        raise DomainError(f"element {e} not in partition")

    def singletons(self) -> list[int]:
        """Positive elements i such that {i} and {-i} are blocks."""
        return sorted(b[0] for b in self.blocks if len(b) == 1 and b[0] > 0)

    def is_matchlike(self) -> bool:
        """Membership in A_n: no zero block and every block has two elements."""
        return all(len(b) == 2 and b[0] != -b[1] for b in self.blocks)

    def replace_blocks(self, blocks) -> "TypeBPartition":
        return validate(blocks, self.n)


def validate(blocks: Iterable[Iterable[int]], n: int) -> TypeBPartition:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    key = _key(n)
    seen: dict[int, int] = {}
    normalized = []
    for idx, raw in enumerate(blocks):
        b = list(raw)
        if not b:
            raise PartitionError(f"block {idx} is empty")
        for e in b:
            if isinstance(e, bool) or not isinstance(e, int) or e == 0 or abs(e) > n:
                raise PartitionError(f"block {idx}: element {e!r} outside the ground set for n={n}")
            if e in seen:
                raise PartitionError(f"element {e} appears in blocks {seen[e]} and {idx}")
            seen[e] = idx
        normalized.append(tuple(sorted(b, key=key)))
    missing = [e for e in ground_set(n) if e not in seen]
    if missing:
        raise PartitionError(f"elements {missing} are not covered")
    as_sets = {frozenset(b) for b in normalized}
    zero = 0
    for b in normalized:
        nb = negate(b)
        if nb not in as_sets:
            raise SymmetryError(f"block {set(b)} has no antipodal block")
        if nb == frozenset(b):
            zero += 1
    if zero > 1:
        raise ZeroBlockError(f"{zero} blocks are closed under negation")
    normalized.sort(key=lambda b: key(b[0]))
    return TypeBPartition(n, tuple(normalized))


def linear_arcs(p: TypeBPartition) -> list[Arc]:
    arcs = []
    for b in p.blocks:
        arcs.extend(Arc(b[i], b[i + 1]) for i in range(len(b) - 1))
    key = _key(p.n)
    arcs.sort(key=lambda a: (key(a.left), key(a.right)))
    return arcs


def arcs_cross(a: Arc, c: Arc, n: int) -> bool:
    """True when the two arcs interleave on the line (either way round)."""
    p, q = position(a.left, n), position(a.right, n)
    r, s = position(c.left, n), position(c.right, n)
    return p < r < q < s or r < p < s < q


def is_noncrossing(p: TypeBPartition) -> bool:
    arcs = linear_arcs(p)
    return not any(arcs_cross(a, c, p.n) for a, c in combinations(arcs, 2))


def is_noncrossing_cyclic(p: TypeBPartition) -> bool:
    # Walk the circle and record which of the two blocks owns each visited
    # point; two blocks interleave iff ownership changes more than twice.
    n = p.n
    owner = {}
    for idx, b in enumerate(p.blocks):
        for e in b:
            owner[position(e, n)] = idx
    circle = [owner[i] for i in range(1, 2 * n + 1)]
    for i, j in combinations(range(len(p.blocks)), 2):
        seq = [o for o in circle if o == i or o == j]
        changes = sum(1 for t in range(len(seq)) if seq[t] != seq[t - 1])
        if changes > 2:
            return False
    return True


class PointClass(enum.Enum):
    ZERO = "zero"
    SINGLETON = "singleton"
    TRANSIENT = "transient"
    DEPARTURE = "departure"
    DESTINATION = "destination"


def is_representative(block: Iterable[int]) -> bool:
    """Whether ``block`` is the chosen member of its antipodal pair.

    A pure block represents its pair when it is all-positive.  A mixed block
    represents its pair when its largest positive element exceeds the absolute
    value of its first negative element; that is exactly when the block is
    nested under an arc of its antipode.
    """
    pos = [e for e in block if e > 0]
    neg = [-e for e in block if e < 0]
    if not neg:
        return True
    if not pos:
        return False
    return max(pos) > min(neg)


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    zero_positives: tuple[int, ...]
    reps: tuple[Block, ...]
    classes: dict

    def elements(self) -> list[int]:
        """Canonical elements by increasing absolute value."""
        return sorted(self.classes, key=abs)

    def element_for(self, i: int) -> int:
        """The signed canonical element whose absolute value is ``i``."""
        return i if i in self.classes else -i

    def departures(self) -> list[int]:
        return [e for e, c in self.classes.items() if c is PointClass.DEPARTURE]

    def destinations(self) -> list[int]:
        return [e for e, c in self.classes.items() if c is PointClass.DESTINATION]

    def expand(self) -> TypeBPartition:
        blocks = []
        for b in self.reps:
            blocks.append(b)
            blocks.append(tuple(-e for e in b))
        if self.zero_positives:
            blocks.append(self.zero_positives + tuple(-e for e in self.zero_positives))
        return validate(blocks, self.n)


def canonicalize(p: TypeBPartition) -> CanonicalForm:
    if not is_noncrossing(p):
        raise NotNoncrossingError(f"{p} is crossing")
    zero = p.zero_block
    zero_pos = tuple(sorted(e for e in zero if e > 0)) if zero else ()
    reps = [b for b in p.nonzero_blocks if is_representative(b)]
    # blocks are already sorted by first (= minimum) element
    classes = {e: PointClass.ZERO for e in zero_pos}
    for b in reps:
        if len(b) == 1:
            classes[b[0]] = PointClass.SINGLETON
            continue
        classes[b[0]] = PointClass.DEPARTURE
        classes[b[-1]] = PointClass.DESTINATION
        for e in b[1:-1]:
            classes[e] = PointClass.TRANSIENT
    return CanonicalForm(p.n, zero_pos, tuple(reps), classes)
