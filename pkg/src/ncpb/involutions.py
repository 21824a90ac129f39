"""Critical points and the involutions rho, theta and eta.

All three maps look at the canonical elements by increasing absolute value and
act on the first one that is neither a departure nor a destination point.
Zero and transient points are pulled out into singletons; singletons are put
back with :func:`insert_singleton`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .enumeration import ETA_LABELS, THETA_LABELS, ColoredPartition
from .errors import AmbiguityError, ClassError, FixedSetError
from .partition import (
    Arc,
    CanonicalForm,
    PointClass,
    TypeBPartition,
    arcs_cross,
    canonicalize,
    is_noncrossing,
    linear_arcs,
    validate,
)

BLACK = "black"


@dataclass(frozen=True)
class CriticalPoint:
    element: int
    point_class: PointClass
    label: str | None = None  # white label, BLACK, or None for non-singletons

    @property
    def absolute(self) -> int:
        return abs(self.element)


@dataclass
class Step:
    """What a single application of an involution did (for --trace)."""

    which: str
    critical: CriticalPoint
    case: str
    target: tuple[int, ...] | None = None
    result: Union[TypeBPartition, ColoredPartition, None] = field(default=None, repr=False)

    def as_dict(self):
        return {
            "map": self.which,
            "critical_point": self.critical.element,
            "class": self.critical.point_class.value,
            "label": self.critical.label,
            "case": self.case,
            "target_block": list(self.target) if self.target is not None else None,
        }


def critical_point(obj, skip=frozenset()) -> CriticalPoint | None:
    """First canonical element by |value| that is not a departure/destination.

    ``obj`` is a partition, a canonical form, or a colored partition.  Labeled
    white singletons whose label is in ``skip`` are passed over.
    """
    labels: dict[int, str] = {}
    if isinstance(obj, ColoredPartition):
        labels = obj.labels
        cf = canonicalize(obj.base)
    elif isinstance(obj, CanonicalForm):
        cf = obj
    else:
        cf = canonicalize(obj)
    for e in cf.elements():
        c = cf.classes[e]
        if c in (PointClass.DEPARTURE, PointClass.DESTINATION):
            continue
        label = None
        if c is PointClass.SINGLETON:
            label = labels.get(abs(e), BLACK)
            if label in skip:
                continue
        return CriticalPoint(e, c, label)
    return None


def extract_singleton(p: TypeBPartition, i: int) -> TypeBPartition:
    cf = canonicalize(p)
    c = cf.classes.get(i)
    if c not in (PointClass.ZERO, PointClass.TRANSIENT):
        raise ClassError(f"{i} is {c.value if c else 'not canonical'}, expected zero or transient")
    blocks = []
    for b in p.blocks:
        rest = tuple(e for e in b if e != i and e != -i)
        if rest:
            blocks.append(rest)
    blocks += [(i,), (-i,)]
    return validate(blocks, p.n)


def _diameter_crosses(p: TypeBPartition, j: int) -> bool:
    diameter = Arc(j, -j)
    nonzero = {e for b in p.nonzero_blocks for e in b}
    return any(arcs_cross(diameter, a, p.n) for a in linear_arcs(p) if a.left in nonzero)


def insertion_target(p: TypeBPartition, j: int) -> tuple[int, ...] | None:
    """Block that receives ``j`` on reinsertion; None means the zero block."""
    j = abs(j)
    if (j,) not in p.blocks or (-j,) not in p.blocks:
        raise ClassError(f"{j} is not a singleton of {p}")
    if not _diameter_crosses(p, j):
        return None
    found = [b for b in p.nonzero_blocks if len(b) > 1 and _lands_transient(p, j, b)]
    if len(found) != 1:
        raise AmbiguityError(f"{len(found)} admissible blocks for {j} in {p}")
    return found[0]


def _lands_transient(p: TypeBPartition, j: int, block) -> bool:
    # A block "covers" j when, after joining it, j (or -j) sits strictly inside
    # the representative block; merely lying under some arc is not enough.
    q = _join(p, j, block)
    if not is_noncrossing(q):
        return False
    cf = canonicalize(q)
    return cf.classes[cf.element_for(j)] is PointClass.TRANSIENT


def _join(p: TypeBPartition, j: int, target) -> TypeBPartition:
    """Add j to ``target`` and -j to its antipode (or both to the zero block)."""
    blocks = [b for b in p.blocks if b not in ((j,), (-j,))]
    if target is None:
        zero = p.zero_block
        blocks = [b for b in blocks if b != zero]
        blocks.append((zero or ()) + (j, -j))
        return validate(blocks, p.n)
    anti = tuple(sorted(-e for e in target))
    out = []
    for b in blocks:
        if b == target:
            out.append(b + (j,))
        elif sorted(b) == list(anti):
            out.append(b + (-j,))
        else:
            out.append(b)
    return validate(out, p.n)


def insert_singleton(p: TypeBPartition, j: int) -> TypeBPartition:
    return _join(p, abs(j), insertion_target(p, j))


def rho_step(p: TypeBPartition) -> Step:
    if p.is_matchlike():
        raise FixedSetError(f"{p} lies in A_{p.n}")
    cp = critical_point(p)
    if cp.point_class is PointClass.SINGLETON:
        target = insertion_target(p, cp.absolute)
        return Step("rho", cp, "insert-zero" if target is None else "insert-block", target,
                    _join(p, cp.absolute, target))
    return Step("rho", cp, "extract", p.block_of(cp.element), extract_singleton(p, cp.element))


def rho(p: TypeBPartition) -> TypeBPartition:
    return rho_step(p).result


def _colored_step(which: str, cp: ColoredPartition, black_label: str, skip) -> Step:
    crit = critical_point(cp, skip)
    base, white = cp.base, cp.labels
    i = crit.absolute
    if crit.point_class is not PointClass.SINGLETON:
        white[i] = "-1"
        out = ColoredPartition(extract_singleton(base, crit.element), tuple(sorted(white.items())))
        return Step(which, crit, "to-white(-1)", base.block_of(crit.element), out)
    if crit.label == BLACK:
        white[i] = black_label
        return Step(which, crit, f"black-to-white({black_label})", None,
                    ColoredPartition(base, tuple(sorted(white.items()))))
    if crit.label == black_label:
        del white[i]
        return Step(which, crit, "white-to-black", None,
                    ColoredPartition(base, tuple(sorted(white.items()))))
    if crit.label == "-1":
        del white[i]
        target = insertion_target(base, i)
        out = ColoredPartition(_join(base, i, target), tuple(sorted(white.items())))
        return Step(which, crit, "insert-zero" if target is None else "insert-block", target, out)
    raise ClassError(f"label {crit.label!r} is not handled by {which}")


def in_theta_fixed_set(cp: ColoredPartition) -> bool:
    return cp.base.is_matchlike()


def in_eta_fixed_set(cp: ColoredPartition) -> bool:
    """Membership in D_n: only departure/destination points and white 2x singletons."""
    return critical_point(cp, skip={"2x"}) is None


def _check_labels(cp, alphabet, which):
    bad = [lab for _, lab in cp.white if lab not in alphabet]
    if bad:
        raise ClassError(f"labels {bad} are outside the {which} alphabet {alphabet}")


def theta_step(cp: ColoredPartition) -> Step:
    _check_labels(cp, THETA_LABELS, "theta")
    if in_theta_fixed_set(cp):
        raise FixedSetError(f"{cp} lies in A_{cp.n}")
    return _colored_step("theta", cp, "-x", frozenset())


def theta(cp: ColoredPartition) -> ColoredPartition:
    return theta_step(cp).result


def eta_step(cp: ColoredPartition) -> Step:
    _check_labels(cp, ETA_LABELS, "eta")
    if in_eta_fixed_set(cp):
        raise FixedSetError(f"{cp} lies in D_{cp.n}")
    return _colored_step("eta", cp, "-x^2", frozenset({"2x"}))


def eta(cp: ColoredPartition) -> ColoredPartition:
    return eta_step(cp).result
