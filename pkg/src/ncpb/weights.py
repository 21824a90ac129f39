"""Weight schemes on canonical points and weighted totals over streams.

A scheme maps each point class to a polynomial.  Colored schemes also carry
one weight per white-singleton label; a black singleton uses the
``SINGLETON`` weight.  The weight of a partition is the product over its
canonical elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .enumeration import ETA_LABELS, THETA_LABELS, UNIT, ColoredPartition
from .errors import SchemeError
from .partition import CanonicalForm, PointClass, TypeBPartition, canonicalize
from .poly import ONE, X, Y, Z, Poly

Z0, S, T, DEP, DST = (PointClass.ZERO, PointClass.SINGLETON, PointClass.TRANSIENT,
                      PointClass.DEPARTURE, PointClass.DESTINATION)


@dataclass(frozen=True)
class WeightScheme:
    id: str
    classes: dict          # PointClass -> Poly
    white: dict            # label -> Poly; empty for uncolored schemes

    def weight_of(self, point_class: PointClass, label: str | None = None) -> Poly:
        if label is None:
            return self.classes[point_class]
        try:
            return self.white[label]
        except KeyError:
            raise SchemeError(f"label {label!r} is not in the alphabet of scheme {self.id}") from None

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(self.white)


def _uniform(w, **over):
    out = {c: w for c in PointClass}
    for name, val in over.items():
        out[PointClass[name.upper()]] = val
    return out


_SCHEMES = {
    # (i1): departures and singletons weigh x
    "W1": WeightScheme("W1", _uniform(ONE, departure=X, singleton=X), {}),
    # (i2) left side: x^2 on departures and singletons, (1+x)^2 elsewhere
    "W2L": WeightScheme("W2L", _uniform((1 + X) ** 2, departure=X ** 2, singleton=X ** 2), {}),
    # (i2) right side over V_n: x(1+x) on everything but white singletons
    "W2R": WeightScheme("W2R", _uniform(X * (1 + X)), {UNIT[0]: ONE}),
    "WRE1": WeightScheme("WRE1", _uniform(ONE, departure=X, singleton=Y), {}),
    "WRE2L": WeightScheme("WRE2L", _uniform(Z, departure=X, destination=X, singleton=Y), {}),
    "WRE2R": WeightScheme("WRE2R", _uniform(X), {UNIT[0]: Y + Z - 2 * X}),
    # white singleton weight -1-x, split by label
    "WTHETA": WeightScheme("WTHETA", _uniform(ONE, departure=X, singleton=X),
                           dict(zip(THETA_LABELS, (-X, Poly(-1))))),
    # white singleton weight -1+2x-x^2, split by label
    "WETA": WeightScheme("WETA", _uniform(ONE, departure=X ** 2, singleton=X ** 2),
                         dict(zip(ETA_LABELS, (Poly(-1), 2 * X, -X ** 2)))),
    "WBI": WeightScheme("WBI", _uniform(X - 1, departure=X, singleton=X), {}),
}

SCHEME_IDS = tuple(_SCHEMES)


def weights(scheme_id: str) -> WeightScheme:
    try:
        return _SCHEMES[scheme_id]
    except KeyError:
        raise SchemeError(f"unknown weight scheme {scheme_id!r}") from None


def _resolve(scheme) -> WeightScheme:
    return weights(scheme) if isinstance(scheme, str) else scheme


def point_weights(obj, scheme) -> dict[int, Poly]:
    """Weight of every canonical element of ``obj`` under ``scheme``."""
    scheme = _resolve(scheme)
    labels: dict[int, str] = {}
    if isinstance(obj, ColoredPartition):
        labels = obj.labels
        cf = canonicalize(obj.base)
    elif isinstance(obj, CanonicalForm):
        cf = obj
    else:
        cf = canonicalize(obj)
    out = {}
    for e, c in cf.classes.items():
        label = labels.get(abs(e)) if c is PointClass.SINGLETON else None
        out[e] = scheme.weight_of(c, label)
    return out


def partition_weight(obj, scheme) -> Poly:
    w = ONE
    for p in point_weights(obj, scheme).values():
        w = w * p
    return w


def total_weight(stream: Iterable, scheme) -> Poly:
    scheme = _resolve(scheme)
    total = Poly(0)
    # many partitions share a weight; tally monomials first, multiply once
    tally: dict[Poly, int] = {}
    for obj in stream:
        w = partition_weight(obj, scheme)
        tally[w] = tally.get(w, 0) + 1
    for w, count in tally.items():
        total = total + count * w
    return total
