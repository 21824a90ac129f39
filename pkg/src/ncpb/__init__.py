"""Noncrossing partitions of type B: enumeration, the Reiner bijection,
sign-reversing involutions and exact verification of type-B Narayana
identities."""
from .enumeration import (
    ColoredPartition,
    StratumSpec,
    count_stratum,
    enumerate_bruteforce,
    enumerate_colored,
    enumerate_ncb,
)
from .harness import oracle_crosscheck, verify, verify_all
from .involutions import critical_point, eta, extract_singleton, insert_singleton, rho, theta
from .partition import (
    CanonicalForm,
    PointClass,
    TypeBPartition,
    canonicalize,
    is_noncrossing,
    is_noncrossing_cyclic,
    linear_arcs,
    position,
    validate,
)
from .poly import Poly, X, Y, Z
from .reiner import SubsetPair, decode, encode, match_parentheses
from .weights import partition_weight, total_weight, weights

__version__ = "0.1.0"
