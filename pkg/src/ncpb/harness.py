"""Identity registry and exact verification.

Every identity is a list of named evaluators ``n -> Poly``.  An identity
passes at ``n`` when all evaluators return the same polynomial; there is no
tolerance anywhere.  Combinatorial evaluators sum weights over enumerated
partitions, closed evaluators come from :mod:`ncpb.closed_forms`.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import comb
from typing import Callable, Iterable

from . import closed_forms as cf
from .enumeration import (
    ETA_LABELS,
    THETA_LABELS,
    UNIT,
    StratumSpec,
    enumerate_bruteforce,
    enumerate_colored,
    enumerate_ncb,
    guard_overridden,
)
from .errors import CostGuardError, NCBError, OracleError, RegistryError
from .involutions import in_eta_fixed_set
from .poly import X, Poly
from .reiner import decode, encode
from .weights import total_weight

Evaluator = Callable[[int], Poly]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    evaluators: tuple[tuple[str, Evaluator], ...]
    guard: int
    title: str = ""

    def with_evaluator(self, name: str, fn: Evaluator) -> "IdentitySpec":
        """Copy with evaluator ``name`` replaced (or appended)."""
        evs = [(k, fn if k == name else f) for k, f in self.evaluators]
        if name not in dict(self.evaluators):
            evs.append((name, fn))
        return replace(self, evaluators=tuple(evs))


@dataclass
class IdentityReport:
    id: str
    n_values: list[int]
    values: dict[int, list[tuple[str, str]]] = field(default_factory=dict)
    passed: bool = True
    witness: dict | None = None
    error: str | None = None
    wall_time: float = 0.0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def records(self) -> list[dict]:
        out = []
        for n in self.n_values:
            vals = self.values.get(n, [])
            ok = self.error is None and len({p for _, p in vals}) == 1
            out.append({
                "id": self.id,
                "n": n,
                "values": [{"name": k, "poly": p} for k, p in vals],
                "verdict": "pass" if ok else "fail",
            })
        return out


# ---- cached enumerations --------------------------------------------------

@lru_cache(maxsize=None)
def _ncb(n: int) -> tuple:
    return tuple(enumerate_ncb(n))


@lru_cache(maxsize=None)
def _colored(n: int, alphabet: tuple[str, ...]) -> tuple:
    return tuple(enumerate_colored(n, alphabet, bases=_ncb(n)))


@lru_cache(maxsize=None)
def _matchlike(n: int) -> tuple:
    return tuple(enumerate_ncb(n, StratumSpec(matchlike=True)))


def _over_ncb(scheme):
    return lambda n: total_weight(_ncb(n), scheme)


def _over_colored(scheme, alphabet):
    return lambda n: total_weight(_colored(n, alphabet), scheme)


def _signed_pair_count(n: int) -> Poly:
    # NC^B_e(n) - NC^B_o(n)
    return Poly(sum(-1 if p.num_pairs % 2 else 1 for p in _ncb(n)))


def _rho_fixed_prediction(n: int) -> Poly:
    # rho cancels everything outside A_n; each member of A_{2r} has r pairs
    return Poly(sum(-1 if p.num_pairs % 2 else 1 for p in _matchlike(n)))


def _theta_fixed_weight(n: int) -> Poly:
    return total_weight(_matchlike(n), "WTHETA")


def _eta_fixed_weight(n: int) -> Poly:
    return total_weight((c for c in _colored(n, ETA_LABELS) if in_eta_fixed_set(c)), "WETA")


def _bi_substituted(n: int) -> Poly:
    # (1-x)^n times the right side of (bi) at x -> 1/(1-x)
    return sum((cf._sign(n - k) * comb(n + k, k) * comb(n, k) * (1 - X) ** (n - k)
                for k in range(n + 1)), Poly(0))


def _legendre_backward_scaled(n: int) -> Poly:
    a, _ = cf.scaled_narayana_sequences(n)
    return cf.legendre_backward(a)[n]


def _legendre_forward_scaled(n: int) -> Poly:
    _, b = cf.scaled_narayana_sequences(n)
    return cf.legendre_forward(b)[n]


def _legendre_roundtrip(n: int) -> Poly:
    a, _ = cf.scaled_narayana_sequences(n)
    return cf.legendre_forward(cf.legendre_backward(a))[n]


def _closed(identity_id):
    return [("closed LHS", lambda n: cf.closed_form(identity_id, "LHS", n)),
            ("closed RHS", lambda n: cf.closed_form(identity_id, "RHS", n))]


def _spec(identity_id, guard, title, *evaluators, closed=True):
    evs = list(evaluators) + (_closed(identity_id) if closed else [])
    return IdentitySpec(identity_id, tuple(evs), guard, title)


ENUM_GUARD = 7
INTEGER_GUARD = 8
LABELED_GUARD = 5

REGISTRY: dict[str, IdentitySpec] = {s.id: s for s in [
    _spec("i1", ENUM_GUARD, "P_n(x) = sum C(n,2k)C(2k,k)x^k(1+x)^(n-2k)",
          ("W1 total over NC^B(n)", _over_ncb("W1"))),
    _spec("i2", ENUM_GUARD, "sum C(n,k)^2 x^2k (1+x)^2(n-k) = sum C(n,k)C(2k,k)x^k(1+x)^k",
          ("W2L total over NC^B(n)", _over_ncb("W2L")),
          ("W2R total over V_n", _over_colored("W2R", UNIT))),
    _spec("i3", INTEGER_GUARD, "sum C(n,2k)C(2k,k)2^(n-2k) = C(2n,n)",
          ("|NC^B(n)|", lambda n: Poly(len(_ncb(n)))),
          ("i1 RHS at x=1", lambda n: Poly(cf.i1_rhs(n).evaluate(1)))),
    _spec("i4", INTEGER_GUARD, "sum (-1)^k C(n,k)^2",
          ("W1 total at x=-1", lambda n: Poly(_over_ncb("W1")(n).evaluate(-1)))),
    _spec("i5", INTEGER_GUARD, "NC^B_e(n) - NC^B_o(n)",
          ("signed pair count over NC^B(n)", _signed_pair_count),
          ("rho fixed set A_n", _rho_fixed_prediction)),
    _spec("re1", ENUM_GUARD, "refinement of i1 with singleton weight y",
          ("WRE1 total over NC^B(n)", _over_ncb("WRE1"))),
    _spec("re2", ENUM_GUARD, "refinement of i2 in x, y, z",
          ("WRE2L total over NC^B(n)", _over_ncb("WRE2L")),
          ("WRE2R total over V_n", _over_colored("WRE2R", UNIT))),
    _spec("i6", LABELED_GUARD, "sum (-1)^(n-k) C(n,k) P_k(x)(1+x)^(n-k)",
          ("signed WTHETA total over V_n", _over_colored("WTHETA", THETA_LABELS)),
          ("WTHETA total over A_n", _theta_fixed_weight)),
    _spec("dawson", INTEGER_GUARD, "sum (-1)^(n-k) C(n,k)C(2k,k)2^(n-k)",
          ("i6 LHS at x=1", lambda n: Poly(cf.i6_lhs(n).evaluate(1)))),
    _spec("i7", LABELED_GUARD, "sum (-1)^(n-k) C(n,k) P_k(x^2)(1-x)^2(n-k) = x^n C(2n,n)",
          ("signed WETA total over V_n", _over_colored("WETA", ETA_LABELS)),
          ("WETA total over D_n", _eta_fixed_weight),
          ("D_n direct sum", cf.i7_fixed_set)),
    _spec("twice", INTEGER_GUARD, "sum (-1)^k C(n,k)C(2k,k)4^(n-k) = C(2n,n)",
          ("(-1)^n i7 LHS at x=-1", lambda n: Poly(cf._sign(n) * cf.i7_lhs(n).evaluate(-1)))),
    _spec("bi", ENUM_GUARD, "sum C(n,k)^2 x^k (x-1)^(n-k) = sum (-1)^(n-k) C(n+k,k)C(n,k)x^k",
          ("WBI total over NC^B(n)", _over_ncb("WBI"))),
    _spec("bi2", INTEGER_GUARD, "P_n(x) = sum (-1)^(n-k) C(n+k,n-k)C(2k,k)(1-x)^(n-k)",
          ("bi RHS at x->1/(1-x), times (1-x)^n", _bi_substituted)),
    _spec("bi3", INTEGER_GUARD, "C(2n,n) = sum (2k+1)/(2n+1) C(2n+1,n-k) P_k(x)(1-x)^(n-k)",
          ("Legendre backward of P_k(x)(x-1)^(n-k)", _legendre_backward_scaled)),
    _spec("legendre", INTEGER_GUARD, "a_n = sum C(n+k,n-k) b_k and its inverse",
          ("P_n(x)", cf.narayana_b),
          ("forward of C(2k,k)(x-1)^(n-k)", _legendre_forward_scaled),
          ("forward(backward(a))", _legendre_roundtrip),
          closed=False),
]}

IDENTITY_IDS = tuple(REGISTRY)


def _n_values(n_range) -> list[int]:
    if isinstance(n_range, int):
        return list(range(n_range + 1))
    return sorted(set(n_range))


def verify(identity_id: str, n_range: int | Iterable[int], unguard: bool = False,
           registry: dict[str, IdentitySpec] | None = None) -> IdentityReport:
    """Evaluate every evaluator of ``identity_id`` for each n in ``n_range``.

    An integer ``n_range`` means 0..n_range.
    """
    registry = REGISTRY if registry is None else registry
    try:
        spec = registry[identity_id]
    except KeyError:
        raise RegistryError(f"unknown identity {identity_id!r}; known: {', '.join(registry)}") from None
    ns = _n_values(n_range)
    if ns and ns[-1] > spec.guard and not (unguard or guard_overridden()):
        raise CostGuardError(f"{identity_id} is guarded to n <= {spec.guard}; got n = {ns[-1]}")
    report = IdentityReport(identity_id, ns)
    start = time.perf_counter()
    for n in ns:
        row = []
        for name, fn in spec.evaluators:
            value = fn(n)
            if not isinstance(value, Poly):
                value = Poly(value)
            row.append((name, value))
        report.values[n] = [(name, str(v)) for name, v in row]
        ref_name, ref = row[0]
        for name, v in row[1:]:
            if v != ref and report.witness is None:
                report.passed = False
                report.witness = {
                    "n": n,
                    "evaluators": [ref_name, name],
                    "values": [str(ref), str(v)],
                    "difference": str(v - ref),
                }
    report.wall_time = time.perf_counter() - start
    return report


def verify_all(n_max: int, unguard: bool = False,
               registry: dict[str, IdentitySpec] | None = None) -> list[IdentityReport]:
    registry = REGISTRY if registry is None else registry
    reports = []
    for identity_id, spec in registry.items():
        top = n_max if unguard or guard_overridden() else min(n_max, spec.guard)
        try:
            reports.append(verify(identity_id, top, unguard=unguard, registry=registry))
        except NCBError as exc:
            reports.append(IdentityReport(identity_id, _n_values(top), passed=False,
                                          error=f"{type(exc).__name__}: {exc}"))
    return reports


def oracle_crosscheck(n: int) -> dict:
    """Reiner enumerator vs. brute force, plus decode/encode over the brute-force stream."""
    brute = Counter(enumerate_bruteforce(n))
    fast = Counter(enumerate_ncb(n))
    if brute != fast:
        diff = (brute - fast) or (fast - brute)
        raise OracleError(f"enumerators disagree at n={n}, e.g. {next(iter(diff))}")
    for p in brute:
        if encode(decode(p)) != p:
            raise OracleError(f"roundtrip failed for {p}")
    return {"n": n, "bruteforce": sum(brute.values()), "reiner": sum(fast.values()), "roundtrip": True}


def format_table(reports: list[IdentityReport]) -> str:
    lines = [f"{'identity':<10}{'n':>4}  {'verdict':<8}value"]
    for r in reports:
        if r.error:
            lines.append(f"{r.id:<10}{'-':>4}  {'error':<8}{r.error}")
            continue
        for rec in r.records():
            vals = {v["poly"] for v in rec["values"]}
            shown = rec["values"][0]["poly"] if len(vals) == 1 else " | ".join(sorted(vals))
            lines.append(f"{r.id:<10}{rec['n']:>4}  {rec['verdict']:<8}{shown}")
        if r.witness:
            w = r.witness
            lines.append(f"  witness n={w['n']}: {w['evaluators'][0]} = {w['values'][0]}; "
                         f"{w['evaluators'][1]} = {w['values'][1]}; difference {w['difference']}")
    ok = all(r.passed for r in reports)
    lines.append(f"overall: {'pass' if ok else 'fail'} ({sum(r.passed for r in reports)}/{len(reports)})")
    return "\n".join(lines)
