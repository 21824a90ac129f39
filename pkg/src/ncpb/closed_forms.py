"""Closed-form sides of the type-B Narayana identities, as exact polynomials.

Integer identities are returned as constant polynomials.  No rationals are
used: the ballot-type coefficient (2k+1)/(2n+1)·C(2n+1, n-k) is computed by
multiplying first and dividing exactly.
"""
from __future__ import annotations

from math import comb
from typing import Callable, Sequence

from .errors import IntegralityError, RegistryError
from .poly import ONE, X, Y, Z, Poly


def narayana_b(n: int, var: Poly = X) -> Poly:
    """P_n evaluated at ``var``: sum of C(n,k)^2 var^k."""
    return sum((comb(n, k) ** 2 * var ** k for k in range(n + 1)), Poly(0))


def ballot(n: int, k: int) -> int:
    """(2k+1)/(2n+1) · C(2n+1, n-k), checked to be an integer."""
    num = (2 * k + 1) * comb(2 * n + 1, n - k)
    q, r = divmod(num, 2 * n + 1)
    if r:
        raise IntegralityError(f"(2k+1)C(2n+1,n-k)/(2n+1) is not integral at n={n}, k={k}")
    return q


def _central_even(n: int, scale: Poly = ONE) -> Poly:
    # scale^r C(2r, r) when n = 2r, else 0
    if n % 2:
        return Poly(0)
    r = n // 2
    return comb(2 * r, r) * scale ** r


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def i1_lhs(n):
    return narayana_b(n)


def i1_rhs(n):
    return sum((comb(n, 2 * k) * comb(2 * k, k) * X ** k * (1 + X) ** (n - 2 * k)
                for k in range(n // 2 + 1)), Poly(0))


def i2_lhs(n):
    return sum((comb(n, k) ** 2 * X ** (2 * k) * (1 + X) ** (2 * (n - k))
                for k in range(n + 1)), Poly(0))


def i2_rhs(n):
    return sum((comb(n, k) * comb(2 * k, k) * (X * (1 + X)) ** k for k in range(n + 1)), Poly(0))


def i3_lhs(n):
    return Poly(sum(comb(n, 2 * k) * comb(2 * k, k) * 2 ** (n - 2 * k) for k in range(n // 2 + 1)))


def i3_rhs(n):
    return Poly(comb(2 * n, n))


def i4_lhs(n):
    return Poly(sum(_sign(k) * comb(n, k) ** 2 for k in range(n + 1)))


def i4_rhs(n):
    return _central_even(n, Poly(-1))


# NC^B_e(n) - NC^B_o(n) has the same closed sides as the x = -1 case of P_n
i5_lhs = i4_lhs
i5_rhs = i4_rhs


def re1_lhs(n):
    total = Poly(0)
    for i in range(n + 1):
        for j in range((n - i) // 2 + 1):
            total = total + comb(n, i) * comb(n - i, j) * comb(n - j - i, j) * X ** j * Y ** i
    return total


def re1_rhs(n):
    return sum((comb(n, 2 * k) * comb(2 * k, k) * X ** k * (1 + Y) ** (n - 2 * k)
                for k in range(n // 2 + 1)), Poly(0))


def re2_lhs(n):
    total = Poly(0)
    for i in range(n + 1):
        for j in range((n - i) // 2 + 1):
            total = total + (comb(n, i) * comb(n - i, j) * comb(n - j - i, j)
                             * X ** (2 * j) * Y ** i * Z ** (n - 2 * j - i))
    return total


def re2_rhs(n):
    return sum((comb(n, k) * comb(2 * k, k) * X ** k * (Y + Z - 2 * X) ** (n - k)
                for k in range(n + 1)), Poly(0))


def i6_lhs(n):
    return sum((_sign(n - k) * comb(n, k) * narayana_b(k) * (1 + X) ** (n - k)
                for k in range(n + 1)), Poly(0))


def i6_rhs(n):
    return _central_even(n, X)


def dawson_lhs(n):
    return Poly(sum(_sign(n - k) * comb(n, k) * comb(2 * k, k) * 2 ** (n - k) for k in range(n + 1)))


def dawson_rhs(n):
    return _central_even(n)


def i7_lhs(n):
    return sum((_sign(n - k) * comb(n, k) * narayana_b(k, X ** 2) * (1 - X) ** (2 * (n - k))
                for k in range(n + 1)), Poly(0))


def i7_rhs(n):
    return comb(2 * n, n) * X ** n


def i7_fixed_set(n):
    """Weight of D_n counted directly: 2k paired points and n-2k white 2x singletons."""
    return sum((comb(n, 2 * k) * comb(2 * k, k) * X ** (2 * k) * (2 * X) ** (n - 2 * k)
                for k in range(n // 2 + 1)), Poly(0))


def twice_lhs(n):
    return Poly(sum(_sign(k) * comb(n, k) * comb(2 * k, k) * 4 ** (n - k) for k in range(n + 1)))


def twice_rhs(n):
    return Poly(comb(2 * n, n))


def bi_lhs(n):
    return sum((comb(n, k) ** 2 * X ** k * (X - 1) ** (n - k) for k in range(n + 1)), Poly(0))


def bi_rhs(n):
    return sum((_sign(n - k) * comb(n + k, k) * comb(n, k) * X ** k for k in range(n + 1)), Poly(0))


def bi2_lhs(n):
    return narayana_b(n)


def bi2_rhs(n):
    return sum((_sign(n - k) * comb(n + k, n - k) * comb(2 * k, k) * (1 - X) ** (n - k)
                for k in range(n + 1)), Poly(0))


def bi3_lhs(n):
    return Poly(comb(2 * n, n))


def bi3_rhs(n):
    return sum((ballot(n, k) * narayana_b(k) * (1 - X) ** (n - k) for k in range(n + 1)), Poly(0))


_FORMS: dict[tuple[str, str], Callable[[int], Poly]] = {}
for _name, _fn in list(globals().items()):
    if _name.endswith(("_lhs", "_rhs")) and callable(_fn):
        _FORMS[(_name[:-4], _name[-3:].upper())] = _fn


def closed_form(identity_id: str, side: str, n: int) -> Poly:
    try:
        fn = _FORMS[(identity_id, side.upper())]
    except KeyError:
        raise RegistryError(f"no closed form for {identity_id!r} side {side!r}") from None
    if n < 0:
        raise ValueError("n must be non-negative")
    return fn(n)


def legendre_forward(b: Sequence[Poly]) -> list[Poly]:
    """a_n = sum_k C(n+k, n-k) b_k."""
    return [sum((comb(n + k, n - k) * b[k] for k in range(n + 1)), Poly(0)) for n in range(len(b))]


def legendre_backward(a: Sequence[Poly]) -> list[Poly]:
    """b_n = sum_k (-1)^(n-k) (2k+1)/(2n+1) C(2n+1, n-k) a_k."""
    return [sum((_sign(n - k) * ballot(n, k) * a[k] for k in range(n + 1)), Poly(0))
            for n in range(len(a))]


def legendre_pair(direction: str, seq: Sequence, n_max: int | None = None) -> list[Poly]:
    seq = [s if isinstance(s, Poly) else Poly(s) for s in seq]
    if n_max is not None:
        seq = seq[:n_max + 1]
    if direction == "forward":
        return legendre_forward(seq)
    if direction == "backward":
        return legendre_backward(seq)
    raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")


def scaled_narayana_sequences(n_max: int) -> tuple[list[Poly], list[Poly]]:
    """Polynomial form of the pair a_k = P_k/(x-1)^k, b_k = C(2k,k)/(x-1)^k.

    Both sequences are multiplied by (x-1)^n_max, which the linear transform
    leaves intact, so they stay polynomial.
    """
    u = X - 1
    a = [narayana_b(k) * u ** (n_max - k) for k in range(n_max + 1)]
    b = [comb(2 * k, k) * u ** (n_max - k) for k in range(n_max + 1)]
    return a, b
