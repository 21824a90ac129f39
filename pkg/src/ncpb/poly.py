"""Exact polynomials in x, y, z with Python integer coefficients."""
from __future__ import annotations

import re
from typing import Mapping

from .errors import CapacityError, ParseError

MAX_EXPONENT = 4096
VARS = ("x", "y", "z")

Monomial = tuple[int, int, int]


class Poly:
    """Immutable sparse polynomial; zero coefficients are never stored.

    Terms print in graded lexicographic order, lowest degree first, so that
    ``str`` is a canonical, diff-friendly rendering::

        >>> str((1 + X) ** 2)
        '1 + 2*x + x^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | int = 0):
        if isinstance(terms, int):
            terms = {(0, 0, 0): terms}
        clean = {}
        for mono, c in terms.items():
            if c:
                if max(mono) > MAX_EXPONENT:
                    raise CapacityError(f"exponent {max(mono)} exceeds {MAX_EXPONENT}")
                if min(mono) < 0:
                    raise ValueError(f"negative exponent in {mono}")
                clean[tuple(mono)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def var(cls, name: str) -> "Poly":
        mono = [0, 0, 0]
        mono[VARS.index(name)] = 1
        return cls({tuple(mono): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, ex=0, ey=0, ez=0) -> int:
        return self._terms.get((ex, ey, ez), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == (0, 0, 0) for m in self._terms)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degrees = {sum(m) for m in self._terms}
        if d is not None:
            return degrees <= {d}
        return len(degrees) <= 1

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Poly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for (a, b, c), u in self._terms.items():
            for (d, e, f), v in other._terms.items():
                m = (a + d, b + e, c + f)
                out[m] = out.get(m, 0) + u * v
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        if k and self.degree() * k > 3 * MAX_EXPONENT:
            raise CapacityError(f"power {k} of a degree-{self.degree()} polynomial")
        result, base = Poly(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __call__(self, x: int = 0, y: int = 0, z: int = 0) -> int:
        return self.evaluate(x, y, z)

    def evaluate(self, x: int = 0, y: int = 0, z: int = 0) -> int:
        return sum(c * x ** a * y ** b * z ** d for (a, b, d), c in self._terms.items())

    def substitute_x(self, value: "Poly | int") -> "Poly":
        """Replace x by ``value`` (a polynomial), keeping y and z."""
        value = Poly._coerce(value)
        out = Poly(0)
        for (a, b, c), u in self._terms.items():
            out = out + Poly({(0, b, c): u}) * value ** a
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(),
                      key=lambda t: (sum(t[0]), -t[0][0], -t[0][1], -t[0][2]))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, mono) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    _TERM = re.compile(r"^(\d+)?((?:\*?[xyz](?:\^\d+)?)*)$")

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Inverse of ``str`` for the canonical rendering (and close variants)."""
        src = text.replace(" ", "")
        if not src:
            raise ParseError("empty polynomial", 0)
        tokens = re.findall(r"[+-]?[^+-]+", src)
        if "".join(tokens) != src:
            raise ParseError(f"cannot parse polynomial {text!r}", 0)
        out: dict[Monomial, int] = {}
        for tok in tokens:
            sign = -1 if tok[0] == "-" else 1
            body = tok.lstrip("+-")
            m = cls._TERM.match(body)
            if not m or (m.group(1) is None and not m.group(2)):
                raise ParseError(f"bad term {tok!r}", src.find(tok))
            coeff = int(m.group(1)) if m.group(1) else 1
            mono = [0, 0, 0]
            for v, e in re.findall(r"([xyz])(?:\^(\d+))?", m.group(2)):
                mono[VARS.index(v)] += int(e) if e else 1
            key = tuple(mono)
            out[key] = out.get(key, 0) + sign * coeff
        return cls(out)


ZERO = Poly(0)
ONE = Poly(1)
X = Poly.var("x")
Y = Poly.var("y")
Z = Poly.var("z")
