"""Coordinate functions on a height-k Zastava chart and their bracket.

A `CoordPoly` is a Q-linear combination of monomials

    e^a * p^m * b_1^{c_1} ... b_{k-1}^{c_{k-1}} * g_1^{d_1} ... g_{k-1}^{d_{k-1}}

where the net e-exponent a may be negative (e is invertible on the chart)
and all other exponents are nonnegative.  Terms live in a dict keyed by
the exponent data, so equality of normal forms is dict equality.

The bracket is the unique biderivation with {p, e} = e (hence
{p, e^-1} = -e^-1) and {b_i, g_j} = delta_ij, all other generator pairs
commuting.  Concretely

    {f, g} = e * (df/dp * dg/de - df/de * dg/dp)
             + sum_i (df/db_i * dg/dg_i - df/dg_i * dg/db_i),

where d/de acts on the net exponent (valid for negative powers).
"""

from __future__ import annotations

from fractions import Fraction
from types import SimpleNamespace
from typing import Iterator

Key = tuple[int, int, tuple[int, ...], tuple[int, ...]]   # (a, m, bs, gs)


class CoordPoly:
    """Polynomial in p, b_i, g_i and the invertible e on a height-k chart."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict[Key, Fraction] | None = None):
        if k < 1:
            raise ValueError("height k must be >= 1")
        self.k = k
        self.terms: dict[Key, Fraction] = {
            key: c for key, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, k: int) -> "CoordPoly":
        return cls(k)

    @classmethod
    def constant(cls, k: int, c) -> "CoordPoly":
        c = Fraction(c)
        key = (0, 0, (0,) * (k - 1), (0,) * (k - 1))
        return cls(k, {key: c} if c else {})

    @classmethod
    def monomial(cls, k: int, a: int = 0, m: int = 0,
                 bs: tuple[int, ...] | None = None,
                 gs: tuple[int, ...] | None = None, coeff=1) -> "CoordPoly":
        bs = tuple(bs) if bs is not None else (0,) * (k - 1)
        gs = tuple(gs) if gs is not None else (0,) * (k - 1)
        if len(bs) != k - 1 or len(gs) != k - 1:
            raise ValueError("exponent vectors must have length k-1")
        if m < 0 or any(x < 0 for x in bs) or any(x < 0 for x in gs):
            raise ValueError("only the e-exponent may be negative")
        return cls(k, {(int(a), int(m), bs, gs): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, CoordPoly):
            if other.k != self.k:
                raise ValueError("mixing charts of different heights")
            return other
        if isinstance(other, (int, Fraction)):
            return CoordPoly.constant(self.k, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return CoordPoly(self.k, out)

    __radd__ = __add__

    def __neg__(self):
        return CoordPoly(self.k, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Key, Fraction] = {}
        for (a1, m1, b1, g1), c1 in self.terms.items():
            for (a2, m2, b2, g2), c2 in other.terms.items():
                key = (a1 + a2, m1 + m2,
                       tuple(x + y for x, y in zip(b1, b2)),
                       tuple(x + y for x, y in zip(g1, g2)))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return CoordPoly(self.k, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers only for the e generator")
        out = CoordPoly.constant(self.k, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            a, m, bs, gs = key
            c = self.terms[key]
            factors = []
            if a:
                factors.append(f"e^{a}" if a != 1 else "e")
            if m:
                factors.append(f"p^{m}" if m != 1 else "p")
            for i, x in enumerate(bs):
                if x:
                    factors.append(f"b{i + 1}^{x}" if x != 1 else f"b{i + 1}")
            for i, x in enumerate(gs):
                if x:
                    factors.append(f"g{i + 1}^{x}" if x != 1 else f"g{i + 1}")
            mono = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(mono)
            elif c == -1 and factors:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}" if factors else str(c))
        return " + ".join(parts).replace("+ -", "- ")

    def degree(self) -> int:
        """Max total degree |a| + m + sum(bs) + sum(gs); -1 for zero."""
        if not self.terms:
            return -1
        return max(abs(a) + m + sum(bs) + sum(gs)
                   for a, m, bs, gs in self.terms)

    def evaluate(self, p, e, b=(), g=()) -> Fraction:
        p, e = Fraction(p), Fraction(e)
        b = [Fraction(x) for x in b]
        g = [Fraction(x) for x in g]
        total = Fraction(0)
        for (a, m, bs, gs), c in self.terms.items():
            val = c * e ** a * p ** m
            for x, exp in zip(b, bs):
                val *= x ** exp
            for x, exp in zip(g, gs):
                val *= x ** exp
            total += val
        return total

    # --- partial derivatives -------------------------------------------

    def d_dp(self) -> "CoordPoly":
        out = {}
        for (a, m, bs, gs), c in self.terms.items():
            if m:
                out[(a, m - 1, bs, gs)] = c * m
        return CoordPoly(self.k, out)

    def d_de(self) -> "CoordPoly":
        out = {}
        for (a, m, bs, gs), c in self.terms.items():
            if a:
                out[(a - 1, m, bs, gs)] = c * a
        return CoordPoly(self.k, out)

    def d_db(self, i: int) -> "CoordPoly":
        out = {}
        for (a, m, bs, gs), c in self.terms.items():
            if bs[i]:
                nb = list(bs)
                nb[i] -= 1
                out[(a, m, tuple(nb), gs)] = c * bs[i]
        return CoordPoly(self.k, out)

    def d_dg(self, i: int) -> "CoordPoly":
        out = {}
        for (a, m, bs, gs), c in self.terms.items():
            if gs[i]:
                ng = list(gs)
                ng[i] -= 1
                out[(a, m, bs, tuple(ng))] = c * gs[i]
        return CoordPoly(self.k, out)


def generators(k: int) -> SimpleNamespace:
    """Namespace with p, e, einv, b (tuple), g (tuple), one for height k."""
    zeros = (0,) * (k - 1)

    def unit_vec(i):
        v = [0] * (k - 1)
        v[i] = 1
        return tuple(v)

    return SimpleNamespace(
        p=CoordPoly.monomial(k, m=1),
        e=CoordPoly.monomial(k, a=1),
        einv=CoordPoly.monomial(k, a=-1),
        b=tuple(CoordPoly.monomial(k, bs=unit_vec(i)) for i in range(k - 1)),
        g=tuple(CoordPoly.monomial(k, gs=unit_vec(i)) for i in range(k - 1)),
        one=CoordPoly.constant(k, 1),
    )


def poisson_bracket(f: CoordPoly, g: CoordPoly) -> CoordPoly:
    """{f, g} for the bracket with {p, e} = e and {b_i, g_i} = 1."""
    if f.k != g.k:
        raise ValueError("mixing charts of different heights")
    e = CoordPoly.monomial(f.k, a=1)
    out = e * (f.d_dp() * g.d_de() - f.d_de() * g.d_dp())
    for i in range(f.k - 1):
        out = out + (f.d_db(i) * g.d_dg(i) - f.d_dg(i) * g.d_db(i))
    return out


def monomials_upto(k: int, maxdeg: int) -> Iterator[CoordPoly]:
    """All monomials (coefficient 1) of total degree <= maxdeg,
    counting |e-exponent| + p-exponent + b-exponents + g-exponents."""

    def vectors(length: int, budget: int):
        if length == 0:
            yield ()
            return
        for head in range(budget + 1):
            for tail in vectors(length - 1, budget - head):
                yield (head,) + tail

    for a in range(-maxdeg, maxdeg + 1):
        rest = maxdeg - abs(a)
        for m in range(rest + 1):
            for bs in vectors(k - 1, rest - m):
                left = rest - m - sum(bs)
                for gs in vectors(k - 1, left):
                    yield CoordPoly.monomial(k, a=a, m=m, bs=bs, gs=gs)
