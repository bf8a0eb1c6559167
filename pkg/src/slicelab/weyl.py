"""Localized Weyl algebra quantizing a height-k chart.

Generators p, e (invertible, so net integer powers), b_i, g_i (i < k) and
the central parameter hbar, subject to

    e * e^-1 = e^-1 * e = 1,
    [p, e^s] = s * hbar * e^s      (s = +-1),
    [b_i, g_i] = hbar,

with every other pair of generators commuting.  Coefficients live in
Q[hbar].  Elements are kept in PBW normal form: hbar-power, then e-power,
then p-power, then b-powers, then g-powers, encoded as a dict from
(h, a, m, bs, gs) to a rational coefficient.

Normal ordering uses two closed-form rewrites:

    p^m * e^a        = e^a * (p + a*hbar)^m,
    g^d * b^c        = sum_j (-1)^j j! C(c,j) C(d,j) hbar^j b^(c-j) g^(d-j).

The semiclassical limit of a commutator (its hbar-linear part with hbar
then set to 0) reproduces the chart's Poisson bracket on symbols.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from types import SimpleNamespace
from typing import Optional

from .coordpoly import CoordPoly
from .field import rational_from_json

NCKey = tuple[int, int, int, tuple[int, ...], tuple[int, ...]]


class NCPoly:
    """Element of the localized Weyl algebra in PBW normal form."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict[NCKey, Fraction] | None = None):
        if k < 1:
            raise ValueError("height k must be >= 1")
        self.k = k
        self.terms: dict[NCKey, Fraction] = {
            key: c for key, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, k: int) -> "NCPoly":
        return cls(k)

    @classmethod
    def constant(cls, k: int, c) -> "NCPoly":
        c = Fraction(c)
        key = (0, 0, 0, (0,) * (k - 1), (0,) * (k - 1))
        return cls(k, {key: c} if c else {})

    @classmethod
    def monomial(cls, k: int, h: int = 0, a: int = 0, m: int = 0,
                 bs: tuple[int, ...] | None = None,
                 gs: tuple[int, ...] | None = None, coeff=1) -> "NCPoly":
        bs = tuple(bs) if bs is not None else (0,) * (k - 1)
        gs = tuple(gs) if gs is not None else (0,) * (k - 1)
        if len(bs) != k - 1 or len(gs) != k - 1:
            raise ValueError("exponent vectors must have length k-1")
        if h < 0 or m < 0 or any(x < 0 for x in bs) or any(x < 0 for x in gs):
            raise ValueError("only the e-exponent may be negative")
        return cls(k, {(int(h), int(a), int(m), bs, gs): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            if other.k != self.k:
                raise ValueError("mixing algebras of different heights")
            return other
        if isinstance(other, (int, Fraction)):
            return NCPoly.constant(self.k, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return NCPoly(self.k, out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.k, {key: -c for key, c in self.terms.items()})

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
        out: dict[NCKey, Fraction] = {}
        for key1, c1 in self.terms.items():
            for key2, c2 in other.terms.items():
                _term_mul(self.k, key1, c1, key2, c2, out)
        return NCPoly(self.k, out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers only for the e generator")
        out = NCPoly.constant(self.k, 1)
        for _ in range(n):
            out = out * self
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
            h, a, m, bs, gs = key
            c = self.terms[key]
            factors = []
            if h:
                factors.append(f"hbar^{h}" if h != 1 else "hbar")
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
        """Max total generator degree |a| + m + sum(bs) + sum(gs)
        (hbar does not count); -1 for zero."""
        if not self.terms:
            return -1
        return max(abs(a) + m + sum(bs) + sum(gs)
                   for _, a, m, bs, gs in self.terms)

    def loop_weight(self) -> Optional[int]:
        """Common weight under the grading hbar, p, b_i, e -> 1 and
        g_i -> 0 (so e^-1 -> -1); None when inhomogeneous or zero."""
        weights = {h + a + m + sum(bs)
                   for h, a, m, bs, _ in self.terms}
        if len(weights) == 1:
            return weights.pop()
        return None

    def to_json(self) -> list:
        out = []
        for key in sorted(self.terms):
            h, a, m, bs, gs = key
            out.append({"hbar": h, "e": a, "p": m, "b": list(bs),
                        "g": list(gs), "coeff": str(self.terms[key])})
        return out

    @classmethod
    def from_json(cls, data, k: Optional[int] = None) -> "NCPoly":
        if not isinstance(data, list):
            raise ValueError("Weyl element JSON must be a term list")
        if k is None:
            if not data:
                raise ValueError("cannot infer the height of an empty "
                                 "term list; pass k explicitly")
            k = len(data[0]["b"]) + 1
        terms: dict[NCKey, Fraction] = {}
        for item in data:
            key = (int(item.get("hbar", 0)), int(item.get("e", 0)),
                   int(item.get("p", 0)), tuple(int(x) for x in item["b"]),
                   tuple(int(x) for x in item["g"]))
            terms[key] = terms.get(key, Fraction(0)) + \
                rational_from_json(item["coeff"])
        return cls(k, terms)


def _term_mul(k: int, key1: NCKey, c1: Fraction, key2: NCKey, c2: Fraction,
              acc: dict[NCKey, Fraction]) -> None:
    """Normal-ordered product of two PBW monomials, accumulated into acc."""
    h1, a1, m1, bs1, gs1 = key1
    h2, a2, m2, bs2, gs2 = key2
    base = c1 * c2
    # p^m1 moves right across e^a2: p^m1 e^a2 = e^a2 (p + a2*hbar)^m1
    p_terms = []
    for l in range(m1 + 1):
        p_terms.append((l, m1 - l + m2, base * comb(m1, l) * a2 ** l))
    # per index i: g_i^{d} from the left factor crosses b_i^{c} from the right
    swaps = [(0, tuple(x + y for x, y in zip(bs1, bs2)),
              tuple(x + y for x, y in zip(gs1, gs2)), Fraction(1))]
    for i in range(k - 1):
        d, c = gs1[i], bs2[i]
        if d == 0 or c == 0:
            continue
        new_swaps = []
        for extra_h, bvec, gvec, f in swaps:
            for j in range(min(d, c) + 1):
                factor = Fraction((-1) ** j * factorial(j) *
                                  comb(c, j) * comb(d, j))
                nb = list(bvec)
                ng = list(gvec)
                nb[i] -= j
                ng[i] -= j
                new_swaps.append((extra_h + j, tuple(nb), tuple(ng),
                                  f * factor))
        swaps = new_swaps
    a = a1 + a2
    for dl, m, cl in p_terms:
        if cl == 0:
            continue
        for extra_h, bvec, gvec, f in swaps:
            key = (h1 + h2 + dl + extra_h, a, m, bvec, gvec)
            acc[key] = acc.get(key, Fraction(0)) + cl * f


def generators(k: int) -> SimpleNamespace:
    """Namespace with hbar, p, e, einv, b (tuple), g (tuple), one."""

    def unit_vec(i):
        v = [0] * (k - 1)
        v[i] = 1
        return tuple(v)

    return SimpleNamespace(
        hbar=NCPoly.monomial(k, h=1),
        p=NCPoly.monomial(k, m=1),
        e=NCPoly.monomial(k, a=1),
        einv=NCPoly.monomial(k, a=-1),
        b=tuple(NCPoly.monomial(k, bs=unit_vec(i)) for i in range(k - 1)),
        g=tuple(NCPoly.monomial(k, gs=unit_vec(i)) for i in range(k - 1)),
        one=NCPoly.constant(k, 1),
    )


def nc_mul(x: NCPoly, y: NCPoly) -> NCPoly:
    return x * y


def nc_comm(x: NCPoly, y: NCPoly) -> NCPoly:
    return x * y - y * x


def symbol(x: NCPoly) -> CoordPoly:
    """Set hbar = 0 and read the element as a commutative function."""
    out: dict = {}
    for (h, a, m, bs, gs), c in x.terms.items():
        if h == 0:
            out[(a, m, bs, gs)] = c
    return CoordPoly(x.k, out)


def semiclassical(x: NCPoly, y: NCPoly) -> CoordPoly:
    """hbar-linear part of [x, y] with hbar set to 0 afterwards.

    For hbar-free x, y this is the symbol of [x, y]/hbar at hbar = 0 and
    matches poisson_bracket(symbol(x), symbol(y))."""
    comm = nc_comm(x, y)
    out: dict = {}
    for (h, a, m, bs, gs), c in comm.terms.items():
        if h == 1:
            out[(a, m, bs, gs)] = c
    return CoordPoly(x.k, out)
