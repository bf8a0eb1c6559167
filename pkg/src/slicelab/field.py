"""Exact arithmetic in Q[t] and Q(t), with expansions at t = infinity.

Representation conventions, fixed once and used everywhere:

* scalars are `fractions.Fraction` (exported as `Rational`): arbitrary
  precision, gcd-reduced, positive denominator;
* `Poly` stores a dense tuple of coefficients in ascending order with
  trailing zeros stripped, so the zero polynomial is the empty tuple and
  `degree` of zero is the sentinel -1;
* `RatFunc` stores a numerator/denominator pair of `Poly` that is always
  coprime with monic denominator, so structural equality is semantic
  equality.

The expansion of f at infinity is written f = sum_j c_j t^(-j); the order
`ord_inf(f)` is the least such j with c_j != 0, i.e. deg(den) - deg(num),
and +infinity for f = 0.  `series_coeff(j)` returns c_j exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DivisionByZero

Rational = Fraction


def rational_to_json(q: Rational) -> str:
    return str(q)


def rational_from_json(data) -> Rational:
    if isinstance(data, bool):
        raise ValueError("expected a rational, got a boolean")
    if isinstance(data, (int, str)):
        return Fraction(data)
    raise ValueError(f"cannot decode rational from {data!r}")


def _fmt_term(c: Rational, i: int) -> str:
    if i == 0:
        return str(c)
    var = "t" if i == 1 else f"t^{i}"
    if c == 1:
        return var
    if c == -1:
        return f"-{var}"
    return f"{c}*{var}"


class Poly:
    """Dense univariate polynomial over Q in the variable t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def t(cls, power: int = 1) -> "Poly":
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls((0,) * power + (1,))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree, other.lc
        if self.degree < db:
            return Poly(), self
        q = [Fraction(0)] * (self.degree - db + 1)
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + db] / lb
            q[i] = c
            if c:
                for j, cb in enumerate(other.coeffs):
                    rem[i + j] -= c * cb
        return Poly(q), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero() or self.lc == 1:
            return self
        inv = 1 / self.lc
        return Poly(tuple(c * inv for c in self.coeffs))

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            term = _fmt_term(c, i)
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append("- " + term[1:])
            else:
                parts.append("+ " + term)
        return " ".join(parts)

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be a coefficient array")
        return cls(rational_from_json(c) for c in data)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd in Q[t]; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RatFunc:
    """Rational function over Q, kept coprime with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly((num,)) if isinstance(num, (int, Fraction)) else Poly(num)
        if den is None:
            den = Poly.one()
        elif not isinstance(den, Poly):
            den = Poly((den,)) if isinstance(den, (int, Fraction)) else Poly(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        if den.lc != 1:
            inv = 1 / den.lc
            num = num * inv
            den = den * inv
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        """Skip normalization; caller guarantees coprime + monic den."""
        out = object.__new__(cls)
        out.num, out.den = num, den
        return out

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls._raw(Poly(), Poly.one())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls._raw(Poly.one(), Poly.one())

    @classmethod
    def t(cls, power: int = 1) -> "RatFunc":
        """The monomial t^power as a rational function; power may be negative."""
        if power >= 0:
            return cls._raw(Poly.t(power), Poly.one())
        return cls._raw(Poly.one(), Poly.t(-power))

    @classmethod
    def constant(cls, c) -> "RatFunc":
        return cls(Poly((c,)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == Poly.one()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return RatFunc(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g = poly_gcd(d1, d2)
        if g.degree == 0:
            # coprime monic denominators: the sum is already reduced
            num = n1 * d2 + n2 * d1
            if num.is_zero():
                return RatFunc.zero()
            return RatFunc._raw(num, d1 * d2)
        a, b = d1 // g, d2 // g
        num = n1 * b + n2 * a
        if num.is_zero():
            return RatFunc.zero()
        # any common factor of num and a*b*g must divide g
        g2 = poly_gcd(num, g)
        den = a * b * g
        if g2.degree > 0:
            num, den = num // g2, den // g2
        return RatFunc._raw(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

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
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = poly_gcd(n1, d2)
        if g1.degree > 0:
            n1, d2 = n1 // g1, d2 // g1
        g2 = poly_gcd(n2, d1)
        if g2.degree > 0:
            n2, d1 = n2 // g2, d1 // g2
        # denominators stay monic: gcds are monic and so are d1, d2
        return RatFunc._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("reciprocal of zero")
        num, den = self.den, self.num
        if den.lc != 1:
            inv = 1 / den.lc
            num, den = num * inv, den * inv
        return RatFunc._raw(num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n == 0:
            return RatFunc.one()
        base = self if n > 0 else self.reciprocal()
        n = abs(n)
        out = RatFunc.one()
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
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == Poly.one():
            return repr(self.num)
        num = repr(self.num)
        if self.num.degree > 0:
            num = f"({num})"
        return f"{num}/({self.den!r})"

    def ord_inf(self):
        """Order of vanishing at t = infinity; +inf for the zero function."""
        if self.is_zero():
            return math.inf
        return self.den.degree - self.num.degree

    def poly_part(self) -> Poly:
        """Polynomial part q with ord_inf(self - q) >= 1."""
        return self.num // self.den

    def series_coeff(self, j: int) -> Fraction:
        """Coefficient of t^(-j) in the expansion at infinity."""
        if self.is_zero():
            return Fraction(0)
        j0 = self.den.degree - self.num.degree
        if j < j0:
            return Fraction(0)
        return self._series_prefix(j - j0)[j - j0]

    def _series_prefix(self, m: int) -> list[Fraction]:
        """First m+1 coefficients of rev(num)/rev(den) as a power series."""
        dn, dd = self.num.degree, self.den.degree
        rn = [self.num.coeff(dn - i) for i in range(dn + 1)]
        rd = [self.den.coeff(dd - i) for i in range(dd + 1)]
        inv0 = 1 / rd[0]
        out: list[Fraction] = []
        for i in range(m + 1):
            acc = rn[i] if i < len(rn) else Fraction(0)
            for l in range(1, min(i, dd) + 1):
                acc -= rd[l] * out[i - l]
            out.append(acc * inv0)
        return out

    def series_coeffs(self, jmax: int) -> dict[int, Fraction]:
        """All coefficients c_j of t^(-j) with ord_inf <= j <= jmax."""
        if self.is_zero():
            return {}
        j0 = self.den.degree - self.num.degree
        if jmax < j0:
            return {}
        pref = self._series_prefix(jmax - j0)
        return {j0 + m: c for m, c in enumerate(pref) if c}

    def __call__(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise DivisionByZero(f"pole at t = {x}")
        return self.num(x) / d

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatFunc":
        if isinstance(data, (int, str)):
            return cls(Poly((rational_from_json(data),)))
        if isinstance(data, dict) and set(data) <= {"num", "den"}:
            num = Poly.from_json(data["num"])
            den = Poly.from_json(data.get("den", ["1"]))
            return cls(num, den)
        raise ValueError(f"cannot decode rational function from {data!r}")


T = RatFunc.t()


def rf(value) -> RatFunc:
    """Coerce ints, Fractions and Polys to RatFunc."""
    if isinstance(value, RatFunc):
        return value
    return RatFunc(value)


def all_fractions(values: Iterable) -> Iterator[Fraction]:
    for v in values:
        yield v if isinstance(v, Fraction) else Fraction(v)
