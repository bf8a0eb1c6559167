"""Square matrices over Q(t) with exact arithmetic.

Matrices are immutable row-major tuples of RatFunc entries.  Sizes stay
small (n <= 8 in practice), so products and inverses use straightforward
O(n^3) elimination over the rational-function field; exactness comes from
the normalized RatFunc representation, not from any numeric tolerance.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import SingularMatrix
from .field import Poly, RatFunc, poly_gcd, rf


class MatQt:
    """Immutable n x n matrix over Q(t)."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(rf(e) for e in row) for row in rows)
        n = len(rs)
        if n == 0 or any(len(r) != n for r in rs):
            raise ValueError("matrix must be square and nonempty")
        self.n = n
        self.rows = rs

    @classmethod
    def identity(cls, n: int) -> "MatQt":
        one, zero = RatFunc.one(), RatFunc.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "MatQt":
        zero = RatFunc.zero()
        es = [rf(e) for e in entries]
        return cls([[es[i] if i == j else zero for j in range(len(es))]
                    for i in range(len(es))])

    @classmethod
    def t_power(cls, coweight: Sequence[int]) -> "MatQt":
        """diag(t^mu_1, ..., t^mu_n) for an integer coweight vector."""
        return cls.diagonal([RatFunc.t(int(m)) for m in coweight])

    def __getitem__(self, i: int) -> tuple[RatFunc, ...]:
        return self.rows[i]

    def __matmul__(self, other: "MatQt") -> "MatQt":
        if not isinstance(other, MatQt):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = RatFunc.zero()
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return MatQt(out)

    def __eq__(self, other):
        if not isinstance(other, MatQt):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(repr(e) for e in row) + "]"
                           for row in self.rows)
        return f"[{body}]"

    def scalar_mul(self, c) -> "MatQt":
        c = rf(c)
        return MatQt([[c * e for e in row] for row in self.rows])

    def transpose(self) -> "MatQt":
        return MatQt(list(zip(*self.rows)))

    def is_identity(self) -> bool:
        one, zero = RatFunc.one(), RatFunc.zero()
        return all(e == (one if i == j else zero)
                   for i, row in enumerate(self.rows) for j, e in enumerate(row))

    def det(self) -> RatFunc:
        """Determinant by elimination with row pivoting, exact over Q(t)."""
        n = self.n
        a = [list(row) for row in self.rows]
        det = RatFunc.one()
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return RatFunc.zero()
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            det = det * a[col][col]
            inv = a[col][col].reciprocal()
            for r in range(col + 1, n):
                if a[r][col]:
                    f = a[r][col] * inv
                    for c in range(col, n):
                        if a[col][c]:
                            a[r][c] = a[r][c] - f * a[col][c]
        return det

    def inv(self) -> "MatQt":
        """Exact inverse by Gauss-Jordan elimination over Q(t)."""
        n = self.n
        a = [list(row) for row in self.rows]
        b = [list(row) for row in MatQt.identity(n).rows]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                raise SingularMatrix("matrix is singular over Q(t)")
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                b[col], b[piv] = b[piv], b[col]
            inv = a[col][col].reciprocal()
            a[col] = [inv * e for e in a[col]]
            b[col] = [inv * e for e in b[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return MatQt(b)

    def denominator_lcm(self) -> Poly:
        """Monic lcm of all entry denominators."""
        acc = Poly.one()
        for row in self.rows:
            for e in row:
                d = e.den
                if d.degree > 0:
                    acc = (acc * d) // poly_gcd(acc, d)
        return acc.monic()

    def cleared(self) -> tuple["MatQt", Poly]:
        """Multiply by the denominator lcm; returns (polynomial matrix, scalar)."""
        c = self.denominator_lcm()
        if c == Poly.one():
            return self, c
        cr = RatFunc(c)
        return MatQt([[e * cr for e in row] for row in self.rows]), c

    def is_polynomial(self) -> bool:
        return all(e.is_polynomial() for row in self.rows for e in row)

    def to_json(self) -> list:
        return [[e.to_json() for e in row] for row in self.rows]

    @classmethod
    def from_json(cls, data) -> "MatQt":
        if not isinstance(data, list):
            raise ValueError("matrix JSON must be a nested array")
        return cls([[RatFunc.from_json(e) for e in row] for row in data])
