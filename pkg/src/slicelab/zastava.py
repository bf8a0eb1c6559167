"""The open Zastava chart on the slice of a negated positive coroot.

A positive coroot of PGL_n is an interval of simple coroots r1..r2 of
height k = r2 - r1 + 1.  The chart takes coordinates (p, e, b_1..b_{k-1},
g_1..g_{k-1}) with e invertible to the n x n matrix that is the identity
outside the (k+1) x (k+1) block in rows/columns r1..r2+1 and carries

        [ 0    0    ...  0        e                ]
        [ 0    1    ...  0        b_{k-1}          ]
        [ ...       ...           ...              ]
        [ 0    0    ...  1        b_1              ]
        [ -1/e -g_{k-1} ... -g_1  t - p - sum(b*g) ]

inside the block.  Its Gauss coweight is -alpha: the vector with -1 in
position r1 and +1 in position r2+1.  `translate` is the abelian
translation action in these coordinates: g_i += v_i and p += v_k * e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InternalError, InvalidCoordinate, NotInChart
from .field import Poly, RatFunc, rational_from_json
from .gauss import (Coweight, GaussForm, SlicePoint, coweights_pgl_equal,
                    gauss_decompose)
from .matrix import MatQt


@dataclass(frozen=True)
class CorootInterval:
    """The positive coroot alpha_{r1} + ... + alpha_{r2} of PGL_n."""

    r1: int
    r2: int
    n: int

    def __post_init__(self):
        if not (1 <= self.r1 <= self.r2 <= self.n - 1):
            raise ValueError(
                f"need 1 <= r1 <= r2 <= n-1, got r1={self.r1}, r2={self.r2}, "
                f"n={self.n}")

    @property
    def k(self) -> int:
        """Height of the coroot; the chart block is (k+1) x (k+1)."""
        return self.r2 - self.r1 + 1

    def neg_coweight(self) -> Coweight:
        """The coweight -alpha: -1 at position r1, +1 at position r2+1."""
        mu = [0] * self.n
        mu[self.r1 - 1] = -1
        mu[self.r2] = 1
        return tuple(mu)

    def pos_coweight(self) -> Coweight:
        return tuple(-m for m in self.neg_coweight())

    def block_range(self) -> range:
        """0-indexed rows/columns of the chart block."""
        return range(self.r1 - 1, self.r2 + 1)

    @classmethod
    def all_intervals(cls, n: int) -> Iterator["CorootInterval"]:
        for r1 in range(1, n):
            for r2 in range(r1, n):
                yield cls(r1, r2, n)

    def to_json(self) -> dict:
        return {"r1": self.r1, "r2": self.r2, "n": self.n}

    @classmethod
    def from_json(cls, data) -> "CorootInterval":
        return cls(int(data["r1"]), int(data["r2"]), int(data["n"]))


@dataclass(frozen=True)
class ZastavaPoint:
    """Chart coordinates; b and g have length k-1, e is invertible."""

    alpha: CorootInterval
    p: Fraction
    e: Fraction
    b: tuple[Fraction, ...] = ()
    g: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "e", Fraction(self.e))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        object.__setattr__(self, "g", tuple(Fraction(x) for x in self.g))
        if self.e == 0:
            raise InvalidCoordinate("e must be invertible (nonzero)")
        if len(self.b) != self.alpha.k - 1 or len(self.g) != self.alpha.k - 1:
            raise ValueError(
                f"b and g must have length k-1 = {self.alpha.k - 1}")

    def to_json(self) -> dict:
        return {"alpha": self.alpha.to_json(), "p": str(self.p),
                "e": str(self.e), "b": [str(x) for x in self.b],
                "g": [str(x) for x in self.g]}

    @classmethod
    def from_json(cls, data) -> "ZastavaPoint":
        return cls(CorootInterval.from_json(data["alpha"]),
                   rational_from_json(data["p"]),
                   rational_from_json(data["e"]),
                   tuple(rational_from_json(x) for x in data.get("b", [])),
                   tuple(rational_from_json(x) for x in data.get("g", [])))


def _chart_block(z: ZastavaPoint) -> MatQt:
    k = z.alpha.k
    zero, one = RatFunc.zero(), RatFunc.one()
    rows = [[zero] * (k + 1) for _ in range(k + 1)]
    rows[0][k] = RatFunc.constant(z.e)
    for i in range(1, k):
        rows[i][i] = one
        rows[i][k] = RatFunc.constant(z.b[k - 1 - i])
    rows[k][0] = RatFunc.constant(-1 / z.e)
    for j in range(1, k):
        rows[k][j] = RatFunc.constant(-z.g[k - 1 - j])
    corner = Fraction(z.p) + sum((bi * gi for bi, gi in zip(z.b, z.g)),
                                 Fraction(0))
    rows[k][k] = RatFunc(Poly((-corner, 1)))
    return MatQt(rows)


def zastava_to_matrix(z: ZastavaPoint) -> SlicePoint:
    """Embed the chart block into the identity and wrap as a slice point.

    The Gauss factorization is assembled from the block's factorization:
    for a block-diagonal matrix the unique Gauss factors are themselves
    block diagonal, so this is exact, not a shortcut formula.
    """
    alpha = z.alpha
    n, off, k = alpha.n, alpha.r1 - 1, alpha.k
    block = _chart_block(z)
    bgf = gauss_decompose(block)

    def embed(m: MatQt) -> MatQt:
        full = [list(row) for row in MatQt.identity(n).rows]
        for i in range(k + 1):
            for j in range(k + 1):
                full[off + i][off + j] = m[i][j]
        return MatQt(full)

    x = embed(block)
    mu = [0] * n
    for i, mi in enumerate(bgf.mu):
        mu[off + i] = mi
    mu = tuple(mu)
    if mu != alpha.neg_coweight():
        raise InternalError(f"chart block decomposed with coweight {bgf.mu}")
    gf = GaussForm(embed(bgf.U), embed(bgf.H), mu, embed(bgf.L))
    return SlicePoint(x, mu, gf)


def _constant_entry(e: RatFunc, what: str) -> Fraction:
    if not e.is_polynomial() or e.num.degree > 0:
        raise NotInChart(f"{what} must be a constant, got {e!r}")
    return e.num.coeff(0)


def matrix_to_zastava(y: SlicePoint, alpha: CorootInterval) -> ZastavaPoint:
    """Invert the chart on its image; raises NotInChart off the image."""
    if y.n != alpha.n:
        raise ValueError("slice point and coroot live in different PGL_n")
    if not coweights_pgl_equal(y.mu, alpha.neg_coweight()):
        raise NotInChart(f"coweight {y.mu} is not -alpha for {alpha}")
    n, off, k = alpha.n, alpha.r1 - 1, alpha.k
    x = y.x
    one, zero = RatFunc.one(), RatFunc.zero()
    block = alpha.block_range()
    for i in range(n):
        for j in range(n):
            if i in block and j in block:
                continue
            expect = one if i == j else zero
            if x[i][j] != expect:
                raise NotInChart(
                    f"entry ({i + 1},{j + 1}) outside the chart block "
                    f"must be {expect!r}, got {x[i][j]!r}")

    e = _constant_entry(x[off][off + k], "corner entry e")
    if e == 0:
        raise NotInChart("corner entry e vanishes")
    for j in range(k):
        if x[off][off + j] != zero:
            raise NotInChart(f"top block row must vanish before e, entry "
                             f"{j + 1} is {x[off][off + j]!r}")
    b = []
    for i in range(1, k):
        for j in range(k):
            expect = one if i == j else zero
            if x[off + i][off + j] != expect:
                raise NotInChart(
                    f"block entry ({i + 1},{j + 1}) must be {expect!r}")
        b.append(_constant_entry(x[off + i][off + k], f"block entry b"))
    b = tuple(reversed(b))          # row 2 carries b_{k-1}, row k carries b_1

    if x[off + k][off] != RatFunc.constant(Fraction(-1, 1) / e):
        raise NotInChart("lower-left block entry must be -1/e")
    g = []
    for j in range(1, k):
        g.append(-_constant_entry(x[off + k][off + j], "block entry g"))
    g = tuple(reversed(g))          # column 2 carries g_{k-1}

    corner = x[off + k][off + k]
    if not corner.is_polynomial() or corner.num.degree != 1 or \
            corner.num.lc != 1:
        raise NotInChart(f"corner must be monic of degree 1, got {corner!r}")
    p = -corner.num.coeff(0) - sum((bi * gi for bi, gi in zip(b, g)),
                                   Fraction(0))
    return ZastavaPoint(alpha, p, e, b, g)


def translate(z: ZastavaPoint, v: Sequence) -> ZastavaPoint:
    """Translate chart coordinates: g_i += v_i for i < k, p += v_k * e."""
    v = [Fraction(x) for x in v]
    if len(v) != z.alpha.k:
        raise ValueError(f"translation vector must have length k = {z.alpha.k}")
    g = tuple(gi + vi for gi, vi in zip(z.g, v))
    return ZastavaPoint(z.alpha, z.p + v[-1] * z.e, z.e, z.b, g)
