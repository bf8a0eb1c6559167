"""Multiplication, splitting and the translation action on slices.

The constructions all live on slice points of PGL_n.  For a coroot
interval alpha (height k) the two moment-type vectors read Fourier modes
of the Gauss U-factor at infinity:

* phi_alpha: first modes of column r2+1, rows r2 down to r1 -- on a chart
  point this is (b_1, ..., b_{k-1}, e);
* zeta_alpha: first modes of row r1 at columns r1+1..r2, then the second
  mode at column r2+1 -- on a chart point (g_{k-1} e, ..., g_1 e,
  p e + e * sum(b_i g_i)).

Both only see the U-factor, so they extend from chart points to every
slice point.  Where the last phi-component is invertible, xi_alpha solves
the chart coordinates back out, split_F peels a chart factor off a slice
point, and multiply projects a product of slice points back into a slice.
These are the two directions of the statement that multiplication from
the chart locus and splitting are mutually inverse.

The translation action act(v, y) multiplies by the unipotent lower block
matrix with bottom row (-v_k, ..., -v_1, 1) and reprojects; on chart
points it is exactly `translate` in coordinates.  The sign is fixed by
that compatibility: the exponential of the v-flow, not its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotInOpenLocus
from .field import RatFunc, rational_from_json
from .gauss import (Coweight, GaussForm, SlicePoint, coweight, coweight_add,
                    project_pi)
from .matrix import MatQt
from .zastava import CorootInterval, ZastavaPoint, zastava_to_matrix


def shift_point(nu: Sequence[int]) -> SlicePoint:
    """The diagonal point diag(t^nu) of the slice attached to nu."""
    mu = coweight(nu)
    n = len(mu)
    x = MatQt.t_power(mu)
    ident = MatQt.identity(n)
    return SlicePoint(x, mu, GaussForm(ident, ident, mu, ident))


@dataclass(frozen=True)
class MomentVector:
    """Length-k vector of rationals attached to a coroot interval."""

    alpha: CorootInterval
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values",
                           tuple(Fraction(v) for v in self.values))
        if len(self.values) != self.alpha.k:
            raise ValueError(f"expected {self.alpha.k} components")

    def to_json(self) -> dict:
        return {"alpha": self.alpha.to_json(),
                "values": [str(v) for v in self.values]}

    @classmethod
    def from_json(cls, data) -> "MomentVector":
        return cls(CorootInterval.from_json(data["alpha"]),
                   tuple(rational_from_json(v) for v in data["values"]))


def _check_compatible(y: SlicePoint, alpha: CorootInterval) -> None:
    if y.n != alpha.n:
        raise ValueError("slice point and coroot live in different PGL_n")


def phi_alpha(y: SlicePoint, alpha: CorootInterval) -> MomentVector:
    """First Fourier modes of U[.][r2+1], read from row r2 up to row r1."""
    _check_compatible(y, alpha)
    U = y.gauss.U
    r1, r2, k = alpha.r1, alpha.r2, alpha.k
    values = tuple(U[r2 - i][r2].series_coeff(1) for i in range(1, k + 1))
    return MomentVector(alpha, values)


def zeta_alpha(y: SlicePoint, alpha: CorootInterval) -> MomentVector:
    """First modes of U[r1][r1+1..r2], then the second mode of U[r1][r2+1]."""
    _check_compatible(y, alpha)
    U = y.gauss.U
    r1, r2, k = alpha.r1, alpha.r2, alpha.k
    values = [U[r1 - 1][r1 - 1 + i].series_coeff(1) for i in range(1, k)]
    values.append(U[r1 - 1][r2].series_coeff(2))
    return MomentVector(alpha, tuple(values))


def chi_alpha(alpha: CorootInterval) -> MomentVector:
    """The regular character level (0, ..., 0, 1)."""
    return MomentVector(alpha, (Fraction(0),) * (alpha.k - 1) + (Fraction(1),))


def xi_alpha(y: SlicePoint, alpha: CorootInterval) -> ZastavaPoint:
    """Solve chart coordinates from the moment data.

    Needs the last phi-component invertible; raises NotInOpenLocus when it
    vanishes.  Components: b_i = phi_i, e = phi_k, g_i = zeta_{k-i}/phi_k,
    p = (zeta_k - sum_{i<k} phi_{k-i} zeta_i)/phi_k.
    """
    phi = phi_alpha(y, alpha).values
    zeta = zeta_alpha(y, alpha).values
    k = alpha.k
    e = phi[k - 1]
    if e == 0:
        raise NotInOpenLocus("the last phi-component vanishes; the point "
                             "has no chart factor")
    b = phi[:k - 1]
    g = tuple(zeta[k - 1 - i] / e for i in range(1, k))
    p = (zeta[k - 1] - sum((phi[k - 1 - i] * zeta[i - 1]
                            for i in range(1, k)), Fraction(0))) / e
    return ZastavaPoint(alpha, p, e, b, g)


def multiply(y1: SlicePoint, y2: SlicePoint) -> SlicePoint:
    """Project the matrix product back into the slice of the summed
    coweights; raises DecompositionFails if the product leaves the big
    cell (callers resample in randomized runs)."""
    if y1.n != y2.n:
        raise ValueError("slice points live in different PGL_n")
    target = coweight_add(y1.mu, y2.mu)
    point, _, _ = project_pi(y1.x @ y2.x, target)
    return point


@dataclass(frozen=True)
class SplitPair:
    """Result of peeling a chart factor off a slice point."""

    zastava: ZastavaPoint
    rest: SlicePoint

    def to_json(self) -> dict:
        return {"zastava": self.zastava.to_json(),
                "rest": self.rest.to_json()}


def split_F(y: SlicePoint, alpha: CorootInterval) -> SplitPair:
    """Split y into a chart point and a slice point of mu + alpha.

    The chart factor is xi_alpha(y); the rest is the projection of
    (chart factor)^-1 * y.  multiply o split_F and split_F o multiply are
    the identity on their respective domains.
    """
    z = xi_alpha(y, alpha)
    zmat = zastava_to_matrix(z)
    target = coweight_add(y.mu, alpha.pos_coweight())
    rest, _, _ = project_pi(zmat.x.inv() @ y.x, target)
    return SplitPair(z, rest)


def translation_matrix(v: Sequence, alpha: CorootInterval) -> MatQt:
    """Unipotent lower block matrix of the translation flow at time v.

    Identity outside the alpha-block; inside, identity except the bottom
    row (-v_k, ..., -v_1, 1).
    """
    v = [Fraction(x) for x in v]
    if len(v) != alpha.k:
        raise ValueError(f"translation vector must have length k = {alpha.k}")
    n, off, k = alpha.n, alpha.r1 - 1, alpha.k
    rows = [list(row) for row in MatQt.identity(n).rows]
    for j in range(k):
        rows[off + k][off + j] = RatFunc.constant(-v[k - 1 - j])
    return MatQt(rows)


def act(v: Sequence, y: SlicePoint, alpha: CorootInterval) -> SlicePoint:
    """Translation action on the slice: multiply by the flow matrix and
    reproject.  Fixes the coweight; on chart points equals `translate`."""
    _check_compatible(y, alpha)
    point, _, _ = project_pi(translation_matrix(v, alpha) @ y.x, y.mu)
    return point


def in_nalpha_group(u: MatQt, alpha: CorootInterval) -> bool:
    """Membership in the polynomial unipotent upper group whose
    alpha-block is trivial (the complement of the chart directions)."""
    n = u.n
    if n != alpha.n:
        raise ValueError("matrix and coroot live in different PGL_n")
    one, zero = RatFunc.one(), RatFunc.zero()
    block = alpha.block_range()
    for i in range(n):
        for j in range(n):
            e = u[i][j]
            if j < i and e != zero:
                return False
            if j == i and e != one:
                return False
            if not e.is_polynomial():
                return False
            if i in block and j in block and i != j and e != zero:
                return False
    return True
