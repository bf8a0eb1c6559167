"""Deterministic sampling of chart points, slice points and Gauss factors.

Randomness comes from a splitmix64 stream so that every sample is
reproducible bit for bit from (seed, trial index); the stream constants
are the standard ones and the first outputs from seed 0 are frozen as
test vectors.  Substreams are derived arithmetically, never by sharing
state, so independent trials can be evaluated in any order.

Slice points are drawn as left-to-right products of chart points and
diagonal shift points (every point of the relevant open locus arises this
way); if a product leaves the big cell the attempt is rejected and
resampled, with rejections counted, up to a fixed budget.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import DecompositionFails, SamplingExhausted
from .field import Poly, RatFunc
from .gauss import Coweight, GaussForm, SlicePoint, coweight, \
    coweight_add, coweights_pgl_equal
from .ihr import multiply, shift_point
from .matrix import MatQt
from .zastava import CorootInterval, ZastavaPoint, zastava_to_matrix

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """The standard splitmix64 generator."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return _mix(self.state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo fold; spans are tiny)."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def nonzero_int(self, bound: int) -> int:
        while True:
            v = self.randint(-bound, bound)
            if v != 0:
                return v


def substream(seed: int, index: int) -> SplitMix64:
    """Independent deterministic stream for (seed, index)."""
    return SplitMix64(_mix((seed + (index + 1) * _GOLDEN) & _MASK))


def sample_zastava(alpha: CorootInterval, seed: Optional[int] = None,
                   bound: int = 9,
                   rng: Optional[SplitMix64] = None) -> ZastavaPoint:
    """Chart point with integer coordinates in [-bound, bound], e != 0.

    Draw order is fixed forever: p, e, b_1.., g_1.., so seeds reproduce
    coordinates exactly.
    """
    if rng is None:
        if seed is None:
            raise ValueError("pass a seed or an rng")
        rng = SplitMix64(seed)
    k = alpha.k
    p = rng.randint(-bound, bound)
    e = rng.nonzero_int(bound)
    b = tuple(rng.randint(-bound, bound) for _ in range(k - 1))
    g = tuple(rng.randint(-bound, bound) for _ in range(k - 1))
    return ZastavaPoint(alpha, Fraction(p), Fraction(e),
                        tuple(Fraction(x) for x in b),
                        tuple(Fraction(x) for x in g))

RecipeItem = Union[CorootInterval, Sequence[int]]


def recipe_coweight(recipe: Sequence[RecipeItem], n: int) -> Coweight:
    total = (0,) * n
    for item in recipe:
        if isinstance(item, CorootInterval):
            if item.n != n:
                raise ValueError("recipe interval for a different PGL_n")
            total = coweight_add(total, item.neg_coweight())
        else:
            step = coweight(item)
            if len(step) != n:
                raise ValueError("recipe shift of wrong length")
            total = coweight_add(total, step)
    return total


def sample_slice(n: int, mu: Sequence[int], recipe: Sequence[RecipeItem],
                 seed: Optional[int] = None, bound: int = 4,
                 rng: Optional[SplitMix64] = None, max_attempts: int = 256,
                 stats: Optional[dict] = None) -> SlicePoint:
    """Draw a point of the slice attached to mu as a product over recipe.

    Recipe items are coroot intervals (contributing a random chart point,
    coweight -alpha) or integer coweights (contributing diag(t^nu)).  The
    recipe coweights must sum to mu up to a constant vector.  Rejections
    from products outside the big cell are counted in stats["rejected"].
    """
    mu = coweight(mu)
    if len(mu) != n:
        raise ValueError("mu must have length n")
    if rng is None:
        if seed is None:
            raise ValueError("pass a seed or an rng")
        rng = SplitMix64(seed)
    total = recipe_coweight(recipe, n)
    if not coweights_pgl_equal(total, mu):
        raise ValueError(f"recipe coweights sum to {total}, not {tuple(mu)}")
    if not recipe:
        return shift_point(mu)
    for _ in range(max_attempts):
        try:
            acc: Optional[SlicePoint] = None
            for item in recipe:
                if isinstance(item, CorootInterval):
                    pt = zastava_to_matrix(
                        sample_zastava(item, bound=bound, rng=rng))
                else:
                    pt = shift_point(item)
                acc = pt if acc is None else multiply(acc, pt)
            return acc
        except DecompositionFails:
            if stats is not None:
                stats["rejected"] = stats.get("rejected", 0) + 1
    raise SamplingExhausted(
        f"no decomposable product after {max_attempts} attempts")


def random_proper_ratfunc(rng: SplitMix64, bound: int = 3) -> RatFunc:
    """Zero or a/(t - c): vanishes at infinity to order >= 1."""
    a = rng.randint(-bound, bound)
    c = rng.randint(-bound, bound)
    if a == 0:
        return RatFunc.zero()
    return RatFunc(Poly((a,)), Poly((-c, 1)))


def random_gauss_factors(n: int, rng: SplitMix64,
                         mu_bound: int = 2) -> GaussForm:
    """Admissible factors (U, H, mu, L): proper off-diagonal entries,
    diagonal 1 + O(1/t), integer coweight in [-mu_bound, mu_bound]."""
    one, zero = RatFunc.one(), RatFunc.zero()
    urows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            urows[i][j] = random_proper_ratfunc(rng)
    h = [one + random_proper_ratfunc(rng) for _ in range(n)]
    mu = tuple(rng.randint(-mu_bound, mu_bound) for _ in range(n))
    lrows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            lrows[i][j] = random_proper_ratfunc(rng)
    return GaussForm(MatQt(urows), MatQt.diagonal(h), mu, MatQt(lrows))


def random_polynomial(rng: SplitMix64, maxdeg: int = 2,
                      bound: int = 3) -> Poly:
    deg = rng.randint(0, maxdeg)
    return Poly([rng.randint(-bound, bound) for _ in range(deg + 1)])


def random_nalpha_group(alpha: CorootInterval,
                        rng: SplitMix64) -> MatQt:
    """Random element of the polynomial unipotent upper group with trivial
    alpha-block (see ihr.in_nalpha_group)."""
    n = alpha.n
    rows = [list(row) for row in MatQt.identity(n).rows]
    block = alpha.block_range()
    for i in range(n):
        for j in range(i + 1, n):
            if i in block and j in block:
                continue
            rows[i][j] = RatFunc(random_polynomial(rng))
    return MatQt(rows)
