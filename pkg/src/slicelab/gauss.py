"""Gauss decomposition at t = infinity and the slice projection.

A matrix x over Q(t) whose lower-right principal minors are all nonzero
factors uniquely as x = U * D * L with U unipotent upper triangular, D
diagonal and L unipotent lower triangular.  Writing each diagonal entry
as d_i = t^(mu_i) * h_i with h_i normalized to 1 + O(t^-1) extracts an
integer coweight mu and the diagonal factor H.

The slice attached to mu consists of those x where additionally every
off-diagonal entry of U and L vanishes at infinity (order >= 1).  The
bigger space X_mu allows polynomial parts in U and L; project_pi strips
them by unipotent polynomial row/column operations, producing the unique
slice representative together with the polynomial witnesses n, n_- such
that n * x * n_- lands in the slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DecompositionFails, InternalError, NotInSlice
from .field import Poly, RatFunc
from .matrix import MatQt

Coweight = tuple[int, ...]


def coweight(values: Sequence[int]) -> Coweight:
    return tuple(int(v) for v in values)


def coweight_add(a: Sequence[int], b: Sequence[int]) -> Coweight:
    if len(a) != len(b):
        raise ValueError("coweight length mismatch")
    return tuple(x + y for x, y in zip(a, b))


def coweight_neg(a: Sequence[int]) -> Coweight:
    return tuple(-x for x in a)


def coweights_pgl_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """Coweights of PGL_n are compared modulo constant vectors."""
    if len(a) != len(b):
        return False
    d = a[0] - b[0]
    return all(x - y == d for x, y in zip(a, b))


@dataclass(frozen=True)
class GaussForm:
    """Factors of x = U * diag(t^mu) * H * L."""

    U: MatQt
    H: MatQt
    mu: Coweight
    L: MatQt

    @property
    def n(self) -> int:
        return self.U.n

    def diagonal(self) -> MatQt:
        """The full diagonal factor D = diag(t^mu) * H."""
        return MatQt.diagonal([RatFunc.t(m) * h
                               for m, h in zip(self.mu,
                                               (self.H[i][i] for i in range(self.n)))])

    def recompose(self) -> MatQt:
        return self.U @ self.diagonal() @ self.L

    def to_json(self) -> dict:
        return {"U": self.U.to_json(), "H": self.H.to_json(),
                "mu": list(self.mu), "L": self.L.to_json()}


def gauss_decompose(x: MatQt) -> GaussForm:
    """Factor x = U * diag(t^mu) * H * L, growing lower-right blocks.

    Raises DecompositionFails when some lower-right principal minor
    vanishes, NotInSlice when a diagonal entry is not t^k * (1 + O(t^-1)).
    """
    n = x.n
    one, zero = RatFunc.one(), RatFunc.zero()

    # block-local index i corresponds to global index (n - m) + i
    d: list[RatFunc] = [x[n - 1][n - 1]]
    if d[0].is_zero():
        raise DecompositionFails("lower-right 1x1 minor vanishes")
    uinv: list[list[RatFunc]] = [[one]]
    linv: list[list[RatFunc]] = [[one]]
    u_rows: dict[int, list[RatFunc]] = {}
    l_cols: dict[int, list[RatFunc]] = {}

    for m in range(1, n):
        gi = n - m - 1
        a = x[gi][gi]
        r = [x[gi][gi + 1 + j] for j in range(m)]
        c = [x[gi + 1 + i][gi] for i in range(m)]
        dinv = [e.reciprocal() for e in d]

        # u = r * L^-1 * D^-1 ; l = D^-1 * U^-1 * c
        w = [zero] * m
        for i, ri in enumerate(r):
            if ri:
                for j in range(i + 1):          # linv is lower triangular
                    if linv[i][j]:
                        w[j] = w[j] + ri * linv[i][j]
        u = [w[j] * dinv[j] for j in range(m)]
        v = [zero] * m
        for i in range(m):
            acc = zero
            for j in range(i, m):               # uinv is upper triangular
                if uinv[i][j] and c[j]:
                    acc = acc + uinv[i][j] * c[j]
            v[i] = acc
        l = [dinv[i] * v[i] for i in range(m)]

        schur = a
        for j in range(m):
            if u[j] and l[j]:
                schur = schur - u[j] * d[j] * l[j]
        if schur.is_zero():
            raise DecompositionFails(
                f"lower-right {m + 1}x{m + 1} minor vanishes")

        # grow the cached inverses: block gains a new first row/column
        urow = [zero] * m
        for j in range(m):
            acc = zero
            for i in range(j + 1):
                if u[i] and uinv[i][j]:
                    acc = acc + u[i] * uinv[i][j]
            urow[j] = -acc
        uinv = [[one] + urow] + [[zero] + row for row in uinv]
        lcol = [zero] * m
        for i in range(m):
            acc = zero
            for j in range(i + 1):
                if linv[i][j] and l[j]:
                    acc = acc + linv[i][j] * l[j]
            lcol[i] = -acc
        linv = [[one] + [zero] * m] + [[lcol[i]] + linv[i] for i in range(m)]

        u_rows[gi] = u
        l_cols[gi] = l
        d = [schur] + d

    mu: list[int] = []
    h: list[RatFunc] = []
    for i, di in enumerate(d):
        k = di.num.degree - di.den.degree
        if di.num.lc != 1:
            # denominator is monic, so the leading behaviour is lc(num)*t^k
            raise NotInSlice(
                f"diagonal entry {i + 1} is {di.num.lc}*t^{k}*(1+O(1/t)), "
                "not t^k*(1+O(1/t))")
        mu.append(k)
        h.append(di * RatFunc.t(-k))

    rows_u = [[one if i == j else zero for j in range(n)] for i in range(n)]
    rows_l = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for gi, u in u_rows.items():
        for j, e in enumerate(u):
            rows_u[gi][gi + 1 + j] = e
    for gi, l in l_cols.items():
        for i, e in enumerate(l):
            rows_l[gi + 1 + i][gi] = e

    return GaussForm(MatQt(rows_u), MatQt.diagonal(h), tuple(mu), MatQt(rows_l))


@dataclass(frozen=True)
class MembershipReport:
    """Verdict of the slice membership test, with the first offender."""

    ok: bool
    factor: Optional[str] = None        # "U" | "L" | "H" | "mu" | "decomposition"
    entry: Optional[tuple[int, int]] = None   # 1-indexed
    detail: str = ""
    mu_found: Optional[Coweight] = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "factor": self.factor,
                "entry": list(self.entry) if self.entry else None,
                "detail": self.detail,
                "mu_found": list(self.mu_found) if self.mu_found else None}


def _first_nonproper(gf: GaussForm) -> Optional[tuple[str, int, int]]:
    """First U or L entry with a nonvanishing part at infinity (1-indexed)."""
    n = gf.n
    for i in range(n):
        for j in range(i + 1, n):
            if gf.U[i][j].ord_inf() < 1:
                return ("U", i + 1, j + 1)
    for i in range(n):
        for j in range(i):
            if gf.L[i][j].ord_inf() < 1:
                return ("L", i + 1, j + 1)
    return None


def slice_membership(x: MatQt, mu: Sequence[int]) -> MembershipReport:
    """Check that x lies in the slice attached to mu; never raises on
    mathematically meaningful input -- failures come back as verdicts."""
    mu = coweight(mu)
    if len(mu) != x.n:
        raise ValueError("coweight length must match matrix size")
    try:
        gf = gauss_decompose(x)
    except DecompositionFails as exc:
        return MembershipReport(False, factor="decomposition", detail=str(exc))
    except NotInSlice as exc:
        return MembershipReport(False, factor="H", detail=str(exc))
    offender = _first_nonproper(gf)
    if offender is not None:
        factor, i, j = offender
        bad = gf.U[i - 1][j - 1] if factor == "U" else gf.L[i - 1][j - 1]
        return MembershipReport(
            False, factor=factor, entry=(i, j),
            detail=f"{factor}[{i}][{j}] = {bad!r} has a nonvanishing part "
                   "at infinity",
            mu_found=gf.mu)
    for i in range(x.n):
        if (gf.H[i][i] - 1).ord_inf() < 1:
            return MembershipReport(
                False, factor="H", entry=(i + 1, i + 1),
                detail=f"H[{i + 1}] = {gf.H[i][i]!r} is not 1 + O(1/t)",
                mu_found=gf.mu)
    if not coweights_pgl_equal(gf.mu, mu):
        return MembershipReport(
            False, factor="mu",
            detail=f"extracted coweight {gf.mu} differs from {tuple(mu)} "
                   "by a non-constant vector",
            mu_found=gf.mu)
    return MembershipReport(True, mu_found=gf.mu)


def minor_degrees(x: MatQt) -> tuple[Optional[int], ...]:
    """Degrees of the lower-right m x m minors of the cleared representative,
    for m = 1..n; None marks an identically zero minor."""
    cleared, _ = x.cleared()
    n = x.n
    out: list[Optional[int]] = []
    for m in range(1, n + 1):
        sub = MatQt([row[n - m:] for row in cleared.rows[n - m:]])
        det = sub.det()
        if det.is_zero():
            out.append(None)
        else:
            if det.den.degree != 0:
                raise InternalError("minor of a polynomial matrix is not "
                                    "polynomial")
            out.append(det.num.degree)
    return tuple(out)


def dominance_ok(x: MatQt, lam: Sequence[int]) -> bool:
    """deg(lower-right m x m minor) <= lam_1 + ... + lam_m for every m."""
    if len(lam) != x.n:
        raise ValueError("weight length must match matrix size")
    degs = minor_degrees(x)
    bound = 0
    for m, d in enumerate(degs):
        bound += int(lam[m])
        if d is not None and d > bound:
            return False
    return True


class SlicePoint:
    """A point of the slice attached to mu, stored as its canonical matrix
    together with the (cached) Gauss factorization."""

    __slots__ = ("x", "mu", "gauss")

    def __init__(self, x: MatQt, mu: Coweight, gauss: GaussForm):
        self.x = x
        self.mu = mu
        self.gauss = gauss

    @property
    def n(self) -> int:
        return self.x.n

    @classmethod
    def from_matrix(cls, x: MatQt, mu: Optional[Sequence[int]] = None) -> "SlicePoint":
        """Validate that x already lies in a slice and wrap it.

        Raises NotInSlice when a Gauss factor has a polynomial part (use
        project_pi for those) or when mu disagrees with the extracted
        coweight."""
        gf = gauss_decompose(x)
        offender = _first_nonproper(gf)
        if offender is not None:
            factor, i, j = offender
            raise NotInSlice(f"{factor}[{i}][{j}] does not vanish at "
                             "infinity; apply project_pi first")
        if mu is not None and not coweights_pgl_equal(gf.mu, coweight(mu)):
            raise NotInSlice(f"extracted coweight {gf.mu} is not "
                             f"equivalent to {tuple(mu)}")
        return cls(x, gf.mu, gf)

    def __eq__(self, other):
        if not isinstance(other, SlicePoint):
            return NotImplemented
        return self.mu == other.mu and self.x == other.x

    def __hash__(self):
        return hash((self.mu, self.x))

    def __repr__(self):
        return f"SlicePoint(mu={self.mu}, x={self.x!r})"

    def to_json(self) -> dict:
        return {"n": self.n, "mu": list(self.mu), "matrix": self.x.to_json()}

    @classmethod
    def from_json(cls, data) -> "SlicePoint":
        x = MatQt.from_json(data["matrix"])
        if x.n != data.get("n", x.n):
            raise ValueError("matrix size disagrees with declared n")
        return cls.from_matrix(x, data.get("mu"))


def pgl_equal(a: SlicePoint, b: SlicePoint) -> bool:
    """True when the matrices differ by a Q(t)-scalar."""
    if a.n != b.n:
        return False
    for i in range(b.n):
        for j in range(b.n):
            if b.x[i][j]:
                if not a.x[i][j]:
                    return False
                c = a.x[i][j] / b.x[i][j]
                return a.x == b.x.scalar_mul(c)
    raise InternalError("slice point with zero matrix")


def project_pi(x: MatQt, mu: Sequence[int]) -> tuple[SlicePoint, MatQt, MatQt]:
    """Project x (with Gauss coweight equivalent to mu, polynomial parts
    allowed in U and L) to its slice representative.

    Returns (point, n, n_minus) with point.x == n @ x @ n_minus, where n
    is unipotent upper and n_minus unipotent lower, both with polynomial
    entries.  Superdiagonals are cleared in order of increasing distance
    from the diagonal; each elimination only perturbs entries strictly
    farther out, so one sweep suffices.
    """
    mu = coweight(mu)
    if len(mu) != x.n:
        raise ValueError("coweight length must match matrix size")
    gf = gauss_decompose(x)
    if not coweights_pgl_equal(gf.mu, mu):
        raise NotInSlice(f"Gauss coweight {gf.mu} is not equivalent to "
                         f"the requested {tuple(mu)}")
    n = x.n
    one, zero = RatFunc.one(), RatFunc.zero()

    w = [list(row) for row in gf.U.rows]
    nw = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for dist in range(1, n):
        for i in range(n - dist):
            j = i + dist
            q = w[i][j].poly_part()
            if q.is_zero():
                continue
            qr = RatFunc(q)
            for col in range(j, n):
                if w[j][col]:
                    w[i][col] = w[i][col] - qr * w[j][col]
            for col in range(n):
                if nw[j][col]:
                    nw[i][col] = nw[i][col] - qr * nw[j][col]

    v = [list(row) for row in gf.L.rows]
    mw = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for dist in range(1, n):
        for j in range(n - dist):
            i = j + dist
            q = v[i][j].poly_part()
            if q.is_zero():
                continue
            qr = RatFunc(q)
            for row in range(i, n):
                if v[row][i]:
                    v[row][j] = v[row][j] - qr * v[row][i]
            for row in range(n):
                if mw[row][i]:
                    mw[row][j] = mw[row][j] - qr * mw[row][i]

    for i in range(n):
        for j in range(i + 1, n):
            if w[i][j].ord_inf() < 1 or v[j][i].ord_inf() < 1:
                raise InternalError("projection left a polynomial part; "
                                    "this is a bug")

    u1 = MatQt(w)
    l1 = MatQt(v)
    d = gf.diagonal()
    dl = MatQt([[d[i][i] * e for e in l1[i]] for i in range(n)])
    y = u1 @ dl
    point = SlicePoint(y, gf.mu, GaussForm(u1, gf.H, gf.mu, l1))
    return point, MatQt(nw), MatQt(mw)
