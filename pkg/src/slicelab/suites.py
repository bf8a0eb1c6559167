"""Randomized and symbolic verification suites.

Each suite checks one structural identity exactly (no tolerances); a
failing trial produces a FailureRecord carrying the JSON inputs that
witnessed it.  Reports are deterministic functions of (suite, n, trials,
seed) except for the wall_time field: trial t draws everything from the
substream (seed, t), and within a trial the checks sweep all positive
coroot intervals of PGL_n and a fixed coweight palette in a fixed order.

Suites:

* gauss-roundtrip    recomposing random admissible factors and refactoring
                     returns them; the slice projection is the identity on
                     slice points and is unchanged by polynomial unipotent
                     left/right translations (witnesses verified).
* zastava-roundtrip  chart then inverse chart is the identity; translate is
                     an abelian group action matching the matrix action.
* moment             phi and zeta of a product equal phi and zeta of the
                     chart factor.
* xi-projection      xi of a product returns the chart factor coordinates.
* inverse            splitting a product returns both factors exactly.
* equivariance       acting by v after multiplying equals multiplying the
                     translated chart factor.
* action             the translation action is a group action, fixes phi,
                     and conjugation preserves the complementary unipotent
                     polynomial group.
* stages             on the level set phi = (0,..,0,1) the split remainder
                     is invariant under the whole translation group.
* poisson            bracket table, antisymmetry and Jacobi on monomial
                     triples of total degree <= 3.
* weyl               defining relations, associativity on random elements,
                     centrality of hbar, the loop grading, and the
                     semiclassical limit against the Poisson bracket.
* lower-block        exploratory: reports how the Gauss U-factor changes
                     outside the block rows under multiplication (always
                     exits 0).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .coordpoly import CoordPoly, generators as coord_generators, \
    monomials_upto, poisson_bracket
from .errors import SlicelabError
from .gauss import Coweight, coweight_add, gauss_decompose, project_pi
from .ihr import (act, chi_alpha, in_nalpha_group, multiply, phi_alpha,
                  shift_point, split_F, translation_matrix, xi_alpha,
                  zeta_alpha)
from .matrix import MatQt
from .sampling import (SplitMix64, random_gauss_factors, random_nalpha_group,
                       sample_slice, sample_zastava, substream)
from .weyl import NCPoly, generators as weyl_generators, nc_comm, \
    semiclassical, symbol
from .zastava import CorootInterval, matrix_to_zastava, translate, \
    zastava_to_matrix


@dataclass(frozen=True)
class FailureRecord:
    """One failing check, with enough JSON input to replay it."""

    trial: int
    stage: str
    detail: str
    alpha: Optional[dict] = None
    mu: Optional[list] = None
    inputs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"trial": self.trial, "stage": self.stage,
                "detail": self.detail, "alpha": self.alpha, "mu": self.mu,
                "inputs": self.inputs}

    @classmethod
    def from_json(cls, data) -> "FailureRecord":
        return cls(trial=int(data["trial"]), stage=data["stage"],
                   detail=data["detail"], alpha=data.get("alpha"),
                   mu=list(data["mu"]) if data.get("mu") else None,
                   inputs=data.get("inputs") or {})


@dataclass
class SuiteReport:
    suite: str
    n: int
    seed: int
    alphas: list
    requested: int
    completed: int
    rejected: int
    failures: list
    observations: list
    wall_time: float

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> dict:
        return {"suite": self.suite, "n": self.n, "seed": self.seed,
                "alphas": self.alphas,
                "trials": {"requested": self.requested,
                           "completed": self.completed,
                           "rejected": self.rejected},
                "failures": [f.to_json() for f in self.failures],
                "observations": self.observations,
                "wall_time": self.wall_time}


def shift_palette(n: int) -> list[Coweight]:
    """Two fixed shift coweights with entries in [-2, 2]."""
    s1 = tuple([1] + [0] * (n - 2) + [-1])
    s2 = tuple((-1) ** i for i in range(n))
    return [s1, s2]


def mu_palette(n: int) -> list[Coweight]:
    """Zero, minus every positive coroot interval, and the fixed shifts."""
    out: list[Coweight] = [(0,) * n]
    out.extend(a.neg_coweight() for a in CorootInterval.all_intervals(n))
    out.extend(shift_palette(n))
    return list(dict.fromkeys(out))


def _recipe_for(nu: Coweight, n: int, rng: SplitMix64) -> list:
    """Recipe summing exactly to nu: up to two chart factors plus a shift."""
    intervals = list(CorootInterval.all_intervals(n))
    style = rng.randint(0, 2)
    chosen = []
    for _ in range(style):
        chosen.append(intervals[rng.randint(0, len(intervals) - 1)])
    acc = (0,) * n
    for b in chosen:
        acc = coweight_add(acc, b.neg_coweight())
    shift = tuple(x - y for x, y in zip(nu, acc))
    return chosen + [shift]


def _sample_pair(alpha: CorootInterval, mu: Coweight, rng: SplitMix64,
                 stats: dict):
    """A chart point of -alpha and a slice point of mu + alpha."""
    z = sample_zastava(alpha, bound=3, rng=rng)
    nu = coweight_add(mu, alpha.pos_coweight())
    rest = sample_slice(alpha.n, nu, _recipe_for(nu, alpha.n, rng),
                        rng=rng, stats=stats)
    return z, rest


class _Run:
    """Shared bookkeeping for one suite invocation."""

    def __init__(self, suite: str, n: int, trials: int, seed: int):
        if not 2 <= n <= 6:
            raise ValueError("suites support 2 <= n <= 6")
        if trials < 0:
            raise ValueError("trials must be nonnegative")
        self.suite, self.n, self.trials, self.seed = suite, n, trials, seed
        self.intervals = list(CorootInterval.all_intervals(n))
        self.palette = mu_palette(n)
        self.failures: list[FailureRecord] = []
        self.observations: list = []
        self.stats = {"rejected": 0}
        self.completed = 0
        self._start = time.perf_counter()

    def fail(self, trial: int, stage: str, detail: str,
             alpha: Optional[CorootInterval] = None,
             mu: Optional[Coweight] = None, inputs: Optional[dict] = None):
        self.failures.append(FailureRecord(
            trial=trial, stage=stage, detail=detail,
            alpha=alpha.to_json() if alpha else None,
            mu=list(mu) if mu is not None else None,
            inputs=inputs or {}))

    def guarded(self, trial: int, stage: str, alpha, mu, check: Callable):
        """Run one check; library errors become failure records (they mean
        a guaranteed-total operation failed on valid input)."""
        try:
            check()
        except SlicelabError as exc:
            self.fail(trial, stage, f"{type(exc).__name__}: {exc}",
                      alpha=alpha, mu=mu)

    def report(self) -> SuiteReport:
        return SuiteReport(
            suite=self.suite, n=self.n, seed=self.seed,
            alphas=[a.to_json() for a in self.intervals],
            requested=self.trials, completed=self.completed,
            rejected=self.stats["rejected"], failures=self.failures,
            observations=self.observations,
            wall_time=time.perf_counter() - self._start)


# --------------------------------------------------------------------------
# matrix-level suites

def _suite_gauss_roundtrip(run: _Run) -> None:
    n = run.n
    for trial in range(run.trials):
        rng = substream(run.seed, trial)

        def check():
            gf = random_gauss_factors(n, rng)
            x = gf.recompose()
            gf2 = gauss_decompose(x)
            if (gf2.U, gf2.H, gf2.mu, gf2.L) != (gf.U, gf.H, gf.mu, gf.L):
                run.fail(trial, "factor-roundtrip",
                         "refactored Gauss data differs from the sampled "
                         "factors", inputs={"matrix": x.to_json(),
                                            "mu": list(gf.mu)})
                return
            y, nw, mw = project_pi(x, gf.mu)
            if y.x != x or not nw.is_identity() or not mw.is_identity():
                run.fail(trial, "projection-idempotent",
                         "projection moved a point already in the slice",
                         inputs={"matrix": x.to_json(), "mu": list(gf.mu)})
                return
            # polynomial unipotent translations must not change the
            # projection, and the returned witnesses must recompose
            alpha = run.intervals[rng.randint(0, len(run.intervals) - 1)]
            npol = random_nalpha_group(alpha, rng)
            mpol = random_nalpha_group(alpha, rng).transpose()
            xp = npol @ x @ mpol
            yp, nw2, mw2 = project_pi(xp, gf.mu)
            if yp.x != y.x:
                run.fail(trial, "projection-invariance",
                         "left/right polynomial unipotent translation "
                         "changed the projection",
                         inputs={"matrix": xp.to_json(), "mu": list(gf.mu)})
                return
            if nw2 @ xp @ mw2 != yp.x:
                run.fail(trial, "projection-witness",
                         "witnesses do not recompose to the projection",
                         inputs={"matrix": xp.to_json(), "mu": list(gf.mu)})

        run.guarded(trial, "exception", None, None, check)
        run.completed += 1


def _suite_zastava_roundtrip(run: _Run) -> None:
    for trial in range(run.trials):
        rng = substream(run.seed, trial)
        for alpha in run.intervals:
            def check():
                z = sample_zastava(alpha, bound=4, rng=rng)
                y = zastava_to_matrix(z)
                z2 = matrix_to_zastava(y, alpha)
                if z2 != z:
                    run.fail(trial, "chart-roundtrip",
                             f"chart inverse returned {z2}",
                             alpha=alpha, inputs={"z": z.to_json()})
                    return
                k = alpha.k
                # moment vectors in chart coordinates
                expect_phi = z.b + (z.e,)
                bg = sum((bb * gg for bb, gg in zip(z.b, z.g)),
                         start=Fraction(0))
                expect_zeta = tuple(z.g[k - i - 1] * z.e
                                    for i in range(1, k)) \
                    + (z.p * z.e + z.e * bg,)
                if phi_alpha(y, alpha).values != expect_phi or \
                        zeta_alpha(y, alpha).values != expect_zeta:
                    run.fail(trial, "chart-moments",
                             "phi or zeta disagrees with its closed form "
                             "in chart coordinates",
                             alpha=alpha, inputs={"z": z.to_json()})
                    return
                v = tuple(rng.randint(-5, 5) for _ in range(k))
                w = tuple(rng.randint(-5, 5) for _ in range(k))
                vw = tuple(a + b for a, b in zip(v, w))
                if translate(translate(z, v), w) != translate(z, vw):
                    run.fail(trial, "translate-group",
                             "translate is not additive in v",
                             alpha=alpha, inputs={"z": z.to_json(),
                                                  "v": [str(x) for x in v],
                                                  "w": [str(x) for x in w]})
                    return
                if act(v, y, alpha) != zastava_to_matrix(translate(z, v)):
                    run.fail(trial, "act-vs-translate",
                             "matrix action and coordinate translation "
                             "disagree on a chart point",
                             alpha=alpha, inputs={"z": z.to_json(),
                                                  "v": [str(x) for x in v]})

            run.guarded(trial, "exception", alpha, None, check)
        run.completed += 1


def _product_checker(stage: str, compare) -> Callable[["_Run"], None]:
    """Template for suites that sample (chart, rest), multiply, and compare."""

    def runner(run: _Run) -> None:
        for trial in range(run.trials):
            rng = substream(run.seed, trial)
            for alpha in run.intervals:
                for mu in run.palette:
                    def check():
                        z, rest = _sample_pair(alpha, mu, rng, run.stats)
                        y = multiply(zastava_to_matrix(z), rest)
                        compare(run, trial, alpha, mu, rng, z, rest, y)

                    run.guarded(trial, stage, alpha, mu, check)
            run.completed += 1

    return runner


def _cmp_inverse(run, trial, alpha, mu, rng, z, rest, y):
    pair = split_F(y, alpha)
    if pair.zastava != z or pair.rest != rest:
        run.fail(trial, "split-of-product",
                 "split did not return the factors",
                 alpha=alpha, mu=mu,
                 inputs={"z": z.to_json(), "rest": rest.to_json()})
        return
    back = multiply(zastava_to_matrix(pair.zastava), pair.rest)
    if back != y:
        run.fail(trial, "product-of-split",
                 "multiplying the split parts did not return the point",
                 alpha=alpha, mu=mu, inputs={"y": y.to_json()})


def _cmp_moment(run, trial, alpha, mu, rng, z, rest, y):
    y1 = zastava_to_matrix(z)
    if phi_alpha(y, alpha) != phi_alpha(y1, alpha):
        run.fail(trial, "phi-of-product",
                 "phi of the product differs from phi of the chart factor",
                 alpha=alpha, mu=mu,
                 inputs={"z": z.to_json(), "rest": rest.to_json()})
        return
    if zeta_alpha(y, alpha) != zeta_alpha(y1, alpha):
        run.fail(trial, "zeta-of-product",
                 "zeta of the product differs from zeta of the chart factor",
                 alpha=alpha, mu=mu,
                 inputs={"z": z.to_json(), "rest": rest.to_json()})


def _cmp_xi(run, trial, alpha, mu, rng, z, rest, y):
    z2 = xi_alpha(y, alpha)
    if z2 != z:
        run.fail(trial, "xi-of-product",
                 f"xi returned {z2} instead of the chart factor",
                 alpha=alpha, mu=mu,
                 inputs={"z": z.to_json(), "rest": rest.to_json()})


def _cmp_equivariance(run, trial, alpha, mu, rng, z, rest, y):
    v = tuple(rng.randint(-5, 5) for _ in range(alpha.k))
    lhs = act(v, y, alpha)
    rhs = multiply(zastava_to_matrix(translate(z, v)), rest)
    if lhs != rhs:
        run.fail(trial, "act-vs-translated-product",
                 "acting on the product differs from multiplying the "
                 "translated chart factor",
                 alpha=alpha, mu=mu,
                 inputs={"z": z.to_json(), "rest": rest.to_json(),
                         "v": [str(x) for x in v]})


_suite_inverse = _product_checker("inverse", _cmp_inverse)
_suite_moment = _product_checker("moment", _cmp_moment)
_suite_xi_projection = _product_checker("xi-projection", _cmp_xi)
_suite_equivariance = _product_checker("equivariance", _cmp_equivariance)


def _suite_action(run: _Run) -> None:
    for trial in range(run.trials):
        rng = substream(run.seed, trial)
        for alpha in run.intervals:
            for mu in run.palette:
                def check():
                    y = sample_slice(run.n, mu, _recipe_for(mu, run.n, rng),
                                     rng=rng, stats=run.stats)
                    k = alpha.k
                    v = tuple(rng.randint(-5, 5) for _ in range(k))
                    w = tuple(rng.randint(-5, 5) for _ in range(k))
                    if act((0,) * k, y, alpha) != y:
                        run.fail(trial, "act-zero", "acting by 0 moved the "
                                 "point", alpha=alpha, mu=mu,
                                 inputs={"y": y.to_json()})
                        return
                    vw = tuple(a + b for a, b in zip(v, w))
                    if act(v, act(w, y, alpha), alpha) != act(vw, y, alpha):
                        run.fail(trial, "act-additive",
                                 "action is not additive in v",
                                 alpha=alpha, mu=mu,
                                 inputs={"y": y.to_json(),
                                         "v": [str(x) for x in v],
                                         "w": [str(x) for x in w]})
                        return
                    if phi_alpha(act(v, y, alpha), alpha) != \
                            phi_alpha(y, alpha):
                        run.fail(trial, "act-fixes-phi",
                                 "action changed the phi vector",
                                 alpha=alpha, mu=mu,
                                 inputs={"y": y.to_json(),
                                         "v": [str(x) for x in v]})
                        return
                    u = random_nalpha_group(alpha, rng)
                    tv = translation_matrix(v, alpha)
                    conj = tv @ u @ tv.inv()
                    if not in_nalpha_group(conj, alpha):
                        run.fail(trial, "conjugation-stability",
                                 "conjugating the complementary unipotent "
                                 "group left it",
                                 alpha=alpha, mu=mu,
                                 inputs={"u": u.to_json(),
                                         "v": [str(x) for x in v]})

                run.guarded(trial, "action", alpha, mu, check)
        run.completed += 1


def _suite_stages(run: _Run) -> None:
    for trial in range(run.trials):
        rng = substream(run.seed, trial)
        for alpha in run.intervals:
            for mu in run.palette:
                def check():
                    k = alpha.k
                    z0 = sample_zastava(alpha, bound=3, rng=rng)
                    z0 = type(z0)(alpha, z0.p, Fraction(1),
                                  (Fraction(0),) * (k - 1), z0.g)
                    nu = coweight_add(mu, alpha.pos_coweight())
                    rest = sample_slice(run.n, nu,
                                        _recipe_for(nu, run.n, rng),
                                        rng=rng, stats=run.stats)
                    y = multiply(zastava_to_matrix(z0), rest)
                    if phi_alpha(y, alpha) != chi_alpha(alpha):
                        run.fail(trial, "level-set",
                                 "construction left the level set phi = "
                                 "(0,...,0,1)", alpha=alpha, mu=mu,
                                 inputs={"z0": z0.to_json(),
                                         "rest": rest.to_json()})
                        return
                    pair = split_F(y, alpha)
                    if pair.zastava.e != 1 or any(pair.zastava.b):
                        run.fail(trial, "split-on-level-set",
                                 "split chart factor is off the level set",
                                 alpha=alpha, mu=mu,
                                 inputs={"y": y.to_json()})
                        return
                    if pair.rest != rest:
                        run.fail(trial, "reduction-representative",
                                 "split remainder is not the sampled rest",
                                 alpha=alpha, mu=mu,
                                 inputs={"z0": z0.to_json(),
                                         "rest": rest.to_json()})
                        return
                    v = tuple(rng.randint(-5, 5) for _ in range(k))
                    moved = act(v, y, alpha)
                    if split_F(moved, alpha).rest != rest:
                        run.fail(trial, "rest-invariance",
                                 "the split remainder moved under the "
                                 "translation group",
                                 alpha=alpha, mu=mu,
                                 inputs={"y": y.to_json(),
                                         "v": [str(x) for x in v]})

                run.guarded(trial, "stages", alpha, mu, check)
        run.completed += 1


def _suite_lower_block(run: _Run) -> None:
    for trial in range(run.trials):
        rng = substream(run.seed, trial)
        for alpha in run.intervals:
            for mu in run.palette:
                try:
                    z, rest = _sample_pair(alpha, mu, rng, run.stats)
                    y = multiply(zastava_to_matrix(z), rest)
                except SlicelabError as exc:
                    run.observations.append(
                        {"trial": trial, "alpha": alpha.to_json(),
                         "mu": list(mu), "error": str(exc)})
                    continue
                block_rows = set(alpha.block_range())
                u_before = rest.gauss.U
                u_after = y.gauss.U
                diffs = [[i + 1, j + 1]
                         for i in range(run.n) if i not in block_rows
                         for j in range(run.n)
                         if u_before[i][j] != u_after[i][j]]
                run.observations.append(
                    {"trial": trial, "alpha": alpha.to_json(),
                     "mu": list(mu), "changed_entries": diffs[:8],
                     "changed_count": len(diffs)})
        run.completed += 1


# --------------------------------------------------------------------------
# symbolic suites

def _poisson_tables(run: _Run, trial: int, k: int) -> None:
    gen = coord_generators(k)
    table = [(gen.p, gen.e, gen.e),
             (gen.p, gen.einv, -gen.einv),
             (gen.e, gen.einv, CoordPoly.zero(k))]
    for i in range(k - 1):
        for j in range(k - 1):
            expected = CoordPoly.constant(k, 1 if i == j else 0)
            table.append((gen.b[i], gen.g[j], expected))
        table.append((gen.p, gen.b[i], CoordPoly.zero(k)))
        table.append((gen.p, gen.g[i], CoordPoly.zero(k)))
        table.append((gen.e, gen.b[i], CoordPoly.zero(k)))
        table.append((gen.e, gen.g[i], CoordPoly.zero(k)))
    for f, g, expected in table:
        if poisson_bracket(f, g) != expected:
            run.fail(trial, "bracket-table",
                     f"k={k}: {{{f}, {g}}} != {expected}")
            return


def _suite_poisson(run: _Run) -> None:
    heights = sorted({a.k for a in run.intervals})
    for trial in range(run.trials):
        for k in heights:
            def check():
                _poisson_tables(run, trial, k)
                monos = [(m, m.degree()) for m in monomials_upto(k, 3)]
                for f, df in monos:
                    for g, dg in monos:
                        if df + dg > 3:
                            continue
                        fg = poisson_bracket(f, g)
                        if fg != -poisson_bracket(g, f):
                            run.fail(trial, "antisymmetry",
                                     f"k={k}: {{{f},{g}}} is not "
                                     "antisymmetric")
                            return
                        for h, dh in monos:
                            if df + dg + dh > 3:
                                continue
                            jac = poisson_bracket(f, poisson_bracket(g, h)) \
                                + poisson_bracket(g, poisson_bracket(h, f)) \
                                + poisson_bracket(h, poisson_bracket(f, g))
                            if jac:
                                run.fail(trial, "jacobi",
                                         f"k={k}: Jacobi fails on "
                                         f"({f}, {g}, {h})")
                                return

            run.guarded(trial, "poisson", None, None, check)
        run.completed += 1


def _random_nc(k: int, rng: SplitMix64) -> NCPoly:
    """Sum of up to three monomials of total generator degree <= 3."""
    out = NCPoly.zero(k)
    for _ in range(rng.randint(1, 3)):
        budget = rng.randint(0, 3)
        a = rng.randint(-budget, budget)
        budget -= abs(a)
        m = rng.randint(0, budget)
        budget -= m
        bs = [0] * (k - 1)
        gs = [0] * (k - 1)
        for _ in range(budget):
            slot = rng.randint(0, 2 * max(k - 1, 1) - 1)
            if k > 1:
                if slot < k - 1:
                    bs[slot] += 1
                else:
                    gs[slot - (k - 1)] += 1
        h = rng.randint(0, 1)
        coeff = rng.nonzero_int(5)
        out = out + NCPoly.monomial(k, h=h, a=a, m=m, bs=tuple(bs),
                                    gs=tuple(gs), coeff=coeff)
    return out


def _weyl_tables(run: _Run, trial: int, k: int) -> None:
    gen = weyl_generators(k)
    one = NCPoly.constant(k, 1)
    checks = [
        ("e*einv = 1", gen.e * gen.einv, one),
        ("einv*e = 1", gen.einv * gen.e, one),
        ("[p,e] = hbar*e", nc_comm(gen.p, gen.e), gen.hbar * gen.e),
        ("[p,einv] = -hbar*einv", nc_comm(gen.p, gen.einv),
         -(gen.hbar * gen.einv)),
    ]
    for i in range(k - 1):
        for j in range(k - 1):
            expected = gen.hbar if i == j else NCPoly.zero(k)
            checks.append((f"[b{i + 1},g{j + 1}]",
                           nc_comm(gen.b[i], gen.g[j]), expected))
        checks.append((f"[p,b{i + 1}] = 0", nc_comm(gen.p, gen.b[i]),
                       NCPoly.zero(k)))
        checks.append((f"[e,g{i + 1}] = 0", nc_comm(gen.e, gen.g[i]),
                       NCPoly.zero(k)))
        checks.append((f"[hbar,b{i + 1}] = 0",
                       nc_comm(gen.hbar, gen.b[i]), NCPoly.zero(k)))
    for label, got, expected in checks:
        if got != expected:
            run.fail(trial, "relation-table", f"k={k}: {label}, got {got}")
            return


def _suite_weyl(run: _Run) -> None:
    heights = sorted({a.k for a in run.intervals})
    for trial in range(run.trials):
        rng = substream(run.seed, trial)
        for k in heights:
            def check():
                if trial == 0:
                    _weyl_tables(run, trial, k)
                    # exhaustive semiclassical check on monomial pairs
                    monos = list(monomials_upto(k, 3))
                    ncs = [NCPoly.monomial(k, a=key[0], m=key[1], bs=key[2],
                                           gs=key[3])
                           for mono in monos for key in mono.terms]
                    for x, sx in zip(ncs, monos):
                        for y, sy in zip(ncs, monos):
                            if semiclassical(x, y) != \
                                    poisson_bracket(sx, sy):
                                run.fail(trial, "semiclassical",
                                         f"k={k}: semiclassical([{x},{y}]) "
                                         "differs from the Poisson bracket")
                                return
                x, y, z = (_random_nc(k, rng) for _ in range(3))
                if (x * y) * z != x * (y * z):
                    run.fail(trial, "associativity",
                             f"k={k}: associativity fails",
                             inputs={"x": x.to_json(), "y": y.to_json(),
                                     "z": z.to_json()})
                    return
                if nc_comm(x, y * z) != nc_comm(x, y) * z \
                        + y * nc_comm(x, z):
                    run.fail(trial, "derivation",
                             f"k={k}: [x, -] is not a derivation",
                             inputs={"x": x.to_json(), "y": y.to_json(),
                                     "z": z.to_json()})
                    return
                hb = NCPoly.monomial(k, h=1)
                if nc_comm(hb, x) != NCPoly.zero(k):
                    run.fail(trial, "hbar-central",
                             f"k={k}: hbar is not central",
                             inputs={"x": x.to_json()})
                    return
                # products of loop-homogeneous elements stay homogeneous
                for key, c in x.terms.items():
                    mono_x = NCPoly(k, {key: c})
                    for key2, c2 in y.terms.items():
                        mono_y = NCPoly(k, {key2: c2})
                        prod = mono_x * mono_y
                        if prod and prod.loop_weight() != \
                                mono_x.loop_weight() + mono_y.loop_weight():
                            run.fail(trial, "grading",
                                     f"k={k}: product broke the loop "
                                     "grading",
                                     inputs={"x": mono_x.to_json(),
                                             "y": mono_y.to_json()})
                            return

            run.guarded(trial, "weyl", None, None, check)
        run.completed += 1


SUITES: dict[str, Callable[[_Run], None]] = {
    "gauss-roundtrip": _suite_gauss_roundtrip,
    "zastava-roundtrip": _suite_zastava_roundtrip,
    "inverse": _suite_inverse,
    "moment": _suite_moment,
    "xi-projection": _suite_xi_projection,
    "equivariance": _suite_equivariance,
    "action": _suite_action,
    "stages": _suite_stages,
    "poisson": _suite_poisson,
    "weyl": _suite_weyl,
    "lower-block": _suite_lower_block,
}

SUITE_NAMES = tuple(SUITES)


def run_suite(name: str, n: int, trials: int, seed: int) -> SuiteReport:
    """Run one named suite; deterministic given (name, n, trials, seed)."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: "
                         f"{', '.join(SUITE_NAMES)}")
    run = _Run(name, n, trials, seed)
    SUITES[name](run)
    return run.report()
