"""Release gate: nine exact acceptance criteria with wall-clock budgets.

Every check is an exact identity over Q(t) (or over Q); there are no
numeric tolerances anywhere.  Each test prints one PASS line with its
timing so a log shows one line per criterion; a failed assert is the
FAIL line.  Budgets are generous ceilings for a plain laptop; the
measured times are an order of magnitude below them.

Run just this gate with:  pytest tests/test_acceptance.py -v -s
"""

import time
from fractions import Fraction

from slicelab import (
    CorootInterval,
    Partition,
    QuiverData,
    equiv_quiver,
    gauss_decompose,
    matrix_to_zastava,
    mv_quiver,
    phi_alpha,
    random_gauss_factors,
    run_suite,
    sample_zastava,
    substream,
    zastava_to_matrix,
    zeta_alpha,
)

SEED = 20240915


def _passline(num: int, desc: str, elapsed: float, budget: float = None):
    extra = f" [{elapsed:.1f}s < {budget:.0f}s]" if budget else \
        f" [{elapsed:.1f}s]"
    print(f"\n[acceptance] criterion {num}: PASS - {desc}{extra}")


def _no_failures(report, what: str):
    assert report.failures == [], (
        f"{what}: {len(report.failures)} failures, first: "
        f"{report.failures[0].to_json()}")


def test_criterion_1_gauss_roundtrip():
    """Factor triples recompose and refactor exactly, n = 2..6, 200 each."""
    budget = 60.0
    t0 = time.perf_counter()
    for n in range(2, 7):
        for i in range(200):
            gf = random_gauss_factors(n, substream(SEED + n, i))
            gf2 = gauss_decompose(gf.recompose())
            assert (gf2.U, gf2.H, gf2.mu, gf2.L) == \
                (gf.U, gf.H, gf.mu, gf.L), (n, i)
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, f"criterion 1 took {elapsed:.1f}s"
    _passline(1, "Gauss roundtrip, n=2..6, 200 triples each", elapsed,
              budget)


def test_criterion_2_chart_and_moment():
    """Moment closed forms and chart inversion on 100 points per interval,
    every coroot interval of PGL_n for n <= 6."""
    budget = 60.0
    t0 = time.perf_counter()
    for n in range(2, 7):
        for alpha in CorootInterval.all_intervals(n):
            k = alpha.k
            for i in range(100):
                z = sample_zastava(
                    alpha, rng=substream(SEED + 7 * n, 1000 * k + i),
                    bound=5)
                y = zastava_to_matrix(z)
                assert phi_alpha(y, alpha).values == z.b + (z.e,), (n, alpha)
                bg = sum((bi * gi for bi, gi in zip(z.b, z.g)), Fraction(0))
                expect_zeta = tuple(
                    z.g[k - i2 - 1] * z.e for i2 in range(1, k)
                ) + (z.p * z.e + z.e * bg,)
                assert zeta_alpha(y, alpha).values == expect_zeta, (n, alpha)
                assert matrix_to_zastava(y, alpha) == z, (n, alpha)
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, f"criterion 2 took {elapsed:.1f}s"
    _passline(2, "chart/moment identities, all intervals n<=6, 100 points",
              elapsed, budget)


def test_criterion_3_inverse_pair():
    """Splitting inverts multiplication exactly: suite `inverse`,
    n in {2,3,4}, 100 trials over the full (mu, alpha) palette."""
    budget = 600.0
    t0 = time.perf_counter()
    for n in (2, 3, 4):
        report = run_suite("inverse", n=n, trials=100, seed=SEED)
        _no_failures(report, f"inverse n={n}")
        assert report.completed == 100
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, f"criterion 3 took {elapsed:.1f}s"
    _passline(3, "inverse pair suites, n=2,3,4 x 100 trials", elapsed,
              budget)


def test_criterion_4_moment_invariance_and_xi():
    """Suites `moment` and `xi-projection` at the same scale."""
    t0 = time.perf_counter()
    for name in ("moment", "xi-projection"):
        for n in (2, 3, 4):
            report = run_suite(name, n=n, trials=100, seed=SEED)
            _no_failures(report, f"{name} n={n}")
    _passline(4, "moment + xi-projection suites, n=2,3,4 x 100 trials",
              time.perf_counter() - t0)


def test_criterion_5_equivariance():
    """Suite `equivariance`, n in {2,3,4}, 100 trials, v entries in
    [-5, 5]."""
    t0 = time.perf_counter()
    for n in (2, 3, 4):
        report = run_suite("equivariance", n=n, trials=100, seed=SEED)
        _no_failures(report, f"equivariance n={n}")
    _passline(5, "equivariance suites, n=2,3,4 x 100 trials",
              time.perf_counter() - t0)


def test_criterion_6_reduction_by_stages():
    """Suite `stages`: on the level set the split remainder is fixed by
    the whole translation group and stays in the shifted slice."""
    t0 = time.perf_counter()
    for n in (2, 3, 4):
        report = run_suite("stages", n=n, trials=100, seed=SEED)
        _no_failures(report, f"stages n={n}")
    _passline(6, "stages suites, n=2,3,4 x 100 trials",
              time.perf_counter() - t0)


def test_criterion_7_poisson_jacobi():
    """Symbolic antisymmetry and Jacobi on all monomial triples of total
    degree <= 3 for every chart height k <= 3 (intervals of PGL_4)."""
    budget = 30.0
    t0 = time.perf_counter()
    report = run_suite("poisson", n=4, trials=1, seed=SEED)
    _no_failures(report, "poisson n=4")
    ks = {CorootInterval.from_json(a).k for a in report.to_json()["alphas"]}
    assert ks == {1, 2, 3}
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, f"criterion 7 took {elapsed:.1f}s"
    _passline(7, "Poisson antisymmetry + Jacobi, k<=3, total degree <= 3",
              elapsed, budget)


def test_criterion_8_weyl_semiclassics():
    """Associativity on at least 200 random degree-<=3 triples and the
    semiclassical limit against the Poisson bracket on all degree-<=3
    monomial pairs (first trial runs the exhaustive pair sweep)."""
    budget = 60.0
    t0 = time.perf_counter()
    report = run_suite("weyl", n=4, trials=200, seed=SEED)
    _no_failures(report, "weyl n=4")
    assert report.completed == 200  # >= 200 random triples at each height
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, f"criterion 8 took {elapsed:.1f}s"
    _passline(8, "Weyl associativity x200 + semiclassical = Poisson",
              elapsed, budget)


def test_criterion_9_quiver_tables():
    """Dimension tables for every partition of N <= 6, against an
    independently coded table build."""
    budget = 1.0
    t0 = time.perf_counter()
    checked = 0
    for N in range(1, 7):
        for mu in Partition.all_partitions(N):
            # independent build: ascending partial sums of the reversed
            # parts, then the descending tail
            tail_sums = []
            acc = 0
            for part in mu.parts[::-1]:
                tail_sums.append(acc)
                acc += part
            expect_mv = QuiverData(
                tuple(tail_sums),
                (0,) * (mu.length - 1) + (N,))
            assert mv_quiver(mu) == expect_mv, mu
            expect_eq = QuiverData(
                tuple(tail_sums) + tuple(range(N, 0, -1)),
                (0,) * (mu.length + N))
            assert equiv_quiver(mu) == expect_eq, mu
            checked += 1
    assert checked == 1 + 2 + 3 + 5 + 7 + 11
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, f"criterion 9 took {elapsed:.1f}s"
    _passline(9, "quiver tables, every partition of N<=6", elapsed, budget)
