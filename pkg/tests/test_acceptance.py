"""Acceptance suite: one test per exit criterion, each at its stated
tolerance, printing a PASS line when it holds.

Run `pytest tests/test_acceptance.py -v -s` for the per-criterion lines.
The oracle-equivalence criterion sweeps every X up to 10^5 and is the
long pole (about a minute); everything else runs in seconds.
"""

import math
import random
import time

import numpy as np
import pytest

from tmcorr import (RationalPhase, SumLadder, build_transfer, corr_fast,
                    corr_naive, count_adjacent, count_classes_fast,
                    count_classes_naive, dilation_naive, dilation_sum,
                    expsum_fast, fit_exponent, gelfond_count,
                    jordan_block_check, char_poly, roots, scan_alpha,
                    spectral_report)
from tmcorr.correlation import NAIVE_LIMIT

from conftest import eps_table

GELFOND_LAMBDA = math.log(3) / math.log(4)   # 0.7924818...

X_SWEEP = 10**5
SWEEP_MULTIPLIERS = (3, 5, 7, 9)


def _announce(tag: str, detail: str = ""):
    suffix = f" ({detail})" if detail else ""
    print(f"\n[{tag}] PASS{suffix}")


# --- criterion 1: exact oracle equivalence ---------------------------------

@pytest.mark.parametrize("q", SWEEP_MULTIPLIERS)
def test_c1_corr_and_dilation_equal_direct_all_X(q):
    tab = eps_table(q * X_SWEEP + q)
    base = tab[1:X_SWEEP + 1]
    idx = q * np.arange(1, X_SWEEP + 1, dtype=np.int64)
    corr_memo: dict = {}
    dil_memo: dict = {}
    for r in range(q):
        dilated = tab[idx + r]
        corr_oracle = np.cumsum(base * dilated)
        dil_oracle = np.cumsum(dilated)
        for X in range(1, X_SWEEP + 1):
            if corr_fast(q, r, X, memo=corr_memo) != corr_oracle[X - 1]:
                pytest.fail(f"corr mismatch at q={q} r={r} X={X}")
            if dilation_sum(q, r, X, memo=dil_memo) != dil_oracle[X - 1]:
                pytest.fail(f"dilation mismatch at q={q} r={r} X={X}")
    _announce("C1a", f"corr/dilation exact for q={q}, all X <= 1e5")


@pytest.mark.parametrize("q", SWEEP_MULTIPLIERS)
def test_c1_count_tables_equal_direct_all_X(q):
    tab = eps_table(q * X_SWEEP + q)
    cls_base = (tab[1:X_SWEEP + 1] < 0).astype(np.int64)
    idx = q * np.arange(1, X_SWEEP + 1, dtype=np.int64)
    corr_memo: dict = {}
    dil_memo: dict = {}
    for r in range(q):
        cls_dil = (tab[idx + r] < 0).astype(np.int64)
        oracle = {}
        for i in (0, 1):
            for k in (0, 1):
                oracle[(i, k)] = np.cumsum(((cls_base == i) & (cls_dil == k))
                                           .astype(np.int64))
        for X in range(1, X_SWEEP + 1):
            table = count_classes_fast(q, r, X, corr_memo=corr_memo,
                                       dil_memo=dil_memo)
            for i in (0, 1):
                for k in (0, 1):
                    if table.cells[i][k] != oracle[(i, k)][X - 1]:
                        pytest.fail(f"count mismatch q={q} r={r} X={X} "
                                    f"cell=({i},{k})")
    _announce("C1b", f"count tables exact for q={q}, all X <= 1e5")


def test_c1_count_naive_agrees_on_samples():
    rng = random.Random(17)
    for q in SWEEP_MULTIPLIERS:
        for _ in range(3):
            X = rng.randrange(1, X_SWEEP)
            r = rng.randrange(q)
            assert count_classes_fast(q, r, X).cells == \
                count_classes_naive(q, r, X).cells
    _announce("C1c", "count_classes_naive spot agreement")


def test_c1_gelfond_count_equals_brute_force():
    # cumulative oracle over every X <= 1e4; DP queried on a dense-small
    # plus log-spaced plus seeded-random checkpoint set
    rng = random.Random(20240901)
    limit = 10**4
    tab = eps_table(limit)
    cls = (tab < 0).astype(np.int64)
    n = np.arange(limit + 1)
    checkpoints = (list(range(0, 129)) +
                   [2**e for e in range(8, 14)] +
                   [limit, limit - 1] +
                   [rng.randrange(129, limit) for _ in range(20)])
    for m in range(1, 17):
        residue = n % m
        for l in range(m):
            match_l = residue == l
            for j in (0, 1):
                mask = match_l & (cls == j)
                mask[0] = False
                oracle = np.cumsum(mask)
                for X in checkpoints:
                    if gelfond_count(X, l, m, j) != oracle[X]:
                        pytest.fail(f"gelfond mismatch X={X} l={l} m={m} j={j}")
    _announce("C1d", "gelfond digit DP equals brute force, m <= 16")


# --- criterion 2: S3 = O(sqrt X) --------------------------------------------

def test_c2_s3_ladder_slope_and_ratio():
    samples = []
    worst_ratio = 0.0
    for k in range(10, 35):
        X = 2 ** k
        m = max(abs(corr_fast(3, h, X)) for h in range(3))
        samples.append((X, float(m)))
        worst_ratio = max(worst_ratio, m / math.sqrt(X))
    fit = fit_exponent(SumLadder(label="max_h |S3|", samples=tuple(samples)))
    assert fit.slope <= 0.55, fit
    # calibrated single-constant bound for max_h |S3| / sqrt(X)
    assert worst_ratio <= 1.25, worst_ratio
    _announce("C2", f"S3 slope {fit.slope:.4f} <= 0.55, "
                    f"ratio bound {worst_ratio:.3f} <= 1.25")


# --- criterion 3: S5 = O(X^mu) ----------------------------------------------

def test_c3_s5_ladder_slope_and_spectral_exponent():
    samples = []
    for k in range(10, 35):
        X = 2 ** k
        m = max(abs(corr_fast(5, l, X)) for l in range(5))
        samples.append((X, float(m)))
    fit = fit_exponent(SumLadder(label="max_l |S5|", samples=tuple(samples)))
    assert fit.slope <= 0.66, fit
    rep = spectral_report(build_transfer(5))
    assert abs(rep.exponent - 0.60538) <= 1e-4, rep.exponent
    _announce("C3", f"S5 slope {fit.slope:.4f} <= 0.66, "
                    f"exponent {rep.exponent:.5f} = 0.60538 +- 1e-4")


# --- criterion 4: eigenstructure ---------------------------------------------

def test_c4_eigenstructure():
    p3 = char_poly(tuple(zip(*build_transfer(3).transfer)))
    zs = sorted(roots(p3), key=lambda z: (z.real, z.imag))
    half_sqrt7 = math.sqrt(7) / 2
    expected = sorted([complex(0.5, -half_sqrt7), complex(0.5, half_sqrt7),
                       complex(1, 0)], key=lambda z: (z.real, z.imag))
    for got, want in zip(zs, expected):
        assert abs(got - want) <= 1e-9, (got, want)

    rep5 = spectral_report(build_transfer(5))
    mult_at_one = [m for z, m in rep5.roots if abs(z - 1) < 1e-6]
    assert mult_at_one == [2]

    A1 = tuple(zip(*build_transfer(5).transfer))
    assert jordan_block_check(A1, 1) == 4
    _announce("C4", "q=3 spectrum exact to 1e-9; q=5 double root at 1, "
                    "rank(A1 - I) = 4")


# --- criterion 5: count tables carry main term X/4 ----------------------------

def test_c5_main_term_deviations():
    X = 2 ** 24
    bound = X ** 0.85
    for q, shifts in ((3, range(3)), (5, range(5))):
        for r in shifts:
            table = count_classes_fast(q, r, X)
            for i in (0, 1):
                for k in (0, 1):
                    dev = abs(table.cells[i][k] - X / 4)
                    assert dev <= bound, (q, r, i, k, dev)
    slopes = {}
    for q in (3, 5):
        samples = []
        for k in range(10, 31):
            Xk = 2 ** k
            worst = max(count_classes_fast(q, r, Xk).max_abs_deviation()
                        for r in range(q))
            samples.append((Xk, worst))
        fit = fit_exponent(SumLadder(label=f"q={q} deviations",
                                     samples=tuple(samples)))
        assert fit.slope <= 0.80, (q, fit)
        slopes[q] = fit.slope
    _announce("C5", f"X=2^24 cells within X^0.85; deviation slopes "
                    f"q3={slopes[3]:.4f}, q5={slopes[5]:.4f} <= 0.80")


# --- criterion 6: Gelfond progression counts ----------------------------------

def test_c6_gelfond_main_term():
    X = 2 ** 20
    bound = X ** 0.85
    for m in (3, 5, 7):
        for l in range(m):
            for j in (0, 1):
                T = gelfond_count(X, l, m, j)
                assert abs(T - X / (2 * m)) <= bound, (m, l, j, T)
    # brute-force agreement at small scale is covered exhaustively by C1d;
    # re-assert a couple of fixed points here for self-containment
    assert gelfond_count(8, 0, 3, 0) == 2
    assert gelfond_count(10**4, 2, 7, 1) == sum(
        1 for n in range(1, 10**4 + 1)
        if n % 7 == 2 and (n.bit_count() & 1) == 1)
    _announce("C6", "T_j(2^20, l, m) within X^0.85 of X/(2m) for m in {3,5,7}")


# --- criterion 7: exponential sum calibration ----------------------------------

def test_c7_expsum_calibration_and_grid():
    third = RationalPhase(1, 3)
    samples = []
    for k in range(1, 41):
        modulus = abs(expsum_fast(third, 2 ** k))
        target = 3 ** (k / 2)
        assert abs(modulus - target) <= 1e-6 * target, k
        if k >= 8:
            samples.append((2 ** k, modulus))
    fit = fit_exponent(SumLadder(label="|S(1/3)|", samples=tuple(samples)))
    assert abs(fit.slope - 0.7924818) <= 1e-3, fit

    grid_samples = []
    for k in range(10, 31):
        X = 2 ** k
        grid_samples.append((X, scan_alpha(X, 1024).max_modulus))
    grid_fit = fit_exponent(SumLadder(label="grid max |S|",
                                      samples=tuple(grid_samples)))
    assert grid_fit.slope <= GELFOND_LAMBDA + 0.02, grid_fit
    _announce("C7", f"|S(1/3, 2^k)| = 3^(k/2) to 1e-6, slope "
                    f"{fit.slope:.7f}; grid slope {grid_fit.slope:.3f} "
                    f"<= lambda + 0.02")


# --- criterion 8: adjacent-pair asymptotics ------------------------------------

def test_c8_adjacent_main_terms():
    X = 2 ** 20
    F = count_adjacent(X)
    tol = 50 * math.log2(X)
    assert abs(F[0][1] - X / 3) <= tol
    assert abs(F[1][0] - X / 3) <= tol
    assert abs(F[0][0] - X / 6) <= tol
    assert abs(F[1][1] - X / 6) <= tol
    _announce("C8", f"F cells within 50*log2(X) of X/3, X/6 at X=2^20")


# --- criterion 9: partition and boundedness ------------------------------------

def test_c9_partition_and_bounded_partial_sums(eps_1m):
    rng = random.Random(2718)
    for _ in range(40):
        q = rng.choice(SWEEP_MULTIPLIERS)
        r = rng.randrange(q)
        X = rng.randrange(0, 2 ** 40)
        table = count_classes_fast(q, r, X)
        assert sum(v for row in table.cells for v in row) == X

    sums = np.cumsum(eps_1m)    # sums[X] = sum_{n=0..X} eps(n)
    assert int(np.abs(sums).max()) <= 1
    # closed form agrees with direct summation everywhere
    even_X = np.arange(0, 10**6 + 1, 2)
    closed = np.zeros(10**6 + 1, dtype=np.int64)
    closed[even_X] = eps_1m[even_X]
    assert np.array_equal(sums, closed)
    _announce("C9", "partition exact; |sum_{n<=X} eps(n)| <= 1 for X <= 1e6")


# --- criterion 10: performance contract ----------------------------------------

def test_c10_fast_paths_meet_latency_budget():
    X = 2 ** 40
    best_corr = min(_time_once(corr_fast, 3, 1, X) for _ in range(7))
    best_count = min(_time_once(count_classes_fast, 5, 3, X) for _ in range(7))
    assert best_corr < 0.010, f"corr_fast took {best_corr * 1000:.2f} ms"
    assert best_count < 0.010, f"count_classes_fast took {best_count * 1000:.2f} ms"

    for naive_call in (lambda: corr_naive(3, 0, NAIVE_LIMIT + 1),
                       lambda: dilation_naive(3, 0, NAIVE_LIMIT + 1),
                       lambda: count_classes_naive(3, 0, NAIVE_LIMIT + 1),
                       lambda: count_adjacent(NAIVE_LIMIT + 1)):
        with pytest.raises(ValueError):
            naive_call()
    _announce("C10", f"corr_fast {best_corr * 1e3:.2f} ms, "
                     f"count_classes_fast {best_count * 1e3:.2f} ms at X=2^40; "
                     "naive paths guarded")


def _time_once(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0
