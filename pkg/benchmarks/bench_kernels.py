"""Benchmark the batched polynomial-evaluation kernel: numba vs numpy.

This kernel sits inside every overshear step, so contour refinement and
certification grids hit it thousands of times. Shapes below mirror the
real call sites: a handful of low-degree terms in 2-3 variables, batch
sizes from a 64-sample contour up to a full refinement sweep.

Run:  python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from hologroup._kernels import get_numba_impl, poly_eval_numpy

REPEATS = 7

# (terms, variables, max exponent, batch points, calls per timing)
SHAPES = [
    ("contour pass      ", 3, 2, 2, 64, 200),
    ("refined contour   ", 3, 2, 2, 4096, 50),
    ("certification grid", 6, 2, 2, 100, 1000),
    ("wide batch        ", 6, 3, 2, 65536, 5),
    ("high degree       ", 4, 3, 8, 16384, 10),
]


def random_problem(rng, n_terms, n_vars, max_deg, n_pts):
    exps = rng.integers(0, max_deg + 1, size=(n_terms, n_vars)).astype(np.int64)
    coeffs = rng.normal(size=n_terms) + 1j * rng.normal(size=n_terms)
    pts = (rng.normal(scale=0.7, size=(n_pts, n_vars))
           + 1j * rng.normal(scale=0.7, size=(n_pts, n_vars)))
    return exps, coeffs.astype(np.complex128), pts.astype(np.complex128)


def best_of(fn, exps, coeffs, pts, calls):
    best = np.inf
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        for _ in range(calls):
            fn(exps, coeffs, pts)
        best = min(best, (time.perf_counter() - t0) / calls)
    return best


def main():
    numba_impl = get_numba_impl()
    rng = np.random.default_rng(42)
    print(f"{'case':<20} {'points':>7} {'numpy':>11} {'numba':>11} {'speedup':>8}")
    for name, n_terms, n_vars, max_deg, n_pts, calls in SHAPES:
        exps, coeffs, pts = random_problem(rng, n_terms, n_vars, max_deg, n_pts)
        if numba_impl is not None:
            numba_impl(exps, coeffs, pts)  # compile before timing
            agree = np.max(np.abs(numba_impl(exps, coeffs, pts)
                                  - poly_eval_numpy(exps, coeffs, pts)))
            assert agree < 1e-9 * max(1.0, float(np.max(np.abs(coeffs)))), agree
        t_np = best_of(poly_eval_numpy, exps, coeffs, pts, calls)
        if numba_impl is None:
            print(f"{name:<20} {n_pts:>7} {t_np * 1e6:>9.1f}us {'n/a':>11} {'n/a':>8}")
            continue
        t_nb = best_of(numba_impl, exps, coeffs, pts, calls)
        print(f"{name:<20} {n_pts:>7} {t_np * 1e6:>9.1f}us {t_nb * 1e6:>9.1f}us "
              f"{t_np / t_nb:>7.1f}x")
    if numba_impl is None:
        print("numba is not importable; only the numpy path was timed")


if __name__ == "__main__":
    main()
