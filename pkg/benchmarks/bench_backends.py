"""Compare the numpy and compiled see-saw kernels on identical workloads.

Run:  python3 benchmarks/bench_backends.py
"""

import time

import numpy as np

from grac import _seesaw as py_kernel
from grac.mubs import FunctionSet, full_mubs
from grac.quantum import sign_matrix

try:
    from grac import _seesaw_cy as cy_kernel
except ImportError:
    cy_kernel = None


def make_workload(fset, restarts, seed=0):
    rng = np.random.default_rng(seed)
    k = len(fset)
    v0 = rng.standard_normal((restarts, k, 3))
    v0 /= np.linalg.norm(v0, axis=2, keepdims=True)
    return sign_matrix(fset), np.eye(3), v0


def run_case(kernel, signs, dmat, v0, max_iters, tol, repeats=5):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = kernel.run_seesaw(signs, dmat, v0.copy(), max_iters, tol)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    cases = [
        ("pair, 64 restarts", FunctionSet.from_ints(3, (4, 2)), 64),
        ("open quadruple, 64 restarts", FunctionSet.from_ints(3, (1, 2, 3, 4)), 64),
        ("sextuple, 64 restarts", FunctionSet.from_ints(3, (1, 2, 3, 4, 5, 6)), 64),
        ("full set, 256 restarts", full_mubs(3), 256),
    ]
    tol = 1e-10
    max_iters = 10000
    header = f"{'case':32s} {'numpy':>12s} {'compiled':>12s} {'speedup':>9s} {'max |dv|':>10s}"
    print(header)
    print("-" * len(header))
    for name, fset, restarts in cases:
        signs, dmat, v0 = make_workload(fset, restarts)
        t_py, out_py = run_case(py_kernel, signs, dmat, v0, max_iters, tol)
        if cy_kernel is None:
            print(f"{name:32s} {t_py * 1e3:10.2f}ms {'absent':>12s}")
            continue
        t_cy, out_cy = run_case(cy_kernel, signs, dmat, v0, max_iters, tol)
        dv = float(np.abs(np.asarray(out_py[0]) - np.asarray(out_cy[0])).max())
        print(
            f"{name:32s} {t_py * 1e3:10.2f}ms {t_cy * 1e3:10.2f}ms "
            f"{t_py / t_cy:8.2f}x {dv:10.2e}"
        )
    if cy_kernel is None:
        print("\ncompiled kernel not built; install with a C compiler to compare")


if __name__ == "__main__":
    main()
