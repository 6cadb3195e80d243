"""Compare the compiled and pure-Python elimination kernels, and the reduced
complex against the order-complex oracle.

    python3 benchmarks/bench_kernels.py [--sphere-dim 3] [--repeat 3]

Inputs are the boundary matrices of the barycentric subdivision of the
boundary of a simplex, plus a random dense integer matrix.
"""
import argparse
import time

import numpy as np

from lcfhomology import _pykernels
from lcfhomology.builders import SimplicialComplex, face_poset
from lcfhomology.complexes import oracle_complex, reduced_complex
from lcfhomology.homology import ZZ, homology

try:
    from lcfhomology import _ckernels
except ImportError:
    _ckernels = None


def sphere(d):
    """Boundary of the (d+1)-simplex."""
    n = d + 2
    return SimplicialComplex.from_facets(range(n), [[v for v in range(n) if v != i] for i in range(n)])


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def kernel_rows(name, M, repeat):
    rows = []
    impls = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    for label, fn in (
        ("rank mod 2", lambda k: k.rank_mod_p(M, 2)),
        ("rank over Q", lambda k: k.rank_rational(M.tolist())),
        ("smith form", lambda k: k.smith_diagonal(M.tolist())),
    ):
        timings, answers = {}, set()
        for impl_name, impl in impls:
            t, ans = best_of(lambda: fn(impl), repeat)
            timings[impl_name] = t
            answers.add(str(ans))
        assert len(answers) == 1, f"backends disagree on {label} for {name}"
        speedup = timings["python"] / timings["cython"] if "cython" in timings else float("nan")
        rows.append((name, M.shape, label, timings["python"], timings.get("cython"), speedup))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--sphere-dim", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    P, K = face_poset(sphere(args.sphere_dim))
    O = oracle_complex(P, reduced=True)
    mats = [(f"oracle d_{n} of S^{args.sphere_dim}", O.matrix(n))
            for n in sorted(O.differentials) if O.matrix(n).size]
    mats.sort(key=lambda x: -x[1].size)
    rng = np.random.default_rng(args.seed)
    mats = mats[:2] + [("random 80x80", rng.integers(-3, 4, size=(80, 80)).astype(np.int64))]

    print(f"compiled kernels: {'yes' if _ckernels else 'no'}")
    print(f"{'input':28} {'shape':>12} {'kernel':12} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, M in mats:
        for row in kernel_rows(name, M, args.repeat):
            n, shape, label, tp, tc, sp = row
            tc_s = f"{tc:10.4f}" if tc is not None else f"{'-':>10}"
            print(f"{n:28} {str(shape):>12} {label:12} {tp:10.4f} {tc_s} {sp:8.1f}")

    t_red, H_red = best_of(lambda: homology(reduced_complex(P, K, reduced=True), ZZ), args.repeat)
    t_ora, H_ora = best_of(lambda: homology(oracle_complex(P, reduced=True), ZZ), args.repeat)
    assert H_red == H_ora
    print()
    print(f"homology of S^{args.sphere_dim} over Z: {H_red}")
    print(f"  reduced complex: {reduced_complex(P, K).total_rank():6d} generators, {t_red:.4f} s")
    print(f"  order complex:   {O.total_rank() - 1:6d} generators, {t_ora:.4f} s")
    print(f"  speedup of the reduced complex: {t_ora / t_red:.1f}x")


if __name__ == "__main__":
    main()
