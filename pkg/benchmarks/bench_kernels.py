"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row reports the best wall time per backend and the speedup.  Outputs of
the two backends are compared before timing.
"""
import argparse
import time

import numpy as np

from fhgv import _pykernels

try:
    from fhgv import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def greedy_case(mod, n, q, d):
    cands = _pykernels.enumerate_words(n, q, 0, q ** n)
    cands = cands[_pykernels.cyclic_distances(cands) >= d]
    code = np.zeros((n * len(cands), n), dtype=np.uint16)
    size, _ = mod.greedy_extend(code, 0, cands, d, False)
    return code[:size].copy()


def cases(rng):
    words = rng.integers(0, 4, size=(20_000, 64), dtype=np.uint16)
    big = rng.integers(0, 4, size=(2_000, 400), dtype=np.uint16)
    pairs = rng.integers(0, 3, size=(1_500, 16), dtype=np.uint16)
    return [
        ("cyclic_distances 20000 x n=64", lambda m: m.cyclic_distances(words)),
        ("cyclic_distances 2000 x n=400", lambda m: m.cyclic_distances(big)),
        ("distance_histogram n=12 q=3", lambda m: m.distance_histogram(12, 3)),
        ("greedy_extend n=10 q=3 d=4", lambda m: greedy_case(m, 10, 3, 4)),
        ("min_pairwise_distance 1500 x n=16", lambda m: m.min_pairwise_distance(pairs)),
    ]


def same(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return tuple(a) == tuple(b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the numpy fallback is available")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':40s} {'numpy s':>10s} {'cython s':>10s} {'speedup':>9s}")
    for name, fn in cases(rng):
        tp, outp = best_of(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:40s} {tp:10.4f} {'-':>10s} {'-':>9s}")
            continue
        tc, outc = best_of(lambda: fn(_ckernels), args.repeat)
        if not same(outp, outc):
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:40s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
