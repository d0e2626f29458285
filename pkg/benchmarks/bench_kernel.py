"""Compare the compiled and pure-Python product kernels.

    python3 benchmarks/bench_kernel.py [--truncation 8] [--pairs 200] [--repeat 3]
"""
import argparse
import random
import time

from ellbundle.cohomology import _backend, fibration_ring


def time_kernel(fn, pairs, table, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for a, b in pairs:
            fn(a, b, table)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--truncation", type=int, default=8)
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    R = fibration_ring(args.truncation)
    table = R.table
    rng = random.Random(args.seed)
    pairs = [(R.random_class(rng).num, R.random_class(rng).num) for _ in range(args.pairs)]
    print(f"ring {R.label}, N={R.truncation}, basis {table.size}, table nnz {table.nnz}, "
          f"{args.pairs} products")

    py = time_kernel(_backend.mul_python, pairs, table, args.repeat)
    print(f"python  {py * 1e3:9.2f} ms")
    if _backend.BACKEND != "cython":
        print("cython  unavailable (extension not built or ELLBUNDLE_PURE_PYTHON set)")
        return 0
    for a, b in pairs:
        assert _backend.mul_compiled(a, b, table) == _backend.mul_python(a, b, table)
    cy = time_kernel(_backend.mul_compiled, pairs, table, args.repeat)
    print(f"cython  {cy * 1e3:9.2f} ms   speedup {py / cy:5.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
