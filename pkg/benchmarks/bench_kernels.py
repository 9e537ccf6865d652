"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``. Each kernel is timed on the
same inputs through both backends and the results are checked for equality.
"""

import argparse
import timeit

import numpy as np

from bipartify import _pykernels
from bipartify.generators import sample_instance
from bipartify.oracle import adjacency_bitmasks
from bipartify.spectral import adjacency_matrix

try:
    from bipartify import _ckernels
except ImportError:
    _ckernels = None


def _cases(n, count, seed):
    rng = np.random.default_rng(seed)
    graphs = [sample_instance("ER", n, rng)[0] for _ in range(count)]
    sides = [rng.integers(2, size=n).astype(np.int8) for _ in graphs]
    return graphs, sides


def bench_movement(impl, graphs, sides):
    out = []
    for g, s in zip(graphs, sides):
        indptr, indices = g.csr
        side = s.copy()
        moves = np.zeros(g.n, dtype=np.int32)
        impl.movement_routine(indptr, indices, side, 0, moves)
        out.append(side.tobytes())
    return out


def bench_gray(impl, graphs):
    return [impl.gray_maxcut(adjacency_bitmasks(g), g.n) for g in graphs]


def bench_jacobi(impl, graphs):
    return [impl.jacobi_eigh(adjacency_matrix(g), 100 * g.n * g.n, 1e-15)[0].round(10).tolist()
            for g in graphs]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--gray-n", type=int, default=16)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; nothing to compare")
        return
    graphs, sides = _cases(args.n, args.count, 0)
    gray_graphs, _ = _cases(args.gray_n, max(1, args.count // 10), 1)
    jobs = [
        ("movement_routine", lambda m: bench_movement(m, graphs, sides)),
        (f"gray_maxcut (n={args.gray_n})", lambda m: bench_gray(m, gray_graphs)),
        ("jacobi_eigh", lambda m: bench_jacobi(m, graphs)),
    ]
    print(f"{'kernel':<24}{'cython ms':>12}{'python ms':>12}{'speedup':>10}")
    for name, job in jobs:
        assert job(_ckernels) == job(_pykernels), name
        t_c = min(timeit.repeat(lambda: job(_ckernels), number=1, repeat=args.repeat))
        t_p = min(timeit.repeat(lambda: job(_pykernels), number=1, repeat=args.repeat))
        print(f"{name:<24}{1e3 * t_c:>12.2f}{1e3 * t_p:>12.2f}{t_p / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
