"""Compare the compiled and pure-Python kernels on identical workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 1]
"""

from __future__ import annotations

import argparse
import random
import time

from maxindep import _pykernels
from maxindep.constructions import build_F
from maxindep.verify import representatives

try:
    from maxindep import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_masks(rng: random.Random, n: int, p: float) -> tuple[int, ...]:
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


def workloads(seed: int) -> dict[str, list[tuple[int, ...]]]:
    rng = random.Random(seed)
    return {
        "count: 300 random G(20, 0.3)": [random_masks(rng, 20, 0.3) for _ in range(300)],
        "count: 50 random G(40, 0.15)": [random_masks(rng, 40, 0.15) for _ in range(50)],
        "count: 10 random G(60, 0.1)": [random_masks(rng, 60, 0.1) for _ in range(10)],
        "canon: 1044 classes on 7 vertices": [m for m, _ in representatives(7)],
        "canon: 200 random G(30, 0.5)": [random_masks(rng, 30, 0.5) for _ in range(200)],
        "canon: F(n, alpha), 20 <= n <= 40": [build_F(n, a).masks for n in range(20, 41) for a in (3, 5, 8)],
    }


def run_one(kernels, name: str, graphs) -> tuple[float, list]:
    start = time.perf_counter()
    if name.startswith("count"):
        out = [kernels.mis_count(m, (1 << len(m)) - 1) for m in graphs]
    else:
        out = [kernels.canonical_labeling(len(m), m)[1] for m in graphs]
    return time.perf_counter() - start, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'workload':40s}" + "".join(f"{b:>12s}" for b, _ in backends) + ("     speedup" if _ckernels else ""))
    for name, graphs in workloads(args.seed).items():
        times, results = [], []
        for _, kernels in backends:
            best = float("inf")
            for _ in range(args.repeat):
                t, out = run_one(kernels, name, graphs)
                best = min(best, t)
            times.append(best)
            results.append(out)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backends disagree on {name!r}")
        line = f"{name:40s}" + "".join(f"{t:11.4f}s" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
