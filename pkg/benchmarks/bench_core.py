"""Compare the compiled kernels with the pure-Python fallback.

Usage: python benchmarks/bench_core.py [--repeat N] [--n N]
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from lgraphs import _core
from lgraphs.geometry import LSegment, arm_tuples
from lgraphs.graph import Graph, Labeling
from lgraphs.monotone import JUMPING8, build_monotone


def _masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.neighbors(v)) for v in range(g.n)]


def _workloads(n: int) -> dict[str, tuple]:
    rng = random.Random(0)
    path = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(0, n - 2, 5)])
    order = list(range(n))
    adj = [path.neighbors(v) for v in range(n)]
    hs, vs = arm_tuples(build_monotone(path, Labeling.identity(n)))
    segs = {}
    for v in range(n // 10):
        h = rng.randint(1, 40)
        segs[v] = LSegment(rng.randint(0, 400), rng.randint(h, 400 + h), rng.randint(1, 60), h)
    rhs, rvs = arm_tuples(segs)
    return {
        f"find_witness path n={n}": ("find_witness", (order, adj)),
        f"sweep monotone n={n}": ("sweep", (hs, vs, -1)),
        f"sweep random n={n // 10}": ("sweep", (rhs, rvs, -1)),
        "search_first jumping8 pruned": ("search_first", (8, _masks(JUMPING8), 10**9, -1, True)),
        "count_all jumping8": ("count_all", (8, _masks(JUMPING8))),
    }


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="timing repetitions, best is reported")
    ap.add_argument("--n", type=int, default=20_000, help="size of the path-like workloads")
    args = ap.parse_args(argv)

    backends = {"python": _core.python_kernels}
    if _core.compiled_kernels is not None:
        backends["compiled"] = _core.compiled_kernels
    else:
        print("compiled kernels not built; reporting the pure-Python backend only", file=sys.stderr)

    print(f"{'workload':34} " + " ".join(f"{b:>12}" for b in backends) + f" {'speedup':>9}")
    for name, (fn, fargs) in _workloads(args.n).items():
        times = {}
        for b, mod in backends.items():
            f = getattr(mod, fn)
            times[b] = min(timeit.repeat(lambda: f(*fargs), number=1, repeat=args.repeat))
        speed = f"{times['python'] / times['compiled']:8.1f}x" if "compiled" in times else ""
        print(f"{name:34} " + " ".join(f"{times[b] * 1e3:10.2f}ms" for b in backends) + f" {speed:>9}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
