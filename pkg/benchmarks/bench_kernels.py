"""Compare the numba-compiled kernels with the plain-Python fallback.

Each backend runs in its own interpreter, because the choice is made from
``SBICON_DISABLE_NUMBA`` at import time. Timings are the best of ``--repeat``
runs after one warm-up call, so JIT compilation is not counted.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 100:500 200:1000 --repeat 5
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from sbicon._jit import USING_NUMBA
from sbicon.generate import generate
from sbicon.resilience import b_articulation_points, b_bridges_fast

sizes, repeat = json.loads(sys.argv[1]), int(sys.argv[2])
b_bridges_fast(generate(8, 20, 0))
b_articulation_points(generate(8, 20, 0))

def best(fn, g):
    out = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(g)
        out = min(out, time.perf_counter() - t)
    return out

rows = []
for n, m in sizes:
    g = generate(n, m, n)
    rows.append([n, m, best(b_bridges_fast, g), best(b_articulation_points, g)])
print(json.dumps({"numba": USING_NUMBA, "rows": rows}))
"""


def run_backend(sizes, repeat, disable):
    env = dict(os.environ)
    if disable:
        env["SBICON_DISABLE_NUMBA"] = "1"
    else:
        env.pop("SBICON_DISABLE_NUMBA", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(sizes), str(repeat)],
        env=env, check=True, capture_output=True, text=True,
    )
    return json.loads(out.stdout)


def size(text):
    n, m = text.split(":")
    return [int(n), int(m)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs="+", type=size,
                    default=[[50, 250], [100, 500], [200, 1000], [400, 2000]],
                    help="n:m pairs (default: %(default)s)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    fast = run_backend(args.sizes, args.repeat, disable=False)
    slow = run_backend(args.sizes, args.repeat, disable=True)
    if not fast["numba"]:
        print("note: numba is not installed, both columns use the fallback")

    head = f"{'n':>6} {'m':>7} | {'b-bridges jit':>13} {'fallback':>9} {'x':>6} | {'b-APs jit':>10} {'fallback':>9} {'x':>6}"
    print(head)
    print("-" * len(head))
    for (n, m, fb, fa), (_, _, sb, sa) in zip(fast["rows"], slow["rows"]):
        print(f"{n:>6} {m:>7} | {fb:>12.4f}s {sb:>8.3f}s {sb / fb:>6.1f} | "
              f"{fa:>9.4f}s {sa:>8.3f}s {sa / fa:>6.1f}")


if __name__ == "__main__":
    main()
