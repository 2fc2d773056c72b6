"""Compare the numba kernels with the interpreted fallback.

Each backend runs in its own subprocess (the fallback is chosen with
QSHIFT_DISABLE_NUMBA=1 before import).  Workloads are warmed up once so
compilation time is excluded.

    python3 benchmarks/bench_kernels.py --max-cells 9
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def _timed(fn, repeat):
    fn()  # warm-up (JIT compilation, caches)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def worker(max_cells: int, repeat: int) -> dict:
    from qshift import _kernels
    from qshift.classify import sweep
    from qshift.qpoly import expand_q
    from qshift.shapes import skew_classes
    from qshift.tableaux import count_amenable

    shapes = list(skew_classes(max_cells))
    expand_shapes = [s for s in shapes if s.ncells == max_cells - 1]

    def search():
        return sum(count_amenable(s) for s in shapes)

    def expand():
        return sum(int(np.count_nonzero(expand_q(s, s.ncells).coefs)) for s in expand_shapes)

    def run_sweep():
        return len(sweep(max_cells + 3).mismatches)

    out = {"numba": _kernels.USE_NUMBA, "shapes": len(shapes)}
    for name, fn in (("amenable search", search), ("expand_q", expand), ("sweep", run_sweep)):
        seconds, result = _timed(fn, repeat)
        out[name] = {"seconds": seconds, "result": result}
    return out


def run_backend(disable: bool, max_cells: int, repeat: int) -> dict:
    env = {**os.environ, "QSHIFT_DISABLE_NUMBA": "1" if disable else "0"}
    cmd = [sys.executable, __file__, "--worker", "--max-cells", str(max_cells), "--repeat", str(repeat)]
    proc = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-cells", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    if args.worker:
        print(json.dumps(worker(args.max_cells, args.repeat)))
        return 0
    fast = run_backend(False, args.max_cells, args.repeat)
    slow = run_backend(True, args.max_cells, args.repeat)
    if args.json:
        print(json.dumps({"numba": fast, "fallback": slow}, indent=2))
        return 0
    print(f"shape classes with <= {args.max_cells} cells: {fast['shapes']}")
    print(f"{'workload':<18}{'numba [s]':>12}{'fallback [s]':>14}{'speedup':>10}  same result")
    for name in ("amenable search", "expand_q", "sweep"):
        a, b = fast[name], slow[name]
        print(f"{name:<18}{a['seconds']:>12.3f}{b['seconds']:>14.3f}{b['seconds'] / a['seconds']:>9.1f}x"
              f"  {a['result'] == b['result']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
