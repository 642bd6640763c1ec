#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernel backends.

Two views:

* micro: raw best_cover / pack_bound / pick_target throughput on random
  mask families, calling both kernel classes in-process.
* end-to-end: the `domset bench` command timed in subprocesses with
  DOMSET_KERNEL forced to each backend, checking on the way that both
  produce byte-identical CSV output.

Usage: python benchmarks/kernel_benchmark.py [--sizes 32,64,128] [--repeat 3]
"""

import argparse
import os
import subprocess
import sys
import tempfile
import time
from pathlib import Path

from domset._pykernels import BitsetKernel as PyKernel
from domset.generators import SplitMix64

try:
    from domset._ckernels import BitsetKernel as CKernel
except ImportError:
    CKernel = None


def random_masks(rng, count, nbits):
    out = []
    for _ in range(count):
        mask = 0
        for shift in range(0, nbits, 64):
            mask |= rng.next_u64() << shift
        out.append(mask & ((1 << nbits) - 1))
    return out


def micro(sizes, repeat):
    print("== micro: kernel queries (lower is better) ==")
    print(f"{'n':>5} {'query':<12} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for nbits in sizes:
        rng = SplitMix64(nbits)
        masks = random_masks(rng, nbits, nbits)
        actives = random_masks(rng, 200, nbits)
        kernels = {"python": PyKernel(masks, nbits)}
        if CKernel is not None:
            kernels["compiled"] = CKernel(masks, nbits)
        for query in ("best_cover", "pack_bound", "pick_target"):
            times = {}
            outputs = {}
            for name, kern in kernels.items():
                fn = getattr(kern, query)
                best = float("inf")
                for _ in range(repeat):
                    t0 = time.perf_counter()
                    out = [fn(a) for a in actives]
                    best = min(best, time.perf_counter() - t0)
                times[name] = best
                outputs[name] = out
            if len(outputs) == 2 and outputs["python"] != outputs["compiled"]:
                sys.exit(f"backend mismatch in {query} at n={nbits}")
            py = times["python"]
            if CKernel is None:
                print(f"{nbits:>5} {query:<12} {py * 1e3:>9.2f}ms {'-':>10} {'-':>8}")
            else:
                cc = times["compiled"]
                print(
                    f"{nbits:>5} {query:<12} {py * 1e3:>9.2f}ms {cc * 1e3:>9.2f}ms "
                    f"{py / cc:>7.1f}x"
                )


def end_to_end(repeat):
    print("\n== end to end: domset bench under each backend ==")
    specs = []
    for seed in range(10):
        specs += ["--gen", f"gnp:n=64,p=0.1,seed={seed}"]
        specs += ["--gen", f"random_tree:n=64,seed={seed}"]
        specs += ["--gen", f"d_degenerate:n=64,d=3,seed={seed}"]
    args = [sys.executable, "-m", "domset.cli", "bench", *specs,
            "--algos", "classical,fixed:3,auto,hybrid"]
    outputs = {}
    timings = {}
    backends = ["python"] + (["c"] if CKernel is not None else [])
    with tempfile.TemporaryDirectory() as tmp:
        for backend in backends:
            env = dict(os.environ, DOMSET_KERNEL=backend)
            out = Path(tmp) / f"{backend}.csv"
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                subprocess.run(args + ["--out", str(out)], env=env, check=True)
                best = min(best, time.perf_counter() - t0)
            outputs[backend] = out.read_bytes()
            timings[backend] = best
    for backend in backends:
        print(f"  {backend:<8} {timings[backend]:.2f}s")
    if len(backends) == 2:
        if outputs["python"] != outputs["c"]:
            sys.exit("backend mismatch: bench CSVs differ")
        print(f"  CSVs byte-identical; speedup {timings['python'] / timings['c']:.1f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="32,64,128,256")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if CKernel is None:
        print("note: compiled kernels unavailable, timing pure Python only")
    micro([int(s) for s in args.sizes.split(",")], args.repeat)
    end_to_end(args.repeat)


if __name__ == "__main__":
    main()
