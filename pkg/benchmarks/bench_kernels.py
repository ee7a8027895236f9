#!/usr/bin/env python3
"""Benchmark the compiled permutation kernels against the pure-Python twin.

Runs seeded micro-benchmarks for every kernel function, then an end-to-end
witness-construction benchmark executed in a subprocess per backend (the
backend is fixed at import time, so each end-to-end run needs its own
interpreter).

Usage: python benchmarks/bench_kernels.py [--cases N] [--seed S]
"""

import argparse
import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from zariski import _kernels_py as pure  # noqa: E402

try:
    from zariski import _kernels as compiled
except ImportError:
    compiled = None


def random_map(rng, support=12):
    images = list(range(support))
    rng.shuffle(images)
    return {i: y for i, y in enumerate(images) if i != y}


def build_workload(seed, cases):
    rng = random.Random(seed)
    pairs = [(random_map(rng), random_map(rng)) for _ in range(cases)]
    words = [([random_map(rng) for _ in range(rng.randint(2, 5))],
              random_map(rng)) for _ in range(cases)]
    rows = []
    for _ in range(cases // 10):
        ra = [[random_map(rng) for _ in range(rng.randint(1, 4))]
              for _ in range(3)]
        rb = [[random_map(rng) for _ in range(len(r))] for r in ra]
        rows.append((ra, rb, random_map(rng)))
    entry_sets = [[random_map(rng) for _ in range(12)]
                  for _ in range(cases // 50)]
    points = [set(rng.sample(range(30), 10)) for _ in range(cases // 10)]
    return pairs, words, rows, entry_sets, points


def bench(fn, reps=1):
    best = float("inf")
    for _ in range(max(reps, 1)):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def micro_benchmarks(seed, cases):
    pairs, words, rows, entry_sets, points = build_workload(seed, cases)
    suites = {
        "compose_maps": lambda k: [k.compose_maps(p, q) for p, q in pairs],
        "invert_map": lambda k: [k.invert_map(p) for p, _ in pairs],
        "eval_word_maps": lambda k: [k.eval_word_maps(c, x) for c, x in words],
        "rows_all_differ": lambda k: [k.rows_all_differ(a, b, x)
                                      for a, b, x in rows],
        "seven_parts": lambda k: [k.seven_parts(c) for c in entry_sets],
        "translate_points": lambda k: [k.translate_points(t, c)
                                       for t in points
                                       for c in entry_sets],
    }
    print(f"{'kernel':<18} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, suite in suites.items():
        t_py = bench(lambda: suite(pure), reps=3)
        if compiled is not None:
            t_c = bench(lambda: suite(compiled), reps=3)
            print(f"{name:<18} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms "
                  f"{t_py / t_c:>7.1f}x")
        else:
            print(f"{name:<18} {t_py * 1e3:>8.2f}ms {'-':>10} {'-':>8}")


END_TO_END = r"""
import time
from random import Random
from zariski import backend_name
from zariski.randgen import rand_proper_pair
from zariski.witness import intersect_witness, symw_oracle
from zariski.ragged import membership
from zariski.groups import SYM

rng = Random({seed})
inputs = [(rand_proper_pair(rng, 3, 3, 8), rand_proper_pair(rng, 3, 3, 8))
          for _ in range({cases})]
oracle = symw_oracle()
t0 = time.perf_counter()
for P1, P2 in inputs:
    g, _ = intersect_witness(P1, P2, oracle)
    assert membership(P1, g, SYM) and membership(P2, g, SYM)
print(f"{{backend_name():<8}} {{time.perf_counter() - t0:.3f}}s "
      f"for {cases} intersection witnesses")
"""


def end_to_end(seed, cases):
    src = os.path.join(os.path.dirname(__file__), "..", "src")
    code = END_TO_END.format(seed=seed, cases=cases)
    sys.stdout.flush()
    for pure_env in ("", "1"):
        env = dict(os.environ, ZARISKI_PURE=pure_env,
                   PYTHONPATH=src + os.pathsep + os.environ.get("PYTHONPATH", ""))
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if compiled is None:
        print("note: compiled kernels not built; timing pure Python only\n")
    micro_benchmarks(args.seed, args.cases)
    print()
    end_to_end(args.seed, max(args.cases // 40, 50))


if __name__ == "__main__":
    main()
