"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from topocheck import _kernels

try:
    from topocheck import _speedups
except ImportError:
    _speedups = None


def cases(rng):
    # an 8-point chain: row p holds every point below it
    rows8 = [sum(1 << q for q in range(p + 1)) for p in range(8)]
    rows12 = [(1 << 12) - 1 if p % 3 == 0 else (1 << p) | 1 for p in range(12)]
    flags12 = [rng.random() < 0.3 for _ in range(1 << 12)]
    return [
        ("enumerate_preorders n=5", lambda k: k.enumerate_preorders(5)),
        ("enumerate_preorders n=6", lambda k: k.enumerate_preorders(6)),
        ("closure_table n=12", lambda k: k.closure_table(12, rows12)),
        ("interior_table n=12", lambda k: k.interior_table(12, rows12)),
        ("subset_union n=12", lambda k: k.subset_union(12, flags12)),
        ("superset_meet n=12", lambda k: k.superset_meet(12, flags12)),
        ("all_subsets n=12", lambda k: k.all_subsets(12, flags12)),
        ("opens_from_basis n=8", lambda k: k.opens_from_basis(8, rows8)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(0)
    backends = [("python", _kernels)]
    if _speedups is not None:
        backends.append(("cython", _speedups))
    else:
        print("compiled extension not built; timing the fallback only")
    print(f"{'kernel':28s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in cases(rng):
        times = []
        for _, mod in backends:
            times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)))
        line = f"{label:28s}" + "".join(f"{t:11.4f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            line += f"  {times[0] / times[1]:9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
