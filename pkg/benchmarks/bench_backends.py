"""Compare the compiled and pure-Python kernel backends on the hot loops.

Run directly:  python3 benchmarks/bench_backends.py
"""

import argparse
import time

import numpy as np

from ringlab._kernels import get_backend
from ringlab.rings import make_product, make_zmod


def _bench(label, fn, repeat):
    best = min(_timed(fn) for _ in range(repeat))
    print(f"  {label:<28s} {best * 1e3:9.3f} ms")
    return best


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=256, help="ring order for the workloads")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    R = make_zmod(args.order)
    P = make_product([make_zmod(4), make_zmod(4), make_zmod(4)])
    add, mul, neg = R.tables
    member = np.zeros(R.order, dtype=np.uint8)
    member[:: max(2, args.order // 16)] = 1

    results = {}
    for name in ("pure", "cython"):
        try:
            k = get_backend(name)
        except Exception as e:
            print(f"backend {name}: unavailable ({e})")
            continue
        print(f"backend {name}:")
        results[name] = {
            "vnr": _bench("vnr_witness", lambda: k.vnr_witness(mul), args.repeat),
            "closure": _bench(
                "ideal closure (3 seeds)",
                lambda: k.closure(add, neg, mul, [2, 3, args.order // 2]),
                args.repeat,
            ),
            "sum": _bench(
                "sum_of_sets",
                lambda: k.sum_of_sets(add, list(range(0, args.order, 2)), list(range(0, args.order, 3))),
                args.repeat,
            ),
            "prime": _bench(
                "prime_witness", lambda: k.prime_witness(mul, member), args.repeat
            ),
            "nilp": _bench("nilpotent_mask", lambda: k.nilpotent_mask(mul), args.repeat),
            "prod_nilp": _bench(
                "nilpotent_mask (Z/4^3)", lambda: k.nilpotent_mask(P.mul_table), args.repeat
            ),
        }

    if {"pure", "cython"} <= set(results):
        print("speedup (pure / cython):")
        for key in results["pure"]:
            ratio = results["pure"][key] / max(results["cython"][key], 1e-9)
            print(f"  {key:<28s} {ratio:7.1f}x")


if __name__ == "__main__":
    main()
