"""Compare the compiled and pure-Python character-search kernels.

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time

from famalg import kernel
from famalg.charsearch import compile_system
from famalg.field import GF
from famalg.fralg import cyclic_group, function_algebra, k_power
from famalg.mapuniv import construct_iso_algebra, construct_map_algebra, pontryagin_dual
from famalg.fpalg import make_algebra


def cases():
    F7 = GF(7)
    yield "I^c(K^3,K^3) over GF(7)", construct_iso_algebra(k_power(3, F7), k_power(3, F7), True).Z
    yield "P^c(K(Z/3)) over GF(7)", pontryagin_dual(function_algebra(cyclic_group(3), F7)).Z
    B = make_algebra(["x"], ["x^3 - 1"], False, F7)
    yield "M^c(KZ/3,K^4) over GF(7)", construct_map_algebra(B, k_power(4, F7), True).Z
    free = make_algebra(["a", "b", "c", "d", "e", "f"], ["a*b*c - d*e*f"], True, F7)
    yield "{a..f | abc - def} over GF(7)", free


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    kernels = kernel.available()
    if "cython" not in kernels:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'case':34} {'kernel':8} {'solutions':>9} {'nodes':>9} {'best s':>9}")
    for label, C in cases():
        p = C.field.p
        g = len(C.names)
        flat = compile_system(C.presentation.relations, g, p)
        results = {}
        for name, search in sorted(kernels.items()):
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                sols, nodes = search(g, p, *flat, 10 ** 7)
                best = min(best, time.perf_counter() - t)
            results[name] = (sols, best)
            print(f"{label:34} {name:8} {len(sols):9d} {nodes:9d} {best:9.4f}")
        if len(results) == 2:
            same = [list(s) for s in results["python"][0]] == [list(s) for s in results["cython"][0]]
            speed = results["python"][1] / max(results["cython"][1], 1e-9)
            print(f"{'':34} speedup {speed:.1f}x, outputs {'identical' if same else 'DIFFER'}")


if __name__ == "__main__":
    main()
