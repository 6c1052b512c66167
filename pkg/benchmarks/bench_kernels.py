"""Compare the compiled and pure-Python matching kernels.

    python benchmarks/bench_kernels.py [--max-k 7] [--repeat 3]

Kernel timings call both implementations directly; the end-to-end rows run
``pf_expansion`` in subprocesses with and without LAMBDA_PFAFFIAN_PURE=1.
"""

import argparse
import os
import subprocess
import sys
import timeit

from lambda_pfaffian import _pykernels

try:
    from lambda_pfaffian import _kernels
except ImportError:
    _kernels = None

END_TO_END = (
    "import time;"
    "from lambda_pfaffian.identities import ones_matrix, xydiff_matrix;"
    "from lambda_pfaffian.pfaffian import pf_expansion;"
    "t = time.perf_counter();"
    "pf_expansion(ones_matrix(6)); pf_expansion(xydiff_matrix(5));"
    "print(time.perf_counter() - t)"
)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def end_to_end(pure):
    env = dict(os.environ)
    env.pop("LAMBDA_PFAFFIAN_PURE", None)
    if pure:
        env["LAMBDA_PFAFFIAN_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-k", type=int, default=7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
        return 1

    print("%-24s %4s %12s %12s %8s" % ("kernel", "k", "python [s]", "compiled [s]", "speedup"))
    for name in ("matching_table", "lambda_sign_histogram"):
        py_fn = getattr(_pykernels, name)
        c_fn = getattr(_kernels, name)
        for k in range(4, args.max_k + 1):
            assert py_fn(k) == c_fn(k)
            tp = best(lambda: py_fn(k), args.repeat)
            tc = best(lambda: c_fn(k), args.repeat)
            print("%-24s %4d %12.4f %12.4f %7.1fx" % (name, k, tp, tc, tp / tc))

    tp, tc = end_to_end(True), end_to_end(False)
    print("%-24s %4s %12.4f %12.4f %7.1fx" % ("pf_expansion (e2e)", "-", tp, tc, tp / tc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
