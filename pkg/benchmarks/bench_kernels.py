"""Compare the compiled and pure-Python kernels on a few exact workloads.

Every timing runs in a fresh interpreter: the backend is fixed at import
time and the algebra caches would otherwise make repeats free.  Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from uawkit import kernels
from uawkit.coeff import Q, RatQ
from uawkit.identities import check_identity
from uawkit.hom import check_theorem_main, check_theorem_main2
from uawkit.words import evaluate

def ratq_sum():
    acc = RatQ(0)
    for i in range(1, 120):
        acc = acc + (Q ** (i % 7) + i) / (Q ** 2 + i * Q + 1)
    return acc

def u_products():
    x = evaluate("(x + q*y + nz)^4 * (z + Lam)^3", "u")
    return x

def u_power():
    return evaluate("(x + q^-1*y + z + (q+1)^-1*nx)^8", "u")

def injectivity():
    from uawkit.hom import injectivity_rank_check
    return injectivity_rank_check(3, "specialized", q_val=2)

def ef_power():
    return check_identity("ef_power.t4")

def main_theorems():
    return check_theorem_main(), check_theorem_main2()

fn = globals()[sys.argv[1]]
t0 = time.perf_counter()
fn()
print(json.dumps({"backend": kernels.BACKEND, "seconds": time.perf_counter() - t0}))
"""

WORKLOADS = ("ratq_sum", "u_products", "u_power", "injectivity", "ef_power", "main_theorems")


def run(backend, workload, repeat):
    env = dict(os.environ, UAWKIT_BACKEND=backend)
    best = None
    for _ in range(repeat):
        res = subprocess.run(
            [sys.executable, "-c", WORKER, workload],
            env=env, capture_output=True, text=True, check=True,
        )
        out = json.loads(res.stdout)
        assert out["backend"] == backend
        best = out["seconds"] if best is None else min(best, out["seconds"])
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':<16}{'python (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for n in WORKLOADS:
        tp = run("python", n, args.repeat)
        tc = run("compiled", n, args.repeat)
        print(f"{n:<16}{tp:>12.4f}{tc:>14.4f}{tp / tc:>9.2f}x")


if __name__ == "__main__":
    main()
