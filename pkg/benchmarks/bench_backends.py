"""Compare the compiled GMP kernels with the pure-Python fallback.

Each backend runs in its own interpreter (the choice is fixed at import):

    python benchmarks/bench_backends.py [--repeat 3] [--trials 50]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, sys, time
from qumbral import _backend
from qumbral.algebra import Poly, poly_mul
from qumbral.presets import standard_presets
from qumbral.verify import SUITES, run_suite

trials, repeat = int(sys.argv[1]), int(sys.argv[2])
timings = {}

def best(fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)

rng = random.Random(0)
a = Poly(rng.randint(-99, 99) / _backend.Rational(rng.randint(1, 99)) for _ in range(40))
b = Poly(rng.randint(-99, 99) / _backend.Rational(rng.randint(1, 99)) for _ in range(40))
timings["kernel:convolve(40x40) x200"] = best(lambda: [poly_mul(a, b) for _ in range(200)])
timings["context build (6 presets, cap 24)"] = best(lambda: standard_presets(24))
contexts = standard_presets(24)
for suite in SUITES:
    timings[f"suite:{suite}"] = best(lambda: run_suite(suite, contexts, trials, 1, 10, 12))
print(json.dumps({"backend": _backend.BACKEND, "timings": timings}))
"""


def run(backend, trials, repeat):
    env = dict(os.environ, QUMBRAL_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", WORKLOAD, str(trials), str(repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    py = run("python", args.trials, args.repeat)
    try:
        c = run("compiled", args.trials, args.repeat)
    except subprocess.CalledProcessError as exc:
        print("compiled backend unavailable:", exc.stderr.strip().splitlines()[-1])
        c = None

    print(f"{'workload':<36} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, tp in py["timings"].items():
        if c is None:
            print(f"{name:<36} {tp:>9.3f}s {'-':>10} {'-':>8}")
            continue
        tc = c["timings"][name]
        print(f"{name:<36} {tp:>9.3f}s {tc:>9.3f}s {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
