#!/usr/bin/env python3
"""Compare the two exact-rational scalar backends on representative work.

The hot path of this package is arbitrary-precision rational arithmetic
inside dense elimination; gmpy2's C rationals and the stdlib Fraction
fallback are interchangeable (identical results), so this script only
measures speed.  Run directly; it re-executes itself under
HJJ_PURE_PYTHON=1 to time the fallback.

    python benchmarks/bench_backends.py
"""

import os
import subprocess
import sys
import time


def workload():
    import random

    from hjj import QQ, Matrix
    from hjj.catalog import classify, instantiate
    from hjj.cohomology import Cochain2, ScalarForm, compute_H2
    from hjj.linalg import rref
    from hjj.metric import check_metric, metric_criterion
    from hjj.quadratic import build_twofold
    from hjj.representations import QuadraticRepresentation, Representation

    rng = random.Random(4242)
    timings = {}

    start = time.perf_counter()
    for _ in range(60):
        rows = [[QQ(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(18)] for _ in range(18)]
        rref(Matrix.from_rows(rows))
    timings["rref 18x18 x60"] = time.perf_counter() - start

    start = time.perf_counter()
    for a in (QQ(2), QQ(3), QQ(1, 2), QQ(-2)):
        alg = instantiate("J^1_{1,1}", {"a": a})
        for b in (a * a, QQ(1), QQ(2), QQ(-1)):
            rep = Representation.zero_action(alg, 1, Matrix.from_rows([[b]]))
            compute_H2(rep)
    timings["compute_H2 x16"] = time.perf_counter() - start

    start = time.perf_counter()
    alg = instantiate("J^1_{1,1}", {"a": 2})
    rep = Representation.zero_action(alg, 1, Matrix.from_rows([[QQ(4)]]))
    qrep = QuadraticRepresentation(rep, Matrix.identity(1))
    for _ in range(10):
        tf = build_twofold(alg, qrep, Cochain2.zero(rep), ScalarForm.zero(2, 3))
        check_metric(tf.metric)
        metric_criterion(tf.metric)
    timings["twofold build+verify x10"] = time.perf_counter() - start

    start = time.perf_counter()
    classify(2)
    timings["classify(2)"] = time.perf_counter() - start
    return timings


def main():
    from hjj.scalars import BACKEND

    timings = workload()
    print(f"backend: {BACKEND}")
    for name, seconds in timings.items():
        print(f"  {name:.<32} {seconds:8.3f}s")
    if BACKEND == "gmpy2" and os.environ.get("HJJ_PURE_PYTHON") != "1":
        sys.stdout.flush()
        env = dict(os.environ, HJJ_PURE_PYTHON="1")
        subprocess.run([sys.executable, os.path.abspath(__file__)], env=env, check=True)


if __name__ == "__main__":
    main()
