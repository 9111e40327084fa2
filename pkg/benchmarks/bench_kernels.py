#!/usr/bin/env python3
"""Benchmark the enumeration kernels: compiled extension vs pure Python.

Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from skewcodes._accel import implementations
from skewcodes.fields import field_create
from skewcodes.skewpoly import RingCtx


def _field_tables(field):
    neg = np.array([field.neg_val(v) for v in range(field.q)], dtype=np.uint16)
    inv = np.array(
        [0] + [field.inv_val(v) for v in range(1, field.q)], dtype=np.uint16
    )
    return field.mul_table, field.add_table, neg, inv


def bench(label, func, repeats=3):
    results = []
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = func()
        results.append(time.perf_counter() - t0)
    return min(results), value


def case_min_weight():
    rng = np.random.default_rng(7)
    field = field_create(2, 2)
    k, n = 10, 18
    gen = rng.integers(0, field.q, size=(k, n)).astype(np.uint16)
    mul, add, _, _ = _field_tables(field)
    return "min weight, random [18,10] over GF(4) (4^10 codewords)", {
        name: (lambda mod=mod: mod.min_nonzero_weight(gen, mul, add))
        for name, mod in implementations().items()
    }


def case_divisor_scan():
    field = field_create(2, 3)
    ctx = RingCtx.create(field, t=1, beta=0)
    # a degree-6 modulus; the scan walks ~7 * 8^5 monic candidates
    f = np.array([1, 0, field.w.val, 0, 1, 1, 1], dtype=np.uint16)
    mul, add, neg, inv = _field_tables(field)
    theta = ctx.theta.table()
    delta = np.zeros(field.q, dtype=np.uint16)
    return "divisor scan, degree-6 modulus over GF(8)", {
        name: (
            lambda mod=mod: mod.scan_monic_right_divisors(
                f, mul, add, neg, inv, theta, delta
            )
        )
        for name, mod in implementations().items()
    }


def main():
    cases = [case_min_weight(), case_divisor_scan()]
    for label, runners in cases:
        print(label)
        times = {}
        values = {}
        for name, runner in runners.items():
            t, v = bench(name, runner)
            times[name] = t
            values[name] = v if not isinstance(v, list) else len(v)
            print(f"  {name:>9}: {t * 1e3:10.2f} ms   (result {values[name]})")
        if {"python", "compiled"} <= times.keys():
            assert values["python"] == values["compiled"], "implementations disagree"
            print(f"  {'speedup':>9}: {times['python'] / times['compiled']:10.1f} x")
        print()


if __name__ == "__main__":
    main()
