#!/usr/bin/env python3
"""Reference simulation for the bounded random walk with boundary-scaled steps.

Independent of the C++ implementation (own RNG, own loop). Used to freeze
expected values for mean(1/alpha_ell) before the library was written, and to
re-derive them on demand:

    python3 tests/oracle/walk_reference.py
"""
import math
import random


def run_trial(rng, delta, ell, center=0.0, half_width=1.0):
    z = center
    for _ in range(ell):
        alpha = half_width - abs(z - center)
        step = alpha * delta
        z += step if rng.random() < 0.5 else -step
    return half_width - abs(z - center)


def mean_inv_alpha(delta, trials, seed, center=0.0, half_width=1.0):
    rng = random.Random(seed)
    ell = math.ceil(1.0 / delta ** 2)
    total = 0.0
    total_sq = 0.0
    for _ in range(trials):
        inv = 1.0 / run_trial(rng, delta, ell, center, half_width)
        total += inv
        total_sq += inv * inv
    mean = total / trials
    var = total_sq / trials - mean * mean
    return mean, math.sqrt(max(var, 0.0) / trials)


def main():
    trials = 100_000
    results = {}
    for delta in (1 / 4, 1 / 8, 1 / 16, 1 / 32):
        mean, se = mean_inv_alpha(delta, trials, seed=12345)
        results[delta] = mean
        print(f"delta=1/{round(1/delta)}  ell={math.ceil(1/delta**2)}  "
              f"mean_inv_alpha={mean:.4f}  stderr={se:.4f}")
    ratio = max(results.values()) / min(results.values())
    print(f"max/min ratio across delta = {ratio:.3f}")
    # interval form sanity: (center, half_width) = (1, 0.25), expect ~4x the unit value
    m, se = mean_inv_alpha(1 / 8, trials, seed=777, center=1.0, half_width=0.25)
    print(f"interval (1 +/- 0.25) delta=1/8: mean_inv_alpha={m:.4f} stderr={se:.4f} "
          f"(x half_width = {m * 0.25:.4f})")


if __name__ == "__main__":
    main()
