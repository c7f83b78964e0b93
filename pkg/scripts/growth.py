"""Timing and coefficient size of the exact expansion of (1+x)^(1/2) at growing order."""

import time
from fractions import Fraction

from binomia.power_series import binomial_series

for K in (64, 128, 256, 512, 1024, 2048):
    t0 = time.perf_counter()
    s = binomial_series(Fraction(1, 2), K)
    dt = time.perf_counter() - t0
    print(f"K={K:>5}  {dt * 1e3:8.2f} ms  denominator bits of c_K: {s[K].denominator.bit_length()}")
