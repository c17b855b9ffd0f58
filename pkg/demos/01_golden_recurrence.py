"""The golden rotation's recurrence constant, computed exactly.

The running minimum of n * |T^n(0) - 0| for the golden rotation dips only at
the one-sided convergent denominators 2, 5, 13, 34, ... and decreases
strictly toward 1/sqrt(5) = 0.4472135954...  Everything below is exact
quadratic-field arithmetic; floats appear only in the printout.
"""

import math

from ietlab.exactnum import exact, golden_mean, sqrt_int
from ietlab.iet import rotation
from ietlab.gauges import gauge_trace
from ietlab.scales import PowerScale

phi = golden_mean()
print(f"alpha = (sqrt(5)-1)/2 = {phi} ~ {phi.to_float():.12f}")

trace = gauge_trace(
    "rho", rotation(phi), PowerScale(1), exact(0),
    horizons=[10, 100, 1000, 10**4, 10**5],
    metric="interval", exact_mode=True,
)

target = 1 / math.sqrt(5)
print(f"\n{'horizon':>8} {'running min':>16} {'argmin':>8}   gap above 1/sqrt(5)")
for h, v, n in zip(trace.horizons, trace.exact_values, trace.argmins):
    gap = v - sqrt_int(5) / 5
    print(f"{h:>8} {v.to_float():>16.12f} {n:>8}   {gap.to_float():.3e}")

print("\nEvery argmin is a Fibonacci number, and the gap is exactly positive:")
for h, v in zip(trace.horizons, trace.exact_values):
    assert (v - sqrt_int(5) / 5).sign() > 0
print("confirmed: the minimum approaches the constant strictly from above.")
