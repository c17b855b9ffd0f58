"""A rotation number engineered so a chosen scale overshoots every target.

Given a scale growing faster than n (here s_n = n^2), the partial quotients
a_k = max(N_k, 3k^2) produce a rotation number approximated so violently by
its convergents that the union of shrinking balls around the orbit has
summable measure.  The script builds the quotient ladder, checks the marker
chain q_{k+1} >= m_k >= 3 q_k, and bounds each union measure exactly.
"""

from ietlab.dioph import akc_measure, liouville_from_scale
from ietlab.scales import PowerLogScale, PowerScale

rot = liouville_from_scale(PowerScale(2), 5)
print("scale s_n = n^2")
print(f"{'k':>2} {'N_k':>6} {'a_k':>6} {'q_k':>12} {'m_k':>12}")
for k in range(5):
    mk = rot.m[k - 1] if k >= 1 else ""
    print(f"{k+1:>2} {rot.n_thresholds[k]:>6} {rot.a[k]:>6} {rot.q[k+1]:>12} {mk:>12}")

print("\nunion measures of B(n*alpha, 1/n^2) over convergent windows:")
for k in (1, 2, 3):
    res = akc_measure(rot, None, k, 1, PowerScale(2))
    print(f"  k={k}: measure in [{float(res.lower):.3e}, {float(res.upper):.3e}]"
          f"  <= bound {float(res.bound):.3e}: {res.within_bound}")

print("\nthe same construction for s_n = n ln n produces astronomically")
print("large thresholds, still exact:")
rot2 = liouville_from_scale(PowerLogScale(1, 1), 3)
for k, (nk, ak) in enumerate(zip(rot2.n_thresholds, rot2.a), start=1):
    digits = len(str(ak))
    print(f"  k={k}: a_k has {digits} digits")
print(f"feasible for orbit simulation: {rot2.feasible}")
