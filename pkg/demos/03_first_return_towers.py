"""First-return maps and towers with exactly disjoint floors.

Inducing the silver rotation on [0, sqrt(2)-1) yields a two-piece return map
with times 2 and 3; stacking the iterates of one return column builds a
tower whose floors tile a big chunk of the interval without overlap, all of
it certified by exact comparisons.
"""

from gmpy2 import mpq

from ietlab.exactnum import exact, sqrt_int, golden_mean
from ietlab.iet import rotation
from ietlab.induce import find_tower, first_return

silver = sqrt_int(2) - 1
r = rotation(silver)
ind = first_return(r, (exact(0), silver))
print("induced map of the silver rotation on [0, sqrt(2)-1):")
for i in range(ind.iet.r):
    print(f"  piece {i}: length {ind.iet.lengths[i]}  return time {ind.return_times[i]}")

print("\nfull return decomposition tiles [0,1): total measure", end=" ")
total = exact(0)
for (a, b, n) in ind.columns:
    total = total + (b - a) * n
print(total)
assert total == exact(1)

print("\ntower over the golden rotation with base measure < 1/10:")
tw = find_tower(rotation(golden_mean()), mpq(1, 10))
print(f"  base width  = {tw.base_measure} ~ {tw.base_measure.to_float():.6f}")
print(f"  height      = {tw.height}")
print(f"  total       = {tw.total_measure} ~ {tw.total_measure.to_float():.6f}  (>= 1/2)")
floors = sorted(tw.floors, key=lambda f: f[0])
gaps_ok = all(b1 <= a2 for (_, b1), (a2, _) in zip(floors, floors[1:]))
print(f"  floors pairwise disjoint: {gaps_ok}")
