import math
import warnings
from fractions import Fraction

import numpy as np
import pytest
from gmpy2 import mpq

from ietlab.exactnum import exact, golden_mean, nearest_int_dist, sqrt_int
from ietlab.iet import identity_iet, rotation
from ietlab.induce import iet3_from_rotation
from ietlab.gauges import (
    FloatIet,
    decisiveness_diagnostic,
    discrepancy,
    estimate_constants,
    gauge_trace,
    omega_discrepancy,
    philox,
    polarization_fractions,
    polarization_histogram,
    proximality_bc_measure,
    tau_entropy,
)
from ietlab.scales import PowerScale

PHI = golden_mean()

FIBS = set()
_a, _b = 1, 1
while _b <= 10**7:
    FIBS.add(_b)
    _a, _b = _b, _a + _b


def test_rho_trace_golden_exact():
    tr = gauge_trace("rho", rotation(PHI), PowerScale(1), exact(0),
                     horizons=[100, 1000, 10000])
    assert tr.exact
    assert all(a in FIBS for a in tr.argmins)
    # running_min non-increasing, approaching 1/sqrt5 from above
    assert tr.values[0] >= tr.values[1] >= tr.values[2]
    target = 1 / math.sqrt(5)
    assert tr.values[-1] > target
    assert tr.values[-1] - target < 1e-6
    # per-q exact invariant: the one-sided convergent values decrease strictly
    qs = [2, 5, 13, 34, 89, 233, 610]
    vals = [exact(q) * (q * PHI).mod1() for q in qs]
    lim = sqrt_int(5) / 5
    for v1, v2 in zip(vals, vals[1:]):
        assert v2 < v1
    for v in vals:
        assert v > lim


def test_rho_trace_running_min_matches_brute_force():
    tr = gauge_trace("rho", rotation(PHI), PowerScale(1), exact(0), horizons=[500])
    x = exact(0)
    best = None
    bestn = 0
    for n in range(1, 501):
        x = rotation(PHI)(x)
        v = exact(n) * abs(x - 0)
        if best is None or v < best:
            best, bestn = v, n
    assert tr.exact_values[0] == best and tr.argmins[0] == bestn


def test_psi_trace_rotation_constant():
    x, y = exact(mpq(1, 7)), exact(mpq(2, 5))
    tr = gauge_trace("psi", rotation(PHI), PowerScale(1), x, y,
                     horizons=[10, 100], metric="circle")
    d0 = nearest_int_dist(x - y).to_float()
    assert all(abs(v - d0) < 1e-12 for v in tr.values)
    assert tr.argmins == (1, 1)


def test_phi_trace_fixed_point():
    x = exact(mpq(2, 7))
    tr = gauge_trace("phi", identity_iet(), PowerScale(1), x, x, horizons=[5])
    assert tr.values[0] == 0.0


def test_trace_float_agrees_with_exact():
    t = iet3_from_rotation(PHI, mpq(2, 3))
    x, y = exact(mpq(3, 11)), exact(mpq(5, 13))
    te = gauge_trace("psi", t, PowerScale(1), x, y, horizons=[200], exact_mode=True)
    tf = gauge_trace("psi", t, PowerScale(1), x, y, horizons=[200], exact_mode=False)
    assert te.argmins == tf.argmins
    assert abs(te.values[0] - tf.values[0]) < 1e-9


def test_trace_rejects_bad_horizons():
    with pytest.raises(ValueError):
        gauge_trace("rho", rotation(PHI), PowerScale(1), exact(0), horizons=[10, 10])
    with pytest.raises(ValueError):
        gauge_trace("nu", rotation(PHI), PowerScale(1), exact(0), horizons=[10])


def test_discrepancy_half_rotation_zero():
    res = discrepancy(rotation(exact(mpq(1, 2))), 2, interval=(mpq(0), mpq(1, 2)))
    assert res.exact_value == exact(0)


def test_discrepancy_identity_half():
    res = discrepancy(identity_iet(), 5, interval=(mpq(0), mpq(1, 2)))
    assert res.exact_value == exact(mpq(1, 2))


def test_discrepancy_golden_fibonacci_small():
    res55 = discrepancy(rotation(PHI), 55, interval=(mpq(0), mpq(1, 3)))
    res233 = discrepancy(rotation(PHI), 233, interval=(mpq(0), mpq(1, 3)))
    assert res233.value < res55.value
    assert 233 * res233.value < 3  # n D_n stays small at convergent times


def test_discrepancy_exact_dominates_samples():
    t = iet3_from_rotation(sqrt_int(2) - 1, mpq(3, 4))
    for n in (7, 23, 64):
        rex = discrepancy(t, n, interval=(mpq(1, 10), mpq(7, 10)))
        rsm = discrepancy(t, n, interval=(mpq(1, 10), mpq(7, 10)),
                          mode="sampled", n_samples=4000, seed=1)
        assert rsm.value <= rex.value + 1e-9
        assert rex.value - rsm.value < 2.0 / n


def test_discrepancy_collision_fallback():
    # rational rotation whose endpoint orbits collide exercises the slow path
    t = rotation(exact(mpq(1, 4)))
    res = discrepancy(t, 8, interval=(mpq(0), mpq(1, 4)))
    g = philox(5)
    xs = g.random(10**4)
    stepper = FloatIet(t)
    counts = np.zeros(len(xs))
    cur = xs.copy()
    for _ in range(8):
        counts += (0.0 < cur) & (cur < 0.25)
        cur = stepper.step(cur)
    brute = float(np.max(np.abs(counts / 8 - 0.25)))
    assert res.value >= brute - 1e-12


def test_discrepancy_grid_exact_mode():
    res = discrepancy(rotation(PHI), 32, grid=[mpq(0), mpq(1, 4), mpq(1, 2)], mode="exact")
    assert res.mode == "grid-exact"
    direct = max(
        discrepancy(rotation(PHI), 32, interval=pair).exact_value
        for pair in [(mpq(0), mpq(1, 4)), (mpq(0), mpq(1, 2)), (mpq(1, 4), mpq(1, 2))]
    )
    assert res.exact_value == direct


def test_discrepancy_grid_mode():
    res = discrepancy(rotation(PHI), 64, grid=[0.0, 0.25, 0.5, 0.75],
                      mode="sampled", n_samples=500, seed=2)
    assert res.mode == "grid-sampled"
    assert "under-approximation" in res.note


def test_omega_golden_small_identity_one():
    om, _ = omega_discrepancy(rotation(PHI), [32, 64, 128, 256], interval=(mpq(0), mpq(1, 3)))
    assert om < 0.35
    omi, _ = omega_discrepancy(identity_iet(), [4, 8, 16, 32], interval=(mpq(0), mpq(1, 2)))
    assert omi == 1.0


def test_tau_rotation_deterministic():
    for alpha in (PHI, exact(mpq(2, 7))):
        tau, table = tau_entropy(rotation(alpha), 64)
        assert tau == 0.0
        assert all(card == 1 for _, card in table)
    tau_id, _ = tau_entropy(identity_iet(), 16)
    assert tau_id == 0.0


def test_bc_measure_rotation_and_identity_empty():
    p, _, _ = proximality_bc_measure(rotation(PHI), 50, 0.6, 10**4, seed=9, metric="circle")
    assert p == 0.0
    p2, _, _ = proximality_bc_measure(identity_iet(), 50, 0.6, 10**4, seed=9)
    assert p2 == 0.0


def test_bc_measure_three_iet_within_bound():
    t = iet3_from_rotation(sqrt_int(2) - 1, mpq(3, 4))
    p, sigma, bound = proximality_bc_measure(t, 100, 0.6, 10**5, seed=9)
    assert p <= bound + 3 * sigma


def test_polarization_directions():
    t = iet3_from_rotation(PHI, mpq(2, 3))
    _, below, _, _ = polarization_fractions(t, "psi", 0.25, 20000, 200, seed=5)
    assert below[-1] < 0.05
    _, _, above, _ = polarization_fractions(t, "phi", 0.5, 20000, 200, seed=6)
    assert above[-1] < 0.05


def test_estimate_constants_rotation_psi_zero():
    rep = estimate_constants(rotation(PHI), [0.25, 0.5, 1.0], 2000, 100, seed=11)
    assert rep.estimates["psi"] == 0.0
    assert "finite-horizon" in rep.note


def test_histogram_golden_rho_concentrates():
    bins, series = polarization_histogram(rotation(PHI), PowerScale(1), "rho",
                                          500, [100, 1000], seed=12)
    _, hist = series[-1]
    idx = int(np.argmax(hist))
    assert bins[idx] < 1 / math.sqrt(5) < bins[idx + 1]


def test_histogram_tail_mode_isometry_escapes_upward():
    bins, series = polarization_histogram(rotation(PHI), PowerScale(Fraction(1, 2)),
                                          "psi", 400, [256, 1024], seed=2,
                                          metric="circle", tail=True)
    def median_bin(hist):
        cum = np.cumsum(hist)
        return int(np.searchsorted(cum, cum[-1] / 2))

    first, last = series[0][1], series[-1][1]
    assert bins[median_bin(last)] > bins[median_bin(first)]


def test_histogram_warns_on_non_two_jumpy():
    from ietlab.scales import TableScale

    s = TableScale(tuple(math.log(k + 1) for k in range(1, 1025)))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        polarization_histogram(rotation(PHI), s, "rho", 50, [64], seed=1)
    assert any("two-jumpy" in str(w.message) for w in caught)


def test_decisiveness():
    fr = decisiveness_diagnostic([0.0] * 200000, PowerScale(1), 2000, seed=3,
                                 checkpoints=[1000, 200000])
    assert fr[-1][1] < 0.02  # escapes upward: constant target sequence
    v, fl, orb = 0.0, PHI.to_float(), []
    for _ in range(50000):
        v = (v + fl) % 1.0
        orb.append(v)
    fr2 = decisiveness_diagnostic(orb, PowerScale(1), 4000, seed=4,
                                  checkpoints=[500, 50000])
    assert fr2[-1][1] <= fr2[0][1] + 0.01  # qualitative trend within noise
