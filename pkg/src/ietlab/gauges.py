"""Finite-horizon gauge traces and orbit statistics for IETs.

Nothing here claims a limit: every quantity is a running minimum, fraction,
or slope over an explicit horizon ladder.  Exact mode keeps all comparisons
in the quadratic field; the float fast path is reserved for Monte Carlo
estimators where per-sample exactness is not part of the contract.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .exactnum import ExactReal, ZERO, ONE, HALF, circle_sub, exact
from .iet import Iet, delta_prime_profile
from .scales import PowerScale, classify_scale

__all__ = [
    "GaugeTrace",
    "gauge_trace",
    "polarization_fractions",
    "polarization_histogram",
    "estimate_constants",
    "ConstantsReport",
    "DiscrepancyResult",
    "discrepancy",
    "omega_discrepancy",
    "tau_entropy",
    "proximality_bc_measure",
    "decisiveness_diagnostic",
    "philox",
    "FloatIet",
]

EXACT_HORIZON_DEFAULT = 10**5
THETA_LOW = 1e-3
THETA_HIGH = 1e3
DELTA_DEFAULT = 0.05


def philox(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, stream); order-independent."""
    return np.random.Generator(np.random.Philox(key=(seed << 16) + stream))


# ---------------------------------------------------------------------------
# single-sample traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaugeTrace:
    kind: str                 # "phi" | "psi" | "rho"
    x: object
    y: object
    metric: str
    scale: str
    exact: bool
    horizons: tuple[int, ...]
    values: tuple[float, ...]          # running min at each horizon
    argmins: tuple[int, ...]
    exact_values: Optional[tuple] = None  # ExactReal running minima, exact mode + integer power


def _dist_exact(u: ExactReal, v: ExactReal, metric: str) -> ExactReal:
    if metric == "interval":
        w = u - v
        return -w if w.sign() < 0 else w
    f = circle_sub(u, v) if u >= v else circle_sub(v, u)
    return f if f <= HALF else ONE - f


def gauge_trace(
    kind: str,
    t: Iet,
    s,
    x,
    y=None,
    horizons: Sequence[int] = (10**3, 10**4, 10**5),
    metric: str = "interval",
    exact_mode: Optional[bool] = None,
) -> GaugeTrace:
    """Running minima of s_n * d(.,.) along one orbit, at increasing horizons.

    kind "phi" tracks d(T^n x, y), "psi" d(T^n x, T^n y), "rho" d(T^n x, x).
    Exact mode is chosen automatically for horizons up to 1e5 when the scale
    supports exact comparisons.
    """
    horizons = tuple(int(h) for h in horizons)
    if any(h2 <= h1 for h1, h2 in zip(horizons, horizons[1:])) or horizons[0] < 1:
        raise ValueError("horizons must be strictly increasing positive integers")
    if kind not in ("phi", "psi", "rho"):
        raise ValueError(f"unknown gauge kind {kind!r}")
    if kind == "rho":
        y = None
    elif y is None:
        raise ValueError(f"{kind} gauge needs a second point")
    if exact_mode is None:
        exact_mode = horizons[-1] <= EXACT_HORIZON_DEFAULT and getattr(
            s, "exact_comparable", False
        )
    if exact_mode and not getattr(s, "exact_comparable", False):
        raise ValueError(f"scale {s.describe()} does not support exact comparisons")
    if exact_mode:
        return _trace_exact(kind, t, s, exact(x), None if y is None else exact(y), horizons, metric)
    return _trace_float(kind, t, s, x, y, horizons, metric)


def _trace_exact(kind, t, s, x, y, horizons, metric) -> GaugeTrace:
    px = x
    py = y
    best_n = 0
    best_d = None
    values, argmins, exacts = [], [], []
    integer_power = isinstance(s, PowerScale) and s.alpha.denominator == 1
    hi = 0
    for n in range(1, horizons[-1] + 1):
        px = t(px)
        if kind == "phi":
            d = _dist_exact(px, y, metric)
        elif kind == "psi":
            py = t(py)
            d = _dist_exact(px, py, metric)
        else:
            d = _dist_exact(px, x, metric)
        if best_d is None or s.cmp_scaled(n, d, best_n, best_d) < 0:
            best_n, best_d = n, d
        if n == horizons[hi]:
            values.append(s.value(best_n) * best_d.to_float())
            argmins.append(best_n)
            if integer_power:
                exacts.append(exact(best_n ** s.alpha.numerator) * best_d)
            hi += 1
            if hi == len(horizons):
                break
    return GaugeTrace(
        kind=kind,
        x=x,
        y=y,
        metric=metric,
        scale=s.describe(),
        exact=True,
        horizons=horizons,
        values=tuple(values),
        argmins=tuple(argmins),
        exact_values=tuple(exacts) if integer_power else None,
    )


def _trace_float(kind, t, s, x, y, horizons, metric) -> GaugeTrace:
    cuts = [b.to_float() if isinstance(b, ExactReal) else float(b) for b in t.breaks[1:-1]]
    hs = [h.to_float() if isinstance(h, ExactReal) else float(h) for h in t.trans]
    from bisect import bisect_right

    def step(v: float) -> float:
        v2 = v + hs[bisect_right(cuts, v)]
        return v2 if 0.0 <= v2 < 1.0 else min(max(v2, 0.0), math.nextafter(1.0, 0.0))

    def dist(u: float, v: float) -> float:
        if metric == "interval":
            return abs(u - v)
        f = abs(u - v)
        return min(f, 1.0 - f)

    px = float(x.to_float() if isinstance(x, ExactReal) else x)
    x0 = px
    py = None if y is None else float(y.to_float() if isinstance(y, ExactReal) else y)
    best = math.inf
    best_n = 0
    values, argmins = [], []
    hi = 0
    for n in range(1, horizons[-1] + 1):
        px = step(px)
        if kind == "phi":
            d = dist(px, py)
        elif kind == "psi":
            py = step(py)
            d = dist(px, py)
        else:
            d = dist(px, x0)
        v = s.value(n) * d
        if v < best:
            best, best_n = v, n
        if n == horizons[hi]:
            values.append(best)
            argmins.append(best_n)
            hi += 1
            if hi == len(horizons):
                break
    return GaugeTrace(
        kind=kind,
        x=x,
        y=y,
        metric=metric,
        scale=s.describe(),
        exact=False,
        horizons=horizons,
        values=tuple(values),
        argmins=tuple(argmins),
    )


# ---------------------------------------------------------------------------
# vectorized float experiments
# ---------------------------------------------------------------------------


class FloatIet:
    """Double-precision stepper for Monte Carlo orbit batches."""

    def __init__(self, t: Iet):
        self.cuts = np.array([b.to_float() for b in t.breaks[1:-1]], dtype=float)
        self.h = np.array([h.to_float() for h in t.trans], dtype=float)
        self.r = t.r
        self._top = math.nextafter(1.0, 0.0)

    def step(self, xs: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.cuts, xs, side="right")
        out = xs + self.h[idx]
        np.clip(out, 0.0, self._top, out=out)
        return out


def polarization_fractions(
    t: Iet,
    kind: str,
    alpha: float,
    horizon: int,
    n_samples: int,
    seed: int,
    theta_low: float = THETA_LOW,
    theta_high: float = THETA_HIGH,
    checkpoints: Optional[Sequence[int]] = None,
    metric: str = "interval",
    y_fixed: Optional[float] = None,
):
    """Fractions of sampled pairs whose running min ends below/above thresholds.

    Returns (checkpoints, below, above, mins) where mins is the final
    running-min array.  Sampling is Philox-keyed by (seed, 0).
    """
    if checkpoints is None:
        checkpoints = [horizon]
    checkpoints = sorted(set(int(c) for c in checkpoints))
    stepper = FloatIet(t)
    g = philox(seed)
    xs = g.random(n_samples)
    if kind == "rho":
        base = xs.copy()
        ys = None
    elif kind == "phi":
        ys = np.full(n_samples, y_fixed) if y_fixed is not None else g.random(n_samples)
    else:
        ys = g.random(n_samples)
    mins = np.full(n_samples, np.inf)
    below, above = [], []
    ci = 0
    for n in range(1, checkpoints[-1] + 1):
        xs = stepper.step(xs)
        if kind == "psi":
            ys = stepper.step(ys)
            d = np.abs(xs - ys)
        elif kind == "phi":
            d = np.abs(xs - ys)
        else:
            d = np.abs(xs - base)
        if metric == "circle":
            d = np.minimum(d, 1.0 - d)
        np.minimum(mins, (float(n) ** alpha) * d, out=mins)
        if n == checkpoints[ci]:
            below.append(float(np.mean(mins < theta_low)))
            above.append(float(np.mean(mins > theta_high)))
            ci += 1
    return checkpoints, below, above, mins


def polarization_histogram(
    t: Iet,
    s,
    kind: str,
    n_samples: int,
    horizons: Sequence[int],
    seed: int,
    bins: Optional[np.ndarray] = None,
    metric: str = "interval",
    tail: bool = False,
):
    """Histogram series of running minima across horizons (diagnostic only).

    With tail=True the statistic at horizon N is the min over n in (N/2, N],
    which forgets early dips; mass escaping upward (e.g. the proximality
    statistic of an isometry) is only visible in that mode.
    """
    flags = classify_scale(s)
    if not flags.two_jumpy:
        warnings.warn(
            "scale is not two-jumpy: extremality of the gauge is not expected",
            stacklevel=2,
        )
    horizons = sorted(set(int(h) for h in horizons))
    if bins is None:
        bins = np.concatenate(([0.0], np.logspace(-9, 9, 37), [np.inf]))
    stepper = FloatIet(t)
    g = philox(seed)
    xs = g.random(n_samples)
    base = xs.copy()
    ys = g.random(n_samples)
    mins = np.full(n_samples, np.inf)
    series = []
    ci = 0
    for n in range(1, horizons[-1] + 1):
        xs = stepper.step(xs)
        if kind == "psi":
            ys = stepper.step(ys)
            d = np.abs(xs - ys)
        elif kind == "phi":
            d = np.abs(xs - ys)
        else:
            d = np.abs(xs - base)
        if metric == "circle":
            d = np.minimum(d, 1.0 - d)
        np.minimum(mins, s.value(n) * d, out=mins)
        if n == horizons[ci]:
            hist, _ = np.histogram(mins, bins=bins)
            series.append((n, hist))
            ci += 1
            if tail and ci < len(horizons):
                # window minima restart: on a dyadic ladder each later
                # checkpoint N then reports min over (N/2, N]
                mins = np.full(n_samples, np.inf)
    return bins, series


@dataclass(frozen=True)
class ConstantsReport:
    horizon: int
    n_samples: int
    theta_low: float
    theta_high: float
    delta: float
    alpha_grid: tuple[float, ...]
    below: dict      # kind -> tuple of below-fractions per alpha
    above: dict
    estimates: dict  # kind -> float
    note: str = (
        "finite-horizon estimate: fractions of running minima, not liminf values"
    )


def estimate_constants(
    t: Iet,
    alpha_grid: Sequence[float],
    horizon: int,
    n_samples: int,
    seed: int,
    theta_low: float = THETA_LOW,
    theta_high: float = THETA_HIGH,
    delta: float = DELTA_DEFAULT,
) -> ConstantsReport:
    """Estimate the three gauge constants by polarization sweeps over alpha.

    The estimate for each kind is the largest grid alpha whose below-fraction
    is at least 1 - delta; it is a finite-horizon surrogate and is labeled as
    such in the report.
    """
    alpha_grid = tuple(sorted(float(a) for a in alpha_grid))
    if not alpha_grid or alpha_grid[0] <= 0:
        raise ValueError("alpha grid must be positive and nonempty")
    stepper = FloatIet(t)
    below = {}
    above = {}
    estimates = {}
    for stream, kind in enumerate(("phi", "psi", "rho")):
        g = philox(seed, stream=stream + 1)
        xs = g.random(n_samples)
        base = xs.copy()
        ys = g.random(n_samples)
        mins = np.full((len(alpha_grid), n_samples), np.inf)
        for n in range(1, horizon + 1):
            xs = stepper.step(xs)
            if kind == "psi":
                ys = stepper.step(ys)
                d = np.abs(xs - ys)
            elif kind == "phi":
                d = np.abs(xs - ys)
            else:
                d = np.abs(xs - base)
            for ai, a in enumerate(alpha_grid):
                np.minimum(mins[ai], (float(n) ** a) * d, out=mins[ai])
        bel = tuple(float(np.mean(row < theta_low)) for row in mins)
        abv = tuple(float(np.mean(row > theta_high)) for row in mins)
        below[kind] = bel
        above[kind] = abv
        est = 0.0
        for ai, a in enumerate(alpha_grid):
            if bel[ai] >= 1.0 - delta:
                est = a
        estimates[kind] = est
    return ConstantsReport(
        horizon=horizon,
        n_samples=n_samples,
        theta_low=theta_low,
        theta_high=theta_high,
        delta=delta,
        alpha_grid=alpha_grid,
        below=below,
        above=above,
        estimates=estimates,
    )


# ---------------------------------------------------------------------------
# discrepancy
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiscrepancyResult:
    n: int
    value: float
    mode: str
    interval: Optional[tuple] = None
    exact_value: Optional[ExactReal] = None
    note: str = ""


class _EventCollision(RuntimeError):
    pass


def discrepancy(
    t: Iet,
    n: int,
    interval: Optional[tuple] = None,
    grid: Optional[Sequence] = None,
    mode: str = "exact",
    n_samples: int = 64,
    seed: int = 0,
) -> DiscrepancyResult:
    """Worst-case orbit-count deviation for an interval, sup over x.

    Exact mode enumerates every x-breakpoint of the count function (orbit
    preimages of the interval endpoints plus discontinuity preimages) and
    evaluates once per piece; the result is the essential sup over x, so the
    measure-zero x whose orbit hits an endpoint exactly do not contribute.
    Grid mode maximizes over intervals with both endpoints on the supplied
    grid and is an under-approximation of the sup over all intervals.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if (interval is None) == (grid is None):
        raise ValueError("give exactly one of interval= or grid=")
    if interval is not None:
        a, b = exact(interval[0]), exact(interval[1])
        if not (ZERO <= a < b <= ONE):
            raise ValueError("interval must satisfy 0 <= a < b <= 1")
        if mode == "exact":
            try:
                val = _exact_sup_deviation(t, n, a, b)
            except _EventCollision:
                val = _exact_sup_deviation_slow(t, n, a, b)
            return DiscrepancyResult(
                n=n,
                value=val.to_float(),
                mode="exact-in-x",
                interval=(a, b),
                exact_value=val,
            )
        val = _sampled_deviation(t, n, a.to_float(), b.to_float(), n_samples, seed)
        return DiscrepancyResult(n=n, value=val, mode="sampled", interval=(a, b))
    if mode == "exact":
        pts = sorted(exact(g) for g in grid)
        best = ZERO
        best_pair = None
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                try:
                    v = _exact_sup_deviation(t, n, pts[i], pts[j])
                except _EventCollision:
                    v = _exact_sup_deviation_slow(t, n, pts[i], pts[j])
                if v > best:
                    best, best_pair = v, (pts[i], pts[j])
        return DiscrepancyResult(
            n=n,
            value=best.to_float(),
            mode="grid-exact",
            interval=best_pair,
            exact_value=best,
            note="under-approximation: endpoints restricted to the grid",
        )
    fpts = sorted(float(exact(g).to_float() if not isinstance(g, float) else g) for g in grid)
    best = 0.0
    best_pair = None
    for i in range(len(fpts)):
        for j in range(i + 1, len(fpts)):
            v = _sampled_deviation(t, n, fpts[i], fpts[j], n_samples, seed)
            if v > best:
                best, best_pair = v, (fpts[i], fpts[j])
    return DiscrepancyResult(
        n=n,
        value=best,
        mode="grid-sampled",
        interval=best_pair,
        note="under-approximation: endpoints restricted to the grid",
    )


def _theta(u: ExactReal, a: ExactReal, b: ExactReal) -> int:
    return 1 if (a < u and u < b) else 0


def _theta_left(u: ExactReal, a: ExactReal, b: ExactReal) -> int:
    # indicator seen by points approaching u from below: u in (a, b]
    return 1 if (a < u and u <= b) else 0


def _exact_sup_deviation(t: Iet, n: int, a: ExactReal, b: ExactReal) -> ExactReal:
    # Every event position comes from the backward orbit of one seed
    # (a, b, or a discontinuity).  The map is bijective, so distinct seeds
    # have disjoint backward orbits; a repeated position means the seeds are
    # orbit-related and the simple per-event deltas do not decompose.
    tinv = t.invert()
    events: dict = {}

    def emit(pos, delta):
        if pos in events:
            raise _EventCollision
        events[pos] = delta

    p = a
    for _ in range(n):
        emit(p, +1)
        p = tinv(p)
    if b < ONE:
        q = b
        for _ in range(n):
            emit(q, -1)
            q = tinv(q)
    # theta prefix sums along the two one-sided orbits of each discontinuity
    disc = t.discontinuities()
    for s in disc:
        pr = [0]
        pl = [0]
        ur, ul = s, s
        for _ in range(n):
            pr.append(pr[-1] + _theta(ur, a, b))
            pl.append(pl[-1] + _theta_left(ul, a, b))
            ur = t(ur)
            ul = t.evaluate_left(ul)
        p = s
        for k in range(n):
            emit(p, pr[n - k] - pl[n - k])
            p = tinv(p)
    positions = sorted(events.keys())
    interior = [p for p in positions if p > ZERO]
    first_edge = interior[0] if interior else ONE
    x0 = first_edge / 2
    cnt = 0
    u = x0
    for _ in range(n):
        cnt += _theta(u, a, b)
        u = t(u)
    length = b - a
    best = _abs_dev(cnt, n, length)
    current = cnt
    for pos in interior:
        current = current + events[pos]
        dev = _abs_dev(current, n, length)
        if dev > best:
            best = dev
    return best


def _abs_dev(count: int, n: int, length: ExactReal) -> ExactReal:
    w = exact(Fraction(count, n)) - length
    return -w if w.sign() < 0 else w


def _exact_sup_deviation_slow(t: Iet, n: int, a: ExactReal, b: ExactReal) -> ExactReal:
    """Direct per-piece evaluation; used when event orbits collide."""
    tinv = t.invert()
    cuts = {a, b}
    p, q = a, b
    for _ in range(n - 1):
        p = tinv(p)
        q = tinv(q)
        cuts.add(p)
        cuts.add(q)
    for s in t.discontinuities():
        u = s
        cuts.add(u)
        for _ in range(n - 1):
            u = tinv(u)
            cuts.add(u)
    pts = sorted(cuts)
    pts.append(ONE)
    length = b - a
    best = ZERO
    prev = ZERO
    for cut in pts:
        if not prev < cut:
            prev = cut
            continue
        mid = (prev + cut) / 2
        cnt = 0
        u = mid
        for _ in range(n):
            cnt += _theta(u, a, b)
            u = t(u)
        dev = _abs_dev(cnt, n, length)
        if dev > best:
            best = dev
        prev = cut
    return best


def _sampled_deviation(t: Iet, n: int, a: float, b: float, n_samples: int, seed: int) -> float:
    stepper = FloatIet(t)
    g = philox(seed, stream=7)
    xs = g.random(n_samples)
    counts = np.zeros(n_samples)
    cur = xs.copy()
    for _ in range(n):
        counts += (a < cur) & (cur < b)
        cur = stepper.step(cur)
    return float(np.max(np.abs(counts / n - (b - a))))


def omega_discrepancy(
    t: Iet,
    n_list: Sequence[int],
    interval=None,
    mode: str = "exact",
    n_samples: int = 64,
    seed: int = 0,
):
    """Least-squares growth exponent of n * D_n, clamped to [0, 1].

    A finite-horizon estimate; returns (omega_hat, detail) with the fitted
    points and slope.
    """
    n_list = sorted(set(int(n) for n in n_list))
    if len(n_list) < 2:
        raise ValueError("need at least two horizons")
    if interval is None:
        interval = (Fraction(0), Fraction(1, 2))
    ds = []
    for n in n_list:
        res = discrepancy(t, n, interval=interval, mode=mode, n_samples=n_samples, seed=seed)
        ds.append(max(res.value, 1e-300))
    logs_n = np.log(np.array(n_list, dtype=float))
    logs_d = np.log(np.array(ds))
    slope, intercept = np.polyfit(logs_n, logs_d, 1)
    omega = min(1.0, max(0.0, 1.0 + float(slope)))
    detail = {
        "n": n_list,
        "D": ds,
        "slope": float(slope),
        "intercept": float(intercept),
        "interval": (str(exact(interval[0])), str(exact(interval[1]))),
        "note": "finite-horizon regression estimate",
    }
    return omega, detail


# ---------------------------------------------------------------------------
# tau-entropy
# ---------------------------------------------------------------------------


def tau_entropy(t: Iet, n_max: int):
    """Exact cardinality ladder of the cumulative difference sets, with
    tau_hat = max over the ladder's upper half of log(card)/log(n)."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    ladder = []
    k = 2
    while k <= n_max:
        ladder.append(k)
        k *= 2
    if ladder[-1] != n_max:
        ladder.append(n_max)
    table = delta_prime_profile(t, n_max, ladder)
    upper = table[len(table) // 2 :]
    tau_hat = max(math.log(card) / math.log(n) for n, card in upper)
    return tau_hat, table


# ---------------------------------------------------------------------------
# Borel-Cantelli style estimators
# ---------------------------------------------------------------------------


def proximality_bc_measure(
    t: Iet,
    n: int,
    c: float,
    mc_samples: int,
    seed: int,
    metric: str = "interval",
):
    """Monte Carlo measure of pairs whose distance newly dips below n^-c at time n.

    Returns (estimate, sigma, bound) where bound = 4(r-1)/n^(2c) is the
    discontinuity-counting ceiling the estimate is compared against.
    The circle metric makes rotations honest isometries (empty target set).
    """
    if n < 2:
        raise ValueError("n must be >= 2")

    def dist(u, v):
        d = np.abs(u - v)
        return np.minimum(d, 1.0 - d) if metric == "circle" else d

    stepper = FloatIet(t)
    g = philox(seed, stream=3)
    xs = g.random(mc_samples)
    ys = g.random(mc_samples)
    for _ in range(n - 1):
        xs = stepper.step(xs)
        ys = stepper.step(ys)
    d_prev = dist(xs, ys)
    xs = stepper.step(xs)
    ys = stepper.step(ys)
    d_now = dist(xs, ys)
    thr = float(n) ** (-c)
    # isometric steps keep the distance exactly equal; a rounding margin keeps
    # float wobble around that equality from counting as a strict decrease
    hits = d_now < np.minimum(d_prev - 1e-12, thr)
    p = float(np.mean(hits))
    sigma = math.sqrt(max(p * (1 - p), 1.0 / mc_samples) / mc_samples)
    bound = 4.0 * (t.r - 1) / float(n) ** (2 * c)
    return p, sigma, bound


def decisiveness_diagnostic(
    points: Sequence[float],
    s,
    mc_samples: int,
    seed: int,
    theta_low: float = THETA_LOW,
    theta_high: float = THETA_HIGH,
    checkpoints: Optional[Sequence[int]] = None,
):
    """Mass of the contact gauge caught strictly between the thresholds.

    points[n-1] is the n-th term of the approximating sequence.  The
    statistic at checkpoint N is the min of s_n |x_n - y| over the dyadic
    tail n in (N/2, N], a liminf surrogate that forgets early dips.  For a
    Lebesgue-decisive setup the middle fraction should shrink with horizon.
    """
    horizon = len(points)
    if checkpoints is None:
        checkpoints = [horizon]
    checkpoints = sorted(set(int(c) for c in checkpoints))
    if checkpoints[-1] > horizon:
        raise ValueError("checkpoint beyond supplied sequence")
    g = philox(seed, stream=5)
    ys = g.random(mc_samples)
    fractions = []
    pts = np.asarray(points, dtype=float)
    for mark in checkpoints:
        mins = np.full(mc_samples, np.inf)
        for n in range(mark // 2 + 1, mark + 1):
            d = np.abs(pts[n - 1] - ys)
            np.minimum(mins, s.value(n) * d, out=mins)
        mid = float(np.mean((mins > theta_low) & (mins < theta_high)))
        fractions.append((mark, mid))
    return fractions
