"""Continued fractions, approximation exponents, and rotation counting.

Quadratic irrationals expand exactly through the Gauss map with cycle
detection.  Rotation numbers defined only through their partial quotients
(the optimality construction) are handled through verified rational
enclosures: every comparison checks that its margin exceeds the enclosure
error and refines the convergent on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath
from gmpy2 import mpq

from .exactnum import ExactReal, ZERO, ONE, exact, nearest_int_dist, sqrt_int
from .iet import Iet, compose, delta_set, identity_iet, rotation
from .induce import NotIrrational, first_return
from .scales import PowerScale, PowerLogScale

__all__ = [
    "RationalInput",
    "ScaleTooSlow",
    "ContinuedFraction",
    "cf_expand",
    "quadratic_from_cf",
    "check_convergent_ineq",
    "type_estimate",
    "LiouvilleRotation",
    "liouville_from_scale",
    "akc_measure",
    "three_distance_check",
    "kesten_window_counts",
    "MixingReport",
    "mixing_falsifier",
]


class RationalInput(ValueError):
    """Continued-fraction expansion terminated: the input was rational."""


class ScaleTooSlow(ValueError):
    """The construction needs lim s_n / n = infinity."""


@dataclass(frozen=True)
class ContinuedFraction:
    """Partial quotients with convergents p_k/q_k.

    p and q include the seed entries p_0 = 0, q_0 = 1, so p[k]/q[k] is the
    k-th convergent for k >= 1.
    """

    a: tuple[int, ...]
    p: tuple[int, ...]
    q: tuple[int, ...]
    periodic: Optional[tuple[int, int]] = None  # (preperiod, period) if detected

    @property
    def depth(self) -> int:
        return len(self.a)

    def convergent(self, k: int) -> Fraction:
        return Fraction(self.p[k], self.q[k])


def _convergents(a: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    p = [0, 1]
    q = [1, a[0]]
    for k in range(1, len(a)):
        p.append(a[k] * p[-1] + p[-2])
        q.append(a[k] * q[-1] + q[-2])
    return tuple(p[: len(a) + 1]), tuple(q[: len(a) + 1])


def cf_expand(alpha, depth: int) -> ContinuedFraction:
    """Exact partial quotients of an irrational alpha in (0, 1).

    Quadratic states repeat, so the expansion is detected as eventually
    periodic and extended for free; rational input raises RationalInput.
    """
    x = exact(alpha)
    if not (ZERO < x < ONE):
        x = x.mod1()
    if x.is_rational:
        # rationals terminate; report rather than emit a finite expansion
        raise RationalInput(f"{alpha!r} is rational; expansion terminates")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    quotients: list[int] = []
    seen: dict = {}
    periodic = None
    while len(quotients) < depth:
        key = (x.a, x.b, x.d)
        if key in seen:
            start = seen[key]
            period = quotients[start:]
            periodic = (start, len(period))
            while len(quotients) < depth:
                quotients.append(period[(len(quotients) - start) % len(period)])
            break
        seen[key] = len(quotients)
        inv = ONE / x
        k = inv.floor()
        quotients.append(k)
        x = inv - k
    p, q = _convergents(quotients)
    return ContinuedFraction(tuple(quotients), p, q, periodic)


def quadratic_from_cf(pre: Sequence[int], period: Sequence[int]) -> ExactReal:
    """The quadratic irrational in (0,1) with expansion [0; pre, period, period, ...]."""
    if not period:
        raise ValueError("period must be nonempty")
    if any(x < 1 for x in list(pre) + list(period)):
        raise ValueError("partial quotients must be positive")
    # x = [0; period, x]  =>  x = (p1 x + p0) / (q1 x + q0) for the period tail
    p0, p1 = 0, 1
    q0, q1 = 1, 0
    for a in period:
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
    # integer-part tail T = [a1; a2..ap, T] satisfies q1 T^2 + (q0 - p1) T - p0 = 0
    A, B = q1, q0 - p1
    disc = B * B + 4 * A * p0
    t_int = (sqrt_int(disc) - B) / (2 * A)
    val = ONE / t_int
    for a in reversed(list(pre)):
        val = ONE / (a + val)
    return val


def check_convergent_ineq(cf: ContinuedFraction, alpha) -> list[tuple[int, bool]]:
    """Exact check of the best-approximation inequality at every computed level."""
    alpha = exact(alpha)
    out = []
    for k in range(1, cf.depth):
        lhs = nearest_int_dist(alpha * cf.q[k])
        ok = lhs < exact(mpq(1, cf.q[k + 1]))
        out.append((k, bool(ok)))
    return out


def type_estimate(alpha, n_max: int, depth: int = 64) -> tuple[float, list]:
    """Finite-horizon irrationality-type surrogate.

    Evaluates -log||n alpha|| / log n at convergent denominators up to n_max
    (where the expression dips) and takes the min over the dyadic tail; this
    is a labeled estimate, not the liminf.
    """
    alpha = exact(alpha)
    cf = cf_expand(alpha, depth)
    qs = [q for q in cf.q[1:] if 2 <= q <= n_max]
    if not qs:
        raise ValueError("no convergent denominators within horizon")
    pts = []
    for q in qs:
        val = nearest_int_dist(alpha * q).to_float()
        pts.append((q, -math.log(val) / math.log(q)))
    tail = [v for q, v in pts if q * q >= qs[-1]]  # q >= sqrt(horizon reached)
    nu_hat = min(tail) if tail else pts[-1][1]
    return nu_hat, pts


# ---------------------------------------------------------------------------
# the optimality construction: rotation numbers from a scale sequence
# ---------------------------------------------------------------------------


def _n_threshold(s, k: int) -> int:
    """Least m with s_n / n >= k^4 for all n >= m, for closed-form scales."""
    target = k**4
    if isinstance(s, PowerScale):
        if s.alpha <= 1:
            raise ScaleTooSlow("need s_n / n -> infinity")
        # n^(alpha-1) >= k^4  <=>  n >= k^(4/(alpha-1))
        e = Fraction(4, 1) / (s.alpha - 1)
        return _ceil_pow(target_base=k, exponent=e)
    if isinstance(s, PowerLogScale):
        if s.alpha < 1 or (s.alpha == 1 and s.beta <= 0):
            raise ScaleTooSlow("need s_n / n -> infinity")
        if s.beta < 0:
            raise ValueError("negative log exponents are not supported here")
        if s.alpha > 1:
            # s_n/n is increasing from n=2 here; invert by bisection on logs
            return _ceil_root(
                lambda n: (s.alpha - 1) * math.log(n) + s.beta * math.log(math.log(n)),
                math.log(target),
            )
        # alpha == 1: ln(n)^beta >= k^4  <=>  n >= exp(k^(4/beta))
        return _ceil_exp(target, s.beta)
    raise ScaleTooSlow("threshold inversion implemented for closed-form scales only")


def _ceil_pow(target_base: int, exponent: Fraction) -> int:
    """ceil(target_base ** exponent) exactly for rational exponents."""
    num, den = exponent.numerator, exponent.denominator
    val = target_base**num
    # integer den-th root
    lo, hi = 1, val
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**den < val:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _ceil_root(logf, logtarget: float) -> int:
    lo, hi = 2, 4
    while logf(hi) < logtarget:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if logf(mid) < logtarget:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _ceil_exp(k4: int, beta: float) -> int:
    """ceil(exp(k4 ** (1/beta))) as a big integer.

    exp of a nonzero algebraic number is never an integer, so two precision
    levels agreeing on the floor pin the ceiling down exactly.
    """
    prec = 80
    prev = None
    while True:
        with mpmath.workprec(prec):
            val = mpmath.exp(mpmath.mpf(k4) ** (1.0 / beta))
            fl = int(mpmath.floor(val))
        if prev == fl:
            return fl + 1
        prev = fl
        prec *= 2


@dataclass(frozen=True)
class LiouvilleRotation:
    """A rotation number known through its partial quotients.

    Provides rational enclosures alpha in [lo, hi] of any required quality by
    extending the quotient ladder; exact arithmetic downstream checks its
    decision margins against the enclosure width.
    """

    a: tuple[int, ...]
    n_thresholds: tuple[int, ...]
    q: tuple[int, ...]
    m: tuple[int, ...]
    feasible: bool
    scale: str

    def enclosure(self, level: int) -> tuple[Fraction, Fraction, Fraction]:
        """(lo, hi, width) from consecutive convergents at the given level."""
        if level + 1 >= len(self.q):
            raise ValueError("enclosure level beyond computed ladder")
        p, q = _convergents(self.a)
        c1 = Fraction(p[level], q[level])
        c2 = Fraction(p[level + 1], q[level + 1])
        lo, hi = (c1, c2) if c1 < c2 else (c2, c1)
        return lo, hi, hi - lo


def liouville_from_scale(s, depth: int) -> LiouvilleRotation:
    """Partial quotients a_k = max(N_k, 3k^2) for a scale with s_n/n -> inf.

    N_k is the exact threshold past which s_n/n stays at least k^4.  Also
    returns the convergent ladder and the derived markers m_k = floor(q_{k+1}/k^2),
    verifying q_{k+1} >= m_k >= 3 q_k along the way.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    thresholds = []
    quotients = []
    feasible = True
    for k in range(1, depth + 1):
        nk = _n_threshold(s, k)
        thresholds.append(nk)
        quotients.append(max(nk, 3 * k * k))
        if nk > 10**18:
            feasible = False
    _, q = _convergents(quotients)
    ms = []
    for k in range(1, depth):
        mk = q[k + 1] // (k * k)
        ms.append(mk)
        if not (q[k + 1] >= mk >= 3 * q[k]):
            raise AssertionError(f"marker chain failed at k={k}")
    return LiouvilleRotation(
        a=tuple(quotients),
        n_thresholds=tuple(thresholds),
        q=tuple(q),
        m=tuple(ms),
        feasible=feasible,
        scale=s.describe(),
    )


# ---------------------------------------------------------------------------
# measures of shrinking-target unions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AkcResult:
    """Measure of the shrinking-target union with the comparison bound.

    For quadratic input lower == upper is the exact measure.  For a
    quotient-defined rotation the measure is a certified enclosure (width
    around 2^-100): every merge decision was made with verified margin, so
    measure <= bound is a proven inequality whenever upper <= bound.
    """

    lower: object
    upper: object
    bound: Fraction
    n_range: tuple[int, int]

    @property
    def is_exact_point(self) -> bool:
        return self.lower == self.upper

    @property
    def within_bound(self) -> bool:
        ub = self.upper
        if isinstance(ub, ExactReal):
            return bool(ub <= exact(self.bound.numerator) / self.bound.denominator)
        return ub <= self.bound

    def midpoint(self) -> float:
        lo = self.lower.to_float() if isinstance(self.lower, ExactReal) else float(self.lower)
        hi = self.upper.to_float() if isinstance(self.upper, ExactReal) else float(self.upper)
        return (lo + hi) / 2


def akc_measure(alpha, cf_or_q, k: int, c, s, ball_budget: int = 2 * 10**6) -> AkcResult:
    """Lebesgue measure of the union of balls B(n*alpha, c/s_n), q_k <= n < q_{k+1}.

    alpha may be an ExactReal quadratic (fully exact path, point value) or a
    LiouvilleRotation (verified-enclosure path).  The comparison bound is
    (4c+1)/k^2 + (c+1)/k^4.
    """
    c = Fraction(c)
    bound = Fraction(4 * c + 1, k * k) + Fraction(c + 1, k**4)
    if isinstance(alpha, LiouvilleRotation):
        q = alpha.q
        if k + 1 >= len(q):
            raise ValueError("k beyond the computed convergent ladder")
        n_lo, n_hi = q[k], q[k + 1]
        if n_hi - n_lo > ball_budget:
            from .induce import BudgetExhausted

            raise BudgetExhausted(f"{n_hi - n_lo} balls exceed budget {ball_budget}")
        rot = alpha
        for _ in range(3):
            try:
                lo, hi = _arc_union_measure_enclosed(rot, n_lo, n_hi, c, s)
                return AkcResult(lo, hi, bound, (n_lo, n_hi))
            except _EnclosureTooCoarse:
                rot = liouville_from_scale(s, len(rot.a) + 2)
        raise AssertionError("enclosure refinement failed three times")
    alpha = exact(alpha)
    if not alpha.is_irrational:
        raise NotIrrational("alpha must be irrational")
    cf = cf_or_q if isinstance(cf_or_q, ContinuedFraction) else cf_expand(alpha, k + 2)
    if k + 1 >= len(cf.q):
        raise ValueError("k beyond the expansion depth")
    n_lo, n_hi = cf.q[k], cf.q[k + 1]
    if n_hi - n_lo > ball_budget:
        from .induce import BudgetExhausted

        raise BudgetExhausted(f"{n_hi - n_lo} balls exceed budget {ball_budget}")
    measure = _arc_union_measure_exact(alpha, n_lo, n_hi, c, s)
    return AkcResult(measure, measure, bound, (n_lo, n_hi))


def _radius(s, n: int, c: Fraction) -> Fraction:
    if isinstance(s, PowerScale) and s.alpha.denominator == 1:
        return c / Fraction(n ** s.alpha.numerator)
    raise ValueError("exact ball radii need an integer-power scale")


def _arc_union_measure_exact(alpha: ExactReal, n_lo: int, n_hi: int, c, s):
    arcs = []
    pos = (alpha * n_lo).mod1()
    step = alpha.mod1()
    full = False
    for n in range(n_lo, n_hi):
        r = _radius(s, n, c)
        if 2 * r >= 1:
            full = True
            break
        arcs.append((pos, exact(r)))
        pos = pos + step
        if pos >= ONE:
            pos = pos - 1
    if full:
        return exact(1)
    return _sweep_exact(arcs)


def _sweep_exact(arcs):
    segs = []
    for center, r in arcs:
        lo = center - r
        hi = center + r
        if lo.sign() < 0:
            segs.append((lo + 1, exact(1)))
            segs.append((exact(0), hi))
        elif hi > ONE:
            segs.append((lo, exact(1)))
            segs.append((exact(0), hi - 1))
        else:
            segs.append((lo, hi))
    segs.sort(key=lambda ab: ab[0])
    total = exact(0)
    cur_lo, cur_hi = segs[0]
    for lo, hi in segs[1:]:
        if lo <= cur_hi:
            if hi > cur_hi:
                cur_hi = hi
        else:
            total = total + (cur_hi - cur_lo)
            cur_lo, cur_hi = lo, hi
    total = total + (cur_hi - cur_lo)
    if total > ONE:
        total = exact(1)
    return total


_DYADIC_BITS = 128
_DYADIC_ONE = 1 << _DYADIC_BITS


def _arc_union_measure_enclosed(rot: LiouvilleRotation, n_lo: int, n_hi: int, c, s):
    """Union measure with alpha known through convergents; margin-verified.

    Every merge decision is exact: the margin between arc endpoints must
    exceed the rigorous enclosure error or the computation aborts rather
    than guess.  Run lengths accumulate in directed-rounded 2^-128 dyadics
    (the exact rational total would need the lcm of ~10^6 denominators), so
    the result is a certified enclosure of that width.
    """
    level = len(rot.q) - 2
    p, q = _convergents(rot.a)
    pk, qk = p[level], q[level]
    # |alpha - pk/qk| < 1 / (qk * q_{level+1})
    err_unit = mpq(1, qk * q[level + 1])
    c = mpq(c.numerator, c.denominator)
    one = mpq(1)
    segs = []
    err_budget = mpq(0)  # each arc can expose two endpoints, each off by e
    num = (n_lo * pk) % qk
    step_num = pk % qk
    for n in range(n_lo, n_hi):
        rad = _radius_mpq(s, n, c)
        if 2 * rad >= 1:
            return Fraction(1), Fraction(1)
        ctr = mpq(num, qk)
        e = n * err_unit
        err_budget += 2 * e
        lo, hi = ctr - rad, ctr + rad
        if lo < 0:
            segs.append((lo + 1, one, e))
            segs.append((mpq(0), hi, e))
        elif hi > 1:
            segs.append((lo, one, e))
            segs.append((mpq(0), hi - 1, e))
        else:
            segs.append((lo, hi, e))
        num += step_num
        if num >= qk:
            num -= qk
    _sort_by_lo(segs)
    total_dn = 0  # in units of 2^-128, rounded down
    total_up = 0  # rounded up
    cur_lo, cur_hi, cur_err = segs[0]

    def flush(lo_end, hi_end):
        nonlocal total_dn, total_up
        length = hi_end - lo_end
        a, b = length.numerator, length.denominator
        total_dn += (a << _DYADIC_BITS) // b
        total_up += -((-a << _DYADIC_BITS) // b)

    for lo, hi, e in segs[1:]:
        margin = lo - cur_hi
        if margin != 0 and abs(margin) <= e + cur_err:
            raise _EnclosureTooCoarse
        if margin <= 0:
            if hi > cur_hi:
                cur_hi, cur_err = hi, e
        else:
            flush(cur_lo, cur_hi)
            cur_lo, cur_hi, cur_err = lo, hi, e
    flush(cur_lo, cur_hi)
    # true-center union differs by at most the summed endpoint drift
    slack = Fraction(err_budget.numerator, err_budget.denominator)
    lo_out = max(Fraction(0), Fraction(total_dn, _DYADIC_ONE) - slack)
    hi_out = min(Fraction(1), Fraction(total_up, _DYADIC_ONE) + slack)
    return lo_out, hi_out


class _EnclosureTooCoarse(RuntimeError):
    pass


def _sort_by_lo(segs) -> None:
    """Sort arc segments by exact left endpoint, float-keyed with verification."""
    segs.sort(key=lambda t3: float(t3[0]))
    for i in range(len(segs) - 1):
        if segs[i][0] > segs[i + 1][0]:
            segs.sort(key=lambda t3: t3[0])
            return


def _radius_mpq(s, n: int, c) -> "mpq":
    if isinstance(s, PowerScale) and s.alpha.denominator == 1:
        return c / mpq(n ** s.alpha.numerator)
    raise ValueError("exact ball radii need an integer-power scale")


# ---------------------------------------------------------------------------
# three-distance and Kesten window counting
# ---------------------------------------------------------------------------


def three_distance_check(alpha, m: int, cf: Optional[ContinuedFraction] = None) -> bool:
    """Each interval (r/q_m, (r+1)/q_m) contains exactly one point k*alpha, 1<=k<=q_m.

    Exact: bins are assigned through exact floors; a false return would
    indicate an implementation bug, not a property of alpha.
    """
    alpha = exact(alpha)
    if not alpha.is_irrational:
        raise NotIrrational("alpha must be irrational")
    cf = cf or cf_expand(alpha, m + 1)
    qm = cf.q[m]
    seen = bytearray(qm)
    pos = ZERO
    step = alpha.mod1()
    for _ in range(qm):
        pos = pos + step
        if pos >= ONE:
            pos = pos - 1
        b = (pos * qm).floor()
        if seen[b]:
            return False
        seen[b] = 1
    return all(seen)


def kesten_window_counts(
    alpha, interval, m: int, cf: Optional[ContinuedFraction] = None, check: bool = True
):
    """Hit counts card({x + k alpha : k < q_m} ∩ J) as x varies, exactly.

    Returns (count_set, b_m) where b_m is the maximum.  With check=True the
    theorem-backed structure is asserted: the counts form a block of at most
    4 consecutive integers inside [floor(|J| q_m) - 1, floor(|J| q_m) + 2].
    """
    alpha = exact(alpha)
    if not alpha.is_irrational:
        raise NotIrrational("alpha must be irrational")
    cf = cf or cf_expand(alpha, m + 1)
    qm = cf.q[m]
    u, v = exact(interval[0]), exact(interval[1])
    if not (ZERO <= u < v <= ONE):
        raise ValueError("window must satisfy 0 <= u < v <= 1")
    step = alpha.mod1()
    # count(x) = #{k < q_m : x + k alpha in [u, v)}; events at u - k alpha (+1)
    # and v - k alpha (-1), both inclusive on the right piece
    events: dict = {}
    pu, pv = u, v if v < ONE else ZERO
    base = 0
    # base count at x = 0: orbit points k alpha themselves
    pos = ZERO
    for k in range(qm):
        if u <= pos and (pos < v):
            base += 1
        epu = pu
        events[epu] = events.get(epu, 0) + 1
        epv = pv
        events[epv] = events.get(epv, 0) - 1
        pu = pu - step if pu >= step else pu - step + 1
        pv = pv - step if pv >= step else pv - step + 1
        pos = pos + step
        if pos >= ONE:
            pos = pos - 1
    positions = sorted(events.keys())
    counts = {base}
    cur = base
    for posn in positions:
        if posn == ZERO:
            continue  # base already includes events at 0
        cur += events[posn]
        counts.add(cur)
    if check:
        lo, hi = min(counts), max(counts)
        expected = int(((v - u) * qm).floor())
        if hi - lo + 1 > 4 or lo < expected - 1 or hi > expected + 2:
            raise AssertionError(
                f"count structure violated: {sorted(counts)} vs expected near {expected}"
            )
    return counts, max(counts)


# ---------------------------------------------------------------------------
# the 3-IET mixing falsifier
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MixingReport:
    alpha: str
    t: str
    cells: int
    entries: tuple  # per m: dict with m, time, b_m, missed_min, missed per cell, displacement data

    @property
    def all_times_miss_at_least(self) -> int:
        return min(e["missed_min"] for e in self.entries)


def mixing_falsifier(alpha, t_param, m_range, cells: int = 20, cf=None) -> MixingReport:
    """Image cell coverage of the induced 3-IET at the Kesten times q_m - 1 - b_m.

    For each m the report records, per source cell, which of the equal cells
    the exact image hits; the displacement of the power is checked to take
    at most 7 consecutive values (through the additive return-time labels).
    """
    alpha = exact(alpha)
    if not alpha.is_irrational:
        raise NotIrrational("rotation number must be irrational")
    t_param = exact(t_param)
    if not (ZERO < t_param < ONE):
        raise ValueError("inducing parameter t must lie in (0, 1)")
    ind = first_return(rotation(alpha.mod1()), (ONE - t_param, ONE))
    u3 = ind.iet
    cf = cf or cf_expand(alpha, max(m_range) + 1)
    window = (ONE - t_param, ONE)
    entries = []
    ms = sorted(set(int(m) for m in m_range))
    times = {}
    for m in ms:
        _, bm = kesten_window_counts(alpha, window, m, cf=cf)
        times[m] = (cf.q[m] - 1 - bm, bm)
    # iterate powers once up to the largest needed exponent, snapshotting
    snapshots = {}
    acc = _labeled_identity(u3)
    needed = sorted({tm for tm, _ in times.values()})
    ni = 0
    k = 0
    while ni < len(needed):
        if k == needed[ni]:
            snapshots[k] = acc
            ni += 1
            if ni == len(needed):
                break
        acc = compose(u3, acc)
        k += 1
    grid = [exact(mpq(i, cells)) for i in range(cells + 1)]
    for m in ms:
        tm, bm = times[m]
        u = snapshots[tm]
        hit = _cell_hits(u, grid, cells)
        missed = [cells - len(h) for h in hit]
        disp = sorted({lab for lab in (u.labels or ())})
        entries.append(
            {
                "m": m,
                "q_m": cf.q[m],
                "b_m": bm,
                "time": tm,
                "missed_min": min(missed) if missed else 0,
                "missed_per_cell": missed,
                "displacement_steps": disp,
                "displacement_count": len(delta_set(u).points),
                "displacement_consecutive": (max(disp) - min(disp) + 1) if disp else 0,
            }
        )
    return MixingReport(str(alpha), str(t_param), cells, tuple(entries))


def _labeled_identity(u: Iet) -> Iet:
    ident = identity_iet()
    if u.labels is not None:
        ident = ident.with_labels([0])
    return ident


def _cell_hits(u: Iet, grid, cells: int) -> list[set]:
    """For each grid cell, the set of cells its exact image intersects."""
    hits = [set() for _ in range(cells)]
    for k in range(u.r):
        a, b = u.breaks[k], u.breaks[k + 1]
        h = u.trans[k]
        # walk source cells overlapping [a, b)
        c0 = int((a * cells).floor())
        c1 = int((b * cells).floor())
        for ci in range(c0, min(c1, cells - 1) + 1):
            seg_lo = a if a > grid[ci] else grid[ci]
            seg_hi = b if b < grid[ci + 1] else grid[ci + 1]
            if not seg_lo < seg_hi:
                continue
            img_lo = seg_lo + h
            img_hi = seg_hi + h
            d0 = int((img_lo * cells).floor())
            # img_hi is exclusive: a boundary endpoint belongs to the next cell only if interior
            d1 = int((img_hi * cells).floor())
            if exact(mpq(d1, cells)) == img_hi:
                d1 -= 1
            for dj in range(d0, min(d1, cells - 1) + 1):
                hits[ci].add(dj)
    return hits
