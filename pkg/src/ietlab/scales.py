"""Scale sequences s_n -> infinity and their classification.

Closed forms (powers, power-times-log) classify exactly; tabulated or
user-supplied sequences get finite-horizon certification, flagged as such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactnum import ExactReal, exact

__all__ = [
    "ScaleFlags",
    "PowerScale",
    "PowerLogScale",
    "TableScale",
    "ExprScale",
    "classify_scale",
    "parse_scale",
]

# margin for horizon-certified two-jumpy / steady decisions
_RATIO_MARGIN = 0.15


@dataclass(frozen=True)
class ScaleFlags:
    monotone: bool
    steady: bool
    two_jumpy: bool
    bounded_ratio: bool
    nice: bool
    certified: str  # "closed-form" or "horizon:N"

    def as_dict(self) -> dict:
        return {
            "monotone": self.monotone,
            "steady": self.steady,
            "two_jumpy": self.two_jumpy,
            "bounded_ratio": self.bounded_ratio,
            "nice": self.nice,
            "certified": self.certified,
        }


@dataclass(frozen=True)
class PowerScale:
    """s_n = n**alpha with alpha > 0; rational alpha supports exact comparisons."""

    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 0:
            raise ValueError("power scales need alpha > 0")

    @property
    def start(self) -> int:
        return 1

    def value(self, n: int) -> float:
        return float(n) ** float(self.alpha)

    @property
    def exact_comparable(self) -> bool:
        return True

    def cmp_scaled(self, n1: int, d1: ExactReal, n2: int, d2: ExactReal) -> int:
        """Exact sign of n1^a*d1 - n2^a*d2 for nonnegative d's.

        Raises both sides to the denominator of alpha, which preserves order
        on nonnegative reals and lands back in the quadratic field.
        """
        p, q = self.alpha.numerator, self.alpha.denominator
        lhs = exact(n1**p) * _ipow(d1, q)
        rhs = exact(n2**p) * _ipow(d2, q)
        return (lhs - rhs).sign()

    def describe(self) -> str:
        return f"pow:{self.alpha}"


@dataclass(frozen=True)
class PowerLogScale:
    """s_n = n**alpha * (ln n)**beta, tabulated from n = 2 to keep s_n > 0."""

    alpha: float
    beta: float

    def __post_init__(self):
        if self.alpha < 0 or (self.alpha == 0 and self.beta <= 0):
            raise ValueError("need alpha > 0, or alpha = 0 with beta > 0")

    @property
    def start(self) -> int:
        return 2

    def value(self, n: int) -> float:
        return float(n) ** self.alpha * math.log(n) ** self.beta

    @property
    def exact_comparable(self) -> bool:
        return self.beta == 0

    def describe(self) -> str:
        return f"powlog:{self.alpha}:{self.beta}"


@dataclass(frozen=True)
class TableScale:
    values: tuple
    start: int = 1

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if any(v <= 0 for v in vals):
            raise ValueError("scale values must be positive")
        object.__setattr__(self, "values", vals)

    @property
    def horizon(self) -> int:
        return self.start + len(self.values) - 1

    def value(self, n: int) -> float:
        return self.values[n - self.start]

    @property
    def exact_comparable(self) -> bool:
        return False

    def describe(self) -> str:
        return f"table[{len(self.values)}]"


@dataclass(frozen=True)
class ExprScale:
    fn: Callable[[int], float]
    description: str = "expr"
    start: int = 1

    def value(self, n: int) -> float:
        return float(self.fn(n))

    @property
    def exact_comparable(self) -> bool:
        return False

    def describe(self) -> str:
        return self.description


def classify_scale(s, horizon: int = 4096) -> ScaleFlags:
    """The five classification flags.

    Power and power-log scales are decided in closed form; tables and
    expressions are certified over a finite window and say so.
    """
    if isinstance(s, PowerScale):
        return ScaleFlags(True, True, True, True, True, "closed-form")
    if isinstance(s, PowerLogScale):
        # ratios s_{n+1}/s_n -> 1 always; s_{2n}/s_n -> 2^alpha
        two_jumpy = s.alpha > 0
        return ScaleFlags(True, True, two_jumpy, True, two_jumpy, "closed-form")
    if isinstance(s, TableScale):
        n_hi = s.horizon
    else:
        n_hi = horizon
    return _classify_window(s, n_hi)


def _classify_window(s, n_hi: int) -> ScaleFlags:
    n_lo = s.start
    if n_hi < n_lo + 8:
        raise ValueError("horizon too short to certify anything")
    vals = {n: s.value(n) for n in range(n_lo, n_hi + 1)}
    ratios = [vals[n + 1] / vals[n] for n in range(n_lo, n_hi)]
    monotone = all(r >= 1.0 for r in ratios[len(ratios) // 4 :])
    bounded_ratio = max(ratios) < 1e6
    tail = ratios[len(ratios) // 2 :]
    steady = max(abs(r - 1.0) for r in tail) < _RATIO_MARGIN
    doubling = [vals[2 * n] / vals[n] for n in range(max(n_lo, 1), n_hi // 2 + 1)]
    dtail = doubling[len(doubling) // 2 :]
    two_jumpy = monotone and min(dtail) > 1.0 + _RATIO_MARGIN
    return ScaleFlags(
        monotone,
        steady,
        two_jumpy,
        bounded_ratio,
        two_jumpy and bounded_ratio,
        f"horizon:{n_hi}",
    )


def _ipow(x: ExactReal, k: int) -> ExactReal:
    out = exact(1)
    base = x
    while k:
        if k & 1:
            out = out * base
        base = base * base
        k >>= 1
    return out


def parse_scale(spec: str):
    """Parse CLI scale specs: "pow:1", "pow:1/2", "powlog:1:1"."""
    parts = spec.split(":")
    if parts[0] == "pow" and len(parts) == 2:
        return PowerScale(Fraction(parts[1]))
    if parts[0] == "powlog" and len(parts) == 3:
        return PowerLogScale(float(parts[1]), float(parts[2]))
    raise ValueError(f"unrecognized scale spec {spec!r}")
