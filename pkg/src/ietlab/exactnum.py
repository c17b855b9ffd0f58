"""Exact arithmetic on the unit circle.

Numbers are either rationals or elements a + b*sqrt(d) of a real quadratic
field.  All arithmetic and comparisons are exact; nothing here ever rounds.
A single computation may mix rationals freely with quadratics from one fixed
field, but two quadratics with different radicands refuse to combine.
"""

from __future__ import annotations

import math

import gmpy2
from gmpy2 import mpq, mpz, isqrt, is_square

__all__ = [
    "ExactReal",
    "IncompatibleField",
    "ZERO",
    "ONE",
    "HALF",
    "exact",
    "sqrt_int",
    "golden_mean",
    "parse_exact",
    "circle_add",
    "circle_sub",
    "circle_point",
    "nearest_int_dist",
    "compare",
]

_TRIAL_PRIMES_BOUND = 1_000_000
_SQUAREFREE_LIMIT = 10**12


class IncompatibleField(ValueError):
    """Two quadratic values with different radicands cannot be combined."""


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, d) with n = s*s*d and d squarefree.

    Rigorous for n <= 10**12 (trial division up to 10**6 leaves a residual
    that is 1, prime, a square of a prime, or a product of two distinct
    primes).  Larger radicands are rejected rather than silently accepted.
    """
    if n <= 0:
        raise ValueError("radicand must be positive")
    if n > _SQUAREFREE_LIMIT:
        raise ValueError(f"radicand {n} too large to verify squarefree")
    s, d = 1, 1
    m = n
    p = 2
    while p * p <= m and p < _TRIAL_PRIMES_BOUND:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    if m > 1:
        if is_square(mpz(m)):
            s *= int(isqrt(mpz(m)))
        else:
            d *= m
    return s, d


class ExactReal:
    """A rational or real quadratic irrational, stored as a + b*sqrt(d).

    ``b == 0`` means the value is rational and ``d`` is 0.  Otherwise ``d``
    is a positive squarefree non-square integer.  Instances are immutable
    and hashable.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        a = mpq(a)
        b = mpq(b)
        if b == 0:
            d = 0
        else:
            if d <= 1:
                raise ValueError("quadratic part needs a radicand d >= 2")
            s, d0 = _squarefree_split(int(d))
            if d0 == 1:  # sqrt(d) was an integer after all
                a, b, d = a + b * s, mpq(0), 0
            else:
                b, d = b * s, d0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", int(d))

    def __setattr__(self, name, value):
        raise AttributeError("ExactReal is immutable")

    # -- field bookkeeping -------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_irrational(self) -> bool:
        return self.b != 0

    def _join_field(self, other: "ExactReal") -> int:
        if self.d and other.d and self.d != other.d:
            raise IncompatibleField(
                f"cannot combine sqrt({self.d}) with sqrt({other.d})"
            )
        return self.d or other.d

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = exact(other)
        d = self._join_field(other)
        return _raw(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __sub__(self, other):
        other = exact(other)
        d = self._join_field(other)
        return _raw(self.a - other.a, self.b - other.b, d)

    def __rsub__(self, other):
        return exact(other) - self

    def __neg__(self):
        return _raw(-self.a, -self.b, self.d)

    def __mul__(self, other):
        other = exact(other)
        d = self._join_field(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return _raw(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = exact(other)
        if other.a == 0 and other.b == 0:
            raise ZeroDivisionError("division by zero")
        d = self._join_field(other)
        if other.b == 0:
            return _raw(self.a / other.a, self.b / other.a, d)
        # multiply by the conjugate; the norm a^2 - b^2 d is a nonzero rational
        norm = other.a * other.a - other.b * other.b * d
        a = (self.a * other.a - self.b * other.b * d) / norm
        b = (self.b * other.a - self.a * other.b) / norm
        return _raw(a, b, d)

    def __rtruediv__(self, other):
        return exact(other) / self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparisons -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}, decided by conjugate multiplication."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        sa = 1 if a > 0 else -1
        sb = 1 if b > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: compare a^2 with b^2 d (equality impossible, d nonsquare)
        return sa if a * a > b * b * self.d else sb

    def _cmp(self, other) -> int:
        return (self - exact(other)).sign()

    def __eq__(self, other):
        if isinstance(other, (ExactReal, int, type(mpq(0)))):
            try:
                return self._cmp(other) == 0
            except IncompatibleField:
                return False
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # -- rounding ----------------------------------------------------------

    def floor(self) -> int:
        if self.b == 0:
            return int(self.a.numerator // self.a.denominator)
        # write self = (A + B*sqrt(d)) / Q with integers A, B, Q > 0
        qa, qb = self.a.denominator, self.b.denominator
        q = qa * qb // math.gcd(int(qa), int(qb))
        big_a = self.a.numerator * (q // qa)
        big_b = self.b.numerator * (q // qb)
        s = isqrt(big_b * big_b * self.d)
        # sqrt(B^2 d) lies in (s, s+1); candidate floor from the lower corner
        num = big_a + (s if big_b > 0 else -(s + 1))
        m = int(num // q)
        while self._cmp(m + 1) >= 0:
            m += 1
        while self._cmp(m) < 0:
            m -= 1
        return m

    def mod1(self) -> "ExactReal":
        """Fractional part, exactly in [0, 1)."""
        return self - self.floor()

    def to_float(self) -> float:
        if not self.b:
            return float(self.a)
        # a and b*sqrt(d) can cancel almost completely; evaluate with enough
        # guard bits for the operand sizes before rounding to double
        bits = max(
            self.a.numerator.bit_length() + self.a.denominator.bit_length(),
            self.b.numerator.bit_length() + self.b.denominator.bit_length(),
        )
        ctx = gmpy2.context(precision=bits + 80)
        val = ctx.add(ctx.mul(gmpy2.mpfr(self.b, bits + 80),
                              ctx.sqrt(gmpy2.mpfr(self.d, bits + 80))),
                      gmpy2.mpfr(self.a, bits + 80))
        return float(val)

    __float__ = to_float

    # -- presentation --------------------------------------------------------

    def __repr__(self):
        return f"ExactReal({self!s})"

    def __str__(self):
        if self.b == 0:
            return _fmt_q(self.a)
        parts = []
        if self.a != 0:
            parts.append(_fmt_q(self.a))
        bpart = f"{_fmt_q(abs(self.b))}*sqrt({self.d})"
        if abs(self.b) == 1:
            bpart = f"sqrt({self.d})"
        if self.b < 0:
            parts.append(f"-{bpart}")
        elif parts:
            parts.append(f"+{bpart}")
        else:
            parts.append(bpart)
        return "".join(parts)


def _fmt_q(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _raw(a, b, d) -> ExactReal:
    """Internal constructor skipping radicand factorization (d already clean)."""
    v = object.__new__(ExactReal)
    object.__setattr__(v, "a", a)
    object.__setattr__(v, "b", mpq(b))
    object.__setattr__(v, "d", d if v.b != 0 else 0)
    if v.b == 0 and v.d:
        object.__setattr__(v, "d", 0)
    return v


ZERO = ExactReal(0)
ONE = ExactReal(1)
HALF = ExactReal(mpq(1, 2))


def exact(x) -> ExactReal:
    """Coerce ints, rationals, strings, or ExactReal into ExactReal."""
    if isinstance(x, ExactReal):
        return x
    if isinstance(x, str):
        return parse_exact(x)
    if isinstance(x, float):
        raise TypeError(
            "refusing to coerce a float; use exact strings or rationals"
        )
    return _raw(mpq(x), mpq(0), 0)


def sqrt_int(n: int) -> ExactReal:
    """Exact sqrt(n) for a positive integer n."""
    s, d = _squarefree_split(int(n))
    if d == 1:
        return exact(s)
    return _raw(mpq(0), mpq(s), d)


def golden_mean() -> ExactReal:
    """(sqrt(5) - 1) / 2, the golden rotation number."""
    return _raw(mpq(-1, 2), mpq(1, 2), 5)


# ---------------------------------------------------------------------------
# circle operations
# ---------------------------------------------------------------------------


def circle_point(x) -> ExactReal:
    """Normalize a value onto [0, 1) exactly."""
    x = exact(x)
    if ZERO <= x < ONE:
        return x
    return x.mod1()


def circle_add(x: ExactReal, y: ExactReal) -> ExactReal:
    """(x + y) mod 1 for x, y in [0, 1); single-comparison reduction."""
    s = x + y
    return s - 1 if s >= ONE else s


def circle_sub(x: ExactReal, y: ExactReal) -> ExactReal:
    """(x - y) mod 1 for x, y in [0, 1)."""
    s = x - y
    return s + 1 if s.sign() < 0 else s


def nearest_int_dist(x) -> ExactReal:
    """Distance from x to the closest integer; result in [0, 1/2]."""
    f = exact(x).mod1()
    g = ONE - f
    return f if f <= g else g


def compare(a, b) -> int:
    """Exact three-way comparison: -1, 0 or 1."""
    return exact(a)._cmp(exact(b))


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_NAMED = {
    "golden": golden_mean,
    "phi": golden_mean,
}


def parse_exact(text: str) -> ExactReal:
    """Parse an exact numeric literal.

    Accepts "p/q", decimal strings (read as exact rationals), sqrt(d),
    and +,-,*,/ combinations such as "1/2+1/2*sqrt(5)" or "sqrt(2)-1".
    """
    tokens = _tokenize(text)
    val, pos = _parse_sum(tokens, 0)
    if pos != len(tokens):
        raise ValueError(f"trailing input in number literal: {text!r}")
    return val


def _tokenize(text: str) -> list[str]:
    out = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "+-*/()":
            out.append(c)
            i += 1
        elif c.isdigit() or c == ".":
            j = i
            while j < n and (text[j].isdigit() or text[j] == "."):
                j += 1
            out.append(text[i:j])
            i = j
        elif c.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            out.append(text[i:j])
            i = j
        else:
            raise ValueError(f"bad character {c!r} in number literal")
    return out


def _parse_sum(toks, pos):
    val, pos = _parse_product(toks, pos)
    while pos < len(toks) and toks[pos] in "+-":
        op = toks[pos]
        rhs, pos = _parse_product(toks, pos + 1)
        val = val + rhs if op == "+" else val - rhs
    return val, pos


def _parse_product(toks, pos):
    val, pos = _parse_atom(toks, pos)
    while pos < len(toks) and toks[pos] in "*/":
        op = toks[pos]
        rhs, pos = _parse_atom(toks, pos + 1)
        val = val * rhs if op == "*" else val / rhs
    return val, pos


def _parse_atom(toks, pos):
    if pos >= len(toks):
        raise ValueError("unexpected end of number literal")
    tok = toks[pos]
    if tok == "-":
        val, pos = _parse_atom(toks, pos + 1)
        return -val, pos
    if tok == "+":
        return _parse_atom(toks, pos + 1)
    if tok == "(":
        val, pos = _parse_sum(toks, pos + 1)
        if pos >= len(toks) or toks[pos] != ")":
            raise ValueError("unbalanced parenthesis in number literal")
        return val, pos + 1
    if tok == "sqrt":
        if pos + 1 >= len(toks) or toks[pos + 1] != "(":
            raise ValueError("sqrt needs a parenthesized integer")
        inner, newpos = _parse_sum(toks, pos + 2)
        if newpos >= len(toks) or toks[newpos] != ")":
            raise ValueError("unbalanced parenthesis after sqrt")
        if not (inner.is_rational and inner.a.denominator == 1 and inner.a > 0):
            raise ValueError("sqrt argument must be a positive integer")
        return sqrt_int(int(inner.a)), newpos + 1
    if tok in _NAMED:
        return _NAMED[tok](), pos + 1
    if tok[0].isdigit() or tok[0] == ".":
        if "." in tok:
            whole, frac = tok.split(".", 1) if "." in tok else (tok, "")
            num = int(whole or 0) * 10 ** len(frac) + int(frac or 0)
            return exact(mpq(num, 10 ** len(frac))), pos + 1
        return exact(mpq(tok)), pos + 1
    raise ValueError(f"unrecognized token {tok!r} in number literal")
