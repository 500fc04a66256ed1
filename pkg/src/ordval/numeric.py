"""Exact arithmetic in Q and in a single real quadratic field Q(sqrt(d)).

Rationals are plain :class:`fractions.Fraction` values.  :class:`QuadExt`
holds ``u + v*sqrt(d)`` with rational ``u, v`` and a squarefree ``d >= 2``.
All comparisons are exact; no floating point is used anywhere.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from numbers import Rational

import sympy

__all__ = [
    "QuadExt",
    "qext_arith",
    "qext_sign",
    "qext_sqrt_if_square",
    "rational_in_interval",
    "sign",
    "floor_value",
    "ceil_value",
    "rational_sqrt",
    "format_rational",
]


def format_rational(r) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def _check_radicand(d: int) -> int:
    if not isinstance(d, int) or d < 2:
        raise ValueError(f"radicand must be an integer >= 2, got {d!r}")
    if any(e > 1 for e in sympy.factorint(d).values()):
        raise ValueError(f"radicand {d} is not squarefree")
    return d


@total_ordering
class QuadExt:
    """The real number ``u + v*sqrt(d)``.

    Mixed arithmetic with ints and Fractions is supported; two QuadExt
    operands must share ``d``.
    """

    __slots__ = ("u", "v", "d")

    def __init__(self, u=0, v=0, d=2):
        object.__setattr__(self, "u", Fraction(u))
        object.__setattr__(self, "v", Fraction(v))
        object.__setattr__(self, "d", _check_radicand(d))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def sqrt(cls, d: int) -> QuadExt:
        return cls(0, 1, d)

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"mismatched radicands {self.d} and {other.d}")
            return other
        if isinstance(other, (int, Rational)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.u + o.u, self.v + o.v, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.u, -self.v, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.u - o.u, self.v - o.v, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.u * o.u + self.v * o.v * self.d,
                       self.u * o.v + self.v * o.u, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.u * self.u - self.d * self.v * self.v

    def conjugate(self) -> QuadExt:
        return QuadExt(self.u, -self.v, self.d)

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            # the norm of a nonzero element is nonzero since sqrt(d) is irrational
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt(self.u / n, -self.v / n, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QuadExt(1, 0, self.d), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sign(self) -> int:
        return qext_sign(self)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.u, self.v, self.d) == (other.u, other.v, other.d)
        if isinstance(other, (int, Rational)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __lt__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() < 0

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.d))

    def is_rational(self) -> bool:
        return self.v == 0

    def __str__(self):
        if self.v == 0:
            return format_rational(self.u)
        root = f"sqrt({self.d})"
        mag = root if abs(self.v) == 1 else f"{format_rational(abs(self.v))}*{root}"
        if self.u == 0:
            return mag if self.v > 0 else f"-{mag}"
        op = "+" if self.v > 0 else "-"
        return f"{format_rational(self.u)} {op} {mag}"

    def __repr__(self):
        return f"QuadExt({self.u!s}, {self.v!s}, d={self.d})"


def qext_arith(x, y, op: str):
    """Field operation ``op`` in {'add', 'sub', 'mul', 'div'} on two QuadExt values."""
    if isinstance(x, QuadExt) and isinstance(y, QuadExt) and x.d != y.d:
        raise ValueError(f"mismatched radicands {x.d} and {y.d}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise ZeroDivisionError("QuadExt division by zero")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def _sgn(r) -> int:
    return (r > 0) - (r < 0)


def qext_sign(x: QuadExt) -> int:
    su, sv = _sgn(x.u), _sgn(x.v)
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # opposite signs: compare u^2 with v^2 d
    return su * _sgn(x.u * x.u - x.v * x.v * x.d)


def sign(x) -> int:
    """Sign of a rational or QuadExt value."""
    if isinstance(x, QuadExt):
        return qext_sign(x)
    return _sgn(x)


def rational_sqrt(r) -> Fraction | None:
    """Nonnegative rational square root of ``r`` if it exists."""
    r = Fraction(r)
    if r < 0:
        return None
    n, m = math.isqrt(r.numerator), math.isqrt(r.denominator)
    if n * n == r.numerator and m * m == r.denominator:
        return Fraction(n, m)
    return None


def qext_sqrt_if_square(x, d: int | None = None):
    """Return ``y >= 0`` with ``y*y == x`` inside the ambient field, else None.

    ``x`` may be a Fraction (then the ambient field is Q, or Q(sqrt(d)) when
    ``d`` is given) or a QuadExt.
    """
    if isinstance(x, QuadExt):
        d = x.d
        u, v = x.u, x.v
    else:
        u, v = Fraction(x), Fraction(0)
        if d is None:
            return rational_sqrt(u)
    if v == 0:
        r = rational_sqrt(u)
        if r is not None:
            return QuadExt(r, 0, d)
        s = rational_sqrt(u / d)
        if s is not None:
            return QuadExt(0, s, d)
        return None
    # (p + q sqrt d)^2 = p^2 + d q^2 + 2pq sqrt d, so p^2 solves
    # P^2 - u P + d v^2 / 4 = 0
    disc = rational_sqrt(u * u - v * v * d)
    if disc is None:
        return None
    for p2 in ((u + disc) / 2, (u - disc) / 2):
        p = rational_sqrt(p2)
        if p:
            y = QuadExt(p, v / (2 * p), d)
            return -y if qext_sign(y) < 0 else y
    return None


def floor_value(x) -> int:
    """Exact floor of a rational or QuadExt."""
    if not isinstance(x, QuadExt):
        return math.floor(Fraction(x))
    lo, hi = -1, 1
    while sign(x - lo) < 0:
        lo *= 2
    while sign(x - hi) >= 0:
        hi *= 2
    # invariant: lo <= x < hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if sign(x - mid) >= 0:
            lo = mid
        else:
            hi = mid
    return lo


def ceil_value(x) -> int:
    return -floor_value(-x)


def rational_in_interval(lo, hi) -> Fraction:
    """A rational strictly between ``lo`` and ``hi``, found by exact bisection."""
    if sign(hi - lo) <= 0:
        raise ValueError(f"empty interval ({lo}, {hi})")
    a, b = Fraction(floor_value(lo)), Fraction(ceil_value(hi))
    while True:
        mid = (a + b) / 2
        if sign(mid - lo) > 0 and sign(hi - mid) > 0:
            return mid
        if sign(mid - lo) <= 0:
            a = mid
        else:
            b = mid
