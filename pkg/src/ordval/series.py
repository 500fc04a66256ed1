"""Finitely supported Hahn series ``sum c_g t^g`` over (k, G).

The coefficient field k is Q or Q(sqrt(d)); a field tagged real closed
borrows the arithmetic of its base.  Exponents are hull elements certified
to lie in G.  Series are ordered by the sign of their leading (least
exponent) coefficient.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from ._errors import NotInGroupError, PreconditionError
from .groups import (
    INFINITY, GroupDescriptor, GroupElement, HullElement, divide_by, g_member,
)
from .numeric import QuadExt, format_rational, qext_sqrt_if_square, rational_sqrt, sign

__all__ = [
    "PlainRationals", "QuadraticExt", "DeclaredRealClosed", "Series", "TruncatedResult",
    "s_ring_ops", "s_cmp", "s_vmin", "s_residue", "trunc_inverse", "trunc_sqrt",
    "format_coefficient",
]


@dataclass(frozen=True)
class PlainRationals:
    d = None

    @property
    def arith(self):
        return self

    def coerce(self, c):
        if isinstance(c, QuadExt):
            if not c.is_rational():
                raise PreconditionError(f"{c} is not rational")
            c = c.u
        return Fraction(c)

    def sqrt_if_square(self, c):
        return rational_sqrt(c)

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class QuadraticExt:
    d: int

    def __post_init__(self):
        QuadExt(0, 0, self.d)  # validates the radicand

    @property
    def arith(self):
        return self

    def coerce(self, c):
        if isinstance(c, QuadExt):
            if c.d != self.d:
                raise PreconditionError(f"{c} does not lie in Q(sqrt({self.d}))")
            return c
        return QuadExt(c, 0, self.d)

    def sqrt_if_square(self, c):
        return qext_sqrt_if_square(c)

    def __str__(self):
        return f"Q(sqrt({self.d}))"


@dataclass(frozen=True)
class DeclaredRealClosed:
    """A coefficient field treated as real closed for classification only."""

    base: PlainRationals | QuadraticExt

    @property
    def d(self):
        return self.base.d

    @property
    def arith(self):
        return self.base

    def coerce(self, c):
        return self.base.coerce(c)

    def sqrt_if_square(self, c):
        return self.base.sqrt_if_square(c)

    def __str__(self):
        return f"RC({self.base})"


def format_coefficient(c) -> str:
    if isinstance(c, QuadExt) and not c.is_rational():
        return f"({c})"
    if isinstance(c, QuadExt):
        return format_rational(c.u)
    return format_rational(c)


class Series:
    """An element of k<<G>> with finite support."""

    __slots__ = ("field", "group", "terms")

    def __init__(self, field, group: GroupDescriptor, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        acc = {}
        for e, c in terms:
            e = e.value if isinstance(e, GroupElement) else e
            if not isinstance(e, HullElement):
                e = HullElement(e)
            if not g_member(e, group):
                raise NotInGroupError(f"exponent {e} is not in {group}")
            acc[e] = acc.get(e, 0) + field.coerce(c)
        self._set(field, group, acc)

    def _set(self, field, group, acc):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", tuple(sorted(
            ((e, c) for e, c in acc.items() if c), key=lambda t: t[0])))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def _from(cls, field, group, acc):
        obj = object.__new__(cls)
        obj._set(field, group, acc)
        return obj

    @classmethod
    def monomial(cls, field, group, exponent, coeff=1):
        return cls(field, group, [(exponent, coeff)])

    @classmethod
    def constant(cls, field, group, c):
        return cls(field, group, [(HullElement(), c)])

    def _like(self, acc):
        return Series._from(self.field, self.group, acc)

    def _compatible(self, other):
        if isinstance(other, Series):
            if other.field != self.field or other.group != self.group:
                raise PreconditionError(
                    f"series over ({self.field}, {self.group}) and "
                    f"({other.field}, {other.group}) cannot be combined")
            return other
        return Series.constant(self.field, self.group, other)

    # ring structure
    def __add__(self, other):
        other = self._compatible(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return self._like(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms})

    def __sub__(self, other):
        return self + (-self._compatible(other))

    def __rsub__(self, other):
        return self._compatible(other) - self

    def __mul__(self, other):
        other = self._compatible(other)
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return self._like(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Series.constant(self.field, self.group, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c, shift: HullElement | None = None):
        """``c * t^shift * self``; the shift must keep exponents in G."""
        c = self.field.coerce(c)
        shift = shift or HullElement()
        return self._like({e + shift: c * a for e, a in self.terms})

    # order and valuation
    def sign(self) -> int:
        return sign(self.terms[0][1]) if self.terms else 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def cmp(self, other) -> int:
        return (self - self._compatible(other)).sign()

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, Series):
            return (self.field, self.group, self.terms) == (other.field, other.group, other.terms)
        if isinstance(other, (int, Fraction, QuadExt)):
            return self == Series.constant(self.field, self.group, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def vmin(self):
        return self.terms[0][0] if self.terms else INFINITY

    def leading(self):
        """(exponent, coefficient) of the least-exponent term."""
        if not self.terms:
            raise PreconditionError("the zero series has no leading term")
        return self.terms[0]

    def coefficient(self, e):
        e = e.value if isinstance(e, GroupElement) else e
        for f, c in self.terms:
            if f == e:
                return c
        return self.field.coerce(0)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            coef = format_coefficient(c)
            if not e:
                parts.append(coef)
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{coef}*"
                parts.append(f"{head}t^({e})")
        return " + ".join(parts)

    def __repr__(self):
        return f"Series({self})"


@dataclass(frozen=True)
class TruncatedResult:
    """Leading terms of an infinite expansion.

    ``guarantee`` is the exponent of the last produced term: the true series
    and ``terms`` agree on every exponent up to it.  ``remainder_bound`` is
    what the back-multiplication remainder must strictly exceed in vmin.
    """

    terms: Series
    guarantee: HullElement
    remainder_bound: HullElement


def s_ring_ops(x: Series, y: Series | None = None, op: str = "add") -> Series:
    if op == "add":
        return x + y
    if op == "neg":
        return -x
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def s_cmp(x: Series, y: Series) -> int:
    return x.cmp(y)


def s_vmin(x: Series):
    return x.vmin()


def s_residue(x: Series):
    """Image in the residue field k of an element of the valuation ring."""
    if x.terms and x.vmin().sign() < 0:
        raise PreconditionError(f"{x} is not in the valuation ring")
    return x.coefficient(HullElement())


def _normalized_tail(x: Series):
    """Leading exponent, leading coefficient and eps with x = c t^g (1 + eps)."""
    g, c = x.leading()
    return g, c, [(e - g, a / c) for e, a in x.terms[1:]]


def _monoid_walk(gens):
    """Elements of the monoid generated by positive ``gens``, in increasing order."""
    zero = HullElement()
    heap, seen = [zero], {zero}
    while heap:
        s = heapq.heappop(heap)
        yield s
        for e in gens:
            t = s + e
            if t not in seen:
                seen.add(t)
                heapq.heappush(heap, t)


def trunc_inverse(x: Series, n_terms: int) -> TruncatedResult:
    """The first ``n_terms`` terms of 1/x in the Hahn field."""
    if not x:
        raise ZeroDivisionError("inverse of the zero series")
    if n_terms < 1:
        raise PreconditionError("n_terms must be positive")
    g, c, eps = _normalized_tail(x)
    gens = [e for e, _ in eps]
    # y = 1/(1 + eps) satisfies y_s = [s == 0] - sum_e eps_e y_{s-e}
    y, out = {}, []
    for s in _monoid_walk(gens):
        val = (1 if not s else 0) - sum((a * y[s - e] for e, a in eps if (s - e) in y), 0)
        if val:
            y[s] = val
            out.append((s, val))
            if len(out) == n_terms:
                break
    inv = 1 / c
    result = x._like({s - g: inv * v for s, v in out})
    last = out[-1][0] - g
    return TruncatedResult(result, last, g + last)


def trunc_sqrt(x: Series, n_terms: int) -> TruncatedResult:
    """The first ``n_terms`` terms of the positive square root of x."""
    if n_terms < 1:
        raise PreconditionError("n_terms must be positive")
    if x.sign() <= 0:
        raise PreconditionError(f"{x} is not positive")
    g, c, eps = _normalized_tail(x)
    half = divide_by(GroupElement(g, x.group), 2)
    if half is None:
        raise PreconditionError(f"leading exponent {g} is not 2-divisible in {x.group}")
    root = x.field.sqrt_if_square(c)
    if root is None:
        raise PreconditionError(f"leading coefficient {c} is not a square in {x.field}")
    eps_map = dict(eps)
    zero = HullElement()
    # z = sqrt(1 + eps): 2 z_s = eps_s - sum_{0 < a < s} z_a z_{s-a}
    z, out = {}, []
    for s in _monoid_walk(list(eps_map)):
        if not s:
            val = Fraction(1)
        else:
            conv = sum((za * z[s - a] for a, za in z.items() if a != zero and (s - a) in z), 0)
            val = (eps_map.get(s, 0) - conv) / 2
        if val:
            z[s] = val
            out.append((s, val))
            if len(out) == n_terms:
                break
    h = half.value
    result = x._like({s + h: root * v for s, v in out})
    last = out[-1][0] + h
    return TruncatedResult(result, last, h + last)
