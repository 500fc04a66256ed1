"""Definable convex valuation rings of ordered Hahn fields k<<G>>.

A cut point s outside k<<G>> is either a monomial ``t^g0`` with g0 in
div(G) \\ G (:class:`GroupCut`) or a real quadratic irrational ``a`` over
k = Q (:class:`ResidueCut`).  From s one builds the downward set D, the
additive stabiliser A and the multiplicative stabiliser O; for the three
cut shapes handled here O is the natural valuation ring {x : vmin(x) >= 0}.

The universally quantified definitions are decided by leading-term rules.
Every negative decision comes with a witness (:func:`os_violation_witness`)
that :func:`verify_violation` checks by exact arithmetic.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from ._errors import PreconditionError
from .groups import (
    GroupElement, HullElement, first_failure_index, g_member, is_closed_in_hull,
    is_discretely_ordered, is_limit_point, least_element_above, _some_prime,
)
from .numeric import QuadExt, rational_in_interval, sign
from .series import PlainRationals, Series, TruncatedResult, trunc_sqrt
from .groups import divide_by

__all__ = [
    "CaseTag", "GroupCut", "ResidueCut", "Violation", "make_cut", "member_Ds",
    "member_Ds_formula", "member_As", "member_Os", "os_violation_witness",
    "verify_violation", "check_condition41", "phi_holds", "phi_witness",
]


class CaseTag(enum.Enum):
    DISCRETE = "Discrete"
    GROUP_LIMIT_POINT = "GroupLimitPoint"
    RESIDUE_LIMIT_POINT = "ResidueLimitPoint"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GroupCut:
    g0: HullElement

    def __str__(self):
        return f"t^({self.g0})"


@dataclass(frozen=True)
class ResidueCut:
    a: QuadExt

    def __str__(self):
        return str(self.a)


@dataclass(frozen=True)
class Violation:
    """Evidence that x is outside the defined ring.

    For a group cut: ``multiplier`` y lies in D' while |x|*y does not.
    For a residue cut: y lies in the maximal ideal (or is 1 when vmin(x) = 0)
    and the rational ``shift`` b lies in D' while |x*y| + b does not, so
    |x*y| is outside A'.
    """

    multiplier: Series
    shift: Fraction | None = None


def make_cut(field, group, case: CaseTag, d: int = 2):
    """A cut point of the requested shape (discrete, group limit or residue) for k<<G>>."""
    case = CaseTag(case)
    if case is CaseTag.DISCRETE:
        if not is_discretely_ordered(group):
            raise PreconditionError(f"{group} is not discretely ordered")
        # failing at the last index guarantees a least element of G above g0
        return GroupCut(HullElement.unit(group.last_index, Fraction(1, 2)))
    if case is CaseTag.GROUP_LIMIT_POINT:
        if is_closed_in_hull(group):
            raise PreconditionError(f"{group} is closed in its divisible hull")
        last = group.last_index
        q = group.component(last).allowed.smallest_missing()
        return GroupCut(HullElement.unit(last, Fraction(1, q)))
    if not isinstance(field.arith, PlainRationals) or field.arith is not field:
        raise PreconditionError(
            f"residue cuts are only available over Q, not {field}")
    return ResidueCut(QuadExt.sqrt(d))


def _check(x: Series, cut):
    if isinstance(cut, GroupCut):
        if g_member(cut.g0, x.group):
            raise PreconditionError(f"cut exponent {cut.g0} lies in {x.group}")
    elif isinstance(cut, ResidueCut):
        if not isinstance(x.field, PlainRationals):
            raise PreconditionError(f"residue cuts need coefficients in Q, not {x.field}")
    else:
        raise PreconditionError(f"unknown cut {cut!r}")


def _residue_inside(c, a) -> bool:
    return sign(c - (a - 1)) > 0 and sign(a - c) > 0


def member_Ds(x: Series, cut) -> bool:
    """Membership in D' = {x >= 0 : x < t^g0}, resp. {x : a - 1 < x < a}."""
    _check(x, cut)
    if isinstance(cut, GroupCut):
        # v(x) == g0 is impossible because g0 is not in G
        return not x or (x.sign() > 0 and x.vmin() > cut.g0)
    if x and x.vmin().sign() < 0:
        return False
    return _residue_inside(x.coefficient(HullElement()), cut.a)


def member_Ds_formula(x: Series, cut: GroupCut) -> bool:
    """D' through its defining formula ``x >= 0 and x^N < t^h``, g0 = h/N."""
    _check(x, cut)
    n = math.lcm(*(c.denominator for _, c in cut.g0.support))
    h = cut.g0 * n
    return x.sign() >= 0 and x ** n < Series.monomial(x.field, x.group, h)


def member_As(x: Series, cut) -> bool:
    """Membership in A' = {x >= 0 : x + D' is contained in D'}."""
    _check(x, cut)
    if isinstance(cut, GroupCut):
        # D' is closed under addition and contains 0, so A' = D'
        return member_Ds(x, cut)
    return not x or (x.sign() > 0 and x.vmin().sign() > 0)


def member_Os(x: Series, cut) -> bool:
    """Membership in the defined ring, decided as vmin(x) >= 0."""
    _check(x, cut)
    return not x or x.vmin().sign() >= 0


def check_condition41(x: Series, y: Series, cut: GroupCut) -> bool:
    """Whether v(x) + v(y) > g0 for the given y in D'."""
    if not isinstance(cut, GroupCut):
        raise PreconditionError("condition (v(x) + v(y) > g0) needs a group cut")
    if not member_Ds(y, cut):
        raise PreconditionError(f"{y} is not in D'")
    if not x or not y:
        return True
    return x.vmin() + y.vmin() > cut.g0


def _limit_point_exponent(G, g0: HullElement, gap: HullElement) -> HullElement:
    """An element g1 of G with g0 < g1 < g0 + gap, moving only the last coordinate."""
    last = G.last_index
    C = G.component(last)
    lo = g0[last]
    q, den = _some_prime(C), 1
    while True:
        den *= q
        v = Fraction(math.floor(lo * den) + 1, den)
        g1 = g0 + HullElement.unit(last, v - lo)
        if g1 < g0 + gap:
            return g1


def os_violation_witness(x: Series, cut) -> Violation:
    """Construct the element certifying that x is outside the defined set."""
    _check(x, cut)
    G = x.group
    if isinstance(cut, GroupCut):
        if member_Os(x, cut):
            raise PreconditionError(f"{x} lies in the valuation ring; no violation exists")
        g0 = cut.g0
        g1 = least_element_above(G, g0)
        if g1 is not None:
            g1 = g1.value
        elif is_limit_point(g0, G) and first_failure_index(g0, G) == G.last_index:
            g1 = _limit_point_exponent(G, g0, -x.vmin())
        else:
            raise PreconditionError(f"cut {cut} is neither of discrete nor of limit-point shape")
        return Violation(Series.monomial(x.field, G, g1))
    if not x or x.vmin().sign() > 0:
        raise PreconditionError(f"{x} lies in the maximal ideal; no violation exists")
    v = x.vmin()
    y = Series.monomial(x.field, G, -v) if v.sign() < 0 else Series.constant(x.field, G, 1)
    c = abs(x * y).coefficient(HullElement())
    a = cut.a
    b = rational_in_interval(a - 1, a) if c >= 1 else rational_in_interval(a - c, a)
    return Violation(y, b)


def verify_violation(x: Series, cut, w: Violation) -> bool:
    """Exact check of a witness returned by :func:`os_violation_witness`."""
    _check(x, cut)
    if isinstance(cut, GroupCut):
        y = w.multiplier
        return (member_Ds(y, cut) and not member_Ds(abs(x) * y, cut)
                and not check_condition41(x, y, cut))
    y, b = w.multiplier, w.shift
    if x.vmin().sign() < 0:
        in_ideal = member_As(y, cut)
    else:
        in_ideal = y == 1
    shifted = abs(x * y) + b
    return (in_ideal and member_Ds(Series.constant(x.field, x.group, b), cut)
            and not member_Ds(shifted, cut))


def phi_holds(x: Series) -> bool:
    """``x = 0 or exists y: v(x - y^2) > v(x)``, decided on the leading term."""
    if not x:
        return True
    g, c = x.leading()
    if divide_by(GroupElement(g, x.group), 2) is None:
        return False
    if x.field.arith is not x.field:
        return sign(c) > 0  # declared real closed: positive elements are squares
    return x.field.sqrt_if_square(c) is not None


def phi_witness(x: Series, n_terms: int = 1) -> TruncatedResult:
    """A y with v(x - y^2) > v(x), built from the square root of the leading term."""
    if not x or not phi_holds(x):
        raise PreconditionError(f"no witness: phi does not hold nontrivially at {x}")
    res = trunc_sqrt(x, n_terms)
    rem = x - res.terms * res.terms
    if rem and not rem.vmin() > x.vmin():
        raise AssertionError(f"square-root witness failed at {x}")
    return res
