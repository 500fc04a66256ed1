import random
from fractions import Fraction as F

import pytest

from ordval import sampling as S
from ordval._errors import PreconditionError
from ordval.defval import (
    CaseTag, GroupCut, ResidueCut, check_condition41, make_cut, member_As, member_Ds,
    member_Ds_formula, member_Os, os_violation_witness, phi_holds, phi_witness, verify_violation,
)
from ordval.dsl import parse_element as E, parse_group_expr as G, parse_series_expr
from ordval.numeric import QuadExt, sign
from ordval.series import DeclaredRealClosed, PlainRationals, QuadraticExt, Series

QF, Q2 = PlainRationals(), QuadraticExt(2)
RC = DeclaredRealClosed(QF)
ZG, QG, AA = G("Z"), G("Q"), G("lex(loc{2}, loc{2})")
R2 = QuadExt.sqrt(2)


def s(text, field=QF, group=ZG):
    return parse_series_expr(text, field, group)


def test_make_cut_examples():
    assert make_cut(QF, ZG, CaseTag.DISCRETE) == GroupCut(E("1/2"))
    assert make_cut(RC, AA, CaseTag.GROUP_LIMIT_POINT) == GroupCut(E("{2: 1/3}"))
    assert make_cut(QF, ZG, CaseTag.RESIDUE_LIMIT_POINT) == ResidueCut(R2)
    with pytest.raises(PreconditionError):
        make_cut(QF, QG, CaseTag.DISCRETE)
    with pytest.raises(PreconditionError):
        make_cut(QF, G("lex(Q, loc{>=3})").__class__((QG.components[0],)), CaseTag.GROUP_LIMIT_POINT)
    with pytest.raises(PreconditionError):
        make_cut(RC, ZG, CaseTag.RESIDUE_LIMIT_POINT)
    with pytest.raises(PreconditionError):
        make_cut(Q2, ZG, CaseTag.RESIDUE_LIMIT_POINT)


def test_member_Ds_examples():
    cut = GroupCut(E("1/2"))
    assert member_Ds(s("t"), cut) and member_Ds_formula(s("t"), cut)
    assert not member_Ds(s("1"), cut) and not member_Ds_formula(s("1"), cut)
    assert member_Ds(s("1 + t"), ResidueCut(R2))
    assert not member_Ds(s("t"), ResidueCut(R2))


def test_member_Os_examples():
    cut = GroupCut(E("1/2"))
    assert member_Os(s("3 + t"), cut)
    assert not member_Os(s("t^(-1)"), cut)
    assert member_Os(s("0"), cut)


def test_witness_examples():
    cut = GroupCut(E("1/2"))
    x = s("t^(-1)")
    w = os_violation_witness(x, cut)
    assert w.multiplier == s("t")
    assert not check_condition41(x, w.multiplier, cut) and verify_violation(x, cut, w)

    cut2 = GroupCut(E("{2: 1/3}"))
    x2 = Series.monomial(RC, AA, E("{2: -1}"))
    w2 = os_violation_witness(x2, cut2)
    assert w2.multiplier == Series.monomial(RC, AA, E("{2: 1/2}"))
    assert verify_violation(x2, cut2, w2)

    cut3 = ResidueCut(R2)
    x3 = s("1/2")
    w3 = os_violation_witness(x3, cut3)
    b = w3.shift
    assert sign(b - (R2 - F(1, 2))) > 0 and sign(R2 - b) > 0
    assert sign(F(1, 2) + b - R2) > 0
    assert verify_violation(x3, cut3, w3)

    with pytest.raises(PreconditionError):
        os_violation_witness(s("1 + t"), cut)


def test_condition41_examples():
    cut = GroupCut(E("1/2"))
    assert check_condition41(s("1"), s("t"), cut)
    assert not check_condition41(s("t^(-1)"), s("t"), cut)
    assert check_condition41(s("0"), s("t^(3)"), cut)
    with pytest.raises(PreconditionError):
        check_condition41(s("1"), s("1"), cut)


def test_phi_examples():
    x = s("2*t^(1/3)", Q2, QG)
    assert phi_holds(x)
    y = phi_witness(x, 1).terms
    assert y == s("sqrt(2)*t^(1/6)", Q2, QG) and x - y * y == 0
    assert not phi_holds(s("2", QF, QG))
    assert not phi_holds(s("2"))
    assert phi_holds(s("0"))
    assert phi_witness(s("4*t^(2)"), 1).terms == s("2*t")
    x = s("1 + t", Q2)
    y = phi_witness(x, 2).terms
    assert y == s("1 + 1/2*t", Q2)
    assert x - y * y == s("-1/4*t^(2)", Q2)


def test_phi_over_declared_real_closed():
    assert phi_holds(Series.constant(DeclaredRealClosed(QF), QG, 2)) is True


@pytest.mark.parametrize("field,group,case", [
    (QF, ZG, CaseTag.DISCRETE), (RC, AA, CaseTag.GROUP_LIMIT_POINT),
    (QF, G("lex(Z, Z)"), CaseTag.DISCRETE), (QF, G("lex(Q, loc{>=3})"), CaseTag.GROUP_LIMIT_POINT),
    (QF, G("omegaplus1(const(Q), Z)"), CaseTag.DISCRETE),
])
def test_group_cut_soundness_sampled(field, group, case):
    rng = random.Random(7)
    cut = make_cut(field, group, case)
    for _ in range(150):
        x = S.series(field, group, rng)
        assert member_Ds(abs(x), cut) == member_Ds_formula(abs(x), cut)
        if member_Os(x, cut):
            for _ in range(5):
                g = S.group_element(group, rng)
                if g > cut.g0:
                    y = Series.monomial(field, group, g, abs(S.rational_coeff(rng, True)))
                    assert check_condition41(x, y, cut)
                    assert member_Ds(abs(x) * y, cut)
        else:
            w = os_violation_witness(x, cut)
            assert verify_violation(x, cut, w)


def test_residue_cut_sampled():
    rng = random.Random(11)
    cut = make_cut(QF, ZG, CaseTag.RESIDUE_LIMIT_POINT)
    for _ in range(300):
        x = S.series(QF, ZG, rng)
        if x and x.vmin().sign() <= 0:
            assert verify_violation(x, cut, os_violation_witness(x, cut))
        else:
            assert member_As(abs(x), cut)


def test_valuation_ring_shape():
    cut = GroupCut(E("1/2"))
    rng = random.Random(3)
    for _ in range(200):
        x, y = S.series(QF, ZG, rng), S.series(QF, ZG, rng)
        if member_Os(x, cut) and member_Os(y, cut):
            assert member_Os(x + y, cut) and member_Os(x * y, cut)
        ax, ay = abs(x), abs(y)
        if 0 < ax < ay and member_Os(ay, cut):
            assert member_Os(ax, cut)
    assert not member_Os(s("t^(-2)"), cut) and member_Os(s("t^(2)"), cut)


def test_phi_equivalence_sampled():
    rng = random.Random(5)
    for _ in range(200):
        c = S.coefficient(Q2, rng, nonzero=True)
        lead = c * c if rng.random() < 0.5 else -c * c
        g = S.group_element(QG, rng)
        x = Series.monomial(Q2, QG, g, lead) + Series.monomial(Q2, QG, g + E("1"), 3)
        assert phi_holds(x) == (x > 0)
