import json

import pytest
import sympy

from ordval.catalog import CATALOG
from ordval.classify import (
    StrongNIP, arc_v0_collapse, classify_report, field_dense_in_rc, lr_definable_regular,
    non_singular, strongly_nip_witnessed, thm45_cases, v0_descriptor, v0_lr_definable,
    vp_descriptor,
)
from ordval.defval import CaseTag
from ordval.dsl import parse_group_expr as G
from ordval.groups import (
    TOP, FinalSegment, FiniteLex, is_dense_in_hull, is_regular,
    largest_p_divisible_convex,
)
from ordval.series import DeclaredRealClosed, PlainRationals

QF = PlainRationals()
RC = DeclaredRealClosed(QF)
PP = G("omega(prefixprimes)")
BQ = G("lex(loc{>=3}, Q)")


def test_v0_examples():
    v = v0_descriptor(BQ)
    assert v.segment == FinalSegment.above(1, BQ) and v.value_group == G("loc{>=3}")
    assert v0_descriptor(G("Q")).segment == FinalSegment.whole()
    v = v0_descriptor(PP)
    assert v.segment == FinalSegment.trivial() and v.value_group == PP


def test_v0_lr_definable_examples():
    assert v0_lr_definable(PP) == (True, 2)
    assert v0_lr_definable(BQ) == (True, 2)
    assert v0_lr_definable(G("lex(Q, Q)")) == (False, None)
    # 2 and 3 both divide everything in loc{2,3}; the scan settles on 5
    assert v0_lr_definable(G("loc{2,3}")) == (True, 5)


def test_vp_examples():
    for i in range(1, 5):
        seg = vp_descriptor(PP, int(sympy.prime(i + 1))).segment
        assert all(seg.contains_index(n) == (n >= i) for n in range(1, 8))
    assert vp_descriptor(G("lex(Z, Z)"), 2).segment == FinalSegment.trivial()
    assert vp_descriptor(G("Q"), 11).segment == FinalSegment.whole()


def test_thm45_examples():
    assert thm45_cases(QF, G("Z")) == (CaseTag.DISCRETE, CaseTag.RESIDUE_LIMIT_POINT)
    assert thm45_cases(RC, G("lex(loc{2}, loc{2})")) == (CaseTag.GROUP_LIMIT_POINT,)
    assert thm45_cases(RC, PP) == ()


def test_flag_examples():
    assert lr_definable_regular(G("Z")) and not lr_definable_regular(G("lex(Z, Z)"))
    assert not lr_definable_regular(G("Q"))
    assert arc_v0_collapse(G("lex(Z, Z)")) and arc_v0_collapse(G("lex(loc{2}, loc{2})"))
    assert not arc_v0_collapse(BQ)
    assert non_singular(G("Z")) and non_singular(G("Q"))
    assert not non_singular(G("omega(const(Z))"))
    assert strongly_nip_witnessed(G("loc{>=3}")) is StrongNIP.WITNESSED
    assert strongly_nip_witnessed(BQ) is StrongNIP.WITNESSED
    assert strongly_nip_witnessed(PP) is StrongNIP.NOT_WITNESSED


def test_report_examples():
    r = classify_report(RC, G("Q"))
    assert r.field_dense_in_rc and r.v0.segment == FinalSegment.whole()
    assert r.v0_lr_definable == (False, None) and r.thm45_cases == ()
    r = classify_report(QF, G("Z"))
    assert r.field_dense_in_rc is False
    assert r.thm45_cases == (CaseTag.DISCRETE, CaseTag.RESIDUE_LIMIT_POINT)
    r = classify_report(RC, PP)
    assert r.thm45_cases == () and r.v0_lr_definable == (True, 2)
    assert field_dense_in_rc(QF, G("0"))


def test_report_rendering_is_stable():
    r = classify_report(QF, G("lex(loc{2}, loc{2})"))
    text = r.render()
    assert text == classify_report(QF, G("lex(loc{2}, loc{2})")).render()
    keys = [line.split(":")[0] for line in text.splitlines()]
    assert keys[:2] == ["field", "group"] and keys[-1] == "field_dense_in_rc"
    assert "dense_in_hull: false" in text.splitlines()
    assert list(json.loads(r.to_json())) == keys


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_invariants(name):
    Gr = CATALOG[name]
    if arc_v0_collapse(Gr):
        assert v0_descriptor(Gr).segment == FinalSegment.trivial()
        assert v0_lr_definable(Gr)[0]
    # v0 is the meet of the vp over primes below 50
    segs = [largest_p_divisible_convex(Gr, p) for p in sympy.primerange(2, 50)]
    v0 = v0_descriptor(Gr).segment
    for n in list(range(1, 12)) + [TOP]:
        assert v0.contains_index(n) == all(s.contains_index(n) for s in segs)
    all_q = v0.kind == "whole"
    if is_dense_in_hull(Gr) and not all_q:
        assert lr_definable_regular(Gr)
    assert lr_definable_regular(Gr) == (is_regular(Gr) and not all_q)
    if isinstance(Gr, FiniteLex):
        assert non_singular(Gr) == (strongly_nip_witnessed(Gr) is StrongNIP.WITNESSED)
    r = classify_report(QF, Gr)
    assert r.render() == classify_report(QF, Gr).render()
