import random
import zlib
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ordval import sampling as S
from ordval._errors import NotInGroupError, PreconditionError
from ordval.catalog import CATALOG
from ordval.dsl import parse_element as E, parse_group_expr as G
from ordval.groups import (
    INFINITY, TOP, FinalSegment, FiniteLex, GroupElement, HullElement, PrimeSet, Q, Z,
    convex_quotient, convex_subgroup, defsubgroup_member, defsubgroup_violation, divide_by,
    find_nondense_witness, first_failure_index, g_member, g_ops, is_closed_in_hull,
    is_dense_in_hull, is_densely_ordered, is_discretely_ordered, is_immediate_in_hull,
    is_limit_point, is_regular, largest_p_divisible_convex, least_element_above, loc,
    nat_valuation, oracle_between, open_interval_value,
)

A, B = loc(2), G("loc{>=3}").components[0]
AA, ZZ, QA, BQ = G("lex(loc{2}, loc{2})"), G("lex(Z, Z)"), G("lex(Q, loc{2})"), G("lex(loc{>=3}, Q)")
PP = G("omega(prefixprimes)")


def naive_member(r, prime_set: PrimeSet):
    """Oracle: factor the denominator and look up each prime."""
    return all(p in prime_set for p in sympy.factorint(F(r).denominator))


@settings(max_examples=300)
@given(st.fractions(max_denominator=500), st.sampled_from(["Z", "Q", "loc{2}", "loc{2,3}", "loc{>=3}", "loc{5,7}"]))
def test_membership_matches_factoring(r, expr):
    C = G(expr).components[0]
    assert (r in C) == naive_member(r, C.allowed)


def test_membership_examples():
    assert g_member(E("{1: 1/2}"), FiniteLex((A,)))
    assert not g_member(E("{1: 1/3}"), AA)
    assert not g_member(E("{1: 5/6}"), FiniteLex((B,)))
    with pytest.raises(PreconditionError):
        g_member(E("{3: 1}"), AA)
    with pytest.raises(NotInGroupError):
        GroupElement(E("{1: 1/3}"), AA)


def test_ops_examples():
    QQ = G("lex(Q, Q)")
    assert g_ops(E("{1: 1}"), E("{2: 100}"), "cmp") == 1
    x = E("{1: 3, 2: -1/2}")
    assert g_ops(x, g_ops(x, op="neg")) == HullElement() and not (x + -x).support
    assert E("{1: 1/2}") + E("{1: 1/2}") == E("{1: 1}")
    assert nat_valuation(E("{2: 1/3}")) == 2
    assert nat_valuation(HullElement()) is INFINITY
    assert nat_valuation(E("{1: 5, 2: -1}")) == 1
    assert E("{top: 1}") < E("{3: 1}") and E("{top: -1}") > E("{3: -1}")


def test_divide_by_examples():
    assert divide_by(GroupElement(E("{1: 1}"), G("Z")), 2) is None
    assert divide_by(GroupElement(E("{1: 1}"), G("loc{2}")), 4).value == E("{1: 1/4}")
    assert divide_by(GroupElement(E("{1: 3/5}"), G("loc{>=3}")), 5).value == E("{1: 3/25}")


@pytest.mark.parametrize("expr,dense,discrete", [
    ("Z", False, True), ("lex(loc{2}, Z)", False, True), ("omega(const(Z))", True, False),
    ("Q", True, False), ("lex(Z, Z)", False, True), ("omegaplus1(const(Q), Z)", False, True),
])
def test_order_type(expr, dense, discrete):
    assert is_densely_ordered(G(expr)) == dense
    assert is_discretely_ordered(G(expr)) == discrete


def test_regularity_and_hull_examples():
    assert not is_regular(ZZ) and not is_regular(AA) and is_regular(QA)
    assert is_dense_in_hull(G("loc{2}")) and not is_dense_in_hull(AA) and is_dense_in_hull(QA)
    assert not is_immediate_in_hull(QA) and is_immediate_in_hull(G("lex(Q, Q)"))
    assert not is_immediate_in_hull(G("omega(const(loc{2}))"))
    assert is_dense_in_hull(G("omega(const(loc{2}))")) is False  # first component is not divisible


def test_limit_points():
    assert is_limit_point(E("{2: 1/3}"), AA)
    assert not is_limit_point(E("{1: 1/3}"), AA)
    s = E("{2: 1/7}")  # 7 is not among the first two odd primes
    assert first_failure_index(s, PP) == 2 and not is_limit_point(s, PP)


def test_closedness():
    assert is_closed_in_hull(PP) and not is_closed_in_hull(AA) and is_closed_in_hull(BQ)


def test_largest_p_divisible():
    for i in range(1, 5):
        p = int(sympy.prime(i + 1))
        seg = largest_p_divisible_convex(PP, p)
        assert seg == FinalSegment.above(i - 1, PP)
        assert all(seg.contains_index(n) == (n >= i) for n in range(1, 10))
    assert largest_p_divisible_convex(PP, 2) == FinalSegment.trivial()
    assert largest_p_divisible_convex(G("Q"), 7) == FinalSegment.whole()


def test_convex_quotient():
    assert convex_quotient(ZZ, FinalSegment.above(1, ZZ)) == G("Z")
    assert convex_quotient(AA, FinalSegment.trivial()) == AA
    assert convex_quotient(BQ, FinalSegment.above(1, BQ)) == G("loc{>=3}")
    assert convex_subgroup(BQ, FinalSegment.above(1, BQ)) == G("Q")
    assert convex_subgroup(PP, FinalSegment.above(2, PP)) == G("omega(prefixprimes(2))")


def test_nondense_witness():
    g0 = find_nondense_witness(AA)
    assert g0 == E("{1: 1/3}") and not g_member(g0, AA) and not is_limit_point(g0, AA)
    for bad in (ZZ, QA):
        with pytest.raises(PreconditionError):
            find_nondense_witness(bad)


def test_defsubgroup_examples():
    g0 = E("{1: 1/3}")
    assert defsubgroup_member(AA, g0, E("{2: 5}"), "H")
    assert not defsubgroup_member(AA, g0, E("{1: 1/2}"), "A")
    assert defsubgroup_member(AA, g0, HullElement(), "A")
    d = defsubgroup_violation(AA, g0, E("{1: 1/2}")).value
    assert defsubgroup_member(AA, g0, d, "D") and not defsubgroup_member(AA, g0, E("{1: 1/2}") + d, "D")
    with pytest.raises(PreconditionError):
        defsubgroup_member(AA, E("{1: 1/2}"), HullElement(), "A")


def test_defsubgroup_violation_below_failure_index():
    G2 = G("lex(Q, loc{2}, Q)")
    g0 = E("{1: 1, 2: 1/3}")
    g = E("{1: 1}")
    d = defsubgroup_violation(G2, g0, g).value
    assert defsubgroup_member(G2, g0, d, "D")
    assert not defsubgroup_member(G2, g0, g + d, "D")


def test_oracle_examples():
    assert oracle_between(AA, E("{2: 1/3}"), E("{2: 11/24}"), 16).value == E("{2: 3/8}")
    assert oracle_between(AA, E("{1: 1/3}"), E("{1: 1/3, 2: 1}"), 64) is None
    assert oracle_between(G("lex(Q, Q)"), HullElement(), E("{2: 1}"), 2).value == E("{2: 1/2}")


def test_least_element_above():
    assert least_element_above(G("Z"), E("{1: 1/2}")).value == E("{1: 1}")
    assert least_element_above(G("lex(loc{2}, Z)"), E("{1: 1/3}")) is None
    assert least_element_above(AA, E("{1: 1/2}")) is None


def test_open_interval_value():
    v = open_interval_value(A, F(1, 3), F(1, 3) + F(1, 100))
    assert v in A and F(1, 3) < v < F(1, 3) + F(1, 100)


@pytest.mark.parametrize("name", list(CATALOG))
def test_axioms_and_limit_points_sampled(name):
    Gr = CATALOG[name]
    rng = random.Random(zlib.crc32(name.encode()))
    for _ in range(200):
        x, y, z = (S.group_element(Gr, rng) for _ in range(3))
        assert g_member(x, Gr)
        assert (x + y) + z == x + (y + z) and x + y == y + x
        if x < y:
            assert x + z < y + z
        if x + y:
            vs, vx, vy = (v.valuation() for v in (x + y, x, y))
            key = lambda v: (2, 0) if v is INFINITY else ((1, 0) if v is TOP else (0, v))
            assert key(vs) >= min(key(vx), key(vy))
    # an element that fails at the last dense index is approached from the group
    if Gr.last_index is not None and not is_closed_in_hull(Gr):
        q = Gr.component(Gr.last_index).allowed.smallest_missing()
        x = HullElement.unit(Gr.last_index, F(1, q))
        for k in range(1, 7):
            eps = HullElement.unit(Gr.last_index, F(1, 2 ** k))
            assert oracle_between(Gr, x, x + eps, 64 * 2 ** k) is not None


@pytest.mark.parametrize("name", list(CATALOG))
def test_structural_implications(name):
    Gr = CATALOG[name]
    if is_dense_in_hull(Gr) and Gr.last_index is None:
        assert is_immediate_in_hull(Gr)
    primes = list(sympy.primerange(2, 50))
    if all(largest_p_divisible_convex(Gr, p).kind != "trivial" for p in primes):
        assert is_closed_in_hull(Gr)
    assert is_dense_in_hull(Gr) == (is_regular(Gr) and is_densely_ordered(Gr))
