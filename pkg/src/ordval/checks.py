"""Seeded property suites.

Each suite draws its samples from ``random.Random(seed)`` and returns the
list of violations it found; an empty list means every check passed.  The
suites back ``ordval check`` and the acceptance tests.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from . import sampling as S
from ._errors import ParseError, PreconditionError
from .catalog import CATALOG
from .classify import (
    StrongNIP, _closed_form_prime, arc_v0_collapse, classify_report, lr_definable_regular,
    non_singular, strongly_nip_witnessed, thm45_cases, v0_descriptor, v0_lr_definable,
    vp_descriptor,
)
from .defval import (
    CaseTag, GroupCut, check_condition41, make_cut, member_As, member_Ds, member_Ds_formula,
    member_Os, os_violation_witness, phi_holds, phi_witness, verify_violation,
)
from .dsl import parse_element, parse_group_expr, parse_series_expr
from .groups import (
    INFINITY, FinalSegment, FiniteLex, HullElement, TRIVIAL_GROUP, _index_key, convex_quotient, odd_prime,
    defsubgroup_member, defsubgroup_violation, divide_by, find_nondense_witness,
    first_failure_index, g_member, GroupElement, is_closed_in_hull, is_dense_in_hull,
    is_densely_ordered, is_discretely_ordered, is_immediate_in_hull, is_limit_point,
    is_regular, largest_p_divisible_convex, oracle_between, segment_meet,
)
from .numeric import QuadExt, qext_sqrt_if_square, rational_in_interval, sign
from .series import DeclaredRealClosed, PlainRationals, QuadraticExt, Series, trunc_inverse, trunc_sqrt

ORACLE_BOUND = 64
TEST_PRIMES = tuple(sympy.primerange(2, 50))


@dataclass
class SuiteResult:
    name: str
    trials: int
    seed: int
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def render(self) -> str:
        lines = [f"suite: {self.name}", f"trials: {self.trials}", f"seed: {self.seed}",
                 f"checks: {self.checks}", f"violations: {len(self.violations)}"]
        lines += [f"violation: {v}" for v in self.violations]
        return "\n".join(lines) + "\n"


class _Tally:
    def __init__(self, result):
        self.result = result

    def check(self, ok, message):
        self.result.checks += 1
        if not ok:
            self.result.violations.append(message() if callable(message) else message)
        return ok


# ------------------------------------------------------------------ examples


def _g(expr):
    return parse_group_expr(expr)


def _e(text):
    return parse_element(text)


def _prefix_segments_ok():
    G = _g("omega(prefixprimes)")
    for i in range(1, 6):
        expect = FinalSegment.above(i - 1, G)
        if largest_p_divisible_convex(G, odd_prime(i)) != expect:
            return False
    return True


def example_rows():
    """(name, thunk) pairs; each thunk returns True when the claim reproduces."""
    ZZ, AA, QA, BQ = _g("lex(Z, Z)"), _g("lex(loc{2}, loc{2})"), _g("lex(Q, loc{2})"), _g("lex(loc{>=3}, Q)")
    PP, B = _g("omega(prefixprimes)"), _g("loc{>=3}")
    RC = DeclaredRealClosed(PlainRationals())
    return [
        ("ZxZ is discretely ordered", lambda: is_discretely_ordered(ZZ)),
        ("ZxZ is not regular", lambda: not is_regular(ZZ)),
        ("dyadic rationals are dense in their hull", lambda: is_dense_in_hull(_g("loc{2}"))),
        ("AxA is neither dense in its hull nor regular",
         lambda: not is_dense_in_hull(AA) and not is_regular(AA)),
        ("(0,1/3) is a limit point of AxA", lambda: is_limit_point(_e("{2: 1/3}"), AA)),
        ("nothing of AxA lies between (1/3,0) and (1/3,1)",
         lambda: not is_limit_point(_e("{1: 1/3}"), AA)
         and oracle_between(AA, _e("{1: 1/3}"), _e("{1: 1/3, 2: 1}"), ORACLE_BOUND) is None),
        ("QxA is dense in its hull", lambda: is_dense_in_hull(QA)),
        ("QxA is not immediate in its hull", lambda: not is_immediate_in_hull(QA)),
        ("prefix-primes group is closed in its hull", lambda: is_closed_in_hull(PP)),
        ("prefix-primes maximal p_i-divisible subgroups start at index i", _prefix_segments_ok),
        ("prefix-primes group has no nontrivial 2-divisible convex subgroup",
         lambda: largest_p_divisible_convex(PP, 2).kind == "trivial"),
        ("Z is non-singular", lambda: non_singular(_g("Z"))),
        ("B and BxQ are strongly NIP; BxQ has no limit point outside",
         lambda: strongly_nip_witnessed(B) is StrongNIP.WITNESSED
         and strongly_nip_witnessed(BQ) is StrongNIP.WITNESSED and is_closed_in_hull(BQ)
         and not is_discretely_ordered(BQ)),
        ("prefix-primes over a real closed field: no cut case, v0 definable with p = 2",
         lambda: thm45_cases(RC, PP) == () and v0_lr_definable(PP, 50) == (True, 2)),
    ]


def suite_examples(res, rng, trials):
    t = _Tally(res)
    for name, thunk in example_rows():
        t.check(thunk(), name)


# -------------------------------------------------------------------- groups


def _vkey(v):
    """Sort key for valuations, with INFINITY above every index."""
    return (2, 0) if v is INFINITY else _index_key(v)


def _escalated_between(G, a, b):
    """Oracle search, raising the denominator bound to what the gap needs."""
    found = oracle_between(G, a, b, ORACLE_BOUND)
    if found is not None:
        return found
    den = 1
    for _, c in (b - a).support + a.support + b.support:
        den = math.lcm(den, c.denominator)
    return oracle_between(G, a, b, ORACLE_BOUND * den * 4)


def _min_positive_probe(G):
    last = G.last_index
    return HullElement.unit(last, 1) if last is not None else None


def _group_checks(t, name, G, rng, trials):
    # ordered group axioms and the ultrametric law
    for _ in range(trials):
        x, y, z = (S.group_element(G, rng) for _ in range(3))
        t.check((x + y) + z == x + (y + z) and x + y == y + x and x + (-x) == HullElement(),
                lambda: f"{name}: group law fails at {x}, {y}, {z}")
        if x < y:
            t.check(x + z < y + z, lambda: f"{name}: order not translation invariant at {x}, {y}, {z}")
        t.check(_vkey((x + y).valuation()) >= min(_vkey(x.valuation()), _vkey(y.valuation())),
                lambda: f"{name}: ultrametric law fails at {x}, {y}")

    dense = is_densely_ordered(G)
    # density of the order: search (0, g) for sampled g > 0
    for _ in range(50):
        g = S.positive(S.group_element, G, rng)
        found = _escalated_between(G, HullElement(), g)
        if dense:
            t.check(found is not None, lambda: f"{name}: nothing found in (0, {g}) although densely ordered")
    if not dense and not G == TRIVIAL_GROUP:
        probe = _min_positive_probe(G)
        t.check(oracle_between(G, HullElement(), probe, ORACLE_BOUND) is None,
                lambda: f"{name}: found an element in (0, {probe}) although discretely ordered")

    # density in the hull
    dih = is_dense_in_hull(G)
    t.check(dih == (is_regular(G) and dense), f"{name}: dense-in-hull rule is not regular and dense")
    for _ in range(50):
        a, b = S.hull_element(G, rng), S.hull_element(G, rng)
        if a == b:
            continue
        a, b = min(a, b), max(a, b)
        if dih:
            t.check(_escalated_between(G, a, b) is not None,
                    lambda: f"{name}: nothing found in ({a}, {b}) although dense in hull")
    if not dih and dense:
        g0 = find_nondense_witness(G)
        n = first_failure_index(g0, G)
        nxt = G.next_index(n)
        t.check(oracle_between(G, g0, g0 + HullElement.unit(nxt, 1), ORACLE_BOUND) is None,
                lambda: f"{name}: found an element next to the non-density witness {g0}")

    # immediacy and closedness implications
    if dih and G.last_index is None:
        t.check(is_immediate_in_hull(G), f"{name}: dense in hull with no last index but not immediate")
    if all(largest_p_divisible_convex(G, p).kind != "trivial" for p in TEST_PRIMES):
        t.check(is_closed_in_hull(G), f"{name}: p-divisible convex subgroups for all p but not closed")

    # limit points against the oracle
    for _ in range(10):
        x = S.hull_element(G, rng)
        last = G.last_index
        probe_index = last if last is not None else (max(x.indices(), default=1) + 1)
        lp = is_limit_point(x, G)
        hits = []
        for k in range(1, 7):
            eps = HullElement.unit(probe_index, Fraction(1, 2 ** k))
            below = _escalated_between(G, x - eps, x) if lp else oracle_between(G, x - eps, x, ORACLE_BOUND)
            above = _escalated_between(G, x, x + eps) if lp else oracle_between(G, x, x + eps, ORACLE_BOUND)
            hits.append(below is not None or above is not None)
        if lp:
            t.check(all(hits), lambda: f"{name}: {x} reported a limit point but not approached")
        elif not g_member(x, G):
            # elements of G sit at distance >= 1/64 from x at the last index
            t.check(not hits[-1], lambda: f"{name}: {x} reported isolated but approached")

    # regular groups: a <= n c <= b for n equally spaced steps
    if is_regular(G) and G != TRIVIAL_GROUP:
        for _ in range(10):
            a = S.group_element(G, rng)
            delta = S.positive(S.group_element, G, rng)
            n = rng.randint(2, 5)
            b = a + delta * (n + 1)
            lo, hi = a / n, b / n
            c = next((v for v in (lo, hi) if g_member(v, G)), None) or _escalated_between(G, lo, hi)
            t.check(c is not None, lambda: f"{name}: no c with {a} <= {n}c <= {b}")


def suite_groups(res, rng, trials):
    t = _Tally(res)
    for name, G in CATALOG.items():
        _group_checks(t, name, G, rng, trials)


# --------------------------------------------------------------- subgroup H


def _sample_above(G, n, rng):
    """A group element whose support lies strictly after index n."""
    x = S.group_element(G, rng)
    return HullElement((i, c) for i, c in x.support if _vkey(i) > _vkey(n))


def suite_convex_subgroup(res, rng, trials):
    t = _Tally(res)
    for name, G in CATALOG.items():
        if not is_densely_ordered(G) or is_dense_in_hull(G):
            continue
        g0 = find_nondense_witness(G)
        n = first_failure_index(g0, G)

        def inH(g):
            return defsubgroup_member(G, g0, g, "H")

        for _ in range(trials):
            g, h = _sample_above(G, n, rng), _sample_above(G, n, rng)
            t.check(inH(g) and inH(h) and inH(g + h) and inH(-g),
                    lambda: f"{name}: H not closed at {g}, {h}")
        for _ in range(trials):
            a = _sample_above(G, n, rng)
            a = -a if a.sign() < 0 else a
            c = S.group_element(G, rng) if rng.random() < 0.5 else _sample_above(G, n, rng)
            if -a <= c <= a:
                t.check(inH(c), lambda: f"{name}: H not convex: {c} between {-a} and {a}")
            elif inH(c):
                t.check(_vkey(c.valuation()) > _vkey(n), lambda: f"{name}: H contains {c}")
        # the closed form of A against its definition
        for _ in range(max(1, trials // 10)):
            g = S.positive(S.group_element, G, rng) if rng.random() < 0.7 else _sample_above(G, n, rng)
            g = -g if g.sign() < 0 else g
            if defsubgroup_member(G, g0, g, "A"):
                for _ in range(5):
                    d = S.group_element(G, rng)
                    if defsubgroup_member(G, g0, d, "D"):
                        t.check(defsubgroup_member(G, g0, g + d, "D"),
                                lambda: f"{name}: {g} in A but {g}+{d} leaves D")
            else:
                d = defsubgroup_violation(G, g0, g).value
                t.check(defsubgroup_member(G, g0, d, "D") and not defsubgroup_member(G, g0, g + d, "D"),
                        lambda: f"{name}: bad violation witness {d} for {g}")
        unit_n = HullElement.unit(n, 1)
        t.check(g_member(unit_n, G) and not inH(unit_n), f"{name}: H is not proper")
        nxt = HullElement.unit(G.next_index(n), 1)
        t.check(g_member(nxt, G) and inH(nxt), f"{name}: H is trivial")


# ---------------------------------------------------------------- cut cases


def cut_configs():
    Qf = PlainRationals()
    return [
        ("Q, Z, Discrete", Qf, _g("Z"), CaseTag.DISCRETE),
        ("RC(Q), AxA, GroupLimitPoint", DeclaredRealClosed(Qf), _g("lex(loc{2}, loc{2})"),
         CaseTag.GROUP_LIMIT_POINT),
        ("Q, Z, ResidueLimitPoint at sqrt(2)", Qf, _g("Z"), CaseTag.RESIDUE_LIMIT_POINT),
    ]


def _sample_Ds(field, G, cut, rng):
    """A random element of D' for a group cut."""
    while True:
        g = S.group_element(G, rng)
        if g > cut.g0:
            c = abs(S.rational_coeff(rng, nonzero=True))
            tail = S.series(field, G, rng, 2)
            y = Series.monomial(field, G, g, c)
            # higher-order tail does not change the sign or the valuation
            y = y + Series(field, G, [(e + g, a) for e, a in tail.terms if e.sign() > 0])
            return y


def suite_cuts(res, rng, trials):
    t = _Tally(res)
    for label, field_, G, case in cut_configs():
        cut = make_cut(field_, G, case)
        for _ in range(trials):
            x = S.series(field_, G, rng)
            inO = member_Os(x, cut)
            t.check(inO == (not x or x.vmin().sign() >= 0), lambda: f"{label}: member_Os wrong at {x}")
            if isinstance(cut, GroupCut):
                t.check(member_Ds(abs(x), cut) == member_Ds_formula(abs(x), cut),
                        lambda: f"{label}: D' rules disagree at {abs(x)}")
                if inO:
                    y = _sample_Ds(field_, G, cut, rng)
                    t.check(check_condition41(x, y, cut) and member_Ds(abs(x) * y, cut),
                            lambda: f"{label}: {x} in O but multiplies {y} out of D'")
                else:
                    w = os_violation_witness(x, cut)
                    t.check(verify_violation(x, cut, w)
                            and not check_condition41(x, w.multiplier, cut),
                            lambda: f"{label}: witness {w} fails for {x}")
            else:
                if inO:
                    y = S.nonzero_series(field_, G, rng)
                    if member_As(abs(y), cut) and y:
                        t.check(member_As(abs(x * y), cut),
                                lambda: f"{label}: {x} in O but {x}*{y} leaves A'")
                else:
                    w = os_violation_witness(x, cut)
                    t.check(verify_violation(x, cut, w), lambda: f"{label}: witness {w} fails for {x}")
        # valuation ring shape: proper and nontrivial
        one = HullElement.unit(G.first_index, 1)
        t.check(not member_Os(Series.monomial(field_, G, -one), cut), f"{label}: ring is not proper")
        t.check(member_Os(Series.monomial(field_, G, one), cut), f"{label}: ring is trivial")


# ---------------------------------------------------------------- squares


def suite_squares(res, rng, trials):
    t = _Tally(res)
    K, G = QuadraticExt(2), _g("Q")
    for _ in range(trials):
        s = S.coefficient(K, rng, nonzero=True)
        lead_c = s * s if rng.random() < 0.5 else -(s * s)
        g = S.group_element(G, rng)
        tail = S.series(K, G, rng, 2)
        x = Series.monomial(K, G, g, lead_c) + Series(
            K, G, [(e + g, a) for e, a in tail.terms if e.sign() > 0])
        holds = phi_holds(x)
        t.check(holds == (x.sign() >= 0), lambda: f"phi disagrees with the sign at {x}")
        if x.sign() > 0:
            n = rng.randint(1, 3)
            r = phi_witness(x, n)
            rem = x - r.terms * r.terms
            t.check(not rem or (rem.vmin() > r.remainder_bound and rem.vmin() > x.vmin()),
                    lambda: f"phi witness remainder too low at {x}")
    x2 = Series.constant(PlainRationals(), G, 2)
    t.check(not phi_holds(x2) and x2.sign() > 0, "2 over Q should be positive with phi false")


# -------------------------------------------------------------------- series


def _series_contexts():
    Qf, Q2 = PlainRationals(), QuadraticExt(2)
    return [(Qf, _g("Q")), (Qf, _g("lex(Z, Z)")), (Q2, _g("Q")), (Q2, _g("lex(loc{2}, Z)")),
            (Qf, _g("omegaplus1(const(Q), Z)"))]


def suite_series(res, rng, trials):
    t = _Tally(res)
    ctx = _series_contexts()
    for i in range(trials):
        K, G = ctx[i % len(ctx)]
        x, y, z = (S.series(K, G, rng) for _ in range(3))
        t.check((x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
                and x * (y + z) == x * y + x * z and x * y == y * x,
                lambda: f"ring law fails at {x}, {y}, {z}")
        c = x.cmp(y)
        t.check(c == -y.cmp(x) and (c == 0) == (x == y), lambda: f"order not total at {x}, {y}")
        if c < 0:
            t.check(x + z < y + z, lambda: f"order not additive at {x}, {y}, {z}")
            if z.sign() > 0:
                t.check(x * z < y * z, lambda: f"order not multiplicative at {x}, {y}, {z}")
        if x and y:
            t.check((x * y).vmin() == x.vmin() + y.vmin(), lambda: f"vmin not additive at {x}, {y}")
        if x + y and x and y:
            t.check(not (x + y).vmin() < min(x.vmin(), y.vmin()),
                    lambda: f"ultrametric law fails at {x}, {y}")
        ax, ay = abs(x), abs(y)
        if ax and ay and ax < ay and ay.vmin().sign() >= 0:
            t.check(ax.vmin().sign() >= 0, lambda: f"valuation ring not convex at {ax}, {ay}")
    n_inv = max(1, trials // 2)
    for i in range(n_inv):
        K, G = ctx[i % len(ctx)]
        x = S.nonzero_series(K, G, rng)
        n = rng.randint(1, 5)
        r = trunc_inverse(x, n)
        rem = x * r.terms - 1
        t.check(not rem or rem.vmin() > r.remainder_bound,
                lambda: f"inverse remainder too low at {x}, {n} terms")
    done = 0
    i = 0
    while done < n_inv:
        K, G = ctx[i % len(ctx)]
        i += 1
        x = abs(S.nonzero_series(K, G, rng))
        g, c = x.leading()
        if divide_by(GroupElement(g, G), 2) is None or K.sqrt_if_square(c) is None:
            s = S.coefficient(K, rng, nonzero=True)
            x = x.scale(s * s / c)
            g2 = divide_by(GroupElement(g, G), 2)
            if g2 is None:
                continue
        n = rng.randint(1, 5)
        r = trunc_sqrt(x, n)
        rem = x - r.terms * r.terms
        t.check(not rem or rem.vmin() > r.remainder_bound,
                lambda: f"square root remainder too low at {x}, {n} terms")
        done += 1


# ------------------------------------------------------------ classification


def suite_classify(res, rng, trials):
    t = _Tally(res)
    bound = 50
    for name, G in CATALOG.items():
        v0 = v0_descriptor(G)
        t.check(v0.value_group == convex_quotient(G, v0.segment), f"{name}: v0 value group")
        meet = FinalSegment.whole()
        for p in sympy.primerange(2, bound + 1):
            meet = segment_meet(meet, vp_descriptor(G, int(p)).segment)
        t.check(meet == v0.segment, lambda: f"{name}: v0 segment {v0.segment} is not the meet {meet}")
        if arc_v0_collapse(G):
            t.check(v0.segment.kind == "trivial" and v0_lr_definable(G, bound)[0],
                    f"{name}: collapse fired without trivial definable v0")
        if is_dense_in_hull(G) and not is_immediate_in_hull(G):
            t.check(lr_definable_regular(G), f"{name}: regular non-divisible but not definable")
        if isinstance(G, FiniteLex):
            t.check(non_singular(G, bound) == (strongly_nip_witnessed(G) is StrongNIP.WITNESSED),
                    f"{name}: non-singularity and strong NIP disagree")
        ok, p = v0_lr_definable(G, bound)
        if ok:
            V = v0.value_group
            t.check(largest_p_divisible_convex(V, p).kind == "trivial", f"{name}: prime {p} is no witness")
            q = _closed_form_prime(V)
            t.check(q is not None and largest_p_divisible_convex(V, q).kind == "trivial",
                    f"{name}: closed-form prime {q} is no witness")
        for k in (PlainRationals(), DeclaredRealClosed(PlainRationals())):
            r1, r2 = classify_report(k, G, bound).render(), classify_report(k, G, bound).render()
            t.check(r1 == r2, f"{name}: report not deterministic")


# -------------------------------------------------------------------- parser

MALFORMED = [
    "lex(", "lex()", "loc{4}", "loc{}", "loc{2,}", "omega(const(lex(Z, Z)))", "lex(Z, omega(prefixprimes))",
    "Zed", "Q Q", "omegaplus1(prefixprimes)", "loc{>=4}", "lex(Z,, Q)", "", "omega(foo)", "loc{2",
    "prefixprimes", "lex(Z, Q))", "omega(prefixprimes(x))", "{", "loc{-2}",
]


def _random_leaf(rng):
    kind = rng.randint(0, 3)
    if kind == 0:
        return "Z"
    if kind == 1:
        return "Q"
    if kind == 2:
        ps = sorted(set(rng.choice([2, 3, 5, 7, 11]) for _ in range(rng.randint(1, 3))))
        return "loc{" + ", ".join(map(str, ps)) + "}"
    return "loc{>=" + str(rng.choice([2, 3, 5, 7])) + "}"


def _random_rule(rng):
    r = rng.randint(0, 2)
    if r == 0:
        return f"const({_random_leaf(rng)})"
    return "prefixprimes" if r == 1 else f"prefixprimes({rng.randint(0, 4)})"


def random_group_text(rng, depth=0):
    r = rng.randint(0, 5)
    if r <= 1 or depth > 2:
        return _random_leaf(rng)
    if r == 2:
        return "omega(" + _random_rule(rng) + ")"
    if r == 3:
        return "omegaplus1(" + _random_rule(rng) + ", " + _random_leaf(rng) + ")"
    parts = []
    for _ in range(rng.randint(1, 3)):
        sub = random_group_text(rng, depth + 1)
        if sub.startswith("omega"):
            sub = _random_leaf(rng)
        parts.append(sub)
    return "lex(" + ",".join(parts) + ")"


def _respace(text, rng):
    out = []
    for ch in text:
        out.append(ch)
        if ch in "(,{:+" and rng.random() < 0.3:
            out.append(" " * rng.randint(1, 2))
    return "".join(out)


def suite_parser(res, rng, trials):
    from .cli import main as cli_main
    import contextlib
    import io

    t = _Tally(res)
    for name, G in CATALOG.items():
        t.check(parse_group_expr(str(G)) == G, f"{name}: round trip fails")
    for _ in range(200):
        text = _respace(random_group_text(rng), rng)
        G = parse_group_expr(text)
        t.check(parse_group_expr(str(G)) == G and str(parse_group_expr(str(G))) == str(G),
                lambda: f"round trip fails for {text!r}")
        K, H = _series_contexts()[rng.randint(0, 4)]
        x = S.series(K, H, rng)
        t.check(parse_series_expr(str(x), K, H) == x, lambda: f"series round trip fails for {x}")
    for text in MALFORMED:
        err = io.StringIO()
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(io.StringIO()):
            code = cli_main(["parse", text])
        t.check(code == 2 and "offset" in err.getvalue(),
                lambda: f"malformed {text!r} gave exit {code}: {err.getvalue().strip()}")


# ------------------------------------------------------------------- numeric


def suite_numeric(res, rng, trials):
    t = _Tally(res)
    for _ in range(trials):
        d = rng.choice([2, 3, 5])
        K = QuadraticExt(d)
        x, y, z = (S.coefficient(K, rng) for _ in range(3))
        t.check((x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
                and x * (y + z) == x * y + x * z, lambda: f"field law fails at {x}, {y}, {z}")
        if x:
            t.check(x * (1 / x) == 1, lambda: f"inverse fails at {x}")
        sq = qext_sqrt_if_square(x * x)
        t.check(sq is not None and sq * sq == x * x and sign(sq) >= 0,
                lambda: f"square root of {x * x} wrong: {sq}")
        if x != y:
            lo, hi = (x, y) if x < y else (y, x)
            r = rational_in_interval(lo, hi)
            t.check(sign(r - lo) > 0 and sign(hi - r) > 0, lambda: f"{r} not inside ({lo}, {hi})")


#: suite names are part of the command-line interface
SUITES = {
    "examples": suite_examples,
    "groups": suite_groups,
    "prop39": suite_convex_subgroup,
    "thm45": suite_cuts,
    "lemma415": suite_squares,
    "series": suite_series,
    "classify": suite_classify,
    "parser": suite_parser,
    "numeric": suite_numeric,
}


def run_suite(name: str, trials: int = 1000, seed: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise PreconditionError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if trials < 1:
        raise PreconditionError("trials must be positive")
    seed = S.resolve_seed(seed)
    res = SuiteResult(name, trials, seed)
    SUITES[name](res, random.Random(seed), trials)
    return res
