"""Text syntax for groups, hull elements, coefficient fields, series and cuts.

Groups::

    group := "0" | "Z" | "Q" | "loc" "{" primes "}" | "lex" "(" group {"," group} ")"
           | "omega" "(" rule ")" | "omegaplus1" "(" rule "," group ")"
    rule  := "const" "(" group ")" | "prefixprimes" ["(" int ")"]
    primes := prime {"," prime} | ">=" prime

Elements are ``{1: 1/3, top: 2}``; series are sums of ``c*t^(e)`` terms,
where ``c`` is a rational, ``sqrt(d)`` or a parenthesized ``u + v*sqrt(d)``.
Whitespace is ignored everywhere.  Printing is canonical: parsing the
printed form gives back an equal object.
"""
from __future__ import annotations

import re
from fractions import Fraction

import sympy

from ._errors import ParseError, PreconditionError
from .groups import (
    TOP, ConstantRule, FiniteLex, GroupDescriptor, HullElement, OmegaLex, OmegaPlusOneLex, g_member,
    PrefixPrimesRule, Q, RationalSubgroup, TRIVIAL_GROUP, Z, loc, loc_at_least,
)
from .numeric import QuadExt
from .series import DeclaredRealClosed, PlainRationals, QuadraticExt, Series

__all__ = [
    "parse_group_expr", "format_group", "parse_element", "parse_field", "parse_coefficient",
    "parse_series_expr", "parse_cut",
]

_WORD = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_INT = re.compile(r"\d+")


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.pos

    def error(self, msg, pos=None):
        raise ParseError(msg, self.pos if pos is None else pos, self.text)

    def peek(self, s: str) -> bool:
        self.ws()
        return self.text.startswith(s, self.pos)

    def eat(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.eat(s):
            self.error(f"expected {s!r}")

    def peek_word(self):
        self.ws()
        m = _WORD.match(self.text, self.pos)
        return m.group() if m else None

    def word(self, what="name"):
        w = self.peek_word()
        if w is None:
            self.error(f"expected {what}")
        self.pos += len(w)
        return w

    def integer(self) -> int:
        self.ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected integer")
        self.pos = m.end()
        return int(m.group())

    def rational(self) -> Fraction:
        neg = self.eat("-")
        num = self.integer()
        den = 1
        if self.eat("/"):
            at = self.ws()
            den = self.integer()
            if den == 0:
                self.error("zero denominator", at)
        r = Fraction(num, den)
        return -r if neg else r

    def at_rational(self) -> bool:
        self.ws()
        return bool(re.match(r"-?\s*\d", self.text[self.pos:]))

    def end(self):
        if self.ws() != len(self.text):
            self.error("unexpected trailing input")


def _run(text, fn):
    if not isinstance(text, str):
        raise TypeError("expected a string")
    r = _Reader(text)
    out = fn(r)
    r.end()
    return out


# -------------------------------------------------------------------- groups


def _prime(r: _Reader) -> int:
    at = r.ws()
    p = r.integer()
    if not sympy.isprime(p):
        r.error(f"{p} is not prime", at)
    return p


def _group(r: _Reader) -> GroupDescriptor:
    at = r.ws()
    if r.eat("0"):
        return TRIVIAL_GROUP
    w = r.word("group")
    if w == "Z":
        return FiniteLex((Z,))
    if w == "Q":
        return FiniteLex((Q,))
    if w == "loc":
        r.expect("{")
        if r.eat(">="):
            C = loc_at_least(_prime(r))
        else:
            ps = [_prime(r)]
            while r.eat(","):
                ps.append(_prime(r))
            C = loc(*ps)
        r.expect("}")
        return FiniteLex((C,))
    if w == "lex":
        r.expect("(")
        comps = []
        while True:
            sub_at = r.ws()
            sub = _group(r)
            if not isinstance(sub, FiniteLex):
                r.error("lex components must be rational subgroups or lex sums", sub_at)
            comps.extend(sub.components)
            if not r.eat(","):
                break
        r.expect(")")
        return FiniteLex(tuple(comps))
    if w == "omega":
        r.expect("(")
        rule = _rule(r)
        r.expect(")")
        return OmegaLex(rule)
    if w == "omegaplus1":
        r.expect("(")
        rule = _rule(r)
        r.expect(",")
        top = _leaf(r)
        r.expect(")")
        return OmegaPlusOneLex(rule, top)
    r.error(f"unknown group constructor {w!r}", at)


def _leaf(r: _Reader) -> RationalSubgroup:
    at = r.ws()
    g = _group(r)
    if not (isinstance(g, FiniteLex) and len(g.components) == 1):
        r.error("expected a rational subgroup (Z, Q or loc{...})", at)
    return g.components[0]


def _rule(r: _Reader):
    at = r.ws()
    w = r.word("rule")
    if w == "const":
        r.expect("(")
        C = _leaf(r)
        r.expect(")")
        return ConstantRule(C)
    if w == "prefixprimes":
        offset = 0
        if r.eat("("):
            offset = r.integer()
            r.expect(")")
        return PrefixPrimesRule(offset)
    r.error(f"unknown rule {w!r}", at)


def parse_group_expr(text: str) -> GroupDescriptor:
    """Parse a group expression into its canonical descriptor."""
    return _run(text, _group)


def format_group(G: GroupDescriptor) -> str:
    if isinstance(G, FiniteLex):
        if not G.components:
            return "0"
        if len(G.components) == 1:
            return str(G.components[0])
        return "lex(" + ", ".join(map(str, G.components)) + ")"
    if isinstance(G, OmegaLex):
        return f"omega({G.rule})"
    return f"omegaplus1({G.rule}, {G.top})"


# ------------------------------------------------------------------ elements


def _element(r: _Reader) -> HullElement:
    if r.at_rational():
        return HullElement.unit(1, r.rational())
    r.expect("{")
    terms = []
    if not r.eat("}"):
        while True:
            at = r.ws()
            if r.eat("top"):
                i = TOP
            else:
                i = r.integer()
                if i < 1:
                    r.error("indices start at 1", at)
            r.expect(":")
            terms.append((i, r.rational()))
            if not r.eat(","):
                break
        r.expect("}")
    return HullElement(terms)


def parse_element(text: str) -> HullElement:
    """``{1: 1/3, top: 2}``; a bare rational means its value at index 1."""
    return _run(text, _element)


# -------------------------------------------------------------------- fields


def _field(r: _Reader, allow_rc=True):
    at = r.ws()
    w = r.word("coefficient field")
    if w == "Q":
        if r.eat("("):
            r.expect("sqrt")
            r.expect("(")
            d_at = r.ws()
            d = r.integer()
            r.expect(")")
            r.expect(")")
            try:
                return QuadraticExt(d)
            except ValueError as e:
                r.error(str(e), d_at)
        return PlainRationals()
    if w == "RC" and allow_rc:
        r.expect("(")
        base = _field(r, allow_rc=False)
        r.expect(")")
        return DeclaredRealClosed(base)
    r.error(f"unknown coefficient field {w!r}", at)


def parse_field(text: str):
    """``Q``, ``Q(sqrt(d))``, or ``RC(...)`` around either."""
    return _run(text, _field)


def _sqrt(r: _Reader, d):
    at = r.ws()
    r.expect("sqrt")
    r.expect("(")
    e = r.integer()
    r.expect(")")
    if d is None:
        try:
            return QuadExt.sqrt(e)
        except ValueError as err:
            r.error(str(err), at)
    if e != d:
        r.error(f"sqrt({e}) is not in Q(sqrt({d}))", at)
    return QuadExt.sqrt(d)


def _qterm(r: _Reader, d):
    if r.peek("sqrt"):
        return _sqrt(r, d)
    q = r.rational()
    save = r.pos
    if r.eat("*") and r.peek("sqrt"):
        return q * _sqrt(r, d)
    r.pos = save
    return q


def _quadexpr(r: _Reader, d):
    neg = r.eat("-")
    val = _qterm(r, d)
    val = -val if neg else val
    while True:
        if r.eat("+"):
            val = val + _qterm(r, d)
        elif r.eat("-"):
            val = val - _qterm(r, d)
        else:
            return val


def _coefficient(r: _Reader, d):
    if r.eat("("):
        v = _quadexpr(r, d)
        r.expect(")")
        return v
    return _qterm(r, d)


def parse_coefficient(text: str, d: int | None = None):
    """A rational or an element of Q(sqrt(d))."""
    return _run(text, lambda r: _coefficient(r, d))


# -------------------------------------------------------------------- series


def _monomial(r: _Reader):
    r.expect("t")
    if not r.eat("^"):
        return HullElement.unit(1, 1)
    r.expect("(")
    e = _element(r)
    r.expect(")")
    return e


def _term(r: _Reader, d):
    at = r.ws()
    if r.peek_word() == "t":
        return at, 1, _monomial(r)
    c = _coefficient(r, d)
    e = HullElement()
    if r.eat("*"):
        e = _monomial(r)
    return at, c, e


def parse_series_expr(text: str, field, group: GroupDescriptor) -> Series:
    """Parse ``c*t^(e) + ...`` over (field, group)."""
    d = field.d

    def sign(r):
        if r.eat("-"):
            return -1
        r.eat("+")
        return 1

    def body(r):
        acc = []
        s = sign(r)
        while True:
            at, c, e = _term(r, d)
            if not g_member(e, group):
                r.error(f"exponent {e} is not in {group}", at)
            try:
                acc.append((e, field.coerce(s * c)))
            except (PreconditionError, ValueError) as err:
                r.error(str(err), at)
            if r.eat("+"):
                s = sign(r)
            elif r.eat("-"):
                s = -sign(r)
            else:
                return Series(field, group, acc)

    return _run(text, body)


# ---------------------------------------------------------------------- cuts


def parse_cut(text: str, field, group: GroupDescriptor):
    """A cut: ``discrete``, ``group-limit``, ``residue[(d)]``, ``sqrt(d)`` or an element."""
    from .defval import CaseTag, GroupCut, ResidueCut, make_cut

    stripped = text.strip()
    named = {"discrete": CaseTag.DISCRETE, "group-limit": CaseTag.GROUP_LIMIT_POINT}
    if stripped in named:
        return make_cut(field, group, named[stripped])
    m = re.fullmatch(r"residue\s*(?:\(\s*(\d+)\s*\))?", stripped)
    if m:
        return make_cut(field, group, CaseTag.RESIDUE_LIMIT_POINT, int(m.group(1) or 2))
    if stripped.startswith("sqrt"):
        return ResidueCut(_run(text, lambda r: _sqrt(r, None)))
    return GroupCut(parse_element(text))
