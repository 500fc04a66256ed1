"""Named group descriptors used by the check harness, the tests and the demos."""
from __future__ import annotations

from .dsl import parse_group_expr

#: name -> group expression; the first block are the groups the theory is
#: usually illustrated with, the rest are variants exercising each rule
CATALOG_EXPRS = {
    "Z": "Z",
    "Q": "Q",
    "A": "loc{2}",
    "B": "loc{>=3}",
    "Z+Z": "lex(Z, Z)",
    "A+A": "lex(loc{2}, loc{2})",
    "Q+A": "lex(Q, loc{2})",
    "B+Q": "lex(loc{>=3}, Q)",
    "prefixprimes": "omega(prefixprimes)",
    "Q+Q": "lex(Q, Q)",
    "A+Z": "lex(loc{2}, Z)",
    "Q+Z": "lex(Q, Z)",
    "Z+Q": "lex(Z, Q)",
    "Q+Q+A": "lex(Q, Q, loc{2})",
    "loc23": "loc{2,3}",
    "loc3+loc25": "lex(loc{3}, loc{2,5})",
    "B+B": "lex(loc{>=3}, loc{>=3})",
    "Q+B5": "lex(Q, loc{>=5})",
    "omegaZ": "omega(const(Z))",
    "omegaQ": "omega(const(Q))",
    "omegaA": "omega(const(loc{2}))",
    "omega1QZ": "omegaplus1(const(Q), Z)",
    "omega1QA": "omegaplus1(const(Q), loc{2})",
    "omega1QQ": "omegaplus1(const(Q), Q)",
    "omega1AQ": "omegaplus1(const(loc{2}), Q)",
    "omega1PQ": "omegaplus1(prefixprimes, Q)",
    "omega1ZZ": "omegaplus1(const(Z), Z)",
}

CATALOG = {name: parse_group_expr(expr) for name, expr in CATALOG_EXPRS.items()}
