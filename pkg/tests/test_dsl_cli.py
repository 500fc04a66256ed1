import json
import random

import pytest

from ordval._errors import ParseError
from ordval.catalog import CATALOG, CATALOG_EXPRS
from ordval.checks import MALFORMED, random_group_text
from ordval.cli import main
from ordval.dsl import format_group, parse_element, parse_field, parse_group_expr, parse_series_expr
from ordval.groups import FiniteLex, Q, loc
from ordval.series import PlainRationals


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_group_grammar_examples():
    assert parse_group_expr("lex(Q, loc{2})") == FiniteLex((Q, loc(2)))
    assert parse_group_expr(" lex ( lex(Q), loc{ 2 } ) ") == FiniteLex((Q, loc(2)))
    assert str(parse_group_expr("omega(prefixprimes)")) == "omega(prefixprimes)"
    with pytest.raises(ParseError) as e:
        parse_group_expr("lex(")
    assert e.value.position == 4


@pytest.mark.parametrize("text", MALFORMED)
def test_malformed_groups_rejected(text):
    with pytest.raises(ParseError):
        parse_group_expr(text)


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_round_trip(name):
    G = CATALOG[name]
    assert parse_group_expr(format_group(G)) == G
    assert format_group(parse_group_expr(CATALOG_EXPRS[name])) == format_group(G)


def test_fuzzed_round_trip():
    rng = random.Random(0)
    for _ in range(200):
        G = parse_group_expr(random_group_text(rng))
        assert parse_group_expr(str(G)) == G


def test_series_grammar_examples():
    k, G = PlainRationals(), parse_group_expr("Q")
    x = parse_series_expr("3*t^({1:1/2}) + t^({1:2})", k, G)
    assert len(x) == 2
    assert not parse_series_expr("2*t^({1:1}) + -2*t^({1:1})", k, G)
    with pytest.raises(ParseError):
        parse_series_expr("t^({1:1/2})", k, parse_group_expr("Z"))
    with pytest.raises(ParseError):
        parse_series_expr("3*", k, G)


def test_element_and_field_parsing():
    assert parse_element("{1: 1/3, top: 2}") == parse_element("{top: 2, 1: 1/3}")
    assert str(parse_field("Q(sqrt(2))")) == "Q(sqrt(2))"
    assert str(parse_field("RC(Q)")) == "RC(Q)"
    with pytest.raises(ParseError):
        parse_field("Q(sqrt(4))")


def test_classify_group_cli(capsys):
    code, out, _ = run(capsys, "classify-group", "lex(loc{2}, loc{2})")
    assert code == 0 and "dense_in_hull: false" in out.splitlines()
    code, out2, _ = run(capsys, "classify-group", "lex(loc{2}, loc{2})")
    assert out2 == out
    code, js, _ = run(capsys, "classify-group", "lex(loc{2}, loc{2})", "--format", "json")
    assert list(json.loads(js)) == [line.split(":")[0] for line in out.splitlines()]


def test_classify_field_cli(capsys):
    code, out, _ = run(capsys, "classify-field", "--coeff", "Q", "--group", "Z")
    assert code == 0 and "thm45_cases: {Discrete, ResidueLimitPoint}" in out
    assert "field_dense_in_rc: false" in out


def test_predicate_cli(capsys):
    assert run(capsys, "predicate", "phi", "--coeff", "Q", "--group", "Q",
               "--at", "2*t^({1:0})") == (0, "phi: false\n", "")
    code, out, _ = run(capsys, "predicate", "limit_point", "--group", "lex(loc{2}, loc{2})",
                       "--at", "{2: 1/3}")
    assert code == 0 and out == "limit_point: true\n"
    code, out, _ = run(capsys, "predicate", "in_O", "--coeff", "Q", "--group", "Z",
                       "--at", "t^(-1)", "--cut", "discrete")
    assert code == 0 and out == "in_O: false\n"


def test_witness_cli(capsys):
    code, out, _ = run(capsys, "witness", "violation", "--coeff", "Q", "--group", "Z",
                       "--at", "t^(-1)", "--cut", "discrete")
    assert code == 0 and "verified: true" in out
    code, out, _ = run(capsys, "witness", "nondense", "--group", "lex(loc{2}, loc{2})")
    assert code == 0 and out.startswith("g0: ")
    code, out, _ = run(capsys, "witness", "sqrt", "--coeff", "Q", "--group", "Z",
                       "--at", "1 + t", "--terms", "3")
    assert code == 0 and out.splitlines()[0] == "terms: 1 + 1/2*t^({1: 1}) + -1/8*t^({1: 2})"


def test_exit_codes(capsys):
    code, _, err = run(capsys, "classify-group", "lex(")
    assert code == 2 and "offset 4" in err
    code, _, err = run(capsys, "witness", "sqrt", "--coeff", "Q", "--group", "Z", "--at", "t")
    assert code == 3
    code, _, _ = run(capsys, "witness", "nondense", "--group", "lex(Z, Z)")
    assert code == 3
    code, _, _ = run(capsys, "predicate", "no_such", "--group", "Z")
    assert code == 3
    code, _, _ = run(capsys, "check", "--suite", "nope")
    assert code == 3
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_check_is_deterministic(capsys, monkeypatch):
    code, a, _ = run(capsys, "check", "--suite", "thm45", "--trials", "40", "--seed", "7")
    assert code == 0 and "violations: 0" in a and "seed: 7" in a
    code, b, _ = run(capsys, "check", "--suite", "thm45", "--trials", "40", "--seed", "7")
    assert a == b
    monkeypatch.setenv("ORDVAL_SEED", "7")
    code, c, _ = run(capsys, "check", "--suite", "thm45", "--trials", "40")
    assert c == a
    monkeypatch.delenv("ORDVAL_SEED")
    code, d, _ = run(capsys, "check", "--suite", "thm45", "--trials", "40")
    assert "seed: 24301" in d  # 0x5EED


def test_check_reports_violations(capsys, monkeypatch):
    import ordval.checks as C

    def broken(res, rng, trials):
        C._Tally(res).check(False, "forced")
    monkeypatch.setitem(C.SUITES, "numeric", broken)
    code, out, _ = run(capsys, "check", "--suite", "numeric", "--trials", "1")
    assert code == 1 and "violation: forced" in out
