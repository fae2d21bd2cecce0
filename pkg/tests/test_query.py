import pytest

from topocheck.errors import ParseError, UnknownIdentifier
from topocheck.query import And, Ident, Not, Or, evaluate, parse_query
from topocheck.spaceprops import PREDICATES

from .conftest import D2, E


def test_precedence():
    assert parse_query("locally_indiscrete & ~indiscrete") == And(
        (Ident("locally_indiscrete"), Not(Ident("indiscrete")))
    )
    assert parse_query("(hyperconnected | resolvable)") == Or(
        (Ident("hyperconnected"), Ident("resolvable"))
    )
    assert parse_query("a | b & c") == Or((Ident("a"), And((Ident("b"), Ident("c")))))
    assert parse_query("~~a") == Not(Not(Ident("a")))


@pytest.mark.parametrize(
    "text,column",
    [("a &", 4), ("(a | b", 7), ("a b", 3), ("a $ b", 3), ("", 1), ("&", 1)],
)
def test_parse_errors(text, column):
    with pytest.raises(ParseError) as err:
        parse_query(text)
    assert err.value.column == column


def test_evaluation():
    assert evaluate(parse_query("hyperconnected & ~discrete"), E, PREDICATES)
    assert evaluate(parse_query("locally_indiscrete & ~indiscrete"), D2, PREDICATES)


def test_unknown_identifier_deferred():
    expr = parse_query("nonsense")
    with pytest.raises(UnknownIdentifier):
        evaluate(expr, E, PREDICATES)
