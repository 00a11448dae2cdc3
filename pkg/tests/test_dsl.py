"""Expression language: lexer, parser, printer, elaborator, diagnostics."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.dsl import (
    DslError,
    ElabError,
    elaborate_text,
    parse,
    parse_idealspec_text,
    print_expr,
    require_amalgamation,
)

GOLDEN = [
    "zmod(2)",
    "zmod(97)",
    "prod(zmod(2), zmod(3))",
    "prod(zmod(2), zmod(2), zmod(2))",
    "prod(zmod(4), prod(zmod(2), zmod(3)))",
    "quot(zmod(12), ideal(4))",
    "quot(zmod(8), ideal(2, 4))",
    "quot(prod(zmod(2), zmod(4)), ideal((0, 2)))",
    "triv(zmod(2), self)",
    "triv(zmod(4), ideal(2))",
    "triv(zmod(4), quotmod(ideal(2)))",
    "triv(prod(zmod(2), zmod(2)), self)",
    "dupl(zmod(4), ideal(2))",
    "dupl(zmod(6), zero)",
    "dupl(zmod(6), full)",
    "dupl(quot(zmod(12), ideal(4)), ideal(2))",
    "amalg(zmod(2), prod(zmod(2), zmod(2)), diag, full)",
    "amalg(zmod(8), quot(zmod(8), ideal(4)), canon, ideal(2))",
    "amalg(zmod(2), triv(zmod(2), self), canon, ideal((0, 1)))",
    "amalg(zmod(4), zmod(4), id, ideal(2))",
]


@pytest.mark.parametrize("text", GOLDEN)
def test_round_trip_on_golden_suite(text):
    ast = parse(text)
    assert print_expr(ast) == text
    assert parse(print_expr(ast)) == ast


@pytest.mark.parametrize("text", GOLDEN)
def test_golden_suite_elaborates(text):
    R = elaborate_text(text)
    assert R.order >= 2


def test_whitespace_insensitive():
    assert parse(" dupl( zmod(4),ideal( 2 ) ) ") == parse("dupl(zmod(4), ideal(2))")


def test_error_position_and_expectation():
    with pytest.raises(DslError) as ei:
        parse("dupl(zmod(4), )")
    err = ei.value
    assert err.line == 1
    assert err.col == 15
    assert err.expected


def test_error_on_trailing_garbage():
    with pytest.raises(DslError):
        parse("zmod(4) zmod(4)")


def test_error_on_unknown_keyword():
    with pytest.raises(DslError):
        parse("field(4)")


def test_unterminated_call_reports_position():
    with pytest.raises(DslError) as ei:
        parse("prod(zmod(2), zmod(3)")
    assert ei.value.col == len("prod(zmod(2), zmod(3)") + 1


def test_elaborate_quotient_value():
    R = elaborate_text("quot(zmod(12), ideal(4))")
    assert R.order == 4


def test_elaborate_rejects_whole_ideal_quotient():
    with pytest.raises(ElabError):
        elaborate_text("quot(zmod(12), full)")


def test_elaborate_id_requires_equal_sides():
    with pytest.raises(ElabError):
        elaborate_text("amalg(zmod(4), zmod(8), id, zero)")


def test_elaborate_diag_requires_power_target():
    with pytest.raises(ElabError):
        elaborate_text("amalg(zmod(2), prod(zmod(2), zmod(3)), diag, full)")


def test_elaborate_canon_quotient_and_trivial():
    R1 = elaborate_text("amalg(zmod(8), quot(zmod(8), ideal(4)), canon, ideal(2))")
    assert R1.order == 8 * 2
    R2 = elaborate_text("amalg(zmod(2), triv(zmod(2), self), canon, ideal((0, 1)))")
    assert R2.order == 2 * 2


def test_table_hom_spec():
    R = elaborate_text("amalg(zmod(2), zmod(2), table:[0, 1], zero)")
    assert R.order == 2


def test_table_hom_spec_rejects_non_hom():
    with pytest.raises(ElabError):
        elaborate_text("amalg(zmod(4), zmod(4), table:[0, 3, 2, 1], zero)")


def test_idealspec_text_parsing():
    spec = parse_idealspec_text("ideal(2, (1, 0))")
    assert spec.kind == "gens"
    assert parse_idealspec_text("full").kind == "full"
    assert parse_idealspec_text("zero").kind == "zero"
    with pytest.raises(DslError):
        parse_idealspec_text("ideal(")


def test_require_amalgamation_rejects_plain_ring():
    with pytest.raises(ElabError):
        require_amalgamation(elaborate_text("zmod(6)"))


def test_nested_tuple_literals():
    R = elaborate_text("dupl(prod(zmod(2), zmod(2)), ideal((1, 0)))")
    assert R.order == 4 * 2


@given(st.text(alphabet="azmodprquv tilfe gcn(),[]:0123456789", max_size=40))
@settings(max_examples=500, deadline=None)
def test_parser_fuzz_never_crashes(text):
    try:
        parse(text)
    except DslError as e:
        assert e.line >= 1 and e.col >= 1


@given(st.integers(min_value=2, max_value=500))
@settings(max_examples=50, deadline=None)
def test_zmod_round_trip_any_modulus(n):
    text = f"zmod({n})"
    assert print_expr(parse(text)) == text
