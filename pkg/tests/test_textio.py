import hypothesis.strategies as st
import pytest
from hypothesis import given

from conftest import polys
from frobjac.polynomial import Polynomial
from frobjac.textio import ParseError, parse_map, parse_polynomial, print_canonical, read_polynomial_lines


@pytest.mark.parametrize(
    "text, p, n, terms",
    [
        ("x1^2*x2 + 3", 5, 2, {(2, 1): 1, (0, 0): 3}),
        ("x + x^2", 2, 1, {(1,): 1, (2,): 1}),
        ("7*x", 5, 1, {(1,): 2}),
        ("(x + y)^2 - 2*x*y", 7, 2, {(2, 0): 1, (0, 2): 1}),
        ("x3*z", 3, 3, {(0, 0, 2): 1}),
        ("  12 ", 5, 4, {(0, 0, 0, 0): 2}),
    ],
)
def test_parse(text, p, n, terms):
    assert parse_polynomial(text, p, n).terms == terms


@pytest.mark.parametrize(
    "text, n, position",
    [
        ("x1 +", 2, 4),
        ("2 x1", 2, 2),
        ("x3", 2, 0),
        ("-x1", 2, 0),
        ("x1^y", 2, 3),
        ("(x1 + 1", 2, 7),
        ("x1 $ 2", 2, 3),
        ("w", 1, 0),
    ],
)
def test_parse_errors_report_position(text, n, position):
    with pytest.raises(ParseError) as exc:
        parse_polynomial(text, 3, n)
    assert exc.value.position == position


def test_aliases_only_up_to_three_variables():
    with pytest.raises(ParseError):
        parse_polynomial("x", 3, 4)
    with pytest.raises(ParseError):
        parse_polynomial("z", 3, 2)


def test_exponent_overflow():
    with pytest.raises(ParseError, match="overflow"):
        parse_polynomial("x^100000", 3, 1)
    with pytest.raises(ParseError, match="overflow"):
        parse_polynomial("(x^100)^100", 3, 1)


def test_print_examples():
    assert print_canonical(Polynomial.zero(3, 2)) == "0"
    assert print_canonical(Polynomial(2, 2, {(2, 0): 1, (0, 2): 1})) == "x1^2 + x2^2"
    assert print_canonical(Polynomial(5, 2, {(1, 1): 3, (0, 1): 1, (0, 0): 4})) == "3*x1*x2 + x2 + 4"


@given(st.data())
def test_roundtrip(data):
    p = data.draw(st.sampled_from([2, 3, 5, 13]))
    n = data.draw(st.integers(1, 4))
    f = data.draw(polys(p, n, max_degree=6, max_terms=8))
    assert parse_polynomial(print_canonical(f), p, n) == f


def test_parse_map_counts():
    F = parse_map("x1 + x2; x1*x2", 2, 2)
    assert print_canonical(F[1]) == "x1*x2"
    with pytest.raises(ValueError):
        parse_map("x1", 2, 2)


def test_read_lines(tmp_path):
    path = tmp_path / "map.txt"
    path.write_text("# a map\nx1 + x2  # first\n\nx1*x2\n", encoding="utf-8")
    assert read_polynomial_lines(path) == ["x1 + x2", "x1*x2"]
