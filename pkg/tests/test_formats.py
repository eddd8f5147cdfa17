from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import gdecomp as g
from gdecomp import AsymmetricInputError, NegativeEntryError, ParseError, SymMatrix
from helpers import HALF, m3

M3_PLAIN = "3\n0 1/2 1/2\n1/2 0 0\n1/2 0 1\n"


def test_parse_plain_m3():
    assert g.parse_matrix(M3_PLAIN) == m3()


def test_parse_accepts_bytes_and_comments():
    text = b"# comment\n2\n0 1\n1 0\n"
    assert g.parse_matrix(text) == SymMatrix([[0, 1], [1, 0]])


def test_decimal_parsed_exactly():
    assert g.parse_rational("0.5") == HALF
    assert g.parse_rational("1.25") == Fraction(5, 4)
    assert g.parse_matrix("1\n0.5\n").entry(1, 1) == HALF


def test_asymmetric_input():
    with pytest.raises(AsymmetricInputError):
        g.parse_matrix("2\n0 1\n0 1\n")


def test_negative_entry():
    with pytest.raises(NegativeEntryError):
        g.parse_matrix("1\n-1\n")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "x\n",
        "2\n0 1\n1\n",
        "2\n0 1\n",
        "1\n1/0\n",
        "1\nnan\n",
        "1\n1e3\n",
        '{"m": 1}',
        '{"m": 1, "entries": [[0.5]]}',
    ],
)
def test_malformed_inputs(text):
    with pytest.raises(ParseError):
        g.parse_matrix(text)


def test_plain_round_trip():
    assert g.parse_matrix(g.serialize_matrix(m3(), "plain")) == m3()


def test_json_round_trip():
    assert g.parse_matrix(g.serialize_matrix(m3(), "json")) == m3()


def test_serialized_plain_matches_spec_layout():
    assert g.serialize_matrix(m3(), "plain") == M3_PLAIN


def test_square_matrix_round_trip_nonsymmetric():
    X = ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)))
    for fmt in ("plain", "json"):
        assert g.parse_square_matrix(g.serialize_square_matrix(X, fmt)) == X


@st.composite
def rational_matrices(draw):
    m = draw(st.integers(min_value=1, max_value=4))
    value = st.fractions(
        min_value=0, max_value=10, max_denominator=97
    )
    grid = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            v = draw(value)
            grid[i][j] = v
            grid[j][i] = v
    return SymMatrix(grid)


@given(rational_matrices())
def test_round_trip_is_bit_exact(A):
    for fmt in ("plain", "json"):
        again = g.parse_matrix(g.serialize_matrix(A, fmt))
        assert again == A
