import pytest

from core.exceptions import NotInRepT, ParseError, QuiverLabError


def test_ParseError():
    err = ParseError("bad sign", 3, 2)
    assert str(err) == "line 3, column 2: bad sign"
    assert (err.line, err.column) == (3, 2)
    assert str(ParseError("empty file", 1)) == "line 1: empty file"


@pytest.mark.parametrize("error", [ParseError("x", 1), NotInRepT("x")])
def test_errors_are_value_errors(error):
    assert isinstance(error, QuiverLabError)
    assert isinstance(error, ValueError)
