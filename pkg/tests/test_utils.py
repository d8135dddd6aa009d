import pytest

from sidonlab.exceptions import SetLiteralError
from sidonlab.models.vector_model import PointSet
from sidonlab.utils.utils import format_bits, format_set, parse_set_literal


@pytest.mark.parametrize("text", ["0,1,2,4", "{0, 1, 2, 4}", "4 2 1 0", " 0,\t1 ,2,4 "])
def test_parse_set_literal(text):
    assert parse_set_literal(3, text) == PointSet.of(3, [0, 1, 2, 4])


@pytest.mark.parametrize(
    "text, token",
    [("0,1,x", "'x'"), ("0,1,8", "'8'"), ("0,1,1", "'1'"), ("0,-1", "'-1'")],
)
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(SetLiteralError, match=token):
        parse_set_literal(3, text)


def test_format_bits():
    assert format_bits(1, 4) == "1000"
    assert format_bits(12, 4) == "0011"
    assert format_set(PointSet.of(3, [0, 5]), "bits") == "000 101"
    assert format_set(PointSet.of(3, [5, 0])) == "0,5"
