import pytest

from core.errors import InvalidGeneratorsError, ResidueOutOfRangeError, SemigroupError
from core.semigroup import check_residue, new_semigroup, parse_generators


def test_derived_invariants(mcnugget, bigger_delta, worked_example):
    assert (mcnugget.delta, mcnugget.lcm) == (1, 180)
    assert bigger_delta.delta == 6
    assert worked_example.delta == 6
    assert bigger_delta.k == 4
    assert bigger_delta.product == 17 * 29 * 47 * 65
    assert str(mcnugget) == "<6, 9, 20>"


@pytest.mark.parametrize(
    "generators, fragment",
    [
        ([], "empty"),
        ([5], "at least two"),
        ([0, 3], "positive"),
        ([3, 3, 5], "repeated"),
        ([5, 3], "increasing"),
        ([2, 4], "gcd"),
        ([2.0, 3], "integer"),
    ],
)
def test_rejects_invalid_generators(generators, fragment):
    with pytest.raises(InvalidGeneratorsError, match=fragment):
        new_semigroup(generators)


def test_errors_share_a_value_error_base():
    with pytest.raises(ValueError):
        new_semigroup([4, 6])
    assert issubclass(ResidueOutOfRangeError, SemigroupError)


def test_parse_generators():
    assert parse_generators("6, 9,20").generators == (6, 9, 20)
    with pytest.raises(InvalidGeneratorsError):
        parse_generators("six,nine")


def test_modulus_gcd_and_attainability(bigger_delta, mcnugget):
    assert bigger_delta.modulus_gcd(4) == 2
    assert bigger_delta.modulus_gcd(6) == 6
    assert not bigger_delta.attainable(2, 1, 5000)
    assert bigger_delta.attainable(3, 1, 5000)
    assert not bigger_delta.attainable(3, 0, 5000)
    assert all(mcnugget.attainable(7, i, 1000) for i in range(7))


def test_residues_are_never_reduced_silently():
    with pytest.raises(ResidueOutOfRangeError):
        check_residue(4, 4)
    with pytest.raises(ResidueOutOfRangeError):
        check_residue(4, -1)
    with pytest.raises(ResidueOutOfRangeError):
        check_residue(0, 0)
