"""Fermionic q-binomial sum forms at level 1."""

import pytest

from coinv.ehf import direct_character, index_pairs, transfer_product_row
from coinv.fermi import c_vector, char_fermionic, discover_offset
from coinv.laurent import LaurentPoly

QZ = ("q", "z")


def test_c_vector_base_cases():
    one = LaurentPoly.one(QZ)
    assert c_vector(0, (0, 0, 0)) == one
    assert c_vector(0, (0, 0, 1)) == one
    assert c_vector(0, (1, 1, 1)) == one


def test_c_vector_hand_value():
    # N = 1, e = 0: the vacuum term plus the three single-occupation terms
    expected = LaurentPoly(QZ, {(0, 0): 1, (1, -2): 1, (1, 0): 1, (1, 2): 1, (2, 0): 1})
    assert c_vector(1, (0, 0, 0)) == expected


def test_c_vector_validation():
    with pytest.raises(ValueError):
        c_vector(1, (0, 2, 0))
    with pytest.raises(ValueError):
        c_vector(-1, (0, 0, 0))
    with pytest.raises(ValueError):
        c_vector(1, (0, 0))


def test_offset_discovery():
    assert discover_offset(5) == 1


def test_char_matches_enumeration():
    for N in range(1, 6):
        for l in (0, 1):
            assert char_fermionic(N, l) == direct_character(1, l, N)


def test_wrong_offset_fails():
    assert char_fermionic(2, 0, offset=0) != direct_character(1, 0, 2)


def test_char_validation():
    with pytest.raises(ValueError):
        char_fermionic(3, 2)
    with pytest.raises(ValueError):
        char_fermionic(0, 0, offset=1)


def test_product_entry_identities():
    # the three distinguished entries of the level-1 transfer product equal
    # shifted c-vectors, under the same offset that matches the characters
    pairs = index_pairs(1)
    targets = (((0, 0), (0, 0, 0)), ((0, 1), (0, 0, 1)), ((1, 1), (1, 1, 1)))
    for N in range(1, 5):
        row = transfer_product_row(1, N)
        for pair, e in targets:
            assert row[pairs.index(pair)] == c_vector(N - 1, e)
