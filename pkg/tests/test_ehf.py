"""Admissible word enumeration and the transfer-matrix routes."""

import pytest

from coinv.ehf import (
    EhfWord,
    count_ehf,
    direct_character,
    enumerate_ehf,
    full_transfer,
    index_pairs,
    is_ehf,
    position_triples,
    reduce_full_transfer,
    tilde_transfer,
    transfer_character,
    transfer_product_row,
)
from coinv.fusion import dim_coinvariants
from coinv.laurent import LaurentPoly

QZ = ("q", "z")


def qz(terms):
    return LaurentPoly(QZ, terms)


def test_word_validation_and_weight():
    w = EhfWord(1, 1, a=(0, 1), b=(0,), c=(0,))
    assert w.length == 2
    assert w.weight() == (1, -1)
    with pytest.raises(ValueError):
        EhfWord(1, 1, a=(0, 1), b=(), c=(0,))


def test_is_ehf_conditions():
    # neighbor sum too large
    assert not is_ehf(EhfWord(1, 1, a=(1, 1), b=(0,), c=(0,)))
    # boundary: a_0 over the weight
    assert not is_ehf(EhfWord(1, 0, a=(1,), b=(), c=()))
    # boundary: c_1 over k - l
    assert not is_ehf(EhfWord(1, 1, a=(0, 0), b=(0,), c=(1,)))
    assert is_ehf(EhfWord(1, 1, a=(0, 1), b=(0,), c=(0,)))
    assert is_ehf(EhfWord(2, 1, a=(1, 1), b=(0,), c=(1,)))


def test_enumeration_counts():
    # cross-checked against the fusion dimensions and the closed forms
    table = {
        (1, 0, 1): 1, (1, 1, 1): 2, (1, 0, 2): 5, (1, 1, 2): 4,
        (2, 0, 1): 1, (2, 1, 1): 2, (2, 2, 1): 3,
        (2, 0, 2): 14, (2, 1, 2): 16, (2, 2, 2): 10,
        (3, 1, 2): 40,
    }
    for (k, l, N), expected in table.items():
        words = enumerate_ehf(k, l, N)
        assert len(words) == expected
        assert len(set(words)) == expected
        assert all(is_ehf(w) for w in words)


def test_count_matches_enumeration():
    for k in (1, 2, 3):
        for l in range(k + 1):
            for N in (1, 2, 3, 4):
                assert count_ehf(k, l, N) == len(enumerate_ehf(k, l, N))


def test_count_matches_fusion():
    for k in (1, 2, 3):
        for l in range(k + 1):
            for N in range(1, 7):
                assert count_ehf(k, l, N) == dim_coinvariants(k, l, N, "zero")


def test_character_hand_values():
    assert direct_character(1, 1, 1) == qz({(0, 1): 1, (0, -1): 1})
    assert direct_character(1, 0, 2) == qz({(0, 0): 1, (1, 2): 1, (1, 0): 1, (1, -2): 1, (2, 0): 1})
    assert direct_character(1, 1, 2) == qz({(0, 1): 1, (0, -1): 1, (1, 1): 1, (1, -1): 1})
    assert direct_character(2, 1, 1) == qz({(0, 1): 1, (0, -1): 1})


def test_character_at_ones_is_count():
    for k, l, N in [(1, 0, 3), (2, 2, 3), (3, 1, 2)]:
        assert direct_character(k, l, N).at_ones() == count_ehf(k, l, N)


def test_transfer_equals_direct():
    for k, n_max in ((1, 4), (2, 3)):
        for l in range(k + 1):
            for N in range(1, n_max + 1):
                assert transfer_character(k, l, N) == direct_character(k, l, N)


def test_index_pairs():
    assert index_pairs(1) == [(0, 0), (0, 1), (1, 1)]
    assert index_pairs(2) == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]


def test_tilde_transfer_level_one_entries():
    P = tilde_transfer(1)
    one = LaurentPoly.one(QZ)
    # the top row is identically one: it sums whatever comes before
    assert P[0] == [one, one, one]
    assert P[1][0] == qz({(1, 0): 1, (1, 2): 1})
    assert P[1][1] == qz({(1, 0): 1})
    assert P[1][2] == LaurentPoly.zero(QZ)
    assert P[2][0] == qz({(1, -2): 1, (2, 0): 1})
    assert P[2][1] == qz({(1, -2): 1})
    assert P[2][2] == LaurentPoly.zero(QZ)


def test_top_row_all_ones_any_level():
    for k in (1, 2, 3):
        P = tilde_transfer(k, q_power=5)
        assert all(entry == LaurentPoly.one(QZ) for entry in P[0])


def test_product_row_boundary():
    # one position: the product row is the single factor's top row
    row = transfer_product_row(1, 1)
    assert row == tilde_transfer(1, 1)[0]


def test_full_transfer_reduces_to_tilde():
    for k in (1, 2):
        A, init, phi = reduce_full_transfer(k, 0)
        T = tilde_transfer(k)
        dim = len(index_pairs(k))
        assert len(A) == dim
        assert all(A[r][c] == T[r][c] for r in range(dim) for c in range(dim))


def test_position_triples_small():
    assert position_triples(1) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 0, 1),
    ]
    assert len(full_transfer(1)) == 5


def test_validation_errors():
    with pytest.raises(ValueError):
        count_ehf(1, 2, 3)
    with pytest.raises(ValueError):
        count_ehf(1, 0, 0)
    with pytest.raises(ValueError):
        transfer_character(2, 3, 1)
    with pytest.raises(ValueError):
        tilde_transfer(0)
