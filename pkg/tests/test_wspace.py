"""Two-variable characters, monomial bases, recursions, specializations."""

import pytest

from coinv.laurent import LaurentPoly, truncate_var
from coinv.wspace import (
    EfWord,
    check_recursions,
    ef_basis,
    ef_character,
    family_of,
    fh_basis,
    fh_character,
    full_w_character,
    limit_character,
    lkn_character,
    lkn_from_w,
    w_character,
)

QZZ = ("q", "z1", "z2")
QZ = ("q", "z")


def qzz(terms):
    return LaurentPoly(QZZ, terms)


def test_w_character_hand_values():
    assert w_character(0, 0) == LaurentPoly.one(QZZ)
    assert w_character(1, 1) == qzz({(0, 0, 0): 1, (1, 1, 1): 1})
    assert w_character(2, 1) == qzz({(0, 0, 0): 1, (1, 1, 0): 1, (1, 1, 1): 1, (2, 1, 1): 1})
    assert w_character(-1, 1) == LaurentPoly.zero(QZZ)
    assert w_character(-1, 2) == qzz({(1, 0, 1): 1})


def test_w_character_validation():
    with pytest.raises(ValueError):
        w_character(-2, 3)
    with pytest.raises(ValueError):
        w_character(-1, -1)


def test_w_dimension():
    for M in range(0, 5):
        for N in range(0, 5):
            if M + N >= 1:
                assert w_character(M, N).at_ones() == 2 ** (M + N - 1)


def test_ef_basis_small():
    assert ef_basis(1, 1) == [EfWord((), ()), EfWord((0,), (1,))]
    assert ef_basis(0, 0) == [EfWord((), ())]


def test_ef_character_matches_closed_form():
    for M in range(4):
        for N in range(4):
            assert ef_character(M, N) == w_character(M, N)


def test_fh_counts_and_characters():
    for M in (-1, 0, 1):
        family = family_of(M)
        lo = {-1: 2, 0: 1, 1: 0}[M]
        for N in range(lo, 7):
            words = fh_basis(family, N)
            assert len(words) == 2 ** (M + N - 1)
            assert fh_character(family, N) == w_character(M, N)


def test_fh_validation():
    with pytest.raises(ValueError):
        fh_basis("C0", 0)
    with pytest.raises(ValueError):
        fh_basis("Cminus1", 1)
    with pytest.raises(ValueError):
        fh_basis("C7", 3)
    with pytest.raises(KeyError):
        family_of(2)


def test_first_recursion_holds():
    for M, N in [(-1, 1), (0, 1), (1, 1), (2, 3), (3, 2)]:
        ok, witness = check_recursions(M, N, "first")
        assert ok, witness


def test_second_recursion_variants():
    # the corrected reading holds; the displayed one already fails at (1, 1)
    for M, N in [(1, 1), (2, 2), (3, 1)]:
        ok, witness = check_recursions(M, N, "second-corrected")
        assert ok, witness
    ok, witness = check_recursions(1, 1, "second-printed")
    assert not ok
    exp, lhs, rhs = witness
    assert exp == (1, 1, 1)
    assert (lhs, rhs) == (1, 0)


def test_lkn_hand_values():
    assert lkn_character(1, 1) == LaurentPoly(QZ, {(0, -1): 1})
    assert lkn_character(3, 0) == LaurentPoly(QZ, {(0, 0): 1, (1, -2): 1, (2, -2): 1, (3, -2): 1})
    assert lkn_character(3, 1) == LaurentPoly(
        QZ, {(0, -1): 1, (1, -1): 1, (2, -1): 1, (2, -3): 1})


def test_lkn_routes_agree():
    for N in range(1, 7):
        for l in (0, 1):
            assert lkn_character(N, l) == lkn_from_w(N, l)
            assert lkn_character(N, l).at_ones() == 2 ** (N - 1)


def test_lkn_validation():
    with pytest.raises(ValueError):
        lkn_character(0, 0)
    with pytest.raises(ValueError):
        lkn_character(3, 2)


def test_full_character_stabilizes():
    cap = 3
    series = full_w_character(cap)
    assert series.body == truncate_var(w_character(8, 8), "q", cap)


def test_limit_character_stabilizes():
    for l in (0, 1):
        lim = limit_character(l, 2)
        assert lim.body == truncate_var(lkn_character(9, l), "q", 2)


def test_limit_character_validation():
    with pytest.raises(ValueError):
        limit_character(2, 3)
