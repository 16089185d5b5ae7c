"""Exact Laurent polynomial arithmetic and q-series helpers."""

import pytest

from coinv.laurent import (
    LaurentPoly,
    TruncatedSeries,
    gauss_binomial,
    inv_qfactorial,
    substitute_scaled,
    truncate_var,
)

Q = ("q",)
QZ = ("q", "z")


def q_poly(terms):
    return LaurentPoly(Q, {(d,): c for d, c in terms.items()})


def test_ring_ops():
    q = LaurentPoly.gen(Q, "q")
    one = LaurentPoly.one(Q)
    assert (one + q) * (one - q) == one - q * q
    assert (one + q) ** 3 == q_poly({0: 1, 1: 3, 2: 3, 3: 1})
    assert q - q == LaurentPoly.zero(Q)
    assert not LaurentPoly.zero(Q)
    assert 2 * q == q + q
    assert q * 0 == LaurentPoly.zero(Q)
    assert 1 - q == q_poly({0: 1, 1: -1})


def test_negative_exponents():
    zinv = LaurentPoly.gen(QZ, "z", -1)
    z = LaurentPoly.gen(QZ, "z")
    assert z * zinv == LaurentPoly.one(QZ)
    assert (z + zinv) ** 2 == LaurentPoly(QZ, {(0, 2): 1, (0, 0): 2, (0, -2): 1})


def test_mixed_vars_rejected():
    with pytest.raises(ValueError):
        LaurentPoly.one(Q) + LaurentPoly.one(QZ)


def test_pow_negative_rejected():
    with pytest.raises(ValueError):
        LaurentPoly.gen(Q, "q") ** -1


def test_coeff_and_at_ones():
    p = q_poly({0: 1, 2: 5, 7: -3})
    assert p.coeff((2,)) == 5
    assert p.coeff((1,)) == 0
    assert p.at_ones() == 3


def box_partitions(total, parts, cap):
    # partitions of `total` into at most `parts` parts each <= cap
    if total == 0:
        return 1
    if parts == 0 or cap == 0:
        return 0
    return sum(box_partitions(total - first, parts - 1, first)
               for first in range(min(cap, total), 0, -1))


def test_gauss_binomial_values():
    # hand expansion of [4; 2]
    assert gauss_binomial(4, 2) == q_poly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert gauss_binomial(5, 0) == LaurentPoly.one(Q)
    assert gauss_binomial(5, 5) == LaurentPoly.one(Q)
    # out-of-range conventions
    assert gauss_binomial(-1, 0) == LaurentPoly.zero(Q)
    assert gauss_binomial(3, 5) == LaurentPoly.zero(Q)
    assert gauss_binomial(3, -1) == LaurentPoly.zero(Q)


def test_gauss_binomial_symmetry_and_boxes():
    for m in range(8):
        for n in range(m + 1):
            b = gauss_binomial(m, n)
            assert b == gauss_binomial(m, m - n)
            # coefficient of q^d counts partitions inside an n x (m-n) box
            for d in range(n * (m - n) + 1):
                assert b.coeff((d,)) == box_partitions(d, n, m - n)


def test_truncate_var():
    p = q_poly({0: 1, 3: 2, 9: 4})
    assert truncate_var(p, "q", 3) == q_poly({0: 1, 3: 2})
    assert truncate_var(p, "q", 100) == p


def test_substitute_scaled_single():
    # z1 -> q^3 z^-1 applied to q z1^2 gives q^7 z^-2
    p = LaurentPoly(("q", "z1"), {(1, 2): 1})
    out = substitute_scaled(p, "z1", 3, "z", -1)
    assert out == LaurentPoly(("q", "z"), {(7, -2): 1})


def test_substitute_scaled_collapsing_order():
    # collapsing z1, z2 onto one variable: scale the same-named variable
    # first, then fold the other one in; exponent (a, b) must become
    # q^(2a - b) z^(a + b)
    p = LaurentPoly(("q", "z1", "z2"), {(0, 1, 0): 1, (0, 0, 1): 1, (0, 2, 3): 1})
    step = substitute_scaled(p, "z1", 2, "z1", 1)
    out = substitute_scaled(step, "z2", -1, "z1", 1)
    assert out == LaurentPoly(("q", "z1"), {(2, 1): 1, (-1, 1): 1, (1, 5): 1})


def test_json_round_trip():
    p = LaurentPoly(QZ, {(0, -2): 3, (5, 1): -7, (2, 0): 1})
    data = p.to_json_dict()
    assert data["vars"] == ["q", "z"]
    exps = [tuple(t["exp"]) for t in data["terms"]]
    assert exps == sorted(exps)
    assert all(isinstance(t["coeff"], str) for t in data["terms"])
    assert LaurentPoly.from_json_dict(data) == p


def test_truncated_series():
    a = TruncatedSeries(4, q_poly({0: 1, 3: 1, 9: 1}))
    assert a.body == q_poly({0: 1, 3: 1})
    b = TruncatedSeries(4, q_poly({2: 1}))
    assert (a * b).body == q_poly({2: 1})
    with pytest.raises(ValueError):
        a * TruncatedSeries(5, q_poly({0: 1}))
    assert a * LaurentPoly.gen(Q, "q", 2) == b * q_poly({0: 1, 3: 1})


def unrestricted_partitions(total, max_part):
    if total == 0:
        return 1
    if max_part == 0:
        return 0
    return sum(unrestricted_partitions(total - first, first)
               for first in range(min(max_part, total), 0, -1))


def test_inv_qfactorial():
    assert inv_qfactorial(0, 6).body == LaurentPoly.one(Q)
    for m in range(1, 5):
        series = inv_qfactorial(m, 8)
        for d in range(9):
            assert series.body.coeff((d,)) == unrestricted_partitions(d, m)
    # multiplying back by the factorial gives 1 within the cap
    poly = LaurentPoly.one(Q)
    for i in range(1, 4):
        poly = poly * (1 - LaurentPoly.gen(Q, "q", i))
    assert (inv_qfactorial(3, 8) * poly).body == LaurentPoly.one(Q)


def test_str_smoke():
    p = LaurentPoly(QZ, {(1, -2): -1, (0, 0): 2})
    s = str(p)
    assert "z^-2" in s and "2" in s
    assert str(LaurentPoly.zero(Q)) == "0"
