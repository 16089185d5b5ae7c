"""Level-1 fermionic sum forms of the bigraded characters.

The quadratic form is built from D3 = [[2,1,0],[1,2,1],[0,1,2]]; the sum over
occupation vectors n = (n1, n2, n3) has finite support because each Gaussian
binomial vanishes outside its range.
"""

from __future__ import annotations

from .laurent import LaurentPoly, gauss_binomial
from .ehf import QZ, direct_character

D3 = ((2, 1, 0), (1, 2, 1), (0, 1, 2))


def c_vector(N, e):
    """The fermionic sum c(N, e) over (q, z) for a 0/1 offset vector e.

    c(N, e) = sum_n z^(2(n3-n1)) q^(n.D3.n/2 + e.n)
              prod_i [N + 1 - (D3 n - n + e)_i ; n_i].
    """
    if len(e) != 3 or any(x not in (0, 1) for x in e):
        raise ValueError("e must be a 0/1 vector of length 3")
    if N < 0:
        raise ValueError("N must be nonnegative")
    total = LaurentPoly.zero(QZ)
    for n1 in range(N + 2):
        for n2 in range(N + 2):
            for n3 in range(N + 2):
                n = (n1, n2, n3)
                shifted = (n1 + n2 + e[0], n1 + n2 + n3 + e[1], n2 + n3 + e[2])
                if any(not 0 <= n[i] <= N + 1 - shifted[i] for i in range(3)):
                    continue
                quad = n1 * n1 + n2 * n2 + n3 * n3 + n1 * n2 + n2 * n3
                lin = e[0] * n1 + e[1] * n2 + e[2] * n3
                piece = LaurentPoly.monomial(QZ, (quad + lin, 2 * (n3 - n1)))
                for i in range(3):
                    piece = piece * gauss_binomial(N + 1 - shifted[i], n[i]).embed(QZ)
                total = total + piece
    return total


def char_fermionic(N, l, offset=1):
    """Level-1 weight-l character of the length-N family in fermionic form.

    offset is the re-indexing (the c-argument is N - offset); the default 1
    is the value pinned by the verification suite.  l = 0 uses e = (0,0,0),
    l = 1 combines e = (0,0,1) and e = (1,1,1) with z-shifts.
    """
    if l not in (0, 1):
        raise ValueError("level 1 has weights 0 and 1")
    if N - offset < 0:
        raise ValueError("N - offset must be nonnegative")
    if l == 0:
        return c_vector(N - offset, (0, 0, 0))
    z = LaurentPoly.gen(QZ, "z")
    zinv = LaurentPoly.gen(QZ, "z", -1)
    return z * c_vector(N - offset, (0, 0, 1)) + zinv * c_vector(N - offset, (1, 1, 1))


def discover_offset(max_n):
    """The re-indexing offset in {0, 1} that matches direct enumeration for
    all N <= max_n and both weights, or None if neither does."""
    for offset in (0, 1):
        ok = True
        for N in range(1, max_n + 1):
            if N - offset < 0:
                ok = False
                break
            for l in (0, 1):
                if char_fermionic(N, l, offset) != direct_character(1, l, N):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return offset
    return None
