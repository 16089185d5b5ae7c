"""Two routes to the same bigraded character.

Route one lists every admissible word and adds up q^degree z^weight.
Route two never sees a word: it multiplies N transfer matrices whose
entries are monomials, then reads one row.  The point of the demo is
that the two polynomials match coefficient for coefficient, and that
the transfer route keeps working long after enumeration gets slow.
"""

import time

from coinv.ehf import (
    count_ehf,
    direct_character,
    enumerate_ehf,
    index_pairs,
    tilde_transfer,
    transfer_character,
)


def print_poly(label, p):
    print("  %s = %s" % (label, p))


if __name__ == "__main__":
    k, l, N = 2, 1, 2

    words = enumerate_ehf(k, l, N)
    print("admissible words at k=%d, l=%d, N=%d (%d of them):" % (k, l, N, len(words)))
    for w in words:
        d, wt = w.weight()
        print("  %r  -> q^%d z^%d" % (w, d, wt))
    print()

    direct = direct_character(k, l, N)
    transfer = transfer_character(k, l, N)
    print_poly("direct  ", direct)
    print_poly("transfer", transfer)
    assert direct == transfer
    print("equal.\n")

    # the matrix behind route two, at level 1: rows and columns indexed by
    # pairs (a, m) with a <= m, entry zero when the admissibility gate
    # a' + m > k shuts
    pairs = index_pairs(1)
    P = tilde_transfer(1, 1)
    print("level 1 transfer matrix, index set %r:" % pairs)
    for r, row in enumerate(P):
        print("  %r: %s" % (pairs[r], "  ".join(str(e) for e in row)))
    print()

    # same character three ways at a bigger size, with timings
    k, l, N = 2, 2, 7
    t0 = time.perf_counter()
    direct = direct_character(k, l, N)
    t1 = time.perf_counter()
    transfer = transfer_character(k, l, N)
    t2 = time.perf_counter()
    assert direct == transfer
    assert direct.at_ones() == count_ehf(k, l, N)
    print("k=%d l=%d N=%d: %d words" % (k, l, N, count_ehf(k, l, N)))
    print("  enumeration %.1f ms, transfer %.1f ms" % ((t1 - t0) * 1e3, (t2 - t1) * 1e3))

    # enumeration cost grows with the word count, the transfer cost with N
    print("\ntransfer route alone, k=2 l=0:")
    for N in (10, 15, 20):
        t0 = time.perf_counter()
        ch = transfer_character(2, 0, N)
        t1 = time.perf_counter()
        print(
            "  N=%2d  %7d words, %4d monomials, %.1f ms"
            % (N, ch.at_ones(), len(ch.terms), (t1 - t0) * 1e3)
        )
