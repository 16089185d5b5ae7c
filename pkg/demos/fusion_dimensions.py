"""Dimension counting through the fusion ring.

The coinvariant dimensions satisfy a product rule in the level-k fusion
ring of sl2: insert one module per point, multiply, read off the pi_l
coefficient.  This script walks the small cases and checks the level-1
answers against the closed form 2^(N-1).
"""

from coinv.fusion import (
    dim_coinvariants,
    fuse_element,
    fuse_pair,
    fusion_matrix,
    mat_apply,
)


def show_products(k):
    print("level %d fusion products:" % k)
    for a in range(k + 1):
        for b in range(a, k + 1):
            parts = fuse_pair(a, b, k)
            rhs = " + ".join("pi_%d" % w for w in parts)
            print("  pi_%d * pi_%d = %s" % (a, b, rhs))
    print()


def dim_table(k, n_max):
    print("level %d, mode 'zero' (each point carries sum_x (x+1) pi_x):" % k)
    header = "  N  " + "".join("l=%d   " % l for l in range(k + 1))
    print(header)
    for n in range(1, n_max + 1):
        row = ["%3d " % n]
        for l in range(k + 1):
            row.append("%-6d" % dim_coinvariants(k, l, n, "zero"))
        print(" ".join(row))
    print()


if __name__ == "__main__":
    for k in (1, 2, 3):
        show_products(k)

    dim_table(1, 8)
    dim_table(2, 6)

    # level 1, mode "n": the dimensions collapse to powers of two
    print("level 1, mode 'n' vs 2^(N-1):")
    for n in range(1, 11):
        d0 = dim_coinvariants(1, 0, n, "n")
        d1 = dim_coinvariants(1, 1, n, "n")
        print("  N=%2d  l=0: %4d  l=1: %4d  2^(N-1) = %4d" % (n, d0, d1, 2 ** (n - 1)))
        assert d0 == d1 == 2 ** (n - 1)
    print()

    # one more step of the same recursion, written as a matrix acting on
    # the multiplicity vector: D[i][j] = sum_x (x+1) * (pi_x pi_j : pi_i)
    k = 2
    D = fusion_matrix(k)
    print("level %d dimension matrix D = %r" % (k, D))
    vec = [0] * (k + 1)
    vec[0] = 1
    for n in range(1, 5):
        vec = mat_apply(D, vec)
        direct = [dim_coinvariants(k, l, n, "zero") for l in range(k + 1)]
        print("  N=%d  D^N e_0 = %r  direct = %r" % (n, vec, direct))
        assert vec == direct
    print("matrix route agrees with the pointwise product.")
