"""Level-k fusion ring for sl2 and the coinvariant dimension counts.

Weights live in 0..k.  The product of basis classes pi_l and pi_l' is the
multiplicity-free sum of pi_i over the truncated Clebsch-Gordan range, and
graded dimensions of the two coinvariant families are coefficients in powers
of fixed ring elements.
"""

from __future__ import annotations


def fuse_pair(l, l2, k):
    """Weights appearing in pi_l * pi_l2 at level k (each with multiplicity one).

    The range is |l-l2| <= i <= min(l+l2, 2k-l-l2) with i = l+l2 mod 2.
    """
    _check_weight(k, l)
    _check_weight(k, l2)
    top = min(l + l2, 2 * k - l - l2)
    return [i for i in range(abs(l - l2), top + 1, 2)]


def _check_weight(k, l):
    if not 0 <= l <= k:
        raise ValueError("weight %d out of range 0..%d" % (l, k))


def fuse_element(vec, l2, k):
    """Multiply a coefficient vector over weights 0..k by pi_l2."""
    out = [0] * (k + 1)
    for l, c in enumerate(vec):
        if c:
            for i in fuse_pair(l, l2, k):
                out[i] += c
    return out


def fusion_coefficient(ws, k):
    """Multiplicity of pi_0 in the product of pi_w over the list ws."""
    vec = [0] * (k + 1)
    vec[0] = 1
    for w in ws:
        vec = fuse_element(vec, w, k)
    return vec[0]


def dim_coinvariants(k, l, N, mode):
    """Graded dimension of the level-k weight-l coinvariant family of N points.

    mode "zero": coefficient of pi_l in (sum_x (x+1) pi_x)^N,
    mode "n":    coefficient of pi_l in (sum_x pi_x)^N.
    """
    _check_weight(k, l)
    if N < 1:
        raise ValueError("N must be positive")
    if mode not in ("zero", "n"):
        raise ValueError("mode must be 'zero' or 'n'")
    vec = [0] * (k + 1)
    vec[0] = 1
    for _ in range(N):
        stepped = [0] * (k + 1)
        for x in range(k + 1):
            w = (x + 1) if mode == "zero" else 1
            for i, c in enumerate(fuse_element(vec, x, k)):
                stepped[i] += w * c
        vec = stepped
    return vec[l]


def fusion_matrix(k):
    """The (k+1) x (k+1) recursion matrix D with

        D[l][l'] = (min(l, k-l') + 1) * (min(l', k-l) + 1),

    so that the "zero" dimensions satisfy d^(N+1)[l] = sum_l' D[l][l'] d^(N)[l'].
    """
    return [
        [(min(l, k - lp) + 1) * (min(lp, k - l) + 1) for lp in range(k + 1)]
        for l in range(k + 1)
    ]


def reduce_matrix(A, v, phi, groups):
    """Collapse equal-column index groups of the triple (phi, A, v).

    `groups` partitions range(n).  Within each group all phi entries must be
    equal and all columns of A must be equal; the reduced system keeps one
    representative index per group, with the representative's A-row and
    v-entry replaced by the group sums.  For every power m,
    phi . A^m . v is unchanged.  Returns (A', v', phi') ordered by
    representative index.
    """
    n = len(v)
    seen = sorted(i for g in groups for i in g)
    if seen != list(range(n)):
        raise ValueError("groups must partition the index range")
    groups = [sorted(g) for g in groups]
    groups.sort(key=lambda g: g[0])
    for g in groups:
        rep = g[0]
        for i in g[1:]:
            if phi[i] != phi[rep]:
                raise ValueError("phi entries differ inside group %r" % (g,))
            for r in range(n):
                if A[r][i] != A[r][rep]:
                    raise ValueError("columns %d and %d differ at row %d" % (rep, i, r))
    reps = [g[0] for g in groups]
    new_A = [[_sum_over(A, g, rep2) for rep2 in reps] for g in groups]
    new_v = [_vec_sum(v, g) for g in groups]
    new_phi = [phi[g[0]] for g in groups]
    return new_A, new_v, new_phi


def _sum_over(A, rows, col):
    total = A[rows[0]][col]
    for r in rows[1:]:
        total = total + A[r][col]
    return total


def _vec_sum(v, idxs):
    total = v[idxs[0]]
    for i in idxs[1:]:
        total = total + v[i]
    return total


def mat_apply(A, v):
    """A . v for a square matrix over any ring with + and *."""
    return [_dot(row, v) for row in A]


def _dot(row, v):
    total = row[0] * v[0]
    for a, b in zip(row[1:], v[1:]):
        total = total + a * b
    return total


def pairing_power(A, v, phi, m):
    """phi . A^m . v computed by repeated application."""
    w = list(v)
    for _ in range(m):
        w = mat_apply(A, w)
    return _dot(phi, w)
