"""Truncated current-algebra quotients W^{M,N}: characters, bases, recursions.

Everything is trigraded by (H1, H2, d): H1 counts e- and h-letters, H2 counts
f- and h-letters, d is the index sum.  Characters live in (q, z1, z2) with
q tracking d, z1 tracking H1, z2 tracking H2.  The parameter range is
M, N >= -1 with (M, N) != (-1, -1); for M = -1 or N = -1 the vacuum line at
bidegree (0, 0) is removed.
"""

from __future__ import annotations

from .laurent import LaurentPoly, TruncatedSeries, gauss_binomial, inv_qfactorial, substitute_scaled, truncate_var

QZZ = ("q", "z1", "z2")
QZ = ("q", "z")


def _check_mn(M, N):
    if M < -1 or N < -1 or (M, N) == (-1, -1):
        raise ValueError("need M, N >= -1 and not both -1")


_WCHAR_CACHE = {}


def w_character(M, N):
    """Closed-form character of W^{M,N} over (q, z1, z2):

        sum_{m,n} q^(m^2+n^2-mn) [M-m+n; m] [N-n+m; n] z1^m z2^n,

    with the vacuum term present only for M, N >= 0.
    """
    _check_mn(M, N)
    hit = _WCHAR_CACHE.get((M, N))
    if hit is not None:
        return hit
    total = LaurentPoly.zero(QZZ)
    if M >= 0 and N >= 0:
        total = total + 1
    for m in range(max(M, 0) + max(N, 0) + 2):
        for n in range(max(M, 0) + max(N, 0) + 2):
            if (m, n) == (0, 0):
                continue
            if 2 * m - n > M or 2 * n - m > N:
                continue
            left = gauss_binomial(M - m + n, m)
            right = gauss_binomial(N - n + m, n)
            if not left or not right:
                continue
            piece = left.embed(QZZ) * right.embed(QZZ)
            total = total + piece * LaurentPoly.monomial(QZZ, (m * m + n * n - m * n, m, n))
    _WCHAR_CACHE[(M, N)] = total
    return total


class EfWord:
    """One basis word e_{i_1}..e_{i_m} f_{j_1}..f_{j_n} applied to the vacuum."""

    __slots__ = ("i_seq", "j_seq")

    def __init__(self, i_seq, j_seq):
        self.i_seq = tuple(i_seq)
        self.j_seq = tuple(j_seq)

    def weight(self):
        """(d, H1, H2) exponent triple of the word."""
        return (sum(self.i_seq) + sum(self.j_seq), len(self.i_seq), len(self.j_seq))

    def __eq__(self, other):
        return isinstance(other, EfWord) and (self.i_seq, self.j_seq) == (other.i_seq, other.j_seq)

    def __hash__(self):
        return hash((self.i_seq, self.j_seq))

    def __repr__(self):
        return "EfWord(i=%r, j=%r)" % (self.i_seq, self.j_seq)


def _gapped_sequences(lo, hi, count):
    """Strictly decreasing sequences in [lo, hi] of given length with gaps >= 2."""
    if count == 0:
        yield ()
        return
    # first entry must leave room for count-1 more, each 2 lower
    for first in range(hi, lo + 2 * (count - 1) - 1, -1):
        for rest in _gapped_sequences(lo, first - 2, count - 1):
            yield (first,) + rest


def ef_basis(M, N):
    """Basis words for W^{M,N}, M, N >= 0: i-indices strictly below M with
    gaps >= 2 down to 1-n, j-indices strictly below N+m with gaps >= 2 down
    to 1.  Ordered by (m, n, i_seq, j_seq)."""
    if M < 0 or N < 0:
        raise ValueError("basis words need M, N >= 0")
    words = []
    for m in range(0, (M + N) + 2):
        for n in range(0, (M + N) + 2):
            if 2 * m - n > M or 2 * n - m > N:
                continue
            for i_seq in _gapped_sequences(1 - n, M - 1, m):
                for j_seq in _gapped_sequences(1, N + m - 1, n):
                    words.append(EfWord(i_seq, j_seq))
    words.sort(key=lambda w: (len(w.i_seq), len(w.j_seq), w.i_seq, w.j_seq))
    return words


def ef_character(M, N):
    """Character of the ef-basis: sum of q^(sum i + sum j) z1^m z2^n."""
    total = LaurentPoly.zero(QZZ)
    for w in ef_basis(M, N):
        total = total + LaurentPoly.monomial(QZZ, w.weight())
    return total


def check_recursions(M, N, which):
    """Verify one character recursion exactly; (ok, witness).

    which = "first":            ch W^{M,N} = q z2 ch W^{M+1,N-2}(q, z1/q, q^2 z2)
                                           + ch W^{M,N-1}(q, z1, q z2)
    which = "second-printed":   ch W^{M,N} = q z1 ch W^{M-2,N+1}(q, q^2 z1, z1/q)
                                           + ch W^{M-1,N}(q, q z1, z2)
    which = "second-corrected": same with third argument z2/q instead of z1/q.

    The witness on failure is (exponent tuple, lhs coefficient, rhs coefficient)
    for the first differing monomial in sorted order.
    """
    if which == "first":
        if M < -1 or N < 1:
            raise ValueError("first recursion needs M >= -1, N >= 1")
        part1 = w_character(M + 1, N - 2)
        part1 = substitute_scaled(part1, "z1", -1, "z1", 1)
        part1 = substitute_scaled(part1, "z2", 2, "z2", 1)
        part1 = part1.embed(QZZ) * LaurentPoly.monomial(QZZ, (1, 0, 1))
        part2 = substitute_scaled(w_character(M, N - 1), "z2", 1, "z2", 1).embed(QZZ)
    elif which in ("second-printed", "second-corrected"):
        if M < 1 or N < -1:
            raise ValueError("second recursion needs M >= 1, N >= -1")
        part1 = w_character(M - 2, N + 1)
        part1 = substitute_scaled(part1, "z1", 2, "z1", 1)
        target = "z1" if which == "second-printed" else "z2"
        part1 = substitute_scaled(part1, "z2", -1, target, 1)
        part1 = part1.embed(QZZ) * LaurentPoly.monomial(QZZ, (1, 1, 0))
        part2 = substitute_scaled(w_character(M - 1, N), "z1", 1, "z1", 1).embed(QZZ)
    else:
        raise ValueError("unknown recursion %r" % (which,))
    lhs = w_character(M, N)
    rhs = part1 + part2
    if lhs == rhs:
        return True, None
    diff = lhs - rhs
    exp = min(diff.terms)
    return False, (exp, lhs.coeff(exp), rhs.coeff(exp))


class FhWord:
    """One f-h family tuple; `a` is indexed from a_0 upward, `b` from b_1."""

    __slots__ = ("family", "N", "a", "b")

    def __init__(self, family, N, a, b):
        self.family = family
        self.N = N
        self.a = tuple(a)
        self.b = tuple(b)

    def a_at(self, i):
        return self.a[i] if 0 <= i < len(self.a) else 0

    def b_at(self, i):
        return self.b[i - 1] if 1 <= i <= len(self.b) else 0

    def weight(self):
        """(d, H1, H2) of the tau-monomial for this tuple."""
        if self.family == "C0":
            # a_i -> f_i (i >= 1), b_i -> h_i
            d = sum(i * (self.a_at(i) + self.b_at(i)) for i in range(1, self.N))
            h1 = sum(self.b)
            h2 = sum(self.a) + sum(self.b)
        elif self.family == "C1":
            # a_j -> f_{j-1} (j >= 1), b_i -> h_i, plus e_1^(1 - a_0)
            d = sum((j - 1) * self.a_at(j) for j in range(1, len(self.a)))
            d += sum(i * self.b_at(i) for i in range(1, len(self.b) + 1))
            d += 1 - self.a_at(0)
            h1 = sum(self.b) + (1 - self.a_at(0))
            h2 = (sum(self.a) - self.a_at(0)) + sum(self.b)
        elif self.family == "Cminus1":
            # a_j -> f_{j+1}, b_i -> h_i
            d = sum((j + 1) * self.a_at(j) for j in range(len(self.a)))
            d += sum(i * self.b_at(i) for i in range(1, len(self.b) + 1))
            h1 = sum(self.b)
            h2 = sum(self.a) + sum(self.b)
        else:
            raise ValueError("unknown family %r" % (self.family,))
        return (d, h1, h2)

    def __repr__(self):
        return "FhWord(%s, N=%d, a=%r, b=%r)" % (self.family, self.N, self.a, self.b)


def _triangle_tuples(a_top, b_top):
    """0/1 arrays a_0..a_{a_top}, b_1..b_{b_top} with every triangle sum <= 1:
    b_{i+1} + a_{i+1} + a_i <= 1 and b_{i+1} + b_i + a_i <= 1 (zeros beyond)."""
    out = []

    def step(i, a, b):
        if i > a_top:
            out.append((tuple(a), tuple(b)))
            return
        for ai in (0, 1):
            prev_a = a[i - 1] if i >= 1 else 0
            bi_choices = (0,) if i == 0 or i > b_top else (0, 1)
            for bi in bi_choices:
                if i >= 1:
                    prev_b = b[i - 2] if i >= 2 else 0
                    if bi + ai + prev_a > 1 or bi + prev_b + prev_a > 1:
                        continue
                if i == 0:
                    step(1, a + [ai], b)
                else:
                    step(i + 1, a + [ai], b + [bi])

    step(0, [], [])
    return out


def _right_neighbor_ok(a, b):
    # each b_i = 1 needs some a_j = 1 strictly to its right with no b between
    for i in range(1, len(b) + 1):
        if b[i - 1]:
            ok = False
            for j in range(i + 1, len(a)):
                if b[j - 1] if j <= len(b) else False:
                    break
                if a[j]:
                    ok = True
                    break
            if not ok:
                return False
    return True


def _leftmost_ok(a, b):
    # some a_j = 1 with every b_s (s <= j) zero
    for j in range(len(a)):
        if a[j]:
            if all(not b[s - 1] for s in range(1, min(j, len(b)) + 1)):
                return True
        # keep scanning: a later j may still satisfy the b-prefix condition
    return False


def fh_basis(family, N):
    """Tuples of the named family, sorted by (a, b).

    C0 (N >= 1):      slots a_0..a_{N-1} with a_0 = 0, b_1..b_{N-1};
                      triangle + right-neighbor rules;      2^(N-1) tuples.
    C1 (N >= 0):      slots a_0..a_N, b_1..b_N;
                      triangle + right-neighbor + leftmost; 2^N tuples.
    Cminus1 (N >= 2): the C1 tuples for N-2, reinterpreted; 2^(N-2) tuples.
    """
    if family == "C0":
        if N < 1:
            raise ValueError("C0 needs N >= 1")
        raw = _triangle_tuples(N - 1, N - 1)
        keep = [(a, b) for (a, b) in raw if a[0] == 0 and _right_neighbor_ok(a, b)]
        words = [FhWord("C0", N, a, b) for (a, b) in keep]
    elif family == "C1":
        if N < 0:
            raise ValueError("C1 needs N >= 0")
        raw = _triangle_tuples(N, N)
        keep = [
            (a, b) for (a, b) in raw
            if _right_neighbor_ok(a, b) and _leftmost_ok(a, b)
        ]
        words = [FhWord("C1", N, a, b) for (a, b) in keep]
    elif family == "Cminus1":
        if N < 2:
            raise ValueError("Cminus1 needs N >= 2")
        words = [FhWord("Cminus1", N, w.a, w.b) for w in fh_basis("C1", N - 2)]
    else:
        raise ValueError("unknown family %r" % (family,))
    words.sort(key=lambda w: (w.a, w.b))
    return words


def fh_character(family, N):
    """Character of the tau-monomials of one family over (q, z1, z2)."""
    total = LaurentPoly.zero(QZZ)
    for w in fh_basis(family, N):
        total = total + LaurentPoly.monomial(QZZ, w.weight())
    return total


def family_of(M):
    return {-1: "Cminus1", 0: "C0", 1: "C1"}[M]


def lkn_character(N, l):
    """Level-1 weight-l character of the length-N coinvariants over (q, z):

        l = 0: sum_s q^(s^2)   [N; 2s]   z^(-2s)
        l = 1: sum_s q^(s(s-1)) [N; 2s-1] z^(1-2s).
    """
    if N < 1:
        raise ValueError("N must be positive")
    if l not in (0, 1):
        raise ValueError("level 1 has weights 0 and 1")
    total = LaurentPoly.zero(QZ)
    s = 0 if l == 0 else 1
    while 2 * s - l <= N:
        bino = gauss_binomial(N, 2 * s - l)
        if bino:
            total = total + bino.embed(QZ) * LaurentPoly.monomial(QZ, (s * (s - l), l - 2 * s))
        s += 1
    return total


def lkn_from_w(N, l):
    """The same characters through the W-route: specialize w_character.

    l = 0: ch W^{0,N} at z1 = z^2, z2 = z^-2;
    l = 1: z^-1 ch W^{1,N-1} at z1 = z^2/q, z2 = q z^-2 (the z^-1 is the
    weight of the appended lowering operator).
    """
    if l == 0:
        p = w_character(0, N)
        p = substitute_scaled(p, "z1", 0, "z", 2)
        p = substitute_scaled(p, "z2", 0, "z", -2)
        return p.embed(QZ)
    p = w_character(1, N - 1)
    p = substitute_scaled(p, "z1", -1, "z", 2)
    p = substitute_scaled(p, "z2", 1, "z", -2)
    return p.embed(QZ) * LaurentPoly.monomial(QZ, (0, -1))


def full_w_character(cap):
    """Character of the untruncated space as a series up to q^cap:

        sum_{m,n} q^(m^2+n^2-mn) z1^m z2^n / ((q)_m (q)_n).
    """
    total = LaurentPoly.zero(QZZ)
    bound = 2 * cap + 2  # m^2 + n^2 - mn >= (m^2 + n^2)/2, so both stay small
    for m in range(bound):
        if m * m > 2 * cap:
            break
        for n in range(bound):
            pre = m * m + n * n - m * n
            if n >= m and pre > cap:
                break
            if pre > cap:
                continue
            piece = inv_qfactorial(m, cap).body * inv_qfactorial(n, cap).body
            piece = piece.embed(QZZ) * LaurentPoly.monomial(QZZ, (pre, m, n))
            total = total + piece
    return TruncatedSeries(cap, total)


def limit_character(l, cap):
    """Stable level-1 character as N -> infinity, up to q^cap:

        sum_s q^(s(s-l)) z^(l-2s) / (q)_{2s-l}.
    """
    if l not in (0, 1):
        raise ValueError("level 1 has weights 0 and 1")
    total = LaurentPoly.zero(QZ)
    s = 0 if l == 0 else 1
    while s * (s - l) <= cap:
        piece = inv_qfactorial(2 * s - l, cap).body
        total = total + piece.embed(QZ) * LaurentPoly.monomial(QZ, (s * (s - l), l - 2 * s))
        s += 1
    return TruncatedSeries(cap, total)
