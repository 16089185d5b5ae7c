"""Admissible exponent words and their bigraded (q, z)-characters.

A word of length N records exponents a_0..a_{N-1}, b_1..b_{N-1}, c_1..c_{N-1}
(slots b_0, c_0 do not exist); indices beyond the arrays are zero.  The level
k and boundary weight l enter through the admissibility conditions

    (i)   a_i + a_{i+1} + b_{i+1} <= k          (i >= 0)
    (ii)  a_i + b_{i+1} + c_{i+1} <= k          (i >= 0)
    (iii) a_i + b_i + c_{i+1}     <= k          (i >= 1)
    (iv)  b_i + c_i + c_{i+1}     <= k          (i >= 1)
    (v)   a_0 <= l,  c_1 <= k - l.

Characters can be computed two independent ways: direct enumeration, or a
product of reduced transfer matrices indexed by pairs (a, m), 0 <= a <= m <= k.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .fusion import reduce_matrix

QZ = ("q", "z")


class EhfWord:
    """Exponent arrays of one admissible word, padded to a declared length."""

    __slots__ = ("k", "l", "a", "b", "c")

    def __init__(self, k, l, a, b, c):
        # a has entries a_0..a_{N-1}; b and c start at index 1, stored from b_1
        self.k = k
        self.l = l
        self.a = tuple(a)
        self.b = tuple(b)
        self.c = tuple(c)
        if len(self.b) != len(self.c) or len(self.a) != len(self.b) + 1:
            raise ValueError("array lengths must be N, N-1, N-1")

    @property
    def length(self):
        return len(self.a)

    def a_at(self, i):
        return self.a[i] if 0 <= i < len(self.a) else 0

    def b_at(self, i):
        return self.b[i - 1] if 1 <= i <= len(self.b) else 0

    def c_at(self, i):
        return self.c[i - 1] if 1 <= i <= len(self.c) else 0

    def key(self):
        return (self.a, self.b, self.c)

    def weight(self):
        """(q-degree, z-degree) of the word, including the z^l highest-weight shift."""
        qd = sum(i * (self.a_at(i) + self.b_at(i) + self.c_at(i)) for i in range(self.length))
        zd = self.l + 2 * sum(self.c_at(i) - self.a_at(i) for i in range(self.length))
        return (qd, zd)

    def __eq__(self, other):
        return isinstance(other, EhfWord) and (self.k, self.l) == (other.k, other.l) and self.key() == other.key()

    def __hash__(self):
        return hash((self.k, self.l, self.key()))

    def __repr__(self):
        return "EhfWord(k=%d, l=%d, a=%r, b=%r, c=%r)" % (self.k, self.l, self.a, self.b, self.c)


def is_ehf(word):
    """Check conditions (i)-(v) over the stored arrays (zeros beyond)."""
    k, l = word.k, word.l
    if not 0 <= l <= k:
        raise ValueError("weight l out of range 0..k")
    n = word.length
    if any(x < 0 for x in word.a + word.b + word.c):
        return False
    if word.a_at(0) > l or word.c_at(1) > k - l:
        return False
    for i in range(n + 1):
        if word.a_at(i) + word.a_at(i + 1) + word.b_at(i + 1) > k:
            return False
        if word.a_at(i) + word.b_at(i + 1) + word.c_at(i + 1) > k:
            return False
        if i >= 1:
            if word.a_at(i) + word.b_at(i) + word.c_at(i + 1) > k:
                return False
            if word.b_at(i) + word.c_at(i) + word.c_at(i + 1) > k:
                return False
    return True


def enumerate_ehf(k, l, N):
    """All admissible words of length <= N, sorted by flattened exponent arrays.

    Words are padded to length N; the DFS prunes with the adjacent-position
    conditions so the walk stays linear in the output size.
    """
    if not 0 <= l <= k:
        raise ValueError("weight l out of range 0..k")
    if N < 1:
        raise ValueError("N must be positive")
    words = []

    def extend(pos, a, b, c):
        if pos == N:
            words.append(EhfWord(k, l, a, b, c))
            return
        pa = a[pos - 1]
        pb = b[pos - 2] if pos >= 2 else 0
        pc = c[pos - 2] if pos >= 2 else 0
        for na in range(k + 1):
            if pa + na > k:
                break
            for nb in range(k + 1 - na):
                # (i) at pos-1 and the standalone bound a+b <= k
                if pa + na + nb > k:
                    break
                for nc in range(k + 1 - nb):
                    if pa + nb + nc > k:          # (ii) at pos-1
                        break
                    if pos == 1 and nc > k - l:   # (v) second half
                        break
                    if pos >= 2:
                        if pa + pb + nc > k:      # (iii) at pos-1
                            continue
                        if pb + pc + nc > k:      # (iv) at pos-1
                            continue
                    extend(pos + 1, a + [na], b + [nb], c + [nc])

    for a0 in range(min(l, k) + 1):
        extend(1, [a0], [], [])
    words.sort(key=EhfWord.key)
    return words


def count_ehf(k, l, N):
    """Number of admissible words of length <= N, via the transfer matrix at q=z=1."""
    if not 0 <= l <= k:
        raise ValueError("weight l out of range 0..k")
    if N < 1:
        raise ValueError("N must be positive")
    pairs = index_pairs(k)
    T = [
        [0 if ap + m > k else min(k - mp, m) + 1 for (ap, mp) in pairs]
        for (a, m) in pairs
    ]
    vec = [1 if mp == l else 0 for (ap, mp) in pairs]
    for _ in range(N - 1):
        vec = [sum(T[r][c] * vec[c] for c in range(len(pairs))) for r in range(len(pairs))]
    return sum(vec)


def index_pairs(k):
    """Transfer index set: pairs (a, m) with 0 <= a <= m <= k, lexicographic."""
    return [(a, m) for a in range(k + 1) for m in range(a, k + 1)]


def tilde_transfer(k, q_power=1):
    """Reduced transfer matrix over (q, z), with q taken to the given power.

    Entry at row (a, m), column (a', m') is zero when a' + m > k; otherwise
    q^m z^(-2a) times a geometric sum split by where k - m' falls against a
    and m.  All geometric sums are expanded to honest polynomials.
    """
    if k < 1:
        raise ValueError("level k must be positive")
    pairs = index_pairs(k)
    x = LaurentPoly.monomial(QZ, (q_power, 2))  # q^power z^2
    z2 = LaurentPoly.monomial(QZ, (0, 2))

    def geom(base, count):
        total = LaurentPoly.zero(QZ)
        term = LaurentPoly.one(QZ)
        for _ in range(count):
            total = total + term
            term = term * base
        return total

    rows = []
    for (a, m) in pairs:
        row = []
        for (ap, mp) in pairs:
            if ap + m > k:
                row.append(LaurentPoly.zero(QZ))
                continue
            if k - mp <= a:
                body = geom(x, k - mp + 1)
            elif k - mp <= m:
                body = geom(x, a) + x ** a * geom(z2, k - mp - a + 1)
            else:
                body = geom(x, a) + x ** a * geom(z2, m - a + 1)
            row.append(LaurentPoly.monomial(QZ, (q_power * m, -2 * a)) * body)
        rows.append(row)
    return rows


def transfer_product_row(k, N):
    """Top row of P(q^N) P(q^(N-1)) ... P(q), indexed like index_pairs(k).

    The top row of every factor is identically 1, so the N-th factor's row
    implements the final summation over the last position.
    """
    if N < 1:
        raise ValueError("N must be positive")
    pairs = index_pairs(k)
    dim = len(pairs)
    row = tilde_transfer(k, N)[0]
    for j in range(N - 1, 0, -1):
        P = tilde_transfer(k, j)
        row = [sum((row[r] * P[r][c] for r in range(dim)), LaurentPoly.zero(QZ)) for c in range(dim)]
    return row


def transfer_character(k, l, N):
    """Character of the length-N family by the transfer product.

    ch = sum_{0<=a<=l} z^(l-2a) (P(q^N) P(q^(N-1)) ... P(q))[(0,0), (a,l)].
    """
    if not 0 <= l <= k:
        raise ValueError("weight l out of range 0..k")
    pairs = index_pairs(k)
    row = transfer_product_row(k, N)
    total = LaurentPoly.zero(QZ)
    for a in range(l + 1):
        col = pairs.index((a, l))
        total = total + LaurentPoly.monomial(QZ, (0, l - 2 * a)) * row[col]
    return total


def direct_character(k, l, N):
    """Character by explicit enumeration: sum of q^deg z^weight over all words."""
    total = LaurentPoly.zero(QZ)
    for w in enumerate_ehf(k, l, N):
        total = total + LaurentPoly.monomial(QZ, w.weight())
    return total


def position_triples(k):
    """Exponent triples a position can carry: 0 <= a,b,c <= k with a+b <= k
    and b+c <= k, in lexicographic order."""
    return [
        (a, b, c)
        for a in range(k + 1)
        for b in range(k + 1 - a)
        for c in range(k + 1 - b)
    ]


def full_transfer(k, q_power=1):
    """Unreduced transfer matrix over position triples.

    Entry at row (a,b,c), column (a',b',c') is q^(power*(a+b+c)) z^(2(c-a))
    when a'+a+b <= k, a'+b+c <= k and max(a'+b', b'+c') + c <= k, else zero.
    Columns sharing (a', max(a'+b', b'+c')) are equal, which is what the
    reduction to tilde_transfer exploits.
    """
    triples = position_triples(k)
    rows = []
    for (a, b, c) in triples:
        row = []
        for (ap, bp, cp) in triples:
            mp = max(ap + bp, bp + cp)
            if ap + a + b <= k and ap + b + c <= k and mp + c <= k:
                row.append(LaurentPoly.monomial(QZ, (q_power * (a + b + c), 2 * (c - a))))
            else:
                row.append(LaurentPoly.zero(QZ))
        rows.append(row)
    return rows


def reduce_full_transfer(k, l, q_power=1):
    """Apply the equal-column reduction to the unreduced matrix.

    Returns (matrix, vector, phi) over the (a, m) pairs: phi all ones and the
    initial vector z^(l-2a') at m' = l encode the boundary conditions.
    Matches tilde_transfer entrywise (tested for small k).
    """
    triples = position_triples(k)
    P = full_transfer(k, q_power)
    ones = [LaurentPoly.one(QZ)] * len(triples)
    init = []
    for (a, b, c) in triples:
        if c == 0 and a + b == l:
            init.append(LaurentPoly.monomial(QZ, (0, l - 2 * a)))
        else:
            init.append(LaurentPoly.zero(QZ))
    buckets = {}
    for idx, (a, b, c) in enumerate(triples):
        buckets.setdefault((a, max(a + b, b + c)), []).append(idx)
    groups = [buckets[pair] for pair in index_pairs(k)]
    return reduce_matrix(P, init, ones, groups)
