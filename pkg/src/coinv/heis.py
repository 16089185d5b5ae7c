"""Brute-force oracle for the current-algebra quotients.

The algebra has the single bracket [e_i, f_j] = h_{i+j} with h central.  The
induced module has PBW basis e-block h-block f-block applied to the vacuum,
all indices >= 1, exponents free.  Everything here is exact integer linear
algebra on small components; budgets are enforced so a typo cannot turn into
an hour of runtime.
"""

from __future__ import annotations

from collections import namedtuple


class BudgetError(Exception):
    """Raised when a requested component is outside the documented budget."""


# index multisets are kept sorted descending
NormalWord = namedtuple("NormalWord", ["e", "h", "f"])


def word(e=(), h=(), f=()):
    if any(i < 1 for part in (e, h, f) for i in part):
        raise ValueError("normal words carry indices >= 1 only")
    return NormalWord(tuple(sorted(e, reverse=True)), tuple(sorted(h, reverse=True)), tuple(sorted(f, reverse=True)))


def tri_degree(w):
    """(H1, H2, d) = (#e + #h, #f + #h, index sum)."""
    return (
        len(w.e) + len(w.h),
        len(w.f) + len(w.h),
        sum(w.e) + sum(w.h) + sum(w.f),
    )


class Vec:
    """Finite integer combination of normal words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    @classmethod
    def unit(cls, w):
        return cls({w: 1})

    def add_term(self, w, c):
        s = self.terms.get(w, 0) + c
        if s:
            self.terms[w] = s
        else:
            self.terms.pop(w, None)

    def __add__(self, other):
        out = Vec(dict(self.terms))
        for w, c in other.terms.items():
            out.add_term(w, c)
        return out

    def __sub__(self, other):
        out = Vec(dict(self.terms))
        for w, c in other.terms.items():
            out.add_term(w, -c)
        return out

    def scale(self, c):
        return Vec({w: c * x for w, x in self.terms.items()}) if c else Vec()

    def __eq__(self, other):
        return isinstance(other, Vec) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "Vec(%r)" % (dict(sorted(self.terms.items())),)


def _remove_one(part, idx):
    out = list(part)
    out.remove(idx)
    return tuple(out)


def _insert(part, idx):
    return tuple(sorted(part + (idx,), reverse=True))


def apply_generator(g, i, v):
    """Act by the generator g_i (g in 'e','h','f') on a Vec, straightened.

    e_i, i >= 1: joins the leading block directly.  e_i, i <= 0: commutes
    rightward past the f-block, each crossing of f_j leaving h_{i+j} (dropped
    when i + j <= 0), then kills the vacuum.  f_i: crossing the e-block costs
    -h_{i+j} per e_j; the survivor joins the f-block when i >= 1 and dies on
    the vacuum otherwise.  h_i: central; zero for i <= 0.
    """
    out = Vec()
    for w, c in v.terms.items():
        if g == "h":
            if i >= 1:
                out.add_term(NormalWord(w.e, _insert(w.h, i), w.f), c)
        elif g == "e":
            if i >= 1:
                out.add_term(NormalWord(_insert(w.e, i), w.h, w.f), c)
            else:
                for j in set(w.f):
                    if i + j >= 1:
                        mult = w.f.count(j)
                        out.add_term(
                            NormalWord(w.e, _insert(w.h, i + j), _remove_one(w.f, j)),
                            c * mult,
                        )
        elif g == "f":
            if i >= 1:
                out.add_term(NormalWord(w.e, w.h, _insert(w.f, i)), c)
            for j in set(w.e):
                if i + j >= 1:
                    mult = w.e.count(j)
                    out.add_term(
                        NormalWord(_remove_one(w.e, j), _insert(w.h, i + j), w.f),
                        -c * mult,
                    )
        else:
            raise ValueError("generator must be 'e', 'h' or 'f'")
    return out


def _partitions_exact(total, parts):
    """Weakly decreasing tuples of `parts` integers >= 1 summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return

    def rec(remaining, count, cap):
        if count == 0:
            if remaining == 0:
                yield ()
            return
        hi = min(cap, remaining - (count - 1))
        for first in range(hi, 0, -1):
            for rest in rec(remaining - first, count - 1, first):
                yield (first,) + rest

    yield from rec(total, parts, total)


_WORD_CACHE = {}


def component_words(m, n, d):
    """All normal words of tri-degree (m, n, d), deterministic order."""
    if m < 0 or n < 0 or d < 0:
        return []
    key = (m, n, d)
    hit = _WORD_CACHE.get(key)
    if hit is not None:
        return list(hit)
    out = []
    for t in range(min(m, n) + 1):
        ne, nf = m - t, n - t
        for de in range(d + 1):
            for dh in range(d - de + 1):
                df = d - de - dh
                for pe in _partitions_exact(de, ne):
                    for ph in _partitions_exact(dh, t):
                        for pf in _partitions_exact(df, nf):
                            out.append(NormalWord(pe, ph, pf))
    out.sort()
    _WORD_CACHE[key] = tuple(out)
    return out


def _min_degree(m, n):
    # a word with bidegree (m, n) has at least max(m, n) letters' worth of index sum
    return max(m, n)


# quadratic current labels with their (H1, H2) bidegrees
RELATION_TYPES = (
    ("e", "e", 2, 0),
    ("f", "f", 0, 2),
    ("e", "h", 2, 1),
    ("f", "h", 1, 2),
    ("h", "h", 2, 2),
)


def _current_coefficient(g1, g2, D, w):
    """sum over i + j = D of g1_i g2_j applied to the unit vector of w."""
    base = Vec.unit(w)
    maxf = w.f[0] if w.f else 0
    maxe = w.e[0] if w.e else 0
    jmin = {"e": 1 - maxf, "f": 1 - maxe, "h": 1}[g2]
    slack = {"e": maxf, "f": maxe, "h": 0}[g1]
    total = Vec()
    for j in range(jmin, D - 1 + slack + 1):
        inner = apply_generator(g2, j, base)
        if not inner:
            continue
        total = total + apply_generator(g1, D - j, inner)
    return total


_REL_CACHE = {}


def relation_space(m, n, d, extra=0):
    """Spanning vectors of the (m, n, d) component of the relation submodule.

    For each quadratic current and each z-coefficient D, the current
    coefficient is applied to every normal word of the complementary
    tri-degree.  Source words are enumerated up to degree d + 2 max(m,n) + 2;
    beyond that the new vectors are spanned by old ones (the span saturation
    is asserted by the test suite, and `extra` widens the window to check).
    """
    key = (m, n, d, extra)
    hit = _REL_CACHE.get(key)
    if hit is not None:
        return list(hit)
    out = []
    for (g1, g2, r1, r2) in RELATION_TYPES:
        wm, wn = m - r1, n - r2
        if wm < 0 or wn < 0:
            continue
        for dw in range(_min_degree(wm, wn), d + 2 * _min_degree(m, n) + 2 + extra):
            D = d - dw
            for w in component_words(wm, wn, dw):
                vec = _current_coefficient(g1, g2, D, w)
                if vec:
                    out.append(vec)
    _REL_CACHE[key] = tuple(out)
    return out


def exact_rank(rows):
    """Rank of an integer matrix by fraction-free elimination."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, len(mat)):
            if not any(mat[i][c:]):
                continue
            for j in range(c + 1, ncols):
                num = mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free step was not exact")
                mat[i][j] = q
            mat[i][c] = 0
        prev = mat[r][c]
        r += 1
        if r == len(mat):
            break
    return r


def _rows_from_vecs(vecs, basis):
    index = {w: i for i, w in enumerate(basis)}
    rows = []
    for v in vecs:
        row = [0] * len(basis)
        for w, c in v.terms.items():
            row[index[w]] = c
        rows.append(row)
    return rows


def relation_rank(m, n, d, extra=0):
    """Rank of the relation span inside the (m, n, d) word component."""
    basis = component_words(m, n, d)
    if not basis:
        return 0
    return exact_rank(_rows_from_vecs(relation_space(m, n, d, extra), basis))


DIM_BUDGET_MN = 4
DIM_BUDGET_D = 10


def _check_budget(m, n, d):
    if m + n > DIM_BUDGET_MN or d > DIM_BUDGET_D:
        raise BudgetError(
            "component (%d, %d, %d) outside budget m+n <= %d, d <= %d"
            % (m, n, d, DIM_BUDGET_MN, DIM_BUDGET_D)
        )


def pre_quotient_dim(m, n, d):
    """dim of the (m, n, d) component of the module modulo relations only."""
    _check_budget(m, n, d)
    basis = component_words(m, n, d)
    if not basis:
        return 0
    rows = _rows_from_vecs(relation_space(m, n, d), basis)
    return len(basis) - exact_rank(rows)


def w_component_dim(M, N, m, n, d):
    """dim of the (m, n, d) component of the (M, N) truncation.

    On top of the relations, images of the truncating generators are divided
    out: e_i (i >= M), f_j (j >= N) and the brackets h_s (s >= M + N), each
    applied to every word of the complementary tri-degree.  The vacuum line
    is removed at bidegree (0, 0) when M = -1 or N = -1.
    """
    if M < -1 or N < -1 or (M, N) == (-1, -1):
        raise ValueError("need M, N >= -1 and not both -1")
    if m < 0 or n < 0 or d < 0:
        raise ValueError("degrees must be nonnegative")
    _check_budget(m, n, d)
    basis = component_words(m, n, d)
    if not basis:
        return 0
    vecs = relation_space(m, n, d)
    if m >= 1:
        for i in range(M, d - _min_degree(m - 1, n) + 1):
            for w in component_words(m - 1, n, d - i):
                vecs.append(apply_generator("e", i, Vec.unit(w)))
    if n >= 1:
        for j in range(N, d - _min_degree(m, n - 1) + 1):
            for w in component_words(m, n - 1, d - j):
                vecs.append(apply_generator("f", j, Vec.unit(w)))
    if m >= 1 and n >= 1:
        for s in range(max(M + N, 1), d - _min_degree(m - 1, n - 1) + 1):
            for w in component_words(m - 1, n - 1, d - s):
                vecs.append(apply_generator("h", s, Vec.unit(w)))
    rows = _rows_from_vecs([v for v in vecs if v], basis)
    dim = len(basis) - exact_rank(rows)
    if (m, n) == (0, 0) and (M == -1 or N == -1):
        dim -= 1 if d == 0 else 0
    return dim


def _partitions_boxed(total, max_parts, max_part):
    """Number of partitions of `total` with at most max_parts parts, each
    <= max_part, by direct enumeration."""
    if total == 0:
        return 1
    if max_parts == 0 or max_part <= 0:
        return 0
    count = 0
    for first in range(min(total, max_part), 0, -1):
        count += _partitions_boxed(total - first, max_parts - 1, first)
    return count


def dual_dim(M, N, m, n, d):
    """Dimension of the (m, n, d) component counted through the dual space:
    pairs of partitions in the boxes m x (M-2m+n) and n x (N-2n+m) of joint
    size d - (m^2 + n^2 - mn).  The vacuum coefficient is zero when M = -1
    or N = -1.
    """
    if M < -1 or N < -1 or (M, N) == (-1, -1):
        raise ValueError("need M, N >= -1 and not both -1")
    if (m, n) == (0, 0):
        if M == -1 or N == -1:
            return 0
        return 1 if d == 0 else 0
    t = d - (m * m + n * n - m * n)
    if t < 0:
        return 0
    width1, width2 = M - 2 * m + n, N - 2 * n + m
    if (m >= 1 and width1 < 0) or (n >= 1 and width2 < 0):
        return 0
    total = 0
    for t1 in range(t + 1):
        c1 = _partitions_boxed(t1, m, width1) if m else (1 if t1 == 0 else 0)
        if not c1:
            continue
        c2 = _partitions_boxed(t - t1, n, width2) if n else (1 if t - t1 == 0 else 0)
        total += c1 * c2
    return total


def spanning_degree_counts(m, n, d_max):
    """Sizes by degree of the two-partition spanning family: pairs (alpha,
    beta) with at most m and n parts, |alpha| + |beta| = d - (m^2+n^2-mn)."""
    out = {}
    base = m * m + n * n - m * n
    for d in range(d_max + 1):
        t = d - base
        if t < 0:
            out[d] = 0
            continue
        total = 0
        for t1 in range(t + 1):
            c1 = _count_partitions_max_parts(t1, m)
            c2 = _count_partitions_max_parts(t - t1, n)
            total += c1 * c2
        out[d] = total
    return out


def _count_partitions_max_parts(total, max_parts):
    if total == 0:
        return 1
    if max_parts == 0:
        return 0
    count = 0

    def rec_parts(remaining, parts_left, cap):
        nonlocal count
        if remaining == 0:
            count += 1
            return
        if parts_left == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            rec_parts(remaining - part, parts_left - 1, part)

    rec_parts(total, max_parts, total)
    return count


def spanning_vector(alpha, beta):
    """The straightened vector for a pair of partitions (alpha with m parts,
    beta with n parts): apply f_{beta_j + 2(n-j) + 1} right-to-left, then
    e_{alpha_j + 2(m-j) + 1 - n} right-to-left (1-based j)."""
    m, n = len(alpha), len(beta)
    v = Vec.unit(word())
    for j in range(n, 0, -1):
        v = apply_generator("f", beta[j - 1] + 2 * (n - j) + 1, v)
    for j in range(m, 0, -1):
        v = apply_generator("e", alpha[j - 1] + 2 * (m - j) + 1 - n, v)
    return v


def spanning_vectors(m, n, d):
    """Straightened spanning vectors of tri-degree (m, n, d), one per pair of
    partitions with at most m and at most n parts (zero-padded) of joint size
    d - (m^2 + n^2 - mn).  The enumeration order matches
    spanning_degree_counts, so len(result) == spanning_degree_counts(m, n, d)[d]."""
    t = d - (m * m + n * n - m * n)
    out = []
    if t < 0:
        return out
    for t1 in range(t + 1):
        for r1 in range(m + 1):
            for alpha in _partitions_exact(t1, r1):
                padded_a = alpha + (0,) * (m - r1)
                for r2 in range(n + 1):
                    for beta in _partitions_exact(t - t1, r2):
                        padded_b = beta + (0,) * (n - r2)
                        out.append(spanning_vector(padded_a, padded_b))
    return out


def reorder_check(n, a, i, budget):
    """Verify that e_{-n-a} applied to any length-n f-monomial of degree i
    lands in the span of e_{1-n+b} applied to length-n f-monomials of degree
    i - b - a - 1, over b >= 0.  Returns True when every monomial passes."""
    if n < 1 or a < 0:
        raise ValueError("need n >= 1 and a >= 0")
    if i > budget or n > 3:
        raise BudgetError("reorder check limited to n <= 3, i <= budget")
    rhs_vecs = []
    b = 0
    while i - b - a - 1 >= n:
        for pf in _partitions_exact(i - b - a - 1, n):
            vec = apply_generator("e", 1 - n + b, Vec.unit(word(f=pf)))
            if vec:
                rhs_vecs.append(vec)
        b += 1
    support = sorted({w for v in rhs_vecs for w in v.terms})
    rows = _rows_from_vecs(rhs_vecs, support)
    base_rank = exact_rank(rows)
    for pf in _partitions_exact(i, n):
        lhs = apply_generator("e", -n - a, Vec.unit(word(f=pf)))
        if not lhs:
            continue
        if any(w not in support for w in lhs.terms):
            return False
        if exact_rank(rows + _rows_from_vecs([lhs], support)) != base_rank:
            return False
    return True


def straightened_pairing(word_indices, monomial_exponents):
    """Dual pairing of a symmetrized monomial against a straightened word:
    1 when the multisets of exponents match the word's index multisets."""
    (i_seq, j_seq) = word_indices
    (x_exps, y_exps) = monomial_exponents
    return 1 if sorted(i_seq) == sorted(x_exps) and sorted(j_seq) == sorted(y_exps) else 0
