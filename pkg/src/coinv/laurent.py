"""Sparse Laurent polynomials with exact integer coefficients.

Terms are kept in a dict mapping exponent tuples (one slot per variable,
negative exponents allowed) to nonzero Python ints, so every computation
downstream is exact.  The module also provides Gaussian binomials and the
truncated inverse q-factorial series on top of the same representation.
"""

from __future__ import annotations


class LaurentPoly:
    """A Laurent polynomial over a fixed ordered tuple of variable names.

    The term map is canonical: zero coefficients are never stored.  Values
    are treated as immutable; all arithmetic returns new objects.

    Example:
        >>> q = LaurentPoly.gen(("q", "z"), "q")
        >>> z = LaurentPoly.gen(("q", "z"), "z")
        >>> (q * z**-1 + z) ** 2
        LaurentPoly(('q', 'z'), {(0, 2): 1, (1, 0): 2, (2, -2): 1})
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            width = len(self.vars)
            for exp, coeff in terms.items():
                if len(exp) != width:
                    raise ValueError("exponent width %r does not match vars %r" % (exp, self.vars))
                if coeff:
                    clean[tuple(exp)] = clean.get(tuple(exp), 0) + coeff
                    if not clean[tuple(exp)]:
                        del clean[tuple(exp)]
        self.terms = clean

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def const(cls, vars, c):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): int(c)})

    @classmethod
    def one(cls, vars):
        return cls.const(vars, 1)

    @classmethod
    def monomial(cls, vars, exps, coeff=1):
        return cls(vars, {tuple(exps): coeff})

    @classmethod
    def gen(cls, vars, name, power=1):
        """The single variable `name` (to an optional power) as a polynomial."""
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = power
        return cls(vars, {tuple(exp): 1})

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("variable lists differ: %r vs %r" % (self.vars, other.vars))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == LaurentPoly.const(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        res = LaurentPoly(self.vars)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly(self.vars)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            res = LaurentPoly(self.vars)
            if other:
                res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        res = LaurentPoly(self.vars)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def coeff(self, exps):
        """Coefficient of the monomial with the given exponent tuple."""
        return self.terms.get(tuple(exps), 0)

    def evaluate(self, assignment):
        """Exact integer value with every variable set to an int (nonzero if
        any exponent is negative)."""
        vals = [assignment[v] for v in self.vars]
        total = 0
        for exp, c in self.terms.items():
            prod = c
            for v, e in zip(vals, exp):
                if e < 0:
                    if v in (1, -1):
                        prod *= v ** (-e)
                    else:
                        raise ValueError("negative exponent at non-unit value")
                else:
                    prod *= v ** e
            total += prod
        return total

    def at_ones(self):
        return sum(self.terms.values())

    def embed(self, new_vars):
        """Reinterpret over a variable list containing the current one."""
        new_vars = tuple(new_vars)
        pos = [new_vars.index(v) for v in self.vars]
        out = {}
        for exp, c in self.terms.items():
            new_exp = [0] * len(new_vars)
            for p, e in zip(pos, exp):
                new_exp[p] = e
            out[tuple(new_exp)] = c
        res = LaurentPoly(new_vars)
        res.terms = out
        return res

    def var_degree_range(self, name):
        """(min, max) exponent of the named variable, (0, 0) when zero."""
        i = self.vars.index(name)
        if not self.terms:
            return (0, 0)
        exps = [e[i] for e in self.terms]
        return (min(exps), max(exps))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return "LaurentPoly(%r, %r)" % (self.vars, dict(self.sorted_terms()))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append("%s^%d" % (v, e))
            if not factors:
                bits.append(str(c))
            elif c == 1:
                bits.append("*".join(factors))
            elif c == -1:
                bits.append("-" + "*".join(factors))
            else:
                bits.append("%d*%s" % (c, "*".join(factors)))
        out = " + ".join(bits)
        return out.replace("+ -", "- ")

    def to_json_dict(self):
        """Canonical serialization: terms sorted by exponent vector, decimal
        string coefficients (safe for arbitrary precision)."""
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_dict(cls, data):
        terms = {tuple(t["exp"]): int(t["coeff"]) for t in data["terms"]}
        return cls(tuple(data["vars"]), terms)


def truncate_var(p, name, cap):
    """Drop every term whose exponent of `name` exceeds cap."""
    i = p.vars.index(name)
    res = LaurentPoly(p.vars)
    res.terms = {e: c for e, c in p.terms.items() if e[i] <= cap}
    return res


def substitute_scaled(p, var, q_shift, target, sign_exp):
    """Substitute var -> q^q_shift * target^sign_exp.

    The variable `var` is removed from the list; `target` is appended if not
    already present.  A nonzero q_shift requires a variable literally named
    "q" in the list.
    """
    if var not in p.vars:
        raise ValueError("variable %r not in %r" % (var, p.vars))
    old = p.vars
    kept = [v for v in old if v != var]
    new_vars = tuple(kept) + (() if target in kept else (target,))
    if q_shift and "q" not in new_vars:
        raise ValueError("q_shift needs a variable named 'q'")
    vi = old.index(var)
    qi = new_vars.index("q") if q_shift else None
    ti = new_vars.index(target)
    src = [old.index(v) for v in kept]
    out = {}
    for exp, c in p.terms.items():
        k = exp[vi]
        new_exp = [exp[s] for s in src] + ([0] if target not in kept else [])
        new_exp[ti] += k * sign_exp
        if q_shift:
            new_exp[qi] += k * q_shift
        e = tuple(new_exp)
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    res = LaurentPoly(new_vars)
    res.terms = out
    return res


_QBIN_CACHE = {}


def gauss_binomial(m, n):
    """Gaussian binomial [m; n] as a polynomial in q.

    Zero unless 0 <= n <= m.  Coefficient of q^d counts partitions of d
    fitting in an n x (m-n) box.  Built by the q-Pascal recursion
    [m; n] = [m-1; n-1] + q^n [m-1; n].
    """
    key = (m, n)
    if key in _QBIN_CACHE:
        return _QBIN_CACHE[key]
    if n < 0 or n > m:
        res = LaurentPoly.zero(("q",))
    elif n == 0 or n == m:
        res = LaurentPoly.one(("q",))
    else:
        res = gauss_binomial(m - 1, n - 1) + LaurentPoly.gen(("q",), "q", n) * gauss_binomial(m - 1, n)
    _QBIN_CACHE[key] = res
    return res


class TruncatedSeries:
    """A q-power series kept exactly up to a degree cap.

    Wraps a LaurentPoly body together with the cap; addition and
    multiplication re-truncate, so caps must agree.
    """

    __slots__ = ("cap", "body")

    def __init__(self, cap, body):
        self.cap = cap
        self.body = truncate_var(body, "q", cap)

    def _check(self, other):
        if self.cap != other.cap:
            raise ValueError("caps differ: %d vs %d" % (self.cap, other.cap))

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(self.cap, self.body + other.body)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return TruncatedSeries(self.cap, self.body * other)
        self._check(other)
        return TruncatedSeries(self.cap, self.body * other.body)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.body == other.body

    def __repr__(self):
        return "TruncatedSeries(cap=%d, %r)" % (self.cap, self.body)


def inv_qfactorial(m, cap):
    """1/((1-q)(1-q^2)...(1-q^m)) as a TruncatedSeries up to q^cap.

    Coefficient of q^d counts partitions of d with parts <= m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    body = LaurentPoly.one(("q",))
    for part in range(1, m + 1):
        # geometric factor 1 + q^part + q^(2 part) + ... up to the cap
        factor = LaurentPoly(("q",), {(j,): 1 for j in range(0, cap + 1, part)})
        body = truncate_var(body * factor, "q", cap)
    return TruncatedSeries(cap, body)
