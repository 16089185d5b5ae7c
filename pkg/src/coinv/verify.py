"""Cross-verification suite.

Every published identity is recomputed along at least two independent routes
and compared exactly.  A check that confirms a suspected misprint (the form
as printed fails, a corrected form passes) is reported with status "finding"
rather than "fail"; the calibration table records which corrected reading the
library uses.
"""

from __future__ import annotations

import random
import time

from . import ehf, fermi, fusion, heis, wspace
from .laurent import LaurentPoly, gauss_binomial, inv_qfactorial, truncate_var

SCHEMA = "coinv-report/1"

BOUNDS = {
    "quick": {
        "verlinde_n": 6,
        "enum_cases": ((1, 3), (2, 3), (3, 2)),
        "transfer_cases": ((1, 4), (2, 4), (3, 4)),
        "char_cases": ((1, 4), (2, 3)),
        "fermi_n": 5,
        "w_mn": 4,
        "fh_n": 6,
        "rec_mn": 5,
        "lkn_n": 6,
        "oracle_mn": 2,
        "oracle_bideg": 2,
        "oracle_d": 5,
        "reorder_a": 1,
        "reorder_i": 9,
        "stab_cap": 3,
        "stab_mn": 8,
        "stab_lkn_cap": 2,
        "stab_lkn_n": 10,
        "pascal_m": 12,
        "ring_trials": 10,
        "reduce_trials": 10,
        "fusion_trials": 15,
        "confluence_trials": 12,
        "saturation_points": ((2, 1, 5), (2, 2, 5)),
        "span_d": 5,
    },
    "full": {
        "verlinde_n": 12,
        "enum_cases": ((1, 5), (2, 5), (3, 3)),
        "transfer_cases": ((1, 8), (2, 8), (3, 8)),
        "char_cases": ((1, 6), (2, 4)),
        "fermi_n": 8,
        "w_mn": 6,
        "fh_n": 10,
        "rec_mn": 8,
        "lkn_n": 10,
        "oracle_mn": 3,
        "oracle_bideg": 3,
        "oracle_d": 8,
        "reorder_a": 2,
        "reorder_i": 12,
        "stab_cap": 4,
        "stab_mn": 10,
        "stab_lkn_cap": 3,
        "stab_lkn_n": 12,
        "pascal_m": 20,
        "ring_trials": 25,
        "reduce_trials": 25,
        "fusion_trials": 40,
        "confluence_trials": 30,
        "saturation_points": ((2, 1, 6), (2, 2, 6), (3, 1, 7)),
        "span_d": 8,
    },
}


def _first_diff(lhs, rhs):
    """JSON-able witness for the first differing monomial of two polynomials."""
    diff = lhs - rhs
    if not diff.terms:
        return None
    exp = min(diff.terms)
    return {"exp": list(exp), "lhs": str(lhs.coeff(exp)), "rhs": str(rhs.coeff(exp))}


def check_fusion_closed_form(b, calib):
    for N in range(1, b["verlinde_n"] + 1):
        for l in (0, 1):
            want = (3 ** N + (-1) ** (N + l)) // 2
            got = fusion.dim_coinvariants(1, l, N, "zero")
            if got != want:
                return "fail", {"mode": "zero", "l": l, "N": N, "got": got, "want": want}
            got = fusion.dim_coinvariants(1, l, N, "n")
            if got != 2 ** (N - 1):
                return "fail", {"mode": "n", "l": l, "N": N, "got": got, "want": 2 ** (N - 1)}
    return "pass", None


def check_count_vs_fusion(b, calib):
    for k, n_max in b["enum_cases"]:
        for l in range(k + 1):
            for N in range(1, n_max + 1):
                want = fusion.dim_coinvariants(k, l, N, "zero")
                got = len(ehf.enumerate_ehf(k, l, N))
                if got != want:
                    return "fail", {"route": "enumeration", "k": k, "l": l, "N": N, "got": got, "want": want}
    for k, n_max in b["transfer_cases"]:
        for l in range(k + 1):
            for N in range(1, n_max + 1):
                want = fusion.dim_coinvariants(k, l, N, "zero")
                got = ehf.count_ehf(k, l, N)
                if got != want:
                    return "fail", {"route": "transfer", "k": k, "l": l, "N": N, "got": got, "want": want}
    return "pass", None


def check_character_routes(b, calib):
    for k, n_max in b["char_cases"]:
        for l in range(k + 1):
            for N in range(1, n_max + 1):
                direct = ehf.direct_character(k, l, N)
                via_transfer = ehf.transfer_character(k, l, N)
                if direct != via_transfer:
                    return "fail", {"k": k, "l": l, "N": N, "diff": _first_diff(direct, via_transfer)}
    return "pass", None


def check_fermionic_forms(b, calib):
    delta = fermi.discover_offset(b["fermi_n"])
    if delta is None:
        return "fail", {"reason": "no offset in {0, 1} matches the enumeration characters"}
    calib["fermionic_offset"] = delta
    pairs = ehf.index_pairs(1)
    entry_targets = (((0, 0), (0, 0, 0)), ((0, 1), (0, 0, 1)), ((1, 1), (1, 1, 1)))
    for N in range(1, b["fermi_n"] + 1):
        for l in (0, 1):
            lhs = ehf.direct_character(1, l, N)
            rhs = fermi.char_fermionic(N, l, delta)
            if lhs != rhs:
                return "fail", {"l": l, "N": N, "diff": _first_diff(lhs, rhs)}
        row = ehf.transfer_product_row(1, N)
        for pair, evec in entry_targets:
            got = row[pairs.index(pair)]
            want = fermi.c_vector(N - delta, evec)
            if got != want:
                return "fail", {"entry": list(pair), "N": N, "diff": _first_diff(got, want)}
    return "pass", {"offset": delta}


def _fh_n_min(M):
    return {-1: 2, 0: 1, 1: 0}[M]


def check_w_basis_characters(b, calib):
    for M in range(0, b["w_mn"] + 1):
        for N in range(0, b["w_mn"] + 1):
            closed = wspace.w_character(M, N)
            from_basis = wspace.ef_character(M, N)
            if closed != from_basis:
                return "fail", {"basis": "ef", "M": M, "N": N, "diff": _first_diff(closed, from_basis)}
    for M in (-1, 0, 1):
        family = wspace.family_of(M)
        for N in range(_fh_n_min(M), b["fh_n"] + 1):
            words = wspace.fh_basis(family, N)
            if len(words) != 2 ** (M + N - 1):
                return "fail", {"basis": "fh", "M": M, "N": N, "count": len(words), "want": 2 ** (M + N - 1)}
            closed = wspace.w_character(M, N)
            from_basis = wspace.fh_character(family, N)
            if closed != from_basis:
                return "fail", {"basis": "fh", "M": M, "N": N, "diff": _first_diff(closed, from_basis)}
    return "pass", None


def check_w_recursions(b, calib):
    mn = b["rec_mn"]
    for M in range(-1, mn + 1):
        for N in range(1, mn + 1):
            ok, wit = wspace.check_recursions(M, N, "first")
            if not ok:
                return "fail", {"which": "first", "M": M, "N": N, "diff": {"exp": list(wit[0]), "lhs": str(wit[1]), "rhs": str(wit[2])}}
    printed_fail = None
    corrected_fail = None
    for M in range(1, mn + 1):
        for N in range(-1, mn + 1):
            if printed_fail is None:
                ok, wit = wspace.check_recursions(M, N, "second-printed")
                if not ok:
                    printed_fail = {"M": M, "N": N, "exp": list(wit[0]), "lhs": str(wit[1]), "rhs": str(wit[2])}
            if corrected_fail is None:
                ok, wit = wspace.check_recursions(M, N, "second-corrected")
                if not ok:
                    corrected_fail = {"M": M, "N": N, "exp": list(wit[0]), "lhs": str(wit[1]), "rhs": str(wit[2])}
    if corrected_fail is None and printed_fail is not None:
        calib["rec_second_variant"] = "corrected"
        return "finding", {"second": "corrected form holds uniformly; printed form fails", "printed_counterexample": printed_fail}
    if printed_fail is None and corrected_fail is not None:
        calib["rec_second_variant"] = "printed"
        return "pass", {"second": "printed form holds uniformly"}
    if printed_fail is None and corrected_fail is None:
        return "fail", {"second": "both variants hold; expected exactly one"}
    return "fail", {"second": "neither variant holds", "printed": printed_fail, "corrected": corrected_fail}


def _lkn_l1_printed(N):
    # closed form with the z-exponent exactly as displayed, for the witness
    total = LaurentPoly.zero(("q", "z"))
    s = 1
    while 2 * s - 1 <= N:
        qb = gauss_binomial(N, 2 * s - 1).embed(("q", "z"))
        total = total + qb * LaurentPoly.monomial(("q", "z"), (s * (s - 1), -2 * s - 1))
        s += 1
    return total


def check_lkn_characters(b, calib):
    for N in range(1, b["lkn_n"] + 1):
        ch0 = wspace.lkn_character(N, 0)
        via_w = wspace.lkn_from_w(N, 0)
        if ch0 != via_w:
            return "fail", {"l": 0, "N": N, "diff": _first_diff(ch0, via_w)}
        if ch0.at_ones() != 2 ** (N - 1):
            return "fail", {"l": 0, "N": N, "dim": ch0.at_ones(), "want": 2 ** (N - 1)}
        ch1 = wspace.lkn_character(N, 1)
        via_w = wspace.lkn_from_w(N, 1)
        if ch1 != via_w:
            return "fail", {"l": 1, "N": N, "diff": _first_diff(ch1, via_w)}
    printed_counterexample = None
    for N in range(1, b["lkn_n"] + 1):
        printed = _lkn_l1_printed(N)
        route = wspace.lkn_from_w(N, 1)
        if printed != route:
            printed_counterexample = {"N": N, "diff": _first_diff(printed, route)}
            break
    if printed_counterexample is None:
        return "fail", {"reason": "printed z-exponent variant unexpectedly matches the specialization route"}
    calib["l1_z_exponent"] = "z^(1-2s)"
    calib["d_relation_prefactor"] = "z^(-1)"
    return "finding", {
        "l1_exponent": "displayed z^(-2s-1) fails; z^(1-2s) matches the specialization route",
        "printed_counterexample": printed_counterexample,
        "prefactor": "specialization route needs an overall z^(-1) for the appended weight-lowering letter",
    }


def check_oracle_concordance(b, calib):
    mn, bideg, dmax = b["oracle_mn"], b["oracle_bideg"], b["oracle_d"]
    for M in range(-1, mn + 1):
        for N in range(-1, mn + 1):
            if (M, N) == (-1, -1):
                continue
            ch = wspace.w_character(M, N)
            for m in range(bideg + 1):
                for n in range(bideg + 1 - m):
                    for d in range(dmax + 1):
                        want = ch.coeff((d, m, n))
                        prim = heis.w_component_dim(M, N, m, n, d)
                        if prim != want:
                            return "fail", {"route": "row-reduction", "M": M, "N": N, "m": m, "n": n, "d": d, "got": prim, "want": want}
                        dual = heis.dual_dim(M, N, m, n, d)
                        if dual != want:
                            return "fail", {"route": "partition-count", "M": M, "N": N, "m": m, "n": n, "d": d, "got": dual, "want": want}
    if heis.w_component_dim(1, 1, 0, 0, 0) != 1 or heis.w_component_dim(1, 1, 1, 1, 1) != 1:
        return "fail", {"route": "pinned-example", "M": 1, "N": 1}
    return "pass", None


def check_reorder_identity(b, calib):
    for n in (1, 2, 3):
        for a in range(b["reorder_a"] + 1):
            for i in range(n, b["reorder_i"] + 1):
                if not heis.reorder_check(n, a, i, b["reorder_i"]):
                    return "fail", {"n": n, "a": a, "i": i}
    return "pass", None


def check_stabilization(b, calib):
    cap, big = b["stab_cap"], b["stab_mn"]
    series = wspace.full_w_character(cap)
    finite = truncate_var(wspace.w_character(big, big), "q", cap)
    if series.body != finite:
        return "fail", {"which": "two-variable", "diff": _first_diff(series.body, finite)}
    lcap, ln = b["stab_lkn_cap"], b["stab_lkn_n"]
    for l in (0, 1):
        lim = wspace.limit_character(l, lcap)
        finite = truncate_var(wspace.lkn_character(ln, l), "q", lcap)
        if lim.body != finite:
            return "fail", {"which": "weight-%d" % l, "diff": _first_diff(lim.body, finite)}
    return "pass", None


def _random_poly(rng, nvars=2):
    vars_ = ("q", "z")[:nvars]
    p = LaurentPoly.zero(vars_)
    for _ in range(rng.randint(0, 4)):
        exp = tuple(rng.randint(-3, 3) for _ in vars_)
        p = p + LaurentPoly.monomial(vars_, exp) * rng.randint(-5, 5)
    return p


def _random_reduction_instance(rng):
    """A matrix satisfying the reduction hypotheses: phi constant on groups,
    columns equal within groups; returns (A, v, phi, groups)."""
    sizes = [rng.randint(1, 3) for _ in range(rng.randint(1, 3))]
    groups = []
    start = 0
    for s in sizes:
        groups.append(list(range(start, start + s)))
        start += s
    dim = start
    rep_cols = {g[0]: [rng.randint(-4, 4) for _ in range(dim)] for g in groups}
    col_of = {}
    for g in groups:
        for j in g:
            col_of[j] = rep_cols[g[0]]
    A = [[col_of[j][i] for j in range(dim)] for i in range(dim)]
    v = [rng.randint(-4, 4) for _ in range(dim)]
    phi_group = [rng.randint(-4, 4) for _ in groups]
    phi = [0] * dim
    for gi, g in enumerate(groups):
        for j in g:
            phi[j] = phi_group[gi]
    return A, v, phi, groups


def check_property_suites(b, calib):
    rng = random.Random(20250819)
    if gauss_binomial(0, 0) != LaurentPoly.one(("q",)):
        return "fail", {"property": "q-binomial-base"}
    for m in range(1, b["pascal_m"] + 1):
        for n in range(m + 1):
            lhs = gauss_binomial(m, n)
            qn = LaurentPoly.gen(("q",), "q", n)
            qmn = LaurentPoly.gen(("q",), "q", m - n)
            if lhs != gauss_binomial(m - 1, n - 1) + qn * gauss_binomial(m - 1, n):
                return "fail", {"property": "q-pascal-first", "m": m, "n": n}
            if lhs != gauss_binomial(m - 1, n) + qmn * gauss_binomial(m - 1, n - 1):
                return "fail", {"property": "q-pascal-second", "m": m, "n": n}
            if lhs.at_ones() != _binom(m, n):
                return "fail", {"property": "q-binomial-at-1", "m": m, "n": n}
            deg = n * (m - n)
            if any(lhs.coeff((d,)) != lhs.coeff((deg - d,)) for d in range(deg + 1)):
                return "fail", {"property": "palindromic", "m": m, "n": n}
    for m in range(7):
        series = inv_qfactorial(m, 12)
        poly = LaurentPoly.one(("q",))
        for i in range(1, m + 1):
            poly = poly * (LaurentPoly.one(("q",)) - LaurentPoly.gen(("q",), "q", i))
        if (series * poly).body != LaurentPoly.one(("q",)):
            return "fail", {"property": "inv-qfactorial-inverse", "m": m}
    for t in range(b["ring_trials"]):
        a, bb, c = (_random_poly(rng) for _ in range(3))
        if (a + bb) * c != a * c + bb * c or a * bb != bb * a or (a * bb) * c != a * (bb * c):
            return "fail", {"property": "ring-axioms", "trial": t}
    for t in range(b["reduce_trials"]):
        A, v, phi, groups = _random_reduction_instance(rng)
        Ar, vr, phir = fusion.reduce_matrix(A, v, phi, groups)
        for power in range(4):
            if fusion.pairing_power(A, v, phi, power) != fusion.pairing_power(Ar, vr, phir, power):
                return "fail", {"property": "matrix-reduction", "trial": t, "power": power}
    for t in range(b["fusion_trials"]):
        k = rng.randint(1, 4)
        l1, l2, l3 = (rng.randint(0, k) for _ in range(3))
        if fusion.fuse_pair(l1, l2, k) != fusion.fuse_pair(l2, l1, k):
            return "fail", {"property": "fusion-commutativity", "k": k, "ls": [l1, l2]}
        left = fusion.fuse_element(_weight_vector(fusion.fuse_pair(l1, l2, k), k), l3, k)
        right = fusion.fuse_element(_weight_vector(fusion.fuse_pair(l2, l3, k), k), l1, k)
        if left != right:
            return "fail", {"property": "fusion-associativity", "k": k, "ls": [l1, l2, l3]}
    for t in range(b["confluence_trials"]):
        base = heis.word(
            e=tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 2))),
            h=tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 1))),
            f=tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 2))),
        )
        vec = heis.Vec.unit(base)
        i = rng.randint(-3, 3)
        j = rng.randint(-3, 3)
        lhs = heis.apply_generator("e", i, heis.apply_generator("f", j, vec))
        rhs = heis.apply_generator("f", j, heis.apply_generator("e", i, vec)) + heis.apply_generator("h", i + j, vec)
        if lhs != rhs:
            return "fail", {"property": "straightening-bracket", "word": repr(base), "i": i, "j": j}
    for (m, n, d) in b["saturation_points"]:
        if heis.relation_rank(m, n, d) != heis.relation_rank(m, n, d, extra=3):
            return "fail", {"property": "relation-span-saturation", "component": [m, n, d]}
    for m in range(4):
        for n in range(4 - m):
            counts = heis.spanning_degree_counts(m, n, b["span_d"])
            for d in range(b["span_d"] + 1):
                vecs = heis.spanning_vectors(m, n, d)
                dim = heis.pre_quotient_dim(m, n, d)
                if len(vecs) != counts[d] or len(vecs) != dim:
                    return "fail", {"property": "spanning-cardinality", "component": [m, n, d],
                                    "count": len(vecs), "dim": dim}
                basis = heis.component_words(m, n, d)
                rows = heis._rows_from_vecs(heis.relation_space(m, n, d) + vecs, basis)
                if heis.exact_rank(rows) != len(basis):
                    return "fail", {"property": "spanning-rank", "component": [m, n, d]}
    ok, detail = _cli_determinism()
    if not ok:
        return "fail", {"property": "cli-determinism", "detail": detail}
    return "pass", None


def _weight_vector(weights, k):
    vec = [0] * (k + 1)
    for w in weights:
        vec[w] += 1
    return vec


def _binom(m, n):
    if n < 0 or n > m:
        return 0
    out = 1
    for i in range(n):
        out = out * (m - i) // (i + 1)
    return out


def _cli_determinism():
    import contextlib
    import io

    from . import cli

    invocations = (
        ["verlinde", "dim", "--k", "1", "--l", "0", "--N", "4"],
        ["w", "char", "--M", "2", "--N", "2", "--format", "json"],
        ["ehf", "char", "--k", "1", "--l", "1", "--N", "3", "--format", "csv"],
    )
    for argv in invocations:
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                code = cli.main(list(argv))
            if code != 0:
                return False, {"argv": argv, "exit": code}
            outs.append(buf.getvalue())
        if outs[0] != outs[1]:
            return False, {"argv": argv, "reason": "outputs differ between runs"}
    return True, None


CHECKS = (
    ("fusion-closed-form", "level-1 coinvariant dimensions match the closed forms (3^N +/- 1)/2 and 2^(N-1)", check_fusion_closed_form),
    ("count-vs-fusion", "admissible-word counts equal fusion-ring dimensions, by enumeration and by transfer matrix", check_count_vs_fusion),
    ("character-routes", "transfer-matrix characters equal enumeration characters term by term", check_character_routes),
    ("fermionic-forms", "fermionic q-binomial characters match enumeration; per-entry product identities hold", check_fermionic_forms),
    ("w-basis-characters", "ef- and fh-basis characters match the closed two-variable character; fh count is 2^(M+N-1)", check_w_basis_characters),
    ("w-recursions", "two-variable character recursions; the second one calibrated against its misprint", check_w_recursions),
    ("lkn-characters", "weight-l closed forms match the specialized two-variable route; z-exponent calibrated", check_lkn_characters),
    ("oracle-concordance", "row-reduction and partition-count dimensions match character coefficients everywhere", check_oracle_concordance),
    ("reorder-identity", "nonpositive-mode reordering identity for f-monomial vectors", check_reorder_identity),
    ("stabilization", "finite characters stabilize to the limiting series coefficientwise", check_stabilization),
    ("property-suites", "q-Pascal, ring axioms, matrix reduction, fusion algebra, straightening, CLI determinism", check_property_suites),
)


def run_suite(suite="quick"):
    """Run every check; returns the JSON-able report dictionary."""
    if suite not in BOUNDS:
        raise ValueError("suite must be 'quick' or 'full'")
    b = BOUNDS[suite]
    calibrations = {}
    records = []
    for check_id, anchor, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            status, witness = fn(b, calibrations)
        except Exception as exc:
            status, witness = "fail", {"error": repr(exc)}
        elapsed = int((time.perf_counter() - t0) * 1000)
        records.append({
            "id": check_id,
            "anchor": anchor,
            "status": status,
            "witness": witness,
            "elapsed-ms": elapsed,
        })
    ok = all(rec["status"] != "fail" for rec in records)
    return {
        "schema": SCHEMA,
        "suite": suite,
        "ok": ok,
        "checks": records,
        "calibrations": calibrations,
    }
