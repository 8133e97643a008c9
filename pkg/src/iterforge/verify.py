"""One-shot verification harness: every table, formula, and classification
the engine is expected to reproduce, each as a named check.

Checks marked "report" record recomputed values next to hand-computed ones
that the engine does not confirm bit-for-bit; they never fail a run.  Checks
whose order requirement exceeds the requested bound are marked "skip".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import incidence, polynomials, semantics, tableaux, terms
from .errors import MalformedWord
from .incidence import MODE_A, MODE_AB
from .semantics import ClosureConfig, IdentitySpec
from .tableaux import Universe

PASS = "pass"
FAIL = "fail"
REPORT = "report"
SKIP = "skip"

BALLOT_TRIANGLE = {
    1: (1,),
    2: (1, 1),
    3: (2, 2, 1),
    4: (5, 5, 3, 1),
    5: (14, 14, 9, 4, 1),
    6: (42, 42, 28, 14, 5, 1),
    7: (132, 132, 90, 48, 20, 6, 1),
    8: (429, 429, 297, 165, 75, 27, 7, 1),
    9: (1430, 1430, 1001, 572, 275, 110, 35, 8, 1),
    10: (4862, 4862, 3432, 2002, 1001, 429, 154, 44, 9, 1),
}

CATALANS = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)

A_GOLD = {
    1: ((1,),),
    2: ((1,), (2,)),
    3: ((1, 2), (3, 4), (2, 5)),
    4: ((1, 2, 3, 4, 5), (6, 7, 8, 9, 10), (3, 4, 11, 12, 13), (2, 5, 7, 10, 14)),
    5: (
        (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14),
        (15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28),
        (6, 7, 8, 9, 10, 29, 30, 31, 32, 33, 34, 35, 36, 37),
        (3, 4, 11, 12, 13, 17, 18, 25, 26, 27, 38, 39, 40, 41),
        (2, 5, 7, 10, 14, 16, 19, 21, 24, 28, 30, 33, 37, 42),
    ),
}

B_GOLD = {
    1: ((1,), (1,)),
    2: ((1,), (2,)),
    3: ((1, 3), (4, 5)),
    4: ((1, 3, 6, 8, 11), (9, 10, 12, 13, 14)),
    5: (
        (1, 3, 6, 8, 11, 15, 17, 20, 22, 25, 29, 31, 34, 38),
        (23, 24, 26, 27, 28, 32, 33, 35, 36, 37, 39, 40, 41, 42),
    ),
}

MATRIX4_ROWS = {
    1: {1, 2, 3, 4, 5},
    2: {1, 2, 3, 4, 5, 7, 10, 14},
    3: {1, 2, 3, 4, 5, 11, 12, 13},
    4: {1, 2, 3, 4, 5, 11, 12, 13},
    5: {1, 2, 3, 4, 5, 7, 10, 14},
    6: {6, 7, 8, 9, 10},
    7: {2, 5, 6, 7, 8, 9, 10, 14},
    8: {6, 7, 8, 9, 10},
    9: {6, 7, 8, 9, 10},
    10: {2, 5, 6, 7, 8, 9, 10, 14},
    11: {3, 4, 11, 12, 13},
    12: {3, 4, 11, 12, 13},
    13: {3, 4, 11, 12, 13},
    14: {2, 5, 7, 10, 14},
}

ORDER3_TABLE = {
    (1, 2): ((4, 8, 16), (3, 5, 8)),
    (1, 3): ((4, 8, 16), (3, 5, 8)),
    (1, 4): ((4, 8, 16), (3, 4, 5)),
    (1, 5): ((4, 8, 14), (3, 4, 5)),
    (2, 3): ((4, 8, 14), (3, 4, 5)),
    (2, 4): ((4, 8, 14), (3, 4, 5)),
    (2, 5): ((4, 8, 16), (3, 5, 8)),
    (3, 4): ((4, 8, 16), (3, 4, 5)),
    (3, 5): ((4, 8, 16), (3, 4, 5)),
    (4, 5): ((4, 8, 16), (3, 5, 8)),
}

# hand-computed extension of the table; the recomputed column is reported
# next to these rather than asserted
ORDER3_TABLE_H67 = {
    (1, 2): (None, None), (1, 3): (None, None), (1, 4): (None, None),
    (1, 5): (20, 16), (2, 3): (20, 24), (2, 4): (20, 24),
    (2, 5): (None, None), (3, 4): (None, None), (3, 5): (None, None),
    (4, 5): (None, None),
}

SKEIN_TABLE = {
    "x": {(0, 0): 1},
    "Vxx": {(1, 0): 1, (0, 1): 1},
    "VVxxx": {(2, 0): 1, (1, 1): 1, (0, 1): 1},
    "VxVxx": {(1, 0): 1, (1, 1): 1, (0, 2): 1},
    "VVVxxxx": {(3, 0): 1, (2, 1): 1, (1, 1): 1, (0, 1): 1},
    "VVxxVxx": {(2, 0): 1, (1, 1): 2, (0, 2): 1},
    "VVxVxxx": {(2, 0): 1, (2, 1): 1, (1, 2): 1, (0, 1): 1},
    "VxVVxxx": {(1, 0): 1, (2, 1): 1, (1, 2): 1, (0, 2): 1},
    "VxVxVxx": {(1, 0): 1, (1, 1): 1, (1, 2): 1, (0, 3): 1},
}

CLOSURE_GOLDENS = {
    ("2=4", "A", 4): {
        (1,), (2, 4, 12), (3,), (5, 10), (6,), (7, 9), (8,), (11,), (13,), (14,),
    },
    ("2=4", "AB", 4): {
        (1,), (2, 4, 12), (3, 8), (5, 10, 13), (6,), (7, 9), (11,), (14,),
    },
    ("1=5", "AB", 4): {
        (1, 5, 11), (2, 9, 14), (3, 13), (4,), (6, 10), (7,), (8,), (12,),
    },
    ("1=5", "AB", 5): {
        (1, 5, 8, 11, 20, 24, 29, 33, 36, 40, 42), (2, 9, 14, 30), (3, 13, 22, 38),
        (4, 26, 41), (6, 10, 34), (7, 32, 37), (12,), (15, 19, 25),
        (16, 23, 28, 39), (17, 27), (18,), (21,), (31,), (35,),
    },
}


@dataclass
class Check:
    id: str
    description: str
    status: str
    expected: str
    computed: str


@dataclass
class VerifyReport:
    max_order: int
    closure_order: int
    checks: list[Check]

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def check_catalan_ballot_tables(universe, max_order, closure_order) -> Check:
    ok = tuple(terms.catalan(n) for n in range(11)) == CATALANS
    ok &= all(terms.ballot_row(n) == row for n, row in BALLOT_TRIANGLE.items())
    return Check(
        "catalan-ballot-tables",
        "counting sequence n<=10 and full triangle rows 1..10",
        _verdict(ok),
        f"row 10 = {BALLOT_TRIANGLE[10]}",
        f"row 10 = {terms.ballot_row(10)}",
    )


def check_tableau_goldens(universe, max_order, closure_order) -> Check:
    ok = all(universe.tableau_a(n).rows == gold for n, gold in A_GOLD.items())
    ok &= all(universe.tableau_b(n).rows == gold for n, gold in B_GOLD.items())
    ok &= all(universe.grid_aplusb(n) == A_GOLD[n] + B_GOLD[n] for n in (3, 4, 5))
    return Check(
        "tableau-goldens",
        "substitution and extension grids through order 5, cell for cell",
        _verdict(ok),
        "grids 1..5 and combined grids 3..5",
        "match" if ok else "MISMATCH",
    )


def check_incidence_goldens(universe, max_order, closure_order) -> Check:
    m3 = incidence.incidence_matrix(universe, 3, MODE_A)
    ok = m3.total() == 11
    ok &= [m3.row_sum(i) for i in range(1, 6)] == [2, 3, 2, 2, 2]
    m4 = incidence.incidence_matrix(universe, 4, MODE_A)
    ok &= m4.total() == 88
    for i in range(1, 15):
        ok &= {j for j in range(1, 15) if m4.entry(i, j)} == MATRIX4_ROWS[i]
        ok &= m4.row_sum(i) == (8 if universe.multiplicity(4, i) == 2 else 5)
    return Check(
        "incidence-goldens",
        "order-3 and order-4 matrices with their totals and row sums",
        _verdict(ok),
        "I_3=11, I_4=88, row sums 5/8 by multiplicity",
        f"I_3={m3.total()}, I_4={m4.total()}",
    )


def check_formula_vs_matrix(universe, max_order, closure_order) -> Check:
    top = min(9, max_order)
    pairs = [(n, incidence.i_n_formula(n), incidence.count_reducible(universe, n, MODE_A)) for n in range(3, top + 1)]
    ok = all(f == m for _, f, m in pairs)
    return Check(
        "closed-form-vs-brute-force",
        f"alternating closed form equals the matrix total for n=3..{top}",
        _verdict(ok),
        "formula = matrix sum at every order",
        "; ".join(f"n={n}: {f}/{m}" for n, f, m in pairs),
    )


def check_row_sum_theorem(universe, max_order, closure_order) -> Check:
    top = min(8, max_order)
    ok = True
    for n in range(1, top + 1):
        m = incidence.incidence_matrix(universe, n, MODE_A)
        for i in range(1, m.size + 1):
            ok &= m.row_sum(i) == incidence.row_sum_value(n, universe.multiplicity(n, i))
    return Check(
        "row-sum-theorem",
        f"row sums depend only on multiplicity, every row, n<={top}",
        _verdict(ok),
        "inclusion-exclusion value per multiplicity",
        "all rows agree" if ok else "MISMATCH",
    )


def check_multiplicity_histograms(universe, max_order, closure_order) -> Check:
    top = min(9, max_order)
    ok = True
    for n in range(1, top + 1):
        expected = {k: tableaux.t_nk(n, k) for k in range(1, (n + 1) // 2 + 1) if tableaux.t_nk(n, k)}
        ok &= universe.multiplicity_histogram(n) == expected
    identity_ok = True
    for n in range(1, 15):
        for k in range(1, (n + 1) // 2 + 1):
            lhs, rhs = tableaux.multiplicity_sum_identity(n, k)
            identity_ok &= lhs == rhs
    return Check(
        "multiplicity-histograms",
        f"histograms match the closed form n<={top}; binomial identity n<=14",
        _verdict(ok and identity_ok),
        "histogram = closed form; summed identity exact",
        f"histograms n<={top}: {'ok' if ok else 'MISMATCH'}; identity n<=14: {'ok' if identity_ok else 'MISMATCH'}",
    )


def check_frequency_trend(universe, max_order, closure_order) -> Check:
    rows = incidence.frequency_report(max(8, min(9, max_order)), universe if max_order >= 3 else None)
    windowed = [r for r in rows if 4 <= r.n <= 8]
    ok = all(a.one_minus_ratio > b.one_minus_ratio for a, b in zip(windowed, windowed[1:]))
    table = "; ".join(
        f"n={r.n}: 1-ratio={float(r.one_minus_ratio):.4f} vs e^-n/16={math.exp(-r.n / 16):.4f}"
        for r in rows
    )
    return Check(
        "frequency-trend",
        "irreducible share strictly decreasing for n=4..8, tabulated against e^(-n/16)",
        _verdict(ok),
        "strictly decreasing",
        table,
    )


def _closure_classes(universe, pair, mode, n, bound):
    state = semantics.close(IdentitySpec.of(3, pair), ClosureConfig(bound, mode, False), universe)
    return {tuple(c) for c in state.classes(n)}


def check_closure_goldens(universe, max_order, closure_order) -> Check:
    ok = _closure_classes(universe, (2, 4), "A", 4, 4) == CLOSURE_GOLDENS[("2=4", "A", 4)]
    ok &= _closure_classes(universe, (2, 4), "AB", 4, 4) == CLOSURE_GOLDENS[("2=4", "AB", 4)]
    ok &= _closure_classes(universe, (1, 5), "AB", 4, 5) == CLOSURE_GOLDENS[("1=5", "AB", 4)]
    ok &= _closure_classes(universe, (1, 5), "AB", 5, 5) == CLOSURE_GOLDENS[("1=5", "AB", 5)]
    return Check(
        "closure-goldens",
        "worked class partitions: 2=4 (10 and 8 classes), 1=5 (8 and 14 classes)",
        _verdict(ok),
        "exact set families",
        "match" if ok else "MISMATCH",
    )


def check_h_formulas(universe, max_order, closure_order) -> Check:
    ok = True
    for pair in combinations(range(1, 6), 2):
        state_a = semantics.close(IdentitySpec.of(3, pair), ClosureConfig(6, "A", False), universe)
        state_b = semantics.close(IdentitySpec.of(3, pair), ClosureConfig(6, "B", False), universe)
        for k in range(4):
            ok &= state_a.classnumber(3 + k) == semantics.h_formula_a(3, k)
            ok &= state_b.classnumber(3 + k) == semantics.h_formula_b(3, k)
    return Check(
        "classnumber-formulas",
        "substitution-only and extension-only classnumbers, all ten order-3 identities, k<=3",
        _verdict(ok),
        f"A: {[semantics.h_formula_a(3, k) for k in range(4)]}, B: {[semantics.h_formula_b(3, k) for k in range(4)]}",
        "all twenty closures agree" if ok else "MISMATCH",
    )


def check_order3_table(universe, max_order, closure_order) -> Check:
    ok = True
    for pair, (hs, single) in ORDER3_TABLE.items():
        state = semantics.close(IdentitySpec.of(3, pair), ClosureConfig(5, "AB", False), universe)
        ok &= tuple(state.classnumber(m) for m in (3, 4, 5)) == hs
        ok &= tuple(state.singleton_count(m) for m in (3, 4, 5)) == single
    return Check(
        "order3-classnumber-table",
        "classnumbers h_3..h_5 and singleton counts for all ten order-3 identities",
        _verdict(ok),
        "h rows 4/8/16 or 4/8/14; singletons 3/5/8 or 3/4/5",
        "table reproduced" if ok else "MISMATCH",
    )


def report_order3_table_extension(universe, max_order, closure_order) -> Check:
    lines = []
    for pair in sorted(ORDER3_TABLE_H67):
        state = semantics.close(IdentitySpec.of(3, pair), ClosureConfig(7, "AB", False), universe)
        h6, h7 = state.classnumber(6), state.classnumber(7)
        hand6, hand7 = ORDER3_TABLE_H67[pair]
        note = ""
        if hand6 is not None and (hand6, hand7) != (h6, h7):
            note = f" (hand-computed {hand6}/{hand7} not confirmed)"
        lines.append(f"{pair}: h6={h6} h7={h7}{note}")
    return Check(
        "order3-table-h6-h7",
        "recomputed h_6/h_7 column, including the anomalous drop at h_7",
        REPORT,
        "hand values 20/16 and 20/24 on the non-doubling rows",
        "; ".join(lines),
    )


def check_classification(universe, max_order, closure_order) -> Check:
    bound = closure_order
    verdicts = {
        pair: semantics.classify_identity(universe, 3, pair, bound)
        for pair in [(1, 4), (1, 5), (2, 3), (2, 4), (3, 5)]
    }
    ok = all(
        verdicts[p].kind == semantics.SEMANTICALLY_REDUCIBLE and verdicts[p].witness
        for p in [(1, 5), (2, 3), (2, 4)]
    )
    ok &= all(verdicts[p].kind == semantics.ESSENTIAL_UP_TO for p in [(1, 4), (3, 5)])
    chain = verdicts[(1, 5)].witness or ()
    ok &= (5, 8, 11) in chain and chain[-1] == (2, 1, 2)
    return Check(
        "classification-verdicts",
        f"order-3 verdicts under cancellation at bound {bound}, with witness chains",
        _verdict(ok),
        "1=5, 2=3, 2=4 semantically reducible; 1=4, 3=5 essential; 1=5 via 8~11 to 1~2",
        "; ".join(f"{p}: {v}" for p, v in sorted(verdicts.items())),
    )


def check_implication_pairs(universe, max_order, closure_order) -> Check:
    ok = True
    counts = []
    for n, k in [(3, 2), (4, 2), (5, 2), (4, 3), (5, 3), (5, 4)]:
        count, pairs = semantics.implication_pairs(universe, n, k)
        expected = (n - k + 1) * terms.catalan(n - k) * terms.catalan(k) * (terms.catalan(k) - 1) // 2
        ok &= count == expected
        counts.append(f"({n},{k})={count}")
        if (n, k) == (5, 2):
            ok &= (8, 11) in pairs
    return Check(
        "implication-pair-counts",
        "cancellation-cascade pair counts match the product formula; (8,11) listed",
        _verdict(ok),
        "(3,2)=2 (4,2)=6 (5,2)=20 (4,3)=20 (5,3)=60 (5,4)=182",
        " ".join(counts),
    )


def check_class_algebra(universe, max_order, closure_order) -> Check:
    state = semantics.close(IdentitySpec.of(3, (2, 4)), ClosureConfig(5, "AB", False), universe)
    ok = True
    try:
        for p in range(5):
            for q in range(5):
                if p + q + 1 > 5:
                    continue
                for cp in state.classes(p):
                    for cq in state.classes(q):
                        semantics.compose_classes(
                            universe,
                            state,
                            semantics.class_handle(state, p, cp[0]),
                            semantics.class_handle(state, q, cq[0]),
                        )
    except Exception:
        ok = False
    return Check(
        "class-algebra-well-defined",
        "induced composition independent of representatives, all orders p+q+1 <= 5, spec 2=4",
        _verdict(ok),
        "every representative pair lands in one class",
        "exhausted without scatter" if ok else "SCATTERED",
    )


def check_skein(universe, max_order, closure_order) -> Check:
    from .polynomials import SkeinPoly, collision_groups, np_recursion_check, skein

    ok = all(
        skein(terms.parse_word(word)) == SkeinPoly(coeffs)
        for word, coeffs in SKEIN_TABLE.items()
    )
    groups = collision_groups(universe, 4)
    shared = SkeinPoly({(2, 0): 1, (1, 1): 1, (2, 1): 1, (1, 2): 1, (0, 2): 1})
    ok &= groups.get(shared) == (4, 7)
    top = min(8, max_order)
    for n in range(top + 1):
        for t in terms.all_terms(n):
            ok &= skein(t).evaluate(1, 1) == n + 1
            ok &= skein(t).substitute_b_complement() == (1,)
    rec_top = min(7, max_order)
    ok &= all(np_recursion_check(universe, n) for n in range(1, rec_top + 1))
    return Check(
        "skein-polynomials",
        f"table through order 3; the (4,7) collision; evaluations order<={top}; collision recursion order<={rec_top}",
        _verdict(ok),
        "P(1,1)=n+1, complement line collapses to 1, recursion exact",
        "all checks hold" if ok else "MISMATCH",
    )


def check_generalized_catalan(universe, max_order, closure_order) -> Check:
    ok = True
    for a in (2, 3, 4):
        phi = polynomials.series_mixed([a], 12)
        ok &= all(phi[n] == polynomials.catalan_general(a, n) for n in range(13))
    phi23 = polynomials.series_mixed([2, 3], 7)
    for n in range(8):
        trees = polynomials.enumerate_trees_mixed((2, 3), n)
        ok &= len(set(trees)) == len(trees) == phi23[n]
    return Check(
        "generalized-catalan",
        "series iteration vs closed form (arity 2,3,4, n<=12) and vs tree enumeration ({2,3}, n<=7)",
        _verdict(ok),
        "coefficients equal on both comparisons",
        "match" if ok else "MISMATCH",
    )


def check_word_language(universe, max_order, closure_order) -> Check:
    ok = True
    for length in range(1, 14):
        for bits in range(1 << length):
            word = "".join("Vx"[(bits >> i) & 1] for i in range(length))
            try:
                terms.parse_word(word)
                parses = True
            except MalformedWord:
                parses = False
            if terms.validate_word_diophantine(word) != parses:
                ok = False
    code = terms.run_length_code(universe.catalog(5).word(11))
    ok &= code is not None and code.digits == "321113" and code.k == 3
    return Check(
        "word-language",
        "run-length validator agrees with the parser on all strings of length<=13",
        _verdict(ok),
        "exhaustive agreement; label 11 at order 5 encodes as 321113 with k=3",
        "agreement complete" if ok else "MISMATCH",
    )


def check_class_size_bounds(universe, max_order, closure_order) -> Check:
    ok = True
    for n in (3, 4):
        size = len(universe.catalog(n))
        for pair in combinations(range(1, size + 1), 2):
            state = semantics.close(IdentitySpec.of(n, pair), ClosureConfig(n, "AB", False), universe)
            report = semantics.unicity_bounds_check(universe, state)
            ok &= report.ok
    for pair in [(1, 4), (3, 5)]:
        state = semantics.close(IdentitySpec.of(3, pair), ClosureConfig(closure_order, "AB", True), universe)
        ok &= semantics.unicity_bounds_check(universe, state).ok
    return Check(
        "class-size-bounds",
        "classnumber >= S_(n-1) and some class of <= 3 members, all order-3 and order-4 identities",
        _verdict(ok),
        "bounds hold at the defining order",
        "all identities within bounds" if ok else "VIOLATION",
    )


def check_column_pairs(universe, max_order, closure_order) -> Check:
    survey = semantics.column_pair_survey(universe, 3, closure_order)
    ok = survey.column_pairs == ((1, 4), (3, 5))
    ok &= survey.essential_columns == ((1, 4), (3, 5))
    ok &= survey.essential_others == ()
    return Check(
        "column-pairs-order3",
        "the two extension-tableau columns are exactly the essential order-3 identities",
        _verdict(ok),
        "columns (1,4), (3,5) essential; all other irreducible pairs collapse",
        f"columns={survey.column_pairs}, essential others={survey.essential_others}",
    )


def report_column_pairs_order4(universe, max_order, closure_order) -> Check:
    survey = semantics.column_pair_survey(universe, 4, closure_order, include_others=True)
    verdicts = "; ".join(
        f"{pair}: {verdict}"
        for pair, verdict in zip(survey.column_pairs, survey.column_verdicts)
    )
    return Check(
        "column-pairs-order4",
        f"verdicts for the five order-4 column pairs at bound {closure_order}, "
        "plus which other irreducible identities survive",
        REPORT,
        "(1,9) (3,10) (6,12) (8,13) (11,14) conjectured essential",
        f"{verdicts}; essential non-columns: {survey.essential_others}",
    )


def report_order4_sample_formula(universe, max_order, closure_order) -> Check:
    survey = semantics.order4_formula_survey(universe, min(7, closure_order))
    through6 = survey.matching_through(min(6, survey.bound))
    named = survey.sequences.get((11, 14))
    return Check(
        "order4-sample-formula",
        "how many of the 91 order-4 identities follow the sample classnumber formula",
        REPORT,
        f"formula values {survey.expected}",
        f"full matches: {len(survey.full_matches)}; through order 6: {len(through6)}; "
        f"(11,14) computes {named}",
    )


def report_relation1_coefficients(universe, max_order, closure_order) -> Check:
    fits = [polynomials.relation1_fit(lam, 16) for lam in range(1, 7)]
    text = "; ".join(
        f"lam={f.lam}: {f.coefficients}{'' if f.matches_binomial_pattern else ' (off-pattern)'}"
        for f in fits
    )
    return Check(
        "convolution-relation-coefficients",
        "empirically fitted alternating coefficients of the convolution relation",
        REPORT,
        "coefficients C(lam-j, j)",
        text,
    )


def check_convolution_relations(universe, max_order, closure_order) -> Check:
    ok = all(polynomials.relation1_fit(lam, 16).matches_binomial_pattern for lam in range(1, 7))
    ok &= all(polynomials.relation2_check(lam, 14) for lam in range(1, 6))
    ratio, limit = polynomials.relation3_estimate(2, 30)
    ok &= abs(float(ratio / limit) - 1) < 0.02
    return Check(
        "convolution-relations",
        "fitted relation coefficients, triangle-weighted expansion, and the limit ratio",
        _verdict(ok),
        "fit consistent for lam<=6; expansion exact for lam<=5, n<=14; C(2,30)/S_30 within 2% of 3/4",
        f"C(2,30)/S_30 = {float(ratio):.6f}",
    )


# registry: (check id, function, minimum universe order it needs)
CHECKS = [
    ("catalan-ballot-tables", check_catalan_ballot_tables, 0),
    ("tableau-goldens", check_tableau_goldens, 5),
    ("incidence-goldens", check_incidence_goldens, 4),
    ("closed-form-vs-brute-force", check_formula_vs_matrix, 4),
    ("row-sum-theorem", check_row_sum_theorem, 3),
    ("multiplicity-histograms", check_multiplicity_histograms, 2),
    ("frequency-trend", check_frequency_trend, 3),
    ("closure-goldens", check_closure_goldens, 5),
    ("classnumber-formulas", check_h_formulas, 6),
    ("order3-classnumber-table", check_order3_table, 5),
    ("classification-verdicts", check_classification, 7),
    ("implication-pair-counts", check_implication_pairs, 5),
    ("class-algebra-well-defined", check_class_algebra, 5),
    ("skein-polynomials", check_skein, 4),
    ("generalized-catalan", check_generalized_catalan, 0),
    ("word-language", check_word_language, 5),
    ("class-size-bounds", check_class_size_bounds, 4),
    ("column-pairs-order3", check_column_pairs, 7),
    ("convolution-relations", check_convolution_relations, 0),
    ("order3-table-h6-h7", report_order3_table_extension, 7),
    ("column-pairs-order4", report_column_pairs_order4, 7),
    ("order4-sample-formula", report_order4_sample_formula, 7),
    ("convolution-relation-coefficients", report_relation1_coefficients, 0),
]


def run_verify(
    max_order: int = 9,
    closure_order: int = semantics.DEFAULT_CLOSURE_ORDER,
    universe: Universe | None = None,
) -> VerifyReport:
    """Run every check that fits within max_order; the rest are skipped."""
    closure_order = min(closure_order, max_order)
    if universe is None:
        universe = Universe(max_order)
    checks = []
    for check_id, func, minimum in CHECKS:
        if minimum > max_order:
            checks.append(
                Check(check_id, "requires higher order", SKIP, f"order >= {minimum}", f"bound {max_order}")
            )
            continue
        result = func(universe, max_order, closure_order)
        assert result.id == check_id
        checks.append(result)
    return VerifyReport(max_order, closure_order, checks)


def report_text(report: VerifyReport) -> str:
    lines = [f"verification at order bound {report.max_order}, closure bound {report.closure_order}"]
    for c in report.checks:
        lines.append(f"[{c.status.upper():<6}] {c.id}: {c.description}")
        lines.append(f"         expected: {c.expected}")
        lines.append(f"         computed: {c.computed}")
    passed = sum(1 for c in report.checks if c.status == PASS)
    lines.append(
        f"{passed} passed, {len(report.failed)} failed, "
        f"{sum(1 for c in report.checks if c.status == REPORT)} report-only, "
        f"{sum(1 for c in report.checks if c.status == SKIP)} skipped"
    )
    return "\n".join(lines)


def report_record(report: VerifyReport) -> dict:
    return {
        "max_order": report.max_order,
        "closure_order": report.closure_order,
        "ok": report.ok,
        "checks": [
            {
                "id": c.id,
                "description": c.description,
                "status": c.status,
                "expected": c.expected,
                "computed": c.computed,
            }
            for c in report.checks
        ],
    }
