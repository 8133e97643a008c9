"""Skein polynomials, collision counts, series, and the convolution relations."""

from fractions import Fraction

import pytest

from iterforge import (
    BadArity,
    IllFoundedRecursion,
    NonIntegralTerm,
    PowerSeries,
    SkeinPoly,
    all_terms,
    catalan,
    catalan_convolution,
    catalan_general,
    catalan_relative,
    collision_groups,
    convolution_relation_check,
    np_recursion_check,
    parse_word,
    series_mixed,
    skein,
    skein_q,
    weighted_recurrence,
)
from iterforge.polynomials import (
    count_trees_mixed,
    enumerate_trees_mixed,
    relation1_fit,
    relation2_check,
    relation3_estimate,
)

ONE = SkeinPoly({(0, 0): 1})

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


def test_skein_table_through_order_three():
    for word, coeffs in SKEIN_TABLE.items():
        assert skein(parse_word(word)) == SkeinPoly(coeffs), word


def test_skein_text_form():
    assert str(skein(parse_word("VVxxx"))) == "a^2 + a*b + b"
    assert str(skein(parse_word("VVxxVxx"))) == "a^2 + 2*a*b + b^2"
    assert str(SkeinPoly()) == "0"


def test_skein_homomorphism_rule():
    for n in range(1, 7):
        for t in all_terms(n):
            assert skein(t) == skein(t.left).times_a() + skein(t.right).times_b()


def test_skein_at_one_one_counts_variables():
    for n in range(9):
        for t in all_terms(n):
            assert skein(t).evaluate(1, 1) == n + 1


def test_skein_collapses_on_complement_line():
    for n in range(9):
        for t in all_terms(n):
            assert skein(t).substitute_b_complement() == (1,)


def test_q_polynomial_relation():
    assert skein_q(parse_word("x")) == SkeinPoly()
    assert skein_q(parse_word("Vxx")) == ONE
    for n in range(9):
        for t in all_terms(n):
            q = skein_q(t)
            assert q.times_a() + q.times_b() - q + ONE == skein(t)


def test_collision_groups(universe):
    for n in range(4):
        assert all(len(g) == 1 for g in collision_groups(universe, n).values())
    groups = collision_groups(universe, 4)
    shared = SkeinPoly({(2, 0): 1, (1, 1): 1, (2, 1): 1, (1, 2): 1, (0, 2): 1})
    assert groups[shared] == (4, 7)
    assert all(labels == (4, 7) for labels in groups.values() if len(labels) > 1)
    for n in range(1, 9):
        sizes = [len(g) for g in collision_groups(universe, n).values()]
        assert sum(sizes) == catalan(n)


def test_np_recursion(universe):
    for n in range(1, 8):
        assert np_recursion_check(universe, n)


# -- series ------------------------------------------------------------------


def test_power_series_arithmetic():
    a = PowerSeries((1, 2, 3))
    b = PowerSeries((0, 1, 0))
    assert (a + b).coeffs == (1, 3, 3)
    assert (a * b).coeffs == (0, 1, 2)
    assert a.power(2).coeffs == (1, 4, 10)
    assert a.shift().coeffs == (0, 1, 2)


def test_series_single_arity_matches_closed_form():
    for a in (2, 3, 4):
        phi = series_mixed([a], 12)
        for n in range(13):
            assert phi[n] == catalan_general(a, n), (a, n)
    assert series_mixed([2], 8).coeffs == tuple(catalan(n) for n in range(9))
    assert catalan_general(3, 3) == 12


def test_series_rejects_bad_arity():
    with pytest.raises(BadArity):
        series_mixed([1], 4)
    with pytest.raises(BadArity):
        catalan_general(1, 4)
    with pytest.raises(BadArity):
        series_mixed([], 4)


def test_mixed_arities_match_enumeration():
    phi = series_mixed([2, 3], 7)
    for n in range(7):
        trees = enumerate_trees_mixed((2, 3), n)
        assert len(set(trees)) == len(trees) == phi[n]
        assert count_trees_mixed((2, 3), n) == phi[n]
    assert len(enumerate_trees_mixed((2, 3), 7)) == phi[7]


def test_duplicate_arities_label_operations():
    # two binary operations: counts are 2^n times the single-operation counts
    phi = series_mixed([2, 2], 8)
    for n in range(9):
        assert phi[n] == 2**n * catalan(n)


# -- relative counting -------------------------------------------------------


def test_relative_sequence_reproduces_catalan():
    values = catalan_relative(lambda s, t: s + t + 1, {0: 1}, 8)
    assert values == [catalan(n) for n in range(9)]


def test_relative_sequence_sparse_law():
    values = catalan_relative(lambda s, t: s * s + t * t + 2, {0: 1}, 5)
    assert values[2] == 1
    assert values[3] == 0


def test_relative_sequence_zero_base():
    assert catalan_relative(lambda s, t: s + t + 1, {0: 0}, 5) == [0] * 6


def test_relative_sequence_rejects_ill_founded_law():
    with pytest.raises(IllFoundedRecursion):
        catalan_relative(lambda s, t: s + t, {0: 1}, 5)


def test_weighted_recurrence_non_integral():
    with pytest.raises(NonIntegralTerm) as caught:
        weighted_recurrence(1, 1, [1], 5)
    assert caught.value.n == 1
    with pytest.raises(ValueError):
        weighted_recurrence(1, 0, [1], 5)


def test_weighted_recurrence_report():
    terms = weighted_recurrence(2, 1, [1, 1], 10, strict=False)
    assert [t.value for t in terms[:3]] == [1, 1, Fraction(1, 3)]
    assert [t.integral for t in terms[:3]] == [True, True, False]
    assert len(terms) == 11
    for t in terms:
        assert t.integral == (t.value.denominator == 1)


# -- convolution relations ---------------------------------------------------


def test_convolution_base_case():
    for n in range(1, 16):
        assert catalan_convolution(1, n) == catalan(n)
    assert catalan_convolution(2, 2) == 1
    assert catalan_convolution(2, 5) == 28


def test_relation1_fitted_coefficients():
    for lam in range(1, 7):
        fit = relation1_fit(lam, 16)
        assert fit.matches_binomial_pattern, (lam, fit.coefficients)
    assert relation1_fit(4, 12).coefficients == (1, 3, 1)


def test_relation2():
    for lam in range(1, 6):
        assert relation2_check(lam, 14)


def test_relation3_limit():
    ratio, limit = relation3_estimate(2, 30)
    assert limit == Fraction(3, 4)
    assert abs(float(ratio / limit) - 1) < 0.02
    assert relation3_estimate(1, 25)[0] == 1  # lam=1 is the defining recursion
    for lam in (2, 3):
        near, far = relation3_estimate(lam, 40)[0], relation3_estimate(lam, 12)[0]
        target = Fraction(lam + 1, 2**lam)
        assert abs(float(near / target) - 1) < abs(float(far / target) - 1)


def test_convolution_report_bundle():
    report = convolution_relation_check(2, 30)
    assert report.convolution == catalan_convolution(2, 30)
    assert report.relation2_ok
    assert report.relation3_relative_error < 0.02
    with pytest.raises(ValueError):
        convolution_relation_check(5, 3)
