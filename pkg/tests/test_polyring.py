from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hessberg.errors import InternalError
from hessberg.polyring import (Derivation, Polynomial, TruncatedSeries, apply_operator,
                               divided_difference, divided_difference_word, evaluate_at, linear_form,
                               monomials, one_minus_exp, reflect, root_product, weight_form)
from hessberg.rootsys import Weight

from conftest import system

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polys(nvars=2, max_deg=3):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(exps, coeff, max_size=5).map(lambda d: Polynomial(nvars, d))


@given(polys(), polys(), polys())
@settings(max_examples=80, deadline=None)
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == Polynomial(2, {})
    assert f * g == g * f


@given(polys(), st.lists(coeff, min_size=2, max_size=2), st.lists(coeff, min_size=2, max_size=2))
@settings(max_examples=60, deadline=None)
def test_evaluation_is_a_homomorphism(f, p, q):
    g = f * f + f
    assert g.evaluate(p) == f.evaluate(p) ** 2 + f.evaluate(p)


@given(polys(), polys())
@settings(max_examples=40, deadline=None)
def test_substitute_matches_evaluation(f, g):
    pt = [Fraction(2), Fraction(-1, 3)]
    sub = f.substitute(0, g)
    assert sub.evaluate(pt) == f.evaluate([g.evaluate(pt), pt[1]])


def test_monomials_degree_lex():
    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials(3, 4)) == 15


def test_peterson_derivative():
    rs = system("A2")
    full = root_product(rs, rs.positive_roots)
    p = Derivation(rs, (1, 1))(full)
    a1, a2 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    assert p == a1 * a1 + a1 * a2 * 4 + a2 * a2


def test_derivation_on_forms():
    rs = system("A2")
    assert Derivation(rs, (1, 0))(linear_form(rs, (1, 0))) == Polynomial.constant(2, 2)
    assert Derivation(rs, (1, 0))(weight_form(rs, Weight((1, 0)))) == Polynomial.constant(2, 1)


def test_evaluate_at_rho():
    rs = system("A2")
    assert evaluate_at(rs, root_product(rs, rs.simple_roots), rs.rho_weight) == 1


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_nil_hecke_relations(label):
    rs = system(label)
    f = root_product(rs, rs.positive_roots) * linear_form(rs, (1,) * rs.rank)
    for i in range(rs.rank):
        assert divided_difference(rs, i, divided_difference(rs, i, f)).is_zero()
        assert reflect(rs, i, reflect(rs, i, f)) == f
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            m = {0: 2, 1: 3, 2: 4, 3: 6}[rs.cartan[i][j] * rs.cartan[j][i]]
            left = [i, j] * (m // 2) if m % 2 == 0 else [i, j] * (m // 2) + [i]
            right = [j, i] * (m // 2) if m % 2 == 0 else [j, i] * (m // 2) + [j]
            assert divided_difference_word(rs, left, f) == divided_difference_word(rs, right, f)


def test_top_divided_difference_a2():
    rs = system("A2")
    f = root_product(rs, rs.positive_roots)
    assert divided_difference_word(rs, [0, 1, 0], f) == Polynomial.constant(2, 6)


def test_reflection_of_root():
    rs = system("A2")
    assert reflect(rs, 0, linear_form(rs, (0, 1))) == linear_form(rs, (1, 1))


def test_apply_operator_matches_repeated_derivations():
    rs = system("B2")
    p = root_product(rs, rs.positive_roots)
    op = Polynomial(2, {(1, 1): 1, (2, 0): 3})
    d1, d2 = Derivation(rs, (1, 0)), Derivation(rs, (0, 1))
    assert apply_operator(rs, op, p) == d1(d2(p)) + d1(d1(p)) * 3


def test_exact_division():
    p = Polynomial(2, {(1, 1): 3, (2, 0): 1})
    assert p.divide_by_variable(0) == Polynomial(2, {(0, 1): 3, (1, 0): 1})
    with pytest.raises(InternalError):
        p.divide_by_variable(1)


def test_json_round_trip():
    p = Polynomial(3, {(1, 0, 2): Fraction(-7, 3), (0, 0, 0): 5})
    assert Polynomial.from_json(3, p.to_json()) == p
    assert p.to_json()[0]["coeff"] in ("-7/3", "5")


@given(st.integers(-50, 50).filter(bool), st.integers(4, 10))
@settings(max_examples=40, deadline=None)
def test_series_inverse(b, n):
    s = one_minus_exp(b, n)
    prod = (s * s.inverse()).normalized()
    assert prod.val == 0 and prod.coefficient(0) == 1
    assert all(prod.coefficient(k) == 0 for k in range(1, prod.prec + 1))


def test_exp_series():
    e = TruncatedSeries.exp_linear(2, 4)
    assert [e.coefficient(k) for k in range(5)] == [1, 2, 2, Fraction(4, 3), Fraction(2, 3)]
    with pytest.raises(InternalError):
        e.coefficient(5)
