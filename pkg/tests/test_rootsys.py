import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hessberg.errors import InputError, ResourceError
from hessberg.rootsys import (Root, Weight, build_root_system, element_from_word, inversion_count,
                              parse_label, weyl_group_order)

from conftest import system

# (label, #positive roots, |W|)
COUNTS = [("A1", 1, 2), ("A2", 3, 6), ("A3", 6, 24), ("A4", 10, 120), ("B2", 4, 8), ("B3", 9, 48),
          ("C3", 9, 48), ("G2", 6, 12), ("D4", 12, 24 * 8), ("F4", 24, 1152), ("B4", 16, 384)]


def reflection_closure(rs):
    """All roots as the orbit of the simple roots under simple reflections."""
    seen = set(tuple(Fraction(c) for c in a) for a in rs.simple_roots)
    frontier = list(seen)
    while frontier:
        v = frontier.pop()
        for i in range(rs.rank):
            u = tuple(rs.reflect(i, v))
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return seen


@pytest.mark.parametrize("label,npos,order", COUNTS)
def test_counts(label, npos, order):
    rs = system(label)
    assert rs.num_positive_roots == npos
    assert weyl_group_order(label) == order
    if order <= 1152:
        assert len(rs.weyl_group()) == order


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3", "C3", "D4"])
def test_roots_match_reflection_orbit(label):
    rs = system(label)
    orbit = reflection_closure(rs)
    assert orbit == {tuple(Fraction(c) for c in r) for r in rs.all_roots()}


def test_ordering_and_names():
    rs = system("A2")
    assert [tuple(r) for r in rs.positive_roots] == [(1, 0), (0, 1), (1, 1)]
    assert rs.positive_roots[2].name() == "a1+a2"
    g2 = system("G2")
    assert tuple(g2.highest_root()) == (3, 2) and g2.highest_root().height == 5
    heights = [r.height for r in g2.positive_roots]
    assert heights == sorted(heights)


def test_g2_short_first_root():
    rs = system("G2")
    assert rs.gram[0][0] < rs.gram[1][1]
    assert rs.cartan == ((2, -3), (-1, 2))  # <a1^v, a2> = -3 with a1 short


def test_length_histogram_a2():
    assert system("A2").weyl_group().length_histogram() == [1, 2, 2, 1]


@pytest.mark.parametrize("label", ["A2", "B3", "G2", "A3"])
def test_lengths_are_inversion_counts(label):
    rs = system(label)
    for w in rs.weyl_group():
        assert w.length == inversion_count(rs, w) == len(w.reduced_word)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "C3"])
def test_weyl_group_preserves_form(label):
    rs = system(label)
    for w in rs.weyl_group():
        for a, b in product(rs.simple_roots, repeat=2):
            assert rs.inner(w.act(a), w.act(b)) == rs.inner(a, b)


def test_star_map():
    assert system("A2").weyl_group().star == (1, 0)
    assert system("B2").weyl_group().star == (0, 1)


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "G2", "F4"])
def test_height_injection(label):
    rs = system(label)
    inj = rs.height_injection
    inj.check(rs)
    assert len(inj.mapping) == sum(1 for r in rs.positive_roots if r.height >= 2)


def test_element_from_word_rejects_nonreduced():
    rs = system("A2")
    with pytest.raises(InputError):
        element_from_word(rs, [0, 0])


def test_weyl_bound():
    rs = build_root_system("E6")
    with pytest.raises(ResourceError):
        rs.weyl_group(bound=1000)


def test_labels():
    assert parse_label("A1xA2") == [("A", 1), ("A", 2)]
    rs = build_root_system("A1xA2")
    assert rs.rank == 3 and rs.num_positive_roots == 4
    for bad in ["Z3", "B1", "D3", "G3", "E9", ""]:
        with pytest.raises(InputError):
            build_root_system(bad)


def test_weights():
    rs = system("A2")
    assert rs.to_fundamental(rs.rho) == (1, 1)
    assert tuple(rs.weight_vector(Weight((1, 0)))) == (Fraction(2, 3), Fraction(1, 3))
    assert rs.weight_vector(Root((1, 1))) == (1, 1)
    assert Weight((1, 2)).is_regular_dominant and not Weight((0, 2)).is_regular_dominant


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3), st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_reflection_involution(v, i):
    rs = system("B3")
    assert tuple(rs.reflect(i, rs.reflect(i, v))) == tuple(v)
    assert rs.inner(rs.reflect(i, v), rs.reflect(i, v)) == rs.inner(v, v)


def test_scale_changes_form_only():
    rs, rs2 = system("B2"), system("B2").rescaled(3)
    assert rs2.positive_roots == rs.positive_roots and rs2.cartan == rs.cartan
    assert rs2.inner((1, 0), (0, 1)) == 3 * rs.inner((1, 0), (0, 1))
    with pytest.raises(InputError):
        build_root_system("A2", 0)
