import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periplectiq.combinat import (
    ContractionPattern,
    PatternError,
    all_permutations,
    all_standard_tableaux,
    compose,
    from_cycles,
    from_word,
    identity,
    inverse,
    length,
    parse_pattern,
    parse_tableau,
    patterns,
    reduced_word,
    simple,
    standard_tableaux,
)
from periplectiq.hecke import HeckeElement, T, T_inverse, word_element
from periplectiq.qrat import EPS, ONE

perm4 = st.permutations([1, 2, 3, 4]).map(tuple)


@settings(max_examples=50, deadline=None)
@given(perm4, perm4)
def test_group_laws(a, b):
    assert compose(a, inverse(a)) == identity(4)
    assert inverse(compose(a, b)) == compose(inverse(b), inverse(a))


@settings(max_examples=50, deadline=None)
@given(perm4)
def test_reduced_word_roundtrip(a):
    w = reduced_word(a)
    assert len(w) == length(a)
    assert from_word(w, 4) == a


def test_composition_is_right_to_left():
    a, b = simple(1, 3), simple(2, 3)
    # (a∘b)(x) = a(b(x))
    assert compose(a, b) == tuple(a[b[x] - 1] for x in range(3))
    assert from_cycles([(1, 2), (2, 3)], 3) == compose(from_cycles([(1, 2)], 3), from_cycles([(2, 3)], 3))


def test_tableaux_counts():
    assert len(standard_tableaux((2, 1))) == 2
    assert len(all_standard_tableaux([1, 2, 3])) == 4
    assert len(all_standard_tableaux([1, 2, 3], max_rows=2)) == 3
    assert str(parse_tableau("13/2")) == "13/2"
    assert parse_tableau("[[1,2],[3]]") == parse_tableau("12/3")


def test_patterns():
    assert len(patterns(1, 3)) == 3
    assert len(patterns(2, 4)) == 3
    p = parse_pattern("1-3,2-4")
    assert p.complement(5) == [5]
    assert parse_pattern("") == ContractionPattern(())
    with pytest.raises(PatternError):
        parse_pattern("1-x")


@pytest.mark.parametrize("k", [2, 3, 4])
def test_hecke_quadratic_and_braid(k):
    for j in range(1, k):
        t = HeckeElement.generator(j, k)
        assert t * t == EPS * t + HeckeElement.one(k)
        assert t * T_inverse(simple(j, k)) == HeckeElement.one(k)
    for j in range(1, k - 1):
        a, b = HeckeElement.generator(j, k), HeckeElement.generator(j + 1, k)
        assert a * b * a == b * a * b


def test_hecke_length_additivity():
    for a in all_permutations(3):
        for b in all_permutations(3):
            if length(compose(a, b)) == length(a) + length(b):
                assert T(a) * T(b) == T(compose(a, b))


def test_word_element_matches_basis():
    w = (3, 1, 2)
    assert word_element(reduced_word(w), 3) == T(w)
    assert T(identity(3)) == HeckeElement.one(3)
    assert (ONE * T(w)) == T(w)
