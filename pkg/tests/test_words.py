from fractions import Fraction

import pytest

from flagcone.constructions import boolean_lattice, chain
from flagcone.posets import flag_f_vector, random_graded_poset
from flagcone.vectors import FlagVector, f_to_L, f_to_h
from flagcone.words import (IndexPolynomial, NotCDExpressibleError, ab_index,
                            ab_to_ce, cd_to_ce, cd_word_for_even_set,
                            ce_index, ce_to_cd, d_position_pairs,
                            subset_word, word_subset, word_weight)


def test_word_helpers():
    assert subset_word(0b101, 3, "b", "a") == "bab"
    assert word_subset("bab", "b") == 0b101
    assert word_weight("CD", "cdc") == 4
    assert d_position_pairs("cdcd") == [(2, 3), (5, 6)]
    assert cd_word_for_even_set(0b0110, 4) == "cdc"
    with pytest.raises(ValueError):
        cd_word_for_even_set(0b001, 3)
    with pytest.raises(ValueError):
        IndexPolynomial("CD", 3, {"dd": 1})


def test_ab_index_examples():
    assert ab_index(f_to_h(flag_f_vector(chain(4)))) == IndexPolynomial(
        "AB", 3, {"aaa": 1})
    b3 = ab_index(f_to_h(flag_f_vector(boolean_lattice(3))))
    assert b3 == IndexPolynomial("AB", 2, {"aa": 1, "ab": 2, "ba": 2, "bb": 1})


def test_ce_index_examples():
    assert ce_index(f_to_L(flag_f_vector(chain(4)))) == IndexPolynomial(
        "CE", 3, {"ccc": 1})
    # the doubled limit of P(2,{[1,2]}) has ce-index cc - ee
    L = FlagVector(2, "L", {0: 1, 3: -1})
    assert ce_index(L) == IndexPolynomial("CE", 2, {"cc": 1, "ee": -1})


def test_ab_to_ce_matches_L_vector(rng):
    # the substitution a=(c+e)/2, b=(c-e)/2 reproduces the L-coefficients
    for _ in range(8):
        p = random_graded_poset(rng.randint(1, 4), rng, max_width=4)
        f = flag_f_vector(p)
        assert ab_to_ce(ab_index(f_to_h(f))) == ce_index(f_to_L(f))


def test_cd_conversions():
    assert ce_to_cd(IndexPolynomial("CE", 2, {"cc": 1, "ee": -1})) == \
        IndexPolynomial("CD", 2, {"d": 2})
    b3 = ce_index(f_to_L(flag_f_vector(boolean_lattice(3))))
    assert ce_to_cd(b3) == IndexPolynomial("CD", 2, {"cc": 1, "d": 1})
    with pytest.raises(NotCDExpressibleError):
        ce_to_cd(IndexPolynomial("CE", 2, {"ce": 1}))
    with pytest.raises(NotCDExpressibleError):
        ce_to_cd(ce_index(f_to_L(flag_f_vector(chain(3)))))


def test_cd_round_trip(rng):
    def cd_words(n):
        if n == 0:
            yield ""
        if n >= 1:
            for w in cd_words(n - 1):
                yield "c" + w
        if n >= 2:
            for w in cd_words(n - 2):
                yield "d" + w

    for n in (2, 3, 4, 5):
        terms = {w: Fraction(rng.randint(-5, 5)) for w in cd_words(n)}
        poly = IndexPolynomial("CD", n, terms)
        assert ce_to_cd(cd_to_ce(poly)) == poly


def test_eulerian_corpus_is_cd_expressible(eulerian_corpus):
    for name, p in eulerian_corpus:
        if p.n > 4:
            continue
        poly = ce_to_cd(ce_index(f_to_L(flag_f_vector(p))))
        for coeff in poly.terms.values():
            assert coeff.denominator == 1, name


def test_serialization_round_trip():
    poly = IndexPolynomial("CD", 4, {"cdc": Fraction(3, 2), "dd": -1})
    assert IndexPolynomial.from_dict(poly.to_dict()) == poly
