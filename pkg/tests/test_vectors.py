from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flagcone.constructions import boolean_lattice, chain
from flagcone.posets import flag_f_vector
from flagcone.subsets import mask_of
from flagcone.vectors import (FlagVector, check_dehn_sommerville,
                              dehn_sommerville_residuals, ell_to_f, f_to_L,
                              f_to_ell, f_to_h, h_to_f, L_to_f)


def small_vectors(max_n=5):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        entries = {}
        for mask in range(1 << n):
            if draw(st.booleans()):
                entries[mask] = Fraction(draw(st.integers(-8, 8)),
                                         draw(st.integers(1, 8)))
        return FlagVector(n, "F", entries)
    return build()


def test_chain_h_and_ell_concentrate_at_empty():
    f = flag_f_vector(chain(4))
    h = f_to_h(f)
    assert h.entries == {0: Fraction(1)}
    ell = f_to_ell(f)
    assert ell.entries == {0: Fraction(1)}


def test_boolean3_bases():
    f = flag_f_vector(boolean_lattice(3))
    assert f.entries == {0: Fraction(1), 1: Fraction(3), 2: Fraction(3), 3: Fraction(6)}
    h = f_to_h(f)
    assert h.entries == {0: Fraction(1), 1: Fraction(2), 2: Fraction(2), 3: Fraction(1)}
    L = f_to_L(f)
    assert L.entries == {0: Fraction(3, 2), 3: Fraction(-1, 2)}
    assert L_to_f(L) == f


def test_limit_vector_example():
    # ell of the P(2,{[1,2]}) limit: ell_empty=1, ell_{12}=-1; via E_fl
    # f_empty=0 and f_1=f_2=f_12=1
    ell = FlagVector(2, "ELL", {0: 1, 3: -1})
    f = ell_to_f(ell)
    assert f.entries == {1: Fraction(1), 2: Fraction(1), 3: Fraction(1)}
    assert f_to_ell(f) == ell


@settings(max_examples=150, deadline=None)
@given(small_vectors())
def test_round_trips_exact(v):
    assert h_to_f(f_to_h(v)) == v
    assert ell_to_f(f_to_ell(v)) == v
    assert L_to_f(f_to_L(v)) == v


@settings(max_examples=60, deadline=None)
@given(small_vectors(max_n=4))
def test_dehn_sommerville_agrees_with_bayer_billera_equations(v):
    residuals = dehn_sommerville_residuals(v)
    ok, witness = check_dehn_sommerville(f_to_L(v))
    assert ok == all(r == 0 for r in residuals.values())
    if not ok:
        assert witness is not None


def test_dehn_sommerville_on_posets():
    f = flag_f_vector(boolean_lattice(4))
    ok, _ = check_dehn_sommerville(f_to_L(f))
    assert ok
    assert all(r == 0 for r in dehn_sommerville_residuals(f).values())
    bad = flag_f_vector(chain(3))
    ok, witness = check_dehn_sommerville(f_to_L(bad))
    assert not ok and witness in (mask_of([1]), mask_of([2]))


def test_basis_errors():
    f = flag_f_vector(chain(2))
    with pytest.raises(ValueError):
        h_to_f(f)
    with pytest.raises(ValueError):
        f_to_h(f_to_L(f))


def test_vector_addition_and_reversal():
    a = FlagVector(2, "ELL", {0: 1, 3: -1})
    b = FlagVector(2, "ELL", {0: 1, 1: 2})
    assert (a + b).entries == {0: Fraction(2), 1: Fraction(2), 3: Fraction(-1)}
    assert a.reversed_coordinates() == a
    c = FlagVector(2, "ELL", {1: 1})
    assert c.reversed_coordinates().entries == {2: Fraction(1)}


def test_serialization_round_trip():
    v = FlagVector(3, "L", {0: Fraction(3, 2), 5: Fraction(-1, 7)})
    assert FlagVector.from_dict(v.to_dict()) == v
