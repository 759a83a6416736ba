import pytest

from conftest import brute_force_flag_vector
from flagcone.constructions import (appendix_a1, boolean_lattice, chain,
                                    double_interval, generalized_double, glue,
                                    horizontal_double, limit_family_poset,
                                    parse_construction)
from flagcone.posets import (flag_f_vector, is_eulerian, is_half_eulerian,
                             random_graded_poset, validate)
from flagcone.subsets import interval_mask, mask_of
from flagcone.vectors import FlagVector, f_to_L, f_to_ell


def test_chain():
    c = chain(1)
    assert c.size == 2 and validate(c) == []
    assert all(v == 1 for v in flag_f_vector(chain(3)).entries.values())
    assert chain(7).rank == 7


def test_double_interval_flag_identity(rng):
    # f_S(D_I^N P) = N f_S(P) when I meets S, f_S(P) otherwise
    for trial in range(25):
        p = random_graded_poset(rng.randint(2, 5), rng, max_width=4)
        n = p.n
        a = rng.randint(1, n)
        b = rng.randint(a, n)
        N = rng.choice([2, 3, 5])
        d = double_interval(p, a, b, N)
        assert validate(d) == []
        f, fd = flag_f_vector(p), flag_f_vector(d)
        imask = interval_mask(a, b)
        for mask in range(1 << n):
            expected = N * f.get(mask) if mask & imask else f.get(mask)
            assert fd.get(mask) == expected, (trial, mask)


def test_double_interval_examples():
    d = double_interval(chain(4), 1, 2, 3)
    f = flag_f_vector(d)
    assert f.get(mask_of([1])) == 3
    assert f.get(mask_of([3])) == 1
    assert f.get(mask_of([1, 3])) == 3
    assert flag_f_vector(double_interval(chain(4), 1, 2, 1)) == flag_f_vector(chain(4))
    with pytest.raises(ValueError):
        double_interval(chain(4), 1, 4, 2)


def test_double_interval_commutes():
    p = chain(5)
    one = double_interval(double_interval(p, 1, 1, 2), 3, 3, 2)
    other = double_interval(double_interval(p, 3, 3, 2), 1, 1, 2)
    assert flag_f_vector(one) == flag_f_vector(other)


def test_ell_recursion_under_doubling(rng):
    # ell_S(D_I^N P) = N ell_S(P) - (N-1) sum_{T u I = S} ell_T(P)
    for _ in range(15):
        p = random_graded_poset(rng.randint(2, 5), rng, max_width=4)
        n = p.n
        a = rng.randint(1, n)
        b = rng.randint(a, n)
        N = rng.choice([2, 3, 5])
        imask = interval_mask(a, b)
        ell = f_to_ell(flag_f_vector(p))
        ell_d = f_to_ell(flag_f_vector(double_interval(p, a, b, N)))
        for s in range(1 << n):
            correction = sum(ell.get(t) for t in range(1 << n) if t | imask == s)
            assert ell_d.get(s) == N * ell.get(s) - (N - 1) * correction


def test_horizontal_double(rng):
    dia = horizontal_double(chain(2))
    assert len(dia.elements_at(1)) == 2
    ok, _ = is_eulerian(dia)
    assert ok
    d3 = horizontal_double(chain(3))
    assert flag_f_vector(d3).entries == flag_f_vector(
        generalized_double(chain(3), [(1, 1, 2), (2, 2, 2)])).entries
    ok, _ = is_eulerian(d3)
    assert ok
    for _ in range(10):
        p = random_graded_poset(rng.randint(1, 4), rng, max_width=4)
        dp = horizontal_double(p)
        f, fd = flag_f_vector(p), flag_f_vector(dp)
        for mask in range(1 << p.n):
            assert fd.get(mask) == (1 << mask.bit_count()) * f.get(mask)
        # L-vector of the double equals the ell-vector of the original
        assert f_to_L(fd) == FlagVector(p.n, "L", f_to_ell(f).entries)


def test_limit_family_poset():
    p = limit_family_poset(2, [(1, 2)], 4)
    f = flag_f_vector(p)
    assert all(f.get(m) == 4 for m in range(1, 4)) and f.get(0) == 1
    assert flag_f_vector(limit_family_poset(4, [], 3)) == flag_f_vector(chain(5))
    ok, _ = is_half_eulerian(limit_family_poset(6, [(1, 2)], 2))
    assert ok
    ok, _ = is_half_eulerian(limit_family_poset(3, [(1, 3)], 2))
    assert not ok
    with pytest.raises(ValueError):
        limit_family_poset(4, [(1, 3), (2, 4)], 0)


def test_generalized_double_flag_vector(rng):
    # flag vector of stacked doublings of a chain: product of the
    # multiplicities of the intervals meeting S
    specs = [(1, 2, 2), (2, 6, 3), (4, 5, 4)]
    p = generalized_double(chain(7), specs)
    f = flag_f_vector(p)
    for mask in range(1 << 6):
        expected = 1
        for a, b, k in specs:
            if mask & interval_mask(a, b):
                expected *= k
        assert f.get(mask) == expected
    single = generalized_double(chain(4), [(2, 3, 5)])
    assert flag_f_vector(single) == flag_f_vector(double_interval(chain(4), 2, 3, 5))


def test_glue_basics():
    b3 = boolean_lattice(3)
    self_glue = glue(b3, b3, range(1, 3))
    assert flag_f_vector(self_glue) == flag_f_vector(b3)
    with pytest.raises(ValueError, match="rank cardinality mismatch"):
        glue(chain(3), horizontal_double(chain(3)), [1])
    with pytest.raises(ValueError, match="equal rank"):
        glue(chain(3), chain(4), [1])


def test_glue_flag_counts():
    # gluing two chains at no mid ranks: mid layers are disjoint unions,
    # cross-half chains cannot exist
    g = glue(chain(3), chain(3), [])
    f = flag_f_vector(g)
    assert f.get(mask_of([1])) == 2
    assert f.get(mask_of([1, 2])) == 2
    assert brute_force_flag_vector(g) == f


def test_appendix_a1_fixture():
    for N in (2, 3):
        a1 = appendix_a1(N)
        assert validate(a1) == []
        ok, _ = is_half_eulerian(a1)
        assert ok, f"A.1 with N={N} must be half-Eulerian"
        ok, _ = is_eulerian(horizontal_double(a1))
        assert ok
    # the halves themselves are not half-Eulerian (the systems overlap oddly)
    left = generalized_double(chain(7), [(1, 2, 2), (2, 6, 2)])
    ok, _ = is_half_eulerian(left)
    assert not ok


def test_parse_construction():
    assert flag_f_vector(parse_construction("chain(4)")) == flag_f_vector(chain(4))
    expr = "double(chain(4), [1,2], 3)"
    assert flag_f_vector(parse_construction(expr)) == flag_f_vector(
        double_interval(chain(4), 1, 2, 3))
    assert parse_construction("hdouble(chain(2))").size == 4
    assert parse_construction("limitposet(6, {[1,2],[2,6]}, 2)").size == \
        limit_family_poset(6, [(1, 2), (2, 6)], 2).size
    assert parse_construction("appendixA1(2)").size == appendix_a1(2).size
    assert parse_construction("dual(boolean(3))").rank == 3
    glued = parse_construction("glue(chain(3), chain(3), {})")
    assert glued.size == 6
    with pytest.raises(ValueError):
        parse_construction("pyramid(3)")
    with pytest.raises(ValueError):
        parse_construction("chain(3) extra")
