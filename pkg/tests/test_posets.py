import pytest

from conftest import brute_force_flag_vector, mobius_by_euler_characteristic
from flagcone.constructions import (boolean_lattice, chain, horizontal_double,
                                    limit_family_poset)
from flagcone.posets import (GradedPoset, dual, flag_f_vector, interval,
                             is_eulerian, is_half_eulerian, mobius,
                             random_graded_poset, rank_selected, validate)
from flagcone.subsets import mask_of, reverse_mask


def test_validate_good_and_bad():
    assert validate(chain(3)) == []
    headless = GradedPoset(3, [0, 1, 2], [(0, 1), (1, 2)])
    assert any("no unique maximum" in msg for msg in validate(headless))
    gapped = GradedPoset(3, [0, 1, 2, 3], [(0, 1), (1, 3), (2, 3), (0, 2)])
    assert any("rank gap 2" in msg for msg in validate(gapped))
    two_bottoms = GradedPoset(2, [0, 0, 1, 2], [(0, 2), (1, 2), (2, 3)])
    assert any("no unique minimum" in msg for msg in validate(two_bottoms))


def test_flag_vector_matches_brute_force(rng):
    for p in (boolean_lattice(3), boolean_lattice(4),
              horizontal_double(chain(4)),
              limit_family_poset(3, [(1, 2)], 3)):
        assert flag_f_vector(p) == brute_force_flag_vector(p)
    for _ in range(10):
        p = random_graded_poset(rng.randint(1, 4), rng, max_width=4)
        assert flag_f_vector(p) == brute_force_flag_vector(p)


def test_flag_vector_chain_all_ones():
    f = flag_f_vector(chain(5))
    assert all(f.get(m) == 1 for m in range(1 << 4))


def test_mobius_basics():
    c = chain(3)
    assert mobius(c, 0, 0) == 1
    assert mobius(c, 0, 2) == 0  # rank-2 chain interval
    diamond = horizontal_double(chain(2))
    assert mobius(diamond, diamond.bottom, diamond.top) == 1
    with pytest.raises(ValueError, match="not comparable"):
        mobius(diamond, 1, 2)  # the two middle copies


def test_mobius_equals_reduced_euler_characteristic(rng):
    posets = [boolean_lattice(3), limit_family_poset(3, [(1, 2)], 2)]
    posets += [random_graded_poset(rng.randint(2, 4), rng, max_width=4)
               for _ in range(6)]
    for p in posets:
        assert p.size <= 200
        for x in range(p.size):
            for y in range(p.size):
                if x != y and p.leq(x, y):
                    assert mobius(p, x, y) == mobius_by_euler_characteristic(p, x, y)


def test_interval():
    c = chain(5)
    sub = interval(c, 0, 5)
    assert flag_f_vector(sub) == flag_f_vector(c)
    b3 = boolean_lattice(3)
    atom = b3.elements_at(1)[0]
    dia = interval(b3, atom, b3.top)
    assert dia.rank == 2 and len(dia.elements_at(1)) == 2
    with pytest.raises(ValueError, match="degenerate"):
        interval(b3, atom, atom)
    with pytest.raises(ValueError, match="not comparable"):
        interval(b3, b3.elements_at(1)[0], b3.elements_at(2)[2])


def test_interval_of_limit_poset_shifts_the_system():
    # Prop: [x,y] in P(n,I,N) is again a (shifted) limit-family poset
    p = limit_family_poset(5, [(1, 2), (4, 5)], 3)
    x = p.elements_at(2)[0]
    y = next(z for z in p.elements_at(5) if p.less(x, z))
    sub = interval(p, x, y)
    expected = limit_family_poset(2, [], 3)  # no interval inside [3,4]
    assert flag_f_vector(sub) == flag_f_vector(expected)
    x2 = p.elements_at(3)[0]
    y2 = p.top
    sub2 = interval(p, x2, y2)
    expected2 = limit_family_poset(2, [(1, 2)], 3)  # [4,5] shifted by 3
    assert flag_f_vector(sub2) == flag_f_vector(expected2)


def test_rank_selected():
    b3 = boolean_lattice(3)
    assert flag_f_vector(rank_selected(b3, mask_of([1, 2, 3]))) == flag_f_vector(b3)
    empty = rank_selected(b3, 0)
    assert empty.rank == 1 and empty.size == 2
    single = rank_selected(b3, mask_of([1]))
    assert single.rank == 2 and len(single.elements_at(1)) == 3
    # maximal chain count of the selected poset equals f_S
    two = rank_selected(b3, mask_of([1, 2]))
    top_mask = mask_of(range(1, two.n + 1))
    assert flag_f_vector(two).get(top_mask) == flag_f_vector(b3).get(mask_of([1, 2]))


def test_dual(rng):
    c = chain(4)
    assert flag_f_vector(dual(c)) == flag_f_vector(c)
    for _ in range(6):
        p = random_graded_poset(rng.randint(1, 4), rng, max_width=4)
        fd = flag_f_vector(dual(p))
        f = flag_f_vector(p)
        assert flag_f_vector(dual(dual(p))) == f
        for mask in range(1 << p.n):
            assert fd.get(mask) == f.get(reverse_mask(mask, p.n))
    b3 = boolean_lattice(3)
    assert flag_f_vector(dual(b3)).get(mask_of([1])) == 3


def test_eulerian():
    ok, _ = is_eulerian(boolean_lattice(3))
    assert ok
    ok, witness = is_eulerian(chain(3))
    assert not ok and witness is not None
    x, y = witness
    p = chain(3)
    assert mobius(p, x, y) != (-1) ** (p.ranks[y] - p.ranks[x])


def test_half_eulerian_and_double_equivalence(rng):
    ok, _ = is_half_eulerian(chain(5))
    assert ok
    posets = [chain(3), boolean_lattice(3),
              limit_family_poset(4, [(1, 2)], 2),
              limit_family_poset(3, [(1, 3)], 2)]
    posets += [random_graded_poset(rng.randint(1, 4), rng, max_width=3)
               for _ in range(8)]
    for p in posets:
        half, _ = is_half_eulerian(p)
        doubled, _ = is_eulerian(horizontal_double(p))
        assert half == doubled


def test_half_eulerian_witnesses():
    ok, _ = is_half_eulerian(limit_family_poset(6, [(1, 2)], 2))
    assert ok
    ok, witness = is_half_eulerian(limit_family_poset(3, [(1, 3)], 2))
    assert not ok and witness is not None


def test_serialization_round_trip():
    p = boolean_lattice(3)
    q = GradedPoset.from_dict(p.to_dict())
    assert q.ranks == p.ranks and q.covers == p.covers and q.labels == p.labels


def test_flag_vector_guard():
    with pytest.raises(ValueError, match="rank overflow"):
        flag_f_vector(chain(22))
