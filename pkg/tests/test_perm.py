from math import lcm

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symbreak.autsearch import automorphism_generators
from symbreak.errors import DegreeError, GroupTooLarge
from symbreak.families import cycle, natural_action, petersen
from symbreak.perm import (Permutation, close_generators, compose, cycle_count, inverse,
                           moved_points, order, raw_cycle_count)


def perms(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(n))).map(lambda p: Permutation(tuple(p))))


def test_cycle_count_examples():
    assert cycle_count(Permutation.from_cycles(4, [(0, 1)])) == 3
    assert cycle_count(Permutation.identity(10)) == 0
    assert raw_cycle_count(Permutation.identity(10)) == 10
    two_sevens = Permutation.from_cycles(14, [range(7), range(7, 14)])
    assert cycle_count(two_sevens) == 2


def test_algebra_examples():
    p = Permutation.from_cycles(5, [(0, 1, 2), (3, 4)])
    assert order(p) == 6
    assert moved_points(Permutation.from_cycles(4, [(0, 1)])) == 2
    assert compose(p, inverse(p)).is_identity()
    assert moved_points(Permutation.identity(3)) == 0
    with pytest.raises(DegreeError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_compose_applies_right_factor_first():
    p = Permutation((1, 2, 0))
    q = Permutation((1, 0, 2))
    assert compose(p, q).images == (2, 1, 0)
    assert (p * q)(0) == p(q(0))


def test_invalid_images():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


@given(perms())
def test_cycle_structure(p):
    cyc = p.cycles()
    assert sorted(v for c in cyc for v in c) == list(range(p.degree))
    assert order(p) == lcm(*[len(c) for c in cyc])
    fixed = sum(1 for c in cyc if len(c) == 1)
    assert moved_points(p) == p.degree - fixed
    assert Permutation.from_cycles(p.degree, cyc) == p
    # rotating a cycle describes the same permutation
    rotated = [c[1:] + c[:1] for c in cyc]
    assert Permutation.from_cycles(p.degree, rotated) == p


@given(perms(), st.data())
def test_inverse_and_associativity(p, data):
    n = p.degree
    q = Permutation(tuple(data.draw(st.permutations(list(range(n))))))
    r = Permutation(tuple(data.draw(st.permutations(list(range(n))))))
    assert compose(p, inverse(p)).is_identity()
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


def test_dihedral_closure():
    rot = Permutation.from_cycles(5, [range(5)])
    ref = Permutation((0, 4, 3, 2, 1))
    g = close_generators([rot, ref])
    assert g.order == 10


def test_empty_generators():
    g = close_generators([], degree=4)
    assert g.order == 1 and g.elements[0].is_identity()


def test_sym5_on_petersen_vertices():
    swap = Permutation((1, 0, 2, 3, 4))
    five = Permutation((1, 2, 3, 4, 0))
    gens = [natural_action(swap, (5, 2, 2)), natural_action(five, (5, 2, 2))]
    group = close_generators(gens)
    assert group.order == 120
    pet = petersen()
    for p in gens:
        assert all(pet.has_edge(p(u), p(v)) for u, v in pet.edges())


def test_cap():
    gens = automorphism_generators(cycle(12)).generators
    with pytest.raises(GroupTooLarge) as err:
        close_generators(gens, cap=10)
    assert err.value.cap == 10


def test_group_is_closed_and_deterministic():
    gens = automorphism_generators(petersen()).generators
    a = close_generators(gens)
    b = close_generators(gens)
    assert a.elements == b.elements
    assert list(a.elements) == sorted(a.elements)
    elems = set(a.elements)
    sample = a.elements[::7]
    for x in sample:
        assert inverse(x) in elems
        for y in sample[::5]:
            assert compose(x, y) in elems
