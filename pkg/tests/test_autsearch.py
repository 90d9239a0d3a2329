import random
from itertools import combinations

import pytest
from conftest import graphs
from hypothesis import given, settings
from oracles import brute_automorphisms, brute_isomorphic

from symbreak.autsearch import automorphism_generators, is_asymmetric, isomorphic
from symbreak.families import (asymmetric_six, complete, complete_bipartite, cycle, path,
                               theta3_fourteen)
from symbreak.graph import build_graph, complement, labeled_graphs
from symbreak.perm import close_generators


def group_order(g, colors=None):
    gens = automorphism_generators(g, colors).generators
    return close_generators(gens, degree=g.n).order


def test_p4_reversal():
    assert group_order(path(4)) == 2


def test_fourteen_vertex_figure_graph():
    assert group_order(theta3_fourteen()) == 7


def test_colored_c5():
    colors = (1, 1, 2, 2, 2)
    assert len(brute_automorphisms(cycle(5), colors)) == 2
    assert group_order(cycle(5), colors) == 2


def test_asymmetric():
    assert len(brute_automorphisms(asymmetric_six())) == 1
    assert is_asymmetric(asymmetric_six())
    assert not is_asymmetric(complete(3))
    assert is_asymmetric(build_graph(1, []))


def test_isomorphic_examples():
    assert brute_isomorphic(cycle(5), complement(cycle(5)))
    assert isomorphic(cycle(5), complement(cycle(5)))
    assert not isomorphic(path(4), complete_bipartite(1, 3))
    assert isomorphic(theta3_fourteen(), theta3_fourteen())


@pytest.mark.parametrize("n", range(1, 6))
def test_order_matches_brute_force_all_labeled(n):
    for g in labeled_graphs(n):
        assert group_order(g) == len(brute_automorphisms(g))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=6, max_n=7))
def test_order_matches_brute_force_random(g):
    assert group_order(g) == len(brute_automorphisms(g))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_generators_preserve_edges_and_non_edges(g):
    for p in automorphism_generators(g).generators:
        for u, v in combinations(range(g.n), 2):
            assert g.has_edge(u, v) == g.has_edge(p(u), p(v))


def test_colored_matches_brute_force():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(3, 7)
        g = build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        colors = [rng.randint(1, 3) for _ in range(n)]
        gens = automorphism_generators(g, colors).generators
        group = close_generators(gens, degree=n)
        assert group.order == len(brute_automorphisms(g, colors))
        for p in group.elements:
            assert all(colors[p(v)] == colors[v] for v in range(n))


def test_deterministic_generators():
    g = cycle(8)
    assert automorphism_generators(g).generators == automorphism_generators(g).generators


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=7))
def test_isomorphic_agrees_with_brute_force(g, h):
    assert isomorphic(g, h) == brute_isomorphic(g, h)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=8), graphs(min_n=2, max_n=8).map(lambda g: g.n))
def test_relabelled_copy_is_isomorphic(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    assert isomorphic(g, g.relabel(perm))
