from hypothesis import given, settings

from starcoh.arrows import CONJ, DISJ, Comp, DeltaConj, Dist, Id, SigmaDisj, SymConj, Tens, comp, type_of
from starcoh.brauer import BrauerArrow, compose, identity, s, shifted_union, t
from starcoh.formula import Disj, Letter, Neg, letter_count
from starcoh.generate import random_term
from starcoh.graph import generator_graph, graph_of

from conftest import formulas, rng_from, seeds

p, q, r = (Letter(x) for x in "pqr")
A = Disj(p, q)
B = Disj(Disj(q, Neg(r)), q)


def pairs(*items):
    return [(s(int(x[:-1])) if x[-1] == "s" else t(int(x[:-1])), s(int(y[:-1])) if y[-1] == "s" else t(int(y[:-1])))
            for x, y in items]


def test_symmetry_generator_graph():
    expected = BrauerArrow(5, 5, pairs(("0s", "3t"), ("1s", "4t"), ("2s", "0t"), ("3s", "1t"), ("4s", "2t")))
    assert generator_graph(SymConj(A, B)) == expected


def test_delta_generator_graph():
    expected = BrauerArrow(3, 7, pairs(("0s", "0t"), ("1s", "1t"), ("2s", "2t"), ("3t", "5t"), ("4t", "6t")))
    assert generator_graph(DeltaConj(A, B)) == expected


def test_sigma_generator_graph():
    expected = BrauerArrow(7, 3, pairs(("0s", "2s"), ("1s", "3s"), ("4s", "0t"), ("5s", "1t"), ("6s", "2t")))
    assert generator_graph(SigmaDisj(A, B)) == expected


def test_snake_is_identity():
    f = comp(SigmaDisj(p, p), Dist(p, Neg(p), p), DeltaConj(p, p))
    assert graph_of(f) == identity(1)


def test_symmetry_on_letters():
    assert graph_of(SymConj(p, q)) == BrauerArrow(2, 2, pairs(("0s", "1t"), ("1s", "0t")))
    assert compose(graph_of(SymConj(q, p)), graph_of(SymConj(p, q))) == identity(2)


@given(formulas())
def test_identity_graph(F):
    assert graph_of(Id(F)) == identity(letter_count(F))


@settings(max_examples=80)
@given(seeds)
def test_graph_is_functorial(seed):
    rng = rng_from(seed)
    f = random_term(rng, 4, "s")
    g = random_term(rng, 4, "s", source=type_of(f)[1])
    assert graph_of(Comp(g, f)) == compose(graph_of(g), graph_of(f))
    h = random_term(rng, 3, "s")
    G, H = graph_of(f), graph_of(h)
    for xi in (CONJ, DISJ):
        assert graph_of(Tens(xi, f, h)) == shifted_union(G, H, G.m, G.n)


@settings(max_examples=80)
@given(seeds)
def test_graph_sizes_match_letter_counts(seed):
    f = random_term(rng_from(seed), 6, "s")
    A, B = type_of(f)
    G = graph_of(f)
    assert (G.m, G.n) == (letter_count(A), letter_count(B))
