import pytest
from hypothesis import given, settings

from starcoh.arrows import CONJ, DISJ, SymConj, UnitDelFwd, type_of
from starcoh.errors import TypeMismatch
from starcoh.formula import BOT, HOLE, TOP, Conj, Context, Disj, Letter, Neg, letter_count
from starcoh.generate import random_term
from starcoh.gentzen import (
    Ax, BotBwd, BotFwd, ConjRule, Cut, NegL, NegR, SymHat, TopFwd, count_cuts, denote,
    gentzenize, identity_net, is_cut_free, net_graph, net_type, tens_net,
)
from starcoh.brauer import identity
from starcoh.graph import graph_of
from starcoh.syntax import parse_term

from conftest import formulas, rng_from, seeds

p, q, r = (Letter(x) for x in "pqr")


def test_conj_rule_example_type():
    g = ConjRule(identity_net(Disj(p, q)), BotBwd(Ax(r)))
    assert net_type(g) == (Conj(Disj(p, q), r), Disj(Conj(p, r), Disj(q, BOT)))


def test_axiom_and_trivial_cut():
    assert net_type(Ax(TOP)) == (TOP, TOP)
    assert net_type(Cut(HOLE, HOLE, p, Ax(p), Ax(p))) == (p, p)
    with pytest.raises(TypeMismatch):
        net_type(Cut(HOLE, HOLE, p, Ax(q), Ax(p)))


def test_denote_hole_cut_is_composition():
    f, g = identity_net(Conj(p, q)), gentzenize(SymConj(q, p))
    d = denote(Cut(HOLE, HOLE, Conj(p, q), f, g))
    assert d.f == denote(f) and d.g == denote(g)


def test_denote_bot_fwd_is_unit_deletion():
    A = Conj(p, q)
    d = denote(BotFwd(identity_net(Disj(A, BOT))))
    assert type_of(d) == type_of(UnitDelFwd(DISJ, A))
    assert graph_of(d) == graph_of(UnitDelFwd(DISJ, A))


def test_denote_sym_hat_is_symmetry():
    d = denote(SymHat(CONJ, HOLE, p, q, identity_net(Conj(q, p))))
    assert type_of(d) == type_of(SymConj(p, q))
    assert graph_of(d) == graph_of(SymConj(p, q))


def test_identity_net_shapes():
    assert identity_net(p) == Ax(p)
    neg = identity_net(Neg(p))
    assert neg == BotFwd(NegR(SymHat(CONJ, HOLE, Neg(p), p, NegL(BotBwd(Ax(p))))))
    assert is_cut_free(identity_net(Neg(Conj(p, q))))


def test_tens_net_with_unit_on_right():
    g = tens_net(CONJ, Ax(p), BotBwd(Ax(r)))
    assert net_type(g) == (Conj(p, r), Conj(p, Disj(r, BOT)))


def test_gentzenize_table_entries():
    assert gentzenize(parse_term("id(p)")) == Ax(p)
    d = gentzenize(parse_term("dist(p,q,r)"))
    assert isinstance(d, Cut) and d.a == q
    assert d.f == identity_net(Conj(p, q)) and d.g == identity_net(Disj(q, r))
    assert d.x == Context.right(CONJ, p) and d.y == Context.left(DISJ, r)
    delta = gentzenize(parse_term("delta_conj(q,p)"))
    assert net_type(delta) == (p, Conj(p, Disj(Neg(q), q)))
    assert count_cuts(delta) == 0


def test_cut_free_checks():
    assert is_cut_free(Ax(p))
    assert not is_cut_free(Cut(HOLE, HOLE, p, Ax(p), Ax(p)))


@given(formulas(max_leaves=5))
def test_identity_net_denotes_identity_graph(A):
    g = identity_net(A)
    assert net_type(g) == (A, A)
    assert is_cut_free(g)
    assert graph_of(denote(g)) == identity(letter_count(A))


@settings(max_examples=80)
@given(seeds)
def test_gentzenize_preserves_type_and_graph(seed):
    f = random_term(rng_from(seed), 8, "s")
    g = gentzenize(f)
    assert net_type(g) == type_of(f)
    assert net_graph(g) == graph_of(denote(g)) == graph_of(f)
