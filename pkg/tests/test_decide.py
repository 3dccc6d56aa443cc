import pytest
from hypothesis import given, settings

from starcoh.arrows import CONJ, DISJ, Comp, Id, SymConj, Tens, UnitDelFwd, tau_l, type_of
from starcoh.axioms import SCHEMAS, axiom_instance
from starcoh.brauer import identity
from starcoh.decide import (
    Verdict, decide, equal_graphwise, fresh_letter, is_nice_endpoint, pad, rho_conjugate,
)
from starcoh.errors import NotNiceError
from starcoh.formula import BOT, TOP, Conj, Disj, Letter, Neg
from starcoh.generate import random_rewrite, random_term
from starcoh.graph import graph_of

from conftest import rng_from, seeds

p, q, r, s_ = (Letter(x) for x in "pqrs")


def test_pentagon_equal():
    lhs, rhs = axiom_instance(SCHEMAS["b5_conj"], {"A": p, "B": q, "C": r, "D": s_})
    assert equal_graphwise(lhs, rhs) is Verdict.EQUAL


def test_symmetry_is_not_identity():
    d = decide(SymConj(p, p), Id(Conj(p, p)))
    assert d.verdict is Verdict.UNEQUAL
    assert d.graph2 == identity(2)


def test_types_differ():
    d = decide(Id(p), Id(q))
    assert d.verdict is Verdict.UNEQUAL and d.graph1 is None


def test_reflexive_through_padding():
    f = tau_l(p)
    assert type_of(f)[0] == TOP
    assert equal_graphwise(f, f) is Verdict.EQUAL


def test_rho_conjugate_examples():
    f = rho_conjugate(Id(Conj(p, TOP)))
    assert type_of(f) == (p, p) and graph_of(f) == identity(1)
    assert type_of(rho_conjugate(UnitDelFwd(DISJ, p))) == (p, p)
    assert rho_conjugate(Id(TOP)) == Id(TOP)


def test_not_nice_endpoint_is_graph_equal_only():
    A = Conj(p, Disj(q, Conj(TOP, BOT)))
    assert not is_nice_endpoint(A)
    assert equal_graphwise(Id(A), Id(A)) is Verdict.GRAPH_EQUAL_ONLY
    with pytest.raises(NotNiceError):
        rho_conjugate(Id(A))


def test_system_argument():
    assert equal_graphwise(Id(p), Id(p), "ds") is Verdict.EQUAL
    with pytest.raises(NotNiceError):
        equal_graphwise(UnitDelFwd(CONJ, p), UnitDelFwd(CONJ, p), "pn")
    with pytest.raises(ValueError):
        equal_graphwise(Id(p), Id(p), "xyz")


def test_fresh_letter_avoids_used_names():
    z = fresh_letter(Id(Letter("_z0")), Id(p))
    assert z == Letter("_z1")
    assert type_of(pad(Id(p), CONJ, z)) == (Conj(p, z), Conj(p, z))


@settings(max_examples=60)
@given(seeds)
def test_rewrites_decide_equal(seed):
    rng = rng_from(seed)
    f = random_term(rng, 5, "pn")
    g = f
    for _ in range(rng.randint(1, 5)):
        g = random_rewrite(rng, g, "pn")
    assert equal_graphwise(f, g) is Verdict.EQUAL


@settings(max_examples=60)
@given(seeds)
def test_unit_padding_keeps_verdict(seed):
    rng = rng_from(seed)
    f = random_term(rng, 4, "pn")
    A, B = type_of(f)
    ff = Tens(CONJ, f, f)
    for g in (random_rewrite(rng, ff, "pn"), Comp(SymConj(B, B), ff)):
        direct = equal_graphwise(ff, g)
        for xi, unit in ((CONJ, TOP), (DISJ, BOT)):
            assert equal_graphwise(Tens(xi, ff, Id(unit)), Tens(xi, g, Id(unit))) is direct
