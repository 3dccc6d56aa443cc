import pytest
from hypothesis import given, settings

from starcoh.arrows import CONJ, Comp, Dist, Id, SigmaDisj, DeltaConj, SymConj, Tens, comp, type_of
from starcoh.axioms import CATALOG, SCHEMAS, axiom_instance, match, positions, rewrite, schemas_for
from starcoh.errors import RewriteError
from starcoh.formula import Conj, Letter, Neg
from starcoh.generate import random_instance, random_rewrite, random_term
from starcoh.graph import graph_of

from conftest import rng_from, seeds

p, q, r, s_ = (Letter(x) for x in "pqrs")


def test_catalog_covers_three_systems():
    assert {sc.system for sc in CATALOG} == {"ds", "pn", "s"}
    assert len(SCHEMAS) == len(CATALOG)
    assert set(schemas_for("ds")) <= set(CATALOG)


def test_cc_instance():
    assert axiom_instance(SCHEMAS["cc_conj"], {"A": p, "B": q}) == (Comp(SymConj(q, p), SymConj(p, q)), Id(Conj(p, q)))


def test_sigma_delta_instance():
    lhs, rhs = axiom_instance(SCHEMAS["sigma_delta"], {"A": p})
    assert lhs == comp(SigmaDisj(p, p), Dist(p, Neg(p), p), DeltaConj(p, p))
    assert rhs == Id(p)


def test_bifunctor_identity_instance():
    assert axiom_instance(SCHEMAS["xi1_conj"], {"A": p, "B": q}) == (Tens(CONJ, Id(p), Id(q)), Id(Conj(p, q)))


def test_rewrite_examples():
    assert rewrite(Comp(Id(p), Id(p)), (), SCHEMAS["cat1_src"]) == Id(p)
    assert rewrite(Id(Conj(p, q)), (), SCHEMAS["cc_conj"], "backward") == Comp(SymConj(q, p), SymConj(p, q))
    lhs, rhs = axiom_instance(SCHEMAS["b5_conj"], {"A": p, "B": q, "C": r, "D": s_})
    assert rewrite(lhs, (), SCHEMAS["b5_conj"]) == rhs


def test_rewrite_failure():
    with pytest.raises(RewriteError):
        rewrite(Id(p), (), SCHEMAS["cc_conj"])
    with pytest.raises(ValueError):
        rewrite(Id(p), (), SCHEMAS["cc_conj"], "sideways")


def test_match_binds_variables():
    env = match(SCHEMAS["cc_conj"], Comp(SymConj(q, p), SymConj(p, q)))
    assert env["A"] == p and env["B"] == q
    assert match(SCHEMAS["cc_conj"], Id(p)) is None


@pytest.mark.parametrize("schema", CATALOG, ids=lambda sc: sc.name)
def test_every_schema_preserves_graphs(schema):
    rng = rng_from(sum(map(ord, schema.name)))
    for _ in range(10):
        lhs, rhs = random_instance(rng, schema)
        assert type_of(lhs) == type_of(rhs)
        assert graph_of(lhs) == graph_of(rhs)
        assert rewrite(lhs, (), schema) == rhs


@settings(max_examples=60)
@given(seeds)
def test_random_rewrites_preserve_type_and_graph(seed):
    rng = rng_from(seed)
    f = random_term(rng, 5, "pn")
    g = f
    for _ in range(3):
        g = random_rewrite(rng, g, "pn")
    assert type_of(g) == type_of(f)
    assert graph_of(g) == graph_of(f)


def test_positions_outermost_first():
    f = Comp(Id(p), Tens(CONJ, Id(q), Id(r)))
    assert list(positions(f)) == [(), (0,), (1,), (1, 0), (1, 1)]
