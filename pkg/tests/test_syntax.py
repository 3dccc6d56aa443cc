import pytest
from hypothesis import given, settings

from starcoh.arrows import CONJ, Comp, DeltaConj, Dist, Id, SymConj, Tens, show_term
from starcoh.brauer import identity
from starcoh.cli import compose_example
from starcoh.errors import ParseError
from starcoh.formula import BOT, TOP, Conj, Disj, Letter, Neg, show
from starcoh.generate import random_net, random_term
from starcoh.gentzen import show_net
from starcoh.graph import graph_of
from starcoh.syntax import (
    parse_context, parse_formula, parse_graph, parse_net, parse_term, render_graph, show_context,
)

from conftest import formulas, rng_from, seeds

p, q, r = (Letter(x) for x in "pqr")


def test_formula_examples():
    assert parse_formula("p & (q | ~r)") == Conj(p, Disj(q, Neg(r)))
    assert parse_formula("top & bot") == Conj(TOP, BOT)
    assert parse_formula("p & q | r") == Disj(Conj(p, q), r)
    assert parse_formula("p | q | r") == Disj(p, Disj(q, r))
    assert parse_formula("~~p") == Neg(Neg(p))


def test_term_examples():
    assert parse_term("dist(p,q,r)") == Dist(p, q, r)
    assert parse_term("sym_conj(p,q) . id(p & q)") == Comp(SymConj(p, q), Id(Conj(p, q)))
    assert parse_term("tens_conj(id(p), delta_conj(q,p))") == Tens(CONJ, Id(p), DeltaConj(q, p))


def test_context_round_trip():
    X = parse_context("f & ((c & _) & b)")
    assert show_context(X) == "f & ((c & _) & b)"
    with pytest.raises(ParseError):
        parse_context("p & q")
    with pytest.raises(ParseError):
        parse_context("~_")


@pytest.mark.parametrize("text", ["p &", "p & & q", "(p", "dist(p,q)", "foo(p)", "id(p) . ", "p q"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        if text.startswith(("dist", "foo", "id")):
            parse_term(text)
        else:
            parse_formula(text)


def test_error_marks_position():
    with pytest.raises(ParseError, match="<HERE>"):
        parse_formula("p & )")


def test_keywords_are_not_letters():
    assert parse_formula("top") == TOP
    with pytest.raises(ParseError):
        parse_formula("P")


def test_render_pairs():
    assert render_graph(identity(2), "pairs") == '{"source":2,"target":2,"pairs":[["s0","t0"],["s1","t1"]]}'
    *_, PR = compose_example()
    assert '"pairs":[["s0","t0"],["s1","s2"]]' in render_graph(PR, "pairs")


def test_render_dot():
    text = render_graph(identity(1), "dot")
    assert text.startswith("graph G {") and "s0 -- t0" in text


def test_render_ascii_delta():
    G = graph_of(parse_term("delta_conj(p | q, (q | ~r) | q)"))
    lines = render_graph(G, "ascii").splitlines()
    assert lines[0].split() == [f"t{j}" for j in range(7)]
    assert lines[-1].split() == ["s0", "s1", "s2"]
    caps = [line for line in lines if "┘" in line and "└" in line]
    assert len(caps) == 2
    assert render_graph(G, "ascii") == render_graph(G, "ascii")


def test_render_unknown_format():
    with pytest.raises(ValueError):
        render_graph(identity(1), "svg")


@given(formulas())
def test_formula_round_trip(A):
    assert parse_formula(show(A)) == A


@settings(max_examples=60)
@given(seeds)
def test_term_round_trip(seed):
    f = random_term(rng_from(seed), 6, "s")
    assert parse_term(show_term(f)) == f


@settings(max_examples=30)
@given(seeds)
def test_net_round_trip(seed):
    g = random_net(rng_from(seed))
    assert parse_net(show_net(g)) == g


@settings(max_examples=60)
@given(seeds)
def test_graph_round_trip(seed):
    G = graph_of(random_term(rng_from(seed), 5, "s"))
    assert parse_graph(render_graph(G, "pairs")) == G
