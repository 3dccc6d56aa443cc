import pytest
from hypothesis import given, settings

from starcoh.arrows import (
    CONJ, DISJ, DERIVED, Comp, DeltaConj, Dist, Id, SymConj, Tens, UnitDelFwd,
    d_ctx, d_r, derived, is_ds_term, is_pn_term, reduced, rho, rho_inv, show_term,
    sigma_fwd, system_of, tau_conj, tau_conj_inv, tau_disj, tau_disj_inv, type_of,
)
from starcoh.errors import ContextError, NotNiceError, TypeMismatch
from starcoh.formula import BOT, TOP, Conj, Context, Disj, Letter, Neg, is_constant_free, is_nice
from starcoh.generate import random_formula, random_term
from starcoh.graph import graph_of
from starcoh.brauer import identity
from starcoh.formula import letter_count
from starcoh.syntax import parse_context, parse_term

from conftest import formulas, rng_from, seeds

p, q, r, a, b, c = (Letter(x) for x in "pqrabc")


def test_generator_types():
    assert type_of(Dist(p, q, r)) == (Conj(p, Disj(q, r)), Disj(Conj(p, q), r))
    assert type_of(DeltaConj(q, p)) == (p, Conj(p, Disj(Neg(q), q)))
    with pytest.raises(TypeMismatch):
        type_of(Comp(Id(p), Id(q)))


def test_d_r_type():
    assert type_of(d_r(c, b, a)) == (Conj(Disj(c, b), a), Disj(c, Conj(b, a)))


def test_tau_conj_worked_context():
    X = parse_context("f & ((c & _) & b)")
    expected = parse_term(
        "tens_conj(id(f), assoc_fwd_conj(c, a, b) . tens_conj(id(c), sym_conj(b, a)) . assoc_bwd_conj(c, b, a))"
        " . assoc_bwd_conj(f, c & b, a)"
    )
    assert tau_conj(X, a) == expected


def test_rho_on_p_and_top():
    f = rho(CONJ, Conj(p, TOP))
    assert f == Comp(UnitDelFwd(CONJ, p), Tens(CONJ, Id(p), Id(TOP)))
    assert type_of(f) == (Conj(p, TOP), p)
    assert rho(CONJ, TOP) == Id(TOP)


def test_rho_rejects_non_nice():
    with pytest.raises(NotNiceError):
        rho(CONJ, BOT)


def test_tau_polarity_checked():
    with pytest.raises(ContextError):
        tau_conj(parse_context("p | _"), q)


def test_d_ctx_identity_on_empty_context():
    X = parse_context("p & _")
    assert type_of(d_ctx(X, q, Context())) == (Conj(p, q), Conj(p, q))


def test_system_classification():
    assert is_ds_term(SymConj(p, q))
    assert not is_ds_term(DeltaConj(q, p)) and is_pn_term(DeltaConj(q, p))
    assert system_of(UnitDelFwd(CONJ, p)) == "s"


def test_derived_by_name():
    assert derived("d_r", c, b, a) == d_r(c, b, a)
    assert set(DERIVED) >= {"eps_disj", "eps_conj", "sigma_prime", "delta_prime", "rho", "rho_inv", "tau_conj"}


@settings(max_examples=60)
@given(seeds)
def test_random_terms_are_well_typed(seed):
    rng = rng_from(seed)
    f = random_term(rng, 6, "s")
    A, B = type_of(f)
    assert parse_term(show_term(f)) == f


@given(formulas(max_leaves=5))
def test_rho_inverse_pair(A):
    for xi in (CONJ, DISJ):
        if not is_nice(xi, A):
            continue
        there, back = rho(xi, A), rho_inv(xi, A)
        assert type_of(there) == (A, reduced(xi, A)) == type_of(back)[::-1]
        Ar = reduced(xi, A)
        assert is_constant_free(Ar) or Ar == xi.unit()
        assert graph_of(Comp(back, there)) == identity(letter_count(A))


@given(formulas(max_leaves=4), formulas(max_leaves=4), formulas(max_leaves=4))
def test_tau_pairs_are_mutually_inverse_graphs(A, B, C):
    for X in (Context.left(CONJ, B, Context.right(CONJ, C)), Context.right(CONJ, B)):
        f, g = tau_conj(X, A), tau_conj_inv(X, A)
        assert graph_of(Comp(g, f)) == identity(letter_count(type_of(f)[0]))
    Y = Context.left(DISJ, B, Context.right(DISJ, C))
    f, g = tau_disj(Y, A), tau_disj_inv(Y, A)
    assert graph_of(Comp(f, g)) == identity(letter_count(type_of(g)[0]))


@given(formulas(max_leaves=4))
def test_sigma_fwd_types(A):
    for xi in (CONJ, DISJ):
        src, tgt = type_of(sigma_fwd(xi, A))
        assert A in (src, tgt)
