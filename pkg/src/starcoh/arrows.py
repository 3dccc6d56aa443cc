"""Arrow terms of the free category S, their types, and derived arrows.

DS terms use only ∧, ∨ and letters; PN¬ terms add negation together with the
Δ∧ and Σ∨ generators; S terms add ⊤, ⊥ and the δ generators.  Derived arrows
are expanded eagerly into generator terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ContextError, NotNiceError, TypeMismatch
from .formula import (
    BOT,
    CONJ,
    DISJ,
    TOP,
    Conj,
    Conn,
    Context,
    Disj,
    Formula,
    Neg,
    ctx_apply,
    ctx_frame,
    is_constant_free,
    is_literate,
    is_negation_free,
    show,
)


class ArrowTerm:
    __slots__ = ()

    @property
    def source(self) -> Formula:
        return type_of(self)[0]

    @property
    def target(self) -> Formula:
        return type_of(self)[1]

    def __str__(self) -> str:
        return show_term(self)


@dataclass(frozen=True)
class Id(ArrowTerm):
    a: Formula


@dataclass(frozen=True)
class AssocFwd(ArrowTerm):
    """b→ : A ξ (B ξ C) ⊢ (A ξ B) ξ C"""

    conn: Conn
    a: Formula
    b: Formula
    c: Formula


@dataclass(frozen=True)
class AssocBwd(ArrowTerm):
    """b← : (A ξ B) ξ C ⊢ A ξ (B ξ C)"""

    conn: Conn
    a: Formula
    b: Formula
    c: Formula


@dataclass(frozen=True)
class SymConj(ArrowTerm):
    """c∧_{A,B} : A ∧ B ⊢ B ∧ A"""

    a: Formula
    b: Formula


@dataclass(frozen=True)
class SymDisj(ArrowTerm):
    """c∨_{A,B} : B ∨ A ⊢ A ∨ B"""

    a: Formula
    b: Formula


@dataclass(frozen=True)
class Dist(ArrowTerm):
    """d_{A,B,C} : A ∧ (B ∨ C) ⊢ (A ∧ B) ∨ C"""

    a: Formula
    b: Formula
    c: Formula


@dataclass(frozen=True)
class DeltaConj(ArrowTerm):
    """Δ∧_{B,A} : A ⊢ A ∧ (¬B ∨ B)"""

    b: Formula
    a: Formula


@dataclass(frozen=True)
class SigmaDisj(ArrowTerm):
    """Σ∨_{B,A} : (B ∧ ¬B) ∨ A ⊢ A"""

    b: Formula
    a: Formula


@dataclass(frozen=True)
class UnitDelFwd(ArrowTerm):
    """δ∧→_A : A ∧ ⊤ ⊢ A and δ∨→_A : A ∨ ⊥ ⊢ A"""

    conn: Conn
    a: Formula


@dataclass(frozen=True)
class UnitDelBwd(ArrowTerm):
    """δ∧←_A : A ⊢ A ∧ ⊤ and δ∨←_A : A ⊢ A ∨ ⊥"""

    conn: Conn
    a: Formula


@dataclass(frozen=True)
class Comp(ArrowTerm):
    """f ∘ g: first g, then f."""

    f: ArrowTerm
    g: ArrowTerm


@dataclass(frozen=True)
class Tens(ArrowTerm):
    conn: Conn
    f: ArrowTerm
    g: ArrowTerm


GENERATORS = (Id, AssocFwd, AssocBwd, SymConj, SymDisj, Dist, DeltaConj, SigmaDisj, UnitDelFwd, UnitDelBwd)


def _generator_type(f: ArrowTerm) -> tuple:
    if isinstance(f, Id):
        return f.a, f.a
    if isinstance(f, (AssocFwd, AssocBwd)):
        xi = f.conn
        right = xi.make(f.a, xi.make(f.b, f.c))
        left = xi.make(xi.make(f.a, f.b), f.c)
        return (right, left) if isinstance(f, AssocFwd) else (left, right)
    if isinstance(f, SymConj):
        return Conj(f.a, f.b), Conj(f.b, f.a)
    if isinstance(f, SymDisj):
        return Disj(f.b, f.a), Disj(f.a, f.b)
    if isinstance(f, Dist):
        return Conj(f.a, Disj(f.b, f.c)), Disj(Conj(f.a, f.b), f.c)
    if isinstance(f, DeltaConj):
        return f.a, Conj(f.a, Disj(Neg(f.b), f.b))
    if isinstance(f, SigmaDisj):
        return Disj(Conj(f.b, Neg(f.b)), f.a), f.a
    if isinstance(f, (UnitDelFwd, UnitDelBwd)):
        padded = f.conn.make(f.a, f.conn.unit())
        return (padded, f.a) if isinstance(f, UnitDelFwd) else (f.a, padded)
    raise TypeError(f"not an arrow term: {f!r}")


def type_of(f: ArrowTerm) -> tuple:
    """``(source, target)`` of a well-typed term; raises TypeMismatch otherwise."""
    cached = f.__dict__.get("_type")
    if cached is not None:
        return cached
    # iterative over Comp/Tens spines so long compositions do not exhaust the stack
    stack = [f]
    while stack:
        h = stack[-1]
        if "_type" in h.__dict__:
            stack.pop()
            continue
        if isinstance(h, (Comp, Tens)):
            pending = [k for k in (h.f, h.g) if "_type" not in k.__dict__]
            if pending:
                stack.extend(pending)
                continue
            (sf, tf), (sg, tg) = h.f.__dict__["_type"], h.g.__dict__["_type"]
            if isinstance(h, Comp):
                if sf != tg:
                    raise TypeMismatch(f"cannot compose: {show(sf)} is not {show(tg)}")
                ty = (sg, tf)
            else:
                ty = (h.conn.make(sf, sg), h.conn.make(tf, tg))
        else:
            ty = _generator_type(h)
        object.__setattr__(h, "_type", ty)
        stack.pop()
    return f.__dict__["_type"]


def subterms(f: ArrowTerm) -> Iterator[ArrowTerm]:
    stack = [f]
    while stack:
        h = stack.pop()
        yield h
        if isinstance(h, (Comp, Tens)):
            stack.extend((h.g, h.f))


def formulas_in(f: ArrowTerm) -> Iterator[Formula]:
    for h in subterms(f):
        if not isinstance(h, (Comp, Tens)):
            yield from type_of(h)


def is_ds_term(f: ArrowTerm) -> bool:
    return all(
        not isinstance(h, (DeltaConj, SigmaDisj, UnitDelFwd, UnitDelBwd)) for h in subterms(f)
    ) and all(is_negation_free(A) for A in formulas_in(f))


def is_pn_term(f: ArrowTerm) -> bool:
    return all(not isinstance(h, (UnitDelFwd, UnitDelBwd)) for h in subterms(f)) and all(
        is_constant_free(A) for A in formulas_in(f)
    )


def system_of(f: ArrowTerm) -> str:
    """The smallest of ``"ds"``, ``"pn"``, ``"s"`` containing the term."""
    if is_ds_term(f):
        return "ds"
    if is_pn_term(f):
        return "pn"
    return "s"


def comp(*fs: ArrowTerm) -> ArrowTerm:
    """Right-nested composite ``f1 ∘ (f2 ∘ (… ∘ fn))``."""
    if not fs:
        raise ValueError("comp needs at least one arrow")
    out = fs[-1]
    for h in reversed(fs[:-1]):
        out = Comp(h, out)
    return out


def size(f: ArrowTerm) -> int:
    """Number of generator leaves."""
    return sum(1 for h in subterms(f) if not isinstance(h, (Comp, Tens)))


# ------------------------------------------------------------------ printing

_NAMES = {
    Id: "id",
    SymConj: "sym_conj",
    SymDisj: "sym_disj",
    Dist: "dist",
    DeltaConj: "delta_conj",
    SigmaDisj: "sigma_disj",
}


def generator_name(f: ArrowTerm) -> str:
    if isinstance(f, AssocFwd):
        return f"assoc_fwd_{f.conn.word}"
    if isinstance(f, AssocBwd):
        return f"assoc_bwd_{f.conn.word}"
    if isinstance(f, UnitDelFwd):
        return f"unit_del_fwd_{f.conn.word}"
    if isinstance(f, UnitDelBwd):
        return f"unit_del_bwd_{f.conn.word}"
    return _NAMES[type(f)]


def _generator_args(f: ArrowTerm) -> tuple:
    if isinstance(f, (AssocFwd, AssocBwd, Dist)):
        return f.a, f.b, f.c
    if isinstance(f, (SymConj, SymDisj)):
        return f.a, f.b
    if isinstance(f, (DeltaConj, SigmaDisj)):
        return f.b, f.a
    return (f.a,)


def show_term(f: ArrowTerm) -> str:
    if isinstance(f, Comp):
        left = show_term(f.f)
        if isinstance(f.f, Comp):
            left = f"({left})"
        return f"{left} . {show_term(f.g)}"
    if isinstance(f, Tens):
        return f"tens_{f.conn.word}({show_term(f.f)}, {show_term(f.g)})"
    return f"{generator_name(f)}({', '.join(show(A) for A in _generator_args(f))})"


# ------------------------------------------------------------------ derived arrows


def ctx_arrow(Z: Context, f: ArrowTerm) -> ArrowTerm:
    """Z(f): the arrow ``f`` placed in the hole of ``Z``, identities elsewhere."""
    for fr in reversed(Z.frames):
        f = Tens(fr.conn, f, Id(fr.side)) if fr.hole_left else Tens(fr.conn, Id(fr.side), f)
    return f


def d_r(c: Formula, b: Formula, a: Formula) -> ArrowTerm:
    """d^R_{C,B,A} : (C ∨ B) ∧ A ⊢ C ∨ (B ∧ A)"""
    return comp(
        SymDisj(c, Conj(b, a)),
        Tens(DISJ, SymConj(a, b), Id(c)),
        Dist(a, b, c),
        Tens(CONJ, Id(a), SymDisj(b, c)),
        SymConj(Disj(c, b), a),
    )


def sigma_conj(b: Formula, a: Formula) -> ArrowTerm:
    """Σ∧_{B,A} : A ⊢ (¬B ∨ B) ∧ A"""
    return Comp(SymConj(a, Disj(Neg(b), b)), DeltaConj(b, a))


def delta_disj(b: Formula, a: Formula) -> ArrowTerm:
    """Δ∨_{B,A} : A ∨ (B ∧ ¬B) ⊢ A"""
    return Comp(SigmaDisj(b, a), SymDisj(Conj(b, Neg(b)), a))


def delta_prime(b: Formula, a: Formula) -> ArrowTerm:
    """Δ′_{B,A} : A ⊢ A ∧ (B ∨ ¬B)"""
    return Comp(Tens(CONJ, Id(a), SymDisj(b, Neg(b))), DeltaConj(b, a))


def sigma_prime(b: Formula, a: Formula) -> ArrowTerm:
    """Σ′_{B,A} : (¬B ∧ B) ∨ A ⊢ A"""
    return Comp(SigmaDisj(b, a), Tens(DISJ, SymConj(Neg(b), b), Id(a)))


def sigma_fwd(xi: Conn, a: Formula) -> ArrowTerm:
    """σ∧→_A : ⊤ ∧ A ⊢ A and σ∨→_A : ⊥ ∨ A ⊢ A"""
    if xi is CONJ:
        return Comp(UnitDelFwd(CONJ, a), SymConj(TOP, a))
    return Comp(UnitDelFwd(DISJ, a), SymDisj(a, BOT))


def sigma_bwd(xi: Conn, a: Formula) -> ArrowTerm:
    """σ∧←_A : A ⊢ ⊤ ∧ A and σ∨←_A : A ⊢ ⊥ ∨ A"""
    if xi is CONJ:
        return Comp(SymConj(a, TOP), UnitDelBwd(CONJ, a))
    return Comp(SymDisj(BOT, a), UnitDelBwd(DISJ, a))


def tau_l(b: Formula) -> ArrowTerm:
    """τ^L_B : ⊤ ⊢ ¬B ∨ B"""
    return Comp(sigma_fwd(CONJ, Disj(Neg(b), b)), DeltaConj(b, TOP))


def gamma_r(b: Formula) -> ArrowTerm:
    """γ^R_B : B ∧ ¬B ⊢ ⊥"""
    return Comp(SigmaDisj(b, BOT), UnitDelBwd(DISJ, Conj(b, Neg(b))))


def delta_conj_from_units(b: Formula, a: Formula) -> ArrowTerm:
    """Δ∧_{B,A} rebuilt from τ^L and δ∧←."""
    return Comp(Tens(CONJ, Id(a), tau_l(b)), UnitDelBwd(CONJ, a))


def sigma_disj_from_units(b: Formula, a: Formula) -> ArrowTerm:
    """Σ∨_{B,A} rebuilt from γ^R and σ∨→."""
    return Comp(sigma_fwd(DISJ, a), Tens(DISJ, gamma_r(b), Id(a)))


def eps_disj(d: Formula, c: Formula, b: Formula, a: Formula) -> ArrowTerm:
    """ε∨_{D,C,B,A} : (D ∨ B) ∧ (C ∨ A) ⊢ (D ∧ C) ∨ (B ∨ A)"""
    return comp(
        Tens(DISJ, SymConj(c, d), Id(Disj(b, a))),
        AssocBwd(DISJ, Conj(c, d), b, a),
        Tens(DISJ, Comp(Dist(c, d, b), SymConj(Disj(d, b), c)), Id(a)),
        Dist(Disj(d, b), c, a),
    )


def eps_conj(a: Formula, b: Formula, c: Formula, d: Formula) -> ArrowTerm:
    """ε∧_{A,B,C,D} : (A ∧ B) ∧ (C ∨ D) ⊢ (A ∧ C) ∨ (B ∧ D)"""
    return comp(
        Dist(a, c, Conj(b, d)),
        Tens(CONJ, Id(a), Comp(SymDisj(c, Conj(b, d)), Dist(b, d, c))),
        AssocBwd(CONJ, a, b, Disj(d, c)),
        Tens(CONJ, Id(Conj(a, b)), SymDisj(d, c)),
    )


def _check_polarity(Z: Context, xi: Conn) -> None:
    if not Z.is_proper:
        raise ContextError("this derived arrow needs a proper context")
    if Z.conn is not xi:
        raise ContextError(f"expected a {xi.symbol}-context")


def tau_conj(X: Context, a: Formula) -> ArrowTerm:
    """τ∧_{X,A} : E_X ∧ A ⊢ X(A)"""
    _check_polarity(X, CONJ)
    head, inner = X.frames[0], Context(X.frames[1:])
    b = head.side
    if not inner.is_proper:
        return SymConj(b, a) if head.hole_left else Id(Conj(b, a))
    e = ctx_frame(inner)
    rec = tau_conj(inner, a)
    if head.hole_left:
        steps = [AssocFwd(CONJ, e, a, b), Tens(CONJ, Id(e), SymConj(b, a)), AssocBwd(CONJ, e, b, a)]
        if not isinstance(rec, Id):
            steps.insert(0, Tens(CONJ, rec, Id(b)))
        return comp(*steps)
    if isinstance(rec, Id):
        return AssocBwd(CONJ, b, e, a)
    return Comp(Tens(CONJ, Id(b), rec), AssocBwd(CONJ, b, e, a))


def tau_conj_inv(X: Context, a: Formula) -> ArrowTerm:
    """τ∧⁻¹_{X,A} : X(A) ⊢ E_X ∧ A"""
    _check_polarity(X, CONJ)
    head, inner = X.frames[0], Context(X.frames[1:])
    b = head.side
    if not inner.is_proper:
        return SymConj(a, b) if head.hole_left else Id(Conj(b, a))
    e = ctx_frame(inner)
    rec = tau_conj_inv(inner, a)
    if head.hole_left:
        steps = [AssocFwd(CONJ, e, b, a), Tens(CONJ, Id(e), SymConj(a, b)), AssocBwd(CONJ, e, a, b)]
        if not isinstance(rec, Id):
            steps.append(Tens(CONJ, rec, Id(b)))
        return comp(*steps)
    if isinstance(rec, Id):
        return AssocFwd(CONJ, b, e, a)
    return Comp(AssocFwd(CONJ, b, e, a), Tens(CONJ, Id(b), rec))


def tau_disj(Y: Context, a: Formula) -> ArrowTerm:
    """τ∨_{Y,A} : Y(A) ⊢ A ∨ D_Y"""
    _check_polarity(Y, DISJ)
    head, inner = Y.frames[0], Context(Y.frames[1:])
    b = head.side
    if not inner.is_proper:
        return Id(Disj(a, b)) if head.hole_left else SymDisj(a, b)
    e = ctx_frame(inner)
    rec = tau_disj(inner, a)
    if head.hole_left:
        if isinstance(rec, Id):
            return AssocBwd(DISJ, a, e, b)
        return Comp(AssocBwd(DISJ, a, e, b), Tens(DISJ, rec, Id(b)))
    steps = [AssocBwd(DISJ, a, b, e), Tens(DISJ, SymDisj(a, b), Id(e)), AssocFwd(DISJ, b, a, e)]
    if not isinstance(rec, Id):
        steps.append(Tens(DISJ, Id(b), rec))
    return comp(*steps)


def tau_disj_inv(Y: Context, a: Formula) -> ArrowTerm:
    """τ∨⁻¹_{Y,A} : A ∨ D_Y ⊢ Y(A)"""
    _check_polarity(Y, DISJ)
    head, inner = Y.frames[0], Context(Y.frames[1:])
    b = head.side
    if not inner.is_proper:
        return Id(Disj(a, b)) if head.hole_left else SymDisj(b, a)
    e = ctx_frame(inner)
    rec = tau_disj_inv(inner, a)
    if head.hole_left:
        if isinstance(rec, Id):
            return AssocFwd(DISJ, a, e, b)
        return Comp(Tens(DISJ, rec, Id(b)), AssocFwd(DISJ, a, e, b))
    steps = [AssocBwd(DISJ, b, a, e), Tens(DISJ, SymDisj(b, a), Id(e)), AssocFwd(DISJ, a, b, e)]
    if not isinstance(rec, Id):
        steps.insert(0, Tens(DISJ, Id(b), rec))
    return comp(*steps)


def d_ctx(X: Context, a: Formula, Y: Context) -> ArrowTerm:
    """d_{X,A,Y} : X(Y(A)) ⊢ Y(X(A)); the identity when either context is empty."""
    if not X.has_polarity(CONJ) or not Y.has_polarity(DISJ):
        raise ContextError("d_{X,A,Y} needs an ∧-context X and an ∨-context Y")
    if not X.is_proper:
        return Id(ctx_apply(Y, a))
    if not Y.is_proper:
        return Id(ctx_apply(X, a))
    e, d = ctx_frame(X), ctx_frame(Y)
    return comp(
        tau_disj_inv(Y, ctx_apply(X, a)),
        Tens(DISJ, tau_conj(X, a), Id(d)),
        Dist(e, a, d),
        Tens(CONJ, Id(e), tau_disj(Y, a)),
        tau_conj_inv(X, ctx_apply(Y, a)),
    )


def reduced(xi: Conn, a: Formula) -> Formula:
    """A^r: the target of ρ^ξ_A."""
    return type_of(rho(xi, a))[1]


def rho(xi: Conn, a: Formula) -> ArrowTerm:
    """ρ^ξ_A : A ⊢ A^r for a ξ-nice formula A."""
    if is_constant_free(a) or a == xi.unit():
        return Id(a)
    if not xi.owns(a):
        raise NotNiceError(f"{show(a)} is not {xi.symbol}-nice")
    left, right = rho(xi, a.left), rho(xi, a.right)
    both = Tens(xi, left, right)
    if not is_literate(a.right):
        return Comp(UnitDelFwd(xi, type_of(left)[1]), both)
    if not is_literate(a.left):
        return Comp(sigma_fwd(xi, type_of(right)[1]), both)
    return both


def rho_inv(xi: Conn, a: Formula) -> ArrowTerm:
    """(ρ^ξ_A)⁻¹ : A^r ⊢ A"""
    if is_constant_free(a) or a == xi.unit():
        return Id(a)
    if not xi.owns(a):
        raise NotNiceError(f"{show(a)} is not {xi.symbol}-nice")
    left, right = rho_inv(xi, a.left), rho_inv(xi, a.right)
    both = Tens(xi, left, right)
    if not is_literate(a.right):
        return Comp(both, UnitDelBwd(xi, type_of(left)[0]))
    if not is_literate(a.left):
        return Comp(both, sigma_bwd(xi, type_of(right)[0]))
    return both


DERIVED = {
    "d_r": d_r,
    "sigma_conj": sigma_conj,
    "delta_disj": delta_disj,
    "delta_prime": delta_prime,
    "sigma_prime": sigma_prime,
    "sigma_fwd": sigma_fwd,
    "sigma_bwd": sigma_bwd,
    "tau_l": tau_l,
    "gamma_r": gamma_r,
    "delta_conj_from_units": delta_conj_from_units,
    "sigma_disj_from_units": sigma_disj_from_units,
    "eps_disj": eps_disj,
    "eps_conj": eps_conj,
    "tau_conj": tau_conj,
    "tau_conj_inv": tau_conj_inv,
    "tau_disj": tau_disj,
    "tau_disj_inv": tau_disj_inv,
    "d_ctx": d_ctx,
    "rho": rho,
    "rho_inv": rho_inv,
}


def derived(kind: str, *params) -> ArrowTerm:
    """Build a derived arrow by name, e.g. ``derived("d_r", c, b, a)``."""
    try:
        build = DERIVED[kind]
    except KeyError:
        raise ValueError(f"unknown derived arrow {kind!r}") from None
    return build(*params)
