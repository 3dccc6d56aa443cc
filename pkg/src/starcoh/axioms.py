"""The equational axioms of DS, PN¬ and S as schemas, with instantiation and rewriting.

A schema is a pair of term templates over formula variables (``A``, ``B`` …)
and arrow variables (``f``, ``g`` …).  Arrow variables carry declared types,
so binding an arrow also binds the formula variables in its type.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable, Optional

from . import arrows as ar
from .arrows import (
    ArrowTerm,
    AssocBwd,
    AssocFwd,
    Comp,
    DeltaConj,
    Dist,
    Id,
    SigmaDisj,
    SymConj,
    SymDisj,
    Tens,
    UnitDelBwd,
    UnitDelFwd,
    comp,
    type_of,
)
from .errors import RewriteError, TypeMismatch
from .formula import BOT, CONJ, DISJ, TOP, Conj, Disj, Formula, Neg, show


@dataclass(frozen=True, repr=False)
class FVar(Formula):
    """A formula variable inside a schema template."""

    name: str

    def __repr__(self) -> str:
        return f"?{self.name}"


@dataclass(frozen=True)
class AVar(ArrowTerm):
    """An arrow variable inside a schema template."""

    name: str


@dataclass(frozen=True)
class AxiomSchema:
    name: str
    label: str
    system: str  # "ds", "pn" or "s"
    formula_params: tuple
    arrow_params: tuple  # (name, source template, target template), in generation order
    lhs: ArrowTerm
    rhs: ArrowTerm

    def __str__(self) -> str:
        return self.name


# ------------------------------------------------------------------ matching


def _match_formula(pat: Formula, A: Formula, env: dict) -> bool:
    if not isinstance(pat, Formula):
        return pat == A
    if isinstance(pat, FVar):
        bound = env.get(pat.name)
        if bound is None:
            env[pat.name] = A
            return True
        return bound == A
    if type(pat) is not type(A):
        return False
    for field in dataclasses.fields(pat):
        if not _match_formula(getattr(pat, field.name), getattr(A, field.name), env):
            return False
    return True


def _match_term(pat: ArrowTerm, f: ArrowTerm, env: dict) -> bool:
    if isinstance(pat, AVar):
        bound = env.get(pat.name)
        if bound is None:
            env[pat.name] = f
            return True
        return bound == f
    if type(pat) is not type(f):
        return False
    for field in dataclasses.fields(pat):
        p, v = getattr(pat, field.name), getattr(f, field.name)
        if isinstance(p, ArrowTerm):
            ok = _match_term(p, v, env)
        elif isinstance(p, Formula):
            ok = _match_formula(p, v, env)
        else:
            ok = p == v
        if not ok:
            return False
    return True


def _subst_formula(pat: Formula, env: dict) -> Formula:
    if isinstance(pat, FVar):
        return env[pat.name]
    if not dataclasses.is_dataclass(pat) or not dataclasses.fields(pat):
        return pat
    values = [getattr(pat, fl.name) for fl in dataclasses.fields(pat)]
    if all(not isinstance(v, Formula) for v in values):
        return pat
    return type(pat)(*[_subst_formula(v, env) if isinstance(v, Formula) else v for v in values])


def _subst_term(pat: ArrowTerm, env: dict) -> ArrowTerm:
    if isinstance(pat, AVar):
        return env[pat.name]
    values = []
    for fl in dataclasses.fields(pat):
        v = getattr(pat, fl.name)
        if isinstance(v, ArrowTerm):
            v = _subst_term(v, env)
        elif isinstance(v, Formula):
            v = _subst_formula(v, env)
        values.append(v)
    return type(pat)(*values)


def _bind_arrow_types(schema: AxiomSchema, env: dict) -> None:
    for name, src, tgt in schema.arrow_params:
        if name not in env:
            continue
        source, target = type_of(env[name])
        if not (_match_formula(src, source, env) and _match_formula(tgt, target, env)):
            raise TypeMismatch(f"arrow {name} does not have the type required by {schema.name}")


def _complete(schema: AxiomSchema, env: dict) -> None:
    _bind_arrow_types(schema, env)
    missing = [p for p in schema.formula_params if p not in env]
    missing += [a for a, _, _ in schema.arrow_params if a not in env]
    if missing:
        raise RewriteError(f"schema {schema.name} leaves {', '.join(missing)} unbound")


def axiom_instance(schema: AxiomSchema, subst: dict) -> tuple:
    """Instantiate both sides; ``subst`` maps variable names to formulae or arrows."""
    env: dict = {}
    for name, value in subst.items():
        if isinstance(value, ArrowTerm):
            env[name] = value
    _bind_arrow_types(schema, env)
    for name, value in subst.items():
        if isinstance(value, Formula):
            if name in env and env[name] != value:
                raise TypeMismatch(f"{name} := {show(value)} conflicts with the arrow types")
            env[name] = value
    _complete(schema, env)
    lhs, rhs = _subst_term(schema.lhs, env), _subst_term(schema.rhs, env)
    if type_of(lhs) != type_of(rhs):
        raise TypeMismatch(f"instance of {schema.name} has sides of different types")
    return lhs, rhs


def subterm_at(f: ArrowTerm, at: tuple) -> ArrowTerm:
    for step in at:
        if not isinstance(f, (Comp, Tens)) or step not in (0, 1):
            raise RewriteError(f"position {at} does not exist in the term")
        f = f.f if step == 0 else f.g
    return f


def replace_subterm(f: ArrowTerm, at: tuple, new: ArrowTerm) -> ArrowTerm:
    if not at:
        return new
    if not isinstance(f, (Comp, Tens)):
        raise RewriteError(f"position {at} does not exist in the term")
    if at[0] == 0:
        return dataclasses.replace(f, f=replace_subterm(f.f, at[1:], new))
    return dataclasses.replace(f, g=replace_subterm(f.g, at[1:], new))


def match(schema: AxiomSchema, f: ArrowTerm, direction: str = "forward") -> Optional[dict]:
    """Bindings making one side of ``schema`` equal to ``f``, or None."""
    pattern = schema.lhs if direction == "forward" else schema.rhs
    env: dict = {}
    if not _match_term(pattern, f, env):
        return None
    try:
        _complete(schema, env)
    except (RewriteError, TypeMismatch):
        return None
    return env


def rewrite(f: ArrowTerm, at: tuple, schema: AxiomSchema, direction: str = "forward") -> ArrowTerm:
    """Replace the subterm at ``at`` by the other side of a matching schema instance.

    ``direction`` is ``"forward"`` (left side to right side) or ``"backward"``.
    """
    if direction not in ("forward", "backward"):
        raise ValueError("direction must be 'forward' or 'backward'")
    env = match(schema, subterm_at(f, at), direction)
    if env is None:
        raise RewriteError(f"{schema.name} does not match at {at}")
    other = schema.rhs if direction == "forward" else schema.lhs
    result = replace_subterm(f, at, _subst_term(other, env))
    if type_of(result) != type_of(f):
        raise TypeMismatch("rewrite changed the type")
    return result


def positions(f: ArrowTerm, at: tuple = ()):
    """All subterm positions, outermost first."""
    yield at
    if isinstance(f, (Comp, Tens)):
        yield from positions(f.f, at + (0,))
        yield from positions(f.g, at + (1,))


# ------------------------------------------------------------------ catalog

A, B, C, D, E, F = (FVar(x) for x in "ABCDEF")
A1, A2, B1, B2, C1, C2 = (FVar(x) for x in ("A1", "A2", "B1", "B2", "C1", "C2"))
f, g, h = AVar("f"), AVar("g"), AVar("h")
f1, f2, g1, g2 = AVar("f1"), AVar("f2"), AVar("g1"), AVar("g2")

CATALOG: list = []


def _schema(name: str, label: str, system: str, formulas: str, arrows_: tuple, build: Callable) -> None:
    lhs, rhs = build()
    CATALOG.append(AxiomSchema(name, label, system, tuple(formulas.split()), arrows_, lhs, rhs))


_schema("cat1_src", "f∘1_A = f", "ds", "A B", (("f", A, B),), lambda: (Comp(f, Id(A)), f))
_schema("cat1_tgt", "1_B∘f = f", "ds", "A B", (("f", A, B),), lambda: (Comp(Id(B), f), f))
_schema(
    "cat2",
    "h∘(g∘f) = (h∘g)∘f",
    "ds",
    "A B C D",
    (("f", A, B), ("g", B, C), ("h", C, D)),
    lambda: (Comp(h, Comp(g, f)), Comp(Comp(h, g), f)),
)

for xi in (CONJ, DISJ):
    s = xi.symbol
    _schema(f"xi1_{xi.word}", f"1_A{s}1_B = 1_{{A{s}B}}", "ds", "A B", (), lambda xi=xi: (Tens(xi, Id(A), Id(B)), Id(xi.make(A, B))))
    _schema(
        f"xi2_{xi.word}",
        f"(g1∘f1){s}(g2∘f2) = (g1{s}g2)∘(f1{s}f2)",
        "ds",
        "A1 B1 C1 A2 B2 C2",
        (("f1", A1, B1), ("g1", B1, C1), ("f2", A2, B2), ("g2", B2, C2)),
        lambda xi=xi: (Tens(xi, Comp(g1, f1), Comp(g2, f2)), Comp(Tens(xi, g1, g2), Tens(xi, f1, f2))),
    )
    _schema(
        f"b_nat_{xi.word}",
        f"((f{s}g){s}h)∘b→ = b→∘(f{s}(g{s}h))",
        "ds",
        "A B C D E F",
        (("f", A, D), ("g", B, E), ("h", C, F)),
        lambda xi=xi: (
            Comp(Tens(xi, Tens(xi, f, g), h), AssocFwd(xi, A, B, C)),
            Comp(AssocFwd(xi, D, E, F), Tens(xi, f, Tens(xi, g, h))),
        ),
    )

_schema(
    "c_conj_nat",
    "(g∧f)∘c∧_{A,B} = c∧_{D,E}∘(f∧g)",
    "ds",
    "A B D E",
    (("f", A, D), ("g", B, E)),
    lambda: (Comp(Tens(CONJ, g, f), SymConj(A, B)), Comp(SymConj(D, E), Tens(CONJ, f, g))),
)
_schema(
    "c_disj_nat",
    "(g∨f)∘c∨_{B,A} = c∨_{E,D}∘(f∨g)",
    "ds",
    "A B D E",
    (("f", A, D), ("g", B, E)),
    lambda: (Comp(Tens(DISJ, g, f), SymDisj(B, A)), Comp(SymDisj(E, D), Tens(DISJ, f, g))),
)
_schema(
    "d_nat",
    "((f∧g)∨h)∘d_{A,B,C} = d_{D,E,F}∘(f∧(g∨h))",
    "ds",
    "A B C D E F",
    (("f", A, D), ("g", B, E), ("h", C, F)),
    lambda: (
        Comp(Tens(DISJ, Tens(CONJ, f, g), h), Dist(A, B, C)),
        Comp(Dist(D, E, F), Tens(CONJ, f, Tens(DISJ, g, h))),
    ),
)

for xi in (CONJ, DISJ):
    s = xi.symbol
    _schema(
        f"bb_{xi.word}_1",
        f"b{s}←∘b{s}→ = 1",
        "ds",
        "A B C",
        (),
        lambda xi=xi: (Comp(AssocBwd(xi, A, B, C), AssocFwd(xi, A, B, C)), Id(xi.make(A, xi.make(B, C)))),
    )
    _schema(
        f"bb_{xi.word}_2",
        f"b{s}→∘b{s}← = 1",
        "ds",
        "A B C",
        (),
        lambda xi=xi: (Comp(AssocFwd(xi, A, B, C), AssocBwd(xi, A, B, C)), Id(xi.make(xi.make(A, B), C))),
    )
    _schema(
        f"b5_{xi.word}",
        f"pentagon for {s}",
        "ds",
        "A B C D",
        (),
        lambda xi=xi: (
            Comp(AssocBwd(xi, A, B, xi.make(C, D)), AssocBwd(xi, xi.make(A, B), C, D)),
            comp(
                Tens(xi, Id(A), AssocBwd(xi, B, C, D)),
                AssocBwd(xi, A, xi.make(B, C), D),
                Tens(xi, AssocBwd(xi, A, B, C), Id(D)),
            ),
        ),
    )

_schema("cc_conj", "c∧_{B,A}∘c∧_{A,B} = 1", "ds", "A B", (), lambda: (Comp(SymConj(B, A), SymConj(A, B)), Id(Conj(A, B))))
_schema("cc_disj", "c∨_{A,B}∘c∨_{B,A} = 1", "ds", "A B", (), lambda: (Comp(SymDisj(A, B), SymDisj(B, A)), Id(Disj(A, B))))
_schema(
    "bc_conj",
    "hexagon for ∧",
    "ds",
    "A B C",
    (),
    lambda: (
        comp(
            Tens(CONJ, Id(B), SymConj(C, A)),
            AssocBwd(CONJ, B, C, A),
            SymConj(A, Conj(B, C)),
            AssocBwd(CONJ, A, B, C),
            Tens(CONJ, SymConj(B, A), Id(C)),
        ),
        AssocBwd(CONJ, B, A, C),
    ),
)
_schema(
    "bc_disj",
    "hexagon for ∨",
    "ds",
    "A B C",
    (),
    lambda: (
        comp(
            Tens(DISJ, Id(B), SymDisj(A, C)),
            AssocBwd(DISJ, B, C, A),
            SymDisj(Disj(B, C), A),
            AssocBwd(DISJ, A, B, C),
            Tens(DISJ, SymDisj(A, B), Id(C)),
        ),
        AssocBwd(DISJ, B, A, C),
    ),
)
_schema(
    "d_conj",
    "(b∧←∨1_D)∘d_{A∧B,C,D} = d_{A,B∧C,D}∘(1_A∧d_{B,C,D})∘b∧←",
    "ds",
    "A B C D",
    (),
    lambda: (
        Comp(Tens(DISJ, AssocBwd(CONJ, A, B, C), Id(D)), Dist(Conj(A, B), C, D)),
        comp(Dist(A, Conj(B, C), D), Tens(CONJ, Id(A), Dist(B, C, D)), AssocBwd(CONJ, A, B, Disj(C, D))),
    ),
)
_schema(
    "d_disj",
    "d_{D,C,B∨A}∘(1_D∧b∨←) = b∨←∘(d_{D,C,B}∨1_A)∘d_{D,C∨B,A}",
    "ds",
    "A B C D",
    (),
    lambda: (
        Comp(Dist(D, C, Disj(B, A)), Tens(CONJ, Id(D), AssocBwd(DISJ, C, B, A))),
        comp(AssocBwd(DISJ, Conj(D, C), B, A), Tens(DISJ, Dist(D, C, B), Id(A)), Dist(D, Disj(C, B), A)),
    ),
)
_schema(
    "db_conj",
    "d^R_{A∧B,C,D}∘(d_{A,B,C}∧1_D) = d_{A,B,C∧D}∘(1_A∧d^R_{B,C,D})∘b∧←",
    "ds",
    "A B C D",
    (),
    lambda: (
        Comp(ar.d_r(Conj(A, B), C, D), Tens(CONJ, Dist(A, B, C), Id(D))),
        comp(Dist(A, B, Conj(C, D)), Tens(CONJ, Id(A), ar.d_r(B, C, D)), AssocBwd(CONJ, A, Disj(B, C), D)),
    ),
)
_schema(
    "db_disj",
    "(1_D∨d_{C,B,A})∘d^R_{D,C,B∨A} = b∨←∘(d^R_{D,C,B}∨1_A)∘d_{D∨C,B,A}",
    "ds",
    "A B C D",
    (),
    lambda: (
        Comp(Tens(DISJ, Id(D), Dist(C, B, A)), ar.d_r(D, C, Disj(B, A))),
        comp(AssocBwd(DISJ, D, Conj(C, B), A), Tens(DISJ, ar.d_r(D, C, B), Id(A)), Dist(Disj(D, C), B, A)),
    ),
)

# PN¬
_schema(
    "delta_nat",
    "(f∧1)∘Δ∧_{B,A} = Δ∧_{B,D}∘f",
    "pn",
    "A B D",
    (("f", A, D),),
    lambda: (Comp(Tens(CONJ, f, Id(Disj(Neg(B), B))), DeltaConj(B, A)), Comp(DeltaConj(B, D), f)),
)
_schema(
    "sigma_nat",
    "f∘Σ∨_{B,A} = Σ∨_{B,D}∘(1∨f)",
    "pn",
    "A B D",
    (("f", A, D),),
    lambda: (Comp(f, SigmaDisj(B, A)), Comp(SigmaDisj(B, D), Tens(DISJ, Id(Conj(B, Neg(B))), f))),
)
_schema(
    "b_delta",
    "b∧←_{A,B,¬C∨C}∘Δ∧_{C,A∧B} = 1_A∧Δ∧_{C,B}",
    "pn",
    "A B C",
    (),
    lambda: (
        Comp(AssocBwd(CONJ, A, B, Disj(Neg(C), C)), DeltaConj(C, Conj(A, B))),
        Tens(CONJ, Id(A), DeltaConj(C, B)),
    ),
)
_schema(
    "b_sigma",
    "Σ∨_{C,B∨A}∘b∨←_{C∧¬C,B,A} = Σ∨_{C,B}∨1_A",
    "pn",
    "A B C",
    (),
    lambda: (
        Comp(SigmaDisj(C, Disj(B, A)), AssocBwd(DISJ, Conj(C, Neg(C)), B, A)),
        Tens(DISJ, SigmaDisj(C, B), Id(A)),
    ),
)
_schema(
    "d_sigma",
    "d_{¬A∨A,B,C}∘Σ∧_{A,B∨C} = Σ∧_{A,B}∨1_C",
    "pn",
    "A B C",
    (),
    lambda: (
        Comp(Dist(Disj(Neg(A), A), B, C), ar.sigma_conj(A, Disj(B, C))),
        Tens(DISJ, ar.sigma_conj(A, B), Id(C)),
    ),
)
_schema(
    "d_delta",
    "Δ∨_{A,C∧B}∘d_{C,B,A∧¬A} = 1_C∧Δ∨_{A,B}",
    "pn",
    "A B C",
    (),
    lambda: (
        Comp(ar.delta_disj(A, Conj(C, B)), Dist(C, B, Conj(A, Neg(A)))),
        Tens(CONJ, Id(C), ar.delta_disj(A, B)),
    ),
)
_schema(
    "sigma_delta",
    "Σ∨_{A,A}∘d_{A,¬A,A}∘Δ∧_{A,A} = 1_A",
    "pn",
    "A",
    (),
    lambda: (comp(SigmaDisj(A, A), Dist(A, Neg(A), A), DeltaConj(A, A)), Id(A)),
)
_schema(
    "sigma_delta_prime",
    "Σ′_{A,¬A}∘d_{¬A,A,¬A}∘Δ′_{A,¬A} = 1_¬A",
    "pn",
    "A",
    (),
    lambda: (
        comp(ar.sigma_prime(A, Neg(A)), Dist(Neg(A), A, Neg(A)), ar.delta_prime(A, Neg(A))),
        Id(Neg(A)),
    ),
)

# S
for xi in (CONJ, DISJ):
    s, unit = xi.symbol, xi.unit()
    _schema(
        f"unit_nat_{xi.word}",
        f"f∘δ{s}→_A = δ{s}→_B∘(f{s}1)",
        "s",
        "A B",
        (("f", A, B),),
        lambda xi=xi, unit=unit: (Comp(f, UnitDelFwd(xi, A)), Comp(UnitDelFwd(xi, B), Tens(xi, f, Id(unit)))),
    )
    _schema(
        f"unit_iso_{xi.word}_1",
        f"δ{s}→∘δ{s}← = 1",
        "s",
        "A",
        (),
        lambda xi=xi: (Comp(UnitDelFwd(xi, A), UnitDelBwd(xi, A)), Id(A)),
    )
    _schema(
        f"unit_iso_{xi.word}_2",
        f"δ{s}←∘δ{s}→ = 1",
        "s",
        "A",
        (),
        lambda xi=xi, unit=unit: (Comp(UnitDelBwd(xi, A), UnitDelFwd(xi, A)), Id(xi.make(A, unit))),
    )
    _schema(
        f"b_unit_{xi.word}",
        f"b{s}←∘δ{s}←_{{A{s}B}} = 1_A{s}δ{s}←_B",
        "s",
        "A B",
        (),
        lambda xi=xi, unit=unit: (
            Comp(AssocBwd(xi, A, B, unit), UnitDelBwd(xi, xi.make(A, B))),
            Tens(xi, Id(A), UnitDelBwd(xi, B)),
        ),
    )

_schema(
    "d_sigma_unit",
    "d_{⊤,B,C}∘σ∧←_{B∨C} = σ∧←_B∨1_C",
    "s",
    "B C",
    (),
    lambda: (
        Comp(Dist(TOP, B, C), ar.sigma_bwd(CONJ, Disj(B, C))),
        Tens(DISJ, ar.sigma_bwd(CONJ, B), Id(C)),
    ),
)
_schema(
    "d_unit_disj",
    "δ∨→_{C∧B}∘d_{C,B,⊥} = 1_C∧δ∨→_B",
    "s",
    "B C",
    (),
    lambda: (
        Comp(UnitDelFwd(DISJ, Conj(C, B)), Dist(C, B, BOT)),
        Tens(CONJ, Id(C), UnitDelFwd(DISJ, B)),
    ),
)

SCHEMAS = {sc.name: sc for sc in CATALOG}


def schemas_for(system: str) -> list:
    """Schemas belonging to ``system`` or to a smaller one."""
    allowed = {"ds": ("ds",), "pn": ("ds", "pn"), "s": ("ds", "pn", "s")}[system]
    return [sc for sc in CATALOG if sc.system in allowed]
