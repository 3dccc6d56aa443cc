"""Random formulae, arrow terms, schema instances and nets for testing.

All functions take a ``random.Random`` so runs are reproducible.  ``system``
is one of ``"ds"`` (letters, ∧, ∨), ``"pn"`` (adds ¬ and Δ/Σ) or ``"s"``
(adds ⊤, ⊥ and the unit arrows).
"""

from __future__ import annotations

import random

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
    subterms,
    type_of,
)
from .axioms import (
    AxiomSchema,
    FVar,
    _match_formula,
    _subst_formula,
    axiom_instance,
    match,
    positions,
    rewrite,
    schemas_for,
    subterm_at,
)
from .errors import RewriteError, TypeMismatch
from .formula import BOT, CONJ, DISJ, TOP, Conj, Disj, Formula, Letter, Neg, letter_count, subformula
from .gentzen import Net, count_cuts, gentzenize

ALPHABET = "pqrs"
SYSTEMS = ("ds", "pn", "s")


def random_formula(rng: random.Random, max_letters: int = 4, system: str = "s", alphabet: str = ALPHABET) -> Formula:
    """A formula with between 1 and ``max_letters`` leaves."""
    return _formula(rng, rng.randint(1, max(1, max_letters)), system, alphabet)


def _formula(rng: random.Random, leaves: int, system: str, alphabet: str) -> Formula:
    if leaves == 1:
        if system == "s" and rng.random() < 0.15:
            return rng.choice((TOP, BOT))
        atom = Letter(rng.choice(alphabet))
        if system != "ds" and rng.random() < 0.2:
            return Neg(atom)
        return atom
    if system != "ds" and rng.random() < 0.1:
        return Neg(_formula(rng, leaves, system, alphabet))
    k = rng.randint(1, leaves - 1)
    left, right = _formula(rng, k, system, alphabet), _formula(rng, leaves - k, system, alphabet)
    return Conj(left, right) if rng.random() < 0.5 else Disj(left, right)


def _binary_paths(A: Formula, path: tuple = ()) -> list:
    out = [path]
    if isinstance(A, (Conj, Disj)):
        out += _binary_paths(A.left, path + (0,))
        out += _binary_paths(A.right, path + (1,))
    return out


def _local_moves(rng: random.Random, S: Formula, system: str, budget: int, alphabet: str) -> list:
    """Generators (or short composites) with source ``S``."""
    moves = []
    for xi in (CONJ, DISJ):
        if xi.owns(S):
            if xi.owns(S.right):
                moves.append(AssocFwd(xi, S.left, S.right.left, S.right.right))
            if xi.owns(S.left):
                moves.append(AssocBwd(xi, S.left.left, S.left.right, S.right))
    if isinstance(S, Conj):
        moves.append(SymConj(S.left, S.right))
        if isinstance(S.right, Disj):
            moves.append(Dist(S.left, S.right.left, S.right.right))
    if isinstance(S, Disj):
        moves.append(SymDisj(S.right, S.left))
    if system == "ds":
        return moves
    if (
        isinstance(S, Disj)
        and isinstance(S.left, Conj)
        and isinstance(S.left.right, Neg)
        and S.left.right.sub == S.left.left
    ):
        moves.append(SigmaDisj(S.left.left, S.right))
    if budget >= 1:
        moves.append(DeltaConj(_formula(rng, 1, "pn" if system == "pn" else system, alphabet), S))
    if budget >= 3 and letter_count(S) <= 2:
        # the snake S ⊢ S ∧ (¬S ∨ S) ⊢ (S ∧ ¬S) ∨ S ⊢ S
        moves.append(comp(SigmaDisj(S, S), Dist(S, Neg(S), S), DeltaConj(S, S)))
    if system == "s":
        moves.append(UnitDelBwd(rng.choice((CONJ, DISJ)), S))
        if isinstance(S, Conj) and S.right == TOP:
            moves.append(UnitDelFwd(CONJ, S.left))
        if isinstance(S, Disj) and S.right == BOT:
            moves.append(UnitDelFwd(DISJ, S.left))
    return moves


def _lift(A: Formula, path: tuple, f: ArrowTerm) -> ArrowTerm:
    """``f`` acting on the subformula at ``path``, tensored with identities elsewhere."""
    if not path:
        return f
    xi = CONJ if isinstance(A, Conj) else DISJ
    if path[0] == 0:
        return Tens(xi, _lift(A.left, path[1:], f), Id(A.right))
    return Tens(xi, Id(A.left), _lift(A.right, path[1:], f))


def random_step(rng: random.Random, A: Formula, system: str = "s", budget: int = 1, alphabet: str = ALPHABET) -> ArrowTerm:
    """A generator applied inside ``A`` at a random position, lifted by identities."""
    grow = letter_count(A) < 6
    paths = _binary_paths(A)
    rng.shuffle(paths)
    for path in paths:
        S = subformula(A, path)
        moves = _local_moves(rng, S, system, budget if grow else 0, alphabet)
        if moves:
            return _lift(A, path, rng.choice(moves))
    return Id(A)


def random_term(
    rng: random.Random,
    max_generators: int = 6,
    system: str = "s",
    source: Formula = None,
    max_letters: int = 4,
    alphabet: str = ALPHABET,
) -> ArrowTerm:
    """A composite of lifted generators; ``max_generators`` bounds the non-identity leaves."""
    A = source if source is not None else random_formula(rng, max_letters, system, alphabet)
    steps = []
    used, goal = 0, rng.randint(1, max(1, max_generators))
    while used < goal:
        step = random_step(rng, A, system, goal - used, alphabet)
        steps.append(step)
        used += _cost(step)
        A = type_of(step)[1]
    return comp(*reversed(steps))


def _cost(f: ArrowTerm) -> int:
    return max(1, sum(1 for h in subterms(f) if not isinstance(h, (Comp, Tens, Id))))


def random_tensor_term(rng: random.Random, max_generators: int = 6, system: str = "s", max_letters: int = 4) -> ArrowTerm:
    """Like ``random_term`` but sometimes an explicit tensor of two smaller terms."""
    if max_generators >= 2 and rng.random() < 0.3:
        k = rng.randint(1, max_generators - 1)
        xi = rng.choice((CONJ, DISJ))
        half = max(1, max_letters // 2)
        return Tens(xi, random_term(rng, k, system, max_letters=half), random_term(rng, max_generators - k, system, max_letters=half))
    return random_term(rng, max_generators, system, max_letters=max_letters)


# ------------------------------------------------------------------ schema instances


def random_instance(rng: random.Random, schema: AxiomSchema, max_letters: int = 5, tries: int = 50) -> tuple:
    """Both sides of a random instance of ``schema`` with formulae of at most ``max_letters`` letters."""
    system = schema.system
    for _ in range(tries):
        env: dict = {}
        try:
            for name, src, tgt in schema.arrow_params:
                _bind_free(rng, src, env, system, max_letters)
                source = _subst_formula(src, env)
                term = _arrow_between(rng, source, tgt, env, system)
                if term is None:
                    raise RewriteError("no arrow of the required type")
                env[name] = term
                if not _match_formula(tgt, type_of(term)[1], env):
                    raise RewriteError("target mismatch")
            for name in schema.formula_params:
                if name not in env:
                    env[name] = random_formula(rng, max(1, max_letters // 2), system)
            lhs, rhs = axiom_instance(schema, env)
        except (RewriteError, TypeMismatch):
            continue
        if all(letter_count(A) <= max_letters for A in type_of(lhs)):
            return lhs, rhs
    raise RewriteError(f"could not instantiate {schema.name}")


def _free_vars(pat: Formula) -> list:
    if isinstance(pat, FVar):
        return [pat.name]
    if isinstance(pat, Neg):
        return _free_vars(pat.sub)
    if isinstance(pat, (Conj, Disj)):
        return _free_vars(pat.left) + _free_vars(pat.right)
    return []


def _bind_free(rng: random.Random, pat: Formula, env: dict, system: str, max_letters: int) -> None:
    for name in _free_vars(pat):
        if name not in env:
            env[name] = random_formula(rng, max(1, max_letters // 3), system)


def _arrow_between(rng: random.Random, source: Formula, tgt: Formula, env: dict, system: str):
    if all(v in env for v in _free_vars(tgt)):
        target = _subst_formula(tgt, env)
        return Id(source) if target == source else None
    if rng.random() < 0.25:
        return Id(source)
    return random_term(rng, 2, system, source=source)


def random_rewrite(rng: random.Random, f: ArrowTerm, system: str = "pn", tries: int = 40) -> ArrowTerm:
    """``f`` with one random schema rewrite applied somewhere, or ``f`` if none was found."""
    schemas = [sc for s in SYSTEMS[: SYSTEMS.index(system) + 1] for sc in schemas_for(s)]
    spots = list(positions(f))
    for _ in range(tries):
        at = rng.choice(spots)
        schema = rng.choice(schemas)
        direction = rng.choice(("forward", "backward"))
        if match(schema, subterm_at(f, at), direction) is None:
            continue
        try:
            return rewrite(f, at, schema, direction)
        except (RewriteError, TypeMismatch):
            continue
    return f


# ------------------------------------------------------------------ nets


def random_net(rng: random.Random, max_cuts: int = 3, max_letters: int = 4, max_generators: int = 4, system: str = "s") -> Net:
    """A well-typed net with at most ``max_cuts`` cuts, gentzenized from a random term."""
    while True:
        f = random_term(rng, max_generators, system, max_letters=max_letters)
        g = gentzenize(f)
        if count_cuts(g) <= max_cuts and all(letter_count(A) <= max_letters for A in type_of(f)):
            return g

