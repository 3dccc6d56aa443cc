"""The graph functor G from arrow terms to Br.

A formula goes to its number of letter occurrences.  Structural arrows that
merely regroup letters go to identities; the symmetries cross strands; Δ∧
adds caps and Σ∨ adds cups between a letter and its negated copy.
"""

from __future__ import annotations

from dataclasses import dataclass

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
    type_of,
)
from .brauer import BrauerArrow, compose, identity, s, shifted_union, t
from .formula import Formula, letter_count


@dataclass(frozen=True, eq=False)
class Known(ArrowTerm):
    """An opaque arrow of a fixed type whose graph is already computed."""

    src: Formula
    tgt: Formula
    graph: BrauerArrow

    def __post_init__(self) -> None:
        object.__setattr__(self, "_type", (self.src, self.tgt))


def generator_graph(gen: ArrowTerm) -> BrauerArrow:
    if isinstance(gen, Known):
        return gen.graph
    if isinstance(gen, (Id, AssocFwd, AssocBwd, Dist, UnitDelFwd, UnitDelBwd)):
        return identity(letter_count(type_of(gen)[0]))
    if isinstance(gen, (SymConj, SymDisj)):
        ga, gb = letter_count(gen.a), letter_count(gen.b)
        # c∧_{A,B}: source m meets target n when m - n is GA or -GB
        crossing = [(m, m + gb if m < ga else m - ga) for m in range(ga + gb)]
        if isinstance(gen, SymConj):
            return BrauerArrow(ga + gb, ga + gb, [(s(m), t(n)) for m, n in crossing])
        return BrauerArrow(ga + gb, ga + gb, [(s(n), t(m)) for m, n in crossing])
    if isinstance(gen, DeltaConj):
        ga, gb = letter_count(gen.a), letter_count(gen.b)
        pairs = [(s(i), t(i)) for i in range(ga)]
        pairs += [(t(ga + k), t(ga + gb + k)) for k in range(gb)]
        return BrauerArrow(ga, ga + 2 * gb, pairs)
    if isinstance(gen, SigmaDisj):
        ga, gb = letter_count(gen.a), letter_count(gen.b)
        pairs = [(s(k), s(gb + k)) for k in range(gb)]
        pairs += [(s(2 * gb + i), t(i)) for i in range(ga)]
        return BrauerArrow(ga + 2 * gb, ga, pairs)
    raise TypeError(f"not a generator: {gen!r}")


def graph_of(f: ArrowTerm) -> BrauerArrow:
    """G(f), computed bottom-up with one memo entry per subterm."""
    type_of(f)
    memo: dict = {}
    stack = [f]
    while stack:
        h = stack[-1]
        if id(h) in memo:
            stack.pop()
            continue
        if isinstance(h, (Comp, Tens)):
            pending = [k for k in (h.f, h.g) if id(k) not in memo]
            if pending:
                stack.extend(pending)
                continue
            gf, gg = memo[id(h.f)], memo[id(h.g)]
            memo[id(h)] = compose(gf, gg) if isinstance(h, Comp) else shifted_union(gf, gg, gf.m, gf.n)
        else:
            memo[id(h)] = generator_graph(h)
        stack.pop()
    return memo[id(f)]
