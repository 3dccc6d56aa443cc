"""Deciding equality of arrow terms by comparing graphs.

Graph equality is faithful for DS and PN¬ terms, and for S terms whose
endpoints reduce by ρ to constant-free formulae (padding with a fresh letter
when an endpoint reduces to ⊤ or ⊥).  Outside these cases equal graphs are
reported as ``GRAPH_EQUAL_ONLY``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional

from .arrows import ArrowTerm, Comp, Id, Tens, formulas_in, is_ds_term, is_pn_term, rho, rho_inv, type_of
from .brauer import BrauerArrow
from .errors import NotNiceError
from .formula import BOT, CONJ, DISJ, TOP, Conn, Formula, Letter, is_constant_free, is_nice, letters
from .graph import graph_of


class Verdict(enum.Enum):
    EQUAL = "equal"
    UNEQUAL = "unequal"
    GRAPH_EQUAL_ONLY = "graph-equal-only"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    graph1: Optional[BrauerArrow]
    graph2: Optional[BrauerArrow]
    reason: str


def _polarity(a: Formula, preferred: Conn) -> Conn:
    """The connective whose ρ reduces ``a``, trying ``preferred`` first."""
    for xi in (preferred, preferred.dual):
        if is_nice(xi, a):
            return xi
    raise NotNiceError(f"{a} is not nice for either connective")


def is_nice_endpoint(a: Formula) -> bool:
    return is_nice(CONJ, a) or is_nice(DISJ, a)


def rho_conjugate(f: ArrowTerm) -> ArrowTerm:
    """ρ_B ∘ f ∘ (ρ_A)⁻¹ for f : A ⊢ B; the endpoints become constant-free, ⊤ or ⊥."""
    a, b = type_of(f)
    xa, xb = _polarity(a, CONJ), _polarity(b, DISJ)
    out = f
    if not isinstance(rho_inv(xa, a), Id):
        out = Comp(out, rho_inv(xa, a))
    if not isinstance(rho(xb, b), Id):
        out = Comp(rho(xb, b), out)
    return out


def fresh_letter(*terms: ArrowTerm) -> Letter:
    """The first ``_z<k>`` not occurring in any of the terms."""
    used = {name for f in terms for A in formulas_in(f) for name in letters(A)}
    for k in itertools.count():
        name = f"_z{k}"
        if name not in used:
            return Letter(name)


def pad(f: ArrowTerm, xi: Conn, p: Letter) -> ArrowTerm:
    """f ξ 1_p"""
    return Tens(xi, f, Id(p))


def _system(f: ArrowTerm) -> str:
    if is_ds_term(f):
        return "ds"
    if is_pn_term(f):
        return "pn"
    return "s"


_ORDER = ("ds", "pn", "s")


def decide(f1: ArrowTerm, f2: ArrowTerm, system: Optional[str] = None) -> Decision:
    """Full decision record: verdict, both graphs and a short reason."""
    t1, t2 = type_of(f1), type_of(f2)
    if t1 != t2:
        return Decision(Verdict.UNEQUAL, None, None, "types differ")
    g1, g2 = graph_of(f1), graph_of(f2)
    if g1 != g2:
        return Decision(Verdict.UNEQUAL, g1, g2, "graphs differ")
    found = max(_system(f1), _system(f2), key=_ORDER.index)
    if system is not None:
        if system not in _ORDER:
            raise ValueError(f"unknown system {system!r}")
        if _ORDER.index(found) > _ORDER.index(system):
            raise NotNiceError(f"the terms are not both in {system}")
        found = system
    if found in ("ds", "pn"):
        return Decision(Verdict.EQUAL, g1, g2, f"graphs agree and G is faithful on {found}")
    a, b = t1
    if not (is_nice_endpoint(a) and is_nice_endpoint(b)):
        return Decision(Verdict.GRAPH_EQUAL_ONLY, g1, g2, "an endpoint is not nice")
    c1, c2 = rho_conjugate(f1), rho_conjugate(f2)
    ra, rb = type_of(c1)
    constants = {x for x in (ra, rb) if not is_constant_free(x)}
    if constants:
        if constants == {TOP}:
            xi = CONJ
        elif constants == {BOT}:
            xi = DISJ
        else:
            return Decision(Verdict.GRAPH_EQUAL_ONLY, g1, g2, "endpoints reduce to both ⊤ and ⊥")
        p = fresh_letter(f1, f2)
        c1, c2 = rho_conjugate(pad(c1, xi, p)), rho_conjugate(pad(c2, xi, p))
        if not all(is_constant_free(x) for x in type_of(c1)):
            return Decision(Verdict.GRAPH_EQUAL_ONLY, g1, g2, "padding did not remove the constants")
    if graph_of(c1) != graph_of(c2):
        return Decision(Verdict.UNEQUAL, g1, g2, "conjugated graphs differ")
    return Decision(Verdict.EQUAL, g1, g2, "endpoints are nice and graphs agree")


def equal_graphwise(f1: ArrowTerm, f2: ArrowTerm, system: Optional[str] = None) -> Verdict:
    """Equal, Unequal or GraphEqualOnly for two well-typed arrow terms."""
    return decide(f1, f2, system).verdict
