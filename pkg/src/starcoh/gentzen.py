"""Gentzen terms (nets): sequent-style proof terms for S.

Every node stores the contexts and pivot formulae it acts on, so typing is
syntax-directed.  ``denote`` maps a net to the arrow term it stands for, and
``gentzenize`` goes the other way.
"""

from __future__ import annotations

from dataclasses import dataclass

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
    ctx_arrow,
    type_of,
)
from .errors import TypeMismatch
from .formula import (
    BOT,
    CONJ,
    DISJ,
    HOLE,
    TOP,
    Bot,
    Conj,
    Conn,
    Context,
    Disj,
    Formula,
    Letter,
    Neg,
    Top,
    ctx_apply,
    show,
)


class Net:
    __slots__ = ()

    @property
    def source(self) -> Formula:
        return net_type(self)[0]

    @property
    def target(self) -> Formula:
        return net_type(self)[1]

    def children(self) -> tuple:
        return ()

    def __str__(self) -> str:
        return show_net(self)


@dataclass(frozen=True)
class Ax(Net):
    """1_A for a letter, ⊤ or ⊥."""

    a: Formula


@dataclass(frozen=True)
class AssocHat(Net):
    """B̂: reassociate inside ``ctx`` on the source (∧) or target (∨) side."""

    conn: Conn
    direction: str  # "fwd" or "bwd"
    ctx: Context
    a: Formula
    b: Formula
    c: Formula
    body: Net

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True)
class SymHat(Net):
    """Ĉ: swap the two sides of a connective inside ``ctx``."""

    conn: Conn
    ctx: Context
    a: Formula
    b: Formula
    body: Net

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True)
class TopFwd(Net):
    """T̂→ : from A ⊢ B to ⊤ ∧ A ⊢ B"""

    body: Net

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True)
class TopBwd(Net):
    """T̂← : from ⊤ ∧ A ⊢ B to A ⊢ B"""

    body: Net

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True)
class BotBwd(Net):
    """N̂← : from B ⊢ A to B ⊢ A ∨ ⊥"""

    body: Net

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True)
class BotFwd(Net):
    """N̂→ : from B ⊢ A ∨ ⊥ to B ⊢ A"""

    body: Net

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True)
class ConjRule(Net):
    """∧̂ : from B_i ⊢ A_i ∨ C_i to B1 ∧ B2 ⊢ (A1 ∧ A2) ∨ (C1 ∨ C2)"""

    f1: Net
    f2: Net

    def children(self) -> tuple:
        return (self.f1, self.f2)


@dataclass(frozen=True)
class DisjRule(Net):
    """∨̂ : from C_i ∧ A_i ⊢ B_i to (C1 ∧ C2) ∧ (A1 ∨ A2) ⊢ B1 ∨ B2"""

    f1: Net
    f2: Net

    def children(self) -> tuple:
        return (self.f1, self.f2)


@dataclass(frozen=True)
class NegL(Net):
    """¬^L : from B ⊢ A ∨ C to B ∧ ¬A ⊢ C"""

    body: Net

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True)
class NegR(Net):
    """¬^R : from C ∧ A ⊢ B to C ⊢ ¬A ∨ B"""

    body: Net

    def children(self) -> tuple:
        return (self.body,)


@dataclass(frozen=True)
class Cut(Net):
    """cut_{X,Y}(f, g) with g : B ⊢ Y(A) and f : X(A) ⊢ C, giving X(B) ⊢ Y(C)."""

    x: Context
    y: Context
    a: Formula
    f: Net
    g: Net

    def children(self) -> tuple:
        return (self.f, self.g)


UNARY = (AssocHat, SymHat, TopFwd, TopBwd, BotBwd, BotFwd, NegL, NegR)


def with_children(node: Net, kids: tuple) -> Net:
    """A copy of ``node`` with new children (same order as ``children()``)."""
    if isinstance(node, Ax):
        return node
    if isinstance(node, AssocHat):
        return AssocHat(node.conn, node.direction, node.ctx, node.a, node.b, node.c, kids[0])
    if isinstance(node, SymHat):
        return SymHat(node.conn, node.ctx, node.a, node.b, kids[0])
    if isinstance(node, (TopFwd, TopBwd, BotBwd, BotFwd, NegL, NegR)):
        return type(node)(kids[0])
    if isinstance(node, (ConjRule, DisjRule)):
        return type(node)(kids[0], kids[1])
    return Cut(node.x, node.y, node.a, kids[0], kids[1])


def _right_nested(conn: Conn, direction: str) -> bool:
    """Whether the result of an AssocHat shows ``a ξ (b ξ c)`` at its hole."""
    return (conn is CONJ) == (direction == "fwd")


def _assoc_shapes(node: AssocHat) -> tuple:
    xi, a, b, c = node.conn, node.a, node.b, node.c
    right, left = xi.make(a, xi.make(b, c)), xi.make(xi.make(a, b), c)
    return (right, left) if _right_nested(node.conn, node.direction) else (left, right)


def _expect(actual: Formula, expected: Formula, what: str) -> None:
    if actual != expected:
        raise TypeMismatch(f"{what}: expected {show(expected)}, got {show(actual)}")


def _check_ctx(Z: Context, xi: Conn, what: str) -> None:
    if not Z.has_polarity(xi):
        raise TypeMismatch(f"{what} needs a {xi.symbol}-context, got {Z}")


def _rule_type(node: Net) -> tuple:
    if isinstance(node, Ax):
        if not isinstance(node.a, (Letter, Top, Bot)):
            raise TypeMismatch("axioms are only for letters and constants")
        return node.a, node.a
    if isinstance(node, Cut):
        _check_ctx(node.x, CONJ, "cut")
        _check_ctx(node.y, DISJ, "cut")
        sf, tf = net_type(node.f)
        sg, tg = net_type(node.g)
        _expect(sf, ctx_apply(node.x, node.a), "cut, source of the left premise")
        _expect(tg, ctx_apply(node.y, node.a), "cut, target of the right premise")
        return ctx_apply(node.x, sg), ctx_apply(node.y, tf)
    if isinstance(node, (ConjRule, DisjRule)):
        (s1, t1), (s2, t2) = net_type(node.f1), net_type(node.f2)
        if isinstance(node, ConjRule):
            if not (isinstance(t1, Disj) and isinstance(t2, Disj)):
                raise TypeMismatch("∧̂ needs premises with disjunctive targets")
            return Conj(s1, s2), Disj(Conj(t1.left, t2.left), Disj(t1.right, t2.right))
        if not (isinstance(s1, Conj) and isinstance(s2, Conj)):
            raise TypeMismatch("∨̂ needs premises with conjunctive sources")
        return Conj(Conj(s1.left, s2.left), Disj(s1.right, s2.right)), Disj(t1, t2)
    src, tgt = net_type(node.body)
    if isinstance(node, AssocHat):
        result, body = _assoc_shapes(node)
        _check_ctx(node.ctx, node.conn, "B̂")
        if node.conn is CONJ:
            _expect(src, ctx_apply(node.ctx, body), "B̂∧ body source")
            return ctx_apply(node.ctx, result), tgt
        _expect(tgt, ctx_apply(node.ctx, body), "B̂∨ body target")
        return src, ctx_apply(node.ctx, result)
    if isinstance(node, SymHat):
        xi = node.conn
        _check_ctx(node.ctx, xi, "Ĉ")
        body, result = xi.make(node.b, node.a), xi.make(node.a, node.b)
        if xi is CONJ:
            _expect(src, ctx_apply(node.ctx, body), "Ĉ∧ body source")
            return ctx_apply(node.ctx, result), tgt
        _expect(tgt, ctx_apply(node.ctx, body), "Ĉ∨ body target")
        return src, ctx_apply(node.ctx, result)
    if isinstance(node, TopFwd):
        return Conj(TOP, src), tgt
    if isinstance(node, TopBwd):
        if not (isinstance(src, Conj) and src.left == TOP):
            raise TypeMismatch("T̂← needs a source of the form ⊤ ∧ A")
        return src.right, tgt
    if isinstance(node, BotBwd):
        return src, Disj(tgt, BOT)
    if isinstance(node, BotFwd):
        if not (isinstance(tgt, Disj) and tgt.right == BOT):
            raise TypeMismatch("N̂→ needs a target of the form A ∨ ⊥")
        return src, tgt.left
    if isinstance(node, NegL):
        if not isinstance(tgt, Disj):
            raise TypeMismatch("¬^L needs a disjunctive target")
        return Conj(src, Neg(tgt.left)), tgt.right
    if isinstance(node, NegR):
        if not isinstance(src, Conj):
            raise TypeMismatch("¬^R needs a conjunctive source")
        return src.left, Disj(Neg(src.right), tgt)
    raise TypeError(f"not a net: {node!r}")


def net_type(g: Net) -> tuple:
    """``(source, target)`` of a well-typed net; raises TypeMismatch otherwise."""
    cached = g.__dict__.get("_type")
    if cached is not None:
        return cached
    stack = [g]
    while stack:
        node = stack[-1]
        pending = [k for k in node.children() if "_type" not in k.__dict__]
        if pending:
            stack.extend(pending)
            continue
        object.__setattr__(node, "_type", _rule_type(node))
        stack.pop()
    return g.__dict__["_type"]


def is_cut_free(g: Net) -> bool:
    stack = [g]
    while stack:
        node = stack.pop()
        if isinstance(node, Cut):
            return False
        stack.extend(node.children())
    return True


def count_cuts(g: Net) -> int:
    stack, n = [g], 0
    while stack:
        node = stack.pop()
        n += isinstance(node, Cut)
        stack.extend(node.children())
    return n


def net_size(g: Net) -> int:
    stack, n = [g], 0
    while stack:
        node = stack.pop()
        n += 1
        stack.extend(node.children())
    return n


# ------------------------------------------------------------------ denotation


def _denote_node(node: Net, kids: list) -> ArrowTerm:
    if isinstance(node, Ax):
        return Id(node.a)
    if isinstance(node, AssocHat):
        gen = (AssocFwd if node.direction == "fwd" else AssocBwd)(node.conn, node.a, node.b, node.c)
        lifted = ctx_arrow(node.ctx, gen)
        return Comp(kids[0], lifted) if node.conn is CONJ else Comp(lifted, kids[0])
    if isinstance(node, SymHat):
        if node.conn is CONJ:
            return Comp(kids[0], ctx_arrow(node.ctx, SymConj(node.a, node.b)))
        return Comp(ctx_arrow(node.ctx, SymDisj(node.a, node.b)), kids[0])
    src, tgt = net_type(node.children()[0]) if node.children() else (None, None)
    if isinstance(node, TopFwd):
        return Comp(kids[0], ar.sigma_fwd(CONJ, src))
    if isinstance(node, TopBwd):
        return Comp(kids[0], ar.sigma_bwd(CONJ, src.right))
    if isinstance(node, BotBwd):
        return Comp(UnitDelBwd(DISJ, tgt), kids[0])
    if isinstance(node, BotFwd):
        return Comp(UnitDelFwd(DISJ, tgt.left), kids[0])
    if isinstance(node, ConjRule):
        t1, t2 = net_type(node.f1)[1], net_type(node.f2)[1]
        return Comp(ar.eps_disj(t1.left, t2.left, t1.right, t2.right), Tens(CONJ, kids[0], kids[1]))
    if isinstance(node, DisjRule):
        s1, s2 = net_type(node.f1)[0], net_type(node.f2)[0]
        return Comp(Tens(DISJ, kids[0], kids[1]), ar.eps_conj(s1.left, s2.left, s1.right, s2.right))
    if isinstance(node, NegL):
        a, c = tgt.left, tgt.right
        return comp(
            ar.sigma_prime(a, c),
            Dist(Neg(a), a, c),
            SymConj(Disj(a, c), Neg(a)),
            Tens(CONJ, kids[0], Id(Neg(a))),
        )
    if isinstance(node, NegR):
        c, a = src.left, src.right
        return comp(
            Tens(DISJ, Id(Neg(a)), kids[0]),
            SymDisj(Neg(a), Conj(c, a)),
            Dist(c, a, Neg(a)),
            ar.delta_prime(a, c),
        )
    if isinstance(node, Cut):
        df, dg = kids
        if not node.x.is_proper and not node.y.is_proper:
            return Comp(df, dg)
        if not node.x.is_proper or not node.y.is_proper:
            return Comp(ctx_arrow(node.y, df), ctx_arrow(node.x, dg))
        return comp(ctx_arrow(node.y, df), ar.d_ctx(node.x, node.a, node.y), ctx_arrow(node.x, dg))
    raise TypeError(f"not a net: {node!r}")


def denote(g: Net) -> ArrowTerm:
    """The arrow term a net stands for."""
    net_type(g)
    memo: dict = {}
    stack = [g]
    while stack:
        node = stack[-1]
        if id(node) in memo:
            stack.pop()
            continue
        pending = [k for k in node.children() if id(k) not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[id(node)] = _denote_node(node, [memo[id(k)] for k in node.children()])
        stack.pop()
    return memo[id(g)]


def net_graph(g: Net, memo: dict = None):
    """G(denote(g)), computed node by node; ``memo`` may be shared between calls."""
    from .graph import Known, graph_of

    net_type(g)
    memo = {} if memo is None else memo
    stack = [g]
    while stack:
        node = stack[-1]
        if id(node) in memo:
            stack.pop()
            continue
        pending = [k for k in node.children() if id(k) not in memo]
        if pending:
            stack.extend(pending)
            continue
        kids = [Known(*net_type(k), memo[id(k)][1]) for k in node.children()]
        # the memo holds the node itself so that its id is not reused
        memo[id(node)] = (node, graph_of(_denote_node(node, kids)))
        stack.pop()
    return memo[id(g)][1]


# ------------------------------------------------------------------ identity nets and gentzenization


def identity_net(a: Formula) -> Net:
    """A cut-free net denoting 1_A."""
    if isinstance(a, (Letter, Top, Bot)):
        return Ax(a)
    if isinstance(a, Conj):
        return tens_net(CONJ, identity_net(a.left), identity_net(a.right))
    if isinstance(a, Disj):
        return tens_net(DISJ, identity_net(a.left), identity_net(a.right))
    # ¬A: N̂→ ¬^R Ĉ∧_□ ¬^L N̂← 1_A
    inner = NegL(BotBwd(identity_net(a.sub)))
    return BotFwd(NegR(SymHat(CONJ, HOLE, Neg(a.sub), a.sub, inner)))


def tens_net(xi: Conn, g1: Net, g2: Net) -> Net:
    """A net denoting the tensor g1 ξ g2, built from ∧̂ or ∨̂."""
    if xi is CONJ:
        joined = ConjRule(BotBwd(g1), BotBwd(g2))
        t1, t2 = net_type(g1)[1], net_type(g2)[1]
        return BotFwd(BotFwd(AssocHat(DISJ, "fwd", HOLE, Conj(t1, t2), BOT, BOT, joined)))
    joined = DisjRule(TopFwd(g1), TopFwd(g2))
    s1, s2 = net_type(g1)[0], net_type(g2)[0]
    return TopBwd(TopBwd(AssocHat(CONJ, "fwd", HOLE, TOP, TOP, Disj(s1, s2), joined)))


def gentzenize(f: ArrowTerm) -> Net:
    """A net whose denotation equals ``f`` in S."""
    type_of(f)
    return _gentzenize(f)


def _gentzenize(f: ArrowTerm) -> Net:
    if isinstance(f, Comp):
        return Cut(HOLE, HOLE, type_of(f.g)[1], _gentzenize(f.f), _gentzenize(f.g))
    if isinstance(f, Tens):
        return tens_net(f.conn, _gentzenize(f.f), _gentzenize(f.g))
    if isinstance(f, Id):
        return identity_net(f.a)
    if isinstance(f, (AssocFwd, AssocBwd)):
        direction = "fwd" if isinstance(f, AssocFwd) else "bwd"
        start = type_of(f)[0] if f.conn is DISJ else type_of(f)[1]
        return AssocHat(f.conn, direction, HOLE, f.a, f.b, f.c, identity_net(start))
    if isinstance(f, SymConj):
        return SymHat(CONJ, HOLE, f.a, f.b, identity_net(Conj(f.b, f.a)))
    if isinstance(f, SymDisj):
        return SymHat(DISJ, HOLE, f.a, f.b, identity_net(Disj(f.b, f.a)))
    if isinstance(f, Dist):
        return Cut(
            Context.right(CONJ, f.a),
            Context.left(DISJ, f.c),
            f.b,
            identity_net(Conj(f.a, f.b)),
            identity_net(Disj(f.b, f.c)),
        )
    if isinstance(f, DeltaConj):
        right = NegR(TopFwd(identity_net(f.b)))
        return TopBwd(SymHat(CONJ, HOLE, TOP, f.a, tens_net(CONJ, identity_net(f.a), right)))
    if isinstance(f, SigmaDisj):
        left = NegL(BotBwd(identity_net(f.b)))
        return BotFwd(SymHat(DISJ, HOLE, f.a, BOT, tens_net(DISJ, left, identity_net(f.a))))
    if isinstance(f, UnitDelFwd):
        if f.conn is CONJ:
            return SymHat(CONJ, HOLE, f.a, TOP, TopFwd(identity_net(f.a)))
        return BotFwd(identity_net(Disj(f.a, BOT)))
    if isinstance(f, UnitDelBwd):
        if f.conn is CONJ:
            return TopBwd(SymHat(CONJ, HOLE, TOP, f.a, identity_net(Conj(f.a, TOP))))
        return BotBwd(identity_net(f.a))
    raise TypeError(f"not an arrow term: {f!r}")


# ------------------------------------------------------------------ printing


def net_name(node: Net) -> str:
    if isinstance(node, AssocHat):
        return f"hat_assoc_{node.direction}_{node.conn.word}"
    if isinstance(node, SymHat):
        return f"hat_sym_{node.conn.word}"
    return {
        Ax: "ax",
        TopFwd: "top_fwd",
        TopBwd: "top_bwd",
        BotBwd: "bot_bwd",
        BotFwd: "bot_fwd",
        ConjRule: "conj_rule",
        DisjRule: "disj_rule",
        NegL: "neg_l",
        NegR: "neg_r",
        Cut: "cut",
    }[type(node)]


def show_net(node: Net) -> str:
    if isinstance(node, Ax):
        args = [show(node.a)]
    elif isinstance(node, AssocHat):
        args = [str(node.ctx), show(node.a), show(node.b), show(node.c), show_net(node.body)]
    elif isinstance(node, SymHat):
        args = [str(node.ctx), show(node.a), show(node.b), show_net(node.body)]
    elif isinstance(node, Cut):
        args = [str(node.x), str(node.y), show(node.a), show_net(node.f), show_net(node.g)]
    else:
        args = [show_net(k) for k in node.children()]
    return f"{net_name(node)}({', '.join(args)})"
