"""Clusters, cut complexity and the cut-elimination rewriter.

Cuts are eliminated innermost first, so the cut being reduced always has
cut-free premises.  Each reduction either removes the cut, replaces it by cuts
on proper subformulae, or pushes it past the last operation of one premise,
which lowers the rank.  Commuting a cut past an operation can leave the cut
formula's surroundings in a different bracketing or order than the one the
operation expects; ``_rewire`` restores it with B̂ and Ĉ steps.
"""

from __future__ import annotations

import contextlib
import sys
from dataclasses import dataclass, field
from typing import Optional

from .errors import CutElimError
from .formula import (
    BOT,
    CONJ,
    DISJ,
    HOLE,
    LEFT,
    RIGHT,
    TOP,
    Bot,
    Conj,
    Context,
    Disj,
    Formula,
    Letter,
    Neg,
    Path,
    Top,
    ctx_apply,
    ctx_at,
    ctx_compose,
    degree,
    is_superficial,
    replace_at,
    show,
    subformula,
)
from .gentzen import (
    AssocHat,
    Ax,
    BotBwd,
    BotFwd,
    ConjRule,
    Cut,
    DisjRule,
    NegL,
    NegR,
    Net,
    SymHat,
    TopBwd,
    TopFwd,
    is_cut_free,
    net_graph,
    net_type,
    with_children,
)

SOURCE, TARGET = "source", "target"


@dataclass(frozen=True)
class OccurrenceRef:
    """An occurrence in the sequent of the subnet at ``node`` (child indices from the root)."""

    node: tuple
    side: str
    path: Path


@dataclass(frozen=True, order=True)
class Complexity:
    degree: int
    rank: int

    def __str__(self) -> str:
        return f"({self.degree},{self.rank})"


@dataclass(frozen=True)
class TraceStep:
    rule: str
    formula: Formula
    before: Complexity
    after: Optional[Complexity] = None

    def __str__(self) -> str:
        after = "-" if self.after is None else str(self.after)
        return f"{self.rule:<22} {show(self.formula):<24} {self.before} -> {after}"


# ------------------------------------------------------------------ clusters


def _assoc_map(right_nested: bool, rest: Path) -> Path:
    """Move a path below the pivot of an AssocHat from result shape to body shape."""
    if right_nested:  # a(bc) -> (ab)c
        if rest[:1] == (LEFT,):
            return (LEFT, LEFT) + rest[1:]
        if rest[:2] == (RIGHT, LEFT):
            return (LEFT, RIGHT) + rest[2:]
        if rest[:2] == (RIGHT, RIGHT):
            return (RIGHT,) + rest[2:]
    else:  # (ab)c -> a(bc)
        if rest[:2] == (LEFT, LEFT):
            return (LEFT,) + rest[2:]
        if rest[:2] == (LEFT, RIGHT):
            return (RIGHT, LEFT) + rest[2:]
        if rest[:1] == (RIGHT,):
            return (RIGHT, RIGHT) + rest[1:]
    raise CutElimError("path stops inside the reassociated pivot")


def _acts_on(node: Net, side: str) -> bool:
    return (node.conn is CONJ) == (side == SOURCE)


def upper(node: Net, side: str, path: Path) -> Optional[tuple]:
    """The upper parameter of a lower occurrence: ``(child index, path)``, or None at a leaf."""
    def split(prefix: Path):
        return path[len(prefix):] if path[: len(prefix)] == prefix else None

    if isinstance(node, Ax):
        return None
    if isinstance(node, (AssocHat, SymHat)):
        if _acts_on(node, side):
            hp = node.ctx.path
            rest = split(hp)
            if rest is not None:
                if isinstance(node, SymHat):
                    if not rest:
                        raise CutElimError("path stops at the swapped pivot")
                    return 0, hp + (1 - rest[0],) + rest[1:]
                right_nested = (node.conn is CONJ) == (node.direction == "fwd")
                return 0, hp + _assoc_map(right_nested, rest)
        return 0, path
    if isinstance(node, TopFwd):
        return (0, path) if side == TARGET else (0, path[1:])
    if isinstance(node, TopBwd):
        return (0, path) if side == TARGET else (0, (RIGHT,) + path)
    if isinstance(node, BotBwd):
        return (0, path) if side == SOURCE else (0, path[1:])
    if isinstance(node, BotFwd):
        return (0, path) if side == SOURCE else (0, (LEFT,) + path)
    if isinstance(node, ConjRule):
        if side == SOURCE:
            return path[0], path[1:]
        if path == (LEFT,):
            return None
        return path[1], (RIGHT,) + path[2:]
    if isinstance(node, DisjRule):
        if side == TARGET:
            return path[0], path[1:]
        if path == (RIGHT,):
            return None
        return path[1], (LEFT,) + path[2:]
    if isinstance(node, NegL):
        if side == TARGET:
            return 0, (RIGHT,) + path
        if path == (RIGHT,):
            return None
        return 0, path[1:]
    if isinstance(node, NegR):
        if side == SOURCE:
            return 0, (LEFT,) + path
        if path == (LEFT,):
            return None
        return 0, path[1:]
    if isinstance(node, Cut):
        hole = node.x.path if side == SOURCE else node.y.path
        rest = split(hole)
        if side == SOURCE:
            return (1, rest) if rest is not None else (0, path)
        return (0, rest) if rest is not None else (1, path)
    raise TypeError(f"not a net: {node!r}")


def _cluster(g: Net, side: str, path: Path, cache: Optional[dict] = None) -> int:
    conn = CONJ if side == SOURCE else DISJ
    formula = net_type(g)[0 if side == SOURCE else 1]
    if not is_superficial(conn, formula, path):
        raise CutElimError(f"occurrence at {path} is not {conn.symbol}-superficial in the {side}")
    chain = []
    n = None
    while True:
        if cache is not None:
            hit = cache.get((id(g), side, path))
            if hit is not None:
                n = hit[1]
                break
        chain.append((g, path))
        up = upper(g, side, path)
        if up is None:
            n = 0
            break
        g, path = g.children()[up[0]], up[1]
    for node, p in reversed(chain):
        n += 1
        if cache is not None:
            # the node is kept alive by the cache so its id stays unique
            cache[(id(node), side, p)] = (node, n)
    return n


def cluster_length(g: Net, x: OccurrenceRef) -> int:
    """Length of the cluster of the occurrence ``x``."""
    node = g
    for i in x.node:
        node = node.children()[i]
    return _cluster(node, x.side, x.path)


def _measure(cut: Cut, cache: Optional[dict] = None) -> tuple:
    a = cut.a
    s = _cluster(cut.f, SOURCE, cut.x.path, cache) if not isinstance(a, (Top, Conj)) else None
    t = _cluster(cut.g, TARGET, cut.y.path, cache) if not isinstance(a, (Bot, Disj)) else None
    if isinstance(a, Letter):
        rank = min(s, t) - 1
    elif isinstance(a, Neg):
        rank = s + t - 2
    elif isinstance(a, (Top, Conj)):
        rank = t - 1
    else:
        rank = s - 1
    return Complexity(degree(a), rank), s, t


def cut_complexity(c: Cut) -> Complexity:
    """(degree, rank) of a topmost cut."""
    if not (is_cut_free(c.f) and is_cut_free(c.g)):
        raise CutElimError("complexity is only defined for topmost cuts")
    return _measure(c)[0]


# ------------------------------------------------------------------ rewiring


@dataclass(frozen=True)
class _Leaf:
    key: int
    formula: Formula


@dataclass(frozen=True)
class _Node:
    left: object
    right: object


def _shape_formula(sh, conn) -> Formula:
    if isinstance(sh, _Leaf):
        return sh.formula
    return conn.make(_shape_formula(sh.left, conn), _shape_formula(sh.right, conn))


def _get(sh, path: Path):
    for step in path:
        sh = sh.left if step == LEFT else sh.right
    return sh


def _put(sh, path: Path, new):
    if not path:
        return new
    if path[0] == LEFT:
        return _Node(_put(sh.left, path[1:], new), sh.right)
    return _Node(sh.left, _put(sh.right, path[1:], new))


def _rot_right(sh):
    return _Node(sh.left.left, _Node(sh.left.right, sh.right))


def _rot_left(sh):
    return _Node(_Node(sh.left, sh.right.left), sh.right.right)


def _keys(sh) -> list:
    return [sh.key] if isinstance(sh, _Leaf) else _keys(sh.left) + _keys(sh.right)


def _to_comb(sh, path: Path, steps: list):
    while isinstance(sh, _Node) and isinstance(sh.left, _Node):
        steps.append(("rotr", path))
        sh = _rot_right(sh)
    if isinstance(sh, _Node):
        sh = _Node(sh.left, _to_comb(sh.right, path + (RIGHT,), steps))
    return sh


def _canonical_steps(sh) -> list:
    """Steps taking ``sh`` to the right comb with keys in increasing order."""
    steps: list = []
    sh = _to_comb(sh, (), steps)
    keys = _keys(sh)
    n = len(keys)
    for i in range(n):
        for j in range(n - 1 - i):
            if keys[j] > keys[j + 1]:
                p = (RIGHT,) * j
                if j == n - 2:
                    steps.append(("swap", p))
                else:
                    steps += [("rotl", p), ("swap", p + (LEFT,)), ("rotr", p)]
                keys[j], keys[j + 1] = keys[j + 1], keys[j]
    return steps


_INVERSE = {"rotr": "rotl", "rotl": "rotr", "swap": "swap"}


def _rewire(net: Net, side: str, cur, goal) -> Net:
    """Extend ``net`` with B̂/Ĉ steps turning the ``side`` shape ``cur`` into ``goal``."""
    conn = CONJ if side == SOURCE else DISJ
    steps = _canonical_steps(cur) + [(_INVERSE[k], p) for k, p in reversed(_canonical_steps(goal))]
    sh = cur
    for kind, p in steps:
        z = ctx_at(_shape_formula(sh, conn), p)
        sub = _get(sh, p)
        if kind == "swap":
            a, b = _shape_formula(sub.right, conn), _shape_formula(sub.left, conn)
            net = SymHat(conn, z, a, b, net)
            new = _Node(sub.right, sub.left)
        elif kind == "rotr":
            a, b, c = (_shape_formula(x, conn) for x in (sub.left.left, sub.left.right, sub.right))
            net = AssocHat(conn, "fwd" if conn is CONJ else "bwd", z, a, b, c, net)
            new = _rot_right(sub)
        else:
            a, b, c = (_shape_formula(x, conn) for x in (sub.left, sub.right.left, sub.right.right))
            net = AssocHat(conn, "bwd" if conn is CONJ else "fwd", z, a, b, c, net)
            new = _rot_left(sub)
        sh = _put(sh, p, new)
    return net


class _Shapes:
    """Leaves for the sides of a context plus fresh leaves, with stable keys."""

    def __init__(self) -> None:
        self.n = 0

    def leaf(self, formula: Formula) -> _Leaf:
        self.n += 1
        return _Leaf(self.n, formula)

    def ctx(self, z: Context):
        leaves = [self.leaf(fr.side) for fr in z.frames]

        def fill(inner):
            for fr, lf in zip(reversed(z.frames), reversed(leaves)):
                inner = _Node(inner, lf) if fr.hole_left else _Node(lf, inner)
            return inner

        return fill


def _reapply(op: Net, result: Formula, hole: Path, body: Net) -> Net:
    """``op`` re-issued on ``body`` so that its acting side becomes ``result``."""
    z = ctx_at(result, hole)
    pivot = subformula(result, hole)
    if isinstance(op, SymHat):
        return SymHat(op.conn, z, pivot.left, pivot.right, body)
    if (op.conn is CONJ) == (op.direction == "fwd"):
        a, b, c = pivot.left, pivot.right.left, pivot.right.right
    else:
        a, b, c = pivot.left.left, pivot.left.right, pivot.right
    return AssocHat(op.conn, op.direction, z, a, b, c, body)


# ------------------------------------------------------------------ elimination


@dataclass
class _Run:
    prefer: str
    check: bool
    trace: list = field(default_factory=list)
    clusters: dict = field(default_factory=dict)
    graphs: dict = field(default_factory=dict)

    def topmost(self, cut: Cut, parent: Optional[Complexity], measured: Optional[tuple] = None) -> Net:
        c, s, t = measured or _measure(cut, self.clusters)
        if parent is not None and not c < parent:
            raise CutElimError(f"complexity {c} does not drop below {parent} at cut on {show(cut.a)}")
        step = TraceStep("?", cut.a, c)
        self.trace.append(step)
        index = len(self.trace) - 1
        rule, out = self._step(cut, c, s, t, index)
        self.trace[index] = TraceStep(rule, cut.a, c, self.trace[index].after)
        if self.check:
            self._verify(rule, cut, out)
        return out

    def spawn(self, cut: Cut, parent: Complexity, index: int) -> Net:
        measured = _measure(cut, self.clusters)
        if self.trace[index].after is None:
            old = self.trace[index]
            self.trace[index] = TraceStep(old.rule, old.formula, old.before, measured[0])
        return self.topmost(cut, parent, measured)

    def _verify(self, rule: str, cut: Cut, out: Net) -> None:
        if net_type(out) != net_type(cut):
            raise CutElimError(f"rule {rule} changed the type of the net")
        if net_graph(out, self.graphs) != net_graph(cut, self.graphs):
            raise CutElimError(f"rule {rule} changed the graph of the net")

    def _step(self, cut: Cut, c: Complexity, s, t, index: int) -> tuple:
        a = cut.a
        if c.rank == 0:
            if isinstance(a, (Letter, Top, Bot)):
                if s == 1 and isinstance(cut.f, Ax) and not cut.x.is_proper:
                    return "identity", cut.g
                if t == 1 and isinstance(cut.g, Ax) and not cut.y.is_proper:
                    return "identity", cut.f
                raise CutElimError("rank 0 without an axiom premise")
            if isinstance(a, Conj):
                return "principal-conj", self._principal_conj(cut, c, index)
            if isinstance(a, Disj):
                return "principal-disj", self._principal_disj(cut, c, index)
            return "principal-neg", self._principal_neg(cut, c, index)
        if isinstance(a, Letter):
            side = "f" if s < t else "g" if s > t else self.prefer
        elif isinstance(a, Neg):
            side = self.prefer if s > 1 and t > 1 else "f" if s > 1 else "g"
        else:
            side = "g" if isinstance(a, (Top, Conj)) else "f"
        if side == "f":
            return f"commute-f-{type(cut.f).__name__}", self._commute_f(cut, c, index)
        return f"commute-g-{type(cut.g).__name__}", self._commute_g(cut, c, index)

    # principal cases

    def _principal_conj(self, cut: Cut, c: Complexity, index: int) -> Net:
        x, a, f, g = cut.x, cut.a, cut.f, cut.g
        if not isinstance(g, ConjRule) or cut.y.path != (LEFT,):
            raise CutElimError("principal ∧ cut without ∧̂ on the right premise")
        a1, a2 = a.left, a.right
        (b1, t1), (_b2, t2) = net_type(g.f1), net_type(g.f2)
        c1, c2 = t1.right, t2.right
        h1 = self.spawn(Cut(ctx_compose(x, Context.left(CONJ, a2)), Context.left(DISJ, c1), a1, f, g.f1), c, index)
        h2 = self.spawn(Cut(ctx_compose(x, Context.right(CONJ, b1)), Context.left(DISJ, c2), a2, h1, g.f2), c, index)
        d = net_type(f)[1]
        return AssocHat(DISJ, "bwd", HOLE, d, c1, c2, h2)

    def _principal_disj(self, cut: Cut, c: Complexity, index: int) -> Net:
        y, a, f, g = cut.y, cut.a, cut.f, cut.g
        if not isinstance(f, DisjRule) or cut.x.path != (RIGHT,):
            raise CutElimError("principal ∨ cut without ∨̂ on the left premise")
        a1, a2 = a.left, a.right
        (s1, _t1), (s2, t2) = net_type(f.f1), net_type(f.f2)
        c1, c2 = s1.left, s2.left
        bg = net_type(g)[0]
        h1 = self.spawn(Cut(Context.right(CONJ, c2), ctx_compose(y, Context.right(DISJ, a1)), a2, f.f2, g), c, index)
        h2 = self.spawn(Cut(Context.right(CONJ, c1), ctx_compose(y, Context.left(DISJ, t2)), a1, f.f1, h1), c, index)
        return AssocHat(CONJ, "bwd", HOLE, c1, c2, bg, h2)

    def _principal_neg(self, cut: Cut, c: Complexity, index: int) -> Net:
        f, g = cut.f, cut.g
        if not (isinstance(f, NegL) and isinstance(g, NegR)):
            raise CutElimError("principal ¬ cut without ¬^L and ¬^R premises")
        inner_a = cut.a.sub
        gb, fb = f.body, g.body  # gb : B ⊢ A′ ∨ C, fb : D ∧ A′ ⊢ E
        b, cc = net_type(gb)[0], net_type(gb)[1].right
        d, e = net_type(fb)[0].left, net_type(fb)[1]
        h = self.spawn(Cut(Context.right(CONJ, d), Context.left(DISJ, cc), inner_a, fb, gb), c, index)
        return SymHat(DISJ, HOLE, cc, e, SymHat(CONJ, HOLE, b, d, h))

    # commuting cases

    def _commute_f(self, cut: Cut, c: Complexity, index: int) -> Net:
        x, y, a, f, g = cut.x, cut.y, cut.a, cut.f, cut.g
        px = x.path
        bg = net_type(g)[0]
        sh = _Shapes()

        def recur(nx: Context, ny: Context, nf: Net, ng: Net) -> Net:
            return self.spawn(Cut(nx, ny, a, nf, ng), c, index)

        if isinstance(f, (AssocHat, SymHat)):
            if _acts_on(f, SOURCE):
                _, qx = upper(f, SOURCE, px)
                h = recur(ctx_at(net_type(f.body)[0], qx), y, f.body, g)
                return _reapply(f, replace_at(net_type(f)[0], px, bg), f.ctx.path, h)
            h = recur(x, y, f.body, g)
            return _reapply(f, ctx_apply(y, net_type(f)[1]), y.path + f.ctx.path, h)
        if isinstance(f, TopFwd):
            return TopFwd(recur(Context(x.frames[1:]), y, f.body, g))
        if isinstance(f, TopBwd):
            return TopBwd(recur(ctx_compose(Context.right(CONJ, TOP), x), y, f.body, g))
        if isinstance(f, BotBwd):
            h = BotBwd(recur(x, y, f.body, g))
            fill, d0, bot = sh.ctx(y), sh.leaf(net_type(f.body)[1]), sh.leaf(BOT)
            return _rewire(h, TARGET, _Node(fill(d0), bot), fill(_Node(d0, bot)))
        if isinstance(f, BotFwd):
            h = recur(x, y, f.body, g)
            fill, d0, bot = sh.ctx(y), sh.leaf(net_type(f)[1]), sh.leaf(BOT)
            return BotFwd(_rewire(h, TARGET, fill(_Node(d0, bot)), _Node(fill(d0), bot)))
        if isinstance(f, NegL):
            h = recur(Context(x.frames[1:]), y, f.body, g)
            t0 = net_type(f.body)[1]
            fill, a0, c0 = sh.ctx(y), sh.leaf(t0.left), sh.leaf(t0.right)
            return NegL(_rewire(h, TARGET, fill(_Node(a0, c0)), _Node(a0, fill(c0))))
        if isinstance(f, NegR):
            s0 = net_type(f.body)[0]
            h = NegR(recur(ctx_compose(Context.left(CONJ, s0.right), x), y, f.body, g))
            fill, na0, b0 = sh.ctx(y), sh.leaf(Neg(s0.right)), sh.leaf(net_type(f.body)[1])
            return _rewire(h, TARGET, _Node(na0, fill(b0)), fill(_Node(na0, b0)))
        if isinstance(f, ConjRule):
            which = px[0]
            prem = (f.f1, f.f2)[which]
            t1, t2 = net_type(f.f1)[1], net_type(f.f2)[1]
            fill = sh.ctx(y)
            h = recur(Context(x.frames[1:]), y, prem, g)
            tw = (t1, t2)[which]
            aw, cw = sh.leaf(tw.left), sh.leaf(tw.right)
            h = _rewire(h, TARGET, fill(_Node(aw, cw)), _Node(aw, fill(cw)))
            h = ConjRule(h, f.f2) if which == 0 else ConjRule(f.f1, h)
            a12 = sh.leaf(Conj(t1.left, t2.left))
            other = sh.leaf((t2, t1)[which].right)
            pair = (_Node(fill(cw), other), _Node(other, fill(cw)))[which]
            plain = (_Node(cw, other), _Node(other, cw))[which]
            return _rewire(h, TARGET, _Node(a12, pair), fill(_Node(a12, plain)))
        if isinstance(f, DisjRule):
            which = px[1]
            prem = (f.f1, f.f2)[which]
            sw = net_type(prem)[0]
            inner_x = ctx_compose(Context.left(CONJ, sw.right), Context(x.frames[2:]))
            h = recur(inner_x, y, prem, g)
            h = DisjRule(h, f.f2) if which == 0 else DisjRule(f.f1, h)
            fill = sh.ctx(y)
            bw = sh.leaf(net_type(prem)[1])
            other = sh.leaf(net_type((f.f2, f.f1)[which])[1])
            cur = (_Node(fill(bw), other), _Node(other, fill(bw)))[which]
            goal = fill((_Node(bw, other), _Node(other, bw))[which])
            return _rewire(h, TARGET, cur, goal)
        raise CutElimError(f"no commuting rule for {type(f).__name__} on the left premise")

    def _commute_g(self, cut: Cut, c: Complexity, index: int) -> Net:
        x, y, a, f, g = cut.x, cut.y, cut.a, cut.f, cut.g
        py = y.path
        cf = net_type(f)[1]
        sh = _Shapes()

        def recur(nx: Context, ny: Context, nf: Net, ng: Net) -> Net:
            return self.spawn(Cut(nx, ny, a, nf, ng), c, index)

        if isinstance(g, (AssocHat, SymHat)):
            if _acts_on(g, TARGET):
                _, qy = upper(g, TARGET, py)
                h = recur(x, ctx_at(net_type(g.body)[1], qy), f, g.body)
                return _reapply(g, replace_at(net_type(g)[1], py, cf), g.ctx.path, h)
            h = recur(x, y, f, g.body)
            return _reapply(g, ctx_apply(x, net_type(g)[0]), x.path + g.ctx.path, h)
        if isinstance(g, BotBwd):
            return BotBwd(recur(x, Context(y.frames[1:]), f, g.body))
        if isinstance(g, BotFwd):
            return BotFwd(recur(x, ctx_compose(Context.left(DISJ, BOT), y), f, g.body))
        if isinstance(g, TopFwd):
            h = TopFwd(recur(x, y, f, g.body))
            fill, top, a0 = sh.ctx(x), sh.leaf(TOP), sh.leaf(net_type(g.body)[0])
            return _rewire(h, SOURCE, _Node(top, fill(a0)), fill(_Node(top, a0)))
        if isinstance(g, TopBwd):
            h = recur(x, y, f, g.body)
            fill, top, a0 = sh.ctx(x), sh.leaf(TOP), sh.leaf(net_type(g)[0])
            return TopBwd(_rewire(h, SOURCE, fill(_Node(top, a0)), _Node(top, fill(a0))))
        if isinstance(g, NegR):
            h = recur(x, Context(y.frames[1:]), f, g.body)
            s0 = net_type(g.body)[0]
            fill, c0, a0 = sh.ctx(x), sh.leaf(s0.left), sh.leaf(s0.right)
            return NegR(_rewire(h, SOURCE, fill(_Node(c0, a0)), _Node(fill(c0), a0)))
        if isinstance(g, NegL):
            t0 = net_type(g.body)[1]
            h = NegL(recur(x, ctx_compose(Context.right(DISJ, t0.left), y), f, g.body))
            fill, b0, na0 = sh.ctx(x), sh.leaf(net_type(g.body)[0]), sh.leaf(Neg(t0.left))
            return _rewire(h, SOURCE, _Node(fill(b0), na0), fill(_Node(b0, na0)))
        if isinstance(g, ConjRule):
            which = py[1]
            prem = (g.f1, g.f2)[which]
            aw = net_type(prem)[1].left
            h = recur(x, ctx_compose(Context.right(DISJ, aw), Context(y.frames[2:])), f, prem)
            h = ConjRule(h, g.f2) if which == 0 else ConjRule(g.f1, h)
            fill = sh.ctx(x)
            bw = sh.leaf(net_type(prem)[0])
            other = sh.leaf(net_type((g.f2, g.f1)[which])[0])
            cur = (_Node(fill(bw), other), _Node(other, fill(bw)))[which]
            goal = fill((_Node(bw, other), _Node(other, bw))[which])
            return _rewire(h, SOURCE, cur, goal)
        if isinstance(g, DisjRule):
            which = py[0]
            prem = (g.f1, g.f2)[which]
            s1, s2 = net_type(g.f1)[0], net_type(g.f2)[0]
            fill = sh.ctx(x)
            h = recur(x, Context(y.frames[1:]), f, prem)
            sw = (s1, s2)[which]
            cw, aw = sh.leaf(sw.left), sh.leaf(sw.right)
            h = _rewire(h, SOURCE, fill(_Node(cw, aw)), _Node(fill(cw), aw))
            h = DisjRule(h, g.f2) if which == 0 else DisjRule(g.f1, h)
            a12 = sh.leaf(Disj(s1.right, s2.right))
            other = sh.leaf((s2, s1)[which].left)
            pair = (_Node(fill(cw), other), _Node(other, fill(cw)))[which]
            plain = (_Node(cw, other), _Node(other, cw))[which]
            return _rewire(h, SOURCE, _Node(pair, a12), fill(_Node(plain, a12)))
        raise CutElimError(f"no commuting rule for {type(g).__name__} on the right premise")


def eliminate(g: Net, prefer: str = "g", check: bool = False) -> tuple:
    """A cut-free net equal to ``g``, plus the trace of reduction steps.

    ``prefer`` picks the premise to reduce when the rank allows both; with
    ``check`` every step is verified by type and graph.
    """
    if prefer not in ("f", "g"):
        raise ValueError("prefer must be 'f' or 'g'")
    net_type(g)
    with _deep_stack():
        return _eliminate(g, _Run(prefer, check))


@contextlib.contextmanager
def _deep_stack(limit: int = 20000):
    # spawned cuts recurse once per step; callers such as test runners may lower the limit
    old = sys.getrecursionlimit()
    if old < limit:
        sys.setrecursionlimit(limit)
    try:
        yield
    finally:
        if sys.getrecursionlimit() == limit and old < limit:
            sys.setrecursionlimit(old)


def _eliminate(g: Net, run: _Run) -> tuple:
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
        kids = tuple(memo[id(k)] for k in node.children())
        if any(new is not old for new, old in zip(kids, node.children())):
            node2 = with_children(node, kids)
        else:
            node2 = node
        if isinstance(node2, Cut):
            node2 = run.topmost(node2, None)
        memo[id(node)] = node2
        stack.pop()
    return memo[id(g)], run.trace
