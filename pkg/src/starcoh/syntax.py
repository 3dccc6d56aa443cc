"""Text syntax for formulae, contexts, arrow terms and nets, and graph rendering.

Formulae: letters, ``top``, ``bot``, ``~`` (tightest), ``&`` then ``|``; both
binary connectives group to the right.  Contexts are formulae with one ``_``.
Terms are constructor applications composed with ``.`` (``f . g`` is f after
g).  Nets use the constructor names printed by ``gentzen.show_net``.
"""

from __future__ import annotations

import inspect
import re

from . import arrows as ar
from . import gentzen as gz
from .brauer import BrauerArrow
from .errors import ContextError, ParseError
from .formula import BOT, CONJ, DISJ, TOP, Conj, Conn, Context, Disj, Formula, Letter, Neg, ctx_at, show

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Hole(Formula):
    __slots__ = ()


_HOLE_MARK = _Hole()


def _tokenize(text: str) -> list:
    """``(token, position)`` pairs ending with ``("", len(text))``."""
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _NAME.match(text, pos)
        end = m.end() if m else pos + 1
        out.append((text[pos:end], pos))
        pos = end
    out.append(("", len(text)))
    return out


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def peek(self) -> str:
        return self.toks[self.i][0]

    @property
    def pos(self) -> int:
        return self.toks[self.i][1]

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def take(self, expected: str = None) -> str:
        tok = self.peek
        if expected is not None and tok != expected:
            found = repr(tok) if tok else "end of input"
            raise self.error(f"expected {expected!r}, found {found}")
        if tok == "":
            raise self.error("unexpected end of input")
        self.i += 1
        return tok

    def done(self) -> None:
        if self.peek != "":
            raise self.error(f"unexpected {self.peek!r}")

    # formulae

    def formula(self, holes: bool = False) -> Formula:
        left = self.conj(holes)
        if self.peek == "|":
            self.take()
            return Disj(left, self.formula(holes))
        return left

    def conj(self, holes: bool) -> Formula:
        left = self.unary(holes)
        if self.peek == "&":
            self.take()
            return Conj(left, self.conj(holes))
        return left

    def unary(self, holes: bool) -> Formula:
        tok = self.peek
        if tok == "~":
            self.take()
            return Neg(self.unary(holes))
        if tok == "(":
            self.take()
            inner = self.formula(holes)
            self.take(")")
            return inner
        if tok == "top":
            self.take()
            return TOP
        if tok == "bot":
            self.take()
            return BOT
        if tok == "_":
            if not holes:
                raise self.error("'_' is only allowed as the hole of a context")
            self.take()
            return _HOLE_MARK
        if tok and (tok[0].islower() or tok[0] == "_"):
            self.take()
            return Letter(tok)
        raise self.error(f"expected a formula, found {tok!r}" if tok else "expected a formula")

    def context(self) -> Context:
        start = self.pos
        A = self.formula(holes=True)
        paths = list(_hole_paths(A))
        if len(paths) != 1:
            raise ParseError("a context needs exactly one '_'", self.text, start)
        path = paths[0]
        if path is None:
            raise ParseError("the hole of a context cannot sit under negation", self.text, start)
        try:
            return ctx_at(A, path)
        except ContextError as exc:
            raise ParseError(str(exc), self.text, start) from None

    def conn(self) -> Conn:
        tok = self.take()
        if tok in ("conj", "&"):
            return CONJ
        if tok in ("disj", "|"):
            return DISJ
        raise ParseError(f"expected conj or disj, found {tok!r}", self.text, self.toks[self.i - 1][1])

    # terms

    def term(self) -> ar.ArrowTerm:
        left = self.term_atom()
        if self.peek == ".":
            self.take()
            return ar.Comp(left, self.term())
        return left

    def term_atom(self) -> ar.ArrowTerm:
        if self.peek == "(":
            self.take()
            inner = self.term()
            self.take(")")
            return inner
        at = self.pos
        name = self.take()
        if name in ("tens_conj", "tens_disj"):
            self.take("(")
            f = self.term()
            self.take(",")
            g = self.term()
            self.take(")")
            return ar.Tens(CONJ if name == "tens_conj" else DISJ, f, g)
        if name in _GENERATORS:
            build, arity = _GENERATORS[name]
            return build(*self.args(["Formula"] * arity))
        if name in ar.DERIVED:
            build = ar.DERIVED[name]
            kinds = [p.annotation for p in inspect.signature(build).parameters.values()]
            return build(*self.args(kinds))
        raise ParseError(f"unknown constructor {name!r}", self.text, at)

    def args(self, kinds: list) -> list:
        self.take("(")
        out = []
        for k, kind in enumerate(kinds):
            if k:
                self.take(",")
            out.append(self.arg(kind))
        self.take(")")
        return out

    def arg(self, kind: str):
        if kind == "Formula":
            return self.formula()
        if kind == "Context":
            return self.context()
        if kind == "Conn":
            return self.conn()
        if kind == "Net":
            return self.net()
        raise AssertionError(kind)

    # nets

    def net(self) -> gz.Net:
        at = self.pos
        name = self.take()
        if name not in _NETS:
            raise ParseError(f"unknown net constructor {name!r}", self.text, at)
        build, kinds = _NETS[name]
        return build(*self.args(kinds))


def _hole_paths(A: Formula, path: tuple = ()):
    if A is _HOLE_MARK:
        yield path
    elif isinstance(A, Neg):
        for p in _hole_paths(A.sub, path):
            yield None
    elif isinstance(A, (Conj, Disj)):
        yield from _hole_paths(A.left, path + (0,))
        yield from _hole_paths(A.right, path + (1,))


def _generators() -> dict:
    table = {
        "id": (ar.Id, 1),
        "sym_conj": (ar.SymConj, 2),
        "sym_disj": (ar.SymDisj, 2),
        "dist": (ar.Dist, 3),
        "delta_conj": (ar.DeltaConj, 2),
        "sigma_disj": (ar.SigmaDisj, 2),
    }
    for xi in (CONJ, DISJ):
        table[f"assoc_fwd_{xi.word}"] = (lambda a, b, c, xi=xi: ar.AssocFwd(xi, a, b, c), 3)
        table[f"assoc_bwd_{xi.word}"] = (lambda a, b, c, xi=xi: ar.AssocBwd(xi, a, b, c), 3)
        table[f"unit_del_fwd_{xi.word}"] = (lambda a, xi=xi: ar.UnitDelFwd(xi, a), 1)
        table[f"unit_del_bwd_{xi.word}"] = (lambda a, xi=xi: ar.UnitDelBwd(xi, a), 1)
    return table


def _nets() -> dict:
    F, C, N = "Formula", "Context", "Net"
    table = {
        "ax": (gz.Ax, [F]),
        "identity": (gz.identity_net, [F]),
        "top_fwd": (gz.TopFwd, [N]),
        "top_bwd": (gz.TopBwd, [N]),
        "bot_fwd": (gz.BotFwd, [N]),
        "bot_bwd": (gz.BotBwd, [N]),
        "neg_l": (gz.NegL, [N]),
        "neg_r": (gz.NegR, [N]),
        "conj_rule": (gz.ConjRule, [N, N]),
        "disj_rule": (gz.DisjRule, [N, N]),
        "cut": (gz.Cut, [C, C, F, N, N]),
    }
    for xi in (CONJ, DISJ):
        for d in ("fwd", "bwd"):
            table[f"hat_assoc_{d}_{xi.word}"] = (
                lambda z, a, b, c, body, xi=xi, d=d: gz.AssocHat(xi, d, z, a, b, c, body),
                [C, F, F, F, N],
            )
        table[f"hat_sym_{xi.word}"] = (lambda z, a, b, body, xi=xi: gz.SymHat(xi, z, a, b, body), [C, F, F, N])
    return table


_GENERATORS = _generators()
_NETS = _nets()


def _parse(text: str, rule: str, *args):
    p = _Parser(text)
    out = getattr(p, rule)(*args)
    p.done()
    return out


def parse_formula(text: str) -> Formula:
    return _parse(text, "formula")


def parse_context(text: str) -> Context:
    """A context literal such as ``p & (_ & q)``; a lone ``_`` is the empty context."""
    return _parse(text, "context")


def parse_term(text: str) -> ar.ArrowTerm:
    return _parse(text, "term")


def parse_net(text: str) -> gz.Net:
    return _parse(text, "net")


def parse_graph(text: str) -> BrauerArrow:
    try:
        return BrauerArrow.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad graph: {exc}") from None


show_formula = show
show_term = ar.show_term
show_net = gz.show_net


def show_context(Z: Context) -> str:
    return str(Z) if Z.is_proper else "_"


# ------------------------------------------------------------------ graph rendering


def render_graph(B: BrauerArrow, fmt: str = "pairs") -> str:
    if fmt == "pairs":
        return B.to_json()
    if fmt == "dot":
        return _render_dot(B)
    if fmt == "ascii":
        return _render_ascii(B)
    raise ValueError(f"unknown graph format {fmt!r}")


def _render_dot(B: BrauerArrow) -> str:
    lines = ["graph G {", "  node [shape=plaintext];"]
    if B.n:
        lines.append("  { rank=min; " + " ".join(f"t{j};" for j in range(B.n)) + " }")
    if B.m:
        lines.append("  { rank=max; " + " ".join(f"s{i};" for i in range(B.m)) + " }")
    for a, b in B.pairs:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines)



def _render_ascii(B: BrauerArrow) -> str:
    """Targets on the top row, sources on the bottom row shifted two columns right.

    Caps hang from the top, cups stand on the bottom, straight strands share one
    jog row and every other transversal gets a row of its own.
    """
    tcol = lambda j: 4 * j  # noqa: E731
    scol = lambda i: 4 * i + 2  # noqa: E731
    caps = sorted(((a.index, b.index) for a, b in B.pairs if a.tag == b.tag == "t"), key=lambda p: (p[1] - p[0], p))
    cups = sorted(((a.index, b.index) for a, b in B.pairs if a.tag == b.tag == "s"), key=lambda p: (p[0] - p[1], p))
    trans = sorted((a.index, b.index) for a, b in B.pairs if a.tag != b.tag)
    bent = [(i, j) for i, j in trans if i != j]
    straight = [(i, j) for i, j in trans if i == j]
    width = 4 * max(B.m, B.n, 1) + 2
    jog = len(caps) + len(bent)
    rows = jog + bool(straight) + len(cups)
    grid = [[" "] * width for _ in range(rows)]

    def put(r: int, c: int, ch: str) -> None:
        old = grid[r][c]
        grid[r][c] = "┼" if {old, ch} == {"│", "─"} else ch

    def vline(c: int, r0: int, r1: int) -> None:
        for r in range(r0, r1):
            put(r, c, "│")

    def wire(r: int, top: int, bottom: int) -> None:
        """A wire coming down column ``top`` to row ``r`` and leaving down column ``bottom``."""
        for c in range(min(top, bottom) + 1, max(top, bottom)):
            put(r, c, "─")
        put(r, top, "└" if bottom > top else "┘")
        put(r, bottom, "┐" if bottom > top else "┌")

    for r, (i, j) in enumerate(caps):
        vline(tcol(i), 0, r)
        vline(tcol(j), 0, r)
        for c in range(tcol(i) + 1, tcol(j)):
            put(r, c, "─")
        put(r, tcol(i), "└")
        put(r, tcol(j), "┘")
    for k, (i, j) in enumerate(bent, start=len(caps)):
        vline(tcol(j), 0, k)
        vline(scol(i), k + 1, rows)
        wire(k, tcol(j), scol(i))
    for i, _ in straight:
        vline(tcol(i), 0, jog)
        vline(scol(i), jog + 1, rows)
        wire(jog, tcol(i), scol(i))
    for k, (i, j) in enumerate(cups, start=jog + bool(straight)):
        vline(scol(i), k + 1, rows)
        vline(scol(j), k + 1, rows)
        for c in range(scol(i) + 1, scol(j)):
            put(k, c, "─")
        put(k, scol(i), "┌")
        put(k, scol(j), "┐")

    top = "".join(f"t{k}".ljust(4) for k in range(B.n)).rstrip()
    bottom = ("  " + "".join(f"s{k}".ljust(4) for k in range(B.m))).rstrip()
    body = ["".join(row).rstrip() for row in grid]
    return "\n".join([top] + body + [bottom])
