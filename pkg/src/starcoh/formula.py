"""Formulae of the language with letters, constants, negation, conjunction and disjunction.

Occurrences are addressed by paths: tuples of steps ``LEFT``, ``RIGHT`` and
``NEG``.  Two equal subformulae at different positions are different
occurrences.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import ContextError

LEFT, RIGHT, NEG = 0, 1, 2

Path = tuple


class Conn(enum.Enum):
    """The two binary connectives."""

    CONJ = "&"
    DISJ = "|"

    @property
    def dual(self) -> "Conn":
        return DISJ if self is CONJ else CONJ

    @property
    def symbol(self) -> str:
        return "∧" if self is CONJ else "∨"

    @property
    def word(self) -> str:
        return "conj" if self is CONJ else "disj"

    def make(self, left: "Formula", right: "Formula") -> "Formula":
        return Conj(left, right) if self is CONJ else Disj(left, right)

    def owns(self, formula: "Formula") -> bool:
        return isinstance(formula, Conj if self is CONJ else Disj)

    def unit(self) -> "Formula":
        """The constant that is neutral for this connective."""
        return TOP if self is CONJ else BOT


CONJ = Conn.CONJ
DISJ = Conn.DISJ


class Formula:
    """Base class of formulae."""

    __slots__ = ()

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True, repr=False)
class Letter(Formula):
    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("letter names must be nonempty")

    def __repr__(self) -> str:
        return f"Letter({self.name!r})"


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self) -> str:
        return "TOP"


@dataclass(frozen=True, repr=False)
class Bot(Formula):
    def __repr__(self) -> str:
        return "BOT"


@dataclass(frozen=True, repr=False)
class Neg(Formula):
    sub: Formula

    def __repr__(self) -> str:
        return f"Neg({self.sub!r})"


@dataclass(frozen=True, repr=False)
class Conj(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Conj({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Disj(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Disj({self.left!r}, {self.right!r})"


TOP = Top()
BOT = Bot()


def show(A: Formula) -> str:
    """Canonical text: binary children of binary nodes are parenthesized."""
    if isinstance(A, Letter):
        return A.name
    if isinstance(A, Top):
        return "top"
    if isinstance(A, Bot):
        return "bot"
    if isinstance(A, Neg):
        sub = show(A.sub)
        return "~" + (f"({sub})" if isinstance(A.sub, (Conj, Disj)) else sub)
    if not isinstance(A, (Conj, Disj)):
        return repr(A)
    op = " & " if isinstance(A, Conj) else " | "
    parts = []
    for child in (A.left, A.right):
        text = show(child)
        parts.append(f"({text})" if isinstance(child, (Conj, Disj)) else text)
    return op.join(parts)


def letter_count(A: Formula) -> int:
    """Number of letter occurrences in ``A``."""
    if isinstance(A, Letter):
        return 1
    if isinstance(A, (Top, Bot)):
        return 0
    if isinstance(A, Neg):
        return letter_count(A.sub)
    return letter_count(A.left) + letter_count(A.right)


def letters(A: Formula) -> Iterator[str]:
    """Letter names in left-to-right order, with repetitions."""
    if isinstance(A, Letter):
        yield A.name
    elif isinstance(A, Neg):
        yield from letters(A.sub)
    elif isinstance(A, (Conj, Disj)):
        yield from letters(A.left)
        yield from letters(A.right)


def degree(A: Formula) -> int:
    """Number of occurrences of ∧, ∨ and ¬."""
    if isinstance(A, Neg):
        return 1 + degree(A.sub)
    if isinstance(A, (Conj, Disj)):
        return 1 + degree(A.left) + degree(A.right)
    return 0


def is_constant_free(A: Formula) -> bool:
    if isinstance(A, (Top, Bot)):
        return False
    if isinstance(A, Letter):
        return True
    if isinstance(A, Neg):
        return is_constant_free(A.sub)
    return is_constant_free(A.left) and is_constant_free(A.right)


def is_literate(A: Formula) -> bool:
    return letter_count(A) > 0


def is_negation_free(A: Formula) -> bool:
    """True for formulae built from letters with ∧ and ∨ only."""
    if isinstance(A, Letter):
        return True
    if isinstance(A, (Conj, Disj)):
        return is_negation_free(A.left) and is_negation_free(A.right)
    return False


def subformula(A: Formula, path: Path) -> Formula:
    for step in path:
        if step == NEG and isinstance(A, Neg):
            A = A.sub
        elif step in (LEFT, RIGHT) and isinstance(A, (Conj, Disj)):
            A = A.left if step == LEFT else A.right
        else:
            raise ContextError(f"path {path} does not resolve in the formula")
    return A


def replace_at(A: Formula, path: Path, B: Formula) -> Formula:
    """``A`` with the occurrence at ``path`` replaced by ``B``."""
    if not path:
        return B
    step, rest = path[0], path[1:]
    if step == NEG and isinstance(A, Neg):
        return Neg(replace_at(A.sub, rest, B))
    if step in (LEFT, RIGHT) and isinstance(A, (Conj, Disj)):
        if step == LEFT:
            return type(A)(replace_at(A.left, rest, B), A.right)
        return type(A)(A.left, replace_at(A.right, rest, B))
    raise ContextError(f"path {path} does not resolve in the formula")


def superficial(xi: Conn, A: Formula) -> list:
    """Paths of the ξ-superficial subformula occurrences of ``A``, left to right.

    The constant neutral for ξ (⊤ for ∧, ⊥ for ∨) is never ξ-superficial.
    """
    if xi.owns(A):
        return [(LEFT,) + p for p in superficial(xi, A.left)] + [
            (RIGHT,) + p for p in superficial(xi, A.right)
        ]
    if A == xi.unit():
        return []
    return [()]


def is_superficial(xi: Conn, A: Formula, path: Path) -> bool:
    for step in path:
        if not xi.owns(A) or step not in (LEFT, RIGHT):
            return False
        A = A.left if step == LEFT else A.right
    return not xi.owns(A) and A != xi.unit()


def is_nice(xi: Conn, A: Formula) -> bool:
    """Constant-free formulae and the ξ-unit are ξ-nice; niceness is closed under ξ."""
    if is_constant_free(A):
        return True
    if A == xi.unit():
        return True
    if xi.owns(A):
        return is_nice(xi, A.left) and is_nice(xi, A.right)
    return False


# ---------------------------------------------------------------- contexts


@dataclass(frozen=True)
class Frame:
    """One layer ``□ ξ side`` (``hole_left``) or ``side ξ □`` of a context."""

    conn: Conn
    hole_left: bool
    side: Formula


@dataclass(frozen=True)
class Context:
    """A one-hole context, stored as frames from the outermost inwards."""

    frames: tuple = ()

    def __post_init__(self) -> None:
        conns = {fr.conn for fr in self.frames}
        if len(conns) > 1:
            raise ContextError("a context must use a single connective")

    @property
    def conn(self) -> Optional[Conn]:
        return self.frames[0].conn if self.frames else None

    @property
    def is_proper(self) -> bool:
        return bool(self.frames)

    def has_polarity(self, xi: Conn) -> bool:
        return not self.frames or self.frames[0].conn is xi

    @property
    def path(self) -> Path:
        return tuple(LEFT if fr.hole_left else RIGHT for fr in self.frames)

    def __call__(self, A: Formula) -> Formula:
        return ctx_apply(self, A)

    def __str__(self) -> str:
        return show(ctx_apply(self, Letter("_")))

    @staticmethod
    def left(xi: Conn, side: Formula, inner: "Context" = None) -> "Context":
        """The context ``inner ξ side``."""
        inner = HOLE if inner is None else inner
        return Context((Frame(xi, True, side),) + inner.frames)

    @staticmethod
    def right(xi: Conn, side: Formula, inner: "Context" = None) -> "Context":
        """The context ``side ξ inner``."""
        inner = HOLE if inner is None else inner
        return Context((Frame(xi, False, side),) + inner.frames)


HOLE = Context()


def ctx_apply(Z: Context, A: Formula) -> Formula:
    for fr in reversed(Z.frames):
        A = fr.conn.make(A, fr.side) if fr.hole_left else fr.conn.make(fr.side, A)
    return A


def ctx_frame(Z: Context) -> Formula:
    """E_X for ∧-contexts, D_Y for ∨-contexts: ``Z`` with its hole erased."""
    if not Z.frames:
        raise ContextError("the empty context has no frame")
    *outer, inner = Z.frames
    E = inner.side
    for fr in reversed(outer):
        E = fr.conn.make(E, fr.side) if fr.hole_left else fr.conn.make(fr.side, E)
    return E


def ctx_compose(outer: Context, inner: Context) -> Context:
    """The context ``outer(inner(□))``."""
    return Context(outer.frames + inner.frames)


def ctx_at(A: Formula, path: Path) -> Context:
    """The context obtained from ``A`` by cutting out the occurrence at ``path``."""
    frames = []
    for step in path:
        if not isinstance(A, (Conj, Disj)) or step not in (LEFT, RIGHT):
            raise ContextError(f"path {path} does not pass through binary nodes only")
        xi = CONJ if isinstance(A, Conj) else DISJ
        if step == LEFT:
            frames.append(Frame(xi, True, A.right))
            A = A.left
        else:
            frames.append(Frame(xi, False, A.left))
            A = A.right
    return Context(tuple(frames))
