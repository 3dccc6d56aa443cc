"""The category Br of Brauerian split equivalences.

An arrow ``m ⊢ n`` is a partition of the tagged nodes ``s0 … s(m-1)`` and
``t0 … t(n-1)``.  It is Brauerian when every block has exactly two elements.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Node(NamedTuple):
    tag: str  # "s" or "t"; sorts sources before targets
    index: int

    def __str__(self) -> str:
        return f"{self.tag}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Node":
        if len(text) < 2 or text[0] not in "st" or not text[1:].isdigit():
            raise ValueError(f"bad node name {text!r}")
        return cls(text[0], int(text[1:]))


def s(i: int) -> Node:
    return Node("s", i)


def t(j: int) -> Node:
    return Node("t", j)


class DisjointSet:
    """Union-find over ``0 … size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]


@dataclass(frozen=True)
class SplitEquivalence:
    """A partition of ``m`` source and ``n`` target nodes, kept in canonical order."""

    m: int
    n: int
    blocks: tuple

    def __init__(self, m: int, n: int, blocks: Iterable[Iterable[Node]]):
        canon = tuple(sorted(tuple(sorted(x if type(x) is Node else Node(*x) for x in b)) for b in blocks))
        seen = [x for b in canon for x in b]
        expected = {s(i) for i in range(m)} | {t(j) for j in range(n)}
        if len(seen) != len(set(seen)) or set(seen) != expected or any(not b for b in canon):
            raise ValueError("blocks must partition the source and target nodes")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)

    @property
    def is_brauerian(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"{{{body}}} : {self.m}⊢{self.n}"


def is_brauerian(S: SplitEquivalence) -> bool:
    return S.is_brauerian


class BrauerArrow(SplitEquivalence):
    """A split equivalence whose blocks are all pairs."""

    def __init__(self, m: int, n: int, pairs: Iterable[Iterable[Node]]):
        super().__init__(m, n, pairs)
        if not self.is_brauerian:
            raise ValueError("every block of a Brauerian split equivalence is a pair")

    @property
    def pairs(self) -> tuple:
        return self.blocks

    def transpose(self) -> "BrauerArrow":
        """Swap the roles of sources and targets."""
        flip = {"s": "t", "t": "s"}
        return BrauerArrow(self.n, self.m, [[Node(flip[x.tag], x.index) for x in p] for p in self.pairs])

    def to_json(self) -> str:
        pairs = [[str(a), str(b)] for a, b in self.pairs]
        return json.dumps({"source": self.m, "target": self.n, "pairs": pairs}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "BrauerArrow":
        data = json.loads(text)
        pairs = [[Node.parse(a), Node.parse(b)] for a, b in data["pairs"]]
        return cls(data["source"], data["target"], pairs)


@functools.lru_cache(maxsize=None)
def identity(n: int) -> BrauerArrow:
    return BrauerArrow(n, n, [(s(i), t(i)) for i in range(n)])


def _compose_blocks(P: SplitEquivalence, R: SplitEquivalence) -> list:
    # node numbering: R's sources 0..m-1, middle m..m+n-1, P's targets m+n..m+n+k-1
    if P.m != R.n:
        raise ValueError(f"cannot compose: R ends in {R.n} nodes but P starts from {P.m}")
    m, n, k = R.m, R.n, P.n
    uf = DisjointSet(m + n + k)

    def number_r(x: Node) -> int:
        return x.index if x.tag == "s" else m + x.index

    def number_p(x: Node) -> int:
        return m + x.index if x.tag == "s" else m + n + x.index

    for blocks, number in ((R.blocks, number_r), (P.blocks, number_p)):
        for b in blocks:
            first = number(b[0])
            for x in b[1:]:
                uf.union(first, number(x))
    classes: dict = {}
    for i in range(m):
        classes.setdefault(uf.find(i), []).append(s(i))
    for j in range(k):
        classes.setdefault(uf.find(m + n + j), []).append(t(j))
    return list(classes.values())


def _is_identity(B: BrauerArrow) -> bool:
    return B.m == B.n and (B is identity(B.m) or B.blocks == identity(B.m).blocks)


def compose(P: SplitEquivalence, R: SplitEquivalence) -> SplitEquivalence:
    """``P ∗ R`` for ``R: m ⊢ n`` and ``P: n ⊢ k``; closed middle loops vanish."""
    if isinstance(P, BrauerArrow) and isinstance(R, BrauerArrow):
        if P.m == R.n and _is_identity(P):
            return R
        if P.m == R.n and _is_identity(R):
            return P
        return BrauerArrow(R.m, P.n, _compose_blocks(P, R))
    return SplitEquivalence(R.m, P.n, _compose_blocks(P, R))


def shifted_union(F: BrauerArrow, H: BrauerArrow, src_off: int, tgt_off: int) -> BrauerArrow:
    """Place ``H`` beside ``F``, shifting its sources by ``src_off`` and targets by ``tgt_off``."""
    if src_off != F.m or tgt_off != F.n:
        raise ValueError("offsets must equal the sizes of the left operand")
    if _is_identity(F) and _is_identity(H):
        return identity(F.m + H.m)

    def shift(x: Node) -> Node:
        return Node(x.tag, x.index + (src_off if x.tag == "s" else tgt_off))

    pairs = list(F.pairs) + [[shift(x) for x in p] for p in H.pairs]
    return BrauerArrow(F.m + H.m, F.n + H.n, pairs)
