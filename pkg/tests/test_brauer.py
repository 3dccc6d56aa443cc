import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starcoh.brauer import (
    BrauerArrow, SplitEquivalence, _compose_blocks, compose, identity, is_brauerian, s, shifted_union, t,
)
from starcoh.cli import compose_example


def random_brauer(rng, m, n):
    """A uniformly shuffled perfect matching on m sources and n targets."""
    nodes = [s(i) for i in range(m)] + [t(j) for j in range(n)]
    rng.shuffle(nodes)
    return BrauerArrow(m, n, [nodes[k:k + 2] for k in range(0, len(nodes), 2)])


def closure_compose(P, R):
    """Oracle: composition by boolean transitive closure of an adjacency matrix."""
    m, n, k = R.m, R.n, P.n
    size = m + n + k
    index_r = lambda x: x.index if x.tag == "s" else m + x.index
    index_p = lambda x: m + x.index if x.tag == "s" else m + n + x.index
    adj = np.eye(size, dtype=bool)
    for blocks, index in ((R.blocks, index_r), (P.blocks, index_p)):
        for block in blocks:
            for x in block:
                for y in block:
                    adj[index(x), index(y)] = True
    for mid in range(size):
        adj |= np.outer(adj[:, mid], adj[mid, :])
    outer = [s(i) for i in range(m)] + [t(j) for j in range(k)]
    position = list(range(m)) + list(range(m + n, size))
    blocks = {}
    for node, i in zip(outer, position):
        key = tuple(np.nonzero(adj[i])[0][np.isin(np.nonzero(adj[i])[0], position)])
        blocks.setdefault(key, []).append(node)
    return SplitEquivalence(m, k, blocks.values())


def as_split(B):
    return SplitEquivalence(B.m, B.n, B.blocks)


@st.composite
def composable(draw, max_size=8):
    rng = __import__("random").Random(draw(st.integers(0, 2**32 - 1)))
    sizes = []
    while len(sizes) < 4:
        a = draw(st.integers(0, max_size))
        if sizes and (sizes[-1] + a) % 2:
            continue
        sizes.append(a)
    R = random_brauer(rng, sizes[0], sizes[1])
    P = random_brauer(rng, sizes[1], sizes[2])
    Q = random_brauer(rng, sizes[2], sizes[3])
    return R, P, Q


def test_identity_examples():
    assert identity(0).blocks == ()
    assert identity(2).blocks == ((s(0), t(0)), (s(1), t(1)))
    assert identity(3) == BrauerArrow(3, 3, [(s(i), t(i)) for i in range(3)])


def test_worked_composition():
    R, P, PR = compose_example()
    assert PR == BrauerArrow(3, 1, [(s(0), t(0)), (s(1), s(2))])
    assert is_brauerian(PR)
    assert as_split(PR) == closure_compose(P, R)


def test_symmetry_composed_with_itself_is_identity():
    c = BrauerArrow(2, 2, [(s(0), t(1)), (s(1), t(0))])
    assert compose(c, c) == identity(2)


def test_shifted_union_examples():
    one = identity(1)
    assert shifted_union(one, one, 1, 1) == identity(2)
    c = BrauerArrow(2, 2, [(s(0), t(1)), (s(1), t(0))])
    assert shifted_union(identity(2), c, 2, 2) == BrauerArrow(
        4, 4, [(s(0), t(0)), (s(1), t(1)), (s(2), t(3)), (s(3), t(2))]
    )
    H = BrauerArrow(0, 2, [(t(0), t(1))])
    assert shifted_union(identity(0), H, 0, 0) == H
    with pytest.raises(ValueError):
        shifted_union(one, one, 0, 1)


def test_non_brauerian_block_rejected():
    S = SplitEquivalence(1, 2, [(s(0), t(0), t(1))])
    assert not is_brauerian(S)
    with pytest.raises(ValueError):
        BrauerArrow(1, 2, [(s(0), t(0), t(1))])
    with pytest.raises(ValueError):
        BrauerArrow(2, 0, [(s(0), s(0))])


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_closed_loops_vanish():
    cap = BrauerArrow(0, 2, [(t(0), t(1))])
    cup = BrauerArrow(2, 0, [(s(0), s(1))])
    assert compose(cup, cap) == identity(0)


def test_json_round_trip():
    text = identity(2).to_json()
    assert text == '{"source":2,"target":2,"pairs":[["s0","t0"],["s1","t1"]]}'
    R, _, PR = compose_example()
    assert BrauerArrow.from_json(R.to_json()) == R
    assert json.loads(PR.to_json())["pairs"] == [["s0", "t0"], ["s1", "s2"]]


@settings(max_examples=200)
@given(composable())
def test_category_laws(triple):
    R, P, Q = triple
    assert compose(Q, compose(P, R)) == compose(compose(Q, P), R)
    assert compose(identity(R.n), R) == R
    assert compose(R, identity(R.m)) == R
    assert BrauerArrow(R.m, R.n, _compose_blocks(identity(R.n), R)) == R
    assert closure_compose(R, identity(R.m)) == as_split(R)
    assert as_split(compose(P, R)) == closure_compose(P, R)
    assert is_brauerian(compose(P, R))


@given(composable())
def test_transpose_reverses_composition(triple):
    R, P, _ = triple
    assert compose(P, R).transpose() == compose(R.transpose(), P.transpose())
