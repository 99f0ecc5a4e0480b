"""Shared independent oracles and strategies for the test suite.

The oracles here deliberately re-derive results along different routes
than the library: plain rational Gaussian elimination instead of
fraction-free elimination, and direct block-multiset search instead of
the budgeted structure enumerator.
"""

import re
from fractions import Fraction

from hypothesis import strategies as st

from kcforbits.core import (
    INFINITY,
    KroneckerStructure,
    canonicalize,
    finite,
    size_of,
)


def naive_rank(matrix) -> int:
    """Rank by textbook Gauss-Jordan elimination over Fractions."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [rows[i][j] - f * rows[rank][j] for j in range(ncols)]
        rank += 1
    return rank


def brute_force_structures(m, n, pool_size, include_infinity=True):
    """Canonical structures of size (m, n), by direct block-multiset search."""
    labels = [finite(i + 1) for i in range(pool_size)]
    if include_infinity:
        labels.append(INFINITY)
    block_types = []
    for k in range(n):  # L_k is k x (k+1)
        block_types.append(("right", k, k, k + 1))
    for k in range(m):  # LT_k is (k+1) x k
        block_types.append(("left", k, k + 1, k))
    for lbl in labels:
        for s in range(1, min(m, n) + 1):
            block_types.append(("jordan", (lbl, s), s, s))
    results = set()

    def rec(idx, rows, cols, jordan, right, left):
        if rows == 0 and cols == 0:
            results.add(canonicalize(KroneckerStructure(jordan, right, left)))
            return
        if idx == len(block_types):
            return
        rec(idx + 1, rows, cols, jordan, right, left)
        kind, payload, dr, dc = block_types[idx]
        if dr <= rows and dc <= cols:
            if kind == "right":
                rec(idx, rows - dr, cols - dc, jordan, right + (payload,), left)
            elif kind == "left":
                rec(idx, rows - dr, cols - dc, jordan, right, left + (payload,))
            else:
                rec(idx, rows - dr, cols - dc, jordan + (payload,), right, left)

    rec(0, m, n, (), (), ())
    return results


@st.composite
def structures(draw, max_block=3, max_labels=3, max_singular=2):
    """Random well-formed Kronecker structures, small enough for oracles."""
    labels = [finite(i + 1) for i in range(max_labels)] + [INFINITY]
    jordan = draw(
        st.lists(
            st.tuples(st.sampled_from(labels), st.integers(1, max_block)),
            max_size=4,
        )
    )
    right = draw(st.lists(st.integers(0, max_block), max_size=max_singular))
    left = draw(st.lists(st.integers(0, max_block), max_size=max_singular))
    return KroneckerStructure(jordan, right, left)


def nonincreasing_seqs(max_len=8, max_entry=8, min_len=0):
    return st.lists(
        st.integers(0, max_entry), min_size=min_len, max_size=max_len
    ).map(lambda xs: tuple(sorted(xs, reverse=True)))


_DOT_HEADER = re.compile(r"digraph [A-Za-z_][A-Za-z0-9_]* \{$")
_DOT_ATTR = re.compile(r"  [a-z]+=[A-Za-z0-9]+;$")
_DOT_NODE = re.compile(r'  (n\d+) \[label="[^"\\]*(\\n[^"\\]*)*"\];$')
_DOT_EDGE = re.compile(r"  (n\d+) -> (n\d+);$")


def check_dot(text):
    """Validate DOT output against a strict sub-grammar; return the edges."""
    lines = text.splitlines()
    assert lines, "empty DOT output"
    assert _DOT_HEADER.fullmatch(lines[0]), f"bad header: {lines[0]!r}"
    assert lines[-1] == "}", f"bad trailer: {lines[-1]!r}"
    nodes = set()
    edges = []
    for line in lines[1:-1]:
        node = _DOT_NODE.fullmatch(line)
        edge = _DOT_EDGE.fullmatch(line)
        attr = _DOT_ATTR.fullmatch(line)
        assert node or edge or attr, f"bad DOT statement: {line!r}"
        if node:
            nodes.add(node.group(1))
        elif edge:
            edges.append((edge.group(1), edge.group(2)))
    for a, b in edges:
        assert a in nodes and b in nodes, f"edge {a}->{b} uses undeclared node"
    return edges


def assert_sizes(K, m, n):
    assert size_of(K) == (m, n)
