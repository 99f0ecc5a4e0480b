"""Orbit-closure order on Kronecker structures, via weak majorization.

Whether one orbit lies in the closure of another is decided by three
weak-majorization conditions between the Weyr characteristics of the two
structures, shifted by the rank drop h.  Orientation convention used
everywhere in this package: ``degenerates_to(L, M)`` is true when M lies
in the closure of the orbit of L, i.e. pencils with structure L can
degenerate to the more special structure M.
"""

from dataclasses import dataclass

from .core import (
    KroneckerStructure,
    codimension,
    eigenvalues,
    rank_of,
    size_of,
    weyr_jordan,
    weyr_singular,
)
from .errors import DuplicateNodeError, SizeMismatchError

__all__ = [
    "weakly_majorizes",
    "degenerates_to",
    "same_orbit",
    "majorization_report",
    "ClosureGraph",
    "build_closure_graph",
]


def _prefix_dominated(lower, upper, shift: int) -> bool:
    """lower weakly majorized by upper + (shift, shift, ...), shift >= 0.

    The j-th partial-sum comparison adds j*shift to the right side; the
    shifted sequence is never materialized.  Only the first len(lower)
    comparisons can fail: past that point the left side is constant while
    the right side keeps growing.
    """
    left = right = 0
    for j, value in enumerate(lower, start=1):
        left += value
        right += upper[j - 1] if j <= len(upper) else 0
        if left > right + j * shift:
            return False
    return True


def weakly_majorizes(upper, lower) -> bool:
    """True iff every prefix sum of ``lower`` is <= the one of ``upper``.

    Both sequences must be non-increasing and non-negative; they are
    treated as zero-extended to infinite length.
    """
    return _prefix_dominated(tuple(lower), tuple(upper), 0)


def degenerates_to(L: KroneckerStructure, M: KroneckerStructure) -> bool:
    """True iff M lies in the closure of the orbit of L.

    Requires the same pencil size, and decides via h = rank L - rank M
    plus the three shifted majorizations: r(M) against r(L), l(M)
    against l(L), and W(mu, L) against W(mu, M) for each eigenvalue mu
    of either structure.  Eigenvalue labels are compared as concrete
    identities, so structures with disjoint eigenvalues are unrelated
    unless the Jordan parts can vanish into the shifts.
    """
    if size_of(L) != size_of(M):
        raise SizeMismatchError(f"cannot compare {size_of(L)} with {size_of(M)}")
    h = rank_of(L) - rank_of(M)
    if h < 0:
        return False
    if not _prefix_dominated(weyr_singular(M, "right"), weyr_singular(L, "right"), h):
        return False
    if not _prefix_dominated(weyr_singular(M, "left"), weyr_singular(L, "left"), h):
        return False
    for mu in set(eigenvalues(L)) | set(eigenvalues(M)):
        if not _prefix_dominated(weyr_jordan(L, mu), weyr_jordan(M, mu), h):
            return False
    return True


def same_orbit(L: KroneckerStructure, M: KroneckerStructure) -> bool:
    """True iff L and M denote the same orbit.

    With labels as concrete identities this is plain equality of the
    normalized block multisets, which is equivalent to h = 0 together
    with equality in all three majorizations.
    """
    return L == M


def _dominance_detail(name, lower, upper, shift):
    rows = []
    ok = True
    left = right = 0
    for j in range(1, len(lower) + 1):
        left += lower[j - 1]
        right += upper[j - 1] if j <= len(upper) else 0
        holds = left <= right + j * shift
        rows.append({"j": j, "lhs": left, "rhs": right + j * shift, "ok": holds})
        ok = ok and holds
    return {
        "condition": name,
        "lower": list(lower),
        "upper": list(upper),
        "shift": shift,
        "ok": ok,
        "partial_sums": rows,
    }


def majorization_report(L: KroneckerStructure, M: KroneckerStructure) -> dict:
    """Full partial-sum witnesses behind ``degenerates_to(L, M)``."""
    if size_of(L) != size_of(M):
        raise SizeMismatchError(f"cannot compare {size_of(L)} with {size_of(M)}")
    h = rank_of(L) - rank_of(M)
    conditions = []
    if h >= 0:
        conditions.append(
            _dominance_detail("right", weyr_singular(M, "right"), weyr_singular(L, "right"), h)
        )
        conditions.append(
            _dominance_detail("left", weyr_singular(M, "left"), weyr_singular(L, "left"), h)
        )
        for mu in sorted(set(eigenvalues(L)) | set(eigenvalues(M)), key=lambda x: x.sort_key()):
            conditions.append(
                _dominance_detail(f"eigenvalue {mu}", weyr_jordan(L, mu), weyr_jordan(M, mu), h)
            )
    verdict = h >= 0 and all(c["ok"] for c in conditions)
    return {
        "L": str(L),
        "M": str(M),
        "h": h,
        "conditions": conditions,
        "in_closure": verdict,
        "same_orbit": same_orbit(L, M),
        "codim_L": codimension(L),
        "codim_M": codimension(M),
    }


@dataclass(frozen=True)
class ClosureGraph:
    """Hasse diagram of the closure order over a fixed node set.

    ``edges`` holds covering pairs (i, j): node j lies in the closure of
    node i's orbit and no third node sits strictly between them.
    """

    nodes: tuple
    codimensions: tuple
    edges: tuple

    def closure_relation(self) -> list:
        """Reflexive-transitive closure of the edges, as a boolean matrix."""
        n = len(self.nodes)
        reach = [[i == j for j in range(n)] for i in range(n)]
        adjacency = {i: [] for i in range(n)}
        for i, j in self.edges:
            adjacency[i].append(j)
        for start in range(n):
            stack = [start]
            while stack:
                at = stack.pop()
                for nxt in adjacency[at]:
                    if not reach[start][nxt]:
                        reach[start][nxt] = True
                        stack.append(nxt)
        return reach

    def to_dot(self) -> str:
        lines = ["digraph closure_order {", "  rankdir=TB;"]
        for i, node in enumerate(self.nodes):
            label = f"{node}\\ncodim={self.codimensions[i]}"
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in self.edges:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        from .notation import structure_to_json_dict

        return {
            "nodes": [
                {
                    "structure": structure_to_json_dict(node),
                    "notation": str(node),
                    "codim": self.codimensions[i],
                }
                for i, node in enumerate(self.nodes)
            ],
            "edges": [list(edge) for edge in self.edges],
        }


def build_closure_graph(nodes) -> ClosureGraph:
    """Covering edges of the closure order on ``nodes``.

    All nodes must share one pencil size and be pairwise distinct as
    orbits.  The full relation is computed with ``degenerates_to`` and
    then transitively reduced.
    """
    nodes = tuple(nodes)
    if len(nodes) > 1:
        base = size_of(nodes[0])
        for node in nodes[1:]:
            if size_of(node) != base:
                raise SizeMismatchError(
                    f"node {node} has size {size_of(node)}, expected {base}"
                )
    for i, node in enumerate(nodes):
        for other in nodes[i + 1 :]:
            if same_orbit(node, other):
                raise DuplicateNodeError(f"duplicate node {node}")
    n = len(nodes)
    rel = [[i != j and degenerates_to(nodes[i], nodes[j]) for j in range(n)] for i in range(n)]
    codims = tuple(codimension(node) for node in nodes)
    edges = []
    for i in range(n):
        for j in range(n):
            if not rel[i][j]:
                continue
            if any(rel[i][k] and rel[k][j] for k in range(n) if k != i and k != j):
                continue
            if codims[i] >= codims[j]:
                raise AssertionError(
                    f"covering edge {nodes[i]} -> {nodes[j]} does not increase codimension"
                )
            edges.append((i, j))
    return ClosureGraph(nodes=nodes, codimensions=codims, edges=tuple(sorted(edges)))
