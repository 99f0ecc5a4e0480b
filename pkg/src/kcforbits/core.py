"""Kronecker canonical structures and their eigenstructure invariants.

A matrix pencil A + lambda*B is classified, up to multiplication by
invertible matrices on either side, by its Kronecker canonical form: a
direct sum of Jordan blocks J_k(mu) at finite or infinite eigenvalues,
right singular blocks L_k of size k x (k+1), and left singular blocks
L_k^T of size (k+1) x k.  This module represents such a block multiset
symbolically and computes the invariants everything else is built on:
pencil dimensions, rank, Weyr characteristics, and the codimension of
the orbit of any pencil carrying the structure.

Eigenvalues are opaque labels rather than complex numbers.  Every
quantity computed here depends only on which blocks share an eigenvalue,
never on its numeric value, so labels suffice; exact numeric pencils are
produced separately by :mod:`kcforbits.pencils`.
"""

from dataclasses import dataclass
from functools import cache

__all__ = [
    "EigenvalueLabel",
    "INFINITY",
    "finite",
    "KroneckerStructure",
    "size_of",
    "rank_of",
    "weyr_jordan",
    "weyr_singular",
    "codimension",
    "orbit_dimension",
    "canonicalize",
    "eigenvalues",
    "jordan_sizes",
    "segre_characteristic",
    "relabel",
    "weyr_characteristic",
    "strip_trailing_zeros",
    "is_weakly_decreasing",
    "partitions_desc",
    "partition_multisets",
    "structure_sort_key",
]


@dataclass(frozen=True, slots=True)
class EigenvalueLabel:
    """A point of the extended complex plane, identified only by name.

    ``kind`` is ``"finite"`` or ``"infinity"``; ``id`` distinguishes
    finite labels and is forced to 0 for the (unique) infinity label.
    """

    kind: str
    id: int = 0

    def __post_init__(self):
        if self.kind not in ("finite", "infinity"):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.kind == "finite" and self.id < 0:
            raise ValueError("finite label ids must be non-negative")
        if self.kind == "infinity" and self.id != 0:
            raise ValueError("there is exactly one infinity label")

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinity"

    def sort_key(self) -> tuple:
        # finite labels first, by id; infinity last
        return (1, 0) if self.is_infinite else (0, self.id)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"e{self.id}"

    def __repr__(self) -> str:
        return f"<{self}>"


INFINITY = EigenvalueLabel("infinity")


def finite(i: int) -> EigenvalueLabel:
    """The finite eigenvalue label ``e<i>``."""
    return EigenvalueLabel("finite", i)


def _jordan_key(entry):
    lbl, size = entry
    return (lbl.sort_key(), size)


@dataclass(frozen=True, slots=True)
class KroneckerStructure:
    """A multiset of canonical blocks: the symbolic KCF of a pencil.

    ``jordan`` holds (label, size) pairs with size >= 1, ``right`` and
    ``left`` hold the sizes (>= 0, size-0 blocks included) of the right
    and left singular blocks.  All three are normalized to sorted tuples
    on construction, so equality is multiset equality with eigenvalue
    labels compared as concrete identities.
    """

    jordan: tuple = ()
    right: tuple = ()
    left: tuple = ()

    def __post_init__(self):
        jordan = []
        for entry in self.jordan:
            lbl, size = entry
            if not isinstance(lbl, EigenvalueLabel):
                raise TypeError(f"jordan entry {entry!r} has no EigenvalueLabel")
            size = int(size)
            if size < 1:
                raise ValueError(f"Jordan block size must be >= 1, got {size}")
            jordan.append((lbl, size))
        right = tuple(sorted(int(k) for k in self.right))
        left = tuple(sorted(int(k) for k in self.left))
        if right and right[0] < 0:
            raise ValueError("right singular block sizes must be >= 0")
        if left and left[0] < 0:
            raise ValueError("left singular block sizes must be >= 0")
        object.__setattr__(self, "jordan", tuple(sorted(jordan, key=_jordan_key)))
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "left", left)

    def __str__(self) -> str:
        terms = [f"J({s};{lbl})" for lbl, s in self.jordan]
        terms += [f"L({k})" for k in self.right]
        terms += [f"LT({k})" for k in self.left]
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"<{self}>" if (self.jordan or self.right or self.left) else "<empty pencil>"


@cache
def size_of(K: KroneckerStructure) -> tuple:
    """Row and column count (m, n) of any pencil with structure ``K``."""
    j = sum(s for _, s in K.jordan)
    m = j + sum(K.right) + sum(k + 1 for k in K.left)
    n = j + sum(k + 1 for k in K.right) + sum(K.left)
    return (m, n)


@cache
def rank_of(K: KroneckerStructure) -> int:
    """Normal rank of a pencil with structure ``K``.

    Equals n minus the number of right singular blocks, which coincides
    with m minus the number of left singular blocks.
    """
    m, n = size_of(K)
    return n - len(K.right)


def jordan_sizes(K: KroneckerStructure, mu: EigenvalueLabel) -> tuple:
    return tuple(s for lbl, s in K.jordan if lbl == mu)


def segre_characteristic(K: KroneckerStructure, mu: EigenvalueLabel) -> tuple:
    """Jordan block sizes at ``mu``, largest first."""
    return tuple(sorted(jordan_sizes(K, mu), reverse=True))


@cache
def eigenvalues(K: KroneckerStructure) -> tuple:
    """Distinct eigenvalue labels of ``K``, in label order."""
    seen = {lbl for lbl, _ in K.jordan}
    return tuple(sorted(seen, key=EigenvalueLabel.sort_key))


def strip_trailing_zeros(seq) -> tuple:
    seq = tuple(seq)
    end = len(seq)
    while end > 0 and seq[end - 1] == 0:
        end -= 1
    return seq[:end]


def is_weakly_decreasing(seq) -> bool:
    seq = tuple(seq)
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def weyr_characteristic(sizes, include_zero: bool = False) -> tuple:
    """Weyr characteristic of a finite multiset of non-negative integers.

    Entry i counts how many sizes are >= i.  With ``include_zero`` the
    sequence starts at index 0 (so the first entry is the multiset
    cardinality); otherwise it starts at index 1.  Trailing zeros are
    stripped, so the empty multiset yields ().
    """
    sizes = tuple(sizes)
    top = max(sizes, default=0)
    start = 0 if include_zero else 1
    seq = tuple(sum(1 for s in sizes if s >= i) for i in range(start, top + 1))
    return strip_trailing_zeros(seq)


@cache
def weyr_jordan(K: KroneckerStructure, mu: EigenvalueLabel) -> tuple:
    """(W_1, W_2, ...) for the Jordan blocks of ``K`` at ``mu``.

    Empty when ``mu`` is not an eigenvalue of ``K``.
    """
    return weyr_characteristic(jordan_sizes(K, mu))


@cache
def weyr_singular(K: KroneckerStructure, side: str) -> tuple:
    """(r_0, r_1, ...) or (l_0, l_1, ...) of the singular blocks.

    The index-0 entry counts all blocks of that side, size-0 blocks
    included.
    """
    if side == "right":
        sizes = K.right
    elif side == "left":
        sizes = K.left
    else:
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    return weyr_characteristic(sizes, include_zero=True)


@cache
def codimension(K: KroneckerStructure) -> int:
    """Codimension of the orbit of any pencil with structure ``K``.

    Evaluates the Weyr-characteristic formula
        l_0*n + r_0*m - sum_i r_i*r_{i+1} - sum_i l_i*l_{i+1}
        + sum_mu sum_{i>=1} W_i(mu)^2
    where the eigenvalue sum runs over the distinct eigenvalues present.
    """
    m, n = size_of(K)
    r = weyr_singular(K, "right")
    ell = weyr_singular(K, "left")
    r0 = r[0] if r else 0
    l0 = ell[0] if ell else 0
    total = l0 * n + r0 * m
    total -= sum(r[i] * r[i + 1] for i in range(len(r) - 1))
    total -= sum(ell[i] * ell[i + 1] for i in range(len(ell) - 1))
    for mu in eigenvalues(K):
        total += sum(w * w for w in weyr_jordan(K, mu))
    return total


def orbit_dimension(K: KroneckerStructure) -> int:
    """Dimension of the orbit: 2mn minus the codimension."""
    m, n = size_of(K)
    return 2 * m * n - codimension(K)


def relabel(K: KroneckerStructure, mapping: dict) -> KroneckerStructure:
    """Rename finite eigenvalue labels through ``mapping``.

    Labels absent from the mapping stay put.  The infinity label cannot
    be renamed, and the renaming must not merge distinct eigenvalues.
    """
    new_jordan = []
    for lbl, size in K.jordan:
        target = mapping.get(lbl, lbl)
        if lbl.is_infinite and target != lbl:
            raise ValueError("the infinity label cannot be renamed")
        if target.is_infinite and not lbl.is_infinite:
            raise ValueError("finite labels cannot be renamed to infinity")
        new_jordan.append((target, size))
    out = KroneckerStructure(new_jordan, K.right, K.left)
    if len(eigenvalues(out)) != len(eigenvalues(K)):
        raise ValueError("relabeling merged distinct eigenvalues")
    return out


def _partition_order_key(p: tuple) -> tuple:
    # larger Segre data first under ascending sort
    return tuple(-s for s in p)


@cache
def canonicalize(K: KroneckerStructure) -> KroneckerStructure:
    """Normal form of ``K`` under renaming of finite eigenvalue labels.

    Finite labels become e1, e2, ... in a fixed deterministic order of
    their Segre characteristics; the infinity label is left alone.
    Idempotent, and invariant under any bijective relabeling of the
    finite labels.
    """
    finite_labels = [lbl for lbl in eigenvalues(K) if not lbl.is_infinite]
    ordered = sorted(
        finite_labels,
        key=lambda lbl: (_partition_order_key(segre_characteristic(K, lbl)), lbl.sort_key()),
    )
    mapping = {lbl: finite(i + 1) for i, lbl in enumerate(ordered)}
    return relabel(K, mapping)


def partitions_desc(total: int, max_part: int | None = None):
    """Yield the partitions of ``total`` as non-increasing tuples."""
    if total == 0:
        yield ()
        return
    top = min(total, max_part) if max_part is not None else total
    for first in range(top, 0, -1):
        for rest in partitions_desc(total - first, first):
            yield (first,) + rest


def partition_multisets(total: int, max_count: int):
    """Multisets of at most ``max_count`` nonempty partitions summing to ``total``.

    Each multiset is a tuple of partitions listed in the canonical order
    used by :func:`canonicalize`, so assigning labels e1, e2, ... in list
    order yields a canonical structure.
    """
    candidates = sorted(
        (p for k in range(1, total + 1) for p in partitions_desc(k)),
        key=_partition_order_key,
    )
    out = []

    def rec(start, remaining, slots, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if slots == 0:
            return
        for idx in range(start, len(candidates)):
            p = candidates[idx]
            if sum(p) > remaining:
                continue
            acc.append(p)
            rec(idx, remaining - sum(p), slots - 1, acc)
            acc.pop()

    rec(0, total, max_count, [])
    return out


def structure_sort_key(K: KroneckerStructure) -> tuple:
    """A total order on structures, for deterministic listings."""
    return (
        tuple((lbl.sort_key(), s) for lbl, s in K.jordan),
        K.right,
        K.left,
    )
